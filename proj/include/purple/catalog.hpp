#pragma once

// Catalogs of Ramsey(s,t)-graphs: exhaustive enumeration for tiny n and
// validated graph6 ingestion for larger n. Members always satisfy
// omega < s and alpha < t; enumerated catalogs are complete by
// construction, ingested ones carry a caller-asserted completeness flag.

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "purple/canonical.hpp"
#include "purple/clique.hpp"
#include "purple/graph.hpp"
#include "purple/graph6.hpp"

namespace purple {

struct Catalog {
    int n = 0, s = 0, t = 0;
    std::vector<Graph> graphs;
    enum class Provenance { enumerated, ingested };
    Provenance provenance = Provenance::enumerated;
    std::string path;       // ingested only
    std::string checksum;   // ingested only (fnv1a-64 of the file bytes)
    bool complete = false;
    bool validated = false;
};

inline std::string fnv1a64_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

inline constexpr int kEnumerationLimit = 10;

namespace detail {

// DFS over edge slots in lexicographic order. Setting a slot present is
// pruned when it completes a K_s among present edges; setting it absent is
// pruned when it completes a K_t among decided-absent pairs (such a t-set
// can never regain an edge, so alpha >= t is forced).
class RamseyEnumerator {
public:
    RamseyEnumerator(int n, int s, int t) : n_(n), s_(s), t_(t) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) slots_.push_back(Edge(u, v));
        present_.assign(n, Bitset(n));
        absent_.assign(n, Bitset(n));
    }

    std::vector<Graph> run() {
        out_.clear();
        dfs(0);
        return std::move(out_);
    }

private:
    void dfs(std::size_t i) {
        if (i == slots_.size()) {
            EdgeList edges;
            for (const Edge& e : slots_)
                if (present_[e.u].test(e.v)) edges.push_back(e);
            out_.push_back(Graph::from_edges(n_, edges));
            return;
        }
        const Edge e = slots_[i];
        // present branch: no K_s may appear among present edges
        if (!completes_clique(present_, e, s_)) {
            present_[e.u].set(e.v);
            present_[e.v].set(e.u);
            dfs(i + 1);
            present_[e.u].reset(e.v);
            present_[e.v].reset(e.u);
        }
        // absent branch: no K_t may appear among decided-absent pairs
        if (!completes_clique(absent_, e, t_)) {
            absent_[e.u].set(e.v);
            absent_[e.v].set(e.u);
            dfs(i + 1);
            absent_[e.u].reset(e.v);
            absent_[e.v].reset(e.u);
        }
    }

    // Would adding edge e to the given side complete a clique of size k?
    bool completes_clique(const std::vector<Bitset>& side, const Edge& e, int k) {
        if (k <= 1) return true;
        if (k == 2) return true;  // the edge itself
        Bitset common = side[e.u] & side[e.v];
        return has_clique_in(side, n_, common, k - 2);
    }

    int n_, s_, t_;
    std::vector<Edge> slots_;
    std::vector<Bitset> present_, absent_;
    std::vector<Graph> out_;
};

}  // namespace detail

// Exhaustive list of graphs on n labelled vertices with omega < s and
// alpha < t, in deterministic DFS order. With dedup set, one representative
// per isomorphism class (the first encountered).
inline Catalog enumerate_ramsey_graphs(int n, int s, int t, bool dedup,
                                       int limit = kEnumerationLimit) {
    if (s < 2 || t < 2) throw Error("enumerate: s and t must be >= 2");
    if (n < 0) throw Error("enumerate: n must be >= 0");
    if (n > limit)
        throw Error("enumerate: n=" + std::to_string(n) + " above enumeration limit " +
                    std::to_string(limit) + "; ingest a graph6 catalog instead");
    Catalog cat;
    cat.n = n;
    cat.s = s;
    cat.t = t;
    cat.provenance = Catalog::Provenance::enumerated;
    cat.complete = true;
    cat.validated = true;
    detail::RamseyEnumerator enumerator(n, s, t);
    std::vector<Graph> all = enumerator.run();
    if (!dedup) {
        cat.graphs = std::move(all);
        return cat;
    }
    std::unordered_set<std::string> seen;
    for (Graph& g : all)
        if (seen.insert(canonical_key_bytes(g)).second) cat.graphs.push_back(std::move(g));
    return cat;
}

struct CatalogLineError : Error {
    long long line;
    CatalogLineError(long long line_, const std::string& what)
        : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// Loads a newline-separated graph6 file. With validate set, every record is
// checked for the expected vertex count and for omega < s, alpha < t;
// offenders are rejected with their line number and a witness.
inline Catalog load_graph6_catalog(const std::string& path, int n, int s, int t, bool validate,
                                   bool complete_asserted = false) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open catalog file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string bytes = buf.str();

    Catalog cat;
    cat.n = n;
    cat.s = s;
    cat.t = t;
    cat.provenance = Catalog::Provenance::ingested;
    cat.path = path;
    cat.checksum = fnv1a64_hex(bytes);
    cat.complete = complete_asserted;
    cat.validated = validate;

    std::istringstream is(bytes);
    std::string line;
    long long lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);  // optional file header
        if (line.empty()) continue;
        Graph g;
        try {
            g = graph6_decode(line);
        } catch (const Error& err) {
            throw CatalogLineError(lineno, err.what());
        }
        if (validate) {
            if (g.vertex_count() != n)
                throw CatalogLineError(lineno, "vertex count " + std::to_string(g.vertex_count()) +
                                                   " does not match catalog n=" + std::to_string(n));
            CliqueResult cl = max_clique(g, s);
            if (cl.size >= s) {
                std::string w = "{";
                for (int i = 0; i < s; ++i) w += (i ? "," : "") + std::to_string(cl.vertices[i]);
                throw CatalogLineError(lineno, "clique of size " + std::to_string(s) +
                                                   ": witness " + w + "}");
            }
            CliqueResult ind = max_independent_set(g, t);
            if (ind.size >= t) {
                std::string w = "{";
                for (int i = 0; i < t; ++i) w += (i ? "," : "") + std::to_string(ind.vertices[i]);
                throw CatalogLineError(lineno, "independent set of size " + std::to_string(t) +
                                                   ": witness " + w + "}");
            }
        }
        cat.graphs.push_back(std::move(g));
    }
    return cat;
}

inline void save_graph6_file(const std::string& path, const std::vector<Graph>& graphs) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write catalog file: " + path);
    for (const Graph& g : graphs) out << graph6_encode(g) << "\n";
}

}  // namespace purple
