#pragma once

// Red/blue/purple colourings of K_n: a partition of E(K_n) into three
// graphs, with the (s,t)-freeness verifier, exact statistics, and the
// line-oriented file codec (format v1).

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "purple/clique.hpp"
#include "purple/graph.hpp"

namespace purple {

struct PurpleColouring {
    int n = 0;
    Graph red, blue, purple;
};

// Partition invariant: pairwise edge-disjoint, union = E(K_n), same n.
inline void validate_partition(const PurpleColouring& c) {
    if (c.red.vertex_count() != c.n || c.blue.vertex_count() != c.n ||
        c.purple.vertex_count() != c.n)
        throw Error("colouring: vertex count mismatch");
    if (c.red.edge_count() + c.blue.edge_count() + c.purple.edge_count() !=
        static_cast<long long>(c.n) * (c.n - 1) / 2)
        throw Error("colouring: edge counts do not partition E(K_n)");
    for (int v = 0; v < c.n; ++v) {
        Bitset r = c.red.neighbours(v);
        if (r.intersects(c.blue.neighbours(v)) || r.intersects(c.purple.neighbours(v)) ||
            c.blue.neighbours(v).intersects(c.purple.neighbours(v)))
            throw Error("colouring: colour classes overlap at vertex " + std::to_string(v));
        Bitset all = r | c.blue.neighbours(v) | c.purple.neighbours(v);
        if (all.count() != c.n - 1)
            throw Error("colouring: uncoloured pair at vertex " + std::to_string(v));
    }
}

inline PurpleColouring make_colouring(Graph red, Graph blue, Graph purple) {
    PurpleColouring c{red.vertex_count(), std::move(red), std::move(blue), std::move(purple)};
    validate_partition(c);
    return c;
}

// Blue is the rest of K_n.
inline PurpleColouring colouring_from_red_purple(const Graph& red, const Graph& purple) {
    Graph rp = red.union_with(purple);
    if (rp.edge_count() != red.edge_count() + purple.edge_count())
        throw Error("colouring: red and purple overlap");
    return make_colouring(red, rp.complement(), purple);
}

struct StFreeVerdict {
    bool free = true;
    char violated_side = ' ';     // 'R' for red/purple K_s, 'B' for blue/purple K_t
    std::vector<int> witness;     // offending clique when !free
};

// (s,t)-free iff omega(R u P) < s and omega(B u P) < t. By the partition
// invariant B u P is exactly the complement of R, so the second test is an
// independence check on the red graph; the witness is valid for both views.
inline StFreeVerdict is_st_free(const PurpleColouring& c, int s, int t) {
    if (s < 2 || t < 2) throw Error("is_st_free: s and t must be >= 2");
    StFreeVerdict verdict;
    CliqueResult rp = max_clique(c.red.union_with(c.purple), s);
    if (rp.size >= s) {
        verdict.free = false;
        verdict.violated_side = 'R';
        verdict.witness = rp.vertices;
        verdict.witness.resize(s);
        return verdict;
    }
    CliqueResult bp = max_independent_set(c.red, t);
    if (bp.size >= t) {
        verdict.free = false;
        verdict.violated_side = 'B';
        verdict.witness = bp.vertices;
        verdict.witness.resize(t);
        return verdict;
    }
    return verdict;
}

struct ColouringStats {
    long long red_count = 0, blue_count = 0, purple_count = 0;
    int omega_rp = 0;   // omega(R u P)
    int omega_bp = 0;   // omega(B u P) = alpha(R) by the partition invariant
    int alpha_r = 0;
    std::optional<double> trivial_bound;  // n(t-1)/2 when a target t is given
};

inline ColouringStats stats(const PurpleColouring& c, std::optional<int> t = std::nullopt) {
    validate_partition(c);
    ColouringStats st;
    st.red_count = c.red.edge_count();
    st.blue_count = c.blue.edge_count();
    st.purple_count = c.purple.edge_count();
    st.omega_rp = clique_number(c.red.union_with(c.purple));
    st.alpha_r = independence_number(c.red);
    // B u P = complement(R) is enforced above, so its clique number is
    // alpha(R); computing it once keeps stats exact at large n.
    st.omega_bp = st.alpha_r;
    if (t) st.trivial_bound = static_cast<double>(c.n) * (*t - 1) / 2.0;
    return st;
}

enum class RecolourTo { red, blue };

// Moves every purple edge to red or blue per the assignment; the result has
// empty purple. The assignment must cover the purple edge set exactly.
inline PurpleColouring recolour_purple(const PurpleColouring& c,
                                       const std::map<Edge, RecolourTo>& assignment) {
    for (const auto& [e, to] : assignment)
        if (!c.purple.has_edge(e.u, e.v))
            throw Error("recolour_purple: assignment covers non-purple edge (" +
                        std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    if (static_cast<long long>(assignment.size()) != c.purple.edge_count())
        throw Error("recolour_purple: assignment does not cover all purple edges");
    EdgeList to_red, to_blue;
    for (const auto& [e, to] : assignment)
        (to == RecolourTo::red ? to_red : to_blue).push_back(e);
    return make_colouring(c.red.plus_edges(to_red), c.blue.plus_edges(to_blue),
                          Graph::empty(c.n));
}

// ---- Colouring file format v1 ----
// Header "purple-colouring v1 n=<n>", then exactly n(n-1)/2 lines "u v C"
// with 0 <= u < v < n and C in {R,B,P}, sorted lexicographically by (u,v).

inline std::string encode_colouring(const PurpleColouring& c) {
    std::ostringstream os;
    os << "purple-colouring v1 n=" << c.n << "\n";
    for (int u = 0; u < c.n; ++u)
        for (int v = u + 1; v < c.n; ++v) {
            char col = c.red.has_edge(u, v) ? 'R' : c.blue.has_edge(u, v) ? 'B' : 'P';
            os << u << " " << v << " " << col << "\n";
        }
    return os.str();
}

inline PurpleColouring decode_colouring(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string magic, version, ntoken;
    if (!(is >> magic >> version >> ntoken) || magic != "purple-colouring" || version != "v1" ||
        ntoken.rfind("n=", 0) != 0)
        throw Error("colouring file: bad header");
    int n = 0;
    try {
        n = std::stoi(ntoken.substr(2));
    } catch (...) {
        throw Error("colouring file: bad vertex count");
    }
    if (n < 0) throw Error("colouring file: bad vertex count");
    EdgeList red, blue, purple;
    std::vector<Bitset> seen(n, Bitset(n));
    long long u, v;
    std::string col;
    long long lines = 0;
    while (is >> u >> v >> col) {
        ++lines;
        if (u < 0 || v <= u || v >= n) throw Error("colouring file: edge out of range");
        if (col.size() != 1 || (col[0] != 'R' && col[0] != 'B' && col[0] != 'P'))
            throw Error("colouring file: colour letter outside {R,B,P}");
        Edge e(static_cast<int>(u), static_cast<int>(v));
        if (seen[e.u].test(e.v)) throw Error("colouring file: duplicate edge " +
                                             std::to_string(e.u) + " " + std::to_string(e.v));
        seen[e.u].set(e.v);
        (col[0] == 'R' ? red : col[0] == 'B' ? blue : purple).push_back(e);
    }
    if (!is.eof() && is.fail() && lines >= 0) {
        is.clear();
        std::string rest;
        if (is >> rest) throw Error("colouring file: malformed line");
    }
    if (lines != static_cast<long long>(n) * (n - 1) / 2)
        throw Error("colouring file: expected " + std::to_string(static_cast<long long>(n) * (n - 1) / 2) +
                    " edge lines, found " + std::to_string(lines));
    return make_colouring(Graph::from_edges(n, red), Graph::from_edges(n, blue),
                          Graph::from_edges(n, purple));
}

}  // namespace purple
