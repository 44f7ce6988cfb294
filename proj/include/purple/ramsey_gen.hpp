#pragma once

// Complete catalogs of triangle-free Ramsey graphs by pointed extension.
//
// Every triangle-free graph G on n vertices with alpha(G) <= t-1 decomposes
// at a minimum-degree vertex v with deg(v) = d: N(v) is an independent
// d-set, and H = G - v - N(v) is triangle-free with alpha(H) <= t-2 (an
// independent (t-1)-set in H would extend by v). So the level-(t, n) list
// is obtained by sweeping d, taking every H from level (t-1, n-1-d), and
// attaching v plus d new vertices whose H-neighbourhoods are independent
// sets, subject to:
//   - every degree of the result is >= d,
//   - for every nonempty T among the new vertices, |T| plus the largest
//     independent set of H avoiding all their neighbourhoods is <= t-1.
// Candidates are canonically deduplicated per level. The chain bottoms out
// in the brute-force enumerator.
//
// This is a generation tool for producing desk-scale catalog files; the
// catalog module itself only ingests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <unordered_set>
#include <vector>

#include "purple/canonical.hpp"
#include "purple/catalog.hpp"
#include "purple/clique.hpp"
#include "purple/generators.hpp"
#include "purple/graph.hpp"
#include "purple/search.hpp"

namespace purple {

// Known Ramsey numbers R(3,t); levels at or above them are empty.
inline int ramsey_number_3t(int t) {
    switch (t) {
        case 2: return 3;
        case 3: return 6;
        case 4: return 9;
        case 5: return 14;
        case 6: return 18;
        case 7: return 23;
        case 8: return 28;
        case 9: return 36;
        default: throw Error("ramsey_number_3t: t outside the known range 2..9");
    }
}

namespace gen_detail {

// H-side scratch, mask-based (vertex counts stay <= 31 in this chain).
struct HostGraph {
    int m = 0;
    std::vector<std::uint32_t> adj;
    std::vector<int> deg;
    // independent sets grouped by size (index = size), sizes 0..cap
    std::vector<std::vector<std::uint32_t>> indep_by_size;

    explicit HostGraph(const Graph& g, int cap) {
        m = g.vertex_count();
        adj.assign(m, 0);
        deg.assign(m, 0);
        for (int u = 0; u < m; ++u) {
            deg[u] = g.degree(u);
            for (int v = g.neighbours(u).find_first(); v != -1; v = g.neighbours(u).find_next(v))
                adj[u] |= 1u << v;
        }
        indep_by_size.assign(cap + 1, {});
        indep_by_size[0].push_back(0);
        std::vector<int> stack;
        enumerate_indep(0, 0, cap);
    }

    void enumerate_indep(int start, std::uint32_t cur, int cap) {
        int size = std::popcount(cur);
        if (size == cap) return;
        for (int v = start; v < m; ++v) {
            if (adj[v] & cur) continue;
            std::uint32_t next = cur | (1u << v);
            indep_by_size[size + 1].push_back(next);
            enumerate_indep(v + 1, next, cap);
        }
    }
};

// One pointed extension: host H, d new leaves plus the apex. Emits every
// valid completion as a Graph.
class Extender {
public:
    Extender(const Graph& host, int d, int t) : host_graph_(host), d_(d), t_(t),
          h_(host, t - 2) {}

    std::vector<Graph> run() {
        out_.clear();
        if (h_.m + d_ + 1 > 31) throw Error("pointed extension: vertex count exceeds 31");
        // candidate neighbourhoods: independent sets with |S| in [d-1, t-2]
        pool_.clear();
        for (int size = std::max(0, d_ - 1); size <= t_ - 2; ++size)
            for (std::uint32_t s : h_.indep_by_size[size]) pool_.push_back(s);
        std::sort(pool_.begin(), pool_.end());
        if (d_ == 0) {
            emit();
            return std::move(out_);
        }
        if (pool_.empty()) return std::move(out_);
        cover_count_.assign(h_.m, 0);
        union_of_.assign(std::size_t{1} << d_, 0);
        chosen_.assign(d_, 0);
        dfs(0, 0);
        return std::move(out_);
    }

private:
    // Prune when some host vertex can no longer reach degree d.
    bool host_degrees_feasible(int filled) const {
        const int remaining = d_ - filled;
        for (int w = 0; w < h_.m; ++w)
            if (h_.deg[w] + cover_count_[w] + remaining < d_) return false;
        return true;
    }

    void dfs(int slot, std::size_t pool_from) {
        if (slot == d_) {
            for (int w = 0; w < h_.m; ++w)
                if (h_.deg[w] + cover_count_[w] < d_) return;
            emit();
            return;
        }
        if (!host_degrees_feasible(slot)) return;
        for (std::size_t pi = pool_from; pi < pool_.size(); ++pi) {
            const std::uint32_t s = pool_[pi];
            if (!alpha_constraints_ok(slot, s)) continue;
            chosen_[slot] = s;
            const std::uint32_t bit = 1u << slot;
            for (std::uint32_t mask = 0; mask < bit; ++mask)
                union_of_[mask | bit] = union_of_[mask] | s;
            for (std::uint32_t b = s; b; b &= b - 1)
                ++cover_count_[std::countr_zero(b)];
            dfs(slot + 1, pi);  // non-decreasing: new-vertex order is immaterial
            for (std::uint32_t b = s; b; b &= b - 1)
                --cover_count_[std::countr_zero(b)];
        }
    }

    // For every subset T of already-chosen slots plus this one: no
    // independent (t - |T|)-set of H may avoid the union of their
    // neighbourhoods.
    bool alpha_constraints_ok(int slot, std::uint32_t s) const {
        const std::uint32_t bit = 1u << slot;
        for (std::uint32_t mask = 0; mask < bit; ++mask) {
            const int tsize = std::popcount(mask | bit);
            const int q = t_ - tsize;
            if (q > t_ - 2) continue;  // larger than alpha(H); vacuous
            if (q < 0) return false;
            if (q == 0) {
                // the new vertices alone would form an independent t-set
                return false;
            }
            const std::uint32_t avoid = union_of_[mask] | s;
            for (std::uint32_t is : h_.indep_by_size[q])
                if ((is & avoid) == 0) return false;
        }
        return true;
    }

    void emit() {
        const int n = h_.m + d_ + 1;
        EdgeList edges = host_graph_.edges();
        const int apex = n - 1;
        for (int i = 0; i < d_; ++i) {
            const int leaf = h_.m + i;
            edges.push_back(Edge(leaf, apex));
            for (std::uint32_t b = chosen_[i]; b; b &= b - 1)
                edges.push_back(Edge(std::countr_zero(b), leaf));
        }
        out_.push_back(Graph::from_edges(n, edges));
    }

    const Graph& host_graph_;
    int d_, t_;
    HostGraph h_;
    std::vector<std::uint32_t> pool_;
    std::vector<std::uint32_t> chosen_;
    std::vector<std::uint32_t> union_of_;
    std::vector<int> cover_count_;
    std::vector<Graph> out_;
};

}  // namespace gen_detail

// All triangle-free graphs on n vertices with alpha < t, one per
// isomorphism class, by pointed extension with memoized lower levels.
// Levels are memoized as graph6 records (a few dozen bytes per graph), so
// million-graph intermediate levels stay cheap to hold.
class Ramsey3Generator {
public:
    explicit Ramsey3Generator(int threads = 1) : threads_(threads) {}

    using Progress = std::function<void(int t, int n, std::size_t count, bool from_cache)>;
    void set_progress(Progress fn) { progress_ = std::move(fn); }

    std::vector<Graph> catalog(int t, int n) {
        const std::vector<std::string>& recs = level(t, n);
        std::vector<Graph> out;
        out.reserve(recs.size());
        for (const std::string& r : recs) out.push_back(graph6_decode(r));
        return out;
    }

    std::size_t level_size(int t, int n) { return level(t, n).size(); }

    // Inject a precomputed level (e.g. from a checkpoint file); members are
    // trusted to be exactly the (3,t,n) list.
    void preload(int t, int n, const std::vector<Graph>& graphs) {
        std::vector<std::string> recs;
        recs.reserve(graphs.size());
        for (const Graph& g : graphs) recs.push_back(graph6_encode(g));
        memo_[{t, n}] = std::move(recs);
        if (progress_) progress_(t, n, memo_[{t, n}].size(), true);
    }

    bool has_level(int t, int n) const { return memo_.count({t, n}) > 0; }

private:
    const std::vector<std::string>& level(int t, int n) {
        if (t < 2) throw Error("ramsey3: t must be >= 2");
        if (n < 0) throw Error("ramsey3: n must be >= 0");
        auto key = std::make_pair(t, n);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        std::vector<std::string> result = build(t, n);
        // memoize before notifying: the progress callback may re-enter
        // catalog() to persist the level
        auto& stored = memo_.emplace(key, std::move(result)).first->second;
        if (progress_) progress_(t, n, stored.size(), false);
        return stored;
    }

    std::vector<std::string> build(int t, int n) {
        if (n >= ramsey_number_3t(t)) return {};
        if (n <= 5) {
            Catalog brute = enumerate_ramsey_graphs(n, 3, t, /*dedup=*/true);
            std::vector<std::string> recs;
            for (const Graph& g : brute.graphs) recs.push_back(graph6_encode(g));
            return recs;
        }
        std::vector<std::string> out;
        std::unordered_set<std::string> seen;
        const int d_hi = t - 1;
        const int d_lo = std::max(0, n - ramsey_number_3t(t - 1));
        for (int d = d_lo; d <= std::min(d_hi, n - 1); ++d) {
            // parity: a level where every degree would be pinned to d with
            // n*d odd cannot exist, but the filter below is general enough
            const int m = n - 1 - d;
            const std::vector<std::string>& hosts = level(t - 1, m);
            // chunked sweep keeps the emitted buffers bounded
            const std::size_t chunk = 4096;
            for (std::size_t base = 0; base < hosts.size(); base += chunk) {
                const std::size_t cnt = std::min(chunk, hosts.size() - base);
                std::vector<std::vector<Graph>> emitted(cnt);
                detail::parallel_for(cnt, threads_, [&](std::size_t i) {
                    Graph host = graph6_decode(hosts[base + i]);
                    gen_detail::Extender ext(host, d, t);
                    emitted[i] = ext.run();
                });
                for (std::size_t i = 0; i < cnt; ++i)
                    for (Graph& g : emitted[i]) {
                        // final guard: the propagated constraints are checked
                        // against the exact solvers before a graph is admitted
                        if (clique_number(g, 3) >= 3) throw Error("ramsey3: internal triangle");
                        if (independence_number(g, t) >= t) continue;
                        if (seen.insert(canonical_key_bytes(g)).second)
                            out.push_back(graph6_encode(g));
                    }
            }
        }
        return out;
    }

    int threads_;
    Progress progress_;
    std::map<std::pair<int, int>, std::vector<std::string>> memo_;
};

// The unique (4,4)-graph on 17 vertices: the Paley graph of order 17
// (quadratic-residue circulant), validated against the exact solvers.
inline Graph paley17() {
    std::set<int> residues;
    for (int x = 1; x < 17; ++x) residues.insert(x * x % 17);
    Graph g = circulant_graph(17, residues);
    if (clique_number(g) != 3 || independence_number(g) != 3)
        throw Error("paley17: validation failed");
    return g;
}

}  // namespace purple
