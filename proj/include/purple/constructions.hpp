#pragma once

// Colouring constructions: equitable and canonical blow-up colourings,
// strong products, sprinkled cross colourings, edge subsampling, and the
// triangle-free process with its two-phase colouring. All randomized
// constructions are pure functions of (parameters, seed).

#include <cmath>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "purple/clique.hpp"
#include "purple/colouring.hpp"
#include "purple/generators.hpp"
#include "purple/graph.hpp"
#include "purple/rng.hpp"

namespace purple {

// Equitable complete r-partite graph on n vertices (part sizes differ by
// at most one; the first n mod r parts are larger).
inline Graph turan_graph(int n, int r) {
    if (r < 1) throw Error("turan_graph: r must be >= 1");
    if (n < 0) throw Error("turan_graph: n must be >= 0");
    return blow_up(Graph::complete(r), equitable_sizes(n, r)).graph;
}

// Andrasfai graph: circulant on 3k-1 vertices with connection set
// {k,...,2k-1}; triangle-free, k-regular, independence number k.
inline Graph andrasfai(int k) {
    if (k < 2) throw Error("andrasfai: k must be >= 2");
    std::set<int> conn;
    for (int r = k; r <= 2 * k - 1; ++r) conn.insert(r);
    return circulant_graph(3 * k - 1, conn);
}

// ---- Equitable blow-up colouring ----

struct BlowupPlan {
    int base_vertices = 0;
    int target_n = 0;
    std::vector<int> sizes;  // each floor(n/k) or ceil(n/k); larger parts first
};

inline BlowupPlan equitable_plan(int k, int n) {
    if (k < 1) throw Error("blow-up plan: base graph must have at least one vertex");
    if (n < k) throw Error("blow-up plan: n must be >= base vertex count");
    return BlowupPlan{k, n, equitable_sizes(n, k)};
}

namespace detail {

// Shared core of the blow-up colourings: R u P is the blow-up of g with the
// given sizes; for every base edge ij the "diagonal" pairs u_l^i u_l^j are
// red; all other blow-up edges are purple; everything else is blue.
inline PurpleColouring layered_blowup_colouring(const Graph& g, const std::vector<int>& sizes) {
    Blowup bu = blow_up(g, sizes);
    EdgeList red_edges;
    for (const Edge& e : g.edges()) {
        int layers = std::min(sizes[e.u], sizes[e.v]);
        for (int l = 0; l < layers; ++l)
            red_edges.push_back(Edge(bu.part_offset[e.u] + l, bu.part_offset[e.v] + l));
    }
    Graph red = Graph::from_edges(bu.graph.vertex_count(), red_edges);
    Graph purple = bu.graph.minus_edges(red.edges());
    return make_colouring(red, bu.graph.complement(), purple);
}

}  // namespace detail

// The n-blow-up colouring of g.
inline PurpleColouring blow_up_colouring(const Graph& g, int n) {
    const int k = g.vertex_count();
    if (k < 1) throw Error("blow_up_colouring: base graph must have at least one vertex");
    if (n < k) throw Error("blow_up_colouring: n must be >= base vertex count");
    return detail::layered_blowup_colouring(g, equitable_sizes(n, k));
}

// ---- Canonical blow-up of the Andrasfai graph ----

struct CanonicalBlowupParams {
    int n = 0, k = 0, t = 0;
    long long heavy_size = 0;  // parts at vertices {1, k, 2k}
    long long light_size = 0;  // remaining 3k-4 parts
};

// Valid range: kn/(3k-1) <= t < (k-1)n/(3k-4). Part sizes follow from the
// identity 3*heavy + (3k-4)*light = n.
inline CanonicalBlowupParams canonical_blowup_params(int n, int k, int t) {
    if (k < 2) throw Error("canonical blow-up: k must be >= 2");
    if (n < 1) throw Error("canonical blow-up: n must be >= 1");
    const long long kn = static_cast<long long>(k) * n;
    if (kn > static_cast<long long>(t) * (3 * k - 1))
        throw Error("canonical blow-up: violated kn/(3k-1) <= t  (" + std::to_string(kn) + "/" +
                    std::to_string(3 * k - 1) + " > " + std::to_string(t) + ")");
    if (static_cast<long long>(t) * (3 * k - 4) >= static_cast<long long>(k - 1) * n)
        throw Error("canonical blow-up: violated t < (k-1)n/(3k-4)  (" + std::to_string(t) +
                    " >= " + std::to_string(static_cast<long long>(k - 1) * n) + "/" +
                    std::to_string(3 * k - 4) + ")");
    CanonicalBlowupParams p;
    p.n = n;
    p.k = k;
    p.t = t;
    p.heavy_size = static_cast<long long>(k - 1) * n - static_cast<long long>(3 * k - 4) * t;
    p.light_size = 3LL * t - n;
    return p;
}

inline long long canonical_blowup_edge_formula(int n, int k, int t) {
    const long long N = n, K = k, T = t;
    return K * (K - 1) * N * N / 2 - K * (3 * K - 4) * T * N + (3 * K - 4) * (3 * K - 1) * T * T / 2;
}

inline std::vector<int> canonical_blowup_sizes(const CanonicalBlowupParams& p) {
    std::vector<int> sizes(3 * p.k - 1, static_cast<int>(p.light_size));
    sizes[1] = static_cast<int>(p.heavy_size);
    sizes[p.k] = static_cast<int>(p.heavy_size);
    sizes[2 * p.k] = static_cast<int>(p.heavy_size);
    return sizes;
}

inline Blowup canonical_blowup(int n, int k, int t) {
    CanonicalBlowupParams p = canonical_blowup_params(n, k, t);
    return blow_up(andrasfai(k), canonical_blowup_sizes(p));
}

// Blow-up colouring over the canonical (unbalanced) blow-up: red edges form
// light_size vertex-disjoint copies of the Andrasfai graph or the Andrasfai
// graph minus its three heavy vertices.
inline PurpleColouring canonical_blowup_colouring(int n, int k, int t) {
    CanonicalBlowupParams p = canonical_blowup_params(n, k, t);
    if (p.light_size < 1)
        throw Error("canonical blow-up colouring: light parts are empty at these parameters");
    return detail::layered_blowup_colouring(andrasfai(k), canonical_blowup_sizes(p));
}

// ---- Strong product colouring ----

// ell vertex-disjoint copies of c; between copies, (u, copy i)(w, copy j) is
// red iff u = w or uw is red in c, purple otherwise. No blue between copies,
// so the red graph of the result is the strong product red x K_ell.
inline PurpleColouring strong_product_colouring(const PurpleColouring& c, int ell) {
    if (ell < 1) throw Error("strong_product_colouring: ell must be >= 1");
    const int n0 = c.n;
    const int n = n0 * ell;
    EdgeList red, blue, purple;
    auto at = [n0](int copy, int v) { return copy * n0 + v; };
    for (int i = 0; i < ell; ++i) {
        for (const Edge& e : c.red.edges()) red.push_back(Edge(at(i, e.u), at(i, e.v)));
        for (const Edge& e : c.blue.edges()) blue.push_back(Edge(at(i, e.u), at(i, e.v)));
        for (const Edge& e : c.purple.edges()) purple.push_back(Edge(at(i, e.u), at(i, e.v)));
        for (int j = i + 1; j < ell; ++j)
            for (int u = 0; u < n0; ++u)
                for (int w = 0; w < n0; ++w) {
                    Edge cross(at(i, u), at(j, w));
                    if (u == w || c.red.has_edge(u, w))
                        red.push_back(cross);
                    else
                        purple.push_back(cross);
                }
    }
    return make_colouring(Graph::from_edges(n, red), Graph::from_edges(n, blue),
                          Graph::from_edges(n, purple));
}

// ---- Sprinkled even-clique colouring ----

struct SprinkleReport {
    PurpleColouring colouring;
    int parts = 0;
    std::vector<int> part_offset;
    std::vector<int> part_size;
    // red edge count between each unordered part pair (i < j), row-major
    // over pairs; densities follow as count / (size_i * size_j).
    std::vector<long long> cross_red_counts;
    double p = 0;
    std::uint64_t seed = 0;
};

// One copy of core4 (a (4,.)-free colouring) and ell-2 copies of core3
// (a (3,.)-free colouring); cross edges red with probability p, purple
// otherwise, drawn in global lexicographic pair order.
inline SprinkleReport sprinkled_even_colouring(const PurpleColouring& core4,
                                               const PurpleColouring& core3, int ell, double p,
                                               std::uint64_t seed) {
    if (ell < 2) throw Error("sprinkle: ell must be >= 2");
    if (p < 0.0 || p > 1.0) throw Error("sprinkle: p must lie in [0,1]");
    CliqueResult w4 = max_clique(core4.red.union_with(core4.purple), 4);
    if (w4.size >= 4)
        throw Error("sprinkle: core4 is not (4,.)-free; witness clique of size 4 found");
    if (ell > 2) {
        CliqueResult w3 = max_clique(core3.red.union_with(core3.purple), 3);
        if (w3.size >= 3)
            throw Error("sprinkle: core3 is not (3,.)-free; witness triangle found");
    }
    SprinkleReport rep;
    rep.parts = 1 + (ell - 2);
    rep.p = p;
    rep.seed = seed;
    rep.part_offset.push_back(0);
    rep.part_size.push_back(core4.n);
    for (int i = 1; i < rep.parts; ++i) {
        rep.part_offset.push_back(rep.part_offset.back() + rep.part_size.back());
        rep.part_size.push_back(core3.n);
    }
    const int n = rep.part_offset.back() + rep.part_size.back();
    std::vector<int> part_of(n);
    for (int i = 0; i < rep.parts; ++i)
        for (int l = 0; l < rep.part_size[i]; ++l) part_of[rep.part_offset[i] + l] = i;

    EdgeList red, blue, purple;
    auto embed = [&](const PurpleColouring& core, int offset) {
        for (const Edge& e : core.red.edges()) red.push_back(Edge(offset + e.u, offset + e.v));
        for (const Edge& e : core.blue.edges()) blue.push_back(Edge(offset + e.u, offset + e.v));
        for (const Edge& e : core.purple.edges())
            purple.push_back(Edge(offset + e.u, offset + e.v));
    };
    embed(core4, 0);
    for (int i = 1; i < rep.parts; ++i) embed(core3, rep.part_offset[i]);

    rep.cross_red_counts.assign(static_cast<std::size_t>(rep.parts) * rep.parts, 0);
    Rng rng(seed);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (part_of[u] == part_of[v]) continue;
            if (rng.next_bernoulli(p)) {
                red.push_back(Edge(u, v));
                ++rep.cross_red_counts[static_cast<std::size_t>(part_of[u]) * rep.parts +
                                       part_of[v]];
            } else {
                purple.push_back(Edge(u, v));
            }
        }
    rep.colouring = make_colouring(Graph::from_edges(n, red), Graph::from_edges(n, blue),
                                   Graph::from_edges(n, purple));
    return rep;
}

// Is there a red edge between vertex sets X and Y? Post-hoc check for the
// sprinkle construction's cross-edge property.
inline bool has_red_between(const PurpleColouring& c, const std::vector<int>& xs,
                            const std::vector<int>& ys) {
    Bitset ymask(c.n);
    for (int y : ys) ymask.set(y);
    for (int x : xs)
        if (c.red.neighbours(x).intersects(ymask)) return true;
    return false;
}

// ---- Subsampled purple colouring ----

// Default p just under e^-4.
inline constexpr double kDefaultSubsampleP = 0.018;

// P = edges of g kept with probability p, R = the rest of g, B = complement
// of g. R u P is g exactly.
inline PurpleColouring subsample_colouring(const Graph& g, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw Error("subsample: p must lie in [0,1]");
    Rng rng(seed);
    EdgeList sampled, rest;
    for (const Edge& e : g.edges())
        (rng.next_bernoulli(p) ? sampled : rest).push_back(e);
    return make_colouring(Graph::from_edges(g.vertex_count(), rest), g.complement(),
                          Graph::from_edges(g.vertex_count(), sampled));
}

// ---- Triangle-free process ----

struct TfpRun {
    std::vector<Edge> order;  // edges in insertion order
    Graph final_graph;
    bool maximal = false;  // true iff the process stopped with no addable edge
};

// Starting from the empty graph, repeatedly adds an edge chosen uniformly at
// random among all pairs that do not close a triangle, until none remain or
// max_steps edges were added.
inline TfpRun triangle_free_process(int n, std::uint64_t seed,
                                    std::optional<long long> max_steps = std::nullopt) {
    if (n < 1) throw Error("triangle_free_process: n must be >= 1");
    std::vector<Bitset> adj(n, Bitset(n));
    std::vector<long long> pos(static_cast<std::size_t>(n) * n, -1);
    std::vector<std::pair<int, int>> open;
    open.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    auto id = [n](int u, int v) { return static_cast<std::size_t>(u) * n + v; };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            pos[id(u, v)] = static_cast<long long>(open.size());
            open.emplace_back(u, v);
        }
    auto remove_pair = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        long long at = pos[id(u, v)];
        if (at < 0) return;
        pos[id(u, v)] = -1;
        if (at != static_cast<long long>(open.size()) - 1) {
            open[at] = open.back();
            pos[id(open[at].first, open[at].second)] = at;
        }
        open.pop_back();
    };

    Rng rng(seed);
    TfpRun run;
    while (!open.empty() &&
           (!max_steps || static_cast<long long>(run.order.size()) < *max_steps)) {
        auto [u, v] = open[rng.next_below(open.size())];
        run.order.push_back(Edge(u, v));
        remove_pair(u, v);
        // Pairs through a now-common neighbour close a triangle.
        for (int w = adj[u].find_first(); w != -1; w = adj[u].find_next(w))
            if (w != v) remove_pair(std::min(w, v), std::max(w, v));
        for (int w = adj[v].find_first(); w != -1; w = adj[v].find_next(w))
            if (w != u) remove_pair(std::min(w, u), std::max(w, u));
        adj[u].set(v);
        adj[v].set(u);
    }
    run.final_graph = Graph::from_edges(n, run.order);
    run.maximal = open.empty();
    return run;
}

// ---- Two-phase triangle-free-process colouring ----

// m*(eps) = floor((1/(2 sqrt 2) - eps) n^{3/2} sqrt(log2 n)).
inline long long m_star(int n, double eps) {
    const double inv2s2 = 1.0 / (2.0 * std::sqrt(2.0));
    if (eps <= 0.0 || eps >= inv2s2)
        throw Error("m_star: eps must lie in (0, 1/(2 sqrt 2))");
    if (n < 1) throw Error("m_star: n must be >= 1");
    const double value =
        (inv2s2 - eps) * std::pow(static_cast<double>(n), 1.5) * std::sqrt(std::log2(n));
    return static_cast<long long>(std::floor(value));
}

struct TfpParams {
    int n = 0;
    double eps = 0;
    long long steps = 0;  // m*(eps)
    std::uint64_t seed = 0;
};

inline TfpParams tfp_params(int n, double eps, std::uint64_t seed) {
    TfpParams p;
    p.n = n;
    p.eps = eps;
    p.steps = m_star(n, eps);
    p.seed = seed;
    return p;
}

struct TwoPhaseResult {
    PurpleColouring colouring;
    long long m1 = 0, m2 = 0;
    double eps1 = 0, eps2 = 0;
};

// Runs the process for m2 = m*(eps2) steps with eps1 = eps^2/100; the first
// m1 = m*(eps1) edges are red, the next m2 - m1 purple, the rest of K_n
// blue. R u P is a process prefix, hence triangle-free by construction.
inline TwoPhaseResult tfp_two_phase_colouring(int n, double eps, double eps2,
                                              std::uint64_t seed) {
    const double inv2s2 = 1.0 / (2.0 * std::sqrt(2.0));
    if (eps <= 0.0) throw Error("two-phase: eps must be positive");
    const double eps1 = eps * eps / 100.0;
    if (!(eps2 > 0.0 && eps2 < eps1 && eps1 < inv2s2))
        throw Error("two-phase: need 0 < eps2 < eps^2/100 < 1/(2 sqrt 2)");
    TwoPhaseResult res;
    res.eps1 = eps1;
    res.eps2 = eps2;
    res.m1 = m_star(n, eps1);
    res.m2 = m_star(n, eps2);
    if (res.m1 < 1 || res.m2 <= res.m1)
        throw Error("two-phase: n too small, need m2 > m1 >= 1 (m1=" + std::to_string(res.m1) +
                    ", m2=" + std::to_string(res.m2) + ")");
    TfpRun run = triangle_free_process(n, seed, res.m2);
    if (static_cast<long long>(run.order.size()) < res.m2)
        throw Error("two-phase: process exhausted after " + std::to_string(run.order.size()) +
                    " of " + std::to_string(res.m2) + " requested steps");
    EdgeList red_edges(run.order.begin(), run.order.begin() + res.m1);
    EdgeList purple_edges(run.order.begin() + res.m1, run.order.end());
    res.colouring = colouring_from_red_purple(Graph::from_edges(n, red_edges),
                                              Graph::from_edges(n, purple_edges));
    return res;
}

// ---- Sublinear-range parameters ----

struct SublinearParams {
    int n = 0;
    double gamma = 0, eps = 0;
    double zeta = 0;     // root > 2 of gamma = sqrt2 (1+eps)/(1-eps) (zeta + 1/zeta)
    long long k = 0;     // smallest integer with n <= zeta^2 k
};

inline SublinearParams sublinear_params(int n, double gamma, double eps) {
    if (n < 1) throw Error("sublinear_params: n must be >= 1");
    if (eps <= 0.0 || eps >= 1.0) throw Error("sublinear_params: eps must lie in (0,1)");
    // zeta + 1/zeta = a; zeta > 2 requires a > 5/2.
    const double a = gamma * (1.0 - eps) / (std::sqrt(2.0) * (1.0 + eps));
    if (a <= 2.5)
        throw Error("sublinear_params: gamma too small for the quadratic to have a root > 2");
    const double zeta = (a + std::sqrt(a * a - 4.0)) / 2.0;
    SublinearParams p;
    p.n = n;
    p.gamma = gamma;
    p.eps = eps;
    p.zeta = zeta;
    const double z2 = zeta * zeta;
    long long k = static_cast<long long>(std::ceil(static_cast<double>(n) / z2));
    while (z2 * static_cast<double>(k) < static_cast<double>(n)) ++k;
    while (k > 1 && z2 * static_cast<double>(k - 1) >= static_cast<double>(n)) --k;
    p.k = k;
    return p;
}

}  // namespace purple
