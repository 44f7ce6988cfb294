#pragma once

// Exact computation of the maximum purple matching (g_M) and the maximum
// purple edge set (g) over catalogs of Ramsey(s,t)-graphs, with
// machine-checkable certificates.
//
// The per-graph matching search runs in two stages:
// collect the individually swapable edges, then grow matchings inside that
// set, k upward, with first-success exit per k (sound: success is
// downward-closed in k). The catalog sweep applies both edge-count prunings
// and processes members in descending edge-count order. K_t checks are
// incremental: after moving an edge {u,v} to the blue side only cliques
// through it can be new, so the test is a (t-2)-clique search in the common
// blue neighbourhood.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "purple/catalog.hpp"
#include "purple/clique.hpp"
#include "purple/graph.hpp"

namespace purple {

enum class PurpleKind { matching, general };

struct SearchOutcome {
    int value = 0;
    Graph witness_graph;        // the R u P member of the catalog
    EdgeList witness_purple;    // |witness_purple| = value
    PurpleKind kind = PurpleKind::matching;
    bool exhausted = true;      // false iff a deadline cut the search short
    int witness_index = -1;     // catalog index of the witness, -1 for single-graph calls
};

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

inline bool deadline_expired(const Deadline& d) {
    return d && std::chrono::steady_clock::now() >= *d;
}

// Re-verification from scratch; throws when the certificate is unsound.
inline void verify_outcome(const SearchOutcome& o, int s, int t) {
    if (clique_number(o.witness_graph, s) >= s)
        throw Error("certificate: witness graph has a clique of size s");
    if (independence_number(o.witness_graph, t) >= t)
        throw Error("certificate: witness graph has an independent set of size t");
    if (static_cast<int>(o.witness_purple.size()) != o.value)
        throw Error("certificate: purple size does not match value");
    EdgeList sorted = o.witness_purple;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error("certificate: duplicate purple edge");
    for (const Edge& e : sorted)
        if (!o.witness_graph.has_edge(e.u, e.v))
            throw Error("certificate: purple edge not in witness graph");
    if (o.kind == PurpleKind::matching) {
        std::vector<bool> used(o.witness_graph.vertex_count(), false);
        for (const Edge& e : sorted) {
            if (used[e.u] || used[e.v]) throw Error("certificate: purple edges share a vertex");
            used[e.u] = used[e.v] = true;
        }
    }
    if (independence_number(o.witness_graph.minus_edges(sorted), t) >= t)
        throw Error("certificate: red remainder has an independent set of size t");
}

// Edges e of g whose individual move to the blue side keeps it K_t-free:
// omega(complement(g) + e) < t, equivalently alpha(g - e) < t. Any valid
// removable set lies inside this set, by subset monotonicity.
inline EdgeList swapable_edges(const Graph& g, int t) {
    const int n = g.vertex_count();
    std::vector<Bitset> blue;
    blue.reserve(n);
    const Graph comp = g.complement();
    for (int v = 0; v < n; ++v) blue.push_back(comp.neighbours(v));
    EdgeList out;
    if (clique_number(comp, t) >= t) return out;  // blue side already violates K_t
    for (const Edge& e : g.edges()) {
        Bitset common = blue[e.u] & blue[e.v];
        if (!has_clique_in(blue, n, common, t - 2)) out.push_back(e);
    }
    return out;
}

namespace detail {

// Mutable blue-side state for incremental K_t checks.
class BlueSide {
public:
    BlueSide(const Graph& g, int t) : n_(g.vertex_count()), t_(t) {
        const Graph comp = g.complement();
        adj_.reserve(n_);
        for (int v = 0; v < n_; ++v) adj_.push_back(comp.neighbours(v));
    }

    // Would adding {u,v} to the blue side create a K_t?
    bool would_create_kt(int u, int v) const {
        Bitset common = adj_[u] & adj_[v];
        return has_clique_in(adj_, n_, common, t_ - 2);
    }

    void add(int u, int v) {
        adj_[u].set(v);
        adj_[v].set(u);
    }
    void remove(int u, int v) {
        adj_[u].reset(v);
        adj_[v].reset(u);
    }

private:
    int n_, t_;
    std::vector<Bitset> adj_;
};

// First k-matching within `pool` whose move to blue keeps it K_t-free; DFS
// over pool edges in fixed order with first-success exit. Returns true and
// fills `found` on success. `expired` is set when the deadline cuts in.
class MatchingSearch {
public:
    MatchingSearch(const Graph& g, int t, const EdgeList& pool, Deadline deadline)
        : blue_(g, t), pool_(pool), used_(g.vertex_count(), false), deadline_(deadline) {}

    bool find(int k, EdgeList& found) {
        chosen_.clear();
        if (dfs(0, k)) {
            found = chosen_;
            return true;
        }
        return false;
    }

    bool expired() const { return expired_; }

private:
    bool dfs(std::size_t from, int k) {
        if (static_cast<int>(chosen_.size()) == k) return true;
        if (pool_.size() - from < k - chosen_.size()) return false;
        if (++ticks_ % 1024 == 0 && deadline_expired(deadline_)) {
            expired_ = true;
            return false;
        }
        for (std::size_t i = from; i < pool_.size(); ++i) {
            const Edge& e = pool_[i];
            if (used_[e.u] || used_[e.v]) continue;
            if (blue_.would_create_kt(e.u, e.v)) continue;
            used_[e.u] = used_[e.v] = true;
            blue_.add(e.u, e.v);
            chosen_.push_back(e);
            if (dfs(i + 1, k)) return true;
            chosen_.pop_back();
            blue_.remove(e.u, e.v);
            used_[e.u] = used_[e.v] = false;
            if (expired_) return false;
        }
        return false;
    }

    BlueSide blue_;
    const EdgeList& pool_;
    std::vector<bool> used_;
    std::vector<Edge> chosen_;
    Deadline deadline_;
    bool expired_ = false;
    std::uint64_t ticks_ = 0;
};

struct MatchingValue {
    int value = 0;
    EdgeList matching;
    bool exhausted = true;
};

// Largest k with a valid k-matching, searching k upward from start_k.
// Returns start_k - 1 with an empty witness when even start_k fails (the
// caller then knows value < start_k).
inline MatchingValue matching_value(const Graph& g, int t, int start_k, Deadline deadline) {
    MatchingValue out;
    EdgeList pool = swapable_edges(g, t);
    out.value = start_k - 1;
    if (pool.empty()) {
        out.value = std::max(0, out.value);
        return out;
    }
    const int max_k = g.vertex_count() / 2;
    for (int k = std::max(1, start_k); k <= max_k; ++k) {
        MatchingSearch search(g, t, pool, deadline);
        EdgeList found;
        if (!search.find(k, found)) {
            out.exhausted = !search.expired();
            return out;
        }
        out.value = k;
        out.matching = found;
    }
    return out;
}

inline void require_ramsey_graph(const Graph& g, int s, int t) {
    CliqueResult cl = max_clique(g, s);
    if (cl.size >= s) {
        std::string w;
        for (int i = 0; i < s; ++i) w += (i ? "," : "") + std::to_string(cl.vertices[i]);
        throw Error("input graph has a clique of size " + std::to_string(s) + " {" + w + "}");
    }
    CliqueResult ind = max_independent_set(g, t);
    if (ind.size >= t) {
        std::string w;
        for (int i = 0; i < t; ++i) w += (i ? "," : "") + std::to_string(ind.vertices[i]);
        throw Error("input graph has an independent set of size " + std::to_string(t) + " {" +
                    w + "}");
    }
}

}  // namespace detail

// Largest k such that alpha(g - M) < t for some k-matching M in E(g).
// g must itself be a Ramsey(s,t)-graph.
inline SearchOutcome max_purple_matching(const Graph& g, int s, int t,
                                         Deadline deadline = std::nullopt) {
    detail::require_ramsey_graph(g, s, t);
    detail::MatchingValue mv = detail::matching_value(g, t, 1, deadline);
    SearchOutcome o;
    o.value = mv.value;
    o.witness_graph = g;
    o.witness_purple = mv.matching;
    o.kind = PurpleKind::matching;
    o.exhausted = mv.exhausted;
    verify_outcome(o, s, t);
    return o;
}

namespace detail {

// Branch and bound for the largest purple edge set: DFS over candidate
// edges (include first), pruning with chosen + remaining <= best and an
// optional structural ceiling. With a fixed target it is a pure decision.
class PurpleSetSearch {
public:
    PurpleSetSearch(const Graph& g, int t, EdgeList pool, Deadline deadline)
        : blue_(g, t), pool_(std::move(pool)), deadline_(deadline) {}

    // Finds a purple set of size exactly `target`, if one exists.
    bool find_exact(int target, EdgeList& found) {
        chosen_.clear();
        best_ = target - 1;
        target_ = target;
        best_set_.clear();
        dfs(0);
        if (static_cast<int>(best_set_.size()) == target) {
            found = best_set_;
            return true;
        }
        return false;
    }

    // Full maximization with an initial lower bound (witness only tracked
    // for improvements) and an early-exit ceiling.
    int maximize(int floor, int ceiling, EdgeList& found) {
        chosen_.clear();
        best_ = floor;
        target_ = ceiling;
        best_set_.clear();
        dfs(0);
        found = best_set_;
        return best_;
    }

    bool expired() const { return expired_; }

private:
    void dfs(std::size_t from) {
        if (static_cast<int>(chosen_.size()) > best_) {
            best_ = static_cast<int>(chosen_.size());
            best_set_ = chosen_;
            if (best_ >= target_) {
                done_ = true;
                return;
            }
        }
        if (static_cast<int>(chosen_.size() + (pool_.size() - from)) <= best_) return;
        if (++ticks_ % 1024 == 0 && deadline_expired(deadline_)) {
            expired_ = true;
            done_ = true;
            return;
        }
        for (std::size_t i = from; i < pool_.size(); ++i) {
            if (static_cast<int>(chosen_.size() + (pool_.size() - i)) <= best_) return;
            const Edge& e = pool_[i];
            if (blue_.would_create_kt(e.u, e.v)) continue;
            blue_.add(e.u, e.v);
            chosen_.push_back(e);
            dfs(i + 1);
            chosen_.pop_back();
            blue_.remove(e.u, e.v);
            if (done_) return;
        }
    }

    BlueSide blue_;
    EdgeList pool_;
    std::vector<Edge> chosen_, best_set_;
    int best_ = 0, target_ = 0;
    bool done_ = false, expired_ = false;
    Deadline deadline_;
    std::uint64_t ticks_ = 0;
};

// Candidate pool for the general search: swapable edges in descending
// swapability order. The proxy score is the size of the common blue
// neighbourhood of the endpoints (fewer shared blue neighbours = farther
// from completing a K_t); ties break by (u,v).
inline EdgeList general_pool(const Graph& g, int t) {
    EdgeList pool = swapable_edges(g, t);
    const Graph comp = g.complement();
    std::stable_sort(pool.begin(), pool.end(), [&](const Edge& a, const Edge& b) {
        int sa = (comp.neighbours(a.u) & comp.neighbours(a.v)).count();
        int sb = (comp.neighbours(b.u) & comp.neighbours(b.v)).count();
        if (sa != sb) return sa < sb;
        return a < b;
    });
    return pool;
}

struct GeneralValue {
    int value = 0;
    EdgeList purple;
    bool exhausted = true;
};

// Largest purple set on one graph. When min_size (the fewest edges of any
// catalog member) is known, targets are tried from the structural ceiling
// e(g) - min_size downward, stopping at the first success; otherwise a
// single branch-and-bound maximization runs.
inline GeneralValue general_value(const Graph& g, int t, std::optional<long long> min_size,
                                  int floor, Deadline deadline) {
    GeneralValue out;
    EdgeList pool = general_pool(g, t);
    if (pool.empty()) return out;
    if (min_size) {
        long long ceiling = std::min<long long>(g.edge_count() - *min_size,
                                                static_cast<long long>(pool.size()));
        for (long long target = ceiling; target > floor; --target) {
            PurpleSetSearch search(g, t, pool, deadline);
            EdgeList found;
            if (search.find_exact(static_cast<int>(target), found)) {
                out.value = static_cast<int>(target);
                out.purple = found;
                return out;
            }
            if (search.expired()) {
                out.exhausted = false;
                return out;
            }
        }
        return out;
    }
    PurpleSetSearch search(g, t, pool, deadline);
    EdgeList found;
    int best = search.maximize(floor, static_cast<int>(pool.size()), found);
    out.exhausted = !search.expired();
    if (static_cast<int>(found.size()) == best && best > floor) {
        out.value = best;
        out.purple = found;
    }
    return out;
}

}  // namespace detail

// Largest |P|, P inside E(g), with alpha(g - P) < t; purple edges need not
// form a matching.
inline SearchOutcome max_purple_set(const Graph& g, int s, int t,
                                    Deadline deadline = std::nullopt) {
    detail::require_ramsey_graph(g, s, t);
    detail::GeneralValue gv = detail::general_value(g, t, std::nullopt, 0, deadline);
    SearchOutcome o;
    o.value = gv.value;
    o.witness_graph = g;
    o.witness_purple = gv.purple;
    o.kind = PurpleKind::general;
    o.exhausted = gv.exhausted;
    verify_outcome(o, s, t);
    return o;
}

namespace detail {

// Minimum edges of any n-vertex graph with alpha < t (covering bound):
// every t-subset of vertices must contain an edge, and one edge covers
// binom(n-2, t-2) of the binom(n, t) subsets. Sound floor for possibly
// incomplete catalogs.
inline long long independence_edge_floor(int n, int t) {
    if (t > n) return 0;
    return (static_cast<long long>(n) * (n - 1) + static_cast<long long>(t) * (t - 1) - 1) /
           (static_cast<long long>(t) * (t - 1));
}

template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
    threads = std::max(1, threads);
    if (threads == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads - 1; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

struct SweepPlan {
    std::vector<std::size_t> order;  // catalog indices, descending edge count
    long long min_size = 0;          // complete ? member minimum : covering floor
    long long max_size = 0;
    long long edge_bound = 0;        // max_size - min_size + 1
};

inline SweepPlan sweep_plan(const Catalog& c) {
    if (c.graphs.empty())
        throw Error("no Ramsey graphs: catalog is empty (g undefined, n >= R(s,t))");
    SweepPlan plan;
    plan.min_size = c.graphs.front().edge_count();
    plan.max_size = plan.min_size;
    for (const Graph& g : c.graphs) {
        plan.min_size = std::min(plan.min_size, g.edge_count());
        plan.max_size = std::max(plan.max_size, g.edge_count());
    }
    if (!c.complete) plan.min_size = std::min(plan.min_size, independence_edge_floor(c.n, c.t));
    plan.edge_bound = plan.max_size - plan.min_size + 1;
    plan.order.resize(c.graphs.size());
    for (std::size_t i = 0; i < plan.order.size(); ++i) plan.order[i] = i;
    std::stable_sort(plan.order.begin(), plan.order.end(), [&](std::size_t a, std::size_t b) {
        return c.graphs[a].edge_count() > c.graphs[b].edge_count();
    });
    return plan;
}

}  // namespace detail

// g_M over a catalog: max over members of the matching search, with the
// catalog-level prunings (skip a member when its edge count cannot beat the
// current best; stop at the structural ceiling or on a perfect matching).
// The reported witness is deterministic regardless of thread count: after
// the value is fixed, the first member in catalog order achieving it wins.
inline SearchOutcome gm_over_catalog(const Catalog& c, int threads = 1,
                                     Deadline deadline = std::nullopt) {
    detail::SweepPlan plan = detail::sweep_plan(c);
    const int perfect = c.n / 2;
    std::atomic<int> best{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> all_exhausted{true};
    std::mutex sweep_mutex;
    int sweep_value = 0, sweep_index = -1;
    EdgeList sweep_witness;
    detail::parallel_for(plan.order.size(), threads, [&](std::size_t oi) {
        if (stop.load()) return;
        const std::size_t gi = plan.order[oi];
        const Graph& g = c.graphs[gi];
        int cur = best.load();
        // skip condition kept with its strict "<": one edge more conservative
        // than the tight bound e(G) >= min_size + best + 1
        if (g.edge_count() - cur < plan.min_size) return;
        detail::MatchingValue mv = detail::matching_value(g, c.t, cur + 1, deadline);
        if (!mv.exhausted) all_exhausted.store(false);
        int k = mv.value;
        if (k <= cur) return;
        int prev = best.load();
        while (k > prev && !best.compare_exchange_weak(prev, k)) {
        }
        {
            std::lock_guard<std::mutex> lock(sweep_mutex);
            if (k > sweep_value) {
                sweep_value = k;
                sweep_index = static_cast<int>(gi);
                sweep_witness = mv.matching;
            }
        }
        if (k == perfect || k == plan.edge_bound - 1) stop.store(true);
    });

    SearchOutcome o;
    o.kind = PurpleKind::matching;
    o.value = best.load();
    o.exhausted = all_exhausted.load();
    // Deterministic witness pass in catalog order; the value is fixed, so
    // the first member achieving it is independent of the thread schedule.
    for (std::size_t gi = 0; gi < c.graphs.size(); ++gi) {
        const Graph& g = c.graphs[gi];
        if (o.value > 0 && g.edge_count() - o.value < plan.min_size) continue;
        if (o.value == 0) {
            o.witness_graph = g;
            o.witness_index = static_cast<int>(gi);
            break;
        }
        if (!o.exhausted) break;
        EdgeList pool = swapable_edges(g, c.t);
        detail::MatchingSearch search(g, c.t, pool, std::nullopt);
        EdgeList found;
        if (search.find(o.value, found)) {
            o.witness_graph = g;
            o.witness_purple = found;
            o.witness_index = static_cast<int>(gi);
            break;
        }
    }
    if (o.witness_index < 0) {
        // Deadline runs keep the witness recorded during the sweep.
        if (sweep_index < 0 || sweep_value != o.value)
            throw Error("internal: no witness found for computed value");
        o.witness_graph = c.graphs[sweep_index];
        o.witness_purple = sweep_witness;
        o.witness_index = sweep_index;
    }
    verify_outcome(o, c.s, c.t);
    return o;
}

// g over a catalog: as above with the general purple search inside. Each
// member tries targets from its structural ceiling downward, stopping once
// it cannot beat the shared best.
inline SearchOutcome g_over_catalog(const Catalog& c, int threads = 1,
                                    Deadline deadline = std::nullopt) {
    detail::SweepPlan plan = detail::sweep_plan(c);
    std::atomic<int> best{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> all_exhausted{true};
    std::mutex sweep_mutex;
    int sweep_value = 0, sweep_index = -1;
    EdgeList sweep_witness;
    detail::parallel_for(plan.order.size(), threads, [&](std::size_t oi) {
        if (stop.load()) return;
        const std::size_t gi = plan.order[oi];
        const Graph& g = c.graphs[gi];
        int cur = best.load();
        if (g.edge_count() - cur < plan.min_size) return;
        detail::GeneralValue gv = detail::general_value(g, c.t, plan.min_size, cur, deadline);
        if (!gv.exhausted) all_exhausted.store(false);
        int k = gv.value;
        if (k <= cur) return;
        int prev = best.load();
        while (k > prev && !best.compare_exchange_weak(prev, k)) {
        }
        {
            std::lock_guard<std::mutex> lock(sweep_mutex);
            if (k > sweep_value) {
                sweep_value = k;
                sweep_index = static_cast<int>(gi);
                sweep_witness = gv.purple;
            }
        }
        if (k == plan.edge_bound - 1) stop.store(true);
    });

    SearchOutcome o;
    o.kind = PurpleKind::general;
    o.value = best.load();
    o.exhausted = all_exhausted.load();
    for (std::size_t gi = 0; gi < c.graphs.size(); ++gi) {
        const Graph& g = c.graphs[gi];
        if (o.value > 0 && g.edge_count() - o.value < plan.min_size) continue;
        if (o.value == 0) {
            o.witness_graph = g;
            o.witness_index = static_cast<int>(gi);
            break;
        }
        if (!o.exhausted) break;
        detail::PurpleSetSearch search(g, c.t, detail::general_pool(g, c.t), std::nullopt);
        EdgeList found;
        if (search.find_exact(o.value, found)) {
            o.witness_graph = g;
            o.witness_purple = found;
            o.witness_index = static_cast<int>(gi);
            break;
        }
    }
    if (o.witness_index < 0) {
        if (sweep_index < 0 || sweep_value != o.value)
            throw Error("internal: no witness found for computed value");
        o.witness_graph = c.graphs[sweep_index];
        o.witness_purple = sweep_witness;
        o.witness_index = sweep_index;
    }
    verify_outcome(o, c.s, c.t);
    return o;
}

// ---- Independent oracle ----
//
// Exhaustive maximum over all labelled graphs on n vertices with omega < s
// and alpha < t, and all purple subsets (or matchings) keeping
// alpha(g - P) < t. Subset-mask arithmetic only; shares nothing with the
// main search path. n <= 7.

inline constexpr int kBruteForceLimit = 7;

namespace detail {

struct OracleTables {
    int n = 0, edges = 0;
    std::vector<std::pair<int, int>> slot;    // edge index -> endpoints
    std::vector<std::uint32_t> s_masks;       // edge masks of all s-vertex subsets
    std::vector<std::uint32_t> t_masks;       // edge masks of all t-vertex subsets
};

inline void subsets_edge_masks(int n, int k, std::vector<std::uint32_t>& out,
                               const std::vector<std::vector<int>>& slot_of) {
    std::vector<int> pick(k);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == k) {
            std::uint32_t mask = 0;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) mask |= 1u << slot_of[pick[i]][pick[j]];
            out.push_back(mask);
            return;
        }
        for (int v = start; v < n; ++v) {
            pick[depth] = v;
            self(self, v + 1, depth + 1);
        }
    };
    if (k <= n) rec(rec, 0, 0);
}

// Minimum number of edges of `gmask` keeping every t-subset covered; exact
// search branching on the edges of the first uncovered subset. `limit` is a
// known attainable cover size (all edges of gmask).
inline int min_cover(std::uint32_t gmask, const std::vector<std::uint32_t>& t_masks, int limit) {
    struct Rec {
        const std::vector<std::uint32_t>& tm;
        std::uint32_t gmask;
        int best;
        void run(std::uint32_t chosen, int depth) {
            if (depth >= best) return;
            std::uint32_t need = 0;
            bool all_covered = true;
            for (std::uint32_t m : tm)
                if ((chosen & m) == 0) {
                    need = gmask & m;
                    all_covered = false;
                    break;
                }
            if (all_covered) {
                best = depth;
                return;
            }
            for (std::uint32_t bits = need; bits; bits &= bits - 1)
                run(chosen | (bits & ~(bits - 1)), depth + 1);
        }
    };
    Rec rec{t_masks, gmask, limit};
    rec.run(0, 0);
    return rec.best;
}

}  // namespace detail

// Oracle value of g_M(n;s,t) (kind = matching) or g(n;s,t) (general).
// Throws when no graph qualifies (n >= R(s,t), the value is undefined).
inline int brute_force_g(int n, int s, int t, PurpleKind kind) {
    if (n > kBruteForceLimit) throw Error("brute_force_g: n above oracle limit 7");
    if (n < 1 || s < 2 || t < 2) throw Error("brute_force_g: need n >= 1, s,t >= 2");
    const int edges = n * (n - 1) / 2;
    std::vector<std::vector<int>> slot_of(n, std::vector<int>(n, -1));
    std::vector<std::pair<int, int>> slot;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            slot_of[u][v] = slot_of[v][u] = static_cast<int>(slot.size());
            slot.emplace_back(u, v);
        }
    std::vector<std::uint32_t> s_masks, t_masks;
    detail::subsets_edge_masks(n, s, s_masks, slot_of);
    detail::subsets_edge_masks(n, t, t_masks, slot_of);

    int best = -1;
    for (std::uint32_t gmask = 0; gmask < (1u << edges); ++gmask) {
        bool ok = true;
        for (std::uint32_t m : s_masks)
            if ((gmask & m) == m) {
                ok = false;
                break;
            }
        if (!ok) continue;
        for (std::uint32_t m : t_masks)
            if ((gmask & m) == 0) {
                ok = false;
                break;
            }
        if (!ok) continue;
        const int gedges = std::popcount(gmask);
        if (kind == PurpleKind::general) {
            int cover = detail::min_cover(gmask, t_masks, gedges);
            best = std::max(best, gedges - cover);
        } else {
            // all matchings inside gmask, largest first-success per size
            struct MRec {
                const std::vector<std::uint32_t>& tm;
                const std::vector<std::pair<int, int>>& slot;
                std::uint32_t gmask;
                int edges;
                int best = 0;
                void run(int from, std::uint32_t pmask, std::uint32_t usedv, int size) {
                    if (size > best) {
                        std::uint32_t red = gmask & ~pmask;
                        bool valid = true;
                        for (std::uint32_t m : tm)
                            if ((red & m) == 0) {
                                valid = false;
                                break;
                            }
                        if (valid) best = size;
                        // an invalid matching can still extend to... no:
                        // removing more edges keeps the t-subset uncovered.
                        if (!valid) return;
                    }
                    for (int i = from; i < edges; ++i) {
                        if (!(gmask & (1u << i))) continue;
                        auto [u, v] = slot[i];
                        if (usedv & ((1u << u) | (1u << v))) continue;
                        run(i + 1, pmask | (1u << i), usedv | (1u << u) | (1u << v), size + 1);
                    }
                }
            };
            MRec rec{t_masks, slot, gmask, edges};
            rec.run(0, 0, 0, 0);
            best = std::max(best, rec.best);
        }
    }
    if (best < 0) throw Error("brute_force_g: no Ramsey graphs on these parameters");
    return best;
}

}  // namespace purple
