#pragma once

// Exact maximum-clique and maximum-independent-set solvers.
//
// Core is a branch-and-bound over candidate bitsets with a greedy-colouring
// upper bound (Tomita-style). Around it sit two structural reductions that
// matter for blow-up style graphs:
//   - disjoint components:  omega = max over components, alpha = sum;
//   - join components (components of the complement): omega = sum, alpha = max.
// All iteration is in ascending label order, so results and witnesses are
// deterministic for a fixed input. Scratch state is per call.

#include <limits>
#include <optional>
#include <vector>

#include "purple/bitset.hpp"
#include "purple/graph.hpp"

namespace purple {

namespace detail {

// Branch and bound on an explicit adjacency-row vector. `stop_at` makes it a
// decision procedure: the search unwinds as soon as best >= stop_at.
class MaxCliqueEngine {
public:
    MaxCliqueEngine(const std::vector<Bitset>& adj, int nbits, int stop_at)
        : adj_(adj), nbits_(nbits), stop_at_(stop_at) {}

    // Lower-prime the search (e.g. with an inherited bound). Witness is only
    // tracked for cliques found by this search.
    void prime(int lower) { best_ = lower; }

    int solve(const Bitset& candidates) {
        cur_.clear();
        stopped_ = best_ >= stop_at_;
        if (!stopped_) expand(candidates);
        return best_;
    }

    const std::vector<int>& best_clique() const { return best_set_; }

private:
    void expand(const Bitset& candidates) {
        // Greedy colouring: partition candidates into independent classes,
        // scanning labels in ascending order. A clique meets each class at
        // most once, so depth + class index bounds any completion.
        std::vector<int> order;
        std::vector<int> colour;
        Bitset rest = candidates;
        int classes = 0;
        while (rest.any()) {
            ++classes;
            Bitset cls = rest;
            for (int v = cls.find_first(); v != -1; v = cls.find_next(v)) {
                order.push_back(v);
                colour.push_back(classes);
                rest.reset(v);
                cls.and_not(adj_[v]);
            }
        }
        const int depth = static_cast<int>(cur_.size());
        Bitset avail = candidates;
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (depth + colour[i] <= best_) return;  // colours ascend along `order`
            int v = order[i];
            cur_.push_back(v);
            Bitset next = avail & adj_[v];
            if (next.any()) {
                expand(next);
            } else if (static_cast<int>(cur_.size()) > best_) {
                best_ = static_cast<int>(cur_.size());
                best_set_ = cur_;
                if (best_ >= stop_at_) stopped_ = true;
            }
            cur_.pop_back();
            if (stopped_) return;
            avail.reset(v);
        }
    }

    const std::vector<Bitset>& adj_;
    int nbits_;
    int stop_at_;
    int best_ = 0;
    bool stopped_ = false;
    std::vector<int> cur_;
    std::vector<int> best_set_;
};

// Connected components as vertex bitsets, ascending by smallest member.
inline std::vector<Bitset> components(const Graph& g) {
    int n = g.vertex_count();
    Bitset unseen(n);
    unseen.set_all();
    std::vector<Bitset> out;
    while (unseen.any()) {
        int start = unseen.find_first();
        Bitset comp(n);
        Bitset frontier(n);
        frontier.set(start);
        unseen.reset(start);
        while (frontier.any()) {
            int v = frontier.find_first();
            frontier.reset(v);
            comp.set(v);
            Bitset next = g.neighbours(v);
            next &= unseen;
            frontier |= next;
            unseen.and_not(next);
        }
        out.push_back(comp);
    }
    return out;
}

// Components of the complement, computed without materializing it.
inline std::vector<Bitset> co_components(const Graph& g) {
    int n = g.vertex_count();
    Bitset unseen(n);
    unseen.set_all();
    std::vector<Bitset> out;
    while (unseen.any()) {
        int start = unseen.find_first();
        Bitset comp(n);
        Bitset frontier(n);
        frontier.set(start);
        unseen.reset(start);
        while (frontier.any()) {
            int v = frontier.find_first();
            frontier.reset(v);
            comp.set(v);
            Bitset next = g.neighbours(v).complement();
            next.reset(v);
            next &= unseen;
            frontier |= next;
            unseen.and_not(next);
        }
        out.push_back(comp);
    }
    return out;
}

}  // namespace detail

struct CliqueResult {
    int size = 0;
    std::vector<int> vertices;  // one witness clique / independent set
};

namespace detail {

CliqueResult max_clique_impl(const Graph& g, int stop_at);

inline CliqueResult max_clique_connected(const Graph& g, int stop_at) {
    // Join decomposition: if the complement is disconnected, every maximum
    // clique is a union of one maximum clique per co-component.
    auto parts = co_components(g);
    if (parts.size() > 1) {
        CliqueResult total;
        for (const Bitset& part : parts) {
            std::vector<int> verts = part.to_vector();
            CliqueResult sub = max_clique_impl(g.induced(verts), stop_at - total.size);
            total.size += sub.size;
            for (int v : sub.vertices) total.vertices.push_back(verts[v]);
            if (total.size >= stop_at) return total;
        }
        return total;
    }
    int n = g.vertex_count();
    std::vector<Bitset> adj;
    adj.reserve(n);
    for (int v = 0; v < n; ++v) adj.push_back(g.neighbours(v));
    Bitset all(n);
    all.set_all();
    MaxCliqueEngine engine(adj, n, stop_at);
    engine.solve(all);
    CliqueResult r;
    r.vertices = engine.best_clique();
    r.size = static_cast<int>(r.vertices.size());
    return r;
}

inline CliqueResult max_clique_impl(const Graph& g, int stop_at) {
    int n = g.vertex_count();
    if (n == 0) return {};
    if (g.edge_count() == 0) {
        CliqueResult r;
        r.size = 1;
        r.vertices = {0};
        return r;
    }
    auto comps = components(g);
    if (comps.size() > 1) {
        CliqueResult best;
        for (const Bitset& comp : comps) {
            std::vector<int> verts = comp.to_vector();
            CliqueResult sub = max_clique_impl(g.induced(verts), stop_at);
            if (sub.size > best.size) {
                best.size = sub.size;
                best.vertices.clear();
                for (int v : sub.vertices) best.vertices.push_back(verts[v]);
                if (best.size >= stop_at) return best;
            }
        }
        return best;
    }
    return max_clique_connected(g, stop_at);
}

}  // namespace detail

// Maximum clique with witness. If `cutoff` is given the search may stop as
// soon as a clique of that size is found (decision mode); the returned size
// is then >= cutoff but not necessarily omega.
inline CliqueResult max_clique(const Graph& g, std::optional<int> cutoff = std::nullopt) {
    int stop = cutoff ? *cutoff : std::numeric_limits<int>::max();
    return detail::max_clique_impl(g, stop);
}

inline int clique_number(const Graph& g, std::optional<int> cutoff = std::nullopt) {
    return max_clique(g, cutoff).size;
}

// Maximum independent set = maximum clique of the complement, but computed
// with the dual decomposition (sum over components of g) so that graphs made
// of many small components stay cheap at large n.
namespace detail {

inline CliqueResult max_independent_impl(const Graph& g, int stop_at) {
    int n = g.vertex_count();
    if (n == 0) return {};
    auto comps = components(g);
    if (comps.size() > 1) {
        CliqueResult total;
        for (const Bitset& comp : comps) {
            std::vector<int> verts = comp.to_vector();
            CliqueResult sub = max_independent_impl(g.induced(verts), stop_at - total.size);
            total.size += sub.size;
            for (int v : sub.vertices) total.vertices.push_back(verts[v]);
            if (total.size >= stop_at) return total;
        }
        return total;
    }
    return max_clique_impl(g.complement(), stop_at);
}

}  // namespace detail

inline CliqueResult max_independent_set(const Graph& g, std::optional<int> cutoff = std::nullopt) {
    int stop = cutoff ? *cutoff : std::numeric_limits<int>::max();
    return detail::max_independent_impl(g, stop);
}

inline int independence_number(const Graph& g, std::optional<int> cutoff = std::nullopt) {
    return max_independent_set(g, cutoff).size;
}

// Exact decision: does g contain a clique on k vertices?
inline bool has_clique(const Graph& g, int k) {
    if (k <= 0) return true;
    return clique_number(g, k) >= k;
}

// Witness for a k-clique, if one exists. The witness is trimmed to exactly
// k vertices of a (possibly larger) clique found first.
inline std::optional<std::vector<int>> find_clique(const Graph& g, int k) {
    if (k <= 0) return std::vector<int>{};
    CliqueResult r = max_clique(g, k);
    if (r.size < k) return std::nullopt;
    r.vertices.resize(k);
    return r.vertices;
}

inline std::optional<std::vector<int>> find_independent_set(const Graph& g, int k) {
    if (k <= 0) return std::vector<int>{};
    CliqueResult r = max_independent_set(g, k);
    if (r.size < k) return std::nullopt;
    r.vertices.resize(k);
    return r.vertices;
}

struct IndependenceBounds {
    int lower = 0;  // greedy minimum-degree elimination (a witness exists)
    int upper = 0;  // greedy clique cover
};

// Deterministic sandwich alpha_lower <= alpha(g) <= alpha_upper for graphs
// where the exact search is not affordable (e.g. process graphs, whose
// maximum independent sets are the computationally hard direction).
inline IndependenceBounds independence_bounds(const Graph& g) {
    const int n = g.vertex_count();
    IndependenceBounds b;
    Bitset alive(n);
    alive.set_all();
    while (alive.any()) {
        int pick = -1, best_deg = n + 1;
        for (int v = alive.find_first(); v != -1; v = alive.find_next(v)) {
            int d = (g.neighbours(v) & alive).count();
            if (d < best_deg) {
                best_deg = d;
                pick = v;
            }
        }
        ++b.lower;
        alive.reset(pick);
        alive.and_not(g.neighbours(pick));
    }
    Bitset left(n);
    left.set_all();
    while (left.any()) {
        int v = left.find_first();
        Bitset cand = g.neighbours(v) & left;
        Bitset clique(n);
        clique.set(v);
        while (cand.any()) {
            int w = cand.find_first();
            clique.set(w);
            cand &= g.neighbours(w);
        }
        left.and_not(clique);
        ++b.upper;
    }
    return b;
}

// Decision kernel on raw adjacency rows, restricted to `candidates`: is
// there a clique of size k inside the candidate set? Used by the search
// module for incremental K_t checks on a mutating blue graph.
inline bool has_clique_in(const std::vector<Bitset>& adj, int nbits, const Bitset& candidates,
                          int k, std::vector<int>* witness = nullptr) {
    if (k <= 0) {
        if (witness) witness->clear();
        return true;
    }
    detail::MaxCliqueEngine engine(adj, nbits, k);
    engine.prime(k - 1);  // only cliques of size >= k are of interest
    int found = engine.solve(candidates);
    if (found >= k) {
        if (witness) {
            *witness = engine.best_clique();
            witness->resize(k);
        }
        return true;
    }
    return false;
}

}  // namespace purple
