#pragma once

// Canonical labelling by individualization and refinement, adequate for the
// graph sizes handled by catalogs (n <= ~50). The canonical key of a graph
// is the lexicographically largest packed upper-triangle adjacency bit
// string over all labellings reachable from the refinement tree; two graphs
// are isomorphic iff their keys match.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "purple/graph.hpp"

namespace purple {

using CanonKey = std::vector<std::uint64_t>;

namespace detail {

class CanonSearch {
public:
    explicit CanonSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {}

    void run() {
        std::vector<std::vector<int>> cells = initial_partition();
        refine(cells);
        descend(cells);
    }

    CanonKey key() const { return best_key_; }
    const std::vector<int>& labelling() const { return best_label_; }

private:
    std::vector<std::vector<int>> initial_partition() const {
        // Cells ordered by ascending degree.
        std::vector<int> order(n_);
        for (int v = 0; v < n_; ++v) order[v] = v;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g_.degree(a) < g_.degree(b); });
        std::vector<std::vector<int>> cells;
        for (int v : order) {
            if (cells.empty() || g_.degree(cells.back().front()) != g_.degree(v))
                cells.emplace_back();
            cells.back().push_back(v);
        }
        return cells;
    }

    // Equitable refinement: split cells by neighbour counts against every
    // cell until stable. Splits keep ascending count order, so the result
    // is label-independent.
    void refine(std::vector<std::vector<int>>& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t t = 0; t < cells.size() && !changed; ++t) {
                Bitset target(n_);
                for (int v : cells[t]) target.set(v);
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    if (cells[c].size() <= 1) continue;
                    auto count = [&](int v) { return (g_.neighbours(v) & target).count(); };
                    int first = count(cells[c][0]);
                    bool uniform = true;
                    for (std::size_t i = 1; i < cells[c].size(); ++i)
                        if (count(cells[c][i]) != first) {
                            uniform = false;
                            break;
                        }
                    if (uniform) continue;
                    std::vector<std::pair<int, int>> keyed;
                    keyed.reserve(cells[c].size());
                    for (int v : cells[c]) keyed.emplace_back(count(v), v);
                    std::stable_sort(keyed.begin(), keyed.end(),
                                     [](const auto& a, const auto& b) { return a.first < b.first; });
                    std::vector<std::vector<int>> split;
                    int last_cnt = -1;
                    for (const auto& [cnt, v] : keyed) {
                        if (split.empty() || cnt != last_cnt) split.emplace_back();
                        split.back().push_back(v);
                        last_cnt = cnt;
                    }
                    cells.erase(cells.begin() + static_cast<long>(c));
                    cells.insert(cells.begin() + static_cast<long>(c), split.begin(), split.end());
                    changed = true;
                    break;
                }
            }
        }
    }

    void descend(const std::vector<std::vector<int>>& cells) {
        // First non-singleton cell is the branching target.
        std::size_t target = cells.size();
        for (std::size_t c = 0; c < cells.size(); ++c)
            if (cells[c].size() > 1) {
                target = c;
                break;
            }
        if (target == cells.size()) {
            leaf(cells);
            return;
        }
        for (int v : cells[target]) {
            std::vector<std::vector<int>> next;
            next.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c == target) {
                    next.push_back({v});
                    std::vector<int> rest;
                    for (int u : cells[c])
                        if (u != v) rest.push_back(u);
                    next.push_back(std::move(rest));
                } else {
                    next.push_back(cells[c]);
                }
            }
            refine(next);
            descend(next);
        }
    }

    void leaf(const std::vector<std::vector<int>>& cells) {
        // cells are all singletons; position in the sequence is the label.
        std::vector<int> label(n_);
        std::vector<int> vertex_at(n_);
        int idx = 0;
        for (const auto& cell : cells) {
            label[cell[0]] = idx;
            vertex_at[idx] = cell[0];
            ++idx;
        }
        CanonKey key = pack_key(vertex_at);
        if (best_key_.empty() || key > best_key_) {
            best_key_ = std::move(key);
            best_label_ = label;
        }
    }

    CanonKey pack_key(const std::vector<int>& vertex_at) const {
        CanonKey key;
        key.push_back(static_cast<std::uint64_t>(n_));
        std::uint64_t acc = 0;
        int nbits = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                acc = (acc << 1) | (g_.has_edge(vertex_at[i], vertex_at[j]) ? 1 : 0);
                if (++nbits == 64) {
                    key.push_back(acc);
                    acc = 0;
                    nbits = 0;
                }
            }
        if (nbits > 0) key.push_back(acc << (64 - nbits));
        return key;
    }

    const Graph& g_;
    int n_;
    CanonKey best_key_;
    std::vector<int> best_label_;
};

}  // namespace detail

inline CanonKey canonical_key(const Graph& g) {
    detail::CanonSearch search(g);
    search.run();
    CanonKey key = search.key();
    if (key.empty()) key.push_back(0);  // empty graph
    return key;
}

// The canonically relabelled graph itself.
inline Graph canonical_form(const Graph& g) {
    if (g.vertex_count() == 0) return g;
    detail::CanonSearch search(g);
    search.run();
    return g.relabelled(search.labelling());
}

inline bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_key(a) == canonical_key(b);
}

// Key bytes for hash-set based isomorph rejection.
inline std::string canonical_key_bytes(const Graph& g) {
    CanonKey key = canonical_key(g);
    return std::string(reinterpret_cast<const char*>(key.data()), key.size() * sizeof(std::uint64_t));
}

}  // namespace purple
