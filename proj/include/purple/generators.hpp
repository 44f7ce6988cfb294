#pragma once

// Parameterized graph families and structural operations shared by the
// construction layer: circulants, blow-ups, and the Shearer independence
// floor diagnostic.

#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include "purple/graph.hpp"

namespace purple {

// Circulant (Cayley) graph over Z/mZ. The connection set is symmetrized
// automatically; residue 0 is rejected because it would create loops.
inline Graph circulant_graph(int m, const std::set<int>& connection) {
    if (m < 1) throw Error("circulant: modulus must be >= 1");
    std::vector<bool> conn(m, false);
    for (int r : connection) {
        int rr = ((r % m) + m) % m;
        if (rr == 0) throw Error("circulant: residue 0 would create loops");
        conn[rr] = true;
        conn[m - rr] = true;
    }
    EdgeList edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (conn[j - i]) edges.push_back(Edge(i, j));
    return Graph::from_edges(m, edges);
}

// Blow-up of g with a prescribed part size per base vertex. Zero sizes are
// allowed (the base vertex is effectively deleted). Vertices of part i are
// consecutive, in base-label order, so downstream colourings can address
// u_l^i as part_offset[i] + l.
struct Blowup {
    Graph graph;
    std::vector<int> part_of;      // result vertex -> base vertex
    std::vector<int> part_offset;  // base vertex -> first result vertex
    std::vector<int> part_size;
};

inline Blowup blow_up(const Graph& g, const std::vector<int>& sizes) {
    const int k = g.vertex_count();
    if (static_cast<int>(sizes.size()) != k)
        throw Error("blow_up: sizes length must equal base vertex count");
    Blowup out;
    out.part_size = sizes;
    out.part_offset.resize(k);
    int n = 0;
    for (int i = 0; i < k; ++i) {
        if (sizes[i] < 0) throw Error("blow_up: negative part size");
        out.part_offset[i] = n;
        n += sizes[i];
    }
    out.part_of.resize(n);
    for (int i = 0; i < k; ++i)
        for (int l = 0; l < sizes[i]; ++l) out.part_of[out.part_offset[i] + l] = i;
    EdgeList edges;
    for (const Edge& e : g.edges())
        for (int a = 0; a < sizes[e.u]; ++a)
            for (int b = 0; b < sizes[e.v]; ++b)
                edges.push_back(Edge(out.part_offset[e.u] + a, out.part_offset[e.v] + b));
    out.graph = Graph::from_edges(n, edges);
    return out;
}

// Equitable part sizes summing to n over k parts: the first n mod k base
// vertices, in label order, receive the larger size.
inline std::vector<int> equitable_sizes(int n, int k) {
    std::vector<int> sizes(k, n / k);
    for (int i = 0; i < n % k; ++i) ++sizes[i];
    return sizes;
}

// Shearer's independence floor n (log(avg_deg) - 1) / avg_deg, valid for
// triangle-free graphs (not checked here; purely a diagnostic). Vacuous
// regimes return 0. The logarithm base is exposed because conventions
// differ; the natural logarithm is the default.
inline double shearer_floor(const Graph& g, double log_base = 2.718281828459045) {
    const int n = g.vertex_count();
    if (n == 0) return 0.0;
    const double avg_deg = 2.0 * static_cast<double>(g.edge_count()) / n;
    if (avg_deg <= 2.718281828459045) return 0.0;
    const double log_d = std::log(avg_deg) / std::log(log_base);
    const double value = n * (log_d - 1.0) / avg_deg;
    return value > 0.0 ? value : 0.0;
}

}  // namespace purple
