#pragma once

// Undirected simple graph over dense vertex labels 0..n-1, stored as
// per-vertex neighbour bitsets. Graphs are immutable after construction;
// derived operations return new values.

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "purple/bitset.hpp"

namespace purple {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unordered vertex pair, normalized to u < v.
struct Edge {
    int u = 0, v = 0;
    Edge() = default;
    Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}
    friend bool operator==(const Edge&, const Edge&) = default;
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

using EdgeList = std::vector<Edge>;

class Graph {
public:
    Graph() = default;

    static Graph empty(int n) { return Graph(n); }

    static Graph complete(int n) {
        Graph g(n);
        for (int v = 0; v < n; ++v) {
            g.adj_[v].set_all();
            g.adj_[v].reset(v);
        }
        g.m_ = static_cast<long long>(n) * (n - 1) / 2;
        return g;
    }

    static Graph from_edges(int n, const EdgeList& edges) {
        Graph g(n);
        for (const Edge& e : edges) {
            if (e.u < 0 || e.v >= n || e.u == e.v)
                throw Error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            ") out of range for n=" + std::to_string(n));
            if (!g.adj_[e.u].test(e.v)) {
                g.adj_[e.u].set(e.v);
                g.adj_[e.v].set(e.u);
                ++g.m_;
            }
        }
        return g;
    }

    int vertex_count() const { return n_; }
    long long edge_count() const { return m_; }

    bool has_edge(int u, int v) const { return u != v && adj_[u].test(v); }
    const Bitset& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    EdgeList edges() const {
        EdgeList out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].find_next(u); v != -1; v = adj_[u].find_next(v))
                out.push_back(Edge(u, v));
        return out;
    }

    Graph complement() const {
        Graph g(n_);
        for (int v = 0; v < n_; ++v) {
            g.adj_[v] = adj_[v].complement();
            g.adj_[v].reset(v);
        }
        g.m_ = static_cast<long long>(n_) * (n_ - 1) / 2 - m_;
        return g;
    }

    // Edge union with another graph on the same vertex set.
    Graph union_with(const Graph& o) const {
        if (o.n_ != n_) throw Error("union_with: vertex count mismatch");
        Graph g(n_);
        long long deg_sum = 0;
        for (int v = 0; v < n_; ++v) {
            g.adj_[v] = adj_[v] | o.adj_[v];
            deg_sum += g.adj_[v].count();
        }
        g.m_ = deg_sum / 2;
        return g;
    }

    Graph minus_edges(const EdgeList& remove) const {
        Graph g = *this;
        for (const Edge& e : remove) {
            if (!g.has_edge(e.u, e.v))
                throw Error("minus_edges: edge not present");
            g.adj_[e.u].reset(e.v);
            g.adj_[e.v].reset(e.u);
            --g.m_;
        }
        return g;
    }

    Graph plus_edges(const EdgeList& add) const {
        Graph g = *this;
        for (const Edge& e : add) {
            if (e.u < 0 || e.v >= n_ || e.u == e.v) throw Error("plus_edges: edge out of range");
            if (!g.adj_[e.u].test(e.v)) {
                g.adj_[e.u].set(e.v);
                g.adj_[e.v].set(e.u);
                ++g.m_;
            }
        }
        return g;
    }

    // Induced subgraph; vertex i of the result corresponds to verts[i].
    Graph induced(const std::vector<int>& verts) const {
        Graph g(static_cast<int>(verts.size()));
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j)
                if (has_edge(verts[i], verts[j])) {
                    g.adj_[i].set(static_cast<int>(j));
                    g.adj_[j].set(static_cast<int>(i));
                    ++g.m_;
                }
        return g;
    }

    // Relabelled copy: vertex v of the result is perm[v] of *this.
    Graph relabelled(const std::vector<int>& perm) const {
        Graph g(n_);
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].find_next(u); v != -1; v = adj_[u].find_next(v)) {
                int a = perm[u], b = perm[v];
                g.adj_[a].set(b);
                g.adj_[b].set(a);
            }
        g.m_ = m_;
        return g;
    }

    friend Graph disjoint_union(const Graph& a, const Graph& b) {
        Graph g(a.n_ + b.n_);
        for (int u = 0; u < a.n_; ++u)
            for (int v = a.adj_[u].find_next(u); v != -1; v = a.adj_[u].find_next(v)) {
                g.adj_[u].set(v);
                g.adj_[v].set(u);
            }
        for (int u = 0; u < b.n_; ++u)
            for (int v = b.adj_[u].find_next(u); v != -1; v = b.adj_[u].find_next(v)) {
                g.adj_[a.n_ + u].set(a.n_ + v);
                g.adj_[a.n_ + v].set(a.n_ + u);
            }
        g.m_ = a.m_ + b.m_;
        return g;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    explicit Graph(int n) : n_(n), m_(0), adj_(n, Bitset(n)) {
        if (n < 0) throw Error("negative vertex count");
        if (n > 65536) throw Error("vertex count exceeds 2^16");
    }

    int n_ = 0;
    long long m_ = 0;
    std::vector<Bitset> adj_;
};

// Edge-list text format: first line "graph <n>", then one "u v" pair
// per line, 0-indexed, u < v.
inline void write_edge_list(std::ostream& os, const Graph& g) {
    os << "graph " << g.vertex_count() << "\n";
    for (const Edge& e : g.edges()) os << e.u << " " << e.v << "\n";
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    write_edge_list(os, g);
    return os.str();
}

inline Graph read_edge_list(std::istream& is) {
    std::string word;
    if (!(is >> word) || word != "graph") throw Error("edge list: expected 'graph <n>' header");
    long long n;
    if (!(is >> n) || n < 0) throw Error("edge list: bad vertex count");
    EdgeList edges;
    long long u, v;
    while (is >> u) {
        if (!(is >> v)) throw Error("edge list: dangling endpoint");
        if (u < 0 || v <= u || v >= n) throw Error("edge list: endpoint out of range or not u < v");
        edges.push_back(Edge(static_cast<int>(u), static_cast<int>(v)));
    }
    Graph g = Graph::from_edges(static_cast<int>(n), edges);
    if (g.edge_count() != static_cast<long long>(edges.size()))
        throw Error("edge list: duplicate edge");
    return g;
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream is(text);
    return read_edge_list(is);
}

}  // namespace purple
