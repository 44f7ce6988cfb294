#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

#include "purple/canonical.hpp"
#include "purple/constructions.hpp"
#include "purple/rng.hpp"

using namespace purple;

namespace {

Graph random_graph(int n, double p, Rng& rng) {
    EdgeList edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_bernoulli(p)) edges.push_back(Edge(u, v));
    return Graph::from_edges(n, edges);
}

bool isomorphic_brute(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(a.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < a.vertex_count() && ok; ++u)
            for (int v = u + 1; v < a.vertex_count() && ok; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::vector<int> random_perm(int n, Rng& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[static_cast<int>(rng.next_below(i + 1))]);
    return perm;
}

}  // namespace

TEST_CASE("canonical key is invariant under relabelling") {
    Rng rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng.next_below(16));
        Graph g = random_graph(n, 0.2 + 0.6 * rng.next_unit(), rng);
        Graph h = g.relabelled(random_perm(n, rng));
        REQUIRE(canonical_key(g) == canonical_key(h));
        REQUIRE(are_isomorphic(g, h));
    }
}

TEST_CASE("canonical form is a relabelling of the input") {
    Rng rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng.next_below(10));
        Graph g = random_graph(n, 0.5, rng);
        Graph c = canonical_form(g);
        REQUIRE(c.edge_count() == g.edge_count());
        REQUIRE(are_isomorphic(g, c));
        REQUIRE(canonical_form(c) == c);  // idempotent
    }
}

TEST_CASE("canonical decisions agree with brute-force isomorphism, n <= 7") {
    Rng rng(7);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + static_cast<int>(rng.next_below(7));
        Graph a = random_graph(n, 0.5, rng);
        Graph b = random_graph(n, 0.5, rng);
        REQUIRE(are_isomorphic(a, b) == isomorphic_brute(a, b));
    }
}

TEST_CASE("canonical labelling handles vertex-transitive graphs") {
    // Andrasfai graphs and their relabellings
    Rng rng(8);
    for (int k = 2; k <= 5; ++k) {
        Graph g = andrasfai(k);
        Graph h = g.relabelled(random_perm(g.vertex_count(), rng));
        REQUIRE(canonical_key(g) == canonical_key(h));
    }
    // a circulant that is not an Andrasfai graph
    Graph c13 = circulant_graph(13, {1, 5, 8, 12});
    Graph c13r = c13.relabelled(random_perm(13, rng));
    REQUIRE(canonical_key(c13) == canonical_key(c13r));
}
