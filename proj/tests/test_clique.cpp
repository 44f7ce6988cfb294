#include <catch2/catch_amalgamated.hpp>

#include "purple/clique.hpp"
#include "purple/constructions.hpp"
#include "purple/generators.hpp"
#include "purple/rng.hpp"

using namespace purple;

namespace {

Graph cycle(int n) {
    EdgeList e;
    for (int i = 0; i < n; ++i) e.push_back(Edge(i, (i + 1) % n));
    return Graph::from_edges(n, e);
}

Graph random_graph(int n, double p, Rng& rng) {
    EdgeList edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_bernoulli(p)) edges.push_back(Edge(u, v));
    return Graph::from_edges(n, edges);
}

// Independent oracle: maximum clique by scanning all 2^n subsets.
int omega_brute(const Graph& g) {
    int n = g.vertex_count();
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        bool clique = true;
        for (int u = 0; u < n && clique; ++u)
            if (mask & (1u << u))
                for (int v = u + 1; v < n && clique; ++v)
                    if ((mask & (1u << v)) && !g.has_edge(u, v)) clique = false;
        if (clique) best = std::max(best, std::popcount(mask));
    }
    return best;
}

}  // namespace

TEST_CASE("clique number of small named graphs") {
    REQUIRE(clique_number(Graph::complete(5)) == 5);
    REQUIRE(clique_number(cycle(5)) == 2);
    REQUIRE(clique_number(Graph::empty(7)) == 1);
    REQUIRE(clique_number(Graph::empty(0)) == 0);
    REQUIRE(independence_number(Graph::empty(7)) == 7);
}

TEST_CASE("clique number agrees with brute force for n <= 12 samples") {
    Rng rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + static_cast<int>(rng.next_below(12));
        double p = 0.15 + 0.7 * rng.next_unit();
        Graph g = random_graph(n, p, rng);
        int expect = omega_brute(g);
        REQUIRE(clique_number(g) == expect);
        REQUIRE(independence_number(g) == clique_number(g.complement()));
    }
}

TEST_CASE("witness cliques are cliques") {
    Rng rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng.next_below(11));
        Graph g = random_graph(n, 0.5, rng);
        CliqueResult r = max_clique(g);
        REQUIRE(static_cast<int>(r.vertices.size()) == r.size);
        for (std::size_t i = 0; i < r.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < r.vertices.size(); ++j)
                REQUIRE(g.has_edge(r.vertices[i], r.vertices[j]));
        CliqueResult ind = max_independent_set(g);
        for (std::size_t i = 0; i < ind.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < ind.vertices.size(); ++j)
                REQUIRE_FALSE(g.has_edge(ind.vertices[i], ind.vertices[j]));
    }
}

TEST_CASE("cutoff decision mode short circuits but stays sound") {
    Graph k10 = Graph::complete(10);
    REQUIRE(clique_number(k10, 3) >= 3);
    REQUIRE(has_clique(k10, 10));
    REQUIRE_FALSE(has_clique(k10, 11));
    auto w = find_clique(cycle(5), 2);
    REQUIRE(w.has_value());
    REQUIRE(w->size() == 2);
    REQUIRE_FALSE(find_clique(cycle(5), 3).has_value());
}

TEST_CASE("independence number of the Turan graph") {
    // largest part of the 4+3+3 split
    Graph t = turan_graph(10, 3);
    REQUIRE(independence_number(t) == 4);
    REQUIRE(clique_number(t) == 3);
}

TEST_CASE("decompositions keep structured graphs cheap") {
    // disjoint copies: alpha adds up
    Graph c5 = cycle(5);
    Graph many = c5;
    for (int i = 0; i < 20; ++i) many = disjoint_union(many, c5);
    REQUIRE(independence_number(many) == 21 * 2);
    // join (complete multipartite): omega adds up across parts
    Graph t = turan_graph(60, 4);
    REQUIRE(clique_number(t) == 4);
}

TEST_CASE("has_clique_in kernel on restricted candidates") {
    Graph g = Graph::complete(6);
    std::vector<Bitset> adj;
    for (int v = 0; v < 6; ++v) adj.push_back(g.neighbours(v));
    Bitset cand(6);
    cand.set(0);
    cand.set(1);
    cand.set(2);
    std::vector<int> witness;
    REQUIRE(has_clique_in(adj, 6, cand, 3, &witness));
    REQUIRE(witness.size() == 3);
    REQUIRE_FALSE(has_clique_in(adj, 6, cand, 4));
}
