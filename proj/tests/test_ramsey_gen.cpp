#include <catch2/catch_amalgamated.hpp>

#include "purple/ramsey_gen.hpp"

using namespace purple;

TEST_CASE("pointed extension agrees with brute enumeration where both run") {
    Ramsey3Generator gen(2);
    for (int t = 3; t <= 6; ++t)
        for (int n = 0; n <= 8; ++n) {
            if (n >= ramsey_number_3t(t)) {
                REQUIRE(gen.catalog(t, n).empty());
                continue;
            }
            Catalog brute = enumerate_ramsey_graphs(n, 3, t, /*dedup=*/true, /*limit=*/8);
            INFO("t=" << t << " n=" << n);
            REQUIRE(gen.catalog(t, n).size() == brute.graphs.size());
        }
}

TEST_CASE("every generated graph satisfies the defining bounds") {
    Ramsey3Generator gen(2);
    for (const Graph& g : gen.catalog(5, 11)) {
        REQUIRE(clique_number(g, 3) < 3);
        REQUIRE(independence_number(g, 5) < 5);
        REQUIRE(g.vertex_count() == 11);
    }
    // pairwise non-isomorphic
    const auto& cat = gen.catalog(5, 11);
    for (std::size_t i = 0; i < cat.size(); ++i)
        for (std::size_t j = i + 1; j < cat.size(); ++j)
            REQUIRE_FALSE(are_isomorphic(cat[i], cat[j]));
}

TEST_CASE("the (3,5) chain tops out in the unique 13-vertex graph") {
    Ramsey3Generator gen(2);
    const auto& top = gen.catalog(5, 13);
    REQUIRE(top.size() == 1);
    REQUIRE(are_isomorphic(top[0], circulant_graph(13, {1, 5, 8, 12})));
    // one vertex below, the list is still nonempty
    REQUIRE_FALSE(gen.catalog(5, 12).empty());
}

TEST_CASE("paley17 is a validated (4,4,17) member") {
    Graph p = paley17();
    REQUIRE(p.vertex_count() == 17);
    REQUIRE(p.edge_count() == 68);
    REQUIRE(clique_number(p) == 3);
    REQUIRE(independence_number(p) == 3);
    REQUIRE(are_isomorphic(p, p.complement()));  // self-complementary
}

TEST_CASE("preloaded levels are used instead of regeneration") {
    Ramsey3Generator base(2);
    std::vector<Graph> level13 = base.catalog(5, 13);

    Ramsey3Generator gen(2);
    int built = 0, cached = 0;
    gen.set_progress([&](int, int, std::size_t, bool from_cache) {
        (from_cache ? cached : built) += 1;
    });
    gen.preload(5, 13, level13);
    REQUIRE(gen.has_level(5, 13));
    REQUIRE(gen.level_size(5, 13) == 1);
    REQUIRE(cached == 1);
    // building (3,6,17) consumes the preloaded (3,5,13) plus fresh levels
    REQUIRE(gen.catalog(6, 17).size() == 7);
    REQUIRE(built > 0);
}
