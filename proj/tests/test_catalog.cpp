#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "purple/catalog.hpp"
#include "purple/constructions.hpp"

using namespace purple;

namespace {

std::filesystem::path tmp_dir() {
    std::filesystem::path dir = PURPLE_TEST_TMP;
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("enumeration of tiny Ramsey catalogs") {
    Catalog c533 = enumerate_ramsey_graphs(5, 3, 3, true);
    REQUIRE(c533.graphs.size() == 1);
    REQUIRE(are_isomorphic(c533.graphs[0], circulant_graph(5, {2, 3})));
    for (int v = 0; v < 5; ++v) REQUIRE(c533.graphs[0].degree(v) == 2);

    Catalog c333 = enumerate_ramsey_graphs(3, 3, 3, true);
    REQUIRE(c333.graphs.size() == 2);  // the 2-edge path and its complement

    Catalog c834 = enumerate_ramsey_graphs(8, 3, 4, true);
    REQUIRE(c834.graphs.size() == 3);
    bool has_andrasfai3 = false;
    for (const Graph& g : c834.graphs)
        if (are_isomorphic(g, andrasfai(3))) has_andrasfai3 = true;
    REQUIRE(has_andrasfai3);

    // members always satisfy the defining bounds
    for (const Graph& g : c834.graphs) {
        REQUIRE(clique_number(g) < 3);
        REQUIRE(independence_number(g) < 4);
    }

    // dedup produces pairwise non-isomorphic members
    for (std::size_t i = 0; i < c834.graphs.size(); ++i)
        for (std::size_t j = i + 1; j < c834.graphs.size(); ++j)
            REQUIRE_FALSE(are_isomorphic(c834.graphs[i], c834.graphs[j]));

    REQUIRE_THROWS_AS(enumerate_ramsey_graphs(11, 3, 3, true), Error);
}

TEST_CASE("labelled enumeration without dedup counts complements of P3 on 3 vertices") {
    Catalog c = enumerate_ramsey_graphs(3, 3, 3, false);
    // labelled: 3 one-edge graphs + 3 two-edge paths
    REQUIRE(c.graphs.size() == 6);
}

TEST_CASE("graph6 catalog ingestion and validation") {
    auto dir = tmp_dir();
    auto path = (dir / "c5.g6").string();
    save_graph6_file(path, {circulant_graph(5, {2, 3})});
    Catalog cat = load_graph6_catalog(path, 5, 3, 3, true);
    REQUIRE(cat.graphs.size() == 1);
    REQUIRE(cat.validated);
    REQUIRE_FALSE(cat.complete);
    REQUIRE(cat.checksum.size() == 16);

    // K5 rejected with a line number when loaded as a (3,3) catalog
    auto bad = (dir / "k5.g6").string();
    save_graph6_file(bad, {circulant_graph(5, {2, 3}), Graph::complete(5)});
    try {
        load_graph6_catalog(bad, 5, 3, 3, true);
        FAIL("expected rejection");
    } catch (const CatalogLineError& e) {
        REQUIRE(e.line == 2);
        REQUIRE(std::string(e.what()).find("clique") != std::string::npos);
    }

    // vertex-count mismatch
    auto mism = (dir / "mism.g6").string();
    save_graph6_file(mism, {Graph::empty(4)});
    REQUIRE_THROWS_AS(load_graph6_catalog(mism, 5, 3, 3, true), CatalogLineError);

    // empty file loads as an empty catalog
    auto empty = (dir / "empty.g6").string();
    std::ofstream(empty).close();
    Catalog none = load_graph6_catalog(empty, 5, 3, 3, true);
    REQUIRE(none.graphs.empty());

    // optional ">>graph6<<" file header is tolerated
    auto hdr = (dir / "hdr.g6").string();
    {
        std::ofstream out(hdr);
        out << ">>graph6<<" << graph6_encode(circulant_graph(5, {2, 3})) << "\n";
    }
    REQUIRE(load_graph6_catalog(hdr, 5, 3, 3, true).graphs.size() == 1);
}

TEST_CASE("checksums are stable and content-sensitive") {
    REQUIRE(fnv1a64_hex("") == fnv1a64_hex(""));
    REQUIRE(fnv1a64_hex("a") != fnv1a64_hex("b"));
}
