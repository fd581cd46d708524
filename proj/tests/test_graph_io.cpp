#include <catch2/catch_amalgamated.hpp>

#include <moqc/graph_io.hpp>

using namespace moqc;

static std::string data(const std::string& name) {
    return std::string(TEST_DATA_DIR) + "/" + name;
}

TEST_CASE("the same cycle loads from all three formats", "[graphio]") {
    Graph a = load_graph(data("c4.mtx"));
    Graph b = load_graph(data("c4.dimacs"));
    Graph c = load_graph(data("c4.edges"));
    for (const Graph* g : {&a, &b, &c}) {
        CHECK(g->n == 4);
        CHECK(g->m == 4);
        for (int v = 0; v < 4; ++v) CHECK(g->degree(v) == 2);
    }
}

TEST_CASE("format can be forced explicitly", "[graphio]") {
    Graph g = load_graph(data("c4.dimacs"), GraphFormat::dimacs);
    CHECK(g.m == 4);
    CHECK(parse_format("auto") == GraphFormat::auto_detect);
    CHECK(parse_format("edges") == GraphFormat::edge_list);
    CHECK(parse_format("mtx") == GraphFormat::matrix_market);
    CHECK(parse_format("dimacs") == GraphFormat::dimacs);
    CHECK_THROWS_AS(parse_format("csv"), invalid_input);
}

TEST_CASE("matrix market keeps declared isolated vertices", "[graphio]") {
    Graph g = load_graph(data("edge_plus_iso.mtx"));
    CHECK(g.n == 3);
    CHECK(g.m == 1);
    CHECK(g.degree(2) == 0);
}

TEST_CASE("edge lists are simplified and labels preserved", "[graphio]") {
    Graph g = load_graph(data("messy.edges"));
    CHECK(g.n == 4);  // 7, 1, 2, 3
    CHECK(g.m == 2);
    CHECK(g.orig_label[0] == 7);
}

TEST_CASE("malformed inputs raise line-tagged errors", "[graphio]") {
    CHECK_THROWS_AS(load_graph(data("bad_header.mtx"), GraphFormat::matrix_market), parse_error);
    CHECK_THROWS_AS(load_graph(data("bad_vertex.dimacs")), parse_error);
    CHECK_THROWS_AS(load_graph(data("empty.edges")), parse_error);
    CHECK_THROWS_AS(load_graph(data("missing_file.edges")), parse_error);
    try {
        load_graph(data("bad_vertex.dimacs"));
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("bad_vertex.dimacs") != std::string::npos);
    }
}

TEST_CASE("sniffing picks the right loader from content", "[graphio]") {
    // the .mtx and .dimacs fixtures have headers; bare integer pairs fall
    // back to the edge list reader
    CHECK(load_graph(data("petersen.edges")).m == 15);
    CHECK(load_graph(data("c4.mtx")).n == 4);
    CHECK(load_graph(data("c4.dimacs")).n == 4);
}
