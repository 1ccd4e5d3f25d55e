#include "phee/edge_list.hpp"
#include "phee/graph.hpp"

#include <doctest.h>
#include <test_graphs.hpp>
#include <zlib.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace phee;
using namespace phee::testing;

TEST_CASE("minimal edge list loads as a path") {
    std::istringstream in("0 1\n1 2\n");
    const Graph g = load_edge_list(in, false);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(1) == 2);
    CHECK_FALSE(g.directed());
}

TEST_CASE("vertices are numbered by first appearance and keep labels") {
    std::istringstream in("5 3\n3 9\n");
    const Graph g = load_edge_list(in, false);
    REQUIRE(g.vertex_count() == 3);
    CHECK(g.original_id(0) == 5);
    CHECK(g.original_id(1) == 3);
    CHECK(g.original_id(2) == 9);
    CHECK(g.internal_id(9) == VertexId{2});
    CHECK_FALSE(g.internal_id(42).has_value());
}

TEST_CASE("self loops and duplicates are cleaned and counted") {
    std::istringstream in("1 1\n2 3\n3 2\n");
    LoadReport report;
    const Graph g = load_edge_list(in, false, &report);
    CHECK(g.vertex_count() == 3); // 1 survives as an isolated vertex
    CHECK(g.edge_count() == 1);
    CHECK(report.lines == 3);
    CHECK(report.self_loops == 1);
    CHECK(report.duplicates == 1);
    CHECK(g.degree(*g.internal_id(1)) == 0);
}

TEST_CASE("reversed duplicates count only for undirected graphs") {
    std::istringstream in("2 3\n3 2\n");
    LoadReport report;
    const Graph g = load_edge_list(in, true, &report);
    CHECK(report.duplicates == 0);
    CHECK(g.edge_count() == 2); // two distinct arcs
}

TEST_CASE("comments, blank lines and CR are tolerated") {
    std::istringstream in("# header\n% other style\n\n  0 1 \r\n1 2\n");
    LoadReport report;
    const Graph g = load_edge_list(in, false, &report);
    CHECK(g.edge_count() == 2);
    CHECK(report.lines == 2);
}

TEST_CASE("malformed lines report their 1-based number") {
    std::istringstream in("0 1\nnope\n");
    CHECK_THROWS_WITH_AS(load_edge_list(in, false),
                         doctest::Contains("line 2"), std::runtime_error);

    std::istringstream three("0 1 7\n");
    CHECK_THROWS_WITH_AS(load_edge_list(three, false),
                         doctest::Contains("line 1"), std::runtime_error);
}

TEST_CASE("empty input is rejected") {
    std::istringstream in("# nothing\n");
    CHECK_THROWS_WITH_AS(load_edge_list(in, false),
                         doctest::Contains("no vertices"), std::runtime_error);
}

TEST_CASE("undirected degrees sum to twice the edge count") {
    Rng rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph g = random_graph(rng, 30, 60);
        std::size_t total = 0;
        for (VertexId v = 0; v < g.vertex_count(); ++v) total += g.degree(v);
        CHECK(total == 2 * g.edge_count());
    }
}

TEST_CASE("directed graphs expose out, in and union views") {
    const Graph g = make_graph(4, {{0, 1}, {2, 1}, {1, 3}}, true);
    CHECK(g.out_degree(1) == 1);
    CHECK(g.in_degree(1) == 2);
    CHECK(g.degree(1) == 3); // union view
    CHECK(g.has_out_edge(0, 1));
    CHECK_FALSE(g.has_out_edge(1, 0));

    const auto un = g.neighbors(1, EdgeView::Union);
    CHECK(std::vector<VertexId>(un.begin(), un.end()) == std::vector<VertexId>{0, 2, 3});
}

TEST_CASE("union view deduplicates reciprocal arcs") {
    const Graph g = make_graph(2, {{0, 1}, {1, 0}}, true);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 1);
}

TEST_CASE("duplicate labels are rejected") {
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1}}, false, {5, 5}), std::invalid_argument);
}

TEST_CASE("adjacency lists are sorted") {
    const Graph g = make_graph(5, {{0, 4}, {0, 2}, {0, 1}, {0, 3}});
    const auto nb = g.out_neighbors(0);
    CHECK(std::is_sorted(nb.begin(), nb.end()));
}

TEST_CASE("deletion overlay tracks live degrees") {
    const Graph g = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    DeletionOverlay overlay(g);
    CHECK(overlay.live_count() == 3);
    CHECK(overlay.live_degree(0) == 2);

    overlay.erase(1);
    CHECK(overlay.live_count() == 2);
    CHECK(overlay.deleted(1));
    CHECK(overlay.live_degree(0) == 1);
    CHECK(overlay.live_degree(2) == 1);

    CHECK_THROWS_AS(overlay.erase(1), std::logic_error);
}

TEST_CASE("bfs_within excludes the source and sorts by distance then id") {
    const Graph g = path_graph(5);
    const auto got = bfs_within(g, 0, 2);
    REQUIRE(got.size() == 2);
    CHECK(got[0] == std::pair<VertexId, std::uint32_t>{1, 1});
    CHECK(got[1] == std::pair<VertexId, std::uint32_t>{2, 2});

    const Graph star = star_graph(3);
    const auto from_center = bfs_within(star, 0, 1);
    REQUIRE(from_center.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(from_center[i] == std::pair<VertexId, std::uint32_t>{static_cast<VertexId>(i + 1), 1});

    const Graph arc = make_graph(2, {{0, 1}}, true);
    CHECK(bfs_within(arc, 0, 1).size() == 1);
    CHECK(bfs_within(arc, 1, 1).empty());          // out view by default
    CHECK(bfs_within(arc, 1, 1, EdgeView::In).size() == 1);
}

TEST_CASE("write then load round-trips, isolated vertices included") {
    std::istringstream in("1 1\n2 3\n4 2\n");
    const Graph g = load_edge_list(in, false);

    std::ostringstream out;
    write_edge_list(g, out);
    std::istringstream back(out.str());
    const Graph h = load_edge_list(back, false);

    REQUIRE(h.vertex_count() == g.vertex_count());
    REQUIRE(h.edge_count() == g.edge_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto hv = h.internal_id(g.original_id(v));
        REQUIRE(hv.has_value());
        CHECK(h.degree(*hv) == g.degree(v));
    }
}

TEST_CASE("gzip compressed files load transparently") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "phee_gz_test";
    fs::create_directories(dir);
    const fs::path plain = dir / "tiny.txt";
    const fs::path packed = dir / "tiny.txt.gz";

    {
        std::ofstream out(plain);
        out << "0 1\n1 2\n2 0\n";
    }
    {
        gzFile f = gzopen(packed.string().c_str(), "wb");
        REQUIRE(f != nullptr);
        const char* text = "0 1\n1 2\n2 0\n";
        gzwrite(f, text, static_cast<unsigned>(std::string(text).size()));
        gzclose(f);
    }

    const Graph a = load_edge_list_file(plain.string(), false);
    const Graph b = load_edge_list_file(packed.string(), false);
    CHECK(a.vertex_count() == 3);
    CHECK(b.vertex_count() == 3);
    CHECK(a.edge_count() == b.edge_count());

    fs::remove_all(dir);
}

TEST_CASE("missing files raise with the path in the message") {
    CHECK_THROWS_WITH_AS(load_edge_list_file("/nonexistent/nowhere.txt", false),
                         doctest::Contains("nowhere.txt"), std::runtime_error);
}
