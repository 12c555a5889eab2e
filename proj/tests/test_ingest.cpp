#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "biproj/errors.hpp"
#include "biproj/ingest.hpp"

using namespace biproj;

TEST_CASE("labels map to dense ids in first-appearance order") {
    std::stringstream in("a x\nb x\nb y\n");
    auto ds = load_bipartite_edgelist(in, "toy");
    CHECK(ds.meta.n_left == 2);
    CHECK(ds.meta.n_right == 2);
    CHECK(ds.graph.edges ==
          std::vector<BipartiteEdge>{{0, 0}, {1, 0}, {1, 1}});
    CHECK(ds.left_labels == std::vector<std::string>{"a", "b"});
    CHECK(ds.right_labels == std::vector<std::string>{"x", "y"});
}

TEST_CASE("duplicate lines collapse to one edge") {
    std::stringstream in("a x\na x\n");
    auto ds = load_bipartite_edgelist(in, "dup");
    CHECK(ds.meta.n_edges == 1);
}

TEST_CASE("comments and blank lines are skipped; malformed lines carry numbers") {
    std::stringstream ok("# comment\n\na x\n  # indented comment\nb y\n");
    auto ds = load_bipartite_edgelist(ok, "ok");
    CHECK(ds.meta.n_edges == 2);

    std::stringstream bad("a x\nlonely\n");
    try {
        load_bipartite_edgelist(bad, "bad");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }

    std::stringstream extra("a x junk\n");
    CHECK_THROWS_AS(load_bipartite_edgelist(extra, "extra"), ParseError);

    std::stringstream empty("# nothing here\n");
    CHECK_THROWS_AS(load_bipartite_edgelist(empty, "empty"), DomainError);
}

TEST_CASE("swap_sides permutes the columns") {
    std::stringstream in("a x\nb x\n");
    auto ds = load_bipartite_edgelist(in, "swapped", true);
    CHECK(ds.meta.n_left == 1);
    CHECK(ds.meta.n_right == 2);
    CHECK(ds.left_labels == std::vector<std::string>{"x"});
}

TEST_CASE("degrees as weights") {
    BipartiteGraph g;
    g.n_left = 2;
    g.n_right = 2;
    g.edges = {{0, 0}, {1, 0}, {1, 1}};
    auto dw = degrees_as_weights(g);
    CHECK(dw.left.values() == std::vector<double>{1, 2});
    CHECK(dw.right.values() == std::vector<double>{2, 1});
    CHECK(dw.dropped_left == 0);
    CHECK(dw.dropped_right == 0);

    // handshake identity
    CHECK(dw.left.sum() == doctest::Approx(static_cast<double>(g.num_edges())));
    CHECK(dw.right.sum() == doctest::Approx(static_cast<double>(g.num_edges())));

    BipartiteGraph empty;
    CHECK_THROWS_AS(degrees_as_weights(empty), DomainError);
}

TEST_CASE("isolated nodes are dropped and counted") {
    BipartiteGraph g;
    g.n_left = 3;  // left node 2 never appears
    g.n_right = 2;
    g.edges = {{0, 0}, {1, 1}};
    auto dw = degrees_as_weights(g);
    CHECK(dw.left.size() == 2);
    CHECK(dw.dropped_left == 1);
}

TEST_CASE("file round trip and label sidecar") {
    namespace fs = std::filesystem;
    const auto dir = fs::temp_directory_path() / "biproj_ingest_test";
    fs::create_directories(dir);
    const auto path = (dir / "toy.txt").string();
    {
        std::ofstream out(path);
        out << "# toy dataset\nalpha x1\nbeta x1\nbeta x2\n";
    }
    auto ds = load_bipartite_edgelist(path);
    CHECK(ds.meta.name == "toy");
    CHECK(ds.meta.source_path == path);

    // serialize the mapped graph, reload, compare
    const auto graph_path = (dir / "toy_graph.txt").string();
    ds.graph.save_file(graph_path);
    auto reloaded = BipartiteGraph::load_file(graph_path);
    CHECK(reloaded.edges == ds.graph.edges);
    CHECK(reloaded.n_left == ds.graph.n_left);
    CHECK(reloaded.n_right == ds.graph.n_right);

    const auto map_path = (dir / "toy_labels.txt").string();
    write_label_map(ds, map_path);
    std::ifstream map_in(map_path);
    std::string side, label;
    std::size_t id;
    map_in >> side;  // header '#'
    std::getline(map_in, label);
    map_in >> side >> id >> label;
    CHECK(side == "L");
    CHECK(id == 0);
    CHECK(label == "alpha");

    fs::remove_all(dir);
}
