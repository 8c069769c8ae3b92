#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "modq/errors.hpp"
#include "modq/families.hpp"
#include "modq/io.hpp"
#include "test_support.hpp"

namespace modq {
namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected modq::Error";
    return ErrorKind::Io;
}

TEST(IoTest, ReadsSmallestPath) {
    Graph g = read_edge_list("3 2\n1 2\n2 3\n");
    EXPECT_EQ(g.node_count(), 3u);
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_EQ(g.degree(2), 2u);
}

TEST(IoTest, SkipsCommentsAndBlankLines) {
    Graph g = read_edge_list("# a path\n3 2\n\n  # inner\n1 2\r\n2\t3\n");
    EXPECT_EQ(g.edge_count(), 2u);
}

TEST(IoTest, EdgeListErrors) {
    EXPECT_EQ(kind_of([] { read_edge_list("3 2\n1 4\n"); }), ErrorKind::MalformedEdge);
    EXPECT_EQ(kind_of([] { read_edge_list("3 2\n1 1\n2 3\n"); }), ErrorKind::LoopRejected);
    EXPECT_EQ(kind_of([] { read_edge_list("3 2\n1 2\n"); }), ErrorKind::Format);
    EXPECT_EQ(kind_of([] { read_edge_list("3 1\n1 x\n"); }), ErrorKind::Format);
    EXPECT_EQ(kind_of([] { read_edge_list("3 1\n1 2 3\n"); }), ErrorKind::Format);
    EXPECT_EQ(kind_of([] { read_edge_list(""); }), ErrorKind::Format);
    EXPECT_EQ(kind_of([] { read_edge_list("0 0\n"); }), ErrorKind::Format);
}

TEST(IoTest, ErrorsCarryLineNumbers) {
    try {
        read_edge_list("# header comment\n3 2\n1 2\n2 q\n");
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
    }
}

TEST(IoTest, FamilyGraphRoundTrip) {
    Graph g = gen_g({Family::G, 3, 3, 48});
    std::string text = write_edge_list(g);
    EXPECT_EQ(text.substr(0, text.find('\n')), "153 147");
    EXPECT_EQ(read_edge_list(text), g);
}

TEST(IoTest, ClusteringReadWrite) {
    Clustering c = read_clustering("4 2\n1 10\n2 10\n3 5\n4 10\n");
    EXPECT_EQ(c.cluster_count(), 2u);
    EXPECT_EQ(c.label(3), 2u);
    EXPECT_EQ(write_clustering(c), "4 2\n1 1\n2 1\n3 2\n4 1\n");
}

TEST(IoTest, ClusteringErrors) {
    EXPECT_EQ(kind_of([] { read_clustering("3 1\n1 1\n2 1\n"); }), ErrorKind::Format);
    EXPECT_EQ(kind_of([] { read_clustering("2 1\n1 1\n1 1\n"); }), ErrorKind::Format);
    EXPECT_EQ(kind_of([] { read_clustering("2 2\n1 1\n2 1\n"); }), ErrorKind::Format);
    EXPECT_EQ(kind_of([] { read_clustering("2 1\n1 1\n3 1\n"); }), ErrorKind::Format);
}

TEST(IoTest, RandomRoundTrips) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        NodeId n = 1 + static_cast<NodeId>(rng() % 12);
        Graph g = testing::random_graph(rng, n, 0.3, false);
        EXPECT_EQ(read_edge_list(write_edge_list(g)), g);
        Clustering c = testing::random_clustering(rng, n, 5);
        EXPECT_EQ(read_clustering(write_clustering(c)), c);
    }
}

TEST(IoTest, FilesAndIoErrors) {
    auto dir = std::filesystem::temp_directory_path() / "modq_io_test";
    std::filesystem::create_directories(dir);
    Graph g = gen_h({Family::H, 1, 5, 5});
    write_file(dir / "h.edges", write_edge_list(g));
    EXPECT_EQ(load_graph(dir / "h.edges"), g);
    EXPECT_EQ(kind_of([&] { load_graph(dir / "missing.edges"); }), ErrorKind::Io);
    EXPECT_EQ(kind_of([&] { write_file(dir / "no_such_dir" / "x", "y"); }), ErrorKind::Io);
    std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace modq
