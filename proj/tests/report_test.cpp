#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "modq/commands.hpp"
#include "modq/errors.hpp"
#include "modq/io.hpp"
#include "modq/report.hpp"

namespace modq {
namespace {

Clustering triangle_split() {
    std::vector<std::vector<NodeId>> blocks{{1, 2, 3}, {4, 5, 6}};
    return Clustering::from_blocks(6, blocks);
}

std::vector<std::string> fixed_row(const std::vector<TableRow>& rows, std::size_t r) {
    std::vector<std::string> out;
    for (const TableRow& row : rows) out.push_back(to_fixed(row.rows[r]));
    return out;
}

TEST(TableTest, FirstTableColumns) {
    auto rows = compute_table(TableSpec::published(1));
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0].n, 153);
    EXPECT_EQ(rows[0].m, 147);
    EXPECT_EQ(fixed_row(rows, 0), (std::vector<std::string>{"0.6928", "0.6787", "0.6735", "0.6711"}));
    EXPECT_EQ(fixed_row(rows, 6), (std::vector<std::string>{"0.2196", "0.1540", "0.1190", "0.0967"}));
    EXPECT_EQ(rows[0].chain_violation, 3u);
    EXPECT_EQ(rows[1].chain_violation, 3u);
    EXPECT_FALSE(rows[2].chain_violation.has_value());
    EXPECT_FALSE(rows[3].chain_violation.has_value());
    for (const TableRow& r : rows) EXPECT_TRUE(r.balanced_wins);
}

TEST(TableTest, SecondTableColumns) {
    auto rows = compute_table(TableSpec::published(2));
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0].m, 671);
    EXPECT_EQ(rows[1].m, 1175);
    EXPECT_EQ(rows[2].m, 1823);
    EXPECT_EQ(fixed_row(rows, 5), (std::vector<std::string>{"0.8743", "0.8986", "0.9182"}));
    for (const TableRow& r : rows) {
        EXPECT_LT(r.rows[0], r.rows[1]);
        EXPECT_TRUE(r.balanced_wins);
    }
}

TEST(TableTest, Deterministic) {
    TableSpec spec = TableSpec::published(1);
    spec.xs = {10, 4, 8, 6, 4};
    const std::string serial = table_csv(compute_table(spec, Execution::Serial));
    EXPECT_EQ(serial, table_csv(compute_table(spec, Execution::Parallel)));
    EXPECT_EQ(serial, table_csv(compute_table(TableSpec::published(1))));
    EXPECT_EQ(serial.rfind("family,K,N1,N2,J,x,n,m,row1", 0), 0u);
}

TEST(TableTest, BadTableNumber) { EXPECT_THROW(TableSpec::published(3), Error); }

TEST(SweepTest, JaccardDecreases) {
    SweepSpec spec;
    spec.family = Family::G;
    spec.K = 3;
    spec.x_first = 4;
    spec.x_last = 40;
    auto rows = compute_sweep(spec);
    ASSERT_EQ(rows.size(), 37u);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_LT(rows[i].jaccard_distinct, rows[i - 1].jaccard_distinct);
        EXPECT_LT(rows[i].jaccard_ordered, rows[i - 1].jaccard_ordered);
    }
}

TEST(SweepTest, HBalancedValues) {
    SweepSpec spec;
    spec.family = Family::H;
    spec.K = 3;
    spec.x_first = 6;
    spec.x_last = 10;
    auto rows = compute_sweep(spec);
    ASSERT_EQ(rows.size(), 5u);
    EXPECT_EQ(to_fixed(rows[0].q_balanced), "0.8743");
    EXPECT_EQ(to_fixed(rows[2].q_balanced), "0.8986");
    EXPECT_EQ(to_fixed(rows[4].q_balanced), "0.9182");
    EXPECT_EQ(sweep_csv(rows, false), sweep_csv(compute_sweep(spec, Execution::Serial), false));
}

TEST(SweepTest, EmptyRange) {
    SweepSpec spec;
    spec.x_first = 8;
    spec.x_last = 4;
    EXPECT_THROW(compute_sweep(spec), Error);
}

class CommandsTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("modq_cmd_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::remove_all(dir_);
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }
    std::filesystem::path dir_;
};

TEST_F(CommandsTest, GenerateThenScore) {
    cli::GenerateOptions gen{{Family::G, 3, 3, 48}, {12}, dir_ / "g"};
    std::ostringstream summary;
    cli::generate(gen, summary);
    ASSERT_TRUE(std::filesystem::exists(dir_ / "g.edges"));
    ASSERT_TRUE(std::filesystem::exists(dir_ / "g.V.clu"));
    ASSERT_TRUE(std::filesystem::exists(dir_ / "g.U12.clu"));
    EXPECT_EQ(read_file(dir_ / "g.edges").rfind("153 147\n", 0), 0u);

    std::ostringstream out;
    cli::score({dir_ / "g.edges", dir_ / "g.U12.clu", std::nullopt}, out);
    EXPECT_NE(out.str().find(",0.8406913786,"), std::string::npos) << out.str();
    EXPECT_NE(out.str().find(",4037/4802"), std::string::npos) << out.str();
}

TEST_F(CommandsTest, ScoreMismatch) {
    std::ostringstream sink;
    cli::generate({{Family::G, 1, 3, 3}, {}, dir_ / "a"}, sink);
    cli::generate({{Family::G, 1, 3, 4}, {}, dir_ / "b"}, sink);
    std::ostringstream out;
    try {
        cli::score({dir_ / "a.edges", dir_ / "b.V.clu", std::nullopt}, out);
        FAIL() << "expected IncompatibleClustering";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::IncompatibleClustering);
    }
}

TEST_F(CommandsTest, MaximizeWritesClustering) {
    write_file(dir_ / "t.edges", "6 7\n1 2\n2 3\n1 3\n4 5\n5 6\n4 6\n3 4\n");
    cli::MaximizeOptions opts;
    opts.graph = dir_ / "t.edges";
    opts.clustering_out = dir_ / "best.clu";
    std::ostringstream out;
    cli::maximize(opts, out);
    Clustering best = load_clustering(dir_ / "best.clu");
    EXPECT_EQ(best, triangle_split());
    EXPECT_NE(out.str().find("exhaustive"), std::string::npos);

    opts.quality = QualityFunction::parse("qf");
    opts.K = 2;
    opts.clustering_out.reset();
    std::ostringstream out2;
    cli::maximize(opts, out2);
    EXPECT_NE(out2.str().find("# F_G(2) = 6/7"), std::string::npos) << out2.str();
}

}  // namespace
}  // namespace modq
