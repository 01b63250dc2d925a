#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kedge/cli.hpp"

namespace kedge::cli {
namespace {

namespace fs = std::filesystem;

struct CliRun {
	int code;
	std::string out;
	std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
	std::ostringstream out, err;
	const int code = run(args, out, err);
	return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
	void SetUp() override {
		dir_ = fs::temp_directory_path() / ("kedge_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed())
		                                    + "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
		fs::create_directories(dir_);
	}
	void TearDown() override { fs::remove_all(dir_); }

	std::string file(const std::string &name, const std::string &content) {
		const fs::path p = dir_ / name;
		std::ofstream(p) << content;
		return p.string();
	}

	fs::path dir_;
};

TEST_F(CliTest, SolveTriangle) {
	const auto g = file("k3.txt", "0 1\n1 2\n0 2\n");
	const CliRun r = run_cli({"solve", "--input", g, "--k", "3"});
	EXPECT_EQ(r.code, ok);
	EXPECT_NE(r.out.find("answer yes"), std::string::npos);
	EXPECT_NE(r.out.find("witness 0 1 2"), std::string::npos);

	const CliRun no = run_cli({"solve", "--input", g, "--k", "2", "--format", "structured"});
	EXPECT_EQ(no.code, ok);
	EXPECT_NE(no.out.find("verb: solve"), std::string::npos);
	EXPECT_NE(no.out.find("answer: no"), std::string::npos);
}

TEST_F(CliTest, CountTriangle) {
	const auto g = file("k3.txt", "0 1\n1 2\n0 2\n");
	const CliRun r = run_cli({"count", "--input", g, "--k", "1"});
	EXPECT_EQ(r.code, ok);
	EXPECT_EQ(r.out, "3\n");
	EXPECT_EQ(run_cli({"count-nice", "--input", g, "--k", "2"}).out, "0\n");
}

TEST_F(CliTest, VerifyReportsMeasuredEdges) {
	const auto g = file("k3.txt", "0 1\n1 2\n0 2\n");
	const CliRun r = run_cli({"verify", "--input", g, "--k", "2", "--set", "0,1,2"});
	EXPECT_EQ(r.code, ok);
	EXPECT_NE(r.out.find("result invalid"), std::string::npos);
	EXPECT_NE(r.out.find("edges 3"), std::string::npos);

	const auto w = file("w.txt", "# witness\n0\n1\n");
	const CliRun ok_run = run_cli({"verify", "--input", g, "--k", "1", "--witness", w});
	EXPECT_NE(ok_run.out.find("result valid"), std::string::npos);
}

TEST_F(CliTest, GenIsDeterministic) {
	const std::vector<std::string> args{"gen", "--family", "er", "--n", "15", "--p", "0.4", "--seed", "7"};
	const CliRun a = run_cli(args), b = run_cli(args);
	EXPECT_EQ(a.code, ok);
	EXPECT_EQ(a.out, b.out);
	EXPECT_NE(a.out, run_cli({"gen", "--family", "er", "--n", "15", "--p", "0.4", "--seed", "8"}).out);
}

TEST_F(CliTest, GenOutputParsesBack) {
	const CliRun gen = run_cli({"gen", "--family", "cliques", "--sizes", "3,3", "--format", "structured"});
	ASSERT_EQ(gen.code, ok);
	const auto g = file("cliques.txt", gen.out);
	EXPECT_EQ(run_cli({"count-nice", "--input", g, "--k", "3"}).out, "2\n");
	// A triangle alone or with any one vertex of the other triangle.
	EXPECT_EQ(run_cli({"count", "--input", g, "--k", "3"}).out, "8\n");
}

TEST_F(CliTest, ReduceWithSidecarAndTable) {
	const auto g = file("p3.txt", "a b\nb c\n");
	const auto side = (dir_ / "blocks.txt").string();
	const CliRun r = run_cli({"reduce", "--input", g, "--k", "2", "--sidecar", side});
	EXPECT_EQ(r.code, ok);
	EXPECT_NE(r.out.find("a@1 b@2"), std::string::npos);
	std::ifstream in(side);
	std::string first;
	std::getline(in, first);
	EXPECT_EQ(first, "block 1: a@1 b@1 c@1");

	const CliRun t = run_cli({"reduce", "--input", g, "--k", "2", "--table"});
	EXPECT_NE(t.out.find("t_full 2"), std::string::npos);
	EXPECT_NE(t.out.find("independent_sets 1"), std::string::npos);
}

TEST_F(CliTest, DecomposeAndScattered) {
	const auto g = file("p5.txt", "0 1\n1 2\n2 3\n3 4\n");
	const CliRun d = run_cli({"decompose", "--input", g, "--k", "2"});
	EXPECT_EQ(d.code, ok);
	EXPECT_NE(d.out.find("outcome degree_extreme"), std::string::npos);
	const CliRun s = run_cli({"scattered", "--input", g, "--set", "0 4", "--ell", "2", "--radius", "3"});
	EXPECT_NE(s.out.find("scattered yes"), std::string::npos);
}

TEST_F(CliTest, OverridesNeedAcknowledgement) {
	const auto g = file("cliques.txt", run_cli({"gen", "--family", "cliques", "--n", "5"}).out);
	const CliRun refused = run_cli({"solve", "--input", g, "--k", "2", "--override-pk", "2"});
	EXPECT_EQ(refused.code, input_error);
	const CliRun allowed = run_cli({"decompose", "--input", g, "--k", "2", "--override-pk", "2", "--override-d0", "1",
	                             "--override-ramsey", "2", "--unsafe-overrides"});
	EXPECT_EQ(allowed.code, ok);
	EXPECT_NE(allowed.out.find("unsafe-overrides p_k=2 d0=1 ramsey=2"), std::string::npos);
	EXPECT_NE(allowed.out.find("outcome split"), std::string::npos);
	EXPECT_NE(allowed.out.find("invariants ok"), std::string::npos);
}

TEST_F(CliTest, ExitCodes) {
	EXPECT_EQ(run_cli({}).code, input_error);
	EXPECT_EQ(run_cli({"solve", "--k", "1"}).code, input_error);
	EXPECT_EQ(run_cli({"solve", "--input", (dir_ / "missing.txt").string(), "--k", "1"}).code, input_error);
	const auto bad = file("bad.txt", "0 1\n1 1\n");
	const CliRun parse = run_cli({"solve", "--input", bad, "--k", "1"});
	EXPECT_EQ(parse.code, input_error);
	EXPECT_NE(parse.err.find("line 2"), std::string::npos);
	const auto big = file("big.txt", run_cli({"gen", "--family", "star", "--n", "30"}).out);
	const CliRun guarded = run_cli({"count", "--input", big, "--k", "1"});
	EXPECT_EQ(guarded.code, guard_exceeded);
	EXPECT_NE(guarded.err.find("--guard"), std::string::npos);
	const auto clique = file("k26.txt", run_cli({"gen", "--family", "cliques", "--sizes", "26"}).out);
	EXPECT_EQ(run_cli({"count", "--input", clique, "--k", "1"}).code, guard_exceeded);
	EXPECT_EQ(run_cli({"count", "--input", clique, "--k", "1", "--guard", "26"}).out, "325\n");
	EXPECT_EQ(run_cli({"gen", "--family", "nope"}).code, input_error);
}

} // namespace
} // namespace kedge::cli
