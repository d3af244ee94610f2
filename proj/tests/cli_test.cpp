#include <gtest/gtest.h>

#include <cstdio>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "corpus.hpp"
#include "semigraph/cli.hpp"
#include "semigraph/io.hpp"

using namespace semigraph;
using namespace semigraph::testing;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("semigraph-cli-" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST(FormatReal, TenSignificantDigits) {
  EXPECT_EQ(cli::format_real(4.0), "4.000000000");
  EXPECT_EQ(cli::format_real(-2.0), "-2.000000000");
  EXPECT_EQ(cli::format_real(2.7320508075688772), "2.732050808");
  EXPECT_EQ(cli::format_real(24.0), "24.00000000");
  EXPECT_EQ(cli::format_real(0.5), "0.5000000000");
  EXPECT_EQ(cli::format_real(1e-13), "0.000000000");
  EXPECT_EQ(cli::format_real(-1e-13), "0.000000000");
  EXPECT_EQ(cli::format_real(9.9999999999), "10.00000000");
}

TEST(Cli, RecognizeEmitsFile) {
  const std::string out = temp_path("twin-left.smg");
  const Result r = run({"recognize", fixture_path("twin-left.qmat"), "--emit", out});
  EXPECT_EQ(r.code, cli::kSuccess);
  const Semigraph g = parse_smg(slurp(out));
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_EQ(g, twin_left());
  std::filesystem::remove(out);
}

TEST(Cli, RecognizeRejections) {
  Result r = run({"recognize", fixture_path("twin-naive.qmat")});
  EXPECT_EQ(r.code, cli::kRejected);
  EXPECT_NE(r.out.find("OverlappingEdges"), std::string::npos);
  r = run({"recognize", fixture_path("illegal-entry.qmat")});
  EXPECT_EQ(r.code, cli::kRejected);
  EXPECT_NE(r.out.find("IllegalEntry"), std::string::npos);
  r = run({"recognize", fixture_path("asymmetric.qmat")});
  EXPECT_EQ(r.code, cli::kRejected);
  EXPECT_NE(r.out.find("AsymmetricInput"), std::string::npos);
}

TEST(Cli, RecognizeIsolatedVertices) {
  const std::string path = temp_path("mixed.qmat");
  { std::ofstream(path) << emit_qmat(adjacency(mixed())); }
  EXPECT_EQ(run({"recognize", path}).code, cli::kRejected);
  const Result r = run({"recognize", path, "--allow-isolated"});
  EXPECT_EQ(r.code, cli::kSuccess);
  EXPECT_NE(r.out.find(emit_smg(mixed())), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, SpectrumOfStar) {
  const Result r = run({"spectrum", fixture_path("star-ii-4.smg")});
  EXPECT_EQ(r.code, cli::kSuccess);
  EXPECT_NE(r.out.find("\n4.000000000\n"), std::string::npos);
  EXPECT_NE(r.out.find("-2.000000000 x5"), std::string::npos);
  EXPECT_EQ(r.out, run({"spectrum", fixture_path("star-ii-4.smg")}).out);
  EXPECT_EQ(run({"spectrum", fixture_path("star-ii-4.smg"), "--tol", "-1"}).code, cli::kUsage);
}

TEST(Cli, ValidateReportsPairInTwoEdges) {
  const Result r = run({"validate", fixture_path("bad.smg")});
  EXPECT_EQ(r.code, cli::kRejected);
  EXPECT_NE(r.err.find("PairInTwoEdges"), std::string::npos);
  const Result ok = run({"validate", fixture_path("mixed.smg")});
  EXPECT_EQ(ok.code, cli::kSuccess);
  EXPECT_NE(ok.out.find("v10 Isolated"), std::string::npos);
}

TEST(Cli, UsageAndSyntaxErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"validate"}).code, cli::kUsage);
  EXPECT_EQ(run({"validate", temp_path("does-not-exist.smg")}).code, cli::kUsage);
  const Result r = run({"validate", fixture_path("syntax-error.smg")});
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
  EXPECT_EQ(run({"star", "--family", "III", "--n", "2"}).code, cli::kUsage);
  EXPECT_EQ(run({"matrix", fixture_path("split.smg"), "--skeleton", "--excess"}).code, cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kSuccess);
}

TEST(Cli, MatrixVariants) {
  EXPECT_EQ(run({"matrix", fixture_path("golden.smg")}).out, emit_qmat(adjacency(golden())));
  EXPECT_EQ(run({"matrix", fixture_path("split.smg"), "--skeleton"}).out, emit_qmat(skeleton_adjacency(split())));
  EXPECT_EQ(run({"matrix", fixture_path("split.smg"), "--excess"}).out, emit_qmat(excess(split())));
  const Result check = run({"matrix", fixture_path("split.smg"), "--check-decomposition"});
  EXPECT_EQ(check.code, cli::kSuccess);
  EXPECT_NE(check.out.find("decomposition ok"), std::string::npos);
}

TEST(Cli, Bounds) {
  Result r = run({"bounds", fixture_path("star-ii-4.smg"), "--paper-trace"});
  EXPECT_EQ(r.code, cli::kSuccess);
  EXPECT_NE(r.out.find("lambda1 4.000000000"), std::string::npos);
  EXPECT_NE(r.out.find("24.00000000 holds"), std::string::npos);
  EXPECT_NE(r.out.find("closed-form trace bound"), std::string::npos);

  const std::string path = temp_path("cycle.smg");
  { std::ofstream(path) << "n 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n"; }
  r = run({"bounds", path});
  EXPECT_EQ(r.code, cli::kSuccess);
  EXPECT_NE(r.out.find("sqrt(2m(n-1)/n) " + cli::format_real(std::sqrt(6.0))), std::string::npos);
  std::filesystem::remove(path);

  r = run({"bounds", fixture_path("mixed.smg")});
  EXPECT_NE(r.err.find("not connected"), std::string::npos);
}

TEST(Cli, StarAndRandom) {
  EXPECT_EQ(run({"star", "--family", "II", "--n", "4"}).out, read_fixture("star-ii-4.smg"));
  EXPECT_EQ(run({"star", "--family", "I", "--n", "1", "--qmat"}).out, emit_qmat(adjacency(star_type1(1))));
  const std::string path = temp_path("star.smg");
  EXPECT_EQ(run({"star", "--family", "I", "--n", "3", "--emit", path}).code, cli::kSuccess);
  EXPECT_EQ(parse_smg(slurp(path)), star_type1(3));
  std::filesystem::remove(path);

  const Result a = run({"random", "--vertices", "12", "--edges", "5", "--max-size", "5", "--seed", "42"});
  EXPECT_EQ(a.code, cli::kSuccess);
  EXPECT_EQ(parse_smg(a.out), random_semigraph({12, 5, 5, 42}));
  EXPECT_EQ(a.out, run({"random", "--vertices", "12", "--edges", "5", "--max-size", "5", "--seed", "42"}).out);
  EXPECT_EQ(run({"random", "--vertices", "1", "--edges", "1", "--max-size", "2", "--seed", "1"}).code,
            cli::kUsage);
}

TEST(Cli, Identities) {
  const Result r = run({"identities", fixture_path("golden.smg")});
  EXPECT_EQ(r.code, cli::kSuccess);
  EXPECT_NE(r.out.find("degree sum direct    56.50000000 (113/2)"), std::string::npos);
  EXPECT_NE(r.out.find("trace A^2 direct    123.1250000 (985/8)"), std::string::npos);
  EXPECT_NE(r.out.find("degree sum published - direct 1.000000000 (1)"), std::string::npos);
}

TEST(Cli, FixturesExercised) {
  for (const char* name : {"mixed.smg", "golden.smg", "split.smg", "star-ii-4.smg", "star-i-3.smg"}) {
    EXPECT_EQ(run({"validate", fixture_path(name)}).code, cli::kSuccess) << name;
  }
  for (const char* name : {"golden.qmat", "split.qmat", "twin-left.qmat", "twin-right.qmat"}) {
    EXPECT_EQ(run({"recognize", fixture_path(name)}).code, cli::kSuccess) << name;
  }
}
