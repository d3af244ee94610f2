#include <gtest/gtest.h>

#include "corpus.hpp"
#include "semigraph/io.hpp"

using namespace semigraph;
using namespace semigraph::testing;

namespace {

Error caught(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "expected an Error";
  return Error(ErrorCode::InvalidArgument, "none");
}

}  // namespace

TEST(Smg, ParsesSingleEdge) {
  const Semigraph g = parse_smg("n 2\ne 1 2");
  EXPECT_EQ(g, one_based(2, {{1, 2}}));
}

TEST(Smg, FigureOneFixture) { EXPECT_EQ(parse_smg(read_fixture("mixed.smg")), mixed()); }

TEST(Smg, CommentsBlankLinesAndCarriageReturns) {
  EXPECT_EQ(parse_smg("# header\n\nn 3   # three\r\n\te 3 2 1\n"), one_based(3, {{1, 2, 3}}));
}

TEST(Smg, ErrorsCarryLines) {
  Error e = caught([] { parse_smg("n 3\ne 1 1 2"); });
  EXPECT_EQ(e.code(), ErrorCode::DuplicateVertexInEdge);
  ASSERT_TRUE(e.location());
  EXPECT_EQ(e.location()->line, 2u);

  e = caught([] { parse_smg(read_fixture("bad.smg")); });
  EXPECT_EQ(e.code(), ErrorCode::PairInTwoEdges);
  EXPECT_EQ(e.location()->line, 4u);

  e = caught([] { parse_smg(read_fixture("syntax-error.smg")); });
  EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
  EXPECT_EQ(e.location()->line, 3u);
  EXPECT_EQ(e.location()->column, 1u);

  e = caught([] { parse_smg("n 3\ne 1 x"); });
  EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
  EXPECT_EQ(e.location()->column, 5u);

  EXPECT_EQ(caught([] { parse_smg("e 1 2"); }).code(), ErrorCode::SyntaxError);
  EXPECT_EQ(caught([] { parse_smg(""); }).code(), ErrorCode::SyntaxError);
  EXPECT_EQ(caught([] { parse_smg("n 0"); }).code(), ErrorCode::SyntaxError);
  EXPECT_EQ(caught([] { parse_smg("n 2\ne 1 3"); }).code(), ErrorCode::VertexOutOfRange);
  EXPECT_EQ(caught([] { parse_smg("n 2\ne 0 1"); }).code(), ErrorCode::VertexOutOfRange);
}

TEST(Smg, EmitIsCanonical) {
  EXPECT_EQ(emit_smg(one_based(2, {{2, 1}})), "n 2\ne 1 2\n");
  const std::string once = emit_smg(mixed());
  EXPECT_EQ(once, emit_smg(parse_smg(once)));
  EXPECT_EQ(once, "n 10\ne 1 2 3 4 5\ne 1 7 8\ne 1 9\ne 2 6 8\ne 6 7\n");
}

TEST(Smg, RoundTripOnCorpus) {
  for (const Semigraph& g : fuzz_corpus(300)) EXPECT_EQ(parse_smg(emit_smg(g)), g);
}

TEST(Qmat, FigureFiveFixture) {
  EXPECT_EQ(parse_qmat(read_fixture("golden.qmat")), adjacency(golden()));
}

TEST(Qmat, DecimalTokens) {
  const SymMatrix m = parse_qmat("n 3\n0 0.25 0.5\n0.25 0 1.0\n0.50 1 0\n");
  EXPECT_EQ(m, from_quarters({{0, 1, 2}, {1, 0, 4}, {2, 4, 0}}));
}

TEST(Qmat, EmitParseIsCanonical) {
  const std::string text = "n 3\n0 0.25 0.5\n0.25 0 1.0\n0.50 1 0\n";
  const std::string canonical = emit_qmat(parse_qmat(text));
  EXPECT_EQ(canonical, "n 3\n0 1/4 1/2\n1/4 0 1\n1/2 1 0\n");
  EXPECT_EQ(emit_qmat(parse_qmat(canonical)), canonical);
  for (const Semigraph& g : fuzz_corpus(200)) EXPECT_EQ(parse_qmat(emit_qmat(adjacency(g))), adjacency(g));
}

TEST(Qmat, RawAcceptsNegativeQuarters) {
  const SquareMatrix m = parse_qmat_raw(read_fixture("split-excess.qmat"));
  EXPECT_EQ(m.at(3, 5), QScalar::from_quarters(-3));
  EXPECT_EQ(emit_qmat(m), emit_qmat(excess(split())));
}

TEST(Qmat, Errors) {
  Error e = caught([] { parse_qmat(read_fixture("illegal-entry.qmat")); });
  EXPECT_EQ(e.code(), ErrorCode::IllegalEntry);
  EXPECT_EQ(e.location()->line, 2u);
  EXPECT_EQ(e.location()->column, 5u);

  e = caught([] { parse_qmat(read_fixture("asymmetric.qmat")); });
  EXPECT_EQ(e.code(), ErrorCode::AsymmetricInput);
  EXPECT_EQ(e.location()->line, 3u);

  e = caught([] { parse_qmat("n 2\n1 0\n0 0"); });
  EXPECT_EQ(e.code(), ErrorCode::NonzeroDiagonal);

  EXPECT_EQ(caught([] { parse_qmat("n 2\n0 1/3\n1/3 0"); }).code(), ErrorCode::IllegalEntry);
  EXPECT_EQ(caught([] { parse_qmat("n 2\n0 0.3\n0.3 0"); }).code(), ErrorCode::IllegalEntry);
  EXPECT_EQ(caught([] { parse_qmat("n 2\n0 -1\n-1 0"); }).code(), ErrorCode::IllegalEntry);

  e = caught([] { parse_qmat("n 2\n0 abc\n1 0"); });
  EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
  EXPECT_EQ(e.location()->line, 2u);
  EXPECT_EQ(e.location()->column, 3u);
  EXPECT_EQ(caught([] { parse_qmat("n 2\n0 1\n"); }).code(), ErrorCode::SyntaxError);
  EXPECT_EQ(caught([] { parse_qmat("n 2\n0 1 0\n1 0 0"); }).code(), ErrorCode::SyntaxError);
  EXPECT_EQ(caught([] { parse_qmat("n 1\n0\n0"); }).code(), ErrorCode::SyntaxError);
  EXPECT_EQ(caught([] { parse_qmat("n 2\n0 1/0\n1 0"); }).code(), ErrorCode::SyntaxError);
}
