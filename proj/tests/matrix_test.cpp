#include <gtest/gtest.h>

#include "corpus.hpp"
#include "semigraph/identities.hpp"
#include "semigraph/io.hpp"
#include "semigraph/matrix.hpp"

using namespace semigraph;
using namespace semigraph::testing;

namespace {

QScalar q(std::int64_t quarters) { return QScalar::from_quarters(quarters); }

std::vector<VertexId> ids(std::initializer_list<std::size_t> one_based_labels) {
  std::vector<VertexId> out;
  for (std::size_t v : one_based_labels) out.emplace_back(v - 1);
  return out;
}

}  // namespace

TEST(QScalar, TextAndAlphabet) {
  EXPECT_EQ(q(1).to_string(), "1/4");
  EXPECT_EQ(q(2).to_string(), "1/2");
  EXPECT_EQ(q(-3).to_string(), "-3/4");
  EXPECT_EQ(q(10).to_string(), "5/2");
  EXPECT_EQ(q(12).to_string(), "3");
  EXPECT_EQ(q(0).to_string(), "0");
  EXPECT_TRUE(in_adjacency_alphabet(q(0)));
  EXPECT_TRUE(in_adjacency_alphabet(q(1)));
  EXPECT_TRUE(in_adjacency_alphabet(q(2)));
  EXPECT_TRUE(in_adjacency_alphabet(q(40)));
  EXPECT_FALSE(in_adjacency_alphabet(q(3)));
  EXPECT_FALSE(in_adjacency_alphabet(q(6)));
  EXPECT_FALSE(in_adjacency_alphabet(q(-4)));
}

TEST(SymMatrix, RejectsStructuralViolations) {
  EXPECT_THROW(from_quarters({{0, 4}, {8, 0}}), Error);
  try {
    from_quarters({{4, 4}, {4, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonzeroDiagonal);
  }
  SymMatrix m(3);
  EXPECT_THROW(m.set_pair(1, 1, QScalar::one()), Error);
}

TEST(Adjacency, FigureFiveMatchesPrintedMatrix) {
  const SymMatrix a = adjacency(golden());
  EXPECT_EQ(a, parse_qmat(read_fixture("golden.qmat")));
  EXPECT_EQ(a.at(0, 4), QScalar::from_int(4));
  EXPECT_EQ(a.at(1, 6), QScalar::half());
  EXPECT_EQ(a.at(5, 6), QScalar::quarter());
  EXPECT_EQ(a.at(2, 8), QScalar::half());
}

TEST(Adjacency, SmallCases) {
  EXPECT_EQ(adjacency(one_based(2, {{1, 2}})), from_quarters({{0, 4}, {4, 0}}));
  EXPECT_EQ(adjacency(star_type1(1)),
            from_quarters({{0, 4, 4, 2}, {4, 0, 8, 0}, {4, 8, 0, 0}, {2, 0, 0, 0}}));
  const SymMatrix s2 = adjacency(star_type2(2));
  for (std::size_t j = 1; j < 5; ++j) EXPECT_EQ(s2.at(0, j), QScalar::one());
  EXPECT_EQ(s2.at(1, 2), QScalar::from_int(2));
  EXPECT_EQ(s2.at(3, 4), QScalar::from_int(2));
  EXPECT_EQ(s2.at(1, 3), QScalar());
}

TEST(Adjacency, AgreesWithDefinitionOracle) {
  for (const Semigraph& g : fuzz_corpus(500)) {
    EXPECT_EQ(adjacency(g).square(), oracle_adjacency(g));
  }
}

TEST(Adjacency, EntryAndBandProperties) {
  for (const Semigraph& g : fuzz_corpus(300)) {
    const SymMatrix a = adjacency(g);
    const auto classes = classify_vertices(g);
    const std::int64_t n = static_cast<std::int64_t>(g.vertex_count());
    std::size_t quarter_entries = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_TRUE(a.at(i, i).is_zero());
      for (std::size_t j = 0; j < a.size(); ++j) {
        const QScalar v = a.at(i, j);
        EXPECT_EQ(v, a.at(j, i));
        EXPECT_TRUE(in_adjacency_alphabet(v));
        if (v.is_integer()) EXPECT_LE(v.integer(), n - 1);
        quarter_entries += v == QScalar::quarter();
      }
    }
    const EdgeCounts c = edge_counts(g);
    EXPECT_EQ(quarter_entries, 2 * c.m2);
    for (const Edge& e : g.edges()) {
      const std::size_t r = e.size();
      const SymMatrix sub = edge_submatrix(a, e.vertices());
      const bool first = classes[e.front().index()] == VertexClass::MiddleEnd;
      const bool last = classes[e.back().index()] == VertexClass::MiddleEnd;
      if (r == 2 && first && last) {
        EXPECT_EQ(sub.at(0, 1), QScalar::quarter());
        continue;
      }
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
          QScalar expected = QScalar::from_int(static_cast<std::int64_t>(j - i));
          if ((i == 0 && j == 1 && first) || (i == r - 2 && j == r - 1 && last)) expected = QScalar::half();
          EXPECT_EQ(sub.at(i, j), expected);
        }
      }
    }
  }
}

TEST(Decomposition, FigureSix) {
  const Semigraph g = split();
  EXPECT_EQ(adjacency(g), parse_qmat(read_fixture("split.qmat")));
  EXPECT_EQ(skeleton_adjacency(g), parse_qmat(read_fixture("split-skeleton.qmat")));
  EXPECT_EQ(excess(g).square(), parse_qmat_raw(read_fixture("split-excess.qmat")));
  EXPECT_EQ(skeleton_adjacency(g) + excess(g), adjacency(g));
}

TEST(Decomposition, HoldsOnCorpus) {
  for (const Semigraph& g : fuzz_corpus(300)) {
    const SymMatrix s = skeleton_adjacency(g);
    EXPECT_EQ(s + excess(g), adjacency(g));
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (QScalar v : s.row(i)) EXPECT_TRUE(v.is_zero() || v == QScalar::one());
    }
  }
}

TEST(Decomposition, SimpleGraphHasZeroExcess) {
  EXPECT_EQ(excess(one_based(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}})), SymMatrix(4));
  EXPECT_EQ(skeleton_adjacency(one_based(3, {{1, 2, 3}})),
            from_quarters({{0, 4, 0}, {4, 0, 4}, {0, 4, 0}}));
}

TEST(Decomposition, QuarterEdgeExcess) {
  // (2,5) is a quarter edge: both ends are interior to the 3-edges.
  const Semigraph g = one_based(6, {{1, 2, 3}, {4, 5, 6}, {2, 5}});
  const SymMatrix e = excess(g);
  EXPECT_EQ(e.at(1, 4), q(-3));
  EXPECT_EQ(edge_submatrix(e, ids({2, 5})), from_quarters({{0, -3}, {-3, 0}}));
}

TEST(Degree, Examples) {
  const DegreeSplit d = degree(split(), VertexId(1));
  EXPECT_EQ(d.total, q(18));
  EXPECT_EQ(d.skeleton_part, QScalar::from_int(3));
  EXPECT_EQ(d.excess_part, q(6));
  EXPECT_EQ(degree(mixed(), VertexId(9)), (DegreeSplit{}));
  EXPECT_EQ(degree(golden(), VertexId(8)).total, QScalar::half());
  EXPECT_THROW(degree(golden(), VertexId(9)), Error);
}

TEST(Degree, SplitsAndSumsOnCorpus) {
  for (const Semigraph& g : fuzz_corpus(200)) {
    const SymMatrix a = adjacency(g);
    Exact sum = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      const DegreeSplit d = degree(g, VertexId(v));
      EXPECT_EQ(d.total, d.skeleton_part + d.excess_part);
      EXPECT_TRUE(d.skeleton_part.is_integer());
      EXPECT_EQ(d.total, a.row_sum(v));
      sum += d.total.to_exact();
    }
    EXPECT_EQ(sum, sum_identities(g).degree_sum_direct);
  }
}

TEST(EdgeSubmatrix, Examples) {
  const SymMatrix a = adjacency(golden());
  EXPECT_EQ(edge_submatrix(a, ids({2, 7, 8})), from_quarters({{0, 2, 8}, {2, 0, 4}, {8, 4, 0}}));
  EXPECT_EQ(edge_submatrix(a, ids({6, 7})), from_quarters({{0, 1}, {1, 0}}));
  EXPECT_EQ(edge_submatrix(a, ids({1, 2, 3, 4, 5, 6, 7, 8, 9})), a);
  try {
    edge_submatrix(a, ids({1, 10}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
  }
  EXPECT_THROW(edge_submatrix(a, ids({1, 1})), Error);
}

TEST(Identities, FigureFive) {
  const IdentityReport r = sum_identities(golden());
  EXPECT_EQ(r.degree_sum_direct, Exact(113) / 2);
  EXPECT_EQ(r.trace_sq_direct, Exact(985) / 8);
  EXPECT_EQ(r.degree_sum_published, Exact(115) / 2);
  EXPECT_EQ(r.trace_sq_published, Exact(997) / 8);
  EXPECT_EQ(r.degree_sum_published_excess(), Exact(1));
  EXPECT_EQ(r.trace_sq_published_excess(), Exact(3) / 2);
  EXPECT_EQ(r.edge_sizes.size(), 5u);
}

TEST(Identities, SimpleGraphs) {
  const Semigraph g = one_based(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 3}});
  const IdentityReport r = sum_identities(g);
  EXPECT_EQ(r.degree_sum_direct, Exact(12));
  EXPECT_EQ(r.trace_sq_direct, Exact(12));
  EXPECT_EQ(r.degree_sum_published, r.degree_sum_direct);
  EXPECT_EQ(r.trace_sq_published, r.trace_sq_direct);
  EXPECT_EQ(sum_identities(star_type2(1)).trace_sq_direct, Exact(12));
}

TEST(Identities, CorrectedFormsAreExactOnCorpus) {
  for (const Semigraph& g : fuzz_corpus(500)) {
    const IdentityReport r = sum_identities(g);
    const SquareMatrix oracle = oracle_adjacency(g);
    Exact row_sum = 0;
    Exact squares = 0;
    for (std::size_t i = 0; i < oracle.size(); ++i) {
      for (QScalar v : oracle.row(i)) {
        row_sum += v.to_exact();
        squares += v.to_exact() * v.to_exact();
      }
    }
    ASSERT_EQ(r.degree_sum_direct, row_sum);
    ASSERT_EQ(r.trace_sq_direct, squares);
    EXPECT_EQ(r.degree_sum_corrected, r.degree_sum_direct);
    EXPECT_EQ(r.trace_sq_corrected, r.trace_sq_direct);
    const Exact m3(static_cast<long long>(r.counts.m3));
    const Exact m4(static_cast<long long>(r.counts.m4));
    EXPECT_EQ(r.degree_sum_published_excess(), m3 / 2 + m4);
    EXPECT_EQ(r.trace_sq_published_excess(), Exact(3) / 4 * m3 + Exact(5) / 2 * m4);
  }
}
