#include "semigraph/identities.hpp"

#include "semigraph/matrix.hpp"

namespace semigraph {

IdentityReport sum_identities(const Semigraph& g) {
  IdentityReport rep;
  rep.counts = edge_counts(g);

  const SymMatrix a = adjacency(g);
  std::int64_t quarter_sum = 0;
  std::int64_t sixteenth_sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (QScalar v : a.row(i)) {
      quarter_sum += v.quarters();
      sixteenth_sum += v.quarters() * v.quarters();
    }
  }
  rep.degree_sum_direct = Exact(quarter_sum) / 4;
  rep.trace_sq_direct = Exact(sixteenth_sum) / 16;

  Exact cubic_part = 0;
  Exact quartic_part = 0;
  for (const Edge& e : g.edges()) {
    const auto r = static_cast<std::int64_t>(e.size());
    rep.edge_sizes.push_back(e.size());
    cubic_part += Exact(r * (r * r - 1)) / 3;
    quartic_part += Exact(r * r * (r * r - 1)) / 6;
  }

  const Exact m2(static_cast<std::int64_t>(rep.counts.m2));
  const Exact m3(static_cast<std::int64_t>(rep.counts.m3));
  const Exact m4(static_cast<std::int64_t>(rep.counts.m4));

  rep.degree_sum_published = cubic_part - Exact(3) / 2 * m2 - Exact(1) / 2 * m3 - m4;
  rep.degree_sum_corrected = cubic_part - Exact(3) / 2 * m2 - m3 - 2 * m4;
  rep.trace_sq_published = quartic_part - Exact(15) / 8 * m2 - Exact(3) / 4 * m3 - Exact(1) / 2 * m4;
  rep.trace_sq_corrected = quartic_part - Exact(15) / 8 * m2 - Exact(3) / 2 * m3 - 3 * m4;
  return rep;
}

}  // namespace semigraph
