#pragma once

#include <cstddef>
#include <vector>

#include "semigraph/core.hpp"
#include "semigraph/qscalar.hpp"

namespace semigraph {

/// Degree-sum and trace(A^2) computed three ways.
///
/// `*_direct` come from the adjacency matrix itself (row sums, entrywise
/// squares) and are the ground truth. `*_published` evaluate the published
/// closed forms
///   sum d   = 1/3 sum r(r^2-1) - 3/2 m2 - 1/2 m3 - m4
///   tr A^2  = 1/6 sum r^2(r^2-1) - 15/8 m2 - 3/4 m3 - 1/2 m4
/// verbatim. `*_corrected` discount both mirrored entries of every partial
/// half edge:
///   sum d   = 1/3 sum r(r^2-1) - 3/2 m2 - m3 - 2 m4
///   tr A^2  = 1/6 sum r^2(r^2-1) - 15/8 m2 - 3/2 m3 - 3 m4
/// The corrected forms equal the direct values for every semigraph.
struct IdentityReport {
  Exact degree_sum_direct;
  Exact degree_sum_published;
  Exact degree_sum_corrected;
  Exact trace_sq_direct;
  Exact trace_sq_published;
  Exact trace_sq_corrected;
  std::vector<std::size_t> edge_sizes;
  EdgeCounts counts;

  Exact degree_sum_published_excess() const { return degree_sum_published - degree_sum_direct; }
  Exact trace_sq_published_excess() const { return trace_sq_published - trace_sq_direct; }
};

IdentityReport sum_identities(const Semigraph& g);

}  // namespace semigraph
