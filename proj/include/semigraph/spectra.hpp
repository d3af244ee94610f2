#pragma once

#include <cstddef>
#include <vector>

#include "semigraph/core.hpp"
#include "semigraph/generators.hpp"
#include "semigraph/matrix.hpp"

namespace semigraph {

/// A group of eigenvalues merged under the cluster tolerance.
struct EigenCluster {
  double value;  ///< mean of the members
  std::size_t multiplicity;
};

/// Real eigenvalues sorted descending.
struct Spectrum {
  std::vector<double> values;
  /// Merge radius for multiplicities, relative to the spectral radius.
  double cluster_tolerance = 1e-7;

  std::size_t size() const noexcept { return values.size(); }
  double lambda1() const { return values.front(); }
  double spectral_radius() const noexcept;
  /// Consecutive values within cluster_tolerance * max(1, radius) merge.
  std::vector<EigenCluster> clusters() const;
};

/// Cyclic Jacobi diagonalization of a floating copy of `m`.
///
/// Sweeps visit the upper triangle row by row, so the result is reproducible
/// for a fixed build. Stops once the off-diagonal Frobenius norm falls below
/// tol * max(1, Frobenius norm of m). Throws NoConvergence after 100 n^2
/// rotations and InvalidArgument for tol <= 0.
Spectrum eigenvalues(const SymMatrix& m, double tol = 1e-12);

/// Real roots of x^3 + a x^2 + b x + c when all three are real, descending.
/// Uses the trigonometric form and two Newton steps per root. Throws
/// InvalidArgument when the discriminant is not positive.
std::vector<double> real_cubic_roots(double a, double b, double c);

/// Closed-form spectra of the two star families.
///   TypeI:  0 (n-1 times), -2, and the roots of x^3 - 2x^2 - ((n+8)/4)x + n/2
///   TypeII: -2 (n times), 2 (n-1 times), 1 - sqrt(2n+1), 1 + sqrt(2n+1)
/// Requires n >= 1.
Spectrum star_spectra(StarFamily family, std::size_t n);

struct BoundsReport {
  double lambda1 = 0;
  double bound_skeleton = 0;  ///< r(r-1)/2 times the largest skeleton degree
  double bound_delta = 0;     ///< smallest degree, a lower bound
  double bound_trace = 0;     ///< sqrt(trace(A^2) (n-1)/n), trace taken directly
  /// The same bound with the published trace closed form; comparison only.
  double bound_trace_published = 0;
  bool holds_skeleton = false;
  bool holds_delta = false;
  bool holds_trace = false;
  bool connected = false;
  /// Every edge has two vertices, so bound_trace is sqrt(2m(n-1)/n).
  bool is_graph = false;

  bool all_hold() const noexcept { return holds_skeleton && holds_delta && holds_trace; }
};

/// Slack used by the holds flags.
inline constexpr double kBoundSlack = 1e-9;

/// Throws EmptyEdgeSet for a semigraph without edges.
BoundsReport bounds(const Semigraph& g, const Spectrum& spectrum);

}  // namespace semigraph
