#include "semigraph/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "semigraph/identities.hpp"

namespace semigraph {

double Spectrum::spectral_radius() const noexcept {
  double r = 0;
  for (double v : values) r = std::max(r, std::abs(v));
  return r;
}

std::vector<EigenCluster> Spectrum::clusters() const {
  const double radius = cluster_tolerance * std::max(1.0, spectral_radius());
  std::vector<EigenCluster> out;
  double sum = 0;
  double previous = 0;
  for (double v : values) {
    if (!out.empty() && previous - v <= radius) {
      sum += v;
      auto& c = out.back();
      ++c.multiplicity;
      c.value = sum / static_cast<double>(c.multiplicity);
    } else {
      out.push_back({v, 1});
      sum = v;
    }
    previous = v;
  }
  return out;
}

Spectrum eigenvalues(const SymMatrix& m, double tol) {
  if (!(tol > 0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  const std::size_t n = m.size();
  std::vector<double> a(n * n);
  double norm_sq = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = m.at(i, j).to_double();
      norm_sq += a[i * n + j] * a[i * n + j];
    }
  }
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  auto off_norm = [&] {
    double s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) s += 2 * at(i, j) * at(i, j);
    }
    return std::sqrt(s);
  };

  const double target = tol * std::max(1.0, std::sqrt(norm_sq));
  const std::size_t cap = 100 * n * n;
  std::size_t rotations = 0;
  while (off_norm() > target) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0) continue;
        if (++rotations > cap) {
          throw Error(ErrorCode::NoConvergence,
                      "Jacobi sweeps exceeded " + std::to_string(cap) + " rotations");
        }
        const double theta = (at(q, q) - at(p, p)) / (2 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1 / std::hypot(t, 1.0);
        const double s = t * c;
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = at(q, p) = 0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p);
          const double arq = at(r, q);
          at(r, p) = at(p, r) = c * arp - s * arq;
          at(r, q) = at(q, r) = s * arp + c * arq;
        }
      }
    }
  }

  Spectrum out;
  out.values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.values.push_back(at(i, i));
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

std::vector<double> real_cubic_roots(double a, double b, double c) {
  const double p = b - a * a / 3;
  const double q = 2 * a * a * a / 27 - a * b / 3 + c;
  const double disc = -(4 * p * p * p + 27 * q * q);
  if (!(disc > 0)) {
    throw Error(ErrorCode::InvalidArgument, "cubic does not have three distinct real roots");
  }
  const double amplitude = 2 * std::sqrt(-p / 3);
  const double phi = std::acos(std::clamp(3 * q / (2 * p) * std::sqrt(-3 / p), -1.0, 1.0)) / 3;
  std::vector<double> roots;
  for (int k = 0; k < 3; ++k) {
    double x = amplitude * std::cos(phi - 2 * std::numbers::pi * k / 3) - a / 3;
    for (int step = 0; step < 2; ++step) {
      const double f = ((x + a) * x + b) * x + c;
      const double df = (3 * x + 2 * a) * x + b;
      if (df == 0) break;
      x -= f / df;
    }
    roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return roots;
}

Spectrum star_spectra(StarFamily family, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "star spectra need n >= 1");
  Spectrum out;
  const double dn = static_cast<double>(n);
  if (family == StarFamily::TypeI) {
    out.values.assign(n - 1, 0.0);
    out.values.push_back(-2.0);
    for (double r : real_cubic_roots(-2.0, -(dn + 8) / 4, dn / 2)) out.values.push_back(r);
  } else {
    out.values.assign(n, -2.0);
    out.values.insert(out.values.end(), n - 1, 2.0);
    const double root = std::sqrt(2 * dn + 1);
    out.values.push_back(1 - root);
    out.values.push_back(1 + root);
  }
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

BoundsReport bounds(const Semigraph& g, const Spectrum& spectrum) {
  const std::size_t r = rank(g);
  const std::size_t n = g.vertex_count();
  if (spectrum.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "spectrum size does not match the vertex count");
  }
  const SymMatrix a = adjacency(g);
  const SymMatrix s = skeleton_adjacency(g);

  QScalar max_skeleton;
  QScalar min_degree = a.row_sum(0);
  for (std::size_t v = 0; v < n; ++v) {
    max_skeleton = std::max(max_skeleton, s.row_sum(v));
    min_degree = std::min(min_degree, a.row_sum(v));
  }
  const IdentityReport ids = sum_identities(g);
  const double scale = static_cast<double>(n - 1) / static_cast<double>(n);
  const double trace = ids.trace_sq_direct.convert_to<double>();
  const double trace_published = ids.trace_sq_published.convert_to<double>();

  BoundsReport out;
  out.lambda1 = spectrum.lambda1();
  out.bound_skeleton = static_cast<double>(r * (r - 1) / 2) * max_skeleton.to_double();
  out.bound_delta = min_degree.to_double();
  out.bound_trace = std::sqrt(trace * scale);
  out.bound_trace_published = std::sqrt(std::max(0.0, trace_published) * scale);
  out.holds_skeleton = out.lambda1 <= out.bound_skeleton + kBoundSlack;
  out.holds_delta = out.bound_delta <= out.lambda1 + kBoundSlack;
  out.holds_trace = out.lambda1 <= out.bound_trace + kBoundSlack;
  out.connected = is_connected(g);
  out.is_graph = is_simple_graph(g);
  return out;
}

}  // namespace semigraph
