#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "semigraph/matrix.hpp"
#include "semigraph/qscalar.hpp"

namespace semigraph {

/// Polynomial with exact rational coefficients, lowest degree first.
/// Trailing zero coefficients are trimmed; the zero polynomial is empty.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Exact> ascending);

  /// x - root
  static RationalPoly linear(const Exact& root);
  static RationalPoly monomial(std::size_t power);

  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Exact>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^k, zero beyond the degree.
  Exact coefficient(std::size_t k) const;
  bool is_monic() const;
  /// Largest k with x^k dividing the polynomial.
  std::size_t zero_root_multiplicity() const noexcept;

  Exact evaluate(const Exact& x) const;
  double evaluate(double x) const;

  /// "x^4 - 25/4 x^2 - 4 x + 1"
  std::string to_string() const;

  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

 private:
  void trim();
  std::vector<Exact> coeffs_;
};

RationalPoly pow(const RationalPoly& p, std::size_t k);

/// det(xI - M) by the Faddeev-LeVerrier trace recursion, run on the integer
/// matrix 4M so every step is an exact integer division.
RationalPoly char_poly(const SymMatrix& m);

/// x^(n-1) (x+2) (x^3 - 2x^2 - ((n+8)/4) x + n/2), for n >= 1.
RationalPoly star1_charpoly(std::size_t n);

/// (x+2) (x^2-4)^(n-1) (x^2 - 2x - 2n), for n >= 1.
RationalPoly star2_charpoly(std::size_t n);

}  // namespace semigraph
