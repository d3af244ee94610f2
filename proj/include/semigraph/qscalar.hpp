#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace semigraph {

/// Exact rational used wherever values leave the quarter grid
/// (squared entries, closed-form identity constants, polynomial coefficients).
using Exact = boost::multiprecision::cpp_rational;

/// Exact rational with denominator 4: the value is quarters() / 4.
class QScalar {
 public:
  constexpr QScalar() = default;

  static constexpr QScalar from_quarters(std::int64_t q) { return QScalar(q); }
  static constexpr QScalar from_int(std::int64_t v) { return QScalar(4 * v); }
  static constexpr QScalar quarter() { return QScalar(1); }
  static constexpr QScalar half() { return QScalar(2); }
  static constexpr QScalar one() { return QScalar(4); }

  constexpr std::int64_t quarters() const noexcept { return q_; }
  constexpr bool is_zero() const noexcept { return q_ == 0; }
  constexpr bool is_integer() const noexcept { return q_ % 4 == 0; }
  /// Integer value; only meaningful when is_integer().
  constexpr std::int64_t integer() const noexcept { return q_ / 4; }

  double to_double() const noexcept { return static_cast<double>(q_) / 4.0; }
  Exact to_exact() const { return Exact(q_) / 4; }

  /// "0", "3", "1/4", "1/2", "-3/4", "5/2" ...
  std::string to_string() const;

  constexpr QScalar operator-() const { return QScalar(-q_); }
  constexpr QScalar& operator+=(QScalar o) { q_ += o.q_; return *this; }
  constexpr QScalar& operator-=(QScalar o) { q_ -= o.q_; return *this; }
  friend constexpr QScalar operator+(QScalar a, QScalar b) { return a += b; }
  friend constexpr QScalar operator-(QScalar a, QScalar b) { return a -= b; }
  friend constexpr auto operator<=>(QScalar, QScalar) = default;

 private:
  constexpr explicit QScalar(std::int64_t q) : q_(q) {}
  std::int64_t q_ = 0;
};

/// True for the adjacency alphabet {0, 1/4, 1/2} and positive integers.
/// The upper bound n - 1 is a structural property checked by recognition.
constexpr bool in_adjacency_alphabet(QScalar v) noexcept {
  const std::int64_t q = v.quarters();
  return q == 0 || q == 1 || q == 2 || (q > 0 && q % 4 == 0);
}

}  // namespace semigraph
