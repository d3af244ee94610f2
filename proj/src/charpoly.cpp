#include "semigraph/charpoly.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace semigraph {

namespace {

using boost::multiprecision::cpp_int;

}  // namespace

RationalPoly::RationalPoly(std::vector<Exact> ascending) : coeffs_(std::move(ascending)) { trim(); }

RationalPoly RationalPoly::linear(const Exact& root) { return RationalPoly({-root, Exact(1)}); }

RationalPoly RationalPoly::monomial(std::size_t power) {
  std::vector<Exact> c(power + 1);
  c[power] = 1;
  return RationalPoly(std::move(c));
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Exact RationalPoly::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Exact(0); }

bool RationalPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

std::size_t RationalPoly::zero_root_multiplicity() const noexcept {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k] == 0) ++k;
  return k;
}

Exact RationalPoly::evaluate(const Exact& x) const {
  Exact acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPoly::evaluate(double x) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->convert_to<double>();
  return acc;
}

std::string RationalPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Exact& c = coeffs_[k];
    if (c == 0) continue;
    const Exact mag = c < 0 ? Exact(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || k == 0) {
      out << mag;
      if (k > 0) out << " ";
    }
    if (k >= 1) out << "x";
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<Exact> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPoly(std::move(c));
}

RationalPoly pow(const RationalPoly& p, std::size_t k) {
  RationalPoly out({Exact(1)});
  for (std::size_t i = 0; i < k; ++i) out = out * p;
  return out;
}

RationalPoly char_poly(const SymMatrix& m) {
  const std::size_t n = m.size();
  std::vector<cpp_int> b(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b[i * n + j] = m.at(i, j).quarters();
  }

  // c[k] is the coefficient of x^k in det(xI - B).
  std::vector<cpp_int> c(n + 1);
  c[n] = 1;
  std::vector<cpp_int> prev(n * n);  // M_{k-1}
  std::vector<cpp_int> next(n * n);
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = B M_{k-1} + c_{n-k+1} I
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        cpp_int s = 0;
        for (std::size_t l = 0; l < n; ++l) {
          if (b[i * n + l] != 0) s += b[i * n + l] * prev[l * n + j];
        }
        if (i == j) s += c[n - k + 1];
        next[i * n + j] = std::move(s);
      }
    }
    // c_{n-k} = -tr(B M_k) / k
    cpp_int trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) trace += b[i * n + l] * next[l * n + i];
    }
    c[n - k] = -trace / static_cast<long long>(k);
    std::swap(prev, next);
  }

  // det(xI - B/4) = 4^-n det(4x I - B), so coefficient k scales by 4^(k-n).
  std::vector<Exact> out(n + 1);
  cpp_int denom = 1;
  for (std::size_t k = n + 1; k-- > 0;) {
    out[k] = Exact(c[k], denom);
    denom *= 4;
  }
  return RationalPoly(std::move(out));
}

RationalPoly star1_charpoly(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "star1_charpoly needs n >= 1");
  const Exact dn(static_cast<long long>(n));
  const RationalPoly cubic({dn / 2, -(dn + 8) / 4, Exact(-2), Exact(1)});
  return RationalPoly::monomial(n - 1) * RationalPoly::linear(Exact(-2)) * cubic;
}

RationalPoly star2_charpoly(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "star2_charpoly needs n >= 1");
  const Exact dn(static_cast<long long>(n));
  const RationalPoly square_minus_four({Exact(-4), Exact(0), Exact(1)});
  const RationalPoly quadratic({-2 * dn, Exact(-2), Exact(1)});
  return RationalPoly::linear(Exact(-2)) * pow(square_minus_four, n - 1) * quadratic;
}

}  // namespace semigraph
