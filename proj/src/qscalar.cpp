#include "semigraph/qscalar.hpp"

#include <numeric>

namespace semigraph {

std::string QScalar::to_string() const {
  if (q_ % 4 == 0) return std::to_string(q_ / 4);
  const std::int64_t g = std::gcd(q_, std::int64_t{4});
  return std::to_string(q_ / g) + "/" + std::to_string(4 / g);
}

}  // namespace semigraph
