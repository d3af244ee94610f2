#include "semigraph/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace semigraph {

StarFamily parse_star_family(std::string_view text) {
  if (text == "I" || text == "1" || text == "TypeI") return StarFamily::TypeI;
  if (text == "II" || text == "2" || text == "TypeII") return StarFamily::TypeII;
  throw Error(ErrorCode::InvalidFamily, "unknown star family '" + std::string(text) + "'");
}

std::string_view to_string(StarFamily family) noexcept {
  return family == StarFamily::TypeI ? "TypeI" : "TypeII";
}

Semigraph star_type1(std::size_t n) {
  std::vector<std::vector<std::size_t>> edges{{1, 0, 2}};
  for (std::size_t j = 3; j < n + 3; ++j) edges.push_back({0, j});
  return build_semigraph(n + 3, edges);
}

Semigraph star_type2(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "star type II needs n >= 1");
  std::vector<std::vector<std::size_t>> edges;
  for (std::size_t k = 1; k <= n; ++k) edges.push_back({2 * k - 1, 0, 2 * k});
  return build_semigraph(2 * n + 1, edges);
}

Semigraph star(StarFamily family, std::size_t n) {
  switch (family) {
    case StarFamily::TypeI: return star_type1(n);
    case StarFamily::TypeII: return star_type2(n);
  }
  throw Error(ErrorCode::InvalidFamily, "unknown star family");
}

namespace {

// Uniform draw from [0, bound) by rejecting the biased tail of the 64-bit range.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

Semigraph random_semigraph(const RandomSpec& spec) {
  if (spec.vertices < 2) throw Error(ErrorCode::InvalidArgument, "random semigraph needs n >= 2");
  if (spec.max_edge_size < 2) throw Error(ErrorCode::InvalidArgument, "max edge size must be >= 2");

  const std::size_t n = spec.vertices;
  const std::size_t max_size = std::min(spec.max_edge_size, n);
  std::mt19937_64 rng(spec.seed);

  std::set<std::pair<std::size_t, std::size_t>> used;
  std::vector<std::vector<std::size_t>> edges;
  std::vector<std::size_t> pool(n);

  const std::size_t attempts = 200 * spec.target_edges + 100;
  for (std::size_t attempt = 0; attempt < attempts && edges.size() < spec.target_edges; ++attempt) {
    const std::size_t size = 2 + static_cast<std::size_t>(uniform_below(rng, max_size - 1));
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t i = 0; i < size; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(uniform_below(rng, n - i));
      std::swap(pool[i], pool[j]);
    }
    std::vector<std::size_t> candidate(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));

    bool clash = false;
    for (std::size_t a = 0; a < size && !clash; ++a) {
      for (std::size_t b = a + 1; b < size && !clash; ++b) {
        clash = used.count(std::minmax(candidate[a], candidate[b])) != 0;
      }
    }
    if (clash) continue;
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b = a + 1; b < size; ++b) used.insert(std::minmax(candidate[a], candidate[b]));
    }
    edges.push_back(std::move(candidate));
  }
  return build_semigraph(n, edges);
}

}  // namespace semigraph
