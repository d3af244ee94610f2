#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "semigraph/core.hpp"

namespace semigraph {

enum class StarFamily { TypeI, TypeII };

/// Parses "I"/"II" (also "1"/"2", "TypeI"/"TypeII"). Throws InvalidFamily.
StarFamily parse_star_family(std::string_view text);
std::string_view to_string(StarFamily family) noexcept;

/// One 3-vertex edge (v2,v1,v3) plus n pendant 2-edges (v1,vj), j = 4..n+3.
/// Vertex vk of the usual labelling is VertexId(k-1).
Semigraph star_type1(std::size_t n);

/// n full 3-edges (v_{2k-1}, v0, v_{2k}) sharing the middle vertex v0.
/// Vertex vk is VertexId(k). Requires n >= 1.
Semigraph star_type2(std::size_t n);

Semigraph star(StarFamily family, std::size_t n);

/// Parameters for random_semigraph.
struct RandomSpec {
  std::size_t vertices = 2;
  std::size_t target_edges = 1;
  std::size_t max_edge_size = 2;
  std::uint64_t seed = 0;
};

/// Seeded rejection sampler for fuzzing.
///
/// The stream is std::mt19937_64 seeded with `seed`; bounded draws use
/// rejection on the raw 64-bit output so that results do not depend on the
/// standard library's distribution classes. Each attempt draws an edge size
/// uniformly from [2, min(max_edge_size, vertices)] and then an ordered tuple
/// of distinct vertices by a partial Fisher-Yates shuffle. Candidates that
/// share a vertex pair with an accepted edge are discarded. Sampling stops at
/// `target_edges` accepted edges or after 200 * target_edges + 100 attempts,
/// so the result may hold fewer edges than requested.
Semigraph random_semigraph(const RandomSpec& spec);

}  // namespace semigraph
