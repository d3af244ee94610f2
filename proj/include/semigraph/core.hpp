#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "semigraph/error.hpp"

namespace semigraph {

/// Zero-based vertex index. External text formats use 1-based labels.
class VertexId {
 public:
  constexpr VertexId() = default;
  constexpr explicit VertexId(std::size_t index) : index_(index) {}

  constexpr std::size_t index() const noexcept { return index_; }

  friend constexpr auto operator<=>(const VertexId&, const VertexId&) = default;

 private:
  std::size_t index_ = 0;
};

/// An ordered tuple of at least two distinct vertices, stored in canonical
/// orientation: the lexicographically smaller of the sequence and its
/// reversal.
class Edge {
 public:
  /// Canonicalizes `vertices`. Throws InvalidArgument for fewer than two
  /// vertices and DuplicateVertexInEdge for repeats.
  explicit Edge(std::vector<VertexId> vertices);

  std::size_t size() const noexcept { return vertices_.size(); }
  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  VertexId operator[](std::size_t i) const { return vertices_[i]; }
  VertexId front() const { return vertices_.front(); }
  VertexId back() const { return vertices_.back(); }

  /// Position of `v` inside the edge, if present.
  std::optional<std::size_t> position_of(VertexId v) const noexcept;
  bool contains(VertexId v) const noexcept { return position_of(v).has_value(); }
  bool is_end(std::size_t position) const noexcept {
    return position == 0 || position + 1 == vertices_.size();
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;

 private:
  std::vector<VertexId> vertices_;
};

/// Membership of a vertex in an edge.
struct Incidence {
  std::size_t edge = 0;      ///< index into Semigraph::edges()
  std::size_t position = 0;  ///< position inside that edge
};

/// Immutable semigraph: a vertex count and a sorted set of canonical edges,
/// any two of which share at most one vertex.
class Semigraph {
 public:
  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  std::span<const Incidence> incidences(VertexId v) const { return incidence_.at(v.index()); }

  /// Index of `e` in edges(), if the edge belongs to this semigraph.
  std::optional<std::size_t> find_edge(const Edge& e) const noexcept;

  friend bool operator==(const Semigraph& a, const Semigraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  friend Semigraph build_semigraph(std::size_t n, const std::vector<std::vector<std::size_t>>& edges);

  Semigraph(std::size_t n, std::vector<Edge> edges);

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> incidence_;
};

enum class VertexClass { PureEnd, PureMiddle, MiddleEnd, Isolated };
enum class EdgeClass { Full, HalfOnePartial, HalfTwoPartial, Quarter };

std::string_view to_string(VertexClass c) noexcept;
std::string_view to_string(EdgeClass c) noexcept;

/// Number of edges per class: m1 full, m2 quarter, m3 half edges with one
/// partial half edge, m4 half edges with two.
struct EdgeCounts {
  std::size_t m1 = 0;
  std::size_t m2 = 0;
  std::size_t m3 = 0;
  std::size_t m4 = 0;

  std::size_t total() const noexcept { return m1 + m2 + m3 + m4; }
  friend bool operator==(const EdgeCounts&, const EdgeCounts&) = default;
};

/// Validates and canonicalizes a 0-based edge list.
///
/// Errors: InvalidArgument (n == 0 or an edge shorter than 2),
/// VertexOutOfRange, DuplicateVertexInEdge, DuplicateEdge (equal under
/// reversal) and PairInTwoEdges (two edges sharing two or more vertices).
/// Error::edge_indices() names the offending input edges.
Semigraph build_semigraph(std::size_t n, const std::vector<std::vector<std::size_t>>& edges);

VertexClass classify_vertex(const Semigraph& g, VertexId v);

/// Throws EdgeNotInGraph when `e` is not an edge of `g`.
EdgeClass classify_edge(const Semigraph& g, const Edge& e);

std::vector<VertexClass> classify_vertices(const Semigraph& g);
EdgeCounts edge_counts(const Semigraph& g);

/// Connectivity through chains of edges that pairwise share one vertex.
/// A single vertex is connected; any isolated vertex among several is not.
bool is_connected(const Semigraph& g);

/// The simple graph joining consecutively adjacent vertices, as a semigraph
/// whose edges all have size 2.
Semigraph skeleton(const Semigraph& g);

/// Size of the largest edge. Throws EmptyEdgeSet.
std::size_t rank(const Semigraph& g);

/// True when every edge has size 2 and no vertex is a middle vertex.
bool is_simple_graph(const Semigraph& g) noexcept;

}  // namespace semigraph
