#include "semigraph/core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

namespace semigraph {

namespace {

std::string label(VertexId v) { return "v" + std::to_string(v.index() + 1); }

std::string label(std::span<const VertexId> vs) {
  std::string out = "(";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += label(vs[i]);
  }
  return out + ")";
}

std::string label(const std::vector<std::size_t>& raw) {
  std::string out = "(";
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (i) out += ",";
    out += "v" + std::to_string(raw[i] + 1);
  }
  return out + ")";
}

}  // namespace

Edge::Edge(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) {
    throw Error(ErrorCode::InvalidArgument, "an edge needs at least two vertices");
  }
  std::vector<VertexId> sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end()) {
    throw Error(ErrorCode::DuplicateVertexInEdge,
                label(*it) + " repeated in edge " + label(vertices_));
  }
  std::vector<VertexId> reversed(vertices_.rbegin(), vertices_.rend());
  if (reversed < vertices_) vertices_ = std::move(reversed);
}

std::optional<std::size_t> Edge::position_of(VertexId v) const noexcept {
  auto it = std::find(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

Semigraph::Semigraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), incidence_(n) {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    for (std::size_t p = 0; p < edges_[e].size(); ++p) {
      incidence_[edges_[e][p].index()].push_back({e, p});
    }
  }
}

std::optional<std::size_t> Semigraph::find_edge(const Edge& e) const noexcept {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || !(*it == e)) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::string_view to_string(VertexClass c) noexcept {
  switch (c) {
    case VertexClass::PureEnd: return "PureEnd";
    case VertexClass::PureMiddle: return "PureMiddle";
    case VertexClass::MiddleEnd: return "MiddleEnd";
    case VertexClass::Isolated: return "Isolated";
  }
  return "Unknown";
}

std::string_view to_string(EdgeClass c) noexcept {
  switch (c) {
    case EdgeClass::Full: return "Full";
    case EdgeClass::HalfOnePartial: return "HalfOnePartial";
    case EdgeClass::HalfTwoPartial: return "HalfTwoPartial";
    case EdgeClass::Quarter: return "Quarter";
  }
  return "Unknown";
}

Semigraph build_semigraph(std::size_t n, const std::vector<std::vector<std::size_t>>& edges) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "a semigraph needs at least one vertex");

  std::vector<Edge> canonical;
  canonical.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& raw = edges[i];
    if (raw.size() < 2) {
      throw Error(ErrorCode::InvalidArgument,
                  "edge " + label(raw) + " has fewer than two vertices", {i});
    }
    for (std::size_t v : raw) {
      if (v >= n) {
        throw Error(ErrorCode::VertexOutOfRange,
                    "vertex v" + std::to_string(v + 1) + " in edge " + label(raw) +
                        " exceeds vertex count " + std::to_string(n),
                    {i});
      }
    }
    std::vector<VertexId> ids;
    ids.reserve(raw.size());
    for (std::size_t v : raw) ids.emplace_back(v);
    try {
      canonical.emplace_back(std::move(ids));
    } catch (const Error& err) {
      throw Error(err.code(), err.detail(), {i});
    }
  }

  // Duplicates first: equal edges would otherwise surface as shared pairs.
  std::map<Edge, std::size_t> seen;
  for (std::size_t i = 0; i < canonical.size(); ++i) {
    auto [it, inserted] = seen.emplace(canonical[i], i);
    if (!inserted) {
      throw Error(ErrorCode::DuplicateEdge,
                  "edge " + label(canonical[i].vertices()) + " appears twice (equal under reversal)",
                  {it->second, i});
    }
  }

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> owner;
  for (std::size_t i = 0; i < canonical.size(); ++i) {
    const auto vs = canonical[i].vertices();
    for (std::size_t a = 0; a < vs.size(); ++a) {
      for (std::size_t b = a + 1; b < vs.size(); ++b) {
        const std::pair<std::size_t, std::size_t> key = std::minmax(vs[a].index(), vs[b].index());
        auto [it, inserted] = owner.emplace(key, i);
        if (!inserted) {
          throw Error(ErrorCode::PairInTwoEdges,
                      "pair (v" + std::to_string(key.first + 1) + ",v" +
                          std::to_string(key.second + 1) + ") lies in edges " +
                          label(canonical[it->second].vertices()) + " and " +
                          label(canonical[i].vertices()),
                      {it->second, i});
        }
      }
    }
  }

  std::sort(canonical.begin(), canonical.end());
  return Semigraph(n, std::move(canonical));
}

VertexClass classify_vertex(const Semigraph& g, VertexId v) {
  if (v.index() >= g.vertex_count()) {
    throw Error(ErrorCode::VertexOutOfRange, label(v) + " is not a vertex");
  }
  bool end = false;
  bool middle = false;
  for (const Incidence& inc : g.incidences(v)) {
    if (g.edge(inc.edge).is_end(inc.position)) {
      end = true;
    } else {
      middle = true;
    }
  }
  if (end && middle) return VertexClass::MiddleEnd;
  if (end) return VertexClass::PureEnd;
  if (middle) return VertexClass::PureMiddle;
  return VertexClass::Isolated;
}

std::vector<VertexClass> classify_vertices(const Semigraph& g) {
  std::vector<VertexClass> out;
  out.reserve(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out.push_back(classify_vertex(g, VertexId(v)));
  return out;
}

EdgeClass classify_edge(const Semigraph& g, const Edge& e) {
  if (!g.find_edge(e)) {
    throw Error(ErrorCode::EdgeNotInGraph, label(e.vertices()) + " is not an edge");
  }
  const bool first = classify_vertex(g, e.front()) == VertexClass::MiddleEnd;
  const bool last = classify_vertex(g, e.back()) == VertexClass::MiddleEnd;
  if (first && last) return e.size() == 2 ? EdgeClass::Quarter : EdgeClass::HalfTwoPartial;
  if (first || last) return EdgeClass::HalfOnePartial;
  return EdgeClass::Full;
}

EdgeCounts edge_counts(const Semigraph& g) {
  EdgeCounts counts;
  for (const Edge& e : g.edges()) {
    switch (classify_edge(g, e)) {
      case EdgeClass::Full: ++counts.m1; break;
      case EdgeClass::Quarter: ++counts.m2; break;
      case EdgeClass::HalfOnePartial: ++counts.m3; break;
      case EdgeClass::HalfTwoPartial: ++counts.m4; break;
    }
  }
  return counts;
}

bool is_connected(const Semigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges()) {
    const std::size_t root = find(e.front().index());
    for (VertexId v : e.vertices()) parent[find(v.index())] = root;
  }
  const std::size_t root = find(0);
  for (std::size_t v = 1; v < n; ++v) {
    if (find(v) != root) return false;
  }
  return true;
}

Semigraph skeleton(const Semigraph& g) {
  std::vector<std::vector<std::size_t>> pairs;
  for (const Edge& e : g.edges()) {
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
      pairs.push_back({e[i].index(), e[i + 1].index()});
    }
  }
  return build_semigraph(g.vertex_count(), pairs);
}

std::size_t rank(const Semigraph& g) {
  if (g.edge_count() == 0) throw Error(ErrorCode::EmptyEdgeSet, "rank of a semigraph without edges");
  std::size_t r = 0;
  for (const Edge& e : g.edges()) r = std::max(r, e.size());
  return r;
}

bool is_simple_graph(const Semigraph& g) noexcept {
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [](const Edge& e) { return e.size() == 2; });
}

}  // namespace semigraph
