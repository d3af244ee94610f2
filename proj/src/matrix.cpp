#include "semigraph/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace semigraph {

SquareMatrix::SquareMatrix(std::size_t n, std::vector<QScalar> row_major)
    : n_(n), data_(std::move(row_major)) {
  if (data_.size() != n * n) {
    throw Error(ErrorCode::InvalidArgument, "matrix data does not hold n*n entries");
  }
}

SquareMatrix SquareMatrix::from_rows(const std::vector<std::vector<QScalar>>& rows) {
  const std::size_t n = rows.size();
  std::vector<QScalar> data;
  data.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw Error(ErrorCode::InvalidArgument, "matrix rows must have n entries");
    data.insert(data.end(), r.begin(), r.end());
  }
  return SquareMatrix(n, std::move(data));
}

std::optional<StructuralViolation> find_structural_violation(const SquareMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m.at(i, i).is_zero()) {
      return StructuralViolation{ErrorCode::NonzeroDiagonal, i, i, m.at(i, i), m.at(i, i)};
    }
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (m.at(i, j) != m.at(j, i)) {
        return StructuralViolation{ErrorCode::AsymmetricInput, i, j, m.at(i, j), m.at(j, i)};
      }
    }
  }
  return std::nullopt;
}

SymMatrix::SymMatrix(SquareMatrix m) : m_(std::move(m)) {
  if (auto bad = find_structural_violation(m_)) {
    const std::string where = "(" + std::to_string(bad->row + 1) + "," + std::to_string(bad->col + 1) + ")";
    if (bad->code == ErrorCode::NonzeroDiagonal) {
      throw Error(bad->code, "diagonal entry " + where + " is " + bad->value.to_string());
    }
    throw Error(bad->code, "entry " + where + " is " + bad->value.to_string() +
                               " but its mirror is " + bad->mirror.to_string());
  }
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<QScalar>>& rows) {
  return SymMatrix(SquareMatrix::from_rows(rows));
}

void SymMatrix::set_pair(std::size_t i, std::size_t j, QScalar v) {
  if (i == j && !v.is_zero()) throw Error(ErrorCode::NonzeroDiagonal, "diagonal entries stay zero");
  m_.set(i, j, v);
  m_.set(j, i, v);
}

QScalar SymMatrix::row_sum(std::size_t i) const {
  QScalar s;
  for (QScalar v : row(i)) s += v;
  return s;
}

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::InvalidArgument, "matrix sizes differ");
  SymMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) out.set_pair(i, j, a.at(i, j) + b.at(i, j));
  }
  return out;
}

SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::InvalidArgument, "matrix sizes differ");
  SymMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) out.set_pair(i, j, a.at(i, j) - b.at(i, j));
  }
  return out;
}

SymMatrix adjacency(const Semigraph& g) {
  SymMatrix a(g.vertex_count());
  const auto classes = classify_vertices(g);
  auto middle_end = [&](VertexId v) { return classes[v.index()] == VertexClass::MiddleEnd; };

  for (const Edge& e : g.edges()) {
    const std::size_t r = e.size();
    const bool first = middle_end(e.front());
    const bool last = middle_end(e.back());
    if (r == 2 && first && last) {
      a.set_pair(e[0].index(), e[1].index(), QScalar::quarter());
      continue;
    }
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = i + 1; j < r; ++j) {
        QScalar value = QScalar::from_int(static_cast<std::int64_t>(j - i));
        const bool head_corner = i == 0 && j == 1 && first;
        const bool tail_corner = i == r - 2 && j == r - 1 && last;
        if (head_corner || tail_corner) value = QScalar::half();
        a.set_pair(e[i].index(), e[j].index(), value);
      }
    }
  }
  return a;
}

SymMatrix skeleton_adjacency(const Semigraph& g) {
  SymMatrix s(g.vertex_count());
  for (const Edge& e : g.edges()) {
    for (std::size_t i = 0; i + 1 < e.size(); ++i) {
      s.set_pair(e[i].index(), e[i + 1].index(), QScalar::one());
    }
  }
  return s;
}

SymMatrix excess(const Semigraph& g) { return adjacency(g) - skeleton_adjacency(g); }

DegreeSplit degree(const Semigraph& g, VertexId v) {
  if (v.index() >= g.vertex_count()) {
    throw Error(ErrorCode::VertexOutOfRange, "vertex v" + std::to_string(v.index() + 1));
  }
  const SymMatrix a = adjacency(g);
  const SymMatrix s = skeleton_adjacency(g);
  const SymMatrix e = a - s;
  return DegreeSplit{a.row_sum(v.index()), s.row_sum(v.index()), e.row_sum(v.index())};
}

SymMatrix edge_submatrix(const SymMatrix& a, std::span<const VertexId> indices) {
  std::vector<VertexId> sorted(indices.begin(), indices.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::InvalidArgument, "submatrix indices must be distinct");
  }
  for (VertexId v : indices) {
    if (v.index() >= a.size()) {
      throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(v.index() + 1) +
                                                  " outside a " + std::to_string(a.size()) +
                                                  "x" + std::to_string(a.size()) + " matrix");
    }
  }
  SymMatrix sub(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t j = i + 1; j < indices.size(); ++j) {
      sub.set_pair(i, j, a.at(indices[i].index(), indices[j].index()));
    }
  }
  return sub;
}

}  // namespace semigraph
