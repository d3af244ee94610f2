#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "semigraph/core.hpp"
#include "semigraph/qscalar.hpp"

namespace semigraph {

/// Dense n x n matrix of quarter-rationals with no structural invariant.
/// Holds untrusted input (parsed files, recognition candidates).
class SquareMatrix {
 public:
  explicit SquareMatrix(std::size_t n = 0) : n_(n), data_(n * n) {}
  SquareMatrix(std::size_t n, std::vector<QScalar> row_major);
  static SquareMatrix from_rows(const std::vector<std::vector<QScalar>>& rows);

  std::size_t size() const noexcept { return n_; }
  QScalar at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, QScalar v) { data_[i * n_ + j] = v; }
  std::span<const QScalar> row(std::size_t i) const {
    return std::span<const QScalar>(data_).subspan(i * n_, n_);
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<QScalar> data_;
};

/// First place where a square matrix fails to be symmetric with zero diagonal.
struct StructuralViolation {
  ErrorCode code;  ///< NonzeroDiagonal or AsymmetricInput
  std::size_t row;
  std::size_t col;
  QScalar value;   ///< entry (row, col)
  QScalar mirror;  ///< entry (col, row)
};

/// Row-major scan; the diagonal entry of a row is examined before the
/// entries to its right.
std::optional<StructuralViolation> find_structural_violation(const SquareMatrix& m);

/// Symmetric matrix with zero diagonal. Construction from untrusted data
/// throws AsymmetricInput or NonzeroDiagonal.
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t n = 0) : m_(n) {}
  explicit SymMatrix(SquareMatrix m);
  static SymMatrix from_rows(const std::vector<std::vector<QScalar>>& rows);

  std::size_t size() const noexcept { return m_.size(); }
  QScalar at(std::size_t i, std::size_t j) const { return m_.at(i, j); }
  std::span<const QScalar> row(std::size_t i) const { return m_.row(i); }
  const SquareMatrix& square() const noexcept { return m_; }

  /// Sets (i, j) and (j, i). Throws NonzeroDiagonal for i == j with v != 0.
  void set_pair(std::size_t i, std::size_t j, QScalar v);

  QScalar row_sum(std::size_t i) const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;
  friend SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);
  friend SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);

 private:
  SquareMatrix m_;
};

/// Adjacency matrix: within the unique common edge, the skeleton-path
/// distance; 1/2 on partial half edges; 1/4 on quarter edges; 0 otherwise.
SymMatrix adjacency(const Semigraph& g);

/// 0/1 matrix of consecutively adjacent pairs.
SymMatrix skeleton_adjacency(const Semigraph& g);

/// adjacency(g) - skeleton_adjacency(g).
SymMatrix excess(const Semigraph& g);

/// d = d^S + d^E, the row sums of A^S and A^E.
struct DegreeSplit {
  QScalar total;
  QScalar skeleton_part;
  QScalar excess_part;

  friend bool operator==(const DegreeSplit&, const DegreeSplit&) = default;
};

DegreeSplit degree(const Semigraph& g, VertexId v);

/// Principal submatrix on `indices`, in the given order.
/// Throws IndexOutOfRange, or InvalidArgument for repeated indices.
SymMatrix edge_submatrix(const SymMatrix& a, std::span<const VertexId> indices);

}  // namespace semigraph
