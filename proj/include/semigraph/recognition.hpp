#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "semigraph/core.hpp"
#include "semigraph/matrix.hpp"

namespace semigraph {

/// Vertex classes read off a matrix.
///
/// When `m` is semigraphical these are the classes of the semigraph that
/// reconstruct finds (isolated rows allowed), which is the only reading that
/// is right in general: a vertex adjacent to both ends of a distance-2 pair
/// looks like its middle even when another vertex is.
///
/// Otherwise a local rule is applied. An all-zero row is Isolated and a 1/4
/// entry makes a MiddleEnd. Skeleton neighbours (entries 1/4, 1/2, 1) at
/// distance 2 from each other are paired as the two sides of a middle
/// position: a perfect pairing means PureMiddle, no pair at all PureEnd, and
/// anything in between MiddleEnd.
///
/// Throws IllegalEntry, AsymmetricInput or NonzeroDiagonal on malformed input.
std::vector<VertexClass> detect_classes(const SymMatrix& m);
std::vector<VertexClass> detect_classes(const SquareMatrix& m);

enum class RejectReason {
  IllegalEntry,
  AsymmetricInput,
  NonzeroDiagonal,
  BrokenDistanceRun,
  OverlappingEdges,
  CoverageGap,
  EndpointClassMismatch,
};

std::string_view to_string(RejectReason reason) noexcept;

/// Evidence for a rejection, checkable against the input matrix alone.
///
/// - IllegalEntry / AsymmetricInput / NonzeroDiagonal: `indices` = (i, j),
///   `entries` = (a_ij, a_ji).
/// - BrokenDistanceRun: `indices` = (i, j), `entries` = (a_ij); no
///   band-consistent run of length a_ij + 1 joins i and j.
/// - OverlappingEdges: `indices` = (i, j), `runs` = two distinct traced runs
///   that both contain i and j.
/// - CoverageGap: `indices` = (i, j) with a nonzero entry contained in no
///   traced run, or (i) for an all-zero row; `runs` = the traced runs.
/// - EndpointClassMismatch: `indices` = (i, j), `entries` = (a_ij, the entry
///   the traced edges imply); `runs` = the traced edge holding the pair.
struct RejectionWitness {
  std::vector<VertexId> indices;
  std::vector<QScalar> entries;
  std::vector<std::vector<VertexId>> runs;
  std::string detail;
};

struct Accepted {
  Semigraph semigraph;
  std::vector<VertexClass> classes;
  /// True when tracing from end vertices alone produced the edge set; false
  /// when the exact-cover search over all band runs had to resolve it.
  bool traced_directly = false;
  /// Whether the search finished within its budget.
  bool uniqueness_checked = false;
  /// A second semigraph with the same adjacency matrix, when one exists.
  std::optional<Semigraph> alternative;

  bool unique() const noexcept { return uniqueness_checked && !alternative; }
};

struct Rejected {
  RejectReason reason;
  RejectionWitness witness;
};

class RecognitionOutcome {
 public:
  RecognitionOutcome(Accepted a) : value_(std::move(a)) {}
  RecognitionOutcome(Rejected r) : value_(std::move(r)) {}

  bool accepted() const noexcept { return std::holds_alternative<Accepted>(value_); }
  const Accepted& accepted_value() const { return std::get<Accepted>(value_); }
  const Rejected& rejected_value() const { return std::get<Rejected>(value_); }

 private:
  std::variant<Accepted, Rejected> value_;
};

struct RecognitionOptions {
  /// Accept all-zero rows as isolated vertices instead of a CoverageGap.
  bool allow_isolated = false;
  /// Look for a second realization after the first one is found.
  bool check_uniqueness = true;
  /// Node budget of the exact-cover search.
  std::size_t search_budget = 200000;
};

/// Rebuilds the semigraph whose adjacency matrix is `m`.
///
/// Edges are traced from every end-class vertex along runs whose entries
/// follow the edge band pattern (distances 1..r-1 with 1/2 corners at
/// middle-end ends, or a single 1/4), each edge being found once from each
/// end. When those runs do not partition the nonzero entries, an exact-cover
/// search over every band run decides. An Accepted outcome always
/// reproduces `m` exactly.
RecognitionOutcome reconstruct(const SquareMatrix& m, const RecognitionOptions& options = {});
RecognitionOutcome reconstruct(const SymMatrix& m, const RecognitionOptions& options = {});

struct SemigraphicalResult {
  bool semigraphical;
  RecognitionOutcome outcome;
};

/// True iff reconstruct accepts and the rebuilt adjacency equals `m`.
SemigraphicalResult is_semigraphical(const SquareMatrix& m, const RecognitionOptions& options = {});
SemigraphicalResult is_semigraphical(const SymMatrix& m, const RecognitionOptions& options = {});

}  // namespace semigraph
