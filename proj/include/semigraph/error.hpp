#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace semigraph {

enum class ErrorCode {
  InvalidArgument,
  DuplicateVertexInEdge,
  PairInTwoEdges,
  VertexOutOfRange,
  DuplicateEdge,
  EdgeNotInGraph,
  EmptyEdgeSet,
  IndexOutOfRange,
  IllegalEntry,
  AsymmetricInput,
  NonzeroDiagonal,
  NoConvergence,
  InvalidFamily,
  SyntaxError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// 1-based position in a text document. A zero column means "whole line".
struct TextLocation {
  std::size_t line = 0;
  std::size_t column = 0;
};

/// Exception type thrown by every module of the library.
///
/// The message always starts with the error code name so that command line
/// diagnostics can be grepped. `edge_indices()` refers to positions in the
/// edge list handed to `build_semigraph`, which lets parsers map a failure
/// back to a source line.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string_view detail,
        std::vector<std::size_t> edge_indices = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }
  const std::optional<TextLocation>& location() const noexcept { return location_; }
  const std::vector<std::size_t>& edge_indices() const noexcept { return edge_indices_; }

  /// Copy of this error annotated with a source position.
  Error at(TextLocation location) const;

 private:
  Error(ErrorCode code, std::string detail, std::vector<std::size_t> edge_indices,
        std::optional<TextLocation> location);

  static std::string compose(ErrorCode code, const std::string& detail,
                             const std::optional<TextLocation>& location);

  ErrorCode code_;
  std::string detail_;
  std::vector<std::size_t> edge_indices_;
  std::optional<TextLocation> location_;
};

}  // namespace semigraph
