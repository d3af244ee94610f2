#include "semigraph/error.hpp"

#include <utility>

namespace semigraph {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DuplicateVertexInEdge: return "DuplicateVertexInEdge";
    case ErrorCode::PairInTwoEdges: return "PairInTwoEdges";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::EdgeNotInGraph: return "EdgeNotInGraph";
    case ErrorCode::EmptyEdgeSet: return "EmptyEdgeSet";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::IllegalEntry: return "IllegalEntry";
    case ErrorCode::AsymmetricInput: return "AsymmetricInput";
    case ErrorCode::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::InvalidFamily: return "InvalidFamily";
    case ErrorCode::SyntaxError: return "SyntaxError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string_view detail, std::vector<std::size_t> edge_indices)
    : Error(code, std::string(detail), std::move(edge_indices), std::nullopt) {}

Error::Error(ErrorCode code, std::string detail, std::vector<std::size_t> edge_indices,
             std::optional<TextLocation> location)
    : std::runtime_error(compose(code, detail, location)),
      code_(code),
      detail_(std::move(detail)),
      edge_indices_(std::move(edge_indices)),
      location_(location) {}

Error Error::at(TextLocation location) const {
  return Error(code_, detail_, edge_indices_, location);
}

std::string Error::compose(ErrorCode code, const std::string& detail,
                           const std::optional<TextLocation>& location) {
  std::string out;
  if (location) {
    out += "line " + std::to_string(location->line);
    if (location->column != 0) out += ", column " + std::to_string(location->column);
    out += ": ";
  }
  out += to_string(code);
  if (!detail.empty()) {
    out += ": ";
    out += detail;
  }
  return out;
}

}  // namespace semigraph
