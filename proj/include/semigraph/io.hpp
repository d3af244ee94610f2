#pragma once

#include <string>
#include <string_view>

#include "semigraph/core.hpp"
#include "semigraph/matrix.hpp"

namespace semigraph {

// Text formats. Labels are 1-based, '#' starts a comment, blank lines are
// ignored, tokens are separated by spaces or tabs.
//
//   .smg    n <count>              .qmat   n <count>
//           e <v1> <v2> ...                <n tokens per row, n rows>
//
// Matrix tokens are integers, fractions p/q with q dividing 4, or decimals
// with at most two fractional digits; every value must be a multiple of 1/4.
// All errors carry the line (and, for matrix tokens, the column) where they
// were detected.

/// Throws SyntaxError or any build_semigraph error, located at the edge line.
Semigraph parse_smg(std::string_view text);

/// Canonical form: header, then edges in sorted canonical orientation.
std::string emit_smg(const Semigraph& g);

/// Reads any quarter-valued square matrix without structural checks.
SquareMatrix parse_qmat_raw(std::string_view text);

/// parse_qmat_raw plus the adjacency alphabet, zero diagonal and symmetry.
/// Throws IllegalEntry, NonzeroDiagonal or AsymmetricInput with location.
SymMatrix parse_qmat(std::string_view text);

/// Integers print plainly, other values as reduced fractions ("1/4", "-3/4").
std::string emit_qmat(const SquareMatrix& m);
std::string emit_qmat(const SymMatrix& m);

}  // namespace semigraph
