#pragma once

#include <iosfwd>
#include <string>

#include "altsplit/dense_core.hpp"

namespace altsplit {

/// Reads a dense matrix from Matrix Market text: array or coordinate format,
/// real or integer field, general or symmetric symmetry (symmetric input is
/// expanded). Throws ParseError with the offending line number and
/// UnsupportedField for complex or pattern files.
Matrix read_matrix_market(std::istream& in);
/// Throws IoError if the file cannot be opened.
Matrix read_matrix_market(const std::string& path);

/// Reads an n x 1 (or 1 x n) matrix as a vector. Throws DimensionMismatch
/// for anything else.
Vector read_vector_market(const std::string& path);

/// Writes array-format, real, general. Values use the shortest decimal form
/// that reads back to the same double.
void write_matrix_market(std::ostream& out, const Matrix& m);
void write_matrix_market(const std::string& path, const Matrix& m);

}  // namespace altsplit
