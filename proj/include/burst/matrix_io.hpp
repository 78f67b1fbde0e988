#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "burst/matrix.hpp"

namespace burst {

// Text format:
//
//   p k n
//   <k lines of n entries>
//
// Entries are decimal integers in [0, p-1] separated by single spaces.
// Lines end in LF with no trailing whitespace. Violations raise ParseError
// carrying the 1-based line and column.

std::string format_matrix(const Matrix& m);
void write_matrix(std::ostream& os, const Matrix& m);

Matrix parse_matrix(std::string_view text);
Matrix read_matrix(std::istream& is);

/// Throws InputError if the file cannot be opened.
Matrix load_matrix(const std::filesystem::path& path);
void save_matrix(const std::filesystem::path& path, const Matrix& m);

} // namespace burst
