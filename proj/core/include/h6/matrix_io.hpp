#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "h6/linalg.hpp"

namespace h6 {

// Matrix text format: line 1 = "<nrows> <ncols>"; then nrows lines, each with
// ncols entries; each entry = "<re> <im>" printed with 17 significant decimal
// digits; whitespace-separated; '#' begins a comment line.

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " (line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ")"),
        line(line),
        column(column) {}
  std::size_t line;
  std::size_t column;
};

std::string format_real(double x);  // %.17g

std::string matrix_to_text(const ComplexMatrix& m);
ComplexMatrix parse_matrix(std::istream& in);
ComplexMatrix parse_matrix(const std::string& text);

ComplexMatrix load_matrix(const std::filesystem::path& path);
void save_matrix(const std::filesystem::path& path, const ComplexMatrix& m);

}  // namespace h6
