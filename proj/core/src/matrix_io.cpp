#include "h6/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace h6 {
namespace {

// Token reader that tracks line/column and skips '#' comment lines.
class TokenReader {
 public:
  explicit TokenReader(std::istream& in) : in_(in) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

  bool next(std::string& tok) {
    tok.clear();
    int c;
    while ((c = get()) != EOF) {
      if (c == '#') {
        while ((c = get()) != EOF && c != '\n') {
        }
        continue;
      }
      if (std::isspace(c)) continue;
      break;
    }
    if (c == EOF) return false;
    tok_line_ = line_;
    tok_column_ = column_;
    do {
      tok.push_back(static_cast<char>(c));
      c = get();
    } while (c != EOF && !std::isspace(c) && c != '#');
    if (c == '#') in_.unget();
    return true;
  }

  double next_real(const char* what) {
    std::string tok;
    if (!next(tok))
      throw ParseError(std::string("unexpected end of input, expected ") +
                           what,
                       line_, column_);
    try {
      std::size_t pos = 0;
      double v = std::stod(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      return v;
    } catch (const std::exception&) {
      throw ParseError(std::string("malformed ") + what + " '" + tok + "'",
                       tok_line_, tok_column_);
    }
  }

 private:
  int get() {
    int c = in_.get();
    if (c == '\n') {
      ++line_;
      column_ = 0;
    } else if (c != EOF) {
      ++column_;
    }
    return c;
  }

  std::istream& in_;
  std::size_t line_ = 1;
  std::size_t column_ = 0;
  std::size_t tok_line_ = 1;
  std::size_t tok_column_ = 0;
};

}  // namespace

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string matrix_to_text(const ComplexMatrix& m) {
  std::ostringstream out;
  out << m.nrows() << ' ' << m.ncols() << '\n';
  for (std::size_t i = 0; i < m.nrows(); ++i) {
    for (std::size_t j = 0; j < m.ncols(); ++j) {
      if (j) out << ' ';
      out << format_real(m(i, j).real()) << ' ' << format_real(m(i, j).imag());
    }
    out << '\n';
  }
  return out.str();
}

ComplexMatrix parse_matrix(std::istream& in) {
  TokenReader rd(in);
  double nr = rd.next_real("row count");
  double nc = rd.next_real("column count");
  if (nr < 1 || nc < 1 || nr != static_cast<std::size_t>(nr) ||
      nc != static_cast<std::size_t>(nc))
    throw ParseError("invalid matrix dimensions", rd.line(), rd.column());
  auto nrows = static_cast<std::size_t>(nr);
  auto ncols = static_cast<std::size_t>(nc);
  ComplexMatrix m(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i)
    for (std::size_t j = 0; j < ncols; ++j) {
      double re = rd.next_real("entry real part");
      double im = rd.next_real("entry imaginary part");
      m(i, j) = Complex(re, im);
    }
  std::string extra;
  if (rd.next(extra))
    throw ParseError("trailing data '" + extra + "'", rd.line(), rd.column());
  return m;
}

ComplexMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

ComplexMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw std::ios_base::failure("cannot open '" + path.string() +
                                 "' for reading");
  return parse_matrix(in);
}

void save_matrix(const std::filesystem::path& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out)
    throw std::ios_base::failure("cannot open '" + path.string() +
                                 "' for writing");
  out << matrix_to_text(m);
  if (!out) throw std::ios_base::failure("write failed: " + path.string());
}

}  // namespace h6
