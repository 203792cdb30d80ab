#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "h6/linalg.hpp"
#include "h6/matrix_io.hpp"
#include "test_util.hpp"

using namespace h6;

TEST_CASE("matrix text round trip is exact") {
  std::mt19937 rng(17);
  ComplexMatrix m(3, 4);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = Complex(dist(rng), dist(rng));

  auto path = std::filesystem::temp_directory_path() / "h6_io_test.mat";
  save_matrix(path, m);
  ComplexMatrix back = load_matrix(path);
  CHECK(back.nrows() == 3);
  CHECK(back.ncols() == 4);
  CHECK(max_entry_dist(m, back) == 0.0);  // 17 significant digits
  std::filesystem::remove(path);
}

TEST_CASE("comments and whitespace are tolerated") {
  ComplexMatrix m = parse_matrix(
      "# a comment\n"
      "2 2  # trailing comment\n"
      "1 0   2 0\n"
      "3 0 4 0\n");
  CHECK(m.nrows() == 2);
  CHECK(m(1, 1) == Complex(4.0));
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_matrix("2 2\n1 0 2 0\n3 0 oops 0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }

  // short entry count: runs out of tokens
  CHECK_THROWS_AS(parse_matrix("2 2\n1 0 2 0\n"), ParseError);
  // trailing garbage
  CHECK_THROWS_AS(parse_matrix("1 1\n1 0\nextra\n"), ParseError);
  // bad dimensions
  CHECK_THROWS_AS(parse_matrix("0 2\n"), ParseError);
}

TEST_CASE("load_matrix reports missing files as I/O failures") {
  CHECK_THROWS_AS(load_matrix("/nonexistent/h6.mat"), std::ios_base::failure);
}
