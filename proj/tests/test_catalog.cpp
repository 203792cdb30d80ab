#include <cmath>
#include <numbers>

#include "doctest.h"
#include "h6/catalog.hpp"
#include "h6/equivalence.hpp"
#include "test_util.hpp"

using namespace h6;

TEST_CASE("dita_D entries and Hadamardness") {
  ComplexMatrix d1 = dita_D(Phase(1.0));
  CHECK(hadamard_residual(d1) <= 1e-12);
  // entries at t = 1 are in {±1, ±i}
  for (const Complex& e : d1.entries()) {
    CHECK(std::min(std::abs(e.real()), std::abs(e.imag())) <= 1e-15);
    CHECK(std::abs(std::abs(e) - 1.0) <= 1e-15);
  }

  Phase t = Phase::polar(std::numbers::pi / 9.0);
  ComplexMatrix dt = dita_D(t);
  CHECK(hadamard_residual(dt) <= 1e-10);
  CHECK(dt(3, 3) == Complex(-1.0));

  std::mt19937 rng(71);
  for (int it = 0; it < 50; ++it)
    CHECK(hadamard_residual(dita_D(test::random_phase(rng))) <= 1e-10);
}

TEST_CASE("dita 2-circulant representation witness") {
  std::mt19937 rng(73);
  for (int it = 0; it < 20; ++it) {
    Phase t = test::random_phase(rng);
    CirculantRepWitness w = dita_circulant_witness(t);
    CHECK(max_entry_dist(apply_circulant_witness(w, dita_D(t)), w.expected) <=
          1e-12);
    CHECK(two_circulant_defect(w.expected) <= 1e-12);
  }
  // expected upper-left block at t = 1 is circ(1, i, i)
  ComplexMatrix e = dita_circulant_witness(Phase(1.0)).expected;
  CHECK(e(0, 0) == Complex(1.0));
  CHECK(std::abs(e(0, 1) - Complex(0, 1)) <= 1e-15);
  CHECK(std::abs(e(0, 2) - Complex(0, 1)) <= 1e-15);
}

TEST_CASE("bn_B printed pattern") {
  std::mt19937 rng(79);
  Phase x = test::random_phase(rng), y = test::random_phase(rng),
        z = test::random_phase(rng);
  ComplexMatrix b = bn_B(x, y, z);
  CHECK(b(1, 1) == Complex(-1.0));
  CHECK(b(3, 3) == Complex(-1.0));
  CHECK(b(5, 5) == Complex(-1.0));
  CHECK(std::abs(b(5, 1) - x.value()) <= 1e-15);
  CHECK(std::abs(b(2, 1) + x.value()) <= 1e-15);
  // the (1,1,1) pattern matrix exists even though it is not Hadamard
  CHECK_NOTHROW(bn_B(Phase(1.0), Phase(1.0), Phase(1.0)));
}

TEST_CASE("bn 2-circulant representation witness") {
  // rearrangement identity, independent of Hadamardness
  std::mt19937 rng(83);
  for (int it = 0; it < 20; ++it) {
    Phase x = test::random_phase(rng), y = test::random_phase(rng),
          z = test::random_phase(rng);
    CirculantRepWitness w = bn_circulant_witness(x, y, z);
    CHECK(max_entry_dist(apply_circulant_witness(w, bn_B(x, y, z)),
                         w.expected) <= 1e-11);
    CHECK(two_circulant_defect(w.expected) <= 1e-12);
  }
  // z = 1: expected upper-left block is circ(1,1,1)
  ComplexMatrix e =
      bn_circulant_witness(Phase(1.0), Phase(1.0), Phase(1.0)).expected;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(e(i, j) - 1.0) <= 1e-15);
  // lower-right diagonal is (-1,-1,-1)
  for (std::size_t i = 3; i < 6; ++i) CHECK(std::abs(e(i, i) + 1.0) <= 1e-15);
}

TEST_CASE("principal cube root branch") {
  CHECK(std::abs(principal_cbrt(Phase(-1.0)) -
                 std::polar(1.0, std::numbers::pi / 3.0)) <= 1e-15);
  CHECK(std::abs(principal_cbrt(Phase(1.0)) - 1.0) <= 1e-15);
  std::mt19937 rng(89);
  for (int it = 0; it < 50; ++it) {
    Phase z = test::random_phase(rng);
    Complex c = principal_cbrt(z);
    CHECK(std::abs(c * c * c - z.value()) <= 1e-14);
    double a = std::arg(c);
    CHECK(a > -std::numbers::pi / 3.0 - 1e-15);
    CHECK(a <= std::numbers::pi / 3.0 + 1e-15);
  }
}

TEST_CASE("generalized_fourier is Hadamard everywhere") {
  std::mt19937 rng(97);
  std::uniform_real_distribution<double> dist(0.0, 2.0 * std::numbers::pi);
  for (int it = 0; it < 20; ++it)
    CHECK(hadamard_residual(generalized_fourier(dist(rng), dist(rng))) <=
          1e-10);
  // sign pattern at (pi, 0): second block row scaled by e^{i pi} = -1 in row 1
  ComplexMatrix g = generalized_fourier(std::numbers::pi, 0.0);
  CHECK(std::abs(g(1, 3) + g(1, 0)) <= 1e-15);
}

TEST_CASE("generalized_fourier(0,0) is equivalent to F6") {
  ComplexMatrix f6 = fourier_matrix(6);
  f6 *= std::sqrt(6.0);
  auto w = are_equivalent(generalized_fourier(0.0, 0.0), f6);
  REQUIRE(w.has_value());
  CHECK(max_entry_dist(apply_witness(*w, f6), generalized_fourier(0.0, 0.0)) <=
        1e-7);
}
