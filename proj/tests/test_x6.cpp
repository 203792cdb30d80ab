#include <cmath>
#include <numbers>

#include "doctest.h"
#include "h6/cubic.hpp"
#include "h6/deltoid.hpp"
#include "h6/equivalence.hpp"
#include "h6/x6.hpp"
#include "test_util.hpp"

using namespace h6;

namespace {

bool is_sixth_root_of_unity(Complex z, double tol) {
  for (int k = 0; k < 6; ++k)
    if (std::abs(z - std::polar(1.0, k * std::numbers::pi / 3.0)) <= tol)
      return true;
  return false;
}

}  // namespace

TEST_CASE("h_block degenerate all-ones case is not Hadamard") {
  Phase one(1.0);
  BlockParams p{one, one, one, one, one, one};
  CHECK(std::abs(orthogonality_scalar(p) - 6.0) <= 1e-15);
  CHECK(hadamard_residual(h_block(p)) > 1.0);
}

TEST_CASE("h_block from an in-region quadruple is Hadamard") {
  Complex alpha(0.0, 0.5);
  ComplexMatrix h = h_block(block_params(quadruple_from_alpha(alpha)));
  CHECK(hadamard_residual(h) <= 1e-9);

  // block structure oracle: (2,1) block = B*, (2,2) block = -A*
  std::array<Complex, 3> arow{h(0, 0), h(0, 1), h(0, 2)};
  std::array<Complex, 3> brow{h(0, 3), h(0, 4), h(0, 5)};
  ComplexMatrix bs = circulant(brow).adjoint();
  ComplexMatrix mas = Complex(-1.0) * circulant(arow).adjoint();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(std::abs(h(i + 3, j) - bs(i, j)) <= 1e-15);
      CHECK(std::abs(h(i + 3, j + 3) - mas(i, j)) <= 1e-15);
    }
}

TEST_CASE("scalar condition is equivalent to Hadamardness") {
  std::mt19937 rng(53);
  // random phases essentially never satisfy the condition
  for (int it = 0; it < 10; ++it) {
    BlockParams p{Phase(1.0),
                  test::random_phase(rng),
                  test::random_phase(rng),
                  Phase(1.0),
                  test::random_phase(rng),
                  test::random_phase(rng)};
    double scalar = std::abs(orthogonality_scalar(p));
    double residual = hadamard_residual(h_block(p));
    CHECK((scalar <= 1e-8) == (residual <= 1e-8));
  }
  // constructed quadruples always do
  int hits = 0;
  while (hits < 10) {
    Complex a = test::random_in_disk(rng, 1.2);
    if (!in_region(a)) continue;
    ++hits;
    BlockParams p = block_params(quadruple_from_alpha(a));
    CHECK(std::abs(orthogonality_scalar(p)) <= 1e-8);
    CHECK(hadamard_residual(h_block(p)) <= 1e-8);
  }
}

TEST_CASE("x6_from_quadruple matches the printed pattern") {
  // alpha = 0 with roots among the cube roots of unity
  Phase one(1.0);
  Phase omega = Phase::polar(2.0 * std::numbers::pi / 3.0);
  ComplexMatrix m = x6_from_quadruple(Quadruple{one, omega, one, omega});
  CHECK(hadamard_residual(m) <= 1e-10);
  for (const Complex& e : m.entries()) CHECK(is_sixth_root_of_unity(e, 1e-12));

  // lower-right diagonal is (-1,-1,-1)
  for (std::size_t i = 3; i < 6; ++i) CHECK(m(i, i) == Complex(-1.0));
}

TEST_CASE("x6_from_quadruple example at alpha = 1") {
  Quadruple q{Phase(1.0), Phase(Complex(0, 1)), Phase(-1.0), Phase(1.0)};
  ComplexMatrix m = x6_from_quadruple(q);
  CHECK(hadamard_residual(m) <= 1e-12);
}

TEST_CASE("x6_from_quadruple rejects a bad quadruple with a diagnostic") {
  Quadruple q{Phase(1.0), Phase(1.0), Phase(1.0), Phase(1.0)};  // defect 6
  CHECK_THROWS_WITH_AS(x6_from_quadruple(q),
                       doctest::Contains("|phi[x,y]+phi[u,v]| = 6"),
                       std::invalid_argument);
}

TEST_CASE("dephased block form equals the printed dephased family") {
  std::mt19937 rng(59);
  int hits = 0;
  while (hits < 20) {
    Complex a = test::random_in_disk(rng, 1.2);
    if (!in_region(a)) continue;
    ++hits;
    Quadruple q = quadruple_from_alpha(a);
    ComplexMatrix via_block = dephase(h_block(block_params(q))).matrix;
    CHECK(max_entry_dist(via_block, x6_from_quadruple(q)) <= 1e-10);
  }
}

TEST_CASE("x6_from_alpha across reference points") {
  ComplexMatrix m0 = x6_from_alpha(0.0);
  CHECK(hadamard_residual(m0) <= 1e-10);
  for (const Complex& e : m0.entries()) CHECK(is_sixth_root_of_unity(e, 1e-10));

  CHECK(hadamard_residual(x6_from_alpha(Complex(0, 0.5))) <= 1e-9);

  // boundary alpha = -1 gives a self-adjoint matrix
  ComplexMatrix mb = x6_from_alpha(-1.0);
  CHECK(hadamard_residual(mb) <= 1e-9);
  CHECK(is_self_adjoint(mb, 1e-9));

  CHECK_THROWS_AS(x6_from_alpha(Complex(3.0, 0.0)), std::domain_error);
}

TEST_CASE("transpose variant transposes") {
  Complex a(0.3, 0.2);
  CHECK(max_entry_dist(x6_from_alpha(a, FamilyVariant::transpose),
                       x6_from_alpha(a).transpose()) == 0.0);
}

TEST_CASE("boundary root choice x = r, y = 1/r^2 is self-adjoint") {
  // D[alpha] = 0 side: alpha = -1; D[-alpha] = 0 side: alpha = 1
  for (Complex a : {Complex(-1.0, 0.0), Complex(1.0, 0.0)}) {
    ComplexMatrix m = x6_from_alpha(a);
    CHECK(is_self_adjoint(m, 1e-9));
    CHECK(hadamard_residual(m) <= 1e-9);
  }
}

TEST_CASE("all_variants produces 36 Hadamard matrices") {
  Complex a(0.0, 0.5);
  auto vars = all_variants(a);
  CHECK(vars.size() == 36);
  for (const ComplexMatrix& m : vars) CHECK(hadamard_residual(m) <= 1e-8);
  // the deterministic choice (first pairs on both sides) is variant 0
  CHECK(max_entry_dist(vars[0], x6_from_alpha(a)) == 0.0);
  CHECK_THROWS_AS(all_variants(Complex(2.0, 0.0)), std::domain_error);
}

TEST_CASE("conjugation stability at an interior point") {
  Complex a(0.0, 0.5);
  ComplexMatrix m = x6_from_alpha(a);
  CHECK(are_equivalent(m.conjugate(), m).has_value());
}
