#include <cmath>
#include <numbers>

#include "doctest.h"
#include "h6/cubic.hpp"
#include "h6/deltoid.hpp"
#include "test_util.hpp"

using namespace h6;

namespace {

Complex eval_f(Complex alpha, Complex x) {
  return x * x * x - alpha * x * x + std::conj(alpha) * x - 1.0;
}

}  // namespace

TEST_CASE("solve_falpha at alpha = 0 gives the cube roots of unity") {
  RootTriple t = solve_falpha(0.0);
  Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  // argument order: conj(omega), 1, omega
  CHECK(std::abs(t.roots[0] - std::conj(omega)) <= 1e-12);
  CHECK(std::abs(t.roots[1] - 1.0) <= 1e-12);
  CHECK(std::abs(t.roots[2] - omega) <= 1e-12);
}

TEST_CASE("solve_falpha at alpha = 1: (x-1)(x^2+1)") {
  RootTriple t = solve_falpha(1.0);
  CHECK(std::abs(t.roots[0] - Complex(0, -1)) <= 1e-12);
  CHECK(std::abs(t.roots[1] - 1.0) <= 1e-12);
  CHECK(std::abs(t.roots[2] - Complex(0, 1)) <= 1e-12);
}

TEST_CASE("solve_falpha at alpha = -1: double root of (x+1)^2 (x-1)") {
  RootTriple t = solve_falpha(-1.0);
  // argument order puts the simple root 1 first
  CHECK(std::abs(t.roots[0] - 1.0) <= 1e-7);
  CHECK(std::abs(t.roots[1] + 1.0) <= 1e-7);
  CHECK(std::abs(t.roots[2] + 1.0) <= 1e-7);
  CHECK(double_root_index(t) >= 1);
  // division oracle: f(x)/(x-1) = (x+1)^2 at the double root
  for (int i = 1; i < 3; ++i)
    CHECK(std::abs(eval_f(-1.0, t.roots[i])) <= 1e-9);
}

TEST_CASE("root residuals and Vieta relations") {
  std::mt19937 rng(41);
  for (int it = 0; it < 300; ++it) {
    Complex a = test::random_in_disk(rng, 3.0);
    RootTriple t = solve_falpha_raw(a);
    Complex sum = t.roots[0] + t.roots[1] + t.roots[2];
    Complex prod = t.roots[0] * t.roots[1] * t.roots[2];
    Complex pair = t.roots[0] * t.roots[1] + t.roots[1] * t.roots[2] +
                   t.roots[2] * t.roots[0];
    for (Complex r : t.roots) CHECK(std::abs(eval_f(a, r)) <= 1e-9);
    CHECK(std::abs(sum - a) <= 1e-8);
    CHECK(std::abs(prod - 1.0) <= 1e-8);
    CHECK(std::abs(pair - std::conj(a)) <= 1e-8);
  }
}

TEST_CASE("roots are unimodular inside the region") {
  std::mt19937 rng(43);
  int hits = 0;
  while (hits < 100) {
    Complex a = test::random_in_disk(rng, 1.2);
    if (!in_region(a)) continue;
    ++hits;
    RootTriple raw = solve_falpha_raw(a);
    for (Complex r : raw.roots) CHECK(std::abs(std::abs(r) - 1.0) <= 1e-9);
    // conjugate-reciprocal symmetry: multiset stable under z -> 1/conj(z)
    for (Complex r : raw.roots) {
      Complex inv = 1.0 / std::conj(r);
      double best = 10.0;
      for (Complex s : raw.roots) best = std::min(best, std::abs(inv - s));
      CHECK(best <= 1e-9);
    }
    RootTriple proj = solve_falpha(a);
    for (Complex r : proj.roots) CHECK(std::abs(r) == doctest::Approx(1.0));
  }
}

TEST_CASE("invert_phi yields all six ordered pairs") {
  auto pairs0 = invert_phi(0.0);
  for (const auto& [x, y] : pairs0) CHECK(std::abs(phi(x, y)) <= 1e-8);

  auto pairs1 = invert_phi(1.0);
  bool has_1_i = false;
  for (const auto& [x, y] : pairs1) {
    CHECK(std::abs(phi(x, y) - 1.0) <= 1e-8);
    if (std::abs(x.value() - 1.0) <= 1e-9 &&
        std::abs(y.value() - Complex(0, 1)) <= 1e-9)
      has_1_i = true;
  }
  CHECK(has_1_i);

  // boundary: pairs are formed by root index, pattern r, r, 1/r^2
  auto pairsb = invert_phi(-1.0);
  CHECK(pairsb.size() == 6);
  for (const auto& [x, y] : pairsb)
    CHECK(std::abs(phi(x, y) + 1.0) <= 1e-6);

  CHECK_THROWS_AS(invert_phi(Complex(3.0, 0.0)), std::domain_error);
}

TEST_CASE("invert_phi pairs satisfy phi = alpha across the region") {
  std::mt19937 rng(47);
  int hits = 0;
  while (hits < 50) {
    Complex a = test::random_in_disk(rng, 1.2);
    if (!in_region(a)) continue;
    ++hits;
    for (const auto& [x, y] : invert_phi(a))
      CHECK(std::abs(phi(x, y) - a) <= 1e-8);
  }
}
