#pragma once

#include <algorithm>
#include <random>

#include "h6/equivalence.hpp"
#include "h6/linalg.hpp"

namespace h6::test {

inline Phase random_phase(std::mt19937& rng) {
  std::uniform_real_distribution<double> dist(-3.14159265358979323846,
                                              3.14159265358979323846);
  return Phase::polar(dist(rng));
}

inline Complex random_in_disk(std::mt19937& rng, double radius) {
  std::uniform_real_distribution<double> dist(-radius, radius);
  for (;;) {
    Complex z(dist(rng), dist(rng));
    if (std::abs(z) <= radius) return z;
  }
}

/// Random equivalence transform D1 P M Q D2 with unit diagonals and
/// uniform permutations.
inline ComplexMatrix random_equivalent(const ComplexMatrix& m,
                                       std::mt19937& rng) {
  std::size_t n = m.nrows();
  std::vector<int> rp(n), cp(n);
  for (std::size_t i = 0; i < n; ++i) rp[i] = cp[i] = static_cast<int>(i);
  std::shuffle(rp.begin(), rp.end(), rng);
  std::shuffle(cp.begin(), cp.end(), rng);
  ComplexMatrix out(n, n);
  DiagonalPhases left, right;
  for (std::size_t i = 0; i < n; ++i) left.push_back(random_phase(rng));
  for (std::size_t j = 0; j < n; ++j) right.push_back(random_phase(rng));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = left[i].value() * m(rp[i], cp[j]) * right[j].value();
  return out;
}

}  // namespace h6::test
