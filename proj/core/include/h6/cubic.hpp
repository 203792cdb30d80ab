#pragma once

#include <array>
#include <utility>

#include "h6/linalg.hpp"

namespace h6 {

// Inversion of phi via the cubic f_alpha(x) = x^3 - alpha x^2 + conj(alpha) x - 1.
// For alpha in the region D all three roots are unimodular.

/// Roots ordered by ascending principal argument in (-pi, pi], ties broken by
/// real part descending.
struct RootTriple {
  std::array<Complex, 3> roots;
};

/// Roots of f_alpha as solved (Cardano plus Newton polish), no unit-modulus
/// projection.
RootTriple solve_falpha_raw(Complex alpha);

/// Roots of f_alpha; when in_region(alpha) each root is rescaled to exact
/// unit modulus after solving.
RootTriple solve_falpha(Complex alpha);

/// Threshold below which two roots are treated as the boundary double root
/// (pattern r, r, 1/r^2).
inline constexpr double kDoubleRootTol = 1e-6;

/// Index of the doubled root if two roots lie within kDoubleRootTol of each
/// other, or -1 when all roots are simple. The remaining index is the
/// (approximate) 1/r^2 root.
int double_root_index(const RootTriple& t);

/// All 6 ordered pairs of distinct roots (by index) of f_alpha; each pair
/// satisfies phi(x, y) = alpha within 1e-8. Requires in_region(alpha).
std::array<std::pair<Phase, Phase>, 6> invert_phi(Complex alpha);

}  // namespace h6
