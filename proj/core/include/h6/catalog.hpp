#pragma once

#include <array>

#include "h6/linalg.hpp"

namespace h6 {

// Known order-6 matrices and their 2-circulant representations.

/// Certificate that D1 P M Q D2 = expected, where the transform follows the
/// EquivalenceWitness convention: out[i][j] = left[i]*M[rp[i]][cp[j]]*right[j],
/// and expected's four 3x3 blocks are each circulant.
struct CirculantRepWitness {
  std::array<int, 6> row_perm;
  std::array<int, 6> col_perm;
  DiagonalPhases left;
  DiagonalPhases right;
  ComplexMatrix expected;
};

ComplexMatrix apply_circulant_witness(const CirculantRepWitness& w,
                                      const ComplexMatrix& m);

/// Max over the four 3x3 blocks of the deviation from circulant structure.
double two_circulant_defect(const ComplexMatrix& m);

/// The Dita-family representative D(t) with entries in {±1, ±i, ±i t^3,
/// ±i/t^3}; Hadamard for every unit t.
ComplexMatrix dita_D(Phase t);

/// Identity-permutation witness with D1 = Diag(1, it, i/t, 1, t, -1/t),
/// D2 = Diag(1, i/t, it, 1, 1/t, -t) mapping D(t) to its 2-circulant form.
CirculantRepWitness dita_circulant_witness(Phase t);

/// The self-adjoint pattern matrix B(x,y,z); Hadamard only for parameter
/// choices in the Beauchamp-Nicoara classification, but the pattern (and its
/// 2-circulant rearrangement identity) is defined for all unit x, y, z.
ComplexMatrix bn_B(Phase x, Phase y, Phase z);

CirculantRepWitness bn_circulant_witness(Phase x, Phase y, Phase z);

/// Principal cube root of a unit-modulus z: argument in (-pi/3, pi/3].
Complex principal_cbrt(Phase z);

/// Unimodular 6x6 Hadamard [[G, DG], [G, -DG]] with G = sqrt(3) F_3 and
/// D = Diag(1, e^{ia}, e^{ib}); at (0,0) equivalent to sqrt(6) F_6.
ComplexMatrix generalized_fourier(double a_phase, double b_phase);

}  // namespace h6
