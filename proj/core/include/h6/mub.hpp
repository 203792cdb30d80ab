#pragma once

#include <span>
#include <vector>

#include "h6/linalg.hpp"

namespace h6 {

// Zauner's construction: a 2-circulant unitary T factors as Z1^{-1} Z2 with
// Z1, Z2 built from the Fourier matrix and four unitary diagonals; when T is
// a rescaled Hadamard, {I, Z1, Z2} is a triplet of mutually unbiased bases.

/// Factors of a 2x2 unitary: M = (1/2) [[u+v, y(u-v)], [(u-v)/x, y(u+v)/x]].
struct TwoByTwoFactors {
  Phase u, v, x, y;
};

ComplexMatrix compose_2x2(const TwoByTwoFactors& f);

/// Inverts the representation above. u is the root of z^2 - 2az + uv with the
/// smaller principal argument. Throws std::invalid_argument when M is not
/// unitary within tol.
TwoByTwoFactors decompose_2x2(const ComplexMatrix& m, double tol = 1e-9);

/// Diagonals of F_m (block) F_m^{-1} for the four circulant blocks of a
/// 2m x 2m matrix, in block order A, B, C, D.
struct BlockDiagonals {
  std::vector<Complex> a, b, c, d;
};

BlockDiagonals block_diagonal_form(const ComplexMatrix& t);

/// Per-pair unbiasedness report; pair (i, j) uses basis index 0 for the
/// implicit standard basis when it is included.
struct MubReport {
  std::size_t dimension = 0;
  std::vector<double> unitarity;  // per basis, residual of B*B - I
  struct PairDeviation {
    std::size_t first, second;
    double deviation;  // max | |<col_i, col_j>| - 1/sqrt(n) |
  };
  std::vector<PairDeviation> pairs;
  double tolerance = 0.0;
  bool ok = false;  // passes(tolerance)
  double max_unitarity() const;
  double max_deviation() const;
  bool passes(double tol) const;
};

/// Checks every basis unitary and every cross pair unbiased at 1/sqrt(n).
/// With include_standard the identity basis participates as basis 0.
MubReport verify_mub(std::span<const ComplexMatrix> bases, double tol,
                     bool include_standard = true);

struct MubTriplet {
  ComplexMatrix z1, z2;
  MubReport report;  // over {I, Z1, Z2}
};

/// Factors a 2-circulant unitary T as Z1^{-1} Z2.
/// Postcondition max_entry_dist(Z1* Z2, T) <= 1e-7 is enforced. The MUB
/// invariants hold only when T is a rescaled Hadamard; deviations are
/// reported, not thrown.
MubTriplet zauner_bases(const ComplexMatrix& t);

/// Builds the 2-circulant block form H at alpha (not the dephased X6, which
/// destroys 2-circulance), rescales by 1/sqrt(6) and applies zauner_bases.
MubTriplet mub_from_alpha(Complex alpha);

}  // namespace h6
