#pragma once

#include <vector>

#include "h6/linalg.hpp"

namespace h6 {

// The two-parameter family X6(alpha): a 2-circulant block matrix H built from
// six phases, and its dephased form X6(x,y,u,v).

/// Phases of the two circulant blocks A = circ(a,b,c), B = circ(d,e,f).
struct BlockParams {
  Phase a, b, c, d, e, f;
};

/// The scalar a/b + b/c + c/a + d/e + e/f + f/d; H is Hadamard iff this
/// vanishes.
Complex orthogonality_scalar(const BlockParams& p);

/// Ordered quadruple with phi(x,y) = alpha, phi(u,v) = -alpha.
struct Quadruple {
  Phase x, y, u, v;
};

/// |phi(x,y) + phi(u,v)|; zero for a Hadamard-generating quadruple.
double quadruple_defect(const Quadruple& q);

/// a = d = 1, b = conj(x), c = conj(x*y), e = conj(u), f = conj(u*v).
BlockParams block_params(const Quadruple& q);

enum class FamilyVariant { standard, transpose };

/// The 6x6 block matrix [[A, B], [B*, -A*]] with A = circ(a,b,c),
/// B = circ(d,e,f).
ComplexMatrix h_block(const BlockParams& p);

/// The dephased family member X6(x,y,u,v). Throws std::invalid_argument with
/// the defect value when |phi(x,y) + phi(u,v)| > 1e-6.
ComplexMatrix x6_from_quadruple(const Quadruple& q);

/// Deterministic root choice for x6_from_alpha: first two roots of f_alpha
/// and f_{-alpha} in argument order; at a boundary double root the doubled
/// root r occupies the x slot with y = 1/r^2 exactly (swapping sides when the
/// double root sits on the -alpha side), which makes the matrix self-adjoint.
Quadruple quadruple_from_alpha(Complex alpha);

/// Family member at alpha; throws std::domain_error outside region D.
ComplexMatrix x6_from_alpha(Complex alpha,
                            FamilyVariant variant = FamilyVariant::standard);

/// All 36 ordered-quadruple choices at alpha, x-pair index major, u-pair
/// index minor (pair order (0,1),(0,2),(1,0),(1,2),(2,0),(2,1)).
std::vector<ComplexMatrix> all_variants(Complex alpha);

}  // namespace h6
