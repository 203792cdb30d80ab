#pragma once

#include <array>
#include <optional>
#include <vector>

#include "h6/linalg.hpp"

namespace h6 {

// Hadamard equivalence H = D1 P K Q D2, decided by exhaustive search over
// permutation pairs on dephased canonical forms.

/// Certificate that H = D1 P K Q D2, i.e. for all i, j:
/// H[i][j] = left[i] * K[row_perm[i]][col_perm[j]] * right[j].
struct EquivalenceWitness {
  std::array<int, 6> row_perm;
  std::array<int, 6> col_perm;
  DiagonalPhases left;   // normalized so left[0] = 1
  DiagonalPhases right;
};

/// Reconstructs D1 P K Q D2 from a witness.
ComplexMatrix apply_witness(const EquivalenceWitness& w,
                            const ComplexMatrix& k);

/// dephase(P M Q).matrix for the given permutations (0-based, same
/// convention as EquivalenceWitness).
ComplexMatrix canonical_dephased(const ComplexMatrix& m,
                                 std::span<const int> row_perm,
                                 std::span<const int> col_perm);

inline constexpr double kEquivTol = 1e-7;

/// Exhaustive equivalence test over all 720 x 720 permutation pairs in
/// lexicographic order; the first witness found is returned. An empty result
/// is a proof of inequivalence at tolerance tol. A quartet-fingerprint
/// mismatch short-circuits the search.
std::optional<EquivalenceWitness> are_equivalent(const ComplexMatrix& h,
                                                 const ComplexMatrix& k,
                                                 double tol = kEquivTol);

/// Sorted multiset of the n^4 quartet phases
/// arg(m_ij * m_kl * conj(m_il) * conj(m_kj)) in [0, 2*pi); an equivalence
/// invariant used for fast rejection.
std::vector<double> fingerprint(const ComplexMatrix& m);

/// Multiset equality within per-element tolerance after sort alignment
/// (circular, so phases straddling 0/2*pi still match).
bool fingerprints_match(const std::vector<double>& a,
                        const std::vector<double>& b, double tol = 1e-6);

bool is_self_adjoint(const ComplexMatrix& m, double tol);

}  // namespace h6
