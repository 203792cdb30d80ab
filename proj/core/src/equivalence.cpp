#include "h6/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace h6 {

ComplexMatrix apply_witness(const EquivalenceWitness& w,
                            const ComplexMatrix& k) {
  ComplexMatrix out(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      out(i, j) = w.left[i].value() * k(w.row_perm[i], w.col_perm[j]) *
                  w.right[j].value();
  return out;
}

ComplexMatrix canonical_dephased(const ComplexMatrix& m,
                                 std::span<const int> row_perm,
                                 std::span<const int> col_perm) {
  if (!m.square() || m.nrows() != row_perm.size() ||
      m.nrows() != col_perm.size())
    throw std::invalid_argument("canonical_dephased: shape mismatch");
  std::size_t n = m.nrows();
  ComplexMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(i, j) = m(row_perm[i], col_perm[j]);
  return dephase(p).matrix;
}

std::optional<EquivalenceWitness> are_equivalent(const ComplexMatrix& h,
                                                 const ComplexMatrix& k,
                                                 double tol) {
  if (!h.square() || !k.square() || h.nrows() != k.nrows())
    throw std::invalid_argument("are_equivalent: shape mismatch");
  const std::size_t n = h.nrows();
  if (n != 6) throw std::invalid_argument("are_equivalent: order must be 6");

  if (!fingerprints_match(fingerprint(h), fingerprint(k))) return std::nullopt;

  ComplexMatrix hn = dephase(h).matrix;
  // reciprocals of k's entries, reused across all permutation pairs
  ComplexMatrix kr(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (k(i, j) == 0.0)
        throw std::invalid_argument("are_equivalent: zero entry");
      kr(i, j) = 1.0 / k(i, j);
    }

  std::vector<int> sigma(n), tau(n);
  std::vector<Complex> colfac(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    std::iota(tau.begin(), tau.end(), 0);
    do {
      // dephase(sigma K tau)[i][j] = K(si,tj) * K(s0,t0) / (K(s0,tj) K(si,t0))
      Complex k00 = k(sigma[0], tau[0]);
      for (std::size_t j = 1; j < n; ++j)
        colfac[j] = k00 * kr(sigma[0], tau[j]);
      bool ok = true;
      for (std::size_t i = 1; ok && i < n; ++i) {
        Complex rowfac = kr(sigma[i], tau[0]);
        for (std::size_t j = 1; j < n; ++j) {
          Complex e = k(sigma[i], tau[j]) * rowfac * colfac[j];
          if (std::abs(e - hn(i, j)) > tol) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        EquivalenceWitness w;
        std::copy(sigma.begin(), sigma.end(), w.row_perm.begin());
        std::copy(tau.begin(), tau.end(), w.col_perm.begin());
        // D1 = L_K / L_H, D2 = R_K / R_H from the two dephasings
        w.left.reserve(n);
        w.right.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
          w.left.push_back(Phase::project(h(i, 0) / k(sigma[i], tau[0])));
        for (std::size_t j = 0; j < n; ++j)
          w.right.push_back(Phase::project(k00 * h(0, j) /
                                           (k(sigma[0], tau[j]) * h(0, 0))));
        Complex c = w.left[0].value();
        for (std::size_t i = 0; i < n; ++i)
          w.left[i] = Phase::project(w.left[i].value() / c);
        for (std::size_t j = 0; j < n; ++j)
          w.right[j] = Phase::project(w.right[j].value() * c);
        return w;
      }
    } while (std::next_permutation(tau.begin(), tau.end()));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}

std::vector<double> fingerprint(const ComplexMatrix& m) {
  if (!m.square()) throw std::invalid_argument("fingerprint: matrix not square");
  std::size_t n = m.nrows();
  for (const Complex& e : m.entries())
    if (e == 0.0) throw std::invalid_argument("fingerprint: zero entry");
  std::vector<double> out;
  out.reserve(n * n * n * n);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Complex q = m(i, j) * m(k, l) * std::conj(m(i, l) * m(k, j));
          double a = std::arg(q);
          if (a < 0.0) a += two_pi;
          if (a >= two_pi) a -= two_pi;
          out.push_back(a);
        }
  std::sort(out.begin(), out.end());
  return out;
}

bool fingerprints_match(const std::vector<double>& a,
                        const std::vector<double>& b, double tol) {
  if (a.size() != b.size()) return false;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  // fold phases within tol of 2*pi down to near zero, then re-sort, so that
  // quartets straddling the wrap point align
  auto folded = [&](const std::vector<double>& v) {
    std::vector<double> f(v);
    for (double& x : f)
      if (x > two_pi - tol) x -= two_pi;
    std::sort(f.begin(), f.end());
    return f;
  };
  std::vector<double> fa = folded(a), fb = folded(b);
  for (std::size_t i = 0; i < fa.size(); ++i) {
    double d = std::abs(fa[i] - fb[i]);
    if (std::min(d, two_pi - d) > tol) return false;
  }
  return true;
}

bool is_self_adjoint(const ComplexMatrix& m, double tol) {
  if (!m.square()) throw std::invalid_argument("is_self_adjoint: not square");
  return max_entry_dist(m, m.adjoint()) <= tol;
}

}  // namespace h6
