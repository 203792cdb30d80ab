#include "h6/mub.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "h6/deltoid.hpp"
#include "h6/x6.hpp"

namespace h6 {
namespace {

constexpr double kBranchTol = 1e-8;  // tau of the branch selection

double unitarity_residual(const ComplexMatrix& m) {
  std::size_t n = m.nrows();
  double res = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex g = 0.0;
      for (std::size_t k = 0; k < n; ++k) g += std::conj(m(k, i)) * m(k, j);
      if (i == j) g -= 1.0;
      res = std::max(res, std::abs(g));
    }
  return res;
}

double principal_arg(Complex z) {
  double a = std::arg(z);
  if (a <= -std::numbers::pi) a = std::numbers::pi;
  return a;
}

}  // namespace

ComplexMatrix compose_2x2(const TwoByTwoFactors& f) {
  Complex u = f.u, v = f.v, x = f.x, y = f.y;
  ComplexMatrix m(2, 2);
  m(0, 0) = (u + v) / 2.0;
  m(0, 1) = y * (u - v) / 2.0;
  m(1, 0) = (u - v) / (2.0 * x);
  m(1, 1) = y * (u + v) / (2.0 * x);
  return m;
}

TwoByTwoFactors decompose_2x2(const ComplexMatrix& m, double tol) {
  if (m.nrows() != 2 || m.ncols() != 2)
    throw std::invalid_argument("decompose_2x2: matrix must be 2x2");
  if (unitarity_residual(m) > tol)
    throw std::invalid_argument("decompose_2x2: matrix not unitary at tol");
  Complex a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);

  if (std::abs(b) <= kBranchTol) {
    // diagonal case
    Phase u = Phase::project(a);
    return TwoByTwoFactors{u, u, Phase::project(u.value() / d), Phase(1.0)};
  }
  if (std::abs(a) <= kBranchTol) {
    // anti-diagonal case: u = 1, v = -1, y(u-v)/2 = b, x = (u-v)/(2c)
    return TwoByTwoFactors{Phase(1.0), Phase(-1.0), Phase::project(1.0 / c),
                           Phase::project(b)};
  }
  // general case: u + v = 2a, uv = det(M) a / d, then y = 2b/(u-v),
  // x = (u-v)/(2c)
  Complex det = a * d - b * c;
  Complex uv = det * a / d;
  Complex disc = std::sqrt(a * a - uv);
  Complex u = a + disc, v = a - disc;
  if (principal_arg(u) > principal_arg(v)) std::swap(u, v);
  Complex umv = u - v;
  return TwoByTwoFactors{Phase::project(u), Phase::project(v),
                         Phase::project(umv / (2.0 * c)),
                         Phase::project(2.0 * b / umv)};
}

BlockDiagonals block_diagonal_form(const ComplexMatrix& t) {
  if (!t.square() || t.nrows() % 2 != 0)
    throw std::invalid_argument("block_diagonal_form: need even square");
  std::size_t m = t.nrows() / 2;
  ComplexMatrix f = fourier_matrix(m);
  ComplexMatrix finv = f.adjoint();

  auto block = [&](std::size_t bi, std::size_t bj) {
    ComplexMatrix out(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) out(i, j) = t(bi * m + i, bj * m + j);
    return out;
  };
  auto circulant_defect = [&](const ComplexMatrix& blk) {
    double d = 0.0;
    for (std::size_t i = 1; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        d = std::max(d, std::abs(blk(i, j) - blk(0, (j + m - i) % m)));
    return d;
  };

  BlockDiagonals out;
  std::vector<Complex>* slots[4] = {&out.a, &out.b, &out.c, &out.d};
  int s = 0;
  for (std::size_t bi = 0; bi < 2; ++bi)
    for (std::size_t bj = 0; bj < 2; ++bj) {
      ComplexMatrix blk = block(bi, bj);
      if (circulant_defect(blk) > 1e-9)
        throw std::invalid_argument("block_diagonal_form: block not circulant");
      // F C F^{-1} and F^{-1} C F both diagonalize a circulant; the first
      // matches the orientation used to assemble Z1, Z2 below
      ComplexMatrix diag = f * blk * finv;
      double leak = 0.0;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          if (i != j) leak = std::max(leak, std::abs(diag(i, j)));
      if (leak > 1e-7) {
        ComplexMatrix alt = finv * blk * f;
        double leak2 = 0.0;
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j)
            if (i != j) leak2 = std::max(leak2, std::abs(alt(i, j)));
        if (leak2 > 1e-7)
          throw std::invalid_argument(
              "block_diagonal_form: off-diagonal leakage in both orientations");
        diag = alt;
      }
      std::vector<Complex>& slot = *slots[s++];
      slot.resize(m);
      for (std::size_t i = 0; i < m; ++i) slot[i] = diag(i, i);
    }
  return out;
}

double MubReport::max_unitarity() const {
  double r = 0.0;
  for (double u : unitarity) r = std::max(r, u);
  return r;
}

double MubReport::max_deviation() const {
  double r = 0.0;
  for (const PairDeviation& p : pairs) r = std::max(r, p.deviation);
  return r;
}

bool MubReport::passes(double tol) const {
  return max_unitarity() <= tol && max_deviation() <= tol;
}

MubReport verify_mub(std::span<const ComplexMatrix> bases, double tol,
                     bool include_standard) {
  if (bases.empty()) throw std::invalid_argument("verify_mub: no bases");
  std::size_t n = bases[0].nrows();
  for (const ComplexMatrix& b : bases)
    if (!b.square() || b.nrows() != n)
      throw std::invalid_argument("verify_mub: dimension mismatch");

  std::vector<ComplexMatrix> all;
  if (include_standard) all.push_back(ComplexMatrix::identity(n));
  all.insert(all.end(), bases.begin(), bases.end());

  MubReport rep;
  rep.dimension = n;
  double target = 1.0 / std::sqrt(static_cast<double>(n));
  for (const ComplexMatrix& b : all)
    rep.unitarity.push_back(unitarity_residual(b));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      // columns of B_i against columns of B_j: entries of B_i^* B_j
      ComplexMatrix g = all[i].adjoint() * all[j];
      double dev = 0.0;
      for (const Complex& e : g.entries())
        dev = std::max(dev, std::abs(std::abs(e) - target));
      rep.pairs.push_back({i, j, dev});
    }
  rep.tolerance = tol;
  rep.ok = rep.passes(tol);
  return rep;
}

MubTriplet zauner_bases(const ComplexMatrix& t) {
  if (!t.square() || t.nrows() % 2 != 0)
    throw std::invalid_argument("zauner_bases: need even square");
  if (unitarity_residual(t) > 1e-8)
    throw std::invalid_argument("zauner_bases: seed not unitary at 1e-8");
  std::size_t m = t.nrows() / 2;

  BlockDiagonals bd = block_diagonal_form(t);  // rejects dephased inputs

  DiagonalPhases up, vp, xp, yp;
  for (std::size_t k = 0; k < m; ++k) {
    ComplexMatrix s(2, 2);
    s(0, 0) = bd.a[k];
    s(0, 1) = bd.b[k];
    s(1, 0) = bd.c[k];
    s(1, 1) = bd.d[k];
    TwoByTwoFactors f = decompose_2x2(s, 1e-7);
    up.push_back(f.u);
    vp.push_back(f.v);
    xp.push_back(f.x);
    yp.push_back(f.y);
  }

  ComplexMatrix fm = fourier_matrix(m);
  double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  MubTriplet out;
  out.z1 = ComplexMatrix(2 * m, 2 * m);
  out.z2 = ComplexMatrix(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Complex fij = fm(i, j) * inv_sqrt2;
      out.z1(i, j) = fij;
      out.z1(i, j + m) = xp[i].value() * fij;
      out.z1(i + m, j) = fij;
      out.z1(i + m, j + m) = -xp[i].value() * fij;
      out.z2(i, j) = up[i].value() * fij;
      out.z2(i, j + m) = up[i].value() * yp[i].value() * fij;
      out.z2(i + m, j) = vp[i].value() * fij;
      out.z2(i + m, j + m) = -vp[i].value() * yp[i].value() * fij;
    }

  if (max_entry_dist(out.z1.adjoint() * out.z2, t) > 1e-7)
    throw std::runtime_error("zauner_bases: Z1^{-1} Z2 does not reproduce T");

  std::array<ComplexMatrix, 2> zs{out.z1, out.z2};
  out.report = verify_mub(zs, 1e-7, /*include_standard=*/true);
  return out;
}

MubTriplet mub_from_alpha(Complex alpha) {
  if (!in_region(alpha))
    throw std::domain_error("mub_from_alpha: alpha outside region D");
  ComplexMatrix h = h_block(block_params(quadruple_from_alpha(alpha)));
  h *= Complex(1.0 / std::sqrt(6.0));
  return zauner_bases(h);
}

}  // namespace h6
