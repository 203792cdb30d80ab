#include "h6/x6.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "h6/cubic.hpp"
#include "h6/deltoid.hpp"
#include "h6/matrix_io.hpp"

namespace h6 {

Complex orthogonality_scalar(const BlockParams& p) {
  Complex a = p.a, b = p.b, c = p.c, d = p.d, e = p.e, f = p.f;
  return a / b + b / c + c / a + d / e + e / f + f / d;
}

double quadruple_defect(const Quadruple& q) {
  return std::abs(phi(q.x, q.y) + phi(q.u, q.v));
}

BlockParams block_params(const Quadruple& q) {
  return BlockParams{Phase(1.0),
                     q.x.conj(),
                     Phase::project(std::conj(q.x.value() * q.y.value())),
                     Phase(1.0),
                     q.u.conj(),
                     Phase::project(std::conj(q.u.value() * q.v.value()))};
}

ComplexMatrix h_block(const BlockParams& p) {
  std::array<Complex, 3> arow{p.a.value(), p.b.value(), p.c.value()};
  std::array<Complex, 3> brow{p.d.value(), p.e.value(), p.f.value()};
  ComplexMatrix a = circulant(arow);
  ComplexMatrix b = circulant(brow);
  ComplexMatrix bs = b.adjoint();
  ComplexMatrix mas = Complex(-1.0) * a.adjoint();
  ComplexMatrix h(6, 6);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      h(i, j) = a(i, j);
      h(i, j + 3) = b(i, j);
      h(i + 3, j) = bs(i, j);
      h(i + 3, j + 3) = mas(i, j);
    }
  return h;
}

ComplexMatrix x6_from_quadruple(const Quadruple& q) {
  double defect = quadruple_defect(q);
  if (defect > 1e-6)
    throw std::invalid_argument(
        "x6_from_quadruple: |phi[x,y]+phi[u,v]| = " + format_real(defect) +
        " exceeds 1e-6");
  Complex x = q.x, y = q.y, u = q.u, v = q.v;
  Complex xy = x * y;
  ComplexMatrix m(6, 6);
  for (std::size_t j = 0; j < 6; ++j) m(0, j) = 1.0;
  for (std::size_t i = 1; i < 6; ++i) m(i, 0) = 1.0;

  m(1, 1) = x * xy;        // x^2 y
  m(1, 2) = y * xy;        // x y^2
  m(1, 3) = xy / (u * v);
  m(1, 4) = u * xy;
  m(1, 5) = v * xy;

  m(2, 1) = x / y;
  m(2, 2) = x * xy;
  m(2, 3) = x / u;
  m(2, 4) = x / v;
  m(2, 5) = u * v * x;

  m(3, 1) = u * v * x;
  m(3, 2) = u * xy;
  m(3, 3) = -1.0;
  m(3, 4) = -u * xy;
  m(3, 5) = -u * v * x;

  m(4, 1) = x / u;
  m(4, 2) = v * xy;
  m(4, 3) = -x / u;
  m(4, 4) = -1.0;
  m(4, 5) = -v * xy;

  m(5, 1) = x / v;
  m(5, 2) = xy / (u * v);
  m(5, 3) = -xy / (u * v);
  m(5, 4) = -x / v;
  m(5, 5) = -1.0;
  return m;
}

Quadruple quadruple_from_alpha(Complex alpha) {
  if (!in_region(alpha))
    throw std::domain_error(
        "alpha outside region: D[a]=" + format_real(discriminant(alpha)) +
        " D[-a]=" + format_real(discriminant(-alpha)));
  RootTriple r = solve_falpha(alpha);
  RootTriple q = solve_falpha(-alpha);
  int rd = double_root_index(r);
  int qd = double_root_index(q);

  auto double_pair = [](const RootTriple& t, int i) {
    // boundary pattern r, r, 1/r^2: take x = r and y = 1/r^2 exactly, so that
    // x*y = conj(x) and the resulting matrix is self-adjoint
    Phase x = Phase::project(t.roots[i]);
    Complex cx = x.value();
    return std::pair<Phase, Phase>{x, Phase::project(std::conj(cx * cx))};
  };
  auto simple_pair = [](const RootTriple& t) {
    return std::pair<Phase, Phase>{Phase::project(t.roots[0]),
                                   Phase::project(t.roots[1])};
  };

  if (rd >= 0 && qd >= 0) {
    auto [x, y] = double_pair(r, rd);
    auto [u, v] = double_pair(q, qd);
    return Quadruple{x, y, u, v};
  }
  if (rd >= 0) {
    auto [x, y] = double_pair(r, rd);
    auto [u, v] = simple_pair(q);
    return Quadruple{x, y, u, v};
  }
  if (qd >= 0) {
    // double root on the -alpha side: mirror it into the (x, y) slot
    auto [x, y] = double_pair(q, qd);
    auto [u, v] = simple_pair(r);
    return Quadruple{x, y, u, v};
  }
  auto [x, y] = simple_pair(r);
  auto [u, v] = simple_pair(q);
  return Quadruple{x, y, u, v};
}

ComplexMatrix x6_from_alpha(Complex alpha, FamilyVariant variant) {
  ComplexMatrix m = x6_from_quadruple(quadruple_from_alpha(alpha));
  return variant == FamilyVariant::transpose ? m.transpose() : m;
}

std::vector<ComplexMatrix> all_variants(Complex alpha) {
  if (!in_region(alpha))
    throw std::domain_error("all_variants: alpha outside region D");
  RootTriple r = solve_falpha(alpha);
  RootTriple q = solve_falpha(-alpha);
  constexpr int idx[6][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
  std::vector<ComplexMatrix> out;
  out.reserve(36);
  for (const auto& xi : idx)
    for (const auto& ui : idx)
      out.push_back(x6_from_quadruple(
          Quadruple{Phase::project(r.roots[xi[0]]),
                    Phase::project(r.roots[xi[1]]),
                    Phase::project(q.roots[ui[0]]),
                    Phase::project(q.roots[ui[1]])}));
  return out;
}

}  // namespace h6
