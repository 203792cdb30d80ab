#include "h6/catalog.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace h6 {
namespace {

const Complex kI(0.0, 1.0);

void fill_row(ComplexMatrix& m, std::size_t i,
              std::initializer_list<Complex> row) {
  std::size_t j = 0;
  for (Complex e : row) m(i, j++) = e;
}

}  // namespace

ComplexMatrix apply_circulant_witness(const CirculantRepWitness& w,
                                      const ComplexMatrix& m) {
  ComplexMatrix out(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      out(i, j) = w.left[i].value() * m(w.row_perm[i], w.col_perm[j]) *
                  w.right[j].value();
  return out;
}

double two_circulant_defect(const ComplexMatrix& m) {
  if (m.nrows() != m.ncols() || m.nrows() % 2 != 0)
    throw std::invalid_argument("two_circulant_defect: need even square");
  std::size_t p = m.nrows() / 2;
  double defect = 0.0;
  for (std::size_t bi = 0; bi < 2; ++bi)
    for (std::size_t bj = 0; bj < 2; ++bj)
      for (std::size_t i = 1; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) {
          Complex got = m(bi * p + i, bj * p + j);
          Complex want = m(bi * p, bj * p + (j + p - i) % p);
          defect = std::max(defect, std::abs(got - want));
        }
  return defect;
}

ComplexMatrix dita_D(Phase t) {
  Complex tc = t.value();
  Complex t3 = tc * tc * tc;
  Complex it3 = kI * t3;
  Complex iot3 = kI / t3;
  ComplexMatrix d(6, 6);
  fill_row(d, 0, {1, 1, 1, 1, 1, 1});
  fill_row(d, 1, {1, -1, -iot3, kI, -kI, iot3});
  fill_row(d, 2, {1, -it3, -1, -kI, it3, kI});
  fill_row(d, 3, {1, kI, -kI, -1, kI, -kI});
  fill_row(d, 4, {1, -kI, iot3, kI, -1, -iot3});
  fill_row(d, 5, {1, it3, kI, -kI, -it3, -1});
  return d;
}

CirculantRepWitness dita_circulant_witness(Phase t) {
  Complex tc = t.value();
  CirculantRepWitness w;
  w.row_perm = {0, 1, 2, 3, 4, 5};
  w.col_perm = {0, 1, 2, 3, 4, 5};
  for (Complex z : {Complex(1), kI * tc, kI / tc, Complex(1), tc, -1.0 / tc})
    w.left.push_back(Phase::project(z));
  for (Complex z : {Complex(1), kI / tc, kI * tc, Complex(1), 1.0 / tc, -tc})
    w.right.push_back(Phase::project(z));
  ComplexMatrix& e = w.expected;
  e = ComplexMatrix(6, 6);
  Complex iot = kI / tc, it = kI * tc, ot = 1.0 / tc;
  fill_row(e, 0, {1, iot, it, 1, ot, -tc});
  fill_row(e, 1, {it, 1, iot, -tc, 1, ot});
  fill_row(e, 2, {iot, it, 1, ot, -tc, 1});
  fill_row(e, 3, {1, -ot, tc, -1, iot, it});
  fill_row(e, 4, {tc, 1, -ot, it, -1, iot});
  fill_row(e, 5, {-ot, tc, 1, iot, it, -1});
  return w;
}

ComplexMatrix bn_B(Phase xp, Phase yp, Phase zp) {
  Complex x = xp.value(), y = yp.value(), z = zp.value();
  Complex xyz = x * y * z;
  ComplexMatrix b(6, 6);
  fill_row(b, 0, {1, 1, 1, 1, 1, 1});
  fill_row(b, 1, {1, -1, -1.0 / x, -y, y, 1.0 / x});
  fill_row(b, 2, {1, -x, 1, y, 1.0 / z, -1.0 / xyz});
  fill_row(b, 3, {1, -1.0 / y, 1.0 / y, -1, -1.0 / xyz, 1.0 / xyz});
  fill_row(b, 4, {1, 1.0 / y, z, -xyz, 1, -1.0 / x});
  fill_row(b, 5, {1, x, -xyz, xyz, -x, -1});
  return b;
}

Complex principal_cbrt(Phase z) {
  double a = std::arg(z.value());
  if (a <= -std::numbers::pi) a = std::numbers::pi;
  return std::polar(1.0, a / 3.0);
}

CirculantRepWitness bn_circulant_witness(Phase xp, Phase yp, Phase zp) {
  Complex x = xp.value(), y = yp.value();
  Complex c = principal_cbrt(zp);  // cube root, argument in (-pi/3, pi/3]
  Complex c2 = c * c;
  CirculantRepWitness w;
  // P = [e1,e4,e2,e5,e3,e6], Q = [e5,e1,e3,e4,e6,e2] as column selections
  w.row_perm = {0, 2, 4, 1, 3, 5};
  w.col_perm = {4, 0, 2, 3, 5, 1};
  for (Complex d :
       {Complex(1), c, 1.0 / c, 1.0 / y, c, -1.0 / (x * y * c)})
    w.left.push_back(Phase::project(d));
  for (Complex d : {Complex(1), 1.0 / c, 1.0 / c2, Complex(1), -x * y * c2,
                    y * c})
    w.right.push_back(Phase::project(d));
  ComplexMatrix& e = w.expected;
  e = ComplexMatrix(6, 6);
  Complex xyc2 = x * y * c2, yc = y * c;
  fill_row(e, 0, {1, 1.0 / c, 1.0 / c2, 1, -xyc2, yc});
  fill_row(e, 1, {1.0 / c2, 1, 1.0 / c, yc, 1, -xyc2});
  fill_row(e, 2, {1.0 / c, 1.0 / c2, 1, -xyc2, yc, 1});
  fill_row(e, 3, {1, 1.0 / yc, -1.0 / xyc2, -1, -c2, -c});
  fill_row(e, 4, {-1.0 / xyc2, 1, 1.0 / yc, -c, -1, -c2});
  fill_row(e, 5, {1.0 / yc, -1.0 / xyc2, 1, -c2, -c, -1});
  return w;
}

ComplexMatrix generalized_fourier(double a_phase, double b_phase) {
  ComplexMatrix m(6, 6);
  std::array<Complex, 3> delta{1.0, std::polar(1.0, a_phase),
                               std::polar(1.0, b_phase)};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      // unimodular F_3 entry
      Complex g = std::polar(
          1.0, 2.0 * std::numbers::pi * static_cast<double>((i * j) % 3) / 3.0);
      m(i, j) = g;
      m(i, j + 3) = delta[i] * g;
      m(i + 3, j) = g;
      m(i + 3, j + 3) = -delta[i] * g;
    }
  return m;
}

}  // namespace h6
