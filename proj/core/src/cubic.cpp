#include "h6/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "h6/deltoid.hpp"

namespace h6 {
namespace {

Complex f_alpha(Complex alpha, Complex x) {
  return ((x - alpha) * x + std::conj(alpha)) * x - 1.0;
}

Complex f_alpha_deriv(Complex alpha, Complex x) {
  return (3.0 * x - 2.0 * alpha) * x + std::conj(alpha);
}

// Argument mapped to (-pi, pi]; std::arg may return -pi.
double principal_arg(Complex z) {
  double a = std::arg(z);
  if (a <= -std::numbers::pi) a = std::numbers::pi;
  return a;
}

}  // namespace

RootTriple solve_falpha_raw(Complex alpha) {
  // Depressed cubic: x = t + alpha/3, t^3 + p t + q = 0.
  Complex ac = std::conj(alpha);
  Complex s = alpha / 3.0;
  Complex p = ac - alpha * alpha / 3.0;
  Complex q = -2.0 * alpha * alpha * alpha / 27.0 + alpha * ac / 3.0 - 1.0;

  std::array<Complex, 3> roots;
  if (std::abs(p) < 1e-30) {
    // t^3 = -q
    Complex base = std::pow(-q, 1.0 / 3.0);
    for (int k = 0; k < 3; ++k)
      roots[k] =
          base * std::polar(1.0, 2.0 * std::numbers::pi * k / 3.0) + s;
  } else {
    Complex w = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
    Complex u3 = -q / 2.0 + w;
    // pick the larger branch to avoid cancellation
    if (std::abs(-q / 2.0 - w) > std::abs(u3)) u3 = -q / 2.0 - w;
    Complex u = std::pow(u3, 1.0 / 3.0);
    for (int k = 0; k < 3; ++k) {
      Complex uk = u * std::polar(1.0, 2.0 * std::numbers::pi * k / 3.0);
      roots[k] = uk - p / (3.0 * uk) + s;
    }
  }

  // Two Newton steps on the original cubic; closed form alone loses digits
  // near the boundary's double roots.
  for (Complex& r : roots)
    for (int it = 0; it < 2; ++it) {
      Complex d = f_alpha_deriv(alpha, r);
      if (std::abs(d) < 1e-14) break;
      r -= f_alpha(alpha, r) / d;
    }

  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    double aa = principal_arg(a), ab = principal_arg(b);
    if (aa != ab) return aa < ab;
    return a.real() > b.real();
  });
  return RootTriple{roots};
}

RootTriple solve_falpha(Complex alpha) {
  RootTriple t = solve_falpha_raw(alpha);
  if (in_region(alpha))
    for (Complex& r : t.roots) r /= std::abs(r);
  return t;
}

int double_root_index(const RootTriple& t) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (std::abs(t.roots[i] - t.roots[j]) < kDoubleRootTol) return i;
  return -1;
}

std::array<std::pair<Phase, Phase>, 6> invert_phi(Complex alpha) {
  if (!in_region(alpha))
    throw std::domain_error("invert_phi: alpha outside region D");
  RootTriple t = solve_falpha(alpha);
  // pairs by index, never by value, so the boundary double root still yields
  // six (coinciding) pairs
  constexpr int idx[6][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
  std::array<std::pair<Phase, Phase>, 6> out;
  for (int k = 0; k < 6; ++k)
    out[k] = {Phase::project(t.roots[idx[k][0]]),
              Phase::project(t.roots[idx[k][1]])};
  return out;
}

}  // namespace h6
