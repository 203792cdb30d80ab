#include "h6/linalg.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace h6 {

Phase::Phase(Complex z) : value_(z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::invalid_argument("Phase: non-finite value");
  if (std::abs(std::abs(z) - 1.0) > kUnitTol)
    throw std::invalid_argument("Phase: modulus deviates from 1 beyond 1e-12");
}

Phase Phase::project(Complex z) {
  double r = std::abs(z);
  if (!std::isfinite(r) || r == 0.0)
    throw std::invalid_argument("Phase::project: zero or non-finite value");
  return Phase(z / r, Unchecked{});
}

Phase Phase::conj() const { return Phase(std::conj(value_), Unchecked{}); }

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(ncols_, nrows_);
  for (std::size_t i = 0; i < nrows_; ++i)
    for (std::size_t j = 0; j < ncols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(nrows_, ncols_);
  for (std::size_t k = 0; k < entries_.size(); ++k)
    out.entries_[k] = std::conj(entries_[k]);
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const { return conjugate().transpose(); }

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.ncols() != b.nrows())
    throw std::invalid_argument("matrix product: inner dimension mismatch");
  ComplexMatrix out(a.nrows(), b.ncols());
  for (std::size_t i = 0; i < a.nrows(); ++i)
    for (std::size_t k = 0; k < a.ncols(); ++k) {
      Complex aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.ncols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

ComplexMatrix fourier_matrix(std::size_t m) {
  if (m < 1) throw std::invalid_argument("fourier_matrix: m must be >= 1");
  ComplexMatrix f(m, m);
  double scale = 1.0 / std::sqrt(static_cast<double>(m));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) {
      // reduce j*k mod m before taking the exponential
      double arg = 2.0 * std::numbers::pi *
                   static_cast<double>((j * k) % m) / static_cast<double>(m);
      f(j, k) = scale * std::polar(1.0, arg);
    }
  return f;
}

ComplexMatrix circulant(std::span<const Complex> first_row) {
  std::size_t m = first_row.size();
  if (m == 0) throw std::invalid_argument("circulant: empty first row");
  ComplexMatrix c(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      c(i, j) = first_row[(j + m - i % m) % m];
  return c;
}

double hadamard_residual(const ComplexMatrix& m) {
  if (!m.square())
    throw std::invalid_argument("hadamard_residual: matrix not square");
  std::size_t n = m.nrows();
  double res = 0.0;
  for (const Complex& e : m.entries())
    res = std::max(res, std::abs(std::abs(e) - 1.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex g = 0.0;
      for (std::size_t k = 0; k < n; ++k) g += m(i, k) * std::conj(m(j, k));
      if (i == j) g -= static_cast<double>(n);
      res = std::max(res, std::abs(g));
    }
  return res;
}

double max_entry_dist(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.nrows() != b.nrows() || a.ncols() != b.ncols())
    throw std::invalid_argument("max_entry_dist: shape mismatch");
  double d = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k)
    d = std::max(d, std::abs(a.entries()[k] - b.entries()[k]));
  return d;
}

Dephased dephase(const ComplexMatrix& m) {
  if (!m.square()) throw std::invalid_argument("dephase: matrix not square");
  std::size_t n = m.nrows();
  for (const Complex& e : m.entries())
    if (e == 0.0) throw std::invalid_argument("dephase: zero entry");

  Complex m00 = m(0, 0);
  Dephased out;
  out.matrix = ComplexMatrix(n, n);
  out.left.reserve(n);
  out.right.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.left.push_back(Phase::project(1.0 / m(i, 0)));
  for (std::size_t j = 0; j < n; ++j)
    out.right.push_back(Phase::project(m00 / m(0, j)));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == 0 || j == 0)
        out.matrix(i, j) = 1.0;
      else
        out.matrix(i, j) = m(i, j) * m00 / (m(i, 0) * m(0, j));
    }
  return out;
}

ComplexMatrix scale_rows_cols(const DiagonalPhases& left,
                              const ComplexMatrix& m,
                              const DiagonalPhases& right) {
  if (left.size() != m.nrows() || right.size() != m.ncols())
    throw std::invalid_argument("scale_rows_cols: diagonal size mismatch");
  ComplexMatrix out(m.nrows(), m.ncols());
  for (std::size_t i = 0; i < m.nrows(); ++i)
    for (std::size_t j = 0; j < m.ncols(); ++j)
      out(i, j) = left[i].value() * m(i, j) * right[j].value();
  return out;
}

}  // namespace h6
