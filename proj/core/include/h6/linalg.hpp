#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace h6 {

using Complex = std::complex<double>;

/// Tolerance for the unit-modulus check when constructing a Phase.
inline constexpr double kUnitTol = 1e-12;

/// A unit-modulus complex scalar. Entries of Hadamard matrices and of the
/// diagonal unitaries D1, D2 are always phases.
class Phase {
 public:
  Phase() : value_(1.0, 0.0) {}
  /// Throws std::invalid_argument unless ||z| - 1| <= 1e-12.
  explicit Phase(Complex z);
  /// Rescales z to unit modulus. Throws only on zero or non-finite input.
  static Phase project(Complex z);
  static Phase polar(double arg) { return Phase(std::polar(1.0, arg)); }

  Complex value() const { return value_; }
  operator Complex() const { return value_; }
  Phase conj() const;

 private:
  struct Unchecked {};
  Phase(Complex z, Unchecked) : value_(z) {}
  Complex value_;
};

using DiagonalPhases = std::vector<Phase>;

/// Dense rectangular complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t nrows, std::size_t ncols)
      : nrows_(nrows), ncols_(ncols), entries_(nrows * ncols) {}

  static ComplexMatrix identity(std::size_t n);

  std::size_t nrows() const { return nrows_; }
  std::size_t ncols() const { return ncols_; }
  bool square() const { return nrows_ == ncols_; }

  Complex& operator()(std::size_t i, std::size_t j) {
    return entries_[i * ncols_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * ncols_ + j];
  }

  std::span<const Complex> entries() const { return entries_; }

  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix adjoint() const;

  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator*(const ComplexMatrix& a,
                                 const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, ComplexMatrix m) {
    m *= s;
    return m;
  }

 private:
  std::size_t nrows_ = 0;
  std::size_t ncols_ = 0;
  std::vector<Complex> entries_;
};

/// The unitary m-by-m Fourier matrix, entry (j,k) = exp(2*pi*i*j*k/m)/sqrt(m).
ComplexMatrix fourier_matrix(std::size_t m);

/// Circulant matrix with the given first row; row i is the right cyclic
/// shift of row i-1, so entry (i,j) = first_row[(j-i) mod m].
ComplexMatrix circulant(std::span<const Complex> first_row);

/// max(max-entry |MM* - nI|, max over entries of ||m_ij| - 1|).
/// A value near machine epsilon certifies a complex Hadamard matrix.
double hadamard_residual(const ComplexMatrix& m);

/// Max over entries of |a_ij - b_ij|; shapes must agree.
double max_entry_dist(const ComplexMatrix& a, const ComplexMatrix& b);

struct Dephased {
  ComplexMatrix matrix;  // first row and column exactly 1
  DiagonalPhases left;
  DiagonalPhases right;
};

/// Unique dephased form N = D1 M D2 with N[0][j] = N[i][0] = 1.
/// Normalized entries are set to exact 1, not to a computed quotient.
Dephased dephase(const ComplexMatrix& m);

/// Rows scaled by left, columns by right: out[i][j] = left[i]*m[i][j]*right[j].
ComplexMatrix scale_rows_cols(const DiagonalPhases& left,
                              const ComplexMatrix& m,
                              const DiagonalPhases& right);

}  // namespace h6
