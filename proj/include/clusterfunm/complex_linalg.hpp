#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace cfunm {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Thrown when a matrix is singular to working precision (pivot magnitude
/// below the absolute threshold used by the LU factorization).
struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense complex matrix, row-major storage. Sized for small problems
/// (order up to ~70): plain O(n^3) kernels, no blocking.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Complex> data() const { return data_; }
  std::span<Complex> data() { return data_; }

  std::vector<Complex> diagonal_entries() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(ComplexMatrix a, Complex scale);
ComplexMatrix operator*(Complex scale, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& x);

/// Reference kernel: single-threaded triple loop.
ComplexMatrix mat_mul_serial(const ComplexMatrix& a, const ComplexMatrix& b);

/// Product A*B. Rows are distributed across OpenMP threads once the problem
/// is large enough to pay for it; per-element arithmetic order is identical
/// to mat_mul_serial, so the two agree bit for bit.
ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexVector mat_vec(const ComplexMatrix& a, const ComplexVector& x);

/// Inverse via LU with partial pivoting. Throws SingularMatrixError when a
/// pivot falls below 1e-300 in magnitude.
ComplexMatrix mat_inverse(const ComplexMatrix& a);

/// Largest singular value, i.e. max ||Ax||_2 over unit x. Power iteration on
/// A^H A from a fixed scrambled start vector; stops when the Rayleigh
/// quotient changes by less than 1e-10 relative, capped at 10000 iterations.
double operator_norm(const ComplexMatrix& a);

/// ||T|| * ||T^-1|| in the operator 2-norm. Propagates SingularMatrixError.
double condition_number(const ComplexMatrix& t);

/// Conjugates the first argument: sum_i conj(x_i) * y_i.
Complex inner_product(const ComplexVector& x, const ComplexVector& y);

double vector_norm(const ComplexVector& x);

}  // namespace cfunm
