#include "clusterfunm/complex_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>

namespace cfunm {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string(op) + ": shape mismatch");
}

// Pivot magnitudes below this are treated as exact singularity.
constexpr double kPivotThreshold = 1e-300;

// Work per output element times element count; below this the OpenMP fork
// costs more than the loop.
constexpr std::size_t kParallelFlopThreshold = std::size_t{1} << 18;

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Complex(1.0, 0.0);
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> entries) {
  ComplexMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

std::vector<Complex> ComplexMatrix::diagonal_entries() const {
  const std::size_t n = std::min(rows_, cols_);
  std::vector<Complex> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = (*this)(i, i);
  return d;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "matrix add");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "matrix subtract");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& v : data_) v *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(ComplexMatrix a, Complex scale) { return a *= scale; }
ComplexMatrix operator*(Complex scale, ComplexMatrix a) { return a *= scale; }
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return mat_mul(a, b); }
ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& x) { return mat_vec(a, x); }

namespace {

inline void mat_mul_row(const ComplexMatrix& a, const ComplexMatrix& b, ComplexMatrix& out,
                        std::size_t i) {
  const std::size_t k = a.cols();
  const std::size_t cols = b.cols();
  for (std::size_t j = 0; j < cols; ++j) {
    Complex acc(0.0, 0.0);
    for (std::size_t p = 0; p < k; ++p) acc += a(i, p) * b(p, j);
    out(i, j) = acc;
  }
}

}  // namespace

ComplexMatrix mat_mul_serial(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: inner dimensions differ");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) mat_mul_row(a, b, out, i);
  return out;
}

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: inner dimensions differ");
  ComplexMatrix out(a.rows(), b.cols());
  const std::size_t flops = a.rows() * a.cols() * b.cols();
  const std::int64_t rows = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static) if (flops >= kParallelFlopThreshold)
  for (std::int64_t i = 0; i < rows; ++i) mat_mul_row(a, b, out, static_cast<std::size_t>(i));
  return out;
}

ComplexVector mat_vec(const ComplexMatrix& a, const ComplexVector& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
  ComplexVector y(a.rows(), Complex(0.0, 0.0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex acc(0.0, 0.0);
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

ComplexMatrix mat_inverse(const ComplexMatrix& a) {
  if (!a.square()) throw std::invalid_argument("mat_inverse: matrix must be square");
  const std::size_t n = a.rows();
  ComplexMatrix lu = a;
  std::vector<std::size_t> pivot(n);

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = col;
    double best_mag = std::abs(lu(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const double mag = std::abs(lu(r, col));
      if (mag > best_mag) {
        best_mag = mag;
        best = r;
      }
    }
    if (best_mag < kPivotThreshold)
      throw SingularMatrixError("mat_inverse: matrix is singular to working precision");
    pivot[col] = best;
    if (best != col)
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(col, j), lu(best, j));
    const Complex inv_pivot = Complex(1.0, 0.0) / lu(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex factor = lu(r, col) * inv_pivot;
      lu(r, col) = factor;
      for (std::size_t j = col + 1; j < n; ++j) lu(r, j) -= factor * lu(col, j);
    }
  }

  // Solve LU x = P e_k column by column.
  ComplexMatrix inv(n, n);
  std::vector<Complex> work(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) work[i] = (i == k) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      if (pivot[i] != i) std::swap(work[i], work[pivot[i]]);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j) work[i] -= lu(i, j) * work[j];
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t j = i + 1; j < n; ++j) work[i] -= lu(i, j) * work[j];
      work[i] /= lu(i, i);
    }
    for (std::size_t i = 0; i < n; ++i) inv(i, k) = work[i];
  }
  return inv;
}

namespace {

// Fixed-seed scrambling for the power-iteration start vector. splitmix64;
// deterministic so repeated norm calls agree exactly.
inline std::uint64_t mix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline double unit_interval(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

}  // namespace

double operator_norm(const ComplexMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  const std::size_t n = a.cols();

  std::uint64_t state = 0x8f3c9a2d17b45e61ULL;
  ComplexVector x(n);
  for (auto& v : x) {
    const double re = 2.0 * unit_interval(mix64(state)) - 1.0;
    const double im = 2.0 * unit_interval(mix64(state)) - 1.0;
    v = Complex(re, im);
  }
  double xn = vector_norm(x);
  if (xn == 0.0) x[0] = Complex(1.0, 0.0), xn = 1.0;
  for (auto& v : x) v /= xn;

  double rayleigh = 0.0;
  for (int iter = 0; iter < 10000; ++iter) {
    // y = A x, then z = A^H y; Rayleigh quotient of A^H A is ||y||^2.
    ComplexVector y = mat_vec(a, x);
    double ysq = 0.0;
    for (const auto& v : y) ysq += std::norm(v);
    const double prev = rayleigh;
    rayleigh = ysq;
    if (ysq == 0.0) return 0.0;
    if (iter > 0 && std::abs(rayleigh - prev) <= 1e-10 * rayleigh) break;

    ComplexVector z(n, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < n; ++j) z[j] += std::conj(a(i, j)) * y[i];
    const double zn = vector_norm(z);
    if (zn == 0.0) break;
    for (std::size_t j = 0; j < n; ++j) x[j] = z[j] / zn;
  }
  return std::sqrt(rayleigh);
}

double condition_number(const ComplexMatrix& t) {
  if (!t.square()) throw std::invalid_argument("condition_number: matrix must be square");
  return operator_norm(t) * operator_norm(mat_inverse(t));
}

Complex inner_product(const ComplexVector& x, const ComplexVector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("inner_product: length mismatch");
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) acc += std::conj(x[i]) * y[i];
  return acc;
}

double vector_norm(const ComplexVector& x) {
  double sq = 0.0;
  for (const auto& v : x) sq += std::norm(v);
  return std::sqrt(sq);
}

}  // namespace cfunm
