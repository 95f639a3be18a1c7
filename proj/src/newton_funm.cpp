#include "clusterfunm/newton_funm.hpp"

namespace cfunm {

NewtonPolynomial<Complex> build_newton(const AnalyticFunction& f,
                                       std::span<const Complex> eigenvalues,
                                       const FunmParams& params) {
  return build_newton_generic<Complex>(
      eigenvalues, params,
      [&](std::size_t, Complex center, int alpha) { return f.taylor_coefficient(center, alpha); });
}

Complex eval_scalar(const NewtonPolynomial<Complex>& p, Complex lambda) {
  if (p.size() == 0) throw std::invalid_argument("eval_scalar: empty polynomial");
  Complex acc = p.coefficients.back();
  for (std::size_t j = p.size() - 1; j-- > 0;) acc = acc * (lambda - p.points[j]) + p.coefficients[j];
  return acc;
}

ComplexMatrix eval_matrix(const NewtonPolynomial<Complex>& p, const ComplexMatrix& a) {
  if (!a.square()) throw std::invalid_argument("eval_matrix: matrix must be square");
  if (p.size() == 0) throw std::invalid_argument("eval_matrix: empty polynomial");

  const std::size_t n = a.rows();
  ComplexMatrix acc = ComplexMatrix::identity(n) * p.coefficients.back();
  for (std::size_t j = p.size() - 1; j-- > 0;) {
    ComplexMatrix shifted = a;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= p.points[j];
    acc = mat_mul(acc, shifted);
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += p.coefficients[j];
  }
  return acc;
}

ComplexMatrix funm(const ComplexMatrix& a, std::span<const Complex> eigenvalues,
                   const AnalyticFunction& f, const FunmParams& params) {
  if (!a.square()) throw std::invalid_argument("funm: matrix must be square");
  if (eigenvalues.size() != a.rows())
    throw std::invalid_argument("funm: eigenvalue count must equal the matrix order");
  return eval_matrix(build_newton(f, eigenvalues, params), a);
}

}  // namespace cfunm
