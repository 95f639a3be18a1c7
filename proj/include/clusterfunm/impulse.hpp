#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "clusterfunm/newton_funm.hpp"

namespace cfunm {

/// One basis function of the symbolic output: t -> t^power e^{center t} / power!,
/// tagged with the cluster it came from.
struct BasisFunction {
  std::size_t cluster = 0;
  int power = 0;
  Complex center{0.0, 0.0};

  Complex eval(double t) const;
};

/// Finite linear combination of basis functions; the scalar ring the
/// divided-difference pipeline runs over when the function of the matrix
/// depends on the parameter t. Division is defined only by a Complex
/// (t-independent) divisor, which is exactly what the recurrence produces:
/// dividing by a symbolic value is a type error by construction.
///
/// Canonical form: terms sorted by (cluster, power) with no zero weights.
/// Ring operations are otherwise lossless; see canonicalized() for the
/// readability cleanup applied to finished responses.
class SymbolicCoefficient {
 public:
  SymbolicCoefficient() = default;

  static SymbolicCoefficient unit(std::size_t cluster, int power, Complex center);

  SymbolicCoefficient operator+(const SymbolicCoefficient& other) const;
  SymbolicCoefficient operator-(const SymbolicCoefficient& other) const;
  SymbolicCoefficient operator*(Complex scale) const;
  SymbolicCoefficient operator/(Complex divisor) const;

  /// Copy with weights below 1e-14 of the largest dropped; applied to
  /// finished responses so formulas stay readable.
  SymbolicCoefficient canonicalized() const;

  Complex eval(double t) const;
  bool empty() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Terms in canonical (cluster, power) order.
  std::vector<std::pair<BasisFunction, Complex>> terms() const;

 private:
  struct Key {
    std::size_t cluster;
    int power;
    friend auto operator<=>(const Key&, const Key&) = default;
  };
  struct Value {
    Complex center;
    Complex weight;
  };

  std::map<Key, Value> terms_;

  void prune();
};

/// The LTI system x' = A x + b u, y = <x, d>, with the spectrum of A
/// supplied alongside.
struct ImpulseSystem {
  ComplexMatrix a;
  ComplexVector b;
  ComplexVector d;
  std::vector<Complex> eigenvalues;
};

/// Impulse response t -> <d, e^{At} b> as a closed-form combination of
/// t^alpha e^{center t}/alpha! terms, plus the cluster layout it was built
/// from.
struct SymbolicResponse {
  SymbolicCoefficient combination;
  ClusterPartition clusters;
};

/// The Taylor coefficients of e^{lambda t} about a cluster center, kept
/// symbolic in t: coefficient alpha is the single basis term
/// (cluster_index, alpha, center) with weight one.
std::vector<SymbolicCoefficient> symbolic_taylor_coefficients(std::size_t cluster_index,
                                                              Complex center, int order);

/// Runs the whole Newton pipeline over the symbolic ring and contracts with
/// b and d. Principal entries keep their Taylor structure; non-principal
/// entries divide by plain complex cross-cluster gaps.
SymbolicResponse impulse_response(const ImpulseSystem& system, const FunmParams& params = {});

Complex eval_symbolic(const SymbolicResponse& response, double t);

/// Deterministic human-readable formula, terms in (cluster, power) order.
std::string format_response(const SymbolicResponse& response, int precision = 6);

}  // namespace cfunm
