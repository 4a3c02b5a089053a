// Operator spaces Op(S, P), named operator algebras, closures Ten(P, Delta),
// densors, symbolic defining equations and torus transforms.
#pragma once

#include "ttow/operators.hpp"

#include <cstdint>
#include <optional>

namespace ttow {

TTOW_ERROR(NonLinearIdeal);
TTOW_ERROR(BudgetExceeded);
TTOW_ERROR(ZeroTorusEntry);

struct OperatorSpace {
  Frame frame;
  VarianceSignature variance;
  std::vector<TransverseOperator> basis;
  // The data that defined the space.
  std::vector<Tensor> S;
  std::vector<MultiPoly> P;

  std::size_t dim() const { return basis.size(); }
  std::vector<Vec> flat_basis() const;
  bool contains(const TransverseOperator &op) const;
  // Same span over flat coordinates.
  bool same_span(const OperatorSpace &o) const;
};

// Per axis (lambda_a, rho_a): omega . tau = lambda_a w_a t_a + rho_a t_a w_a.
struct ProductLaw {
  std::vector<std::pair<Scalar, Scalar>> lr;

  static ProductLaw uniform(const FieldSpec &f, std::size_t n, long long l,
                            long long r);
  static ProductLaw lie(const FieldSpec &f, std::size_t n) {
    return uniform(f, n, 1, -1);
  }
  // (1, 0) on covariant axes and (0, 1) on contravariant ones: the
  // composition order of the variance signature.
  static ProductLaw composition(const FieldSpec &f, const VarianceSignature &v);
};

TransverseOperator product(const TransverseOperator &w,
                           const TransverseOperator &t, const ProductLaw &law);

struct ClosureReport {
  bool closed = true;
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
};

ClosureReport check_product_closure(const OperatorSpace &D,
                                    const ProductLaw &law);
// The identity operator lies in the space.
bool is_unital(const OperatorSpace &D);

// Linear homogeneous p = sum lambda_a x_a imposes, for every t in S,
// lambda_0 w_0 <t|v> + sum_a lambda_a <t|.., w_a v_a, ..> = 0.
OperatorSpace op_space_linear(const std::vector<Tensor> &S,
                              const std::vector<MultiPoly> &P,
                              const VarianceSignature &variance);

enum class AlgebraKind { derivations, centroid, nucleus, adjoint };

struct NamedAlgebra {
  AlgebraKind kind;
  OperatorSpace space;
  ProductLaw law;
  bool closed = false;
  std::optional<bool> unital; // checked for the associative kinds only
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
};

// nucleus(a, b) has the trait x_a - x_b; for a >= 1 axis a is contravariant
// and b covariant, for a = 0 both are covariant. Other axes are constant.
// adjoint is nucleus(1, 2).
NamedAlgebra named_algebra(const std::vector<Tensor> &S, AlgebraKind kind,
                           std::size_t a = 1, std::size_t b = 2);
std::string algebra_kind_name(AlgebraKind k);
AlgebraKind parse_algebra_kind(const std::string &s);

// The derivation polynomial x_0 - x_1 - ... - x_v.
MultiPoly derivation_poly(const FieldSpec &f, std::size_t nvars);

// {s : apply_polynomial(delta, p, s) = 0 for all p, delta}.
TensorSpace ten_closure(const std::vector<MultiPoly> &P,
                        const std::vector<TransverseOperator> &Delta,
                        const Frame &frame);
TensorSpace densor(const std::vector<Tensor> &S);

// Polynomial equations in the entries w{a}_{i}_{j} of an unknown operator.
struct SymbolicSystem {
  Frame frame;
  VarianceSignature variance;
  std::vector<std::string> labels;
  std::vector<std::size_t> offsets; // first variable of each axis
  std::vector<MultiPoly> equations;

  std::size_t nvars() const { return labels.size(); }
  std::size_t var(std::size_t a, std::size_t i, std::size_t j) const {
    return offsets[a] + i * frame.dims[a] + j;
  }
  bool verify_point(const TransverseOperator &op) const;
};

// `budget` caps the total number of terms across intermediate expressions.
SymbolicSystem op_space_equations(const std::vector<Tensor> &S,
                                  const std::vector<MultiPoly> &P,
                                  const VarianceSignature &variance,
                                  std::size_t budget = 2000000);

// Seeded random combinations of the basis; count 0 means 2 + v.
std::vector<TransverseOperator>
generic_points(const OperatorSpace &D, std::size_t count, std::uint64_t seed);

// p^tau(x) = p(tau^{-1} x): the term c x^e becomes c tau^{-e} x^e.
std::vector<MultiPoly> torus_transform(const std::vector<MultiPoly> &P,
                                       const std::vector<Scalar> &tau);
// tau . omega = (tau_a omega_a) on the non-constant axes.
TransverseOperator torus_act(const std::vector<Scalar> &tau,
                             const TransverseOperator &op);
// Op(S, P^tau) = tau . Op(S, P) as spans.
bool torus_relation_holds(const std::vector<Tensor> &S,
                          const std::vector<MultiPoly> &P,
                          const VarianceSignature &variance,
                          const std::vector<Scalar> &tau);

// The isotope w0^{-1} <t| w_1 v_1, ..., w_v v_v>. Requires w_0 invertible.
Tensor isotope(const Tensor &t, const TransverseOperator &w);
// w^{-1} tau w axiswise. Requires every block of w invertible.
TransverseOperator conjugate(const TransverseOperator &tau,
                             const TransverseOperator &w);

} // namespace ttow
