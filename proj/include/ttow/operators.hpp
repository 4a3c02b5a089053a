// Transverse operators and their polynomial action on tensors.
//
// Convention: every non-constant axis acts plainly, by the matrix itself:
// axis 0 by left multiplication of the output, input axis a by substituting
// omega_a v_a. Variance only decides the order of composition.
#pragma once

#include "ttow/poly.hpp"
#include "ttow/tensor.hpp"

#include <map>

namespace ttow {

TTOW_ERROR(VarianceMismatch);
TTOW_ERROR(InvalidExponent);

struct VarianceSignature {
  std::vector<int> sigma; // +1 covariant, -1 contravariant, 0 constant

  VarianceSignature() = default;
  explicit VarianceSignature(std::vector<int> s);
  static VarianceSignature covariant(std::size_t n) {
    return VarianceSignature(std::vector<int>(n, 1));
  }
  std::size_t size() const { return sigma.size(); }
  int operator[](std::size_t a) const { return sigma[a]; }
  std::vector<std::size_t> axes(int s) const;
  bool operator==(const VarianceSignature &o) const { return sigma == o.sigma; }
  bool operator!=(const VarianceSignature &o) const { return !(*this == o); }
};

class TransverseOperator {
public:
  TransverseOperator() = default;
  TransverseOperator(Frame frame, std::vector<DenseMatrix> mats,
                     VarianceSignature variance);
  // All-covariant by default.
  TransverseOperator(Frame frame, std::vector<DenseMatrix> mats);

  static TransverseOperator identity(const Frame &frame,
                                     const VarianceSignature &v);
  static TransverseOperator identity(const Frame &frame) {
    return identity(frame, VarianceSignature::covariant(frame.dims.size()));
  }
  // Zero on every non-constant axis.
  static TransverseOperator zero(const Frame &frame,
                                 const VarianceSignature &v);

  const Frame &frame() const { return frame_; }
  const VarianceSignature &variance() const { return var_; }
  const std::vector<DenseMatrix> &mats() const { return mats_; }
  const DenseMatrix &mat(std::size_t a) const { return mats_.at(a); }

  // Coordinates of the non-constant blocks, axis by axis, row-major.
  Vec flat() const;
  static TransverseOperator from_flat(const Frame &frame,
                                      const VarianceSignature &v,
                                      const Vec &x);
  static std::size_t flat_size(const Frame &frame, const VarianceSignature &v);

  TransverseOperator operator+(const TransverseOperator &o) const;
  TransverseOperator scaled(const Scalar &s) const; // non-constant axes only
  bool operator==(const TransverseOperator &o) const {
    return frame_ == o.frame_ && var_ == o.var_ && mats_ == o.mats_;
  }

private:
  Frame frame_;
  std::vector<DenseMatrix> mats_;
  VarianceSignature var_;
};

// Plain action of m on axis a of t (a = 0: left multiplication of outputs).
Tensor act_on_axis(const Tensor &t, std::size_t a, const DenseMatrix &m);

// Memoized powers omega_a^k for one operator; lives for one computation.
class PowerCache {
public:
  explicit PowerCache(const TransverseOperator &op) : op_(op) {}
  const DenseMatrix &power(std::size_t a, unsigned k);

private:
  const TransverseOperator &op_;
  std::map<std::pair<std::size_t, unsigned>, DenseMatrix> cache_;
};

Tensor apply_monomial(const TransverseOperator &op, const Monomial &e,
                      const Tensor &t, PowerCache *cache = nullptr);
Tensor apply_polynomial(const TransverseOperator &op, const MultiPoly &p,
                        const Tensor &t, PowerCache *cache = nullptr);
bool is_trait(const MultiPoly &p, const Tensor &t, const TransverseOperator &op);

// Covariant axes compose omega_a tau_a, contravariant axes tau_b omega_b.
TransverseOperator compose(const TransverseOperator &omega,
                           const TransverseOperator &tau);

} // namespace ttow
