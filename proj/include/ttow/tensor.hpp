// Frames, dense tensors V_1 x ... x V_v -> V_0, and tensor spaces.
#pragma once

#include "ttow/matrix.hpp"

#include <vector>

namespace ttow {

TTOW_ERROR(InvalidAxis);
TTOW_ERROR(FrameMismatch);

using Index = std::vector<std::size_t>;

struct Frame {
  FieldSpec field;
  std::vector<std::size_t> dims; // (d_0, d_1, ..., d_v)

  Frame() = default;
  Frame(FieldSpec f, std::vector<std::size_t> d);

  std::size_t valence() const { return dims.size() - 1; }
  std::size_t size() const; // product of dims
  // Row-major strides, axis 0 slowest.
  std::vector<std::size_t> strides() const;
  bool operator==(const Frame &o) const {
    return field == o.field && dims == o.dims;
  }
  bool operator!=(const Frame &o) const { return !(*this == o); }
};

// Calls fn(idx) for every tuple in the box prod [0, dims[a]) in flat order.
template <class Fn>
void for_each_index(const std::vector<std::size_t> &dims, Fn &&fn) {
  for (auto d : dims)
    if (d == 0)
      return;
  Index idx(dims.size(), 0);
  while (true) {
    fn(static_cast<const Index &>(idx));
    std::size_t a = dims.size();
    while (a > 0) {
      --a;
      if (++idx[a] < dims[a])
        break;
      idx[a] = 0;
      if (a == 0)
        return;
    }
    if (dims.empty())
      return;
  }
}

class Tensor {
public:
  Tensor() = default;
  explicit Tensor(Frame frame); // zero tensor
  Tensor(Frame frame, Vec coeffs);

  const Frame &frame() const { return frame_; }
  const FieldSpec &field() const { return frame_.field; }
  std::size_t valence() const { return frame_.valence(); }
  const Vec &coeffs() const { return coeffs_; }
  Vec &coeffs() { return coeffs_; }

  std::size_t flat(const Index &idx) const;
  const Scalar &at(const Index &idx) const { return coeffs_[flat(idx)]; }
  Scalar &at(const Index &idx) { return coeffs_[flat(idx)]; }

  bool is_zero() const { return is_zero_vec(coeffs_); }
  Tensor operator+(const Tensor &o) const;
  Tensor operator-(const Tensor &o) const;
  Tensor scaled(const Scalar &s) const;
  bool operator==(const Tensor &o) const {
    return frame_ == o.frame_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const Tensor &o) const { return !(*this == o); }

private:
  Frame frame_;
  Vec coeffs_;
};

// Subspace of the tensors on a frame, stored as an RREF basis over the flat
// coordinates so equal spans give identical bases.
class TensorSpace {
public:
  TensorSpace() = default;
  static TensorSpace span(const Frame &frame, const std::vector<Tensor> &gens);
  static TensorSpace full(const Frame &frame);

  const Frame &frame() const { return frame_; }
  const std::vector<Tensor> &basis() const { return basis_; }
  std::size_t dim() const { return basis_.size(); }
  bool contains(const Tensor &t) const;
  bool contains(const TensorSpace &s) const;
  bool operator==(const TensorSpace &o) const {
    return frame_ == o.frame_ && basis_ == o.basis_;
  }

private:
  Frame frame_;
  std::vector<Tensor> basis_;
};

// <t | v_1, ..., v_v> in V_0.
Vec evaluate(const Tensor &t, const std::vector<Vec> &args);

// Fix the inputs on the axes in A (subset of 1..v); remaining axes keep
// their relative order.
Tensor partial_evaluate(const Tensor &t, const std::vector<std::size_t> &axes,
                        const std::vector<Vec> &args);

// Index relocation: old axis a becomes new axis pi[a]. This is a left action,
// shuffle(t, pi o sigma) == shuffle(shuffle(t, sigma), pi).
Tensor shuffle(const Tensor &t, const std::vector<std::size_t> &pi);

// a >= 1: basis of the radical {v_a : <S|..., v_a, ...> = 0}.
// a == 0: basis of the span of all values <t|v>; full iff its size is d_0.
std::vector<Vec> axis_radical(const std::vector<Tensor> &S, std::size_t a);

// Standard basis vector e_i of K^n.
Vec unit_vec(const FieldSpec &f, std::size_t n, std::size_t i);

} // namespace ttow
