#include "ttow/tensor.hpp"

#include <algorithm>

namespace ttow {

Frame::Frame(FieldSpec f, std::vector<std::size_t> d)
    : field(f), dims(std::move(d)) {
  if (dims.empty())
    throw DimensionMismatch("a frame needs at least the output axis");
  for (auto x : dims)
    if (x == 0)
      throw DimensionMismatch("frame dimensions must be positive");
}

std::size_t Frame::size() const {
  std::size_t n = 1;
  for (auto d : dims)
    n *= d;
  return n;
}

std::vector<std::size_t> Frame::strides() const {
  std::vector<std::size_t> s(dims.size(), 1);
  for (std::size_t a = dims.size(); a-- > 1;)
    s[a - 1] = s[a] * dims[a];
  return s;
}

Vec unit_vec(const FieldSpec &f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

Tensor::Tensor(Frame frame)
    : frame_(std::move(frame)), coeffs_(zero_vec(frame_.field, frame_.size())) {
}

Tensor::Tensor(Frame frame, Vec coeffs)
    : frame_(std::move(frame)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != frame_.size())
    throw DimensionMismatch("coefficient count does not match the frame");
  for (const auto &c : coeffs_)
    if (c.field() != frame_.field)
      throw FieldMismatch("tensor entry over another field");
}

std::size_t Tensor::flat(const Index &idx) const {
  if (idx.size() != frame_.dims.size())
    throw DimensionMismatch("index length");
  std::size_t k = 0;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    if (idx[a] >= frame_.dims[a])
      throw DimensionMismatch("index out of range");
    k = k * frame_.dims[a] + idx[a];
  }
  return k;
}

Tensor Tensor::operator+(const Tensor &o) const {
  if (frame_ != o.frame_)
    throw FrameMismatch("tensor sum over different frames");
  Tensor r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    r.coeffs_[i] += o.coeffs_[i];
  return r;
}

Tensor Tensor::operator-(const Tensor &o) const {
  if (frame_ != o.frame_)
    throw FrameMismatch("tensor difference over different frames");
  Tensor r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    r.coeffs_[i] -= o.coeffs_[i];
  return r;
}

Tensor Tensor::scaled(const Scalar &s) const {
  Tensor r = *this;
  for (auto &c : r.coeffs_)
    c *= s;
  return r;
}

TensorSpace TensorSpace::span(const Frame &frame,
                              const std::vector<Tensor> &gens) {
  TensorSpace s;
  s.frame_ = frame;
  RowReducer r(frame.field, frame.size());
  for (const auto &t : gens) {
    if (t.frame() != frame)
      throw FrameMismatch("generator on another frame");
    r.add_row(t.coeffs());
  }
  for (auto &row : r.basis())
    s.basis_.emplace_back(frame, std::move(row));
  return s;
}

TensorSpace TensorSpace::full(const Frame &frame) {
  TensorSpace s;
  s.frame_ = frame;
  for (std::size_t i = 0; i < frame.size(); ++i)
    s.basis_.emplace_back(frame, unit_vec(frame.field, frame.size(), i));
  return s;
}

bool TensorSpace::contains(const Tensor &t) const {
  if (t.frame() != frame_)
    return false;
  RowReducer r(frame_.field, frame_.size());
  for (const auto &b : basis_)
    r.add_row(b.coeffs());
  return r.in_span(t.coeffs());
}

bool TensorSpace::contains(const TensorSpace &s) const {
  if (s.frame_ != frame_)
    return false;
  RowReducer r(frame_.field, frame_.size());
  for (const auto &b : basis_)
    r.add_row(b.coeffs());
  return std::all_of(s.basis_.begin(), s.basis_.end(),
                     [&](const Tensor &t) { return r.in_span(t.coeffs()); });
}

Vec evaluate(const Tensor &t, const std::vector<Vec> &args) {
  const auto &dims = t.frame().dims;
  if (args.size() != t.valence())
    throw DimensionMismatch("evaluate needs one argument per input axis");
  for (std::size_t a = 0; a < args.size(); ++a)
    if (args[a].size() != dims[a + 1])
      throw DimensionMismatch("argument length on axis " +
                              std::to_string(a + 1));
  const FieldSpec &f = t.field();
  Vec out = zero_vec(f, dims[0]);
  std::size_t k = 0;
  for_each_index(dims, [&](const Index &idx) {
    const Scalar &c = t.coeffs()[k++];
    if (c.is_zero())
      return;
    Scalar w = c;
    for (std::size_t a = 1; a < idx.size(); ++a) {
      const Scalar &x = args[a - 1][idx[a]];
      if (x.is_zero())
        return;
      w *= x;
    }
    out[idx[0]] += w;
  });
  return out;
}

Tensor partial_evaluate(const Tensor &t, const std::vector<std::size_t> &axes,
                        const std::vector<Vec> &args) {
  const auto &dims = t.frame().dims;
  if (axes.empty())
    throw InvalidAxis("partial evaluation needs at least one axis");
  if (axes.size() != args.size())
    throw DimensionMismatch("one argument per fixed axis");
  std::vector<long> slot(dims.size(), -1);
  for (std::size_t i = 0; i < axes.size(); ++i) {
    std::size_t a = axes[i];
    if (a == 0)
      throw InvalidAxis("axis 0 cannot be fixed");
    if (a >= dims.size() || slot[a] >= 0)
      throw InvalidAxis("bad or repeated axis " + std::to_string(a));
    if (args[i].size() != dims[a])
      throw DimensionMismatch("argument length on axis " + std::to_string(a));
    slot[a] = static_cast<long>(i);
  }
  std::vector<std::size_t> keep, ndims;
  for (std::size_t a = 0; a < dims.size(); ++a)
    if (slot[a] < 0) {
      keep.push_back(a);
      ndims.push_back(dims[a]);
    }
  Tensor out(Frame(t.field(), ndims));
  auto ostr = out.frame().strides();
  std::size_t k = 0;
  for_each_index(dims, [&](const Index &idx) {
    const Scalar &c = t.coeffs()[k++];
    if (c.is_zero())
      return;
    Scalar w = c;
    for (std::size_t a = 1; a < dims.size(); ++a)
      if (slot[a] >= 0) {
        const Scalar &x = args[static_cast<std::size_t>(slot[a])][idx[a]];
        if (x.is_zero())
          return;
        w *= x;
      }
    std::size_t pos = 0;
    for (std::size_t i = 0; i < keep.size(); ++i)
      pos += idx[keep[i]] * ostr[i];
    out.coeffs()[pos] += w;
  });
  return out;
}

Tensor shuffle(const Tensor &t, const std::vector<std::size_t> &pi) {
  const auto &dims = t.frame().dims;
  std::size_t n = dims.size();
  if (pi.size() != n)
    throw InvalidAxis("permutation length must be v+1");
  std::vector<bool> seen(n, false);
  for (auto x : pi) {
    if (x >= n || seen[x])
      throw InvalidAxis("not a permutation");
    seen[x] = true;
  }
  std::vector<std::size_t> nd(n);
  for (std::size_t a = 0; a < n; ++a)
    nd[pi[a]] = dims[a];
  Tensor out(Frame(t.field(), nd));
  auto ostr = out.frame().strides();
  std::size_t k = 0;
  for_each_index(dims, [&](const Index &idx) {
    std::size_t pos = 0;
    for (std::size_t a = 0; a < n; ++a)
      pos += idx[a] * ostr[pi[a]];
    out.coeffs()[pos] = t.coeffs()[k++];
  });
  return out;
}

std::vector<Vec> axis_radical(const std::vector<Tensor> &S, std::size_t a) {
  if (S.empty())
    throw DimensionMismatch("axis_radical needs a nonempty tensor list");
  const Frame &fr = S[0].frame();
  for (const auto &t : S)
    if (t.frame() != fr)
      throw FrameMismatch("tensors on different frames");
  if (a > fr.valence())
    throw InvalidAxis("axis out of range");
  const FieldSpec &f = fr.field;
  const auto &dims = fr.dims;
  if (a == 0) {
    // Image span: each slice t[., i_1..i_v] is a value <t|e_i>.
    RowReducer r(f, dims[0]);
    std::vector<std::size_t> in(dims.begin() + 1, dims.end());
    auto str = fr.strides();
    for (const auto &t : S)
      for_each_index(in, [&](const Index &idx) {
        Vec v = zero_vec(f, dims[0]);
        std::size_t base = 0;
        for (std::size_t b = 0; b < idx.size(); ++b)
          base += idx[b] * str[b + 1];
        for (std::size_t i = 0; i < dims[0]; ++i)
          v[i] = t.coeffs()[base + i * str[0]];
        r.add_row(v);
      });
    return r.basis();
  }
  // Rows: one per (tensor, index with axis a removed); columns: k in V_a.
  RowReducer r(f, dims[a]);
  std::vector<std::size_t> other = dims;
  other[a] = 1;
  auto str = fr.strides();
  for (const auto &t : S)
    for_each_index(other, [&](const Index &idx) {
      std::size_t base = 0;
      for (std::size_t b = 0; b < idx.size(); ++b)
        base += idx[b] * str[b];
      Vec row(dims[a], Scalar::zero(f));
      for (std::size_t k = 0; k < dims[a]; ++k)
        row[k] = t.coeffs()[base + k * str[a]];
      r.add_row(row);
    });
  return r.kernel();
}

} // namespace ttow
