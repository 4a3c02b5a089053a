#include "ttow/operators.hpp"

namespace ttow {

VarianceSignature::VarianceSignature(std::vector<int> s) : sigma(std::move(s)) {
  for (int x : sigma)
    if (x < -1 || x > 1)
      throw VarianceMismatch("variance entries must be -1, 0 or +1");
}

std::vector<std::size_t> VarianceSignature::axes(int s) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < sigma.size(); ++a)
    if (sigma[a] == s)
      out.push_back(a);
  return out;
}

TransverseOperator::TransverseOperator(Frame frame,
                                       std::vector<DenseMatrix> mats,
                                       VarianceSignature variance)
    : frame_(std::move(frame)), mats_(std::move(mats)),
      var_(std::move(variance)) {
  if (mats_.size() != frame_.dims.size() || var_.size() != frame_.dims.size())
    throw DimensionMismatch("operator needs one matrix and variance per axis");
  for (std::size_t a = 0; a < mats_.size(); ++a) {
    const auto &m = mats_[a];
    if (m.rows() != frame_.dims[a] || m.cols() != frame_.dims[a])
      throw DimensionMismatch("operator block on axis " + std::to_string(a) +
                              " has the wrong shape");
    if (m.field() != frame_.field)
      throw FieldMismatch("operator block over another field");
    if (var_[a] == 0 && !m.is_identity())
      throw VarianceMismatch("constant axis " + std::to_string(a) +
                             " must carry the identity");
  }
}

TransverseOperator::TransverseOperator(Frame frame,
                                       std::vector<DenseMatrix> mats)
    : TransverseOperator(frame, std::move(mats),
                         VarianceSignature::covariant(frame.dims.size())) {}

TransverseOperator TransverseOperator::identity(const Frame &frame,
                                                const VarianceSignature &v) {
  std::vector<DenseMatrix> m;
  for (auto d : frame.dims)
    m.push_back(DenseMatrix::identity(frame.field, d));
  return TransverseOperator(frame, std::move(m), v);
}

TransverseOperator TransverseOperator::zero(const Frame &frame,
                                            const VarianceSignature &v) {
  std::vector<DenseMatrix> m;
  for (std::size_t a = 0; a < frame.dims.size(); ++a)
    m.push_back(v.sigma.at(a) == 0
                    ? DenseMatrix::identity(frame.field, frame.dims[a])
                    : DenseMatrix(frame.field, frame.dims[a], frame.dims[a]));
  return TransverseOperator(frame, std::move(m), v);
}

std::size_t TransverseOperator::flat_size(const Frame &frame,
                                          const VarianceSignature &v) {
  std::size_t n = 0;
  for (std::size_t a = 0; a < frame.dims.size(); ++a)
    if (v[a] != 0)
      n += frame.dims[a] * frame.dims[a];
  return n;
}

Vec TransverseOperator::flat() const {
  Vec x;
  for (std::size_t a = 0; a < mats_.size(); ++a)
    if (var_[a] != 0)
      x.insert(x.end(), mats_[a].data().begin(), mats_[a].data().end());
  return x;
}

TransverseOperator TransverseOperator::from_flat(const Frame &frame,
                                                 const VarianceSignature &v,
                                                 const Vec &x) {
  if (x.size() != flat_size(frame, v))
    throw DimensionMismatch("flat operator coordinates have the wrong length");
  std::vector<DenseMatrix> m;
  std::size_t pos = 0;
  for (std::size_t a = 0; a < frame.dims.size(); ++a) {
    std::size_t d = frame.dims[a];
    if (v[a] == 0) {
      m.push_back(DenseMatrix::identity(frame.field, d));
      continue;
    }
    DenseMatrix b(frame.field, d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        b(i, j) = x[pos++];
    m.push_back(std::move(b));
  }
  return TransverseOperator(frame, std::move(m), v);
}

TransverseOperator
TransverseOperator::operator+(const TransverseOperator &o) const {
  if (frame_ != o.frame_)
    throw FrameMismatch("operator sum over different frames");
  if (var_ != o.var_)
    throw VarianceMismatch("operator sum with different variance");
  std::vector<DenseMatrix> m;
  for (std::size_t a = 0; a < mats_.size(); ++a)
    m.push_back(var_[a] == 0 ? mats_[a] : mats_[a] + o.mats_[a]);
  return TransverseOperator(frame_, std::move(m), var_);
}

TransverseOperator TransverseOperator::scaled(const Scalar &s) const {
  std::vector<DenseMatrix> m;
  for (std::size_t a = 0; a < mats_.size(); ++a)
    m.push_back(var_[a] == 0 ? mats_[a] : mats_[a].scaled(s));
  return TransverseOperator(frame_, std::move(m), var_);
}

Tensor act_on_axis(const Tensor &t, std::size_t a, const DenseMatrix &m) {
  const auto &dims = t.frame().dims;
  if (a >= dims.size())
    throw InvalidAxis("axis out of range");
  std::size_t d = dims[a];
  if (m.rows() != d || m.cols() != d)
    throw DimensionMismatch("matrix does not fit axis " + std::to_string(a));
  if (m.is_identity())
    return t;
  Tensor out(t.frame());
  auto str = t.frame().strides();
  std::size_t s = str[a];
  std::vector<std::size_t> other = dims;
  other[a] = 1;
  // For each fibre along axis a: out_fibre = M x (a = 0) or M^T x (a >= 1).
  for_each_index(other, [&](const Index &idx) {
    std::size_t base = 0;
    for (std::size_t b = 0; b < idx.size(); ++b)
      base += idx[b] * str[b];
    for (std::size_t k = 0; k < d; ++k) {
      const Scalar &x = t.coeffs()[base + k * s];
      if (x.is_zero())
        continue;
      for (std::size_t j = 0; j < d; ++j) {
        const Scalar &w = a == 0 ? m(j, k) : m(k, j);
        if (!w.is_zero())
          out.coeffs()[base + j * s] += w * x;
      }
    }
  });
  return out;
}

const DenseMatrix &PowerCache::power(std::size_t a, unsigned k) {
  auto key = std::make_pair(a, k);
  auto it = cache_.find(key);
  if (it != cache_.end())
    return it->second;
  DenseMatrix p;
  const DenseMatrix &m = op_.mat(a);
  if (k == 0)
    p = DenseMatrix::identity(m.field(), m.rows());
  else if (k == 1)
    p = m;
  else if (k % 2 == 0) {
    const DenseMatrix &h = power(a, k / 2);
    p = h * h;
  } else {
    p = power(a, k - 1) * m;
  }
  return cache_.emplace(key, std::move(p)).first->second;
}

Tensor apply_monomial(const TransverseOperator &op, const Monomial &e,
                      const Tensor &t, PowerCache *cache) {
  if (op.frame() != t.frame())
    throw DimensionMismatch("operator and tensor frames differ");
  if (e.size() != t.frame().dims.size())
    throw DimensionMismatch("exponent vector needs length v+1");
  PowerCache local(op);
  PowerCache &pc = cache ? *cache : local;
  Tensor r = t;
  for (std::size_t a = 0; a < e.size(); ++a) {
    if (e[a] == 0)
      continue;
    if (op.variance()[a] == 0)
      throw InvalidExponent("nonzero exponent on constant axis " +
                            std::to_string(a));
    r = act_on_axis(r, a, pc.power(a, e[a]));
  }
  return r;
}

Tensor apply_polynomial(const TransverseOperator &op, const MultiPoly &p,
                        const Tensor &t, PowerCache *cache) {
  if (p.nvars() != t.frame().dims.size())
    throw DimensionMismatch("polynomial needs exactly v+1 variables");
  if (p.field() != t.field())
    throw FieldMismatch("polynomial and tensor over different fields");
  PowerCache local(op);
  PowerCache &pc = cache ? *cache : local;
  Tensor r(t.frame());
  for (const auto &[m, c] : p.terms())
    r = r + apply_monomial(op, m, t, &pc).scaled(c);
  return r;
}

bool is_trait(const MultiPoly &p, const Tensor &t,
              const TransverseOperator &op) {
  return apply_polynomial(op, p, t).is_zero();
}

TransverseOperator compose(const TransverseOperator &omega,
                           const TransverseOperator &tau) {
  if (omega.frame() != tau.frame())
    throw FrameMismatch("composition over different frames");
  if (omega.variance() != tau.variance())
    throw VarianceMismatch("composition with different variance");
  std::vector<DenseMatrix> m;
  const auto &v = omega.variance();
  for (std::size_t a = 0; a < v.size(); ++a) {
    if (v[a] > 0)
      m.push_back(omega.mat(a) * tau.mat(a));
    else if (v[a] < 0)
      m.push_back(tau.mat(a) * omega.mat(a));
    else
      m.push_back(omega.mat(a));
  }
  return TransverseOperator(omega.frame(), std::move(m), v);
}

} // namespace ttow
