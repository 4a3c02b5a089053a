#include "ttow/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace ttow {

Vec zero_vec(const FieldSpec &f, std::size_t n) {
  return Vec(n, Scalar::zero(f));
}

bool is_zero_vec(const Vec &v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Scalar &s) { return s.is_zero(); });
}

DenseMatrix::DenseMatrix(const FieldSpec &f, std::size_t rows,
                         std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {
}

DenseMatrix DenseMatrix::identity(const FieldSpec &f, std::size_t n) {
  DenseMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = Scalar::one(f);
  return m;
}

DenseMatrix DenseMatrix::from_rows(const FieldSpec &f,
                                   const std::vector<Vec> &rows,
                                   std::size_t cols) {
  if (!rows.empty())
    cols = rows[0].size();
  DenseMatrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw DimensionMismatch("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) {
      if (rows[i][j].field() != f)
        throw FieldMismatch("matrix entry over another field");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

DenseMatrix
DenseMatrix::from_ints(const FieldSpec &f,
                       const std::vector<std::vector<long long>> &rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  DenseMatrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw DimensionMismatch("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = Scalar::from_int(f, rows[i][j]);
  }
  return m;
}

DenseMatrix DenseMatrix::unit(const FieldSpec &f, std::size_t n, std::size_t i,
                              std::size_t j) {
  DenseMatrix m(f, n, n);
  m(i, j) = Scalar::one(f);
  return m;
}

Vec DenseMatrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<long>(i * cols_),
             data_.begin() + static_cast<long>((i + 1) * cols_));
}

Vec DenseMatrix::col(std::size_t j) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    v.push_back((*this)(i, j));
  return v;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix &b) const {
  if (cols_ != b.rows_)
    throw DimensionMismatch("matrix product shape");
  if (field_ != b.field_)
    throw FieldMismatch("matrix product over different fields");
  DenseMatrix c(field_, rows_, b.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar &a = (*this)(i, k);
      if (a.is_zero())
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero())
          c(i, j) += a * b(k, j);
    }
  return c;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix &b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_)
    throw DimensionMismatch("matrix sum shape");
  DenseMatrix c = *this;
  for (std::size_t i = 0; i < data_.size(); ++i)
    c.data_[i] += b.data_[i];
  return c;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix &b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_)
    throw DimensionMismatch("matrix difference shape");
  DenseMatrix c = *this;
  for (std::size_t i = 0; i < data_.size(); ++i)
    c.data_[i] -= b.data_[i];
  return c;
}

DenseMatrix DenseMatrix::scaled(const Scalar &s) const {
  DenseMatrix c = *this;
  for (auto &x : c.data_)
    x *= s;
  return c;
}

Vec DenseMatrix::apply(const Vec &v) const {
  if (v.size() != cols_)
    throw DimensionMismatch("matrix-vector shape");
  Vec out = zero_vec(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!v[j].is_zero() && !(*this)(i, j).is_zero())
        out[i] += (*this)(i, j) * v[j];
  return out;
}

DenseMatrix DenseMatrix::pow(unsigned k) const {
  if (rows_ != cols_)
    throw DimensionMismatch("power of a non-square matrix");
  DenseMatrix r = identity(field_, rows_), b = *this;
  while (k) {
    if (k & 1)
      r = r * b;
    k >>= 1;
    if (k)
      b = b * b;
  }
  return r;
}

bool DenseMatrix::is_zero() const { return is_zero_vec(data_); }

bool DenseMatrix::is_identity() const {
  if (rows_ != cols_)
    return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero())
        return false;
  return true;
}

bool DenseMatrix::operator==(const DenseMatrix &b) const {
  return field_ == b.field_ && rows_ == b.rows_ && cols_ == b.cols_ &&
         data_ == b.data_;
}

// ---------------------------------------------------------------------------
// Elimination kernels.

struct RowReducer::Impl {
  virtual ~Impl() = default;
  virtual std::unique_ptr<Impl> clone() const = 0;
  // Reduce and, unless dry, insert. Returns true if independent.
  virtual bool add(const Vec &row, bool dry) = 0;
  virtual std::size_t rank() const = 0;
  virtual std::size_t ncols() const = 0;
  virtual std::vector<Vec> basis() const = 0;
  virtual std::vector<std::size_t> pivots() const = 0;
};

namespace {

// F_p: rows stored with leading entry 1.
class ModImpl final : public RowReducer::Impl {
public:
  ModImpl(FieldSpec f, std::size_t n)
      : f_(f), p_(f.p()), n_(n), where_(n, -1), small_(f.p() < (1ull << 32)) {}

  std::unique_ptr<Impl> clone() const override {
    return std::make_unique<ModImpl>(*this);
  }

  bool add(const Vec &row, bool dry) override {
    if (row.size() != n_)
      throw DimensionMismatch("row length");
    std::vector<std::uint64_t> r(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      if (row[j].field() != f_)
        throw FieldMismatch("row over another field");
      r[j] = row[j].residue();
    }
    std::size_t c = reduce(r);
    if (c == n_)
      return false;
    if (dry)
      return true;
    std::uint64_t iv = invmod(r[c], p_);
    for (std::size_t j = c; j < n_; ++j)
      if (r[j])
        r[j] = mulmod(r[j], iv, p_);
    where_[c] = static_cast<long>(rows_.size());
    piv_.push_back(c);
    rows_.push_back(std::move(r));
    return true;
  }

  std::size_t rank() const override { return rows_.size(); }
  std::size_t ncols() const override { return n_; }

  std::vector<std::size_t> pivots() const override {
    auto p = piv_;
    std::sort(p.begin(), p.end());
    return p;
  }

  std::vector<Vec> basis() const override {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return piv_[a] < piv_[b]; });
    std::vector<std::vector<std::uint64_t>> R;
    std::vector<std::size_t> P;
    for (auto i : order) {
      R.push_back(rows_[i]);
      P.push_back(piv_[i]);
    }
    for (std::size_t i = R.size(); i-- > 0;) {
      for (std::size_t k = 0; k < i; ++k) {
        std::uint64_t fct = R[k][P[i]];
        if (!fct)
          continue;
        axpy(R[k], R[i], fct, P[i]);
      }
    }
    std::vector<Vec> out;
    for (auto &r : R) {
      Vec v;
      v.reserve(n_);
      for (auto x : r)
        v.push_back(Scalar::from_residue(f_, x));
      out.push_back(std::move(v));
    }
    return out;
  }

private:
  // r -= fct * s on columns >= from.
  void axpy(std::vector<std::uint64_t> &r, const std::vector<std::uint64_t> &s,
            std::uint64_t fct, std::size_t from) const {
    std::uint64_t m = p_ - fct;
    if (small_) {
      for (std::size_t j = from; j < n_; ++j)
        if (s[j])
          r[j] = (r[j] + m * s[j]) % p_;
    } else {
      for (std::size_t j = from; j < n_; ++j)
        if (s[j]) {
          r[j] += mulmod(m, s[j], p_);
          if (r[j] >= p_)
            r[j] -= p_;
        }
    }
  }

  std::size_t reduce(std::vector<std::uint64_t> &r) const {
    for (std::size_t c = 0; c < n_; ++c) {
      if (!r[c])
        continue;
      long w = where_[c];
      if (w < 0)
        return c;
      axpy(r, rows_[static_cast<std::size_t>(w)], r[c], c);
    }
    return n_;
  }

  FieldSpec f_;
  std::uint64_t p_;
  std::size_t n_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<std::size_t> piv_;
  std::vector<long> where_;
  bool small_;
};

// Q: fraction-free. Rows are primitive integer vectors with positive lead.
class RatImpl final : public RowReducer::Impl {
public:
  explicit RatImpl(std::size_t n) : n_(n), where_(n, -1) {}

  std::unique_ptr<Impl> clone() const override {
    return std::make_unique<RatImpl>(*this);
  }

  bool add(const Vec &row, bool dry) override {
    if (row.size() != n_)
      throw DimensionMismatch("row length");
    mpz_class l = 1;
    for (const auto &x : row) {
      if (!x.field().is_rational())
        throw FieldMismatch("row over another field");
      if (sgn(x.rational()) != 0)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                x.rational().get_den().get_mpz_t());
    }
    std::vector<mpz_class> r(n_);
    for (std::size_t j = 0; j < n_; ++j)
      if (sgn(row[j].rational()) != 0)
        r[j] = row[j].rational().get_num() * (l / row[j].rational().get_den());
    std::size_t c = reduce(r);
    if (c == n_)
      return false;
    if (dry)
      return true;
    make_primitive(r, c);
    if (sgn(r[c]) < 0)
      for (std::size_t j = c; j < n_; ++j)
        r[j] = -r[j];
    where_[c] = static_cast<long>(rows_.size());
    piv_.push_back(c);
    rows_.push_back(std::move(r));
    return true;
  }

  std::size_t rank() const override { return rows_.size(); }
  std::size_t ncols() const override { return n_; }

  std::vector<std::size_t> pivots() const override {
    auto p = piv_;
    std::sort(p.begin(), p.end());
    return p;
  }

  std::vector<Vec> basis() const override {
    std::vector<std::size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return piv_[a] < piv_[b]; });
    std::vector<std::vector<mpq_class>> R;
    std::vector<std::size_t> P;
    for (auto i : order) {
      const auto &src = rows_[i];
      std::vector<mpq_class> q(n_);
      for (std::size_t j = piv_[i]; j < n_; ++j)
        if (sgn(src[j]) != 0) {
          q[j] = mpq_class(src[j], src[piv_[i]]);
          q[j].canonicalize();
        }
      R.push_back(std::move(q));
      P.push_back(piv_[i]);
    }
    for (std::size_t i = R.size(); i-- > 0;)
      for (std::size_t k = 0; k < i; ++k) {
        if (sgn(R[k][P[i]]) == 0)
          continue;
        mpq_class fct = R[k][P[i]];
        for (std::size_t j = P[i]; j < n_; ++j)
          if (sgn(R[i][j]) != 0)
            R[k][j] -= fct * R[i][j];
      }
    FieldSpec q = FieldSpec::rational();
    std::vector<Vec> out;
    for (auto &r : R) {
      Vec v;
      v.reserve(n_);
      for (auto &x : r)
        v.push_back(Scalar::from_mpq(q, x));
      out.push_back(std::move(v));
    }
    return out;
  }

private:
  void make_primitive(std::vector<mpz_class> &r, std::size_t from) const {
    mpz_class g = 0;
    for (std::size_t j = from; j < n_; ++j)
      if (sgn(r[j]) != 0) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r[j].get_mpz_t());
        if (g == 1)
          return;
      }
    if (g > 1)
      for (std::size_t j = from; j < n_; ++j)
        if (sgn(r[j]) != 0)
          mpz_divexact(r[j].get_mpz_t(), r[j].get_mpz_t(), g.get_mpz_t());
  }

  std::size_t reduce(std::vector<mpz_class> &r) const {
    mpz_class a, b, g;
    for (std::size_t c = 0; c < n_; ++c) {
      if (sgn(r[c]) == 0)
        continue;
      long w = where_[c];
      if (w < 0)
        return c;
      const auto &s = rows_[static_cast<std::size_t>(w)];
      mpz_gcd(g.get_mpz_t(), s[c].get_mpz_t(), r[c].get_mpz_t());
      a = s[c] / g;
      b = r[c] / g;
      for (std::size_t j = c; j < n_; ++j) {
        bool rz = sgn(r[j]) == 0, sz = sgn(s[j]) == 0;
        if (rz && sz)
          continue;
        if (a != 1 && !rz)
          r[j] *= a;
        if (!sz)
          r[j] -= b * s[j];
      }
      make_primitive(r, c + 1);
    }
    return n_;
  }

  std::size_t n_;
  std::vector<std::vector<mpz_class>> rows_;
  std::vector<std::size_t> piv_;
  std::vector<long> where_;
};

} // namespace

RowReducer::RowReducer(const FieldSpec &f, std::size_t ncols) : field_(f) {
  if (f.is_rational())
    impl_ = std::make_unique<RatImpl>(ncols);
  else
    impl_ = std::make_unique<ModImpl>(f, ncols);
}

RowReducer::~RowReducer() = default;
RowReducer::RowReducer(RowReducer &&) noexcept = default;
RowReducer &RowReducer::operator=(RowReducer &&) noexcept = default;
RowReducer::RowReducer(const RowReducer &o)
    : field_(o.field_), impl_(o.impl_->clone()) {}
RowReducer &RowReducer::operator=(const RowReducer &o) {
  if (this != &o) {
    field_ = o.field_;
    impl_ = o.impl_->clone();
  }
  return *this;
}

bool RowReducer::add_row(const Vec &row) { return impl_->add(row, false); }

bool RowReducer::add_sparse_row(
    const std::vector<std::pair<std::size_t, Scalar>> &row) {
  Vec dense = zero_vec(field_, impl_->ncols());
  for (const auto &[j, x] : row) {
    if (j >= dense.size())
      throw DimensionMismatch("sparse row index out of range");
    dense[j] += x;
  }
  return impl_->add(dense, false);
}

bool RowReducer::in_span(const Vec &row) const {
  return !impl_->add(row, true);
}

std::size_t RowReducer::rank() const { return impl_->rank(); }
std::size_t RowReducer::ncols() const { return impl_->ncols(); }
std::vector<Vec> RowReducer::basis() const { return impl_->basis(); }
std::vector<std::size_t> RowReducer::pivots() const { return impl_->pivots(); }

std::vector<Vec> RowReducer::kernel() const {
  auto R = impl_->basis();
  auto P = impl_->pivots();
  std::size_t n = impl_->ncols();
  std::vector<bool> is_piv(n, false);
  for (auto p : P)
    is_piv[p] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_piv[f])
      continue;
    Vec x = zero_vec(field_, n);
    x[f] = Scalar::one(field_);
    for (std::size_t i = 0; i < R.size(); ++i)
      x[P[i]] = -R[i][f];
    out.push_back(std::move(x));
  }
  return out;
}

std::size_t rank(const DenseMatrix &m) {
  RowReducer r(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    r.add_row(m.row(i));
  return r.rank();
}

DenseMatrix rref(const DenseMatrix &m) {
  RowReducer r(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    r.add_row(m.row(i));
  auto b = r.basis();
  DenseMatrix out(m.field(), m.rows(), m.cols());
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = b[i][j];
  return out;
}

std::vector<Vec> nullspace(const DenseMatrix &m) {
  RowReducer r(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    r.add_row(m.row(i));
  return r.kernel();
}

std::vector<Vec> left_nullspace(const DenseMatrix &m) {
  return nullspace(m.transpose());
}

std::optional<DenseMatrix> inverse(const DenseMatrix &m) {
  if (m.rows() != m.cols())
    throw DimensionMismatch("inverse of a non-square matrix");
  std::size_t n = m.rows();
  const FieldSpec &f = m.field();
  RowReducer r(f, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec row = m.row(i);
    row.resize(2 * n, Scalar::zero(f));
    row[n + i] = Scalar::one(f);
    r.add_row(row);
  }
  auto piv = r.pivots();
  if (piv.size() < n || piv[n - 1] != n - 1)
    return std::nullopt;
  auto b = r.basis();
  DenseMatrix inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv(i, j) = b[i][n + j];
  return inv;
}

std::vector<Vec> span_basis(const FieldSpec &f, std::size_t n,
                            const std::vector<Vec> &vs) {
  RowReducer r(f, n);
  for (const auto &v : vs)
    r.add_row(v);
  return r.basis();
}

bool same_span(const FieldSpec &f, std::size_t n, const std::vector<Vec> &a,
               const std::vector<Vec> &b) {
  return span_basis(f, n, a) == span_basis(f, n, b);
}

bool span_contains(const FieldSpec &f, std::size_t n,
                   const std::vector<Vec> &big, const std::vector<Vec> &small) {
  RowReducer r(f, n);
  for (const auto &v : big)
    r.add_row(v);
  return std::all_of(small.begin(), small.end(),
                     [&](const Vec &v) { return r.in_span(v); });
}

Vec charpoly(const DenseMatrix &m) {
  if (m.rows() != m.cols())
    throw DimensionMismatch("charpoly of a non-square matrix");
  const FieldSpec &f = m.field();
  std::size_t n = m.rows();
  DenseMatrix h = m;
  // Reduce to upper Hessenberg form by similarity transforms.
  for (std::size_t k = 0; k + 2 <= n; ++k) {
    std::size_t piv = k + 1;
    while (piv < n && h(piv, k).is_zero())
      ++piv;
    if (piv == n)
      continue;
    if (piv != k + 1) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(h(piv, j), h(k + 1, j));
      for (std::size_t i = 0; i < n; ++i)
        std::swap(h(i, piv), h(i, k + 1));
    }
    Scalar ip = h(k + 1, k).inv();
    for (std::size_t i = k + 2; i < n; ++i) {
      if (h(i, k).is_zero())
        continue;
      Scalar u = h(i, k) * ip;
      for (std::size_t j = 0; j < n; ++j)
        h(i, j) -= u * h(k + 1, j);
      for (std::size_t r = 0; r < n; ++r)
        h(r, k + 1) += u * h(r, i);
    }
  }
  // p_j = charpoly of the leading j x j block.
  std::vector<Vec> p(n + 1);
  p[0] = {Scalar::one(f)};
  for (std::size_t j = 1; j <= n; ++j) {
    Vec cur = zero_vec(f, j + 1);
    // x * p_{j-1} - h_{jj} p_{j-1}
    for (std::size_t i = 0; i < j; ++i) {
      cur[i + 1] += p[j - 1][i];
      cur[i] -= h(j - 1, j - 1) * p[j - 1][i];
    }
    Scalar prod = Scalar::one(f);
    for (std::size_t i = 1; i < j; ++i) {
      prod *= h(j - i, j - i - 1);
      Scalar c = prod * h(j - i - 1, j - 1);
      for (std::size_t k = 0; k < p[j - i - 1].size(); ++k)
        cur[k] -= c * p[j - i - 1][k];
    }
    p[j] = std::move(cur);
  }
  return p[n];
}

} // namespace ttow
