// Independent reference computations for the tests. Nothing here calls the
// elimination kernels; everything is enumeration or textbook formulas.
#pragma once

#include "ttow/matrix.hpp"
#include "ttow/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace oracle {

using namespace ttow;

inline Scalar random_scalar(const FieldSpec &f, std::mt19937_64 &rng,
                            long long window = 9) {
  if (f.is_rational()) {
    long long n = static_cast<long long>(rng() % (2 * window + 1)) - window;
    long long d = 1 + static_cast<long long>(rng() % 3);
    return Scalar::parse(f, std::to_string(n) + "/" + std::to_string(d));
  }
  return Scalar::from_residue(f, rng() % f.p());
}

inline DenseMatrix random_matrix(const FieldSpec &f, std::size_t r,
                                 std::size_t c, std::mt19937_64 &rng,
                                 double density = 1.0) {
  DenseMatrix m(f, r, c);
  std::uniform_real_distribution<double> u(0, 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (u(rng) < density)
        m(i, j) = random_scalar(f, rng);
  return m;
}

inline Tensor random_tensor(const Frame &fr, std::mt19937_64 &rng,
                            double density = 1.0) {
  Tensor t(fr);
  std::uniform_real_distribution<double> u(0, 1);
  for (auto &c : t.coeffs())
    if (u(rng) < density)
      c = random_scalar(fr.field, rng);
  return t;
}

// All x in F_p^c with m x = 0, by enumeration.
inline std::vector<Vec> enumerate_kernel(const DenseMatrix &m) {
  const FieldSpec &f = m.field();
  std::size_t c = m.cols();
  std::vector<Vec> out;
  std::vector<std::uint64_t> x(c, 0);
  while (true) {
    Vec v;
    for (auto r : x)
      v.push_back(Scalar::from_residue(f, r));
    bool zero = true;
    for (std::size_t i = 0; i < m.rows() && zero; ++i) {
      Scalar s = Scalar::zero(f);
      for (std::size_t j = 0; j < c; ++j)
        s += m(i, j) * v[j];
      zero = s.is_zero();
    }
    if (zero)
      out.push_back(v);
    std::size_t k = 0;
    while (k < c && ++x[k] == f.p())
      x[k++] = 0;
    if (k == c)
      break;
  }
  return out;
}

inline Scalar det_by_permutations(const DenseMatrix &m) {
  const FieldSpec &f = m.field();
  std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar det = Scalar::zero(f);
  do {
    std::size_t inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j])
          ++inv;
    Scalar t = Scalar::from_int(f, inv % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i)
      t *= m(i, perm[i]);
    det += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Largest k with a nonzero k x k minor.
inline std::size_t rank_by_minors(const DenseMatrix &m) {
  std::size_t best = 0;
  std::size_t r = m.rows(), c = m.cols();
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    bool found = false;
    std::vector<bool> rs(r, false), cs(c, false);
    std::fill(rs.begin(), rs.begin() + static_cast<long>(k), true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + static_cast<long>(k), true);
      do {
        DenseMatrix sub(m.field(), k, k);
        std::size_t ii = 0;
        for (std::size_t i = 0; i < r; ++i) {
          if (!rs[i])
            continue;
          std::size_t jj = 0;
          for (std::size_t j = 0; j < c; ++j)
            if (cs[j])
              sub(ii, jj++) = m(i, j);
          ++ii;
        }
        if (!det_by_permutations(sub).is_zero())
          found = true;
      } while (!found && std::prev_permutation(cs.begin(), cs.end()));
    } while (!found && std::prev_permutation(rs.begin(), rs.end()));
    if (!found)
      break;
    best = k;
  }
  return best;
}

} // namespace oracle

#include "ttow/groebner.hpp"

namespace oracle {

// p lies in (gens) with cofactors of degree <= d - deg(g): linear algebra
// over the Macaulay matrix, no Groebner bases.
inline bool macaulay_member(const MultiPoly &p, const std::vector<MultiPoly> &gens,
                            unsigned d) {
  const FieldSpec &f = p.field();
  std::size_t n = p.nvars();
  auto monos = monomials_up_to(n, d);
  std::map<Monomial, std::size_t> col;
  for (std::size_t i = 0; i < monos.size(); ++i)
    col[monos[i]] = i;
  auto as_vec = [&](const MultiPoly &q) {
    Vec v(monos.size(), Scalar::zero(f));
    for (const auto &[m, c] : q.terms())
      v[col.at(m)] = c;
    return v;
  };
  if (p.total_degree() > d)
    return false;
  std::vector<Vec> rows;
  for (const auto &g : gens) {
    if (g.is_zero() || g.total_degree() > d)
      continue;
    for (const auto &m : monomials_up_to(n, d - g.total_degree()))
      rows.push_back(as_vec(g.mul_term(m, Scalar::one(f))));
  }
  return span_contains(f, monos.size(), rows, {as_vec(p)});
}

inline MultiPoly random_poly(const FieldSpec &f, std::size_t n, unsigned d,
                             std::size_t terms, std::mt19937_64 &rng) {
  auto monos = monomials_up_to(n, d);
  MultiPoly p(f, n);
  for (std::size_t i = 0; i < terms; ++i)
    p.add_term(monos[rng() % monos.size()], random_scalar(f, rng));
  return p;
}

} // namespace oracle

#include "ttow/operators.hpp"

namespace oracle {

// Kernel of x -> (<t|p(from_flat(x)))_{t,p} for linear homogeneous P, read
// column by column from the action on unit coordinate vectors.
inline std::vector<Vec> brute_op_space(const std::vector<Tensor> &S,
                                       const std::vector<MultiPoly> &P,
                                       const VarianceSignature &v) {
  const Frame &fr = S.at(0).frame();
  const FieldSpec &f = fr.field;
  std::size_t nx = TransverseOperator::flat_size(fr, v);
  std::size_t N = fr.size();
  DenseMatrix m(f, S.size() * P.size() * N, nx);
  for (std::size_t c = 0; c < nx; ++c) {
    auto op = TransverseOperator::from_flat(fr, v, unit_vec(f, nx, c));
    // Linear terms only, so the identity on unused blocks never leaks in:
    // apply each term's single block by hand.
    std::size_t r = 0;
    for (const auto &t : S)
      for (const auto &p : P) {
        Tensor img(fr);
        for (const auto &[e, coef] : p.terms())
          for (std::size_t a = 0; a < e.size(); ++a)
            if (e[a] == 1)
              img = img + act_on_axis(t, a, op.mat(a)).scaled(coef);
        for (std::size_t i = 0; i < N; ++i)
          m(r + i, c) = img.coeffs()[i];
        r += N;
      }
  }
  return nullspace(m);
}

} // namespace oracle
