#include "ttow/galois.hpp"

#include <map>
#include <numeric>
#include <random>

namespace ttow {

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

const Frame &common_frame(const std::vector<Tensor> &S) {
  if (S.empty())
    throw DimensionMismatch("need at least one tensor");
  for (const auto &t : S)
    if (t.frame() != S[0].frame())
      throw FrameMismatch("tensors on different frames");
  return S[0].frame();
}

// Coefficients lambda_a of a linear homogeneous p, checked against variance.
Vec linear_coeffs(const MultiPoly &p, const Frame &fr,
                  const VarianceSignature &v) {
  const std::size_t n = fr.dims.size();
  if (p.nvars() != n)
    throw DimensionMismatch("polynomial needs exactly v+1 variables");
  if (p.field() != fr.field)
    throw FieldMismatch("polynomial over another field");
  if (!p.is_zero() && !p.is_linear_homogeneous())
    throw NonLinearIdeal("not linear homogeneous: " + p.str());
  Vec lam = zero_vec(fr.field, n);
  for (const auto &[m, c] : p.terms())
    for (std::size_t a = 0; a < n; ++a)
      if (m[a] == 1)
        lam[a] = c;
  for (std::size_t a = 0; a < n; ++a)
    if (!lam[a].is_zero() && v[a] == 0)
      throw InvalidExponent("variable x" + std::to_string(a) +
                            " on a constant axis");
  return lam;
}

std::vector<std::size_t> axis_offsets(const Frame &fr,
                                      const VarianceSignature &v) {
  std::vector<std::size_t> off(fr.dims.size(), 0);
  std::size_t pos = 0;
  for (std::size_t a = 0; a < fr.dims.size(); ++a) {
    off[a] = pos;
    if (v[a] != 0)
      pos += fr.dims[a] * fr.dims[a];
  }
  return off;
}

RowReducer reducer_of(const OperatorSpace &D) {
  RowReducer r(D.frame.field,
               TransverseOperator::flat_size(D.frame, D.variance));
  for (const auto &b : D.basis)
    r.add_row(b.flat());
  return r;
}

void check_variance(const Frame &fr, const VarianceSignature &v) {
  if (v.size() != fr.dims.size())
    throw DimensionMismatch("one variance entry per axis");
}

} // namespace

std::vector<Vec> OperatorSpace::flat_basis() const {
  std::vector<Vec> out;
  for (const auto &b : basis)
    out.push_back(b.flat());
  return out;
}

bool OperatorSpace::contains(const TransverseOperator &op) const {
  if (op.frame() != frame || op.variance() != variance)
    return false;
  return reducer_of(*this).in_span(op.flat());
}

bool OperatorSpace::same_span(const OperatorSpace &o) const {
  if (frame != o.frame || variance != o.variance)
    return false;
  return ttow::same_span(frame.field,
                         TransverseOperator::flat_size(frame, variance),
                         flat_basis(), o.flat_basis());
}

ProductLaw ProductLaw::uniform(const FieldSpec &f, std::size_t n, long long l,
                               long long r) {
  ProductLaw law;
  law.lr.assign(n, {Scalar::from_int(f, l), Scalar::from_int(f, r)});
  return law;
}

ProductLaw ProductLaw::composition(const FieldSpec &f,
                                   const VarianceSignature &v) {
  ProductLaw law;
  for (std::size_t a = 0; a < v.size(); ++a)
    law.lr.emplace_back(Scalar::from_int(f, v[a] >= 0 ? 1 : 0),
                        Scalar::from_int(f, v[a] < 0 ? 1 : 0));
  return law;
}

TransverseOperator product(const TransverseOperator &w,
                           const TransverseOperator &t, const ProductLaw &law) {
  if (w.frame() != t.frame())
    throw FrameMismatch("product over different frames");
  if (w.variance() != t.variance())
    throw VarianceMismatch("product with different variance");
  const auto &v = w.variance();
  if (law.lr.size() != v.size())
    throw DimensionMismatch("product law needs one pair per axis");
  std::vector<DenseMatrix> m;
  for (std::size_t a = 0; a < v.size(); ++a) {
    if (v[a] == 0) {
      m.push_back(w.mat(a));
      continue;
    }
    const auto &[l, r] = law.lr[a];
    if (l.is_zero() && r.is_zero())
      throw InvalidExponent("product law vanishes on active axis " +
                            std::to_string(a));
    m.push_back((w.mat(a) * t.mat(a)).scaled(l) +
                (t.mat(a) * w.mat(a)).scaled(r));
  }
  return TransverseOperator(w.frame(), std::move(m), v);
}

ClosureReport check_product_closure(const OperatorSpace &D,
                                    const ProductLaw &law) {
  ClosureReport rep;
  RowReducer r = reducer_of(D);
  for (std::size_t i = 0; i < D.basis.size(); ++i)
    for (std::size_t j = 0; j < D.basis.size(); ++j)
      if (!r.in_span(product(D.basis[i], D.basis[j], law).flat())) {
        rep.closed = false;
        rep.counterexample = std::make_pair(i, j);
        return rep;
      }
  return rep;
}

bool is_unital(const OperatorSpace &D) {
  return D.contains(TransverseOperator::identity(D.frame, D.variance));
}

OperatorSpace op_space_linear(const std::vector<Tensor> &S,
                              const std::vector<MultiPoly> &P,
                              const VarianceSignature &variance) {
  const Frame &fr = common_frame(S);
  check_variance(fr, variance);
  const auto &dims = fr.dims;
  const std::size_t n = dims.size();
  const auto off = axis_offsets(fr, variance);
  const auto str = fr.strides();
  RowReducer red(fr.field, TransverseOperator::flat_size(fr, variance));
  std::vector<Vec> lams;
  for (const auto &p : P)
    lams.push_back(linear_coeffs(p, fr, variance));
  // One equation per (t, p, output coordinate I): the I-th entry of
  // <t|p(omega) read as a linear form in the entries of omega.
  for (const auto &t : S)
    for (const auto &lam : lams)
      for_each_index(dims, [&](const Index &I) {
        SparseRow row;
        std::size_t base = 0;
        for (std::size_t a = 0; a < n; ++a)
          base += I[a] * str[a];
        for (std::size_t a = 0; a < n; ++a) {
          if (lam[a].is_zero())
            continue;
          const std::size_t d = dims[a];
          const std::size_t rest = base - I[a] * str[a];
          for (std::size_t k = 0; k < d; ++k) {
            const Scalar &x = t.coeffs()[rest + k * str[a]];
            if (x.is_zero())
              continue;
            // axis 0: omega_0[I_0][k]; input axis: omega_a[k][I_a]
            std::size_t u = a == 0 ? off[a] + I[a] * d + k
                                   : off[a] + k * d + I[a];
            row.emplace_back(u, lam[a] * x);
          }
        }
        if (!row.empty())
          red.add_sparse_row(row);
      });
  OperatorSpace D;
  D.frame = fr;
  D.variance = variance;
  D.S = S;
  D.P = P;
  for (const auto &x : red.kernel())
    D.basis.push_back(TransverseOperator::from_flat(fr, variance, x));
  return D;
}

std::string algebra_kind_name(AlgebraKind k) {
  switch (k) {
  case AlgebraKind::derivations:
    return "derivations";
  case AlgebraKind::centroid:
    return "centroid";
  case AlgebraKind::nucleus:
    return "nucleus";
  case AlgebraKind::adjoint:
    return "adjoint";
  }
  return "?";
}

AlgebraKind parse_algebra_kind(const std::string &s) {
  for (auto k : {AlgebraKind::derivations, AlgebraKind::centroid,
                 AlgebraKind::nucleus, AlgebraKind::adjoint})
    if (algebra_kind_name(k) == s)
      return k;
  throw ParseError("unknown algebra kind: " + s);
}

MultiPoly derivation_poly(const FieldSpec &f, std::size_t nvars) {
  MultiPoly d = MultiPoly::variable(f, nvars, 0);
  for (std::size_t a = 1; a < nvars; ++a)
    d = d - MultiPoly::variable(f, nvars, a);
  return d;
}

NamedAlgebra named_algebra(const std::vector<Tensor> &S, AlgebraKind kind,
                           std::size_t a, std::size_t b) {
  const Frame &fr = common_frame(S);
  const std::size_t n = fr.dims.size();
  const FieldSpec &f = fr.field;
  if (n < 2)
    throw InvalidAxis("operator algebras need valence at least 1");
  std::vector<MultiPoly> P;
  VarianceSignature v = VarianceSignature::covariant(n);
  switch (kind) {
  case AlgebraKind::derivations:
    P.push_back(derivation_poly(f, n));
    break;
  case AlgebraKind::centroid:
    for (std::size_t c = 1; c < n; ++c)
      P.push_back(MultiPoly::variable(f, n, 0) - MultiPoly::variable(f, n, c));
    break;
  case AlgebraKind::adjoint:
    a = 1;
    b = 2;
    [[fallthrough]];
  case AlgebraKind::nucleus: {
    if (a >= n || b >= n || a == b)
      throw InvalidAxis("nucleus needs two distinct axes in range");
    if (b == 0)
      std::swap(a, b);
    std::vector<int> sig(n, 0);
    sig[a] = a == 0 ? 1 : -1;
    sig[b] = 1;
    v = VarianceSignature(sig);
    P.push_back(MultiPoly::variable(f, n, a) - MultiPoly::variable(f, n, b));
    break;
  }
  }
  NamedAlgebra out;
  out.kind = kind;
  out.space = op_space_linear(S, P, v);
  out.law = kind == AlgebraKind::derivations ? ProductLaw::lie(f, n)
                                             : ProductLaw::composition(f, v);
  auto rep = check_product_closure(out.space, out.law);
  out.closed = rep.closed;
  out.counterexample = rep.counterexample;
  if (kind != AlgebraKind::derivations)
    out.unital = is_unital(out.space);
  return out;
}

TensorSpace ten_closure(const std::vector<MultiPoly> &P,
                        const std::vector<TransverseOperator> &Delta,
                        const Frame &frame) {
  for (const auto &d : Delta)
    if (d.frame() != frame)
      throw FrameMismatch("operator on another frame");
  const auto &dims = frame.dims;
  const std::size_t n = dims.size();
  const std::size_t N = frame.size();
  const auto str = frame.strides();
  for (const auto &p : P)
    if (p.nvars() != n)
      throw DimensionMismatch("polynomial needs exactly v+1 variables");

  // Nonlinear p: the matrix of s -> <s|p(delta) read from basis images.
  std::vector<std::vector<Vec>> images;
  for (const auto &p : P) {
    if (p.is_zero() || p.is_linear_homogeneous())
      continue;
    for (const auto &del : Delta) {
      PowerCache cache(del);
      std::vector<Vec> cols;
      for (std::size_t J = 0; J < N; ++J)
        cols.push_back(
            apply_polynomial(del, p, Tensor(frame, unit_vec(frame.field, N, J)),
                             &cache)
                .coeffs());
      images.push_back(std::move(cols));
    }
  }
  std::vector<Vec> lams;
  std::vector<const TransverseOperator *> lin_ops;
  for (const auto &p : P) {
    if (p.is_zero() || !p.is_linear_homogeneous())
      continue;
    for (const auto &del : Delta) {
      lams.push_back(linear_coeffs(p, frame, del.variance()));
      lin_ops.push_back(&del);
    }
  }

  // Every equation, streamed; called once per pass so nothing is stored.
  auto rows = [&](auto &&emit) {
    for (std::size_t r = 0; r < lin_ops.size(); ++r) {
      const Vec &lam = lams[r];
      const auto &del = *lin_ops[r];
      for_each_index(dims, [&](const Index &I) {
        SparseRow row;
        std::size_t base = 0;
        for (std::size_t a = 0; a < n; ++a)
          base += I[a] * str[a];
        for (std::size_t a = 0; a < n; ++a) {
          if (lam[a].is_zero())
            continue;
          const auto &m = del.mat(a);
          const std::size_t rest = base - I[a] * str[a];
          for (std::size_t k = 0; k < dims[a]; ++k) {
            const Scalar &w = a == 0 ? m(I[a], k) : m(k, I[a]);
            if (!w.is_zero())
              row.emplace_back(rest + k * str[a], lam[a] * w);
          }
        }
        if (!row.empty())
          emit(row);
      });
    }
    for (const auto &cols : images)
      for (std::size_t I = 0; I < N; ++I) {
        SparseRow row;
        for (std::size_t J = 0; J < N; ++J)
          if (!cols[J][I].is_zero())
            row.emplace_back(J, cols[J][I]);
        if (!row.empty())
          emit(row);
      }
  };

  // The equations only couple coordinates that share a row, so the system
  // splits along connected components and each block is solved on its own.
  std::vector<std::size_t> parent(N);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> touched(N, false);
  rows([&](const SparseRow &row) {
    std::size_t r0 = find(row[0].first);
    touched[row[0].first] = true;
    for (std::size_t i = 1; i < row.size(); ++i) {
      touched[row[i].first] = true;
      std::size_t ri = find(row[i].first);
      if (ri != r0)
        parent[ri] = r0;
    }
  });
  std::vector<std::size_t> comp(N), local(N);
  std::vector<std::vector<std::size_t>> members;
  std::map<std::size_t, std::size_t> comp_of_root;
  for (std::size_t c = 0; c < N; ++c) {
    if (!touched[c])
      continue;
    auto [it, fresh] = comp_of_root.emplace(find(c), members.size());
    if (fresh)
      members.emplace_back();
    comp[c] = it->second;
    local[c] = members[it->second].size();
    members[it->second].push_back(c);
  }
  std::vector<RowReducer> red;
  for (const auto &m : members)
    red.emplace_back(frame.field, m.size());
  rows([&](const SparseRow &row) {
    SparseRow loc;
    for (const auto &[c, x] : row)
      loc.emplace_back(local[c], x);
    red[comp[row[0].first]].add_sparse_row(loc);
  });

  std::vector<Tensor> gens;
  for (std::size_t c = 0; c < N; ++c)
    if (!touched[c])
      gens.emplace_back(frame, unit_vec(frame.field, N, c));
  for (std::size_t b = 0; b < members.size(); ++b)
    for (const auto &x : red[b].kernel()) {
      Vec full = zero_vec(frame.field, N);
      for (std::size_t i = 0; i < x.size(); ++i)
        full[members[b][i]] = x[i];
      gens.emplace_back(frame, std::move(full));
    }
  return TensorSpace::span(frame, gens);
}

TensorSpace densor(const std::vector<Tensor> &S) {
  const Frame &fr = common_frame(S);
  auto der = named_algebra(S, AlgebraKind::derivations);
  return ten_closure({derivation_poly(fr.field, fr.dims.size())},
                     der.space.basis, fr);
}

bool SymbolicSystem::verify_point(const TransverseOperator &op) const {
  if (op.frame() != frame)
    return false;
  Vec x = zero_vec(frame.field, nvars());
  for (std::size_t a = 0; a < frame.dims.size(); ++a)
    for (std::size_t i = 0; i < frame.dims[a]; ++i)
      for (std::size_t j = 0; j < frame.dims[a]; ++j)
        x[var(a, i, j)] = op.mat(a)(i, j);
  for (const auto &e : equations)
    if (!e.eval(x).is_zero())
      return false;
  return true;
}

SymbolicSystem op_space_equations(const std::vector<Tensor> &S,
                                  const std::vector<MultiPoly> &P,
                                  const VarianceSignature &variance,
                                  std::size_t budget) {
  const Frame &fr = common_frame(S);
  check_variance(fr, variance);
  const FieldSpec &f = fr.field;
  const auto &dims = fr.dims;
  const std::size_t n = dims.size();
  SymbolicSystem sys;
  sys.frame = fr;
  sys.variance = variance;
  for (std::size_t a = 0; a < n; ++a) {
    sys.offsets.push_back(sys.labels.size());
    for (std::size_t i = 0; i < dims[a]; ++i)
      for (std::size_t j = 0; j < dims[a]; ++j)
        sys.labels.push_back("w" + std::to_string(a) + "_" +
                             std::to_string(i) + "_" + std::to_string(j));
  }
  const std::size_t nv = sys.nvars();
  const std::size_t N = fr.size();
  const auto str = fr.strides();
  using SymTensor = std::vector<MultiPoly>;
  std::size_t spent = 0;
  auto charge = [&](const SymTensor &T) {
    for (const auto &e : T)
      spent += e.size();
    if (spent > budget)
      throw BudgetExceeded("symbolic expansion exceeds " +
                           std::to_string(budget) + " terms");
  };
  // One symbolic application of the variable block on axis a.
  auto act = [&](const SymTensor &T, std::size_t a) {
    SymTensor out(N, MultiPoly(f, nv));
    const std::size_t d = dims[a];
    for (std::size_t J = 0; J < N; ++J) {
      if (T[J].is_zero())
        continue;
      std::size_t k = (J / str[a]) % d;
      std::size_t rest = J - k * str[a];
      for (std::size_t j = 0; j < d; ++j) {
        std::size_t var = a == 0 ? sys.var(a, j, k) : sys.var(a, k, j);
        out[rest + j * str[a]] =
            out[rest + j * str[a]] + T[J] * MultiPoly::variable(f, nv, var);
      }
    }
    charge(out);
    return out;
  };
  for (const auto &p : P) {
    if (p.nvars() != n)
      throw DimensionMismatch("polynomial needs exactly v+1 variables");
    for (const auto &[m, c] : p.terms())
      for (std::size_t a = 0; a < n; ++a)
        if (m[a] != 0 && variance[a] == 0)
          throw InvalidExponent("variable x" + std::to_string(a) +
                                " on a constant axis");
  }
  for (const auto &t : S) {
    SymTensor base(N, MultiPoly(f, nv));
    for (std::size_t J = 0; J < N; ++J)
      if (!t.coeffs()[J].is_zero())
        base[J] = MultiPoly::constant(f, nv, t.coeffs()[J]);
    for (const auto &p : P) {
      SymTensor acc(N, MultiPoly(f, nv));
      for (const auto &[m, c] : p.terms()) {
        SymTensor cur = base;
        for (std::size_t a = 0; a < n; ++a)
          for (unsigned k = 0; k < m[a]; ++k)
            cur = act(cur, a);
        for (std::size_t J = 0; J < N; ++J)
          if (!cur[J].is_zero())
            acc[J] = acc[J] + cur[J].scaled(c);
      }
      for (auto &e : acc)
        if (!e.is_zero())
          sys.equations.push_back(std::move(e));
    }
  }
  return sys;
}

std::vector<TransverseOperator>
generic_points(const OperatorSpace &D, std::size_t count, std::uint64_t seed) {
  const FieldSpec &f = D.frame.field;
  if (count == 0)
    count = 2 + D.frame.valence();
  std::mt19937_64 rng(seed);
  std::vector<TransverseOperator> out;
  for (std::size_t i = 0; i < count; ++i) {
    auto w = TransverseOperator::zero(D.frame, D.variance);
    for (const auto &b : D.basis) {
      Scalar c = f.is_rational()
                     ? Scalar::from_int(
                           f, static_cast<long long>(rng() % 21) - 10)
                     : Scalar::from_residue(f, rng() % f.p());
      w = w + b.scaled(c);
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<MultiPoly> torus_transform(const std::vector<MultiPoly> &P,
                                       const std::vector<Scalar> &tau) {
  for (const auto &s : tau)
    if (s.is_zero())
      throw ZeroTorusEntry("torus entries must be invertible");
  std::vector<Scalar> inv;
  for (const auto &s : tau)
    inv.push_back(s.inv());
  std::vector<MultiPoly> out;
  for (const auto &p : P) {
    if (p.nvars() != tau.size())
      throw DimensionMismatch("one torus entry per variable");
    MultiPoly q(p.field(), p.nvars());
    for (const auto &[m, c] : p.terms()) {
      Scalar s = c;
      for (std::size_t a = 0; a < m.size(); ++a)
        for (unsigned k = 0; k < m[a]; ++k)
          s = s * inv[a];
      q.add_term(m, s);
    }
    out.push_back(std::move(q));
  }
  return out;
}

TransverseOperator torus_act(const std::vector<Scalar> &tau,
                             const TransverseOperator &op) {
  const auto &v = op.variance();
  if (tau.size() != v.size())
    throw DimensionMismatch("one torus entry per axis");
  for (const auto &s : tau)
    if (s.is_zero())
      throw ZeroTorusEntry("torus entries must be invertible");
  std::vector<DenseMatrix> m;
  for (std::size_t a = 0; a < v.size(); ++a)
    m.push_back(v[a] == 0 ? op.mat(a) : op.mat(a).scaled(tau[a]));
  return TransverseOperator(op.frame(), std::move(m), v);
}

bool torus_relation_holds(const std::vector<Tensor> &S,
                          const std::vector<MultiPoly> &P,
                          const VarianceSignature &variance,
                          const std::vector<Scalar> &tau) {
  auto D = op_space_linear(S, P, variance);
  auto Dt = op_space_linear(S, torus_transform(P, tau), variance);
  OperatorSpace moved = D;
  for (auto &b : moved.basis)
    b = torus_act(tau, b);
  return Dt.same_span(moved);
}

Tensor isotope(const Tensor &t, const TransverseOperator &w) {
  if (t.frame() != w.frame())
    throw FrameMismatch("isotope over different frames");
  auto inv0 = inverse(w.mat(0));
  if (!inv0)
    throw DivisionByZero("output block is not invertible");
  Tensor r = act_on_axis(t, 0, *inv0);
  for (std::size_t a = 1; a < w.mats().size(); ++a)
    r = act_on_axis(r, a, w.mat(a));
  return r;
}

TransverseOperator conjugate(const TransverseOperator &tau,
                             const TransverseOperator &w) {
  if (tau.frame() != w.frame())
    throw FrameMismatch("conjugation over different frames");
  std::vector<DenseMatrix> m;
  for (std::size_t a = 0; a < tau.mats().size(); ++a) {
    if (tau.variance()[a] == 0) {
      m.push_back(tau.mat(a));
      continue;
    }
    auto inv = inverse(w.mat(a));
    if (!inv)
      throw DivisionByZero("block " + std::to_string(a) +
                           " is not invertible");
    m.push_back(*inv * tau.mat(a) * w.mat(a));
  }
  return TransverseOperator(tau.frame(), std::move(m), tau.variance());
}

} // namespace ttow
