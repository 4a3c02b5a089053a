#include "ttow/singularity.hpp"

#include "ttow/annihilator.hpp"

#include <random>

namespace ttow {

namespace {

Scalar random_scalar(const FieldSpec &f, std::mt19937_64 &rng) {
  if (f.is_rational())
    return Scalar::from_int(f, static_cast<long long>(rng() % 19) - 9);
  return Scalar::from_residue(f, rng() % f.p());
}

Scalar random_unit(const FieldSpec &f, std::mt19937_64 &rng) {
  Scalar s = random_scalar(f, rng);
  while (s.is_zero())
    s = random_scalar(f, rng);
  return s;
}

Vec random_combination(const FieldSpec &f, std::size_t n,
                       const std::vector<Vec> &basis, std::mt19937_64 &rng) {
  Vec x = zero_vec(f, n);
  for (const auto &b : basis) {
    Scalar c = random_scalar(f, rng);
    for (std::size_t i = 0; i < n; ++i)
      x[i] += c * b[i];
  }
  return x;
}

std::vector<Vec> all_units(const FieldSpec &f, std::size_t n) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(unit_vec(f, n, i));
  return out;
}

// Replace axis b by coordinates against `basis`: t'[.., j, ..] =
// sum_k t[.., k, ..] basis[j][k].
Tensor restrict_axis(const Tensor &t, std::size_t b,
                     const std::vector<Vec> &basis) {
  Frame fr = t.frame();
  fr.dims[b] = basis.size();
  Tensor out(fr);
  const auto istr = t.frame().strides();
  const auto ostr = fr.strides();
  std::vector<std::size_t> other = t.frame().dims;
  other[b] = 1;
  for_each_index(other, [&](const Index &idx) {
    std::size_t ib = 0, ob = 0;
    for (std::size_t a = 0; a < idx.size(); ++a) {
      ib += idx[a] * istr[a];
      ob += idx[a] * ostr[a];
    }
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Scalar s = Scalar::zero(fr.field);
      for (std::size_t k = 0; k < t.frame().dims[b]; ++k)
        if (!basis[j][k].is_zero())
          s += t.coeffs()[ib + k * istr[b]] * basis[j][k];
      out.coeffs()[ob + j * ostr[b]] = s;
    }
  });
  return out;
}

// All values <S|U_B, V_rest> as vectors in V_0.
std::vector<Vec> values(const std::vector<Tensor> &S, const Subframe &U,
                        Face B) {
  std::vector<Vec> out;
  for (const auto &t : S) {
    Tensor r = t;
    for (std::size_t b = 1; b < t.frame().dims.size(); ++b)
      if (B >> b & 1)
        r = restrict_axis(r, b, U.basis(b));
    const auto &dims = r.frame().dims;
    const std::size_t d0 = dims[0];
    const std::size_t fibre = d0 == 0 ? 0 : r.frame().size() / d0;
    for (std::size_t j = 0; j < fibre; ++j) {
      Vec v;
      for (std::size_t i = 0; i < d0; ++i)
        v.push_back(r.coeffs()[i * fibre + j]);
      out.push_back(std::move(v));
    }
  }
  return out;
}

} // namespace

Subframe::Subframe(Frame frame, std::vector<std::vector<Vec>> bases)
    : frame_(std::move(frame)), bases_(std::move(bases)) {
  const auto &dims = frame_.dims;
  if (bases_.size() != dims.size())
    throw InvalidSubframe("subframe needs one basis per axis");
  for (std::size_t a = 0; a < dims.size(); ++a) {
    RowReducer r(frame_.field, dims[a]);
    for (const auto &x : bases_[a]) {
      if (x.size() != dims[a])
        throw InvalidSubframe("basis vector of the wrong length on axis " +
                              std::to_string(a));
      for (const auto &c : x)
        if (c.field() != frame_.field)
          throw InvalidSubframe("basis vector over another field");
      if (!r.add_row(x))
        throw InvalidSubframe("dependent basis on axis " + std::to_string(a));
    }
  }
  if (bases_[0].size() >= dims[0])
    throw InvalidSubframe("U_0 must be a proper subspace");
  for (std::size_t a = 1; a < dims.size(); ++a)
    if (bases_[a].empty())
      throw InvalidSubframe("U_" + std::to_string(a) + " must be nonzero");
}

Subframe
Subframe::coordinate(const Frame &frame,
                     const std::vector<std::vector<std::size_t>> &idx) {
  if (idx.size() != frame.dims.size())
    throw InvalidSubframe("subframe needs one index list per axis");
  std::vector<std::vector<Vec>> b(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (auto i : idx[a]) {
      if (i >= frame.dims[a])
        throw InvalidSubframe("coordinate out of range");
      b[a].push_back(unit_vec(frame.field, frame.dims[a], i));
    }
  return Subframe(frame, std::move(b));
}

bool Subframe::contains(std::size_t a, const Vec &x) const {
  RowReducer r(frame_.field, frame_.dims.at(a));
  for (const auto &b : bases_[a])
    r.add_row(b);
  return r.in_span(x);
}

std::vector<Vec> Subframe::output_perp() const {
  const std::size_t d0 = frame_.dims[0];
  RowReducer r(frame_.field, d0);
  for (const auto &b : bases_[0])
    r.add_row(b);
  return r.kernel();
}

SimplicialComplex nabla_complex(const std::vector<Tensor> &S,
                                const Subframe &U) {
  const std::size_t n = U.frame().dims.size();
  if (S.empty())
    throw DimensionMismatch("need at least one tensor");
  if (n > 20)
    throw DimensionMismatch("at most 20 axes");
  for (const auto &t : S)
    if (t.frame() != U.frame())
      throw FrameMismatch("tensor and subframe frames differ");
  RowReducer u0(U.frame().field, U.frame().dims[0]);
  for (const auto &b : U.basis(0))
    u0.add_row(b);
  std::set<Face> faces;
  for (Face A = 0; A < (Face(1) << n); ++A) {
    bool in = false;
    for (const auto &x : values(S, U, A & ~Face(1))) {
      if (A & 1 ? !u0.in_span(x) : !is_zero_vec(x)) {
        in = true;
        break;
      }
    }
    if (in)
      faces.insert(A);
  }
  return SimplicialComplex(n, std::move(faces));
}

Ideal sr_ideal_of_subframe(const std::vector<Tensor> &S, const Subframe &U) {
  return stanley_reisner(nabla_complex(S, U), U.frame().field);
}

std::vector<TransverseOperator> omega_UV_spanning(const Subframe &U) {
  const Frame &fr = U.frame();
  const FieldSpec &f = fr.field;
  const std::size_t n = fr.dims.size();
  auto zeros = [&] {
    std::vector<DenseMatrix> m;
    for (auto d : fr.dims)
      m.emplace_back(f, d, d);
    return m;
  };
  std::vector<TransverseOperator> out;
  const std::size_t d0 = fr.dims[0];
  for (const auto &phi : U.output_perp())
    for (std::size_t i = 0; i < d0; ++i) {
      auto m = zeros();
      for (std::size_t k = 0; k < d0; ++k)
        m[0](i, k) = phi[k];
      out.emplace_back(fr, std::move(m));
    }
  for (std::size_t a = 1; a < n; ++a)
    for (const auto &u : U.basis(a))
      for (std::size_t j = 0; j < fr.dims[a]; ++j) {
        auto m = zeros();
        for (std::size_t k = 0; k < fr.dims[a]; ++k)
          m[a](k, j) = u[k];
        out.emplace_back(fr, std::move(m));
      }
  return out;
}

DenseMatrix projection(const FieldSpec &f, std::size_t n,
                       const std::vector<Vec> &image,
                       const std::vector<Vec> &kernel) {
  RowReducer r(f, n);
  std::vector<Vec> cols;
  for (const auto *part : {&image, &kernel})
    for (const auto &x : *part) {
      if (!r.add_row(x))
        throw DimensionMismatch("image and kernel vectors are dependent");
      cols.push_back(x);
    }
  for (std::size_t i = 0; i < n && cols.size() < n; ++i) {
    Vec e = unit_vec(f, n, i);
    if (r.add_row(e))
      cols.push_back(e);
  }
  DenseMatrix B(f, n, n), D(f, n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      B(i, j) = cols[j][i];
  for (std::size_t j = 0; j < image.size(); ++j)
    D(j, j) = Scalar::one(f);
  return B * D * *inverse(B);
}

SingularityReport verify_singularity_theorem(const Tensor &t, const Subframe &U,
                                             unsigned degree_bound,
                                             std::size_t samples,
                                             std::uint64_t seed) {
  const Frame &fr = U.frame();
  const FieldSpec &f = fr.field;
  const std::size_t n = fr.dims.size();
  if (t.frame() != fr)
    throw FrameMismatch("tensor and subframe frames differ");
  SingularityReport rep;
  rep.degree = degree_bound ? degree_bound : static_cast<unsigned>(n);
  rep.complex = nabla_complex({t}, U);
  rep.sr = stanley_reisner(rep.complex, f);

  std::mt19937_64 rng(seed);
  auto ops = omega_UV_spanning(U);
  const std::vector<Vec> perp = U.output_perp();
  // The proof's witnesses: for a facet A pick u with u_a in U_a on A and
  // outside U_b elsewhere, then idempotents onto U_a killing u_b off A.
  for (Face A : rep.complex.facets()) {
    std::vector<DenseMatrix> pis;
    for (std::size_t a = 0; a < n; ++a) {
      const std::size_t d = fr.dims[a];
      const std::vector<Vec> &img = a == 0 ? perp : U.basis(a);
      std::vector<Vec> ker;
      if (!(A >> a & 1)) {
        RowReducer r(f, d);
        for (const auto &b : img)
          r.add_row(b);
        for (int tries = 0; tries < 20; ++tries) {
          Vec x = random_combination(f, d, all_units(f, d), rng);
          if (r.add_row(x)) {
            ker.push_back(x);
            break;
          }
        }
      }
      DenseMatrix p = projection(f, d, img, ker);
      // Axis 0 works on covectors: transpose back to an action on V_0.
      pis.push_back(a == 0 ? p.transpose() : p);
    }
    for (unsigned k = 0; k <= rep.degree; ++k) {
      std::vector<DenseMatrix> m;
      for (const auto &p : pis)
        m.push_back(p.scaled(random_unit(f, rng)));
      ops.emplace_back(fr, std::move(m));
    }
  }
  auto span = omega_UV_spanning(U);
  for (std::size_t s = 0; s < samples && !span.empty(); ++s) {
    auto w = TransverseOperator::zero(fr, VarianceSignature::covariant(n));
    for (const auto &b : span)
      w = w + b.scaled(random_scalar(f, rng));
    ops.push_back(std::move(w));
  }
  rep.operators = ops.size();

  // Rows: monomials; columns: their images over all operators.
  auto monos = monomials_up_to(n, rep.degree);
  const std::size_t N = fr.size();
  DenseMatrix M(f, monos.size(), ops.size() * N);
  for (std::size_t o = 0; o < ops.size(); ++o) {
    PowerCache cache(ops[o]);
    for (std::size_t r = 0; r < monos.size(); ++r) {
      Tensor img = apply_monomial(ops[o], monos[r], t, &cache);
      for (std::size_t c = 0; c < N; ++c)
        M(r, o * N + c) = img.coeffs()[c];
    }
  }
  std::vector<MultiPoly> slice;
  std::vector<Vec> slice_vecs = left_nullspace(M);
  for (const auto &y : slice_vecs) {
    MultiPoly p(f, n);
    for (std::size_t r = 0; r < monos.size(); ++r)
      if (!y[r].is_zero())
        p.add_term(monos[r], y[r]);
    slice.push_back(std::move(p));
  }
  std::vector<Vec> sr_vecs;
  for (std::size_t r = 0; r < monos.size(); ++r)
    if (rep.sr.contains(MultiPoly::term(f, monos[r], Scalar::one(f))))
      sr_vecs.push_back(unit_vec(f, monos.size(), r));
  rep.forward = span_contains(f, monos.size(), slice_vecs, sr_vecs);
  rep.ideal = Ideal(f, n, slice);
  rep.holds = rep.forward &&
              same_span(f, monos.size(), slice_vecs, sr_vecs) &&
              rep.ideal == rep.sr;
  return rep;
}

std::optional<MonomialProbe> monomial_trait_probe(const Tensor &t,
                                                  const TransverseOperator &w) {
  Ideal I = ann_operator(t, w);
  auto m = contains_monomial(I, default_bounds(w));
  if (!m)
    return std::nullopt;
  const std::size_t n = m->size();
  Face supp = 0;
  for (std::size_t a = 0; a < n; ++a)
    if ((*m)[a])
      supp |= Face(1) << a;
  MonomialProbe out;
  out.monomial = *m;
  out.hint = complex_of(
      Ideal(t.field(), n,
            {MultiPoly::term(t.field(), squarefree(n, supp), Scalar::one(t.field()))}));
  return out;
}

} // namespace ttow
