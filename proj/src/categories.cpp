#include "ttow/categories.hpp"

#include <algorithm>

namespace ttow {

namespace {

// Substitute m along axis a, allowing a change of dimension. Axis 0 maps
// values (m is new x old); an input axis precomposes (m is old x new).
Tensor act_rect(const Tensor &t, std::size_t a, const DenseMatrix &m) {
  const auto &dims = t.frame().dims;
  std::size_t d_old = dims[a];
  std::size_t d_new = a == 0 ? m.rows() : m.cols();
  if ((a == 0 ? m.cols() : m.rows()) != d_old)
    throw ShapeMismatch("map does not fit axis " + std::to_string(a));
  auto nd = dims;
  nd[a] = d_new;
  Tensor out(Frame(t.field(), nd));
  auto so = t.frame().strides(), sn = out.frame().strides();
  auto other = dims;
  other[a] = 1;
  for_each_index(other, [&](const Index &idx) {
    std::size_t bo = 0, bn = 0;
    for (std::size_t b = 0; b < idx.size(); ++b) {
      bo += idx[b] * so[b];
      bn += idx[b] * sn[b];
    }
    for (std::size_t k = 0; k < d_old; ++k) {
      const Scalar &x = t.coeffs()[bo + k * so[a]];
      if (x.is_zero())
        continue;
      for (std::size_t j = 0; j < d_new; ++j) {
        const Scalar &w = a == 0 ? m(j, k) : m(k, j);
        if (!w.is_zero())
          out.coeffs()[bn + j * sn[a]] += w * x;
      }
    }
  });
  return out;
}

void check_shapes(const Tensor &s, const Tensor &t,
                  const std::vector<DenseMatrix> &maps,
                  const TensorCategory &cat) {
  const std::size_t n = cat.sigma.size();
  if (s.frame().dims.size() != n || t.frame().dims.size() != n)
    throw ShapeMismatch("valence differs from the category");
  if (s.field() != t.field())
    throw FieldMismatch("domain and codomain over different fields");
  if (maps.size() != n)
    throw ShapeMismatch("need one map per axis");
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t ds = s.frame().dims[a], dt = t.frame().dims[a];
    const auto &m = maps[a];
    if (m.field() != s.field())
      throw FieldMismatch("map over another field");
    bool ok;
    if (cat.sigma[a] > 0)
      ok = m.rows() == dt && m.cols() == ds;
    else if (cat.sigma[a] < 0)
      ok = m.rows() == ds && m.cols() == dt;
    else
      ok = ds == dt && m.rows() == ds && m.cols() == ds && m.is_identity();
    if (!ok)
      throw ShapeMismatch("map on axis " + std::to_string(a) +
                          " has the wrong shape");
  }
}

} // namespace

TensorCategory::TensorCategory(VarianceSignature s)
    : valence(s.size() == 0 ? 0 : s.size() - 1), sigma(std::move(s)) {}

bool verify_homotopism(const Tensor &s, const Tensor &t,
                       const std::vector<DenseMatrix> &maps,
                       const TensorCategory &cat) {
  check_shapes(s, t, maps, cat);
  const std::size_t n = cat.sigma.size();
  Tensor lhs = s, rhs = t;
  for (std::size_t a = 1; a < n; ++a) {
    if (cat.sigma[a] < 0)
      lhs = act_rect(lhs, a, maps[a]);
    else if (cat.sigma[a] > 0)
      rhs = act_rect(rhs, a, maps[a]);
  }
  if (cat.sigma[0] > 0)
    lhs = act_rect(lhs, 0, maps[0]);
  else if (cat.sigma[0] < 0)
    rhs = act_rect(rhs, 0, maps[0]);
  return lhs == rhs;
}

std::optional<Homotopism> Homotopism::make(const Tensor &s, const Tensor &t,
                                           std::vector<DenseMatrix> maps,
                                           const TensorCategory &cat) {
  if (!verify_homotopism(s, t, maps, cat))
    return std::nullopt;
  Homotopism h;
  h.s_ = s;
  h.t_ = t;
  h.cat_ = cat;
  h.maps_ = std::move(maps);
  return h;
}

Homotopism Homotopism::identity(const Tensor &t, const TensorCategory &cat) {
  std::vector<DenseMatrix> maps;
  for (auto d : t.frame().dims)
    maps.push_back(DenseMatrix::identity(t.field(), d));
  auto h = make(t, t, std::move(maps), cat);
  if (!h)
    throw CertificationFailed("identity maps rejected");
  return *h;
}

std::optional<Homotopism> Homotopism::inverse() const {
  std::vector<DenseMatrix> inv;
  for (const auto &m : maps_) {
    if (m.rows() != m.cols())
      return std::nullopt;
    auto i = ttow::inverse(m);
    if (!i)
      return std::nullopt;
    inv.push_back(std::move(*i));
  }
  auto h = make(t_, s_, std::move(inv), cat_);
  if (!h)
    throw CertificationFailed("inverse maps fail the identity");
  return h;
}

Homotopism compose_homotopisms(const Homotopism &f, const Homotopism &g) {
  if (f.category() != g.category())
    throw NotComposable("morphisms from different categories");
  if (g.codomain() != f.domain())
    throw NotComposable("codomain of the first is not the domain of the second");
  const auto &sig = f.category().sigma;
  std::vector<DenseMatrix> maps;
  for (std::size_t a = 0; a < sig.size(); ++a) {
    if (sig[a] > 0)
      maps.push_back(f.map(a) * g.map(a));
    else if (sig[a] < 0)
      maps.push_back(g.map(a) * f.map(a));
    else
      maps.push_back(f.map(a));
  }
  auto h = Homotopism::make(g.domain(), f.codomain(), std::move(maps),
                            f.category());
  if (!h)
    throw CertificationFailed("composite fails the homotopism identity");
  return *h;
}

std::vector<MultiPoly>
ComposabilityVerdict::witness_polys(const FieldSpec &f) const {
  std::vector<MultiPoly> out;
  for (const auto &[e, g] : witnesses) {
    auto p = MultiPoly::term(f, e, Scalar::one(f));
    p.add_term(g, -Scalar::one(f));
    out.push_back(std::move(p));
  }
  return out;
}

std::string outcome_name(ComposabilityVerdict::Outcome o) {
  switch (o) {
  case ComposabilityVerdict::Outcome::composable:
    return "composable";
  case ComposabilityVerdict::Outcome::not_composable:
    return "not_composable";
  default:
    return "unknown";
  }
}

ComposabilityVerdict composability_verdict(const FieldSpec &f,
                                           std::size_t nvars,
                                           const std::vector<MultiPoly> &P) {
  using O = ComposabilityVerdict::Outcome;
  ComposabilityVerdict v;
  auto refuse = [&](std::string why) {
    v.outcome = O::not_composable;
    v.reason = std::move(why);
    return v;
  };

  Ideal sat = saturate(Ideal(f, nvars, P));
  if (sat.is_unit())
    return refuse("contains monomial");
  for (const auto &g : sat.gb())
    if (g.size() != 2)
      return refuse("not binomial");

  PartialCharacter rho;
  try {
    rho = binomial_character(f, nvars, sat.gb());
  } catch (const InconsistentCharacter &) {
    return refuse("inconsistent character");
  }
  if (!rho.is_trivial())
    return refuse("nontrivial character");
  for (std::size_t a = 0; a < nvars; ++a) {
    long long k = rho.axis_projection(a);
    if (k >= 2)
      return refuse("axis projection " + std::to_string(k) + "Z");
  }

  // Lattice points with entries in {-1,0,1}, up to sign.
  std::vector<IntVec> cube;
  IntVec x(nvars, -1);
  while (true) {
    bool zero = std::all_of(x.begin(), x.end(), [](long long c) { return c == 0; });
    if (!zero && lattice_contains(rho.basis, x)) {
      auto first = std::find_if(x.begin(), x.end(), [](long long c) { return c != 0; });
      if (*first > 0)
        cube.push_back(x);
    }
    std::size_t a = 0;
    while (a < nvars && x[a] == 1)
      x[a++] = -1;
    if (a == nvars)
      break;
    ++x[a];
  }

  for (std::size_t mask = 0; mask < (std::size_t(1) << nvars); ++mask) {
    // tau_a = -1 when bit a is set; m is usable when tau m is 0/1, possibly
    // after negating m.
    std::vector<IntVec> C;
    for (const auto &m : cube) {
      for (int sgn : {1, -1}) {
        bool ok = true;
        for (std::size_t a = 0; a < nvars && ok; ++a) {
          long long y = sgn * m[a] * ((mask >> a) & 1 ? -1 : 1);
          ok = y == 0 || y == 1;
        }
        if (ok) {
          IntVec s = m;
          for (auto &c : s)
            c *= sgn;
          C.push_back(s);
          break;
        }
      }
    }
    if (!same_lattice(C, rho.basis))
      continue;
    // Drop redundant generators while the lattice stays the same.
    for (std::size_t i = C.size(); i-- > 0;) {
      auto D = C;
      D.erase(D.begin() + static_cast<std::ptrdiff_t>(i));
      if (same_lattice(D, rho.basis))
        C = std::move(D);
    }
    std::vector<bool> inA(nvars, false), inB(nvars, false);
    for (const auto &m : C)
      for (std::size_t a = 0; a < nvars; ++a) {
        if (m[a] > 0)
          inA[a] = true;
        if (m[a] < 0)
          inB[a] = true;
      }
    std::size_t lo = nvars;
    for (std::size_t a = 0; a < nvars; ++a)
      if (inA[a] || inB[a]) {
        lo = a;
        break;
      }
    bool flip = lo < nvars && inB[lo];
    if (flip)
      std::swap(inA, inB);
    for (std::size_t a = 0; a < nvars; ++a) {
      if (inA[a])
        v.A.push_back(a);
      if (inB[a])
        v.B.push_back(a);
    }
    for (const auto &m : C) {
      Monomial e(nvars, 0), g(nvars, 0);
      for (std::size_t a = 0; a < nvars; ++a) {
        long long c = flip ? -m[a] : m[a];
        if (c > 0)
          e[a] = 1;
        if (c < 0)
          g[a] = 1;
      }
      v.witnesses.emplace_back(std::move(e), std::move(g));
    }
    // Covariant on A, contravariant on B; axis 0 reverses its role, and the
    // whole signature is negated so that axis 0 is covariant when involved.
    std::vector<int> sig(nvars, 0);
    for (auto a : v.A)
      sig[a] = a == 0 ? -1 : 1;
    for (auto b : v.B)
      sig[b] = b == 0 ? 1 : -1;
    if (nvars > 0 && sig[0] < 0)
      for (auto &c : sig)
        c = -c;
    v.category = TensorCategory(VarianceSignature(sig));
    v.outcome = O::composable;
    return v;
  }
  v.outcome = O::unknown;
  v.reason = "no sign vector puts a generating set of the lattice in the "
             "unit cube";
  return v;
}

ComposabilityVerdict composability_verdict(const std::vector<MultiPoly> &P) {
  if (P.empty())
    throw DimensionMismatch("empty generator list; pass the field and arity");
  return composability_verdict(P[0].field(), P[0].nvars(), P);
}

TensorCategory shuffle_category(const TensorCategory &cat,
                                const std::vector<std::size_t> &pi) {
  const std::size_t n = cat.sigma.size();
  if (pi.size() != n)
    throw DimensionMismatch("permutation of the wrong length");
  std::vector<bool> seen(n, false);
  for (auto p : pi) {
    if (p >= n || seen[p])
      throw DimensionMismatch("not a permutation");
    seen[p] = true;
  }
  std::vector<int> sig(n);
  for (std::size_t a = 0; a < n; ++a)
    sig[a] = cat.sigma[pi[a]];
  if (n > 0 && pi[0] != 0) {
    std::size_t home = 0;
    while (pi[home] != 0)
      ++home;
    sig[0] = -sig[0];
    sig[home] = -sig[home];
  }
  return TensorCategory(VarianceSignature(sig));
}

} // namespace ttow
