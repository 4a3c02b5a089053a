#include "ttow/groebner.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ttow {

namespace {

// Terms sorted ascending under the order; the lead term is at the back.
struct OPoly {
  std::vector<std::pair<Monomial, Scalar>> t;
  bool empty() const { return t.empty(); }
  const Monomial &lm() const { return t.back().first; }
  const Scalar &lc() const { return t.back().second; }
};

OPoly to_opoly(const MultiPoly &p, const MonomialOrder &o) {
  OPoly r;
  r.t.assign(p.terms().begin(), p.terms().end());
  std::sort(r.t.begin(), r.t.end(), [&](const auto &a, const auto &b) {
    return o.less(a.first, b.first);
  });
  return r;
}

MultiPoly to_multi(const OPoly &p, const FieldSpec &f, std::size_t n) {
  MultiPoly r(f, n);
  for (const auto &[m, c] : p.t)
    r.add_term(m, c);
  return r;
}

// p - c * m * g
OPoly sub_scaled(const OPoly &p, const OPoly &g, const Monomial &m,
                 const Scalar &c, const MonomialOrder &o) {
  OPoly r;
  r.t.reserve(p.t.size() + g.t.size());
  std::size_t i = 0, j = 0;
  while (i < p.t.size() || j < g.t.size()) {
    if (j == g.t.size()) {
      r.t.push_back(p.t[i++]);
      continue;
    }
    Monomial gm = mono_mul(g.t[j].first, m);
    if (i == p.t.size()) {
      r.t.emplace_back(std::move(gm), -(c * g.t[j].second));
      ++j;
      continue;
    }
    int cmp = o.compare(p.t[i].first, gm);
    if (cmp < 0) {
      r.t.push_back(p.t[i++]);
    } else if (cmp > 0) {
      r.t.emplace_back(std::move(gm), -(c * g.t[j].second));
      ++j;
    } else {
      Scalar s = p.t[i].second - c * g.t[j].second;
      if (!s.is_zero())
        r.t.emplace_back(p.t[i].first, s);
      ++i;
      ++j;
    }
  }
  return r;
}

OPoly full_reduce(OPoly p, const std::vector<OPoly> &basis,
                  const MonomialOrder &o) {
  std::vector<std::pair<Monomial, Scalar>> rem; // collected descending
  while (!p.empty()) {
    const Monomial &m = p.lm();
    const OPoly *div = nullptr;
    for (const auto &g : basis)
      if (!g.empty() && divides(g.lm(), m)) {
        div = &g;
        break;
      }
    if (!div) {
      rem.push_back(p.t.back());
      p.t.pop_back();
      continue;
    }
    Monomial q = mono_div(m, div->lm());
    Scalar c = p.lc() / div->lc();
    p = sub_scaled(p, *div, q, c, o);
  }
  OPoly r;
  r.t.assign(rem.rbegin(), rem.rend());
  return r;
}

OPoly make_monic(OPoly p) {
  if (p.empty())
    return p;
  Scalar inv = p.lc().inv();
  for (auto &[m, c] : p.t)
    c *= inv;
  return p;
}

OPoly spoly(const OPoly &f, const OPoly &g, const MonomialOrder &o) {
  Monomial l = lcm(f.lm(), g.lm());
  OPoly a;
  Monomial mf = mono_div(l, f.lm()), mg = mono_div(l, g.lm());
  Scalar cf = f.lc().inv(), cg = g.lc().inv();
  for (const auto &[m, c] : f.t)
    a.t.emplace_back(mono_mul(m, mf), c * cf);
  return sub_scaled(a, g, mg, cg, o);
}

bool lex_less(const Monomial &a, const Monomial &b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<OPoly> reduced_basis(std::vector<OPoly> G,
                                 const MonomialOrder &o) {
  // Drop elements whose lead is divisible by another lead.
  std::vector<OPoly> min;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j)
        continue;
      if (divides(G[j].lm(), G[i].lm()) &&
          (G[j].lm() != G[i].lm() || j < i))
        redundant = true;
    }
    if (!redundant)
      min.push_back(G[i]);
  }
  std::vector<OPoly> out;
  for (std::size_t i = 0; i < min.size(); ++i) {
    std::vector<OPoly> others;
    for (std::size_t j = 0; j < min.size(); ++j)
      if (j != i)
        others.push_back(min[j]);
    // Lead stays; only the tail is reduced.
    OPoly lead;
    lead.t.push_back(min[i].t.back());
    OPoly tail = min[i];
    tail.t.pop_back();
    OPoly r = full_reduce(tail, others, o);
    r.t.push_back(lead.t.back());
    out.push_back(make_monic(r));
  }
  return out;
}

} // namespace

std::vector<MultiPoly> buchberger(const FieldSpec &f, std::size_t nvars,
                                  const std::vector<MultiPoly> &gens,
                                  const MonomialOrder &o) {
  std::vector<OPoly> G;
  for (const auto &g : gens) {
    if (g.nvars() != nvars)
      throw DimensionMismatch("generator in another polynomial ring");
    if (g.field() != f)
      throw FieldMismatch("generator over another field");
    if (g.is_zero())
      continue;
    OPoly r = full_reduce(to_opoly(g, o), G, o);
    if (!r.empty())
      G.push_back(make_monic(r));
  }
  // Pairs still to be treated.
  std::set<std::pair<std::size_t, std::size_t>> B;
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      B.emplace(i, j);
  auto pending = [&](std::size_t a, std::size_t b) {
    return B.count({std::min(a, b), std::max(a, b)}) > 0;
  };
  while (!B.empty()) {
    // Normal selection: smallest lcm degree, then lex-smallest lcm.
    auto best = B.begin();
    Monomial bl = lcm(G[best->first].lm(), G[best->second].lm());
    for (auto it = std::next(B.begin()); it != B.end(); ++it) {
      Monomial l = lcm(G[it->first].lm(), G[it->second].lm());
      unsigned dl = total_degree(l), db = total_degree(bl);
      if (dl < db || (dl == db && lex_less(l, bl))) {
        best = it;
        bl = std::move(l);
      }
    }
    auto [i, j] = *best;
    B.erase(best);
    if (coprime(G[i].lm(), G[j].lm()))
      continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k)
      if (k != i && k != j && divides(G[k].lm(), bl) && !pending(i, k) &&
          !pending(j, k))
        chain = true;
    if (chain)
      continue;
    OPoly r = full_reduce(spoly(G[i], G[j], o), G, o);
    if (r.empty())
      continue;
    G.push_back(make_monic(r));
    std::size_t n = G.size() - 1;
    for (std::size_t k = 0; k < n; ++k)
      B.emplace(k, n);
  }
  auto R = reduced_basis(std::move(G), o);
  std::sort(R.begin(), R.end(), [&](const OPoly &a, const OPoly &b) {
    unsigned da = total_degree(a.lm()), db = total_degree(b.lm());
    if (da != db)
      return da < db;
    return o.compare(a.lm(), b.lm()) > 0;
  });
  std::vector<MultiPoly> out;
  for (const auto &g : R)
    out.push_back(to_multi(g, f, nvars));
  return out;
}

MultiPoly reduce(const MultiPoly &p, const std::vector<MultiPoly> &basis,
                 const MonomialOrder &o) {
  std::vector<OPoly> B;
  for (const auto &g : basis) {
    if (g.nvars() != p.nvars())
      throw DimensionMismatch("divisor in another polynomial ring");
    if (!g.is_zero())
      B.push_back(to_opoly(g, o));
  }
  return to_multi(full_reduce(to_opoly(p, o), B, o), p.field(), p.nvars());
}

MultiPoly s_polynomial(const MultiPoly &f, const MultiPoly &g,
                       const MonomialOrder &o) {
  return to_multi(spoly(to_opoly(f, o), to_opoly(g, o), o), f.field(),
                  f.nvars());
}

MultiPoly normal_form(const MultiPoly &p, const Ideal &I) {
  if (p.nvars() != I.nvars())
    throw DimensionMismatch("polynomial and ideal in different rings");
  return reduce(p, I.gb(), I.order());
}

MultiPoly normal_form(const MultiPoly &p, const Ideal &I,
                      const MonomialOrder &order) {
  if (order != I.order())
    throw OrderMismatch("ideal carries " + I.order().str() + ", asked for " +
                        order.str());
  return normal_form(p, I);
}

Ideal::Ideal(const FieldSpec &f, std::size_t nvars, std::vector<MultiPoly> gens,
             MonomialOrder order)
    : field_(f), n_(nvars), order_(order), gens_(std::move(gens)) {
  gb_ = buchberger(f, nvars, gens_, order_);
}

bool Ideal::is_unit() const {
  return gb_.size() == 1 && gb_[0].total_degree() == 0;
}

bool Ideal::contains(const MultiPoly &p) const {
  return normal_form(p, *this).is_zero();
}

bool Ideal::contains(const Ideal &j) const {
  return std::all_of(j.gb().begin(), j.gb().end(),
                     [&](const MultiPoly &g) { return contains(g); });
}

bool Ideal::all_monomial() const {
  return std::all_of(gb_.begin(), gb_.end(),
                     [](const MultiPoly &g) { return g.is_monomial(); });
}

std::string Ideal::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < gb_.size(); ++i)
    os << (i ? ", " : "") << gb_[i].str(order_);
  os << ")";
  return os.str();
}

namespace {

MonomialOrder plain_order(const Ideal &I) {
  if (I.order().kind() == MonomialOrder::Kind::block)
    throw OrderMismatch("elimination needs a grevlex or lex ideal");
  return I.order();
}

// Shift variables up by k (new variables occupy 0..k-1).
MultiPoly lift(const MultiPoly &p, std::size_t k) {
  std::vector<std::size_t> map(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i)
    map[i] = i + k;
  return p.remap(p.nvars() + k, map);
}

// Drop the first k variables (all of which must have exponent 0).
MultiPoly lower(const MultiPoly &p, std::size_t k) {
  MultiPoly r(p.field(), p.nvars() - k);
  for (const auto &[m, c] : p.terms())
    r.add_term(Monomial(m.begin() + static_cast<long>(k), m.end()), c);
  return r;
}

bool free_of_leading(const MultiPoly &p, std::size_t k) {
  for (const auto &[m, c] : p.terms())
    for (std::size_t i = 0; i < k; ++i)
      if (m[i])
        return false;
  return true;
}

// GB of `gens` in n+k variables, keep the part free of the first k.
Ideal eliminate_aux(const FieldSpec &f, std::size_t n, std::size_t k,
                    const std::vector<MultiPoly> &gens,
                    const MonomialOrder &target) {
  auto big = buchberger(f, n + k, gens, MonomialOrder::block(k, target));
  std::vector<MultiPoly> keep;
  for (const auto &g : big)
    if (free_of_leading(g, k))
      keep.push_back(lower(g, k));
  return Ideal(f, n, keep, target);
}

} // namespace

Ideal eliminate_leading(const Ideal &I, std::size_t k) {
  MonomialOrder o = plain_order(I);
  if (k > I.nvars())
    throw DimensionMismatch("cannot eliminate more variables than exist");
  auto big = buchberger(I.field(), I.nvars(), I.gb(),
                        MonomialOrder::block(k, o));
  std::vector<MultiPoly> keep;
  for (const auto &g : big)
    if (free_of_leading(g, k))
      keep.push_back(g);
  return Ideal(I.field(), I.nvars(), keep, o);
}

Ideal intersect(const Ideal &I, const Ideal &J) {
  if (I.nvars() != J.nvars())
    throw DimensionMismatch("intersection of ideals in different rings");
  if (I.field() != J.field())
    throw FieldMismatch("intersection of ideals over different fields");
  if (I.order() != J.order())
    throw OrderMismatch("intersection of ideals under different orders");
  MonomialOrder o = plain_order(I);
  const FieldSpec &f = I.field();
  std::size_t n = I.nvars();
  if (I.is_unit())
    return Ideal(f, n, J.gb(), o);
  if (J.is_unit())
    return Ideal(f, n, I.gb(), o);
  // t I + (1 - t) J, eliminate t (variable 0).
  MultiPoly t = MultiPoly::variable(f, n + 1, 0);
  MultiPoly one_minus_t =
      MultiPoly::constant(f, n + 1, Scalar::one(f)) - t;
  std::vector<MultiPoly> gens;
  for (const auto &g : I.gb())
    gens.push_back(t * lift(g, 1));
  for (const auto &g : J.gb())
    gens.push_back(one_minus_t * lift(g, 1));
  return eliminate_aux(f, n, 1, gens, o);
}

Ideal saturate(const Ideal &I, std::vector<std::size_t> vars) {
  MonomialOrder o = plain_order(I);
  const FieldSpec &f = I.field();
  std::size_t n = I.nvars();
  if (vars.empty())
    for (std::size_t a = 0; a < n; ++a)
      vars.push_back(a);
  Ideal cur(f, n, I.gb(), o);
  for (auto a : vars) {
    if (a >= n)
      throw DimensionMismatch("saturation variable out of range");
    if (cur.is_zero() || cur.is_unit())
      break;
    std::vector<MultiPoly> gens;
    for (const auto &g : cur.gb())
      gens.push_back(lift(g, 1));
    MultiPoly txa = MultiPoly::variable(f, n + 1, 0) *
                    MultiPoly::variable(f, n + 1, a + 1);
    gens.push_back(txa - MultiPoly::constant(f, n + 1, Scalar::one(f)));
    cur = eliminate_aux(f, n, 1, gens, o);
  }
  return cur;
}

std::vector<Monomial> monomials_up_to(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  for (unsigned deg = 0; deg <= d; ++deg) {
    // Exponent vectors of total degree `deg`, lex-descending.
    Monomial m(n, 0);
    std::vector<Monomial> layer;
    auto rec = [&](auto &&self, std::size_t i, unsigned left) -> void {
      if (i + 1 == n) {
        m[i] = left;
        layer.push_back(m);
        return;
      }
      for (unsigned e = left + 1; e-- > 0;) {
        m[i] = e;
        self(self, i + 1, left - e);
      }
    };
    if (n == 0) {
      if (deg == 0)
        out.push_back(m);
      continue;
    }
    rec(rec, 0, deg);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::optional<Monomial> contains_monomial(const Ideal &I,
                                          const std::vector<unsigned> &bounds) {
  std::size_t n = I.nvars();
  if (I.is_zero())
    return std::nullopt;
  if (!saturate(I).is_unit())
    return std::nullopt;
  const FieldSpec &f = I.field();
  auto in_ideal = [&](const Monomial &m) {
    return normal_form(MultiPoly::term(f, m, Scalar::one(f)), I).is_zero();
  };
  if (!bounds.empty()) {
    if (bounds.size() != n)
      throw DimensionMismatch("one degree bound per variable");
    unsigned total = 0;
    for (auto b : bounds)
      total += b;
    for (const auto &m : monomials_up_to(n, total)) {
      bool inside = true;
      for (std::size_t i = 0; i < n; ++i)
        inside = inside && m[i] <= bounds[i];
      if (inside && in_ideal(m))
        return m;
    }
  }
  for (unsigned k = 0;; ++k) {
    Monomial m(n, k);
    if (in_ideal(m))
      return m;
  }
}

} // namespace ttow
