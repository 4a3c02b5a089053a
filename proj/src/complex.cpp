#include "ttow/complex.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ttow {

Face face_of(const std::vector<std::size_t> &vertices) {
  Face f = 0;
  for (auto a : vertices) {
    if (a >= 32)
      throw DimensionMismatch("at most 32 vertices");
    f |= Face(1) << a;
  }
  return f;
}

std::vector<std::size_t> vertices_of(Face f) {
  std::vector<std::size_t> v;
  for (std::size_t a = 0; a < 32; ++a)
    if (f >> a & 1)
      v.push_back(a);
  return v;
}

namespace {

bool subset(Face a, Face b) { return (a & ~b) == 0; }

Face all_vertices(std::size_t n) {
  return n >= 32 ? ~Face(0) : (Face(1) << n) - 1;
}

} // namespace

SimplicialComplex::SimplicialComplex(std::size_t n, std::set<Face> faces)
    : n_(n), faces_(std::move(faces)) {
  if (n > 20)
    throw DimensionMismatch("complexes are limited to 20 vertices");
  for (Face f : faces_) {
    if (!subset(f, all_vertices(n)))
      throw DimensionMismatch("face uses a vertex outside the complex");
    // Every face minus one vertex must be present.
    for (auto a : vertices_of(f))
      if (!faces_.count(f & ~(Face(1) << a)))
        throw NotDownwardClosed("face " +
                                std::to_string(f & ~(Face(1) << a)) +
                                " missing below " + std::to_string(f));
  }
}

SimplicialComplex SimplicialComplex::generated(std::size_t n,
                                               const std::vector<Face> &facets) {
  std::set<Face> faces;
  for (Face f : facets)
    // Enumerate all subsets of f.
    for (Face s = f;; s = (s - 1) & f) {
      faces.insert(s);
      if (s == 0)
        break;
    }
  return SimplicialComplex(n, std::move(faces));
}

SimplicialComplex SimplicialComplex::simplex(std::size_t n) {
  return generated(n, {all_vertices(n)});
}

std::vector<Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  for (Face f : faces_) {
    bool maximal = true;
    for (std::size_t a = 0; a < n_ && maximal; ++a)
      if (!(f >> a & 1) && faces_.count(f | Face(1) << a))
        maximal = false;
    if (maximal)
      out.push_back(f);
  }
  return out;
}

std::vector<Face> SimplicialComplex::minimal_nonfaces() const {
  std::vector<Face> out;
  for (Face f = 0; f <= all_vertices(n_); ++f) {
    if (faces_.count(f))
      continue;
    bool minimal = true;
    for (auto a : vertices_of(f))
      if (!faces_.count(f & ~(Face(1) << a)))
        minimal = false;
    if (minimal)
      out.push_back(f);
    if (f == all_vertices(n_))
      break;
  }
  return out;
}

std::string SimplicialComplex::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (Face f : facets()) {
    os << (first ? "" : ",") << "{";
    first = false;
    auto v = vertices_of(f);
    for (std::size_t i = 0; i < v.size(); ++i)
      os << (i ? "," : "") << v[i];
    os << "}";
  }
  os << "}";
  return os.str();
}

Monomial squarefree(std::size_t n, Face f) {
  Monomial m(n, 0);
  for (auto a : vertices_of(f))
    m.at(a) = 1;
  return m;
}

Ideal stanley_reisner(const SimplicialComplex &c, const FieldSpec &f) {
  std::vector<MultiPoly> gens;
  for (Face nf : c.minimal_nonfaces())
    gens.push_back(
        MultiPoly::term(f, squarefree(c.nvertices(), nf), Scalar::one(f)));
  return Ideal(f, c.nvertices(), gens);
}

namespace {

void require_monomial(const Ideal &I) {
  if (!I.all_monomial())
    throw NotMonomial("ideal has a non-monomial basis element");
}

std::vector<Monomial> leads(const Ideal &I) {
  std::vector<Monomial> out;
  for (const auto &g : I.gb())
    out.push_back(g.terms().begin()->first);
  return out;
}

std::vector<Monomial> minimize(std::vector<Monomial> g) {
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j)
      if (j != i && divides(g[j], g[i]))
        redundant = true;
    if (!redundant)
      out.push_back(g[i]);
  }
  return out;
}

bool mono_ideal_contains(const std::vector<Monomial> &gens, const Monomial &m) {
  return std::any_of(gens.begin(), gens.end(),
                     [&](const Monomial &g) { return divides(g, m); });
}

bool mono_ideal_subset(const std::vector<Monomial> &a,
                       const std::vector<Monomial> &b) { // a ⊆ b
  return std::all_of(a.begin(), a.end(), [&](const Monomial &m) {
    return mono_ideal_contains(b, m);
  });
}

std::vector<Monomial> mono_intersect(const std::vector<Monomial> &a,
                                     const std::vector<Monomial> &b) {
  std::vector<Monomial> out;
  for (const auto &x : a)
    for (const auto &y : b)
      out.push_back(lcm(x, y));
  return minimize(out);
}

// Index of a variable the monomial shares with another one, if mixed.
bool split_point(const Monomial &m, std::size_t &var) {
  std::size_t count = 0;
  for (std::size_t a = 0; a < m.size(); ++a)
    if (m[a]) {
      if (count == 0)
        var = a;
      ++count;
    }
  return count >= 2;
}

void irreducibles(const std::vector<Monomial> &gens,
                  std::vector<std::vector<Monomial>> &out) {
  for (const auto &g : gens) {
    std::size_t a;
    if (!split_point(g, a))
      continue;
    Monomial pw(g.size(), 0), rest = g;
    pw[a] = g[a];
    rest[a] = 0;
    // I = (I + x_a^k) ∩ (I + rest) when g = x_a^k rest, coprime.
    auto left = gens, right = gens;
    left.push_back(pw);
    right.push_back(rest);
    irreducibles(minimize(left), out);
    irreducibles(minimize(right), out);
    return;
  }
  out.push_back(gens);
}

Face support(const std::vector<Monomial> &gens) {
  Face f = 0;
  for (const auto &g : gens)
    for (std::size_t a = 0; a < g.size(); ++a)
      if (g[a])
        f |= Face(1) << a;
  return f;
}

Ideal to_ideal(const FieldSpec &f, std::size_t n,
               const std::vector<Monomial> &gens) {
  std::vector<MultiPoly> ps;
  for (const auto &m : gens)
    ps.push_back(MultiPoly::term(f, m, Scalar::one(f)));
  return Ideal(f, n, ps);
}

} // namespace

SimplicialComplex complex_of(const Ideal &I) {
  require_monomial(I);
  std::size_t n = I.nvars();
  auto gens = leads(I);
  std::set<Face> faces;
  for (Face f = 0; f <= all_vertices(n); ++f) {
    if (!mono_ideal_contains(gens, squarefree(n, f)))
      faces.insert(f);
    if (f == all_vertices(n))
      break;
  }
  return SimplicialComplex(n, std::move(faces));
}

PrimaryDecomposition monomial_primary_decomposition(const Ideal &I) {
  require_monomial(I);
  const FieldSpec &f = I.field();
  std::size_t n = I.nvars();
  PrimaryDecomposition out;
  if (I.is_unit())
    return out;
  if (I.is_zero()) {
    out.components.push_back(I);
    out.minimal_primes.push_back(I);
    return out;
  }
  std::vector<std::vector<Monomial>> irr;
  irreducibles(minimize(leads(I)), irr);
  // Drop components that contain another component.
  std::vector<std::vector<Monomial>> kept;
  for (std::size_t i = 0; i < irr.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < irr.size() && !redundant; ++j) {
      if (i == j)
        continue;
      bool ji = mono_ideal_subset(irr[j], irr[i]);
      bool ij = mono_ideal_subset(irr[i], irr[j]);
      if (ji && (!ij || j < i))
        redundant = true;
    }
    if (!redundant)
      kept.push_back(irr[i]);
  }
  std::map<Face, std::vector<Monomial>> by_radical;
  for (const auto &c : kept) {
    Face r = support(c);
    auto it = by_radical.find(r);
    if (it == by_radical.end())
      by_radical.emplace(r, c);
    else
      it->second = mono_intersect(it->second, c);
  }
  std::vector<Face> radicals;
  for (const auto &[r, c] : by_radical) {
    out.components.push_back(to_ideal(f, n, c));
    radicals.push_back(r);
  }
  for (Face r : radicals) {
    bool minimal = std::none_of(radicals.begin(), radicals.end(), [&](Face s) {
      return s != r && subset(s, r);
    });
    if (minimal) {
      std::vector<Monomial> vars;
      for (auto a : vertices_of(r)) {
        Monomial m(n, 0);
        m[a] = 1;
        vars.push_back(m);
      }
      out.minimal_primes.push_back(to_ideal(f, n, vars));
    }
  }
  return out;
}

} // namespace ttow
