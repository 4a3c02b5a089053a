#include "oracles.hpp"

#include <doctest.h>

using namespace ttow;

namespace {

MultiPoly P(const FieldSpec &f, const std::string &s, std::size_t n) {
  return MultiPoly::parse(f, s, n);
}

std::vector<MultiPoly> Ps(const FieldSpec &f, std::size_t n,
                          std::initializer_list<const char *> ss) {
  std::vector<MultiPoly> out;
  for (auto s : ss)
    out.push_back(P(f, s, n));
  return out;
}

} // namespace

TEST_CASE("monomial orders") {
  auto g = MonomialOrder::grevlex();
  CHECK(g.compare({1, 0}, {0, 1}) > 0); // x0 > x1
  CHECK(g.compare({1, 1, 0}, {2, 0, 0}) < 0);
  CHECK(g.compare({0, 0, 2}, {1, 0, 0}) > 0);
  // Grevlex: x0 x2 < x1^2 in degree 2.
  CHECK(g.compare({1, 0, 1}, {0, 2, 0}) < 0);
  auto l = MonomialOrder::lex();
  CHECK(l.compare({1, 0, 1}, {0, 2, 0}) > 0);
  auto b = MonomialOrder::block(1, g);
  CHECK(b.compare({1, 0, 0}, {0, 5, 5}) > 0);
  CHECK(MonomialOrder::parse("grevlex") == g);
  CHECK(MonomialOrder::parse("lex") == l);
  CHECK_THROWS_AS(MonomialOrder::parse("deglex"), ParseError);
}

TEST_CASE("polynomial parsing and printing") {
  auto q = FieldSpec::rational();
  auto p = P(q, "x0^2 - 2*x1*x2 + 3/4", 0);
  CHECK(p.nvars() == 3);
  CHECK(p.str() == "x0^2 - 2*x1*x2 + 3/4");
  CHECK(P(q, "x0 - x0", 1).is_zero());
  CHECK((P(q, "x0 + x1", 2) * P(q, "x0 - x1", 2)) == P(q, "x0^2 - x1^2", 2));
  CHECK(P(q, "x0 + 1", 1).pow(3) == P(q, "x0^3 + 3*x0^2 + 3*x0 + 1", 1));
  CHECK_THROWS_AS(P(q, "x3", 2), ParseError);
  CHECK_THROWS_AS(P(q, "x0 +", 1), ParseError);
  CHECK_THROWS_AS(P(q, "y", 1), ParseError);
}

TEST_CASE("reduced basis of a nilpotent-pair ideal") {
  auto q = FieldSpec::rational();
  Ideal I(q, 2,
          Ps(q, 2, {"x0^2", "x0*x1 - x1^2", "x0^2*x1", "x0*x1^2", "x0^2*x1^2"}));
  CHECK(I.gb() == Ps(q, 2, {"x0^2", "x0*x1 - x1^2", "x1^3"}));
  CHECK(I.contains(P(q, "x1^3", 2)));
  CHECK_FALSE(I.contains(P(q, "x1^2", 2)));
  CHECK(normal_form(P(q, "x0*x1", 2), I) == P(q, "x1^2", 2));
}

TEST_CASE("idempotent ideal is its own reduced basis") {
  auto q = FieldSpec::rational();
  auto gens = Ps(q, 2, {"x0^2 - x0", "x1^2 - x1", "x0*x1"});
  Ideal I(q, 2, gens);
  CHECK(I.gb().size() == 3);
  for (const auto &g : gens)
    CHECK(std::find(I.gb().begin(), I.gb().end(), g) != I.gb().end());
  auto m = contains_monomial(I);
  REQUIRE(m.has_value());
  CHECK(*m == Monomial{1, 1});
}

TEST_CASE("s-polynomial against the textbook formula") {
  auto q = FieldSpec::rational();
  auto o = MonomialOrder::grevlex();
  auto f = P(q, "x0^3*x1^2 - x0^2*x1^3 + x0", 2);
  auto g = P(q, "3*x0^4*x1 + x1^2", 2);
  // lcm = x0^4 x1^2: x0 f - (1/3) x1 g
  auto expect = P(q, "x0", 2) * f - P(q, "1/3*x1", 2) * g;
  CHECK(s_polynomial(f, g, o) == expect);
}

TEST_CASE("reduced basis properties on random ideals") {
  std::mt19937_64 rng(21);
  auto o = MonomialOrder::grevlex();
  for (auto f : {FieldSpec::prime(101), FieldSpec::rational()}) {
    for (int it = 0; it < 25; ++it) {
      std::size_t n = 2 + rng() % 2;
      std::vector<MultiPoly> gens;
      std::size_t k = 1 + rng() % 3;
      for (std::size_t i = 0; i < k; ++i)
        gens.push_back(oracle::random_poly(f, n, 2, 1 + rng() % 3, rng));
      Ideal I(f, n, gens);
      const auto &G = I.gb();
      // Every generator reduces to zero.
      for (const auto &g : gens)
        CHECK(normal_form(g, I).is_zero());
      // Buchberger criterion on the result.
      for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j)
          CHECK(reduce(s_polynomial(G[i], G[j], o), G, o).is_zero());
      // Reducedness: monic, and no term divisible by another lead.
      for (std::size_t i = 0; i < G.size(); ++i) {
        CHECK(G[i].lead_coeff(o).is_one());
        for (std::size_t j = 0; j < G.size(); ++j) {
          if (i == j)
            continue;
          for (const auto &[m, c] : G[i].terms())
            CHECK_FALSE(divides(G[j].lead(o), m));
        }
      }
      // Each basis element lies in the ideal by the Macaulay oracle; the
      // cofactor degrees needed here stay well below the bound.
      for (const auto &g : G)
        CHECK(oracle::macaulay_member(g, gens, g.total_degree() + 8));
    }
  }
}

TEST_CASE("ideal equality does not depend on generators") {
  auto q = FieldSpec::rational();
  Ideal a(q, 2, Ps(q, 2, {"x0 + x1", "x0 - x1"}));
  Ideal b(q, 2, Ps(q, 2, {"x0", "x1"}));
  CHECK(a == b);
  Ideal c(q, 2, Ps(q, 2, {"x0*x1 - 1", "x0 - x1"}));
  Ideal d(q, 2, Ps(q, 2, {"x1^2 - 1", "x0 - x1"}));
  CHECK(c == d);
  CHECK(Ideal(q, 2, Ps(q, 2, {"x0 + 1", "x0"})).is_unit());
  CHECK(Ideal(q, 2, {}).is_zero());
}

TEST_CASE("intersection of ideals") {
  auto q = FieldSpec::rational();
  // Monomial ideals: generators are lcms of pairs.
  Ideal a(q, 3, Ps(q, 3, {"x0^2", "x1"}));
  Ideal b(q, 3, Ps(q, 3, {"x0*x2", "x1^2"}));
  Ideal expect(q, 3,
               Ps(q, 3, {"x0^2*x2", "x0^2*x1^2", "x0*x1*x2", "x1^2"}));
  CHECK(intersect(a, b) == expect);
  // (x0) ∩ (x0 - 1) = (x0^2 - x0)
  Ideal c(q, 1, Ps(q, 1, {"x0"})), d(q, 1, Ps(q, 1, {"x0 - 1"}));
  CHECK(intersect(c, d) == Ideal(q, 1, Ps(q, 1, {"x0^2 - x0"})));
  CHECK(intersect(c, Ideal(q, 1, Ps(q, 1, {"1"}))) == c);
  CHECK_THROWS_AS(intersect(c, Ideal(q, 1, Ps(q, 1, {"x0"}),
                                     MonomialOrder::lex())),
                  OrderMismatch);
}

TEST_CASE("intersection against the Macaulay oracle") {
  std::mt19937_64 rng(33);
  auto f = FieldSpec::prime(31);
  for (int it = 0; it < 12; ++it) {
    auto g1 = oracle::random_poly(f, 2, 2, 2, rng);
    auto g2 = oracle::random_poly(f, 2, 2, 2, rng);
    Ideal a(f, 2, {g1}), b(f, 2, {g2});
    Ideal c = intersect(a, b);
    for (const auto &h : c.gb()) {
      CHECK(oracle::macaulay_member(h, {g1}, h.total_degree()));
      CHECK(oracle::macaulay_member(h, {g2}, h.total_degree()));
    }
    // Principal ideals: the product lies in the intersection.
    CHECK(c.contains(g1 * g2));
  }
}

TEST_CASE("saturation") {
  auto q = FieldSpec::rational();
  Ideal I(q, 2, Ps(q, 2, {"x0*x1", "x0^2"}));
  CHECK(saturate(I, {1}) == Ideal(q, 2, Ps(q, 2, {"x0"})));
  CHECK(saturate(I, {0}).is_unit());
  // (x0 (x0 - 1)) : x0^inf = (x0 - 1)
  Ideal J(q, 1, Ps(q, 1, {"x0^3 - x0^2"}));
  CHECK(saturate(J) == Ideal(q, 1, Ps(q, 1, {"x0 - 1"})));
  // Binomial ideals are already saturated when the lattice is.
  Ideal K(q, 2, Ps(q, 2, {"x0 - x1"}));
  CHECK(saturate(K) == K);
}

TEST_CASE("monomial detection") {
  auto q = FieldSpec::rational();
  CHECK_FALSE(contains_monomial(Ideal(q, 2, Ps(q, 2, {"x0 - x1"}))).has_value());
  auto m = contains_monomial(Ideal(q, 2, Ps(q, 2, {"x0^2", "x0*x1 - x1^2"})),
                             {2, 2});
  REQUIRE(m.has_value());
  CHECK(*m == Monomial{2, 0});
  // Outside the search box: falls back to a power of the product.
  auto far = contains_monomial(Ideal(q, 2, Ps(q, 2, {"x0^3*x1^3"})), {1, 1});
  REQUIRE(far.has_value());
  CHECK(*far == Monomial{3, 3});
  CHECK_FALSE(contains_monomial(Ideal(q, 2, {})).has_value());
}

TEST_CASE("normal form under a foreign order") {
  auto q = FieldSpec::rational();
  Ideal I(q, 2, Ps(q, 2, {"x0 - x1"}));
  CHECK_THROWS_AS(normal_form(P(q, "x0", 2), I, MonomialOrder::lex()),
                  OrderMismatch);
  CHECK(normal_form(P(q, "x0", 2), I, MonomialOrder::grevlex()) ==
        P(q, "x1", 2));
}

TEST_CASE("eliminating leading variables") {
  auto q = FieldSpec::rational();
  // Twisted cubic parametrized by x0.
  Ideal I(q, 3, Ps(q, 3, {"x1 - x0^2", "x2 - x0^3"}));
  Ideal E = eliminate_leading(I, 1);
  CHECK(E.contains(P(q, "x1^3 - x2^2", 3)));
  for (const auto &g : E.gb())
    CHECK(g.degree_in(0) == 0);
}
