#include "oracles.hpp"

#include "ttow/categories.hpp"
#include "ttow/fixtures.hpp"

#include <doctest.h>

using namespace ttow;

namespace {

using O = ComposabilityVerdict::Outcome;

DenseMatrix swap2(const FieldSpec &f) {
  return DenseMatrix::from_ints(f, {{0, 1}, {1, 0}});
}

TensorCategory cat_of(std::vector<int> s) {
  return TensorCategory(VarianceSignature(std::move(s)));
}

// The defining identity checked on every tuple of basis vectors through
// evaluate(), one input at a time.
bool brute_homotopism(const Tensor &s, const Tensor &t,
                      const std::vector<DenseMatrix> &maps,
                      const std::vector<int> &sig) {
  const FieldSpec &f = s.field();
  const std::size_t n = sig.size();
  std::vector<std::size_t> box;
  for (std::size_t a = 1; a < n; ++a)
    box.push_back(sig[a] < 0 ? t.frame().dims[a] : s.frame().dims[a]);
  bool ok = true;
  for_each_index(box, [&](const Index &idx) {
    std::vector<Vec> la, ra;
    for (std::size_t a = 1; a < n; ++a) {
      Vec x = unit_vec(f, box[a - 1], idx[a - 1]);
      la.push_back(sig[a] < 0 ? maps[a].apply(x) : x);
      ra.push_back(sig[a] > 0 ? maps[a].apply(x) : x);
    }
    Vec l = evaluate(s, la), r = evaluate(t, ra);
    if (sig[0] > 0)
      l = maps[0].apply(l);
    if (sig[0] < 0)
      r = maps[0].apply(r);
    ok = ok && l == r;
  });
  return ok;
}

DenseMatrix random_invertible(const FieldSpec &f, std::size_t n,
                              std::mt19937_64 &rng) {
  while (true) {
    auto m = oracle::random_matrix(f, n, n, rng);
    if (rank(m) == n)
      return m;
  }
}

// Random square homotopism s -> t: the maps and s are random, t is solved
// for by undoing the covariant maps.
struct RandomMorphism {
  Tensor s, t;
  std::vector<DenseMatrix> maps;
};

RandomMorphism random_morphism(const Frame &fr, const std::vector<int> &sig,
                               std::mt19937_64 &rng) {
  RandomMorphism r;
  r.s = oracle::random_tensor(fr, rng);
  for (std::size_t a = 0; a < sig.size(); ++a)
    r.maps.push_back(sig[a] == 0
                         ? DenseMatrix::identity(fr.field, fr.dims[a])
                         : random_invertible(fr.field, fr.dims[a], rng));
  Tensor x = r.s;
  for (std::size_t a = 1; a < sig.size(); ++a)
    if (sig[a] < 0)
      x = act_on_axis(x, a, r.maps[a]);
  if (sig[0] > 0)
    x = act_on_axis(x, 0, r.maps[0]);
  if (sig[0] < 0)
    x = act_on_axis(x, 0, *inverse(r.maps[0]));
  for (std::size_t a = 1; a < sig.size(); ++a)
    if (sig[a] > 0)
      x = act_on_axis(x, a, *inverse(r.maps[a]));
  r.t = x;
  return r;
}

std::vector<int> random_signature(std::size_t n, std::mt19937_64 &rng) {
  std::vector<int> s(n);
  for (auto &c : s)
    c = static_cast<int>(rng() % 3) - 1;
  return s;
}

MultiPoly poly(const std::string &s, std::size_t n = 3) {
  return MultiPoly::parse(FieldSpec::rational(), s, n);
}

Monomial mono(std::vector<unsigned> e) { return e; }

} // namespace

TEST_CASE("homotopisms of the GHZ state") {
  auto f = FieldSpec::rational();
  Tensor g = ghz_tensor(f);
  auto cov = cat_of({1, 1, 1});
  auto I = DenseMatrix::identity(f, 2);
  auto S = swap2(f);

  CHECK(verify_homotopism(g, g, {I, I, I}, cov));
  CHECK(verify_homotopism(g, g, {S, S, S}, cov));
  CHECK_FALSE(verify_homotopism(g, g, {S, S, I}, cov));
  // (swap, swap, id) at (e0, e0): left side swaps e0 to e1, right side has
  // <g|e1, e0> = 0.
  CHECK(brute_homotopism(g, g, {S, S, S}, {1, 1, 1}));
  CHECK_FALSE(brute_homotopism(g, g, {S, S, I}, {1, 1, 1}));

  auto h = Homotopism::make(g, g, {S, S, S}, cov);
  REQUIRE(h);
  auto sq = compose_homotopisms(*h, *h);
  CHECK(sq == Homotopism::identity(g, cov));
  CHECK(compose_homotopisms(*h, Homotopism::identity(g, cov)) == *h);
  CHECK_FALSE(Homotopism::make(g, g, {S, S, I}, cov));
}

TEST_CASE("homotopism shape errors") {
  auto f = FieldSpec::rational();
  Tensor g = ghz_tensor(f);
  auto I2 = DenseMatrix::identity(f, 2);
  auto I3 = DenseMatrix::identity(f, 3);
  CHECK_THROWS_AS(verify_homotopism(g, g, {I2, I2}, cat_of({1, 1, 1})),
                  ShapeMismatch);
  CHECK_THROWS_AS(verify_homotopism(g, g, {I2, I3, I2}, cat_of({1, 1, 1})),
                  ShapeMismatch);
  // Constant axes carry the identity only.
  CHECK_THROWS_AS(
      verify_homotopism(g, g, {swap2(f), I2, I2}, cat_of({0, 1, 1})),
      ShapeMismatch);
  Tensor d3 = dotprod_tensor(f, 3);
  CHECK_THROWS_AS(verify_homotopism(d3, g, {I2, I2, I2}, cat_of({0, 1, 1})),
                  ShapeMismatch);
  CHECK_THROWS_AS(verify_homotopism(g, g, {I2, I2}, cat_of({1, 1})),
                  ShapeMismatch);
}

TEST_CASE("adjoint morphisms between dot products") {
  auto f = FieldSpec::rational();
  std::mt19937_64 rng(7);
  auto adj = cat_of({0, -1, 1});
  auto I1 = DenseMatrix::identity(f, 1);
  Tensor d2 = dotprod_tensor(f, 2), d3 = dotprod_tensor(f, 3);

  // Rectangular: <s|tau x, y> = <t|x, omega y> forces omega = tau^T.
  auto tau = oracle::random_matrix(f, 2, 3, rng);
  CHECK(verify_homotopism(d2, d3, {I1, tau, tau.transpose()}, adj));
  CHECK(brute_homotopism(d2, d3, {I1, tau, tau.transpose()}, {0, -1, 1}));
  auto bad = tau.transpose();
  bad(0, 0) += Scalar::one(f);
  CHECK_FALSE(verify_homotopism(d2, d3, {I1, tau, bad}, adj));

  // (omega^T, omega) o (tau^T, tau) = ((omega tau)^T, omega tau).
  for (int trial = 0; trial < 10; ++trial) {
    auto w = oracle::random_matrix(f, 3, 3, rng);
    auto t = oracle::random_matrix(f, 3, 3, rng);
    auto hf = Homotopism::make(d3, d3, {I1, w.transpose(), w}, adj);
    auto hg = Homotopism::make(d3, d3, {I1, t.transpose(), t}, adj);
    REQUIRE(hf);
    REQUIRE(hg);
    auto c = compose_homotopisms(*hf, *hg);
    CHECK(c.map(2) == w * t);
    CHECK(c.map(1) == (w * t).transpose());
  }
}

TEST_CASE("homotopism check agrees with basis evaluation") {
  std::mt19937_64 rng(11);
  for (auto f : {FieldSpec::rational(), FieldSpec::prime(7)}) {
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t v = 1 + rng() % 3;
      std::vector<std::size_t> dims(v + 1);
      for (auto &d : dims)
        d = 1 + rng() % 3;
      Frame fr(f, dims);
      auto sig = random_signature(v + 1, rng);
      auto r = random_morphism(fr, sig, rng);
      auto cat = cat_of(sig);
      CHECK(verify_homotopism(r.s, r.t, r.maps, cat));
      CHECK(brute_homotopism(r.s, r.t, r.maps, sig));
      // Random perturbations: the two checks must agree either way.
      for (std::size_t a = 0; a <= v; ++a) {
        if (sig[a] == 0)
          continue;
        auto m = r.maps;
        m[a] = oracle::random_matrix(f, dims[a], dims[a], rng);
        CHECK(verify_homotopism(r.s, r.t, m, cat) ==
              brute_homotopism(r.s, r.t, m, sig));
      }
    }
  }
}

TEST_CASE("invertible homotopisms form a groupoid") {
  std::mt19937_64 rng(5);
  auto f = FieldSpec::prime(101);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t v = 1 + rng() % 3;
    std::vector<std::size_t> dims(v + 1);
    for (auto &d : dims)
      d = 1 + rng() % 3;
    Frame fr(f, dims);
    auto sig = random_signature(v + 1, rng);
    auto cat = cat_of(sig);
    auto g = random_morphism(fr, sig, rng);
    auto hg = Homotopism::make(g.s, g.t, g.maps, cat);
    REQUIRE(hg);

    // A second morphism out of g's codomain, reusing random maps.
    auto fm = random_morphism(fr, sig, rng);
    Tensor x = g.t;
    for (std::size_t a = 1; a <= v; ++a)
      if (sig[a] < 0)
        x = act_on_axis(x, a, fm.maps[a]);
    if (sig[0] > 0)
      x = act_on_axis(x, 0, fm.maps[0]);
    if (sig[0] < 0)
      x = act_on_axis(x, 0, *inverse(fm.maps[0]));
    for (std::size_t a = 1; a <= v; ++a)
      if (sig[a] > 0)
        x = act_on_axis(x, a, *inverse(fm.maps[a]));
    auto hf = Homotopism::make(g.t, x, fm.maps, cat);
    REQUIRE(hf);

    auto c = compose_homotopisms(*hf, *hg);
    CHECK(c.domain() == g.s);
    CHECK(c.codomain() == x);
    CHECK(brute_homotopism(g.s, x, c.maps(), sig));

    auto inv = hg->inverse();
    REQUIRE(inv);
    CHECK(compose_homotopisms(*inv, *hg) == Homotopism::identity(g.s, cat));
    CHECK(compose_homotopisms(*hg, *inv) == Homotopism::identity(g.t, cat));
    // Associativity through the inverse.
    CHECK(compose_homotopisms(compose_homotopisms(*hf, *hg), *inv) == *hf);

    if (g.s != g.t)
      CHECK_THROWS_AS(compose_homotopisms(*hg, *hg), NotComposable);
    auto other = sig;
    other[0] = other[0] == 1 ? -1 : 1;
    CHECK_THROWS_AS(
        compose_homotopisms(*hf, Homotopism::identity(g.t, cat_of(other))),
        NotComposable);
  }
}

TEST_CASE("composability verdicts of the standard ideals") {
  auto q = FieldSpec::rational();

  auto v = composability_verdict({poly("x0 - x1*x2")});
  CHECK(v.outcome == O::composable);
  CHECK(v.A == std::vector<std::size_t>{0});
  CHECK(v.B == std::vector<std::size_t>{1, 2});
  REQUIRE(v.witnesses.size() == 1);
  CHECK(v.witnesses[0].first == mono({1, 0, 0}));
  CHECK(v.witnesses[0].second == mono({0, 1, 1}));
  REQUIRE(v.category);
  CHECK(v.category->sigma.sigma == std::vector<int>{1, 1, 1});

  v = composability_verdict({poly("x1 - x2")});
  CHECK(v.outcome == O::composable);
  CHECK(v.A == std::vector<std::size_t>{1});
  CHECK(v.B == std::vector<std::size_t>{2});
  CHECK(v.category->sigma.sigma == std::vector<int>{0, 1, -1});

  v = composability_verdict({poly("x0^2 - x1", 2)});
  CHECK(v.outcome == O::not_composable);
  CHECK(v.reason == "axis projection 2Z");

  v = composability_verdict({poly("x0 - 2*x1", 2)});
  CHECK(v.outcome == O::not_composable);
  CHECK(v.reason == "nontrivial character");

  v = composability_verdict({poly("x0 - x1*x2"), poly("x0*x1 - x2")});
  CHECK(v.outcome == O::unknown);
  CHECK(v.witnesses.empty());

  // Isometries: A = {1, 2}, nothing contravariant.
  v = composability_verdict({poly("x1*x2 - 1")});
  CHECK(v.outcome == O::composable);
  CHECK(v.A == std::vector<std::size_t>{1, 2});
  CHECK(v.B.empty());

  CHECK(composability_verdict({poly("x0*x1")}).reason == "contains monomial");
  CHECK(composability_verdict({poly("x0 - x1 - x2")}).reason == "not binomial");
  CHECK(composability_verdict({poly("x0^3 - x1^3", 2)}).reason ==
        "axis projection 3Z");
  // Saturation removes the monomial factor first.
  v = composability_verdict({poly("x0^2*x1 - x0*x2")});
  CHECK(v.outcome == O::composable);
  CHECK(v.witnesses[0].first == mono({1, 1, 0}));
  CHECK(v.witnesses[0].second == mono({0, 0, 1}));

  v = composability_verdict(q, 3, {});
  CHECK(v.outcome == O::composable);
  CHECK(v.witnesses.empty());
  CHECK_THROWS_AS(composability_verdict(std::vector<MultiPoly>{}),
                  DimensionMismatch);
}

TEST_CASE("composable witnesses define the same invertible operators") {
  // Soundness on random binomial systems: support conditions hold and the
  // witnesses generate the same saturated ideal as the input.
  std::mt19937_64 rng(19);
  auto f = FieldSpec::prime(101);
  int decided = 0;
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t n = 2 + rng() % 3;
    std::size_t k = 1 + rng() % 2;
    std::vector<MultiPoly> P;
    for (std::size_t i = 0; i < k; ++i) {
      Monomial e(n), g(n);
      for (std::size_t a = 0; a < n; ++a) {
        e[a] = rng() % 7 == 0 ? 2 : rng() % 2;
        g[a] = rng() % 7 == 0 ? 2 : rng() % 2;
      }
      auto p = MultiPoly::term(f, e, Scalar::one(f));
      p.add_term(g, -Scalar::one(f));
      if (!p.is_zero())
        P.push_back(p);
    }
    auto v = composability_verdict(f, n, P);
    if (v.outcome == O::not_composable) {
      CHECK_FALSE(v.reason.empty());
      continue;
    }
    if (v.outcome == O::unknown)
      continue;
    ++decided;
    for (auto a : v.A)
      CHECK(std::find(v.B.begin(), v.B.end(), a) == v.B.end());
    for (const auto &[e, g] : v.witnesses)
      for (std::size_t a = 0; a < n; ++a) {
        CHECK(e[a] <= 1);
        CHECK(g[a] <= 1);
        if (e[a])
          CHECK(std::find(v.A.begin(), v.A.end(), a) != v.A.end());
        if (g[a])
          CHECK(std::find(v.B.begin(), v.B.end(), a) != v.B.end());
      }
    CHECK(saturate(Ideal(f, n, v.witness_polys(f))) ==
          saturate(Ideal(f, n, P)));
  }
  CHECK(decided > 10);
}

TEST_CASE("the induced category carries the witness traits") {
  // Every GHZ autotopism is an operator with trait x0 - x1 x2.
  auto f = FieldSpec::rational();
  Tensor g = ghz_tensor(f);
  auto v = composability_verdict({poly("x0 - x1*x2")});
  REQUIRE(v.category);
  auto S = swap2(f);
  // Diagonal autotopisms need omega_0 = omega_1 omega_2.
  auto D1 = DenseMatrix::from_ints(f, {{2, 0}, {0, 5}});
  auto D2 = DenseMatrix::from_ints(f, {{3, 0}, {0, 7}});
  auto D0 = DenseMatrix::from_ints(f, {{6, 0}, {0, 35}});
  for (const auto &maps : std::vector<std::vector<DenseMatrix>>{
           {S, S, S}, {D0, D1, D2}, {S * D0, S * D1, S * D2}}) {
    auto h = Homotopism::make(g, g, maps, *v.category);
    REQUIRE(h);
    TransverseOperator op(g.frame(), maps);
    for (const auto &p : v.witness_polys(f))
      CHECK(is_trait(p, g, op));
  }
}

TEST_CASE("shuffled categories") {
  auto c = cat_of({1, 1});
  CHECK(shuffle_category(c, {1, 0}).sigma.sigma == std::vector<int>{-1, -1});
  CHECK(shuffle_category(cat_of({1, 1, 1, 1}), {1, 0, 3, 2}).sigma.sigma ==
        std::vector<int>{-1, -1, 1, 1});
  CHECK(shuffle_category(cat_of({1, -1, 0}), {0, 1, 2}) == cat_of({1, -1, 0}));
  CHECK(shuffle_category(cat_of({1, -1, 0}), {0, 2, 1}).sigma.sigma ==
        std::vector<int>{1, 0, -1});
  CHECK_THROWS_AS(shuffle_category(c, {0, 0}), DimensionMismatch);
  CHECK_THROWS_AS(shuffle_category(c, {0}), DimensionMismatch);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng() % 5;
    std::vector<std::size_t> pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    std::shuffle(pi.begin(), pi.end(), rng);
    std::vector<std::size_t> inv(n);
    for (std::size_t a = 0; a < n; ++a)
      inv[pi[a]] = a;
    auto cat = cat_of(random_signature(n, rng));
    CHECK(shuffle_category(shuffle_category(cat, pi), inv) == cat);
  }
}
