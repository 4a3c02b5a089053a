#include "oracles.hpp"

#include "ttow/annihilator.hpp"
#include "ttow/fixtures.hpp"

#include <doctest.h>

using namespace ttow;

namespace {

Ideal ideal(const FieldSpec &f, std::size_t n,
            std::initializer_list<const char *> ss) {
  std::vector<MultiPoly> g;
  for (auto s : ss)
    g.push_back(MultiPoly::parse(f, s, n));
  return Ideal(f, n, g);
}

// Minimal polynomial of omega_a on t from the Krylov sequence t, w t, w^2 t.
MultiPoly krylov_min_poly(const Tensor &t, const TransverseOperator &op,
                          std::size_t a) {
  const FieldSpec &f = t.field();
  std::size_t n = t.frame().dims.size();
  std::vector<Vec> seq{t.coeffs()};
  Tensor cur = t;
  while (true) {
    cur = act_on_axis(cur, a, op.mat(a));
    // Solve sum c_k seq_k = cur via the kernel of [seq; -cur].
    auto rows = seq;
    Vec neg = cur.coeffs();
    for (auto &x : neg)
      x = -x;
    rows.push_back(neg);
    auto ker = left_nullspace(DenseMatrix::from_rows(f, rows, t.frame().size()));
    for (const auto &y : ker)
      if (!y.back().is_zero()) {
        MultiPoly p(f, n);
        Monomial e(n, 0);
        Scalar s = y.back().inv();
        for (std::size_t k = 0; k + 1 < y.size(); ++k) {
          e[a] = static_cast<unsigned>(k);
          p.add_term(e, -(y[k] * s));
        }
        e[a] = static_cast<unsigned>(seq.size());
        p.add_term(e, Scalar::one(f));
        return p;
      }
    seq.push_back(cur.coeffs());
  }
}

TransverseOperator random_op(const Frame &fr, std::mt19937_64 &rng,
                             double density = 0.6) {
  std::vector<DenseMatrix> ms;
  for (auto d : fr.dims)
    ms.push_back(oracle::random_matrix(fr.field, d, d, rng, density));
  return TransverseOperator(fr, ms);
}

} // namespace

TEST_CASE("annihilators of the worked operator examples") {
  auto q = FieldSpec::rational();
  auto a = operator_fixture("idempotent_pair", q);
  CHECK(ann_operator(a.t, a.op) ==
        ideal(q, 2, {"x0^2 - x0", "x1^2 - x1", "x0*x1"}));
  auto b = operator_fixture("nilpotent_pair", q);
  CHECK(ann_operator(b.t, b.op) ==
        ideal(q, 2, {"x0^2", "x0*x1 - x1^2", "x1^3"}));
  auto g = operator_fixture("ghz_swap", q);
  CHECK(ann_operator(g.t, g.op) ==
        ideal(q, 3,
              {"x0^2 - 1", "x1^2 - 1", "x2^2 - 1", "x0*x1 - x2", "x0 - x1*x2",
               "x1 - x0*x2"}));
  auto w = operator_fixture("w_swap", q);
  CHECK(ann_operator(w.t, w.op) ==
        ideal(q, 3, {"x0^2 - 1", "x1^2 - 1", "x2^2 - 1"}));
}

TEST_CASE("cokernel matrix of the nilpotent example") {
  auto q = FieldSpec::rational();
  auto b = operator_fixture("nilpotent_pair", q);
  auto box = exponent_box({2, 2});
  REQUIRE(box.size() == 9);
  CHECK(box[1] == Monomial{1, 0});
  CHECK(box[3] == Monomial{0, 1});
  DenseMatrix u = annihilator_matrix(b.t, b.op, box);
  DenseMatrix expect = DenseMatrix::from_ints(q, {{1, 2, 3, 2, 3, 0},
                                                  {2, 3, 0, 0, 0, 0},
                                                  {0, 0, 0, 0, 0, 0},
                                                  {2, 3, 0, 3, 0, 0},
                                                  {3, 0, 0, 0, 0, 0},
                                                  {0, 0, 0, 0, 0, 0},
                                                  {3, 0, 0, 0, 0, 0},
                                                  {0, 0, 0, 0, 0, 0},
                                                  {0, 0, 0, 0, 0, 0}});
  CHECK(u == expect);
}

TEST_CASE("identity operator has the augmentation ideal") {
  auto q = FieldSpec::rational();
  std::mt19937_64 rng(3);
  for (std::vector<std::size_t> dims :
       {std::vector<std::size_t>{3}, {2, 2}, {2, 1, 3}}) {
    Frame fr(q, dims);
    Tensor t = oracle::random_tensor(fr, rng);
    if (t.is_zero())
      continue;
    std::vector<MultiPoly> g;
    for (std::size_t a = 0; a < dims.size(); ++a)
      g.push_back(MultiPoly::variable(q, dims.size(), a) -
                  MultiPoly::constant(q, dims.size(), Scalar::one(q)));
    CHECK(ann_operator(t, TransverseOperator::identity(fr)) ==
          Ideal(q, dims.size(), g));
  }
  // The zero tensor is killed by everything.
  Frame fr(q, {2, 2});
  CHECK(ann_operator(Tensor(fr), TransverseOperator::identity(fr)).is_unit());
}

TEST_CASE("minimal polynomials per axis") {
  auto q = FieldSpec::rational();
  auto a = operator_fixture("idempotent_pair", q);
  CHECK(min_poly_axis(a.t, a.op, 0) == MultiPoly::parse(q, "x0^2 - x0", 2));
  auto b = operator_fixture("nilpotent_pair", q);
  CHECK(min_poly_axis(b.t, b.op, 1) == MultiPoly::parse(q, "x1^3", 2));
  Frame fr(q, {2, 2});
  Tensor t(fr);
  t.at({0, 1}) = Scalar::one(q);
  CHECK(min_poly_axis(t, TransverseOperator::identity(fr), 1) ==
        MultiPoly::parse(q, "x1 - 1", 2));

  std::mt19937_64 rng(9);
  auto f = FieldSpec::prime(101);
  for (int it = 0; it < 20; ++it) {
    Frame fr3(f, {1 + rng() % 3, 1 + rng() % 3, 1 + rng() % 2});
    Tensor s = oracle::random_tensor(fr3, rng, 0.7);
    if (s.is_zero())
      continue;
    auto op = random_op(fr3, rng);
    for (std::size_t ax = 0; ax < 3; ++ax)
      CHECK(min_poly_axis(s, op, ax) == krylov_min_poly(s, op, ax));
  }
}

TEST_CASE("annihilator invariants on random operators") {
  std::mt19937_64 rng(17);
  for (auto f : {FieldSpec::prime(101), FieldSpec::rational()}) {
    for (int it = 0; it < 15; ++it) {
      std::size_t v = 1 + rng() % 2;
      std::vector<std::size_t> dims;
      for (std::size_t a = 0; a <= v; ++a)
        dims.push_back(1 + rng() % (v == 1 ? 3 : 2));
      Frame fr(f, dims);
      Tensor t = oracle::random_tensor(fr, rng, 0.6);
      auto op = random_op(fr, rng);
      Ideal I = ann_operator(t, op);
      for (const auto &g : I.gb())
        CHECK(is_trait(g, t, op));
      // Characteristic polynomial of each block lies in the ideal.
      for (std::size_t a = 0; a < dims.size(); ++a) {
        Vec c = charpoly(op.mat(a));
        MultiPoly p(f, dims.size());
        for (std::size_t k = 0; k < c.size(); ++k) {
          Monomial e(dims.size(), 0);
          e[a] = static_cast<unsigned>(k);
          p.add_term(e, c[k]);
        }
        CHECK(I.contains(p));
      }
      // Larger exponent boxes give the same reduced basis.
      auto big = default_bounds(op);
      for (auto &b : big)
        b += 1;
      CHECK(ann_operator(t, op, big) == I);
    }
  }
}

TEST_CASE("annihilator slice is complete over F_3") {
  // Every polynomial in the exponent box that kills t is in the ideal, and
  // nothing else is: exhaustive over F_3.
  std::mt19937_64 rng(23);
  auto f = FieldSpec::prime(3);
  std::vector<std::vector<std::size_t>> frames = {{2}, {3}, {1, 2}, {2, 1},
                                                  {2, 2}, {1, 1, 1}};
  for (const auto &dims : frames) {
    for (int rep = 0; rep < 2; ++rep) {
      Frame fr(f, dims);
      Tensor t = oracle::random_tensor(fr, rng);
      auto op = random_op(fr, rng, 0.8);
      Ideal I = ann_operator(t, op);
      std::vector<unsigned> bounds(dims.begin(), dims.end());
      auto box = exponent_box(bounds);
      std::vector<Tensor> imgs;
      for (const auto &e : box)
        imgs.push_back(apply_monomial(op, e, t));
      std::vector<std::uint64_t> c(box.size(), 0);
      std::size_t mismatches = 0;
      while (true) {
        Tensor sum(fr);
        MultiPoly p(f, dims.size());
        for (std::size_t r = 0; r < box.size(); ++r)
          if (c[r]) {
            Scalar s = Scalar::from_residue(f, c[r]);
            sum = sum + imgs[r].scaled(s);
            p.add_term(box[r], s);
          }
        if (sum.is_zero() != I.contains(p))
          ++mismatches;
        std::size_t k = 0;
        while (k < c.size() && ++c[k] == 3)
          c[k++] = 0;
        if (k == c.size())
          break;
      }
      CHECK(mismatches == 0);
    }
  }
}

TEST_CASE("annihilators of sets intersect") {
  auto q = FieldSpec::rational();
  auto g = operator_fixture("ghz_swap", q);
  Frame fr = g.t.frame();
  auto id = TransverseOperator::identity(fr);
  Ideal both = ann_set({g.t}, {g.op, id});
  CHECK(both == intersect(ann_operator(g.t, g.op), ann_operator(g.t, id)));
  CHECK(ann_set({g.t}, {g.op}) == ann_operator(g.t, g.op));
  CHECK(ann_set({g.t}, {}).is_unit());
  // Antitone: more operators, smaller ideal.
  CHECK(ann_operator(g.t, g.op).contains(both));
}
