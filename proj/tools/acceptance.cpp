// Acceptance run: one PASS/FAIL line per criterion, with wall times.
// Exit status is 0 only when every line passes.
#include "oracles.hpp"

#include "ttow/annihilator.hpp"
#include "ttow/categories.hpp"
#include "ttow/fixtures.hpp"
#include "ttow/galois.hpp"
#include "ttow/singularity.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace ttow;

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string &what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

int failures = 0;

void report(const std::string &label, double limit_s,
            const std::function<void(Check &)> &body) {
  Check c;
  auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception &e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_s > 0 && secs > limit_s) {
    std::ostringstream s;
    s << "took " << secs << " s, limit " << limit_s << " s";
    c.expect(false, s.str());
  }
  if (!c.ok)
    ++failures;
  std::printf("%s %s (%.2f s)", c.ok ? "PASS" : "FAIL", label.c_str(), secs);
  for (std::size_t i = 0; i < c.notes.size(); ++i)
    std::printf("%s%s", i ? "; " : ": ", c.notes[i].c_str());
  std::printf("\n");
  std::fflush(stdout);
}

template <class F> double timed(F &&f) {
  auto t0 = Clock::now();
  f();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Ideal ideal(const FieldSpec &f, std::size_t n,
            std::vector<const char *> gens) {
  std::vector<MultiPoly> ps;
  for (auto g : gens)
    ps.push_back(MultiPoly::parse(f, g, n));
  return Ideal(f, n, ps);
}

TransverseOperator random_op(const Frame &fr, const VarianceSignature &v,
                             std::mt19937_64 &rng, double density = 1.0) {
  std::vector<DenseMatrix> ms;
  for (std::size_t a = 0; a < fr.dims.size(); ++a)
    ms.push_back(v[a] == 0 ? DenseMatrix::identity(fr.field, fr.dims[a])
                           : oracle::random_matrix(fr.field, fr.dims[a],
                                                   fr.dims[a], rng, density));
  return TransverseOperator(fr, ms, v);
}

TransverseOperator random_invertible(const Frame &fr, std::mt19937_64 &rng) {
  while (true) {
    auto w = random_op(fr, VarianceSignature::covariant(fr.dims.size()), rng);
    bool ok = true;
    for (const auto &m : w.mats())
      ok = ok && inverse(m).has_value();
    if (ok)
      return w;
  }
}

MultiPoly random_linear(const FieldSpec &f, std::size_t n,
                        std::mt19937_64 &rng) {
  MultiPoly p(f, n);
  for (std::size_t a = 0; a < n; ++a) {
    Monomial e(n, 0);
    e[a] = 1;
    p.add_term(e, oracle::random_scalar(f, rng));
  }
  return p;
}

Frame random_frame(const FieldSpec &f, std::mt19937_64 &rng) {
  std::size_t v = 1 + rng() % 2;
  std::vector<std::size_t> dims;
  for (std::size_t a = 0; a <= v; ++a)
    dims.push_back(1 + rng() % 3);
  return Frame(f, dims);
}

Subframe random_subframe(const Frame &fr, std::mt19937_64 &rng) {
  std::vector<std::vector<Vec>> b(fr.dims.size());
  for (std::size_t a = 0; a < fr.dims.size(); ++a) {
    std::size_t d = fr.dims[a];
    std::size_t k = a == 0 ? rng() % d : 1 + rng() % d;
    RowReducer r(fr.field, d);
    while (b[a].size() < k) {
      Vec x = oracle::random_matrix(fr.field, 1, d, rng, 0.7).row(0);
      if (r.add_row(x))
        b[a].push_back(x);
    }
  }
  return Subframe(fr, b);
}

std::string num(std::size_t x) { return std::to_string(x); }

void annihilators() {
  auto q = FieldSpec::rational();
  struct Case {
    const char *name;
    std::size_t n;
    std::vector<const char *> gb;
  };
  std::vector<Case> cases = {
      {"idempotent_pair", 2, {"x0^2 - x0", "x1^2 - x1", "x0*x1"}},
      {"nilpotent_pair", 2, {"x0^2", "x0*x1 - x1^2", "x1^3"}},
      {"ghz_swap",
       3,
       {"x0^2 - 1", "x1^2 - 1", "x2^2 - 1", "x0*x1 - x2", "x0 - x1*x2",
        "x1 - x0*x2"}},
      {"w_swap", 3, {"x0^2 - 1", "x1^2 - 1", "x2^2 - 1"}}};
  report("1 annihilator fixtures", 0, [&](Check &c) {
    for (const auto &k : cases) {
      auto ex = operator_fixture(k.name, q);
      std::optional<Ideal> I;
      double s = timed([&] { I = ann_operator(ex.t, ex.op); });
      c.expect(*I == ideal(q, k.n, k.gb), std::string(k.name) + " GB differs");
      c.expect(s < 1.0, std::string(k.name) + " over 1 s");
    }
  });
}

void operator_algebras() {
  auto q = FieldSpec::rational();
  report("2 operator-algebra dimensions", 0, [&](Check &c) {
    auto one = [&](const char *what, const Tensor &t, AlgebraKind k,
                   std::size_t want) {
      std::size_t got = 0;
      double s = timed([&] { got = named_algebra({t}, k).space.dim(); });
      c.expect(got == want, std::string(what) + " = " + num(got) +
                                ", expected " + num(want));
      c.expect(s < 1.0, std::string(what) + " over 1 s");
    };
    one("Der(GHZ)", ghz_tensor(q), AlgebraKind::derivations, 4);
    one("Der(W)", w_tensor(q), AlgebraKind::derivations, 5);
    one("Cent(trunc_poly 3)", trunc_poly_tensor(q, 3), AlgebraKind::centroid,
        3);
    one("Cent(GHZ)", ghz_tensor(q), AlgebraKind::centroid, 2);
  });
}

void densors() {
  auto q = FieldSpec::rational();
  struct Case {
    std::string name;
    Tensor t;
    std::size_t want;
  };
  std::vector<Case> cases = {{"GHZ", ghz_tensor(q), 2},
                             {"W", w_tensor(q), 1},
                             {"sl2", sl_bracket_tensor(q, 2), 1},
                             {"sl3", sl_bracket_tensor(q, 3), 2},
                             {"trunc_poly 2", trunc_poly_tensor(q, 2), 2},
                             {"trunc_poly 3", trunc_poly_tensor(q, 3), 3},
                             {"trunc_poly 4", trunc_poly_tensor(q, 4), 4},
                             {"matmul 2", matmul_tensor(q, 2), 1}};
  report("3 densor dimensions", 30, [&](Check &c) {
    for (const auto &k : cases) {
      std::size_t got = densor({k.t}).dim();
      c.expect(got == k.want,
               k.name + " = " + num(got) + ", expected " + num(k.want));
    }
  });
}

void octonion(bool albert) {
  auto f = FieldSpec::prime(101);
  report("4 octonion densor over F101", 300, [&](Check &c) {
    std::size_t got = densor({octonion_tensor(f)}).dim();
    c.expect(got == 1, "dimension " + num(got) + ", expected 1");
  });
  if (!albert)
    return;
  report("4 Albert densor over F101", 0, [&](Check &c) {
    std::size_t got = densor({albert_tensor(f)}).dim();
    c.expect(got == 5, "dimension " + num(got) + ", expected 5");
  });
  report("4 Albert derivations over F101", 0, [&](Check &c) {
    std::size_t got =
        named_algebra({albert_tensor(f)}, AlgebraKind::derivations).space.dim();
    c.expect(got == 79, "dimension " + num(got) + ", expected 79");
  });
}

void singularity() {
  auto f = FieldSpec::prime(101);
  report("5 singularity theorem", 120, [&](Check &c) {
    std::size_t held = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      std::mt19937_64 rng(seed);
      std::size_t v = 1 + rng() % 2;
      std::vector<std::size_t> dims;
      for (std::size_t a = 0; a <= v; ++a)
        dims.push_back((a == 0 ? 2 : 1) + rng() % (a == 0 ? 2 : 3));
      Frame fr(f, dims);
      Tensor t = oracle::random_tensor(fr, rng, 0.35);
      auto U = random_subframe(fr, rng);
      if (verify_singularity_theorem(t, U, 0, 8, seed).holds)
        ++held;
      else
        c.expect(false, "seed " + std::to_string(seed) + " fails");
    }
    c.expect(held == 50, num(held) + "/50 hold");

    auto q = FieldSpec::rational();
    auto cx = complex_tensor(q), mm = matmul_tensor(q, 2),
         ut = upper_triangular_tensor(q);
    auto s1 = nabla_complex(
        {cx}, Subframe::coordinate(cx.frame(), {{0}, {0}, {0}})).str();
    auto s2 = nabla_complex({mm}, Subframe::coordinate(
                                      mm.frame(), {{0, 1}, {0, 1}, {0, 1}}))
                  .str();
    auto s3 = nabla_complex(
        {ut}, Subframe::coordinate(ut.frame(), {{1}, {1}, {1}})).str();
    c.expect(s1 == "{{0,1},{0,2},{1,2}}", "complex numbers gave " + s1);
    c.expect(s2 == "{{0,2},{1,2}}", "matrix algebra gave " + s2);
    c.expect(s3 == "{{0},{1},{2}}", "upper triangular gave " + s3);
  });
}

void verdicts() {
  using O = ComposabilityVerdict::Outcome;
  auto q = FieldSpec::rational();
  auto P = [&](std::vector<const char *> ps, std::size_t n = 3) {
    std::vector<MultiPoly> out;
    for (auto p : ps)
      out.push_back(MultiPoly::parse(q, p, n));
    return out;
  };
  using Ix = std::vector<std::size_t>;
  report("6 composability verdicts", 1, [&](Check &c) {
    auto v = composability_verdict(P({"x0 - x1*x2"}));
    c.expect(v.outcome == O::composable && v.A == Ix{0} && v.B == Ix{1, 2},
             "x0 - x1*x2");
    v = composability_verdict(P({"x1 - x2"}));
    c.expect(v.outcome == O::composable && v.A == Ix{1} && v.B == Ix{2},
             "x1 - x2");
    v = composability_verdict(P({"x0^2 - x1"}, 2));
    c.expect(v.outcome == O::not_composable && v.reason == "axis projection 2Z",
             "x0^2 - x1");
    v = composability_verdict(P({"x0 - 2*x1"}, 2));
    c.expect(v.outcome == O::not_composable &&
                 v.reason == "nontrivial character",
             "x0 - 2*x1");
    v = composability_verdict(P({"x0 - x1*x2", "x0*x1 - x2"}));
    c.expect(v.outcome == O::unknown, "x0 - x1*x2, x0*x1 - x2");
  });
}

void galois_connection() {
  auto f = FieldSpec::prime(7);
  report("7 galois connection", 60, [&](Check &c) {
    std::mt19937_64 rng(7001);
    std::size_t inside = 0;
    for (int it = 0; it < 100; ++it) {
      Frame fr = random_frame(f, rng);
      std::size_t n = fr.dims.size();
      auto v = VarianceSignature::covariant(n);
      std::vector<TransverseOperator> Delta{random_op(fr, v, rng)};
      std::vector<MultiPoly> P{oracle::random_poly(f, n, 2, 2, rng)};
      std::vector<Tensor> S;
      auto T = ten_closure(P, Delta, fr);
      if (it % 2 && T.dim() > 0) {
        Tensor s(fr);
        for (const auto &b : T.basis())
          s = s + b.scaled(oracle::random_scalar(f, rng));
        S.push_back(s);
      } else {
        S.push_back(oracle::random_tensor(fr, rng, 0.5));
      }
      bool in_closure = T.contains(TensorSpace::span(fr, S));
      bool traits = true;
      for (const auto &t : S)
        for (const auto &d : Delta)
          for (const auto &p : P)
            traits = traits && is_trait(p, t, d);
      auto sys = op_space_equations(S, P, v);
      bool in_op = true;
      for (const auto &d : Delta)
        in_op = in_op && sys.verify_point(d);
      Ideal I = ann_set(S, Delta);
      bool in_ideal = true;
      for (const auto &p : P)
        in_ideal = in_ideal && I.contains(p);
      if (!(in_closure == traits && traits == in_op && in_op == in_ideal))
        c.expect(false, "case " + std::to_string(it) + " disagrees");
      inside += traits;
    }
    c.expect(inside > 0 && inside < 100, "only one outcome occurred");
  });
}

void closure_laws() {
  report("8 closure laws", 60, [&](Check &c) {
    auto f = FieldSpec::prime(101);
    std::vector<std::pair<std::string, Tensor>> fx = {
        {"ghz", ghz_tensor(f)},
        {"w", w_tensor(f)},
        {"unit", unit_tensor(f, 2)},
        {"sl2", sl_bracket_tensor(f, 2)},
        {"trunc_poly 3", trunc_poly_tensor(f, 3)},
        {"matmul 2", matmul_tensor(f, 2)},
        {"dotprod 3", dotprod_tensor(f, 3)},
        {"complex", complex_tensor(f)},
        {"upper_triangular", upper_triangular_tensor(f)}};
    for (const auto &[name, t] : fx) {
      auto der = named_algebra({t}, AlgebraKind::derivations);
      c.expect(der.closed, name + ": derivations not Lie closed");
      for (auto k : {AlgebraKind::centroid, AlgebraKind::adjoint}) {
        auto a = named_algebra({t}, k);
        c.expect(a.closed && a.unital && *a.unital,
                 name + ": " + algebra_kind_name(k) + " not a unital algebra");
      }
      for (auto [a, b] : {std::pair<std::size_t, std::size_t>{0, 1}, {0, 2}}) {
        auto nu = named_algebra({t}, AlgebraKind::nucleus, a, b);
        c.expect(nu.closed && nu.unital && *nu.unital,
                 name + ": nucleus not a unital algebra");
      }
    }

    std::mt19937_64 rng(808);
    for (int it = 0; it < 20; ++it) {
      Frame fr = random_frame(f, rng);
      std::size_t n = fr.dims.size();
      std::vector<Tensor> S{oracle::random_tensor(fr, rng, 0.5)};
      std::vector<Scalar> tau;
      for (std::size_t a = 0; a < n; ++a) {
        Scalar s = oracle::random_scalar(f, rng);
        while (s.is_zero())
          s = oracle::random_scalar(f, rng);
        tau.push_back(s);
      }
      c.expect(torus_relation_holds(S, {random_linear(f, n, rng)},
                                    VarianceSignature::covariant(n), tau),
               "torus case " + std::to_string(it));
    }
    for (int it = 0; it < 20; ++it) {
      Frame fr = random_frame(f, rng);
      std::size_t n = fr.dims.size();
      auto v = VarianceSignature::covariant(n);
      Tensor t = oracle::random_tensor(fr, rng, 0.4);
      auto p = random_linear(f, n, rng);
      auto w = random_invertible(fr, rng);
      auto D = op_space_linear({t}, {p}, v);
      auto Dw = op_space_linear({isotope(t, w)}, {p}, v);
      OperatorSpace conj = D;
      for (auto &b : conj.basis)
        b = conjugate(b, w);
      c.expect(Dw.same_span(conj), "conjugation case " + std::to_string(it));
    }
  });
}

// Enumerates every coefficient vector on the exponent box. The annihilating
// ones must all lie in the ideal and there must be exactly 5^k of them, k the
// dimension of the ideal's slice on the box.
void annihilator_oracle() {
  auto f = FieldSpec::prime(5);
  std::vector<std::vector<std::size_t>> frames = {
      {2}, {3}, {1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 2}, {1, 1, 1}};
  report("9 annihilator slice oracle over F5", 120, [&](Check &c) {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      std::mt19937_64 rng(seed);
      const auto &dims = frames[seed % frames.size()];
      Frame fr(f, dims);
      Tensor t = oracle::random_tensor(fr, rng);
      auto op = random_op(fr, VarianceSignature::covariant(dims.size()), rng,
                          0.8);
      Ideal I = ann_operator(t, op);
      std::vector<unsigned> bounds(dims.begin(), dims.end());
      auto box = exponent_box(bounds);

      std::vector<std::vector<std::uint64_t>> imgs;
      for (const auto &e : box) {
        std::vector<std::uint64_t> r;
        for (const auto &x : apply_monomial(op, e, t).coeffs())
          r.push_back(x.residue());
        imgs.push_back(std::move(r));
      }
      std::vector<std::uint64_t> sum(fr.size(), 0), coef(box.size(), 0);
      std::size_t killers = 0;
      bool all_in = true;
      while (true) {
        bool zero = true;
        for (auto x : sum)
          zero = zero && x == 0;
        if (zero) {
          ++killers;
          MultiPoly p(f, dims.size());
          for (std::size_t r = 0; r < box.size(); ++r)
            if (coef[r])
              p.add_term(box[r], Scalar::from_residue(f, coef[r]));
          all_in = all_in && I.contains(p);
        }
        // Odometer step; over F5 a wrap 4 -> 0 is still +1.
        std::size_t k = 0;
        for (; k < box.size(); ++k) {
          for (std::size_t i = 0; i < sum.size(); ++i)
            sum[i] = (sum[i] + imgs[k][i]) % 5;
          if (++coef[k] < 5)
            break;
          coef[k] = 0;
        }
        if (k == box.size())
          break;
      }

      std::vector<Monomial> support;
      std::vector<Vec> rows;
      for (const auto &e : box) {
        MultiPoly m(f, dims.size());
        m.add_term(e, Scalar::one(f));
        auto r = normal_form(m, I);
        Vec row;
        for (const auto &[mono, coeff] : r.terms()) {
          auto it = std::find(support.begin(), support.end(), mono);
          if (it == support.end()) {
            support.push_back(mono);
            for (auto &old : rows)
              old.push_back(Scalar::zero(f));
            it = support.end() - 1;
          }
          row.resize(support.size(), Scalar::zero(f));
          row[it - support.begin()] = coeff;
        }
        row.resize(support.size(), Scalar::zero(f));
        rows.push_back(std::move(row));
      }
      // Rank of the normal-form map box -> box / (I on the box).
      std::size_t rank = 0;
      if (!support.empty()) {
        RowReducer rr(f, support.size());
        for (const auto &r : rows)
          rr.add_row(r);
        rank = rr.rank();
      }
      std::size_t slice = box.size() - rank, expect = 1;
      for (std::size_t i = 0; i < slice; ++i)
        expect *= 5;
      c.expect(all_in, "seed " + std::to_string(seed) +
                           ": an annihilator is outside the ideal");
      c.expect(killers == expect, "seed " + std::to_string(seed) + ": " +
                                      num(killers) + " annihilators, slice " +
                                      num(expect));
    }
  });
}

void smoke() {
  auto f = FieldSpec::prime(101);
  report("smoke densor of a random 8x8x8 tensor over F101", 60, [&](Check &c) {
    std::mt19937_64 rng(8);
    Frame fr(f, {8, 8, 8});
    Tensor t = oracle::random_tensor(fr, rng);
    auto D = densor({t});
    c.expect(D.contains(TensorSpace::span(fr, {t})), "densor misses t");
  });
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app("Acceptance checks for the ttow library.");
  bool albert = false;
  std::vector<std::string> only;
  app.add_flag("--with-albert", albert,
               "Also run the 27-dimensional Jordan algebra (slow).");
  app.add_option("--only", only,
                 "Run only these criteria (1..9, smoke).")
      ->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  auto want = [&](const std::string &k) {
    return only.empty() || std::find(only.begin(), only.end(), k) != only.end();
  };
  std::vector<std::pair<std::string, std::function<void()>>> steps = {
      {"1", annihilators},       {"2", operator_algebras},
      {"3", densors},            {"4", [&] { octonion(albert); }},
      {"5", singularity},        {"6", verdicts},
      {"7", galois_connection},  {"8", closure_laws},
      {"9", annihilator_oracle}, {"smoke", smoke}};
  for (const auto &[k, fn] : steps)
    if (want(k))
      fn();
  return failures == 0 ? 0 : 1;
}
