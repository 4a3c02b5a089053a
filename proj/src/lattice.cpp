#include "ttow/lattice.hpp"

#include <cstdlib>
#include <numeric>

namespace ttow {

namespace {

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Overflow("lattice entry exceeds 64 bits");
  return r;
}

long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r))
    throw Overflow("lattice entry exceeds 64 bits");
  return r;
}

// Rows with an optional multiplicative tag carried along every row operation.
struct Tagged {
  std::vector<IntVec> rows;
  std::vector<Scalar> vals; // empty when untracked

  bool tracked() const { return !vals.empty(); }
  void axpy(std::size_t i, std::size_t j, long long q) { // r_i -= q r_j
    if (q == 0)
      return;
    for (std::size_t c = 0; c < rows[i].size(); ++c)
      rows[i][c] = checked_sub(rows[i][c], checked_mul(q, rows[j][c]));
    if (tracked())
      vals[i] *= vals[j].pow(-q);
  }
  void negate(std::size_t i) {
    for (auto &x : rows[i])
      x = -x;
    if (tracked())
      vals[i] = vals[i].inv();
  }
  void swap(std::size_t i, std::size_t j) {
    std::swap(rows[i], rows[j]);
    if (tracked())
      std::swap(vals[i], vals[j]);
  }
};

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

// Brings rows to Hermite form in place; zero rows end up at the bottom.
std::size_t hnf_in_place(Tagged &t, std::size_t ncols) {
  std::size_t piv = 0;
  for (std::size_t c = 0; c < ncols && piv < t.rows.size(); ++c) {
    while (true) {
      std::size_t best = t.rows.size();
      for (std::size_t i = piv; i < t.rows.size(); ++i)
        if (t.rows[i][c] != 0 &&
            (best == t.rows.size() ||
             std::llabs(t.rows[i][c]) < std::llabs(t.rows[best][c])))
          best = i;
      if (best == t.rows.size())
        break;
      t.swap(piv, best);
      bool done = true;
      for (std::size_t i = piv + 1; i < t.rows.size(); ++i) {
        if (t.rows[i][c] == 0)
          continue;
        t.axpy(i, piv, t.rows[i][c] / t.rows[piv][c]);
        if (t.rows[i][c] != 0)
          done = false;
      }
      if (done)
        break;
    }
    if (t.rows[piv][c] == 0)
      continue;
    if (t.rows[piv][c] < 0)
      t.negate(piv);
    for (std::size_t i = 0; i < piv; ++i)
      t.axpy(i, piv, floor_div(t.rows[i][c], t.rows[piv][c]));
    ++piv;
  }
  return piv;
}

bool is_zero_row(const IntVec &r) {
  for (auto x : r)
    if (x)
      return false;
  return true;
}

} // namespace

std::vector<IntVec> hermite_normal_form(std::vector<IntVec> rows) {
  if (rows.empty())
    return {};
  std::size_t n = rows[0].size();
  Tagged t{std::move(rows), {}};
  std::size_t r = hnf_in_place(t, n);
  t.rows.resize(r);
  return t.rows;
}

bool same_lattice(const std::vector<IntVec> &a, const std::vector<IntVec> &b) {
  return hermite_normal_form(a) == hermite_normal_form(b);
}

bool lattice_contains(const std::vector<IntVec> &hnf, const IntVec &x) {
  IntVec r = x;
  for (const auto &row : hnf) {
    std::size_t c = 0;
    while (row[c] == 0)
      ++c;
    if (r[c] % row[c] != 0)
      return false;
    long long q = r[c] / row[c];
    for (std::size_t j = 0; j < r.size(); ++j)
      r[j] = checked_sub(r[j], checked_mul(q, row[j]));
  }
  return is_zero_row(r);
}

bool PartialCharacter::is_trivial() const {
  for (const auto &v : values)
    if (!v.is_one())
      return false;
  return true;
}

std::optional<Scalar> PartialCharacter::operator()(const IntVec &x) const {
  if (x.size() != n)
    throw DimensionMismatch("lattice point of the wrong length");
  IntVec r = x;
  Scalar val = Scalar::one(field);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto &row = basis[i];
    std::size_t c = 0;
    while (row[c] == 0)
      ++c;
    if (r[c] % row[c] != 0)
      return std::nullopt;
    long long q = r[c] / row[c];
    for (std::size_t j = 0; j < n; ++j)
      r[j] = checked_sub(r[j], checked_mul(q, row[j]));
    val *= values[i].pow(q);
  }
  if (!is_zero_row(r))
    return std::nullopt;
  return val;
}

long long PartialCharacter::axis_projection(std::size_t a) const {
  if (a >= n)
    throw DimensionMismatch("axis out of range");
  long long g = 0;
  for (const auto &row : basis)
    g = std::gcd(g, row[a]);
  return g;
}

PartialCharacter binomial_character(const FieldSpec &f, std::size_t nvars,
                                    const std::vector<MultiPoly> &gens) {
  auto order = MonomialOrder::grevlex();
  Tagged t;
  for (const auto &g : gens) {
    if (g.nvars() != nvars)
      throw DimensionMismatch("binomial in another polynomial ring");
    if (g.size() != 2)
      throw NotBinomial("not a binomial: " + g.str());
    auto lo = g.terms().begin(), hi = std::next(lo);
    if (order.less(hi->first, lo->first))
      std::swap(lo, hi);
    IntVec d(nvars);
    for (std::size_t a = 0; a < nvars; ++a)
      d[a] = static_cast<long long>(hi->first[a]) -
             static_cast<long long>(lo->first[a]);
    t.rows.push_back(std::move(d));
    // alpha x^e + gamma x^f = alpha (x^e - (-gamma/alpha) x^f)
    t.vals.push_back(-(lo->second / hi->second));
  }
  PartialCharacter pc;
  pc.field = f;
  pc.n = nvars;
  if (t.rows.empty())
    return pc;
  std::size_t r = hnf_in_place(t, nvars);
  for (std::size_t i = r; i < t.rows.size(); ++i)
    if (!t.vals[i].is_one())
      throw InconsistentCharacter("relations force " + t.vals[i].str() +
                                  " = 1");
  t.rows.resize(r);
  t.vals.resize(r);
  pc.basis = std::move(t.rows);
  pc.values = std::move(t.vals);
  return pc;
}

} // namespace ttow
