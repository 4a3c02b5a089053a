#include "ttow/fixtures.hpp"

#include <array>

namespace ttow {

Tensor algebra_tensor(const FieldSpec &f, std::size_t n,
                      const std::vector<StructureConstant> &sc) {
  Tensor t(Frame(f, {n, n, n}));
  for (const auto &[i, j, k, c] : sc)
    t.at({k, i, j}) += Scalar::from_int(f, c);
  return t;
}

Tensor unit_tensor(const FieldSpec &f, std::size_t v) {
  Tensor t(Frame(f, std::vector<std::size_t>(v + 1, 1)));
  t.coeffs()[0] = Scalar::one(f);
  return t;
}

Tensor counter_tensor(const FieldSpec &f, std::size_t v, std::size_t a,
                      const Vec &pi) {
  if (a > v)
    throw UnsupportedParams("counter tensor axis beyond the valence");
  if (pi.empty())
    throw UnsupportedParams("counter tensor needs m >= 1");
  std::vector<std::size_t> dims(v + 1, 1);
  dims[a] = pi.size();
  Tensor t(Frame(f, dims));
  if (a == 0) {
    // pi read as a vector in V_0: <t|v> = prod v_b times pi.
    for (std::size_t i = 0; i < pi.size(); ++i)
      t.coeffs()[i] = pi[i];
  } else {
    for (std::size_t i = 0; i < pi.size(); ++i) {
      Index idx(v + 1, 0);
      idx[a] = i;
      t.at(idx) = pi[i];
    }
  }
  return t;
}

Tensor ghz_tensor(const FieldSpec &f) {
  Tensor t(Frame(f, {2, 2, 2}));
  t.at({0, 0, 0}) = Scalar::one(f);
  t.at({1, 1, 1}) = Scalar::one(f);
  return t;
}

Tensor w_tensor(const FieldSpec &f) {
  Tensor t(Frame(f, {2, 2, 2}));
  t.at({0, 0, 1}) = Scalar::one(f);
  t.at({0, 1, 0}) = Scalar::one(f);
  t.at({1, 0, 0}) = Scalar::one(f);
  return t;
}

namespace {

using IntMat = std::vector<std::vector<long long>>;

IntMat int_mul(const IntMat &a, const IntMat &b) {
  std::size_t n = a.size();
  IntMat c(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        c[i][j] += a[i][k] * b[k][j];
  return c;
}

} // namespace

Tensor sl_bracket_tensor(const FieldSpec &f, std::size_t n) {
  if (n < 2)
    throw UnsupportedParams("sl_n needs n >= 2");
  if (f.characteristic() == 2 || f.characteristic() == 3)
    throw UnsupportedParams("sl_n bracket fixtures need char != 2, 3");
  std::vector<IntMat> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) {
        IntMat m(n, std::vector<long long>(n, 0));
        m[i][j] = 1;
        basis.push_back(m);
      }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    IntMat m(n, std::vector<long long>(n, 0));
    m[k][k] = 1;
    m[k + 1][k + 1] = -1;
    basis.push_back(m);
  }
  std::size_t d = basis.size();
  auto coords = [&](const IntMat &z) {
    std::vector<long long> c;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j)
          c.push_back(z[i][j]);
    long long run = 0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      run += z[k][k];
      c.push_back(run);
    }
    return c;
  };
  std::vector<StructureConstant> sc;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      IntMat xy = int_mul(basis[i], basis[j]), yx = int_mul(basis[j], basis[i]);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
          xy[r][s] -= yx[r][s];
      auto c = coords(xy);
      for (std::size_t k = 0; k < d; ++k)
        if (c[k])
          sc.emplace_back(i, j, k, c[k]);
    }
  return algebra_tensor(f, d, sc);
}

Tensor trunc_poly_tensor(const FieldSpec &f, std::size_t n) {
  if (n < 1)
    throw UnsupportedParams("K[x]/(x^n) needs n >= 1");
  std::vector<StructureConstant> sc;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j)
      sc.emplace_back(i, j, i + j, 1);
  return algebra_tensor(f, n, sc);
}

Tensor matmul_tensor(const FieldSpec &f, std::size_t n) {
  if (n < 1)
    throw UnsupportedParams("matrix multiplication needs n >= 1");
  std::vector<StructureConstant> sc;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        sc.emplace_back(i * n + j, j * n + l, i * n + l, 1);
  return algebra_tensor(f, n * n, sc);
}

Tensor dotprod_tensor(const FieldSpec &f, std::size_t n) {
  if (n < 1)
    throw UnsupportedParams("dot product needs n >= 1");
  Tensor t(Frame(f, {1, n, n}));
  for (std::size_t i = 0; i < n; ++i)
    t.at({0, i, i}) = Scalar::one(f);
  return t;
}

Tensor complex_tensor(const FieldSpec &f) {
  return algebra_tensor(f, 2, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1},
                               {1, 1, 0, -1}});
}

Tensor upper_triangular_tensor(const FieldSpec &f) {
  // E11 = 0, E12 = 1, E22 = 2
  return algebra_tensor(f, 3, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 2, 1, 1},
                               {2, 2, 2, 1}});
}

namespace {

// Signed product of octonion units: e_i e_j = sign * e_k.
struct OctMul {
  std::array<std::array<int, 8>, 8> idx{};
  std::array<std::array<int, 8>, 8> sign{};
  OctMul() {
    for (int i = 0; i < 8; ++i) {
      idx[0][i] = idx[i][0] = i;
      sign[0][i] = sign[i][0] = 1;
    }
    for (int i = 1; i < 8; ++i) {
      idx[i][i] = 0;
      sign[i][i] = -1;
    }
    for (int i = 0; i < 7; ++i) {
      int a = i + 1, b = (i + 1) % 7 + 1, c = (i + 3) % 7 + 1;
      int cyc[3] = {a, b, c};
      for (int r = 0; r < 3; ++r) {
        int x = cyc[r], y = cyc[(r + 1) % 3], z = cyc[(r + 2) % 3];
        idx[x][y] = z;
        sign[x][y] = 1;
        idx[y][x] = z;
        sign[y][x] = -1;
      }
    }
  }
};

const OctMul &oct() {
  static const OctMul m;
  return m;
}

using Oct = std::array<long long, 8>;

Oct oct_mul(const Oct &x, const Oct &y) {
  Oct z{};
  for (int i = 0; i < 8; ++i)
    if (x[i])
      for (int j = 0; j < 8; ++j)
        if (y[j])
          z[oct().idx[i][j]] += oct().sign[i][j] * x[i] * y[j];
  return z;
}

Oct oct_conj(Oct x) {
  for (int i = 1; i < 8; ++i)
    x[i] = -x[i];
  return x;
}

} // namespace

Tensor octonion_tensor(const FieldSpec &f) {
  std::vector<StructureConstant> sc;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      sc.emplace_back(i, j, static_cast<std::size_t>(oct().idx[i][j]),
                      oct().sign[i][j]);
  return algebra_tensor(f, 8, sc);
}

Tensor albert_tensor(const FieldSpec &f) {
  if (f.characteristic() == 2)
    throw UnsupportedParams("the Jordan product needs char != 2");
  using OMat = std::array<std::array<Oct, 3>, 3>;
  const std::array<std::pair<int, int>, 3> offd{{{0, 1}, {0, 2}, {1, 2}}};
  // Basis: E11, E22, E33, then F_ij(e_k) = e_k E_ij + conj(e_k) E_ji.
  std::vector<OMat> basis;
  for (int i = 0; i < 3; ++i) {
    OMat m{};
    m[i][i][0] = 1;
    basis.push_back(m);
  }
  for (auto [i, j] : offd)
    for (int k = 0; k < 8; ++k) {
      OMat m{};
      Oct e{};
      e[k] = 1;
      m[i][j] = e;
      m[j][i] = oct_conj(e);
      basis.push_back(m);
    }
  auto mat_mul = [](const OMat &a, const OMat &b) {
    OMat c{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          Oct p = oct_mul(a[i][k], b[k][j]);
          for (int r = 0; r < 8; ++r)
            c[i][j][r] += p[r];
        }
    return c;
  };
  Tensor t(Frame(f, {27, 27, 27}));
  Scalar half = Scalar::from_int(f, 2).inv();
  for (std::size_t x = 0; x < 27; ++x)
    for (std::size_t y = 0; y < 27; ++y) {
      OMat a = mat_mul(basis[x], basis[y]), b = mat_mul(basis[y], basis[x]);
      // 2 (X o Y) = XY + YX, read off in the basis.
      std::vector<long long> c(27, 0);
      for (int i = 0; i < 3; ++i)
        c[static_cast<std::size_t>(i)] = a[i][i][0] + b[i][i][0];
      for (std::size_t p = 0; p < 3; ++p) {
        auto [i, j] = offd[p];
        for (int k = 0; k < 8; ++k)
          c[3 + 8 * p + static_cast<std::size_t>(k)] = a[i][j][k] + b[i][j][k];
      }
      for (std::size_t k = 0; k < 27; ++k)
        if (c[k])
          t.at({k, x, y}) = Scalar::from_int(f, c[k]) * half;
    }
  return t;
}

Tensor fixture_tensor(const std::string &name, const FieldSpec &f,
                      const std::map<std::string, long long> &params) {
  auto get = [&](const std::string &k, long long dflt) {
    auto it = params.find(k);
    long long v = it == params.end() ? dflt : it->second;
    if (v < 1 || v > 64)
      throw UnsupportedParams("parameter " + k + " out of range");
    return static_cast<std::size_t>(v);
  };
  if (name == "unit")
    return unit_tensor(f, get("v", 2));
  if (name == "ghz")
    return ghz_tensor(f);
  if (name == "w")
    return w_tensor(f);
  if (name == "sl")
    return sl_bracket_tensor(f, get("n", 2));
  if (name == "trunc_poly")
    return trunc_poly_tensor(f, get("n", 2));
  if (name == "matmul")
    return matmul_tensor(f, get("n", 2));
  if (name == "dotprod")
    return dotprod_tensor(f, get("n", 3));
  if (name == "complex")
    return complex_tensor(f);
  if (name == "upper_triangular")
    return upper_triangular_tensor(f);
  if (name == "octonion")
    return octonion_tensor(f);
  if (name == "albert")
    return albert_tensor(f);
  throw UnsupportedParams("unknown fixture: " + name);
}

std::vector<std::string> operator_fixture_names() {
  return {"idempotent_pair", "nilpotent_pair", "ghz_swap", "w_swap"};
}

OperatorExample operator_fixture(const std::string &name, const FieldSpec &f) {
  if (name == "idempotent_pair" || name == "nilpotent_pair") {
    Frame fr(f, {2, 3});
    Tensor m(fr);
    const long long vals[2][3] = {{1, 2, 3}, {2, 3, 0}};
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        m.at({i, j}) = Scalar::from_int(f, vals[i][j]);
    std::vector<DenseMatrix> ops;
    if (name == "idempotent_pair") {
      ops.push_back(DenseMatrix::unit(f, 2, 1, 1));
      ops.push_back(DenseMatrix::unit(f, 3, 2, 2));
    } else {
      ops.push_back(DenseMatrix::unit(f, 2, 0, 1));
      ops.push_back(DenseMatrix::unit(f, 3, 1, 0) + DenseMatrix::unit(f, 3, 2, 1));
    }
    return {m, TransverseOperator(fr, std::move(ops))};
  }
  if (name == "ghz_swap" || name == "w_swap") {
    Tensor t = name == "ghz_swap" ? ghz_tensor(f) : w_tensor(f);
    DenseMatrix s = DenseMatrix::from_ints(f, {{0, 1}, {1, 0}});
    return {t, TransverseOperator(t.frame(), {s, s, s})};
  }
  throw UnsupportedParams("unknown operator fixture: " + name);
}

} // namespace ttow
