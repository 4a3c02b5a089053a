// Named tensors: unit and counter tensors, GHZ/W states and algebra products.
#pragma once

#include "ttow/operators.hpp"

#include <map>
#include <string>
#include <tuple>

namespace ttow {

TTOW_ERROR(UnsupportedParams);

// Structure constant e_i * e_j = sum_k c e_k, given as (i, j, k, c).
using StructureConstant = std::tuple<std::size_t, std::size_t, std::size_t, long long>;

// Product tensor <t|e_i, e_j> = e_i * e_j of an n-dimensional algebra.
Tensor algebra_tensor(const FieldSpec &f, std::size_t n,
                      const std::vector<StructureConstant> &sc);

// <1| : K^v -> K, the v-fold product.
Tensor unit_tensor(const FieldSpec &f, std::size_t v);
// <t(a, m, pi)|v> = pi(v_a) * prod_{b != a} v_b with V_a = K^m, other axes K.
Tensor counter_tensor(const FieldSpec &f, std::size_t v, std::size_t a,
                      const Vec &pi);

Tensor ghz_tensor(const FieldSpec &f); // <000| + <111|
Tensor w_tensor(const FieldSpec &f);   // <001| + <010| + <100|

// Basis: E_ij (i != j) row-major, then H_k = E_kk - E_{k+1,k+1}.
Tensor sl_bracket_tensor(const FieldSpec &f, std::size_t n);
// K[x]/(x^n) in the basis 1, x, ..., x^{n-1}.
Tensor trunc_poly_tensor(const FieldSpec &f, std::size_t n);
// n x n matrix multiplication, basis E_ij row-major; dims (n^2, n^2, n^2).
Tensor matmul_tensor(const FieldSpec &f, std::size_t n);
// Standard dot product K^n x K^n -> K.
Tensor dotprod_tensor(const FieldSpec &f, std::size_t n);
// C as a 2-dimensional algebra in the basis (1, i).
Tensor complex_tensor(const FieldSpec &f);
// Upper triangular 2 x 2 matrices, basis (E11, E12, E22).
Tensor upper_triangular_tensor(const FieldSpec &f);
// Octonions, basis e_0 = 1, e_1..e_7 with the index triples (i, i+1, i+3).
Tensor octonion_tensor(const FieldSpec &f);
// Exceptional Jordan algebra H_3(O) with X o Y = (XY + YX)/2. Needs char != 2.
Tensor albert_tensor(const FieldSpec &f);

// Dispatch by name: unit, counter, ghz, w, sl, trunc_poly, matmul, dotprod,
// complex, upper_triangular, octonion, albert. Parameters by key ("n", "v").
Tensor fixture_tensor(const std::string &name, const FieldSpec &f,
                      const std::map<std::string, long long> &params = {});

// A tensor together with an operator acting on it.
struct OperatorExample {
  Tensor t;
  TransverseOperator op;
};

// M = [[1,2,3],[2,3,0]] as K^3 -> K^2 with:
//   idempotent_pair: X = diag(0,1), Y = diag(0,0,1)
//   nilpotent_pair:  X = E_12, Y = E_21 + E_32
//   ghz_swap, w_swap: the state with the coordinate swap on every axis
OperatorExample operator_fixture(const std::string &name, const FieldSpec &f);
std::vector<std::string> operator_fixture_names();

} // namespace ttow
