// Annihilator ideals Id(t, omega) and Id(S, Delta).
#pragma once

#include "ttow/groebner.hpp"
#include "ttow/operators.hpp"

namespace ttow {

// Exponent box prod {0..bound_a}; constant axes always get {0}. Ordered with
// the exponent of x_0 varying fastest.
std::vector<Monomial> exponent_box(const std::vector<unsigned> &bounds);

// Default bounds: d_a on non-constant axes, 0 on constant ones. By
// Cayley-Hamilton every trait reduces into this box modulo the characteristic
// polynomials, which lie in the box themselves.
std::vector<unsigned> default_bounds(const TransverseOperator &op);

// Rows of U: flattened apply_monomial(op, e, t) for e in the box.
DenseMatrix annihilator_matrix(const Tensor &t, const TransverseOperator &op,
                               const std::vector<Monomial> &box);

// Generators are the left kernel of U read as polynomials; result is their
// reduced GB. `bounds` must dominate default_bounds(op).
Ideal ann_operator(const Tensor &t, const TransverseOperator &op,
                   std::vector<unsigned> bounds = {},
                   const MonomialOrder &order = MonomialOrder());

// Intersection over every pair; the unit ideal when S or Delta is empty.
Ideal ann_set(const std::vector<Tensor> &S,
              const std::vector<TransverseOperator> &Delta,
              const MonomialOrder &order = MonomialOrder());

// Monic generator of Id(t, op) ∩ K[x_a], found by elimination.
MultiPoly min_poly_axis(const Tensor &t, const TransverseOperator &op,
                        std::size_t a);

} // namespace ttow
