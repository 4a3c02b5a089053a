// Ideals as reduced Groebner bases: Buchberger, normal forms, elimination,
// intersection, saturation and monomial detection.
#pragma once

#include "ttow/poly.hpp"

#include <optional>

namespace ttow {

class Ideal {
public:
  Ideal() = default;
  // Runs Buchberger on the generators.
  Ideal(const FieldSpec &f, std::size_t nvars, std::vector<MultiPoly> gens,
        MonomialOrder order = MonomialOrder());

  const FieldSpec &field() const { return field_; }
  std::size_t nvars() const { return n_; }
  const MonomialOrder &order() const { return order_; }
  const std::vector<MultiPoly> &gens() const { return gens_; }
  const std::vector<MultiPoly> &gb() const { return gb_; }

  bool is_zero() const { return gb_.empty(); }
  bool is_unit() const;
  bool contains(const MultiPoly &p) const;
  bool contains(const Ideal &j) const; // j is a subset of *this
  bool all_monomial() const;

  std::string str() const;
  // Same reduced GB under the same order.
  bool operator==(const Ideal &o) const {
    return n_ == o.n_ && field_ == o.field_ && order_ == o.order_ &&
           gb_ == o.gb_;
  }
  bool operator!=(const Ideal &o) const { return !(*this == o); }

private:
  FieldSpec field_;
  std::size_t n_ = 0;
  MonomialOrder order_;
  std::vector<MultiPoly> gens_, gb_;
};

// Reduced GB, sorted by total degree of the leads then by decreasing lead.
std::vector<MultiPoly> buchberger(const FieldSpec &f, std::size_t nvars,
                                  const std::vector<MultiPoly> &gens,
                                  const MonomialOrder &order);
// Remainder of full multivariate division by `basis`.
MultiPoly reduce(const MultiPoly &p, const std::vector<MultiPoly> &basis,
                 const MonomialOrder &order);
MultiPoly normal_form(const MultiPoly &p, const Ideal &I);
MultiPoly normal_form(const MultiPoly &p, const Ideal &I,
                      const MonomialOrder &order); // throws OrderMismatch
MultiPoly s_polynomial(const MultiPoly &f, const MultiPoly &g,
                       const MonomialOrder &order);

// I ∩ K[x_k .. x_{n-1}] expressed back in n variables (variables < k absent).
Ideal eliminate_leading(const Ideal &I, std::size_t k);
Ideal intersect(const Ideal &I, const Ideal &J);
// (I : x_a^inf) for each a in vars in turn; empty vars means all variables.
Ideal saturate(const Ideal &I, std::vector<std::size_t> vars = {});
// Some monomial in I, or nothing. `bounds` limits the first search box;
// when I contains a monomial outside it, a power of x_0...x_v is returned.
std::optional<Monomial>
contains_monomial(const Ideal &I, const std::vector<unsigned> &bounds = {});

// Monomials of total degree <= d in n variables, graded then lex-descending.
std::vector<Monomial> monomials_up_to(std::size_t n, unsigned d);

} // namespace ttow
