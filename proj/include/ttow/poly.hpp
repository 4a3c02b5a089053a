// Multivariate polynomials in x_0..x_{n-1} and monomial orders.
#pragma once

#include "ttow/field.hpp"

#include <map>
#include <string>
#include <vector>

namespace ttow {

TTOW_ERROR(OrderMismatch);

using Monomial = std::vector<unsigned>;

unsigned total_degree(const Monomial &m);
bool divides(const Monomial &a, const Monomial &b); // a | b
Monomial lcm(const Monomial &a, const Monomial &b);
Monomial mono_mul(const Monomial &a, const Monomial &b);
Monomial mono_div(const Monomial &b, const Monomial &a); // requires a | b
bool coprime(const Monomial &a, const Monomial &b);

class MonomialOrder {
public:
  enum class Kind { grevlex, lex, block };

  MonomialOrder() = default;
  static MonomialOrder grevlex() { return MonomialOrder(); }
  static MonomialOrder lex();
  // The first k variables are eliminated (grevlex among themselves); the
  // rest are compared by `inner`, which must be grevlex or lex.
  static MonomialOrder block(std::size_t k, const MonomialOrder &inner);
  static MonomialOrder parse(const std::string &s);

  // <0, 0, >0 as a < b, a == b, a > b.
  int compare(const Monomial &a, const Monomial &b) const;
  bool less(const Monomial &a, const Monomial &b) const {
    return compare(a, b) < 0;
  }
  Kind kind() const { return kind_; }
  std::size_t block_size() const { return k_; }
  Kind inner() const { return inner_; }
  // The order on the variables after the first block.
  MonomialOrder tail() const;
  std::string str() const;
  bool operator==(const MonomialOrder &o) const {
    return kind_ == o.kind_ && k_ == o.k_ && inner_ == o.inner_;
  }
  bool operator!=(const MonomialOrder &o) const { return !(*this == o); }

private:
  Kind kind_ = Kind::grevlex;
  std::size_t k_ = 0;
  Kind inner_ = Kind::grevlex;
};

class MultiPoly {
public:
  using Terms = std::map<Monomial, Scalar>;

  MultiPoly() = default;
  MultiPoly(const FieldSpec &f, std::size_t nvars) : field_(f), n_(nvars) {}
  static MultiPoly constant(const FieldSpec &f, std::size_t nvars,
                            const Scalar &c);
  static MultiPoly variable(const FieldSpec &f, std::size_t nvars,
                            std::size_t i);
  static MultiPoly term(const FieldSpec &f, const Monomial &m, const Scalar &c);
  // "x0^2 - 2*x1*x2 + 3/4"; nvars = 0 infers from the largest index.
  static MultiPoly parse(const FieldSpec &f, const std::string &text,
                         std::size_t nvars = 0);

  const FieldSpec &field() const { return field_; }
  std::size_t nvars() const { return n_; }
  const Terms &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coeff(const Monomial &m) const;
  void add_term(const Monomial &m, const Scalar &c);

  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  bool is_linear_homogeneous() const;
  bool is_monomial() const { return terms_.size() == 1; }

  // Leading monomial/coefficient under the order; requires nonzero.
  const Monomial &lead(const MonomialOrder &o) const;
  const Scalar &lead_coeff(const MonomialOrder &o) const;
  MultiPoly monic(const MonomialOrder &o) const;

  MultiPoly operator+(const MultiPoly &b) const;
  MultiPoly operator-(const MultiPoly &b) const;
  MultiPoly operator*(const MultiPoly &b) const;
  MultiPoly operator-() const;
  MultiPoly scaled(const Scalar &s) const;
  MultiPoly mul_term(const Monomial &m, const Scalar &c) const;
  MultiPoly pow(unsigned k) const;
  Scalar eval(const std::vector<Scalar> &x) const;

  // Embed into more variables: variable i goes to position map[i].
  MultiPoly remap(std::size_t nvars, const std::vector<std::size_t> &map) const;

  // Terms printed in decreasing order under `o`.
  std::string str(const MonomialOrder &o = MonomialOrder()) const;

  bool operator==(const MultiPoly &b) const {
    return n_ == b.n_ && field_ == b.field_ && terms_ == b.terms_;
  }
  bool operator!=(const MultiPoly &b) const { return !(*this == b); }

private:
  void check(const MultiPoly &b) const;

  FieldSpec field_;
  std::size_t n_ = 0;
  Terms terms_;
};

std::ostream &operator<<(std::ostream &os, const MultiPoly &p);

} // namespace ttow
