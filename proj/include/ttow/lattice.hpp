// Integer lattices in Z^n and partial characters of binomial ideals.
#pragma once

#include "ttow/poly.hpp"

#include <optional>

namespace ttow {

TTOW_ERROR(NotBinomial);
TTOW_ERROR(InconsistentCharacter);
TTOW_ERROR(Overflow);

using IntVec = std::vector<long long>;

// Row Hermite normal form of the row span; zero rows dropped.
std::vector<IntVec> hermite_normal_form(std::vector<IntVec> rows);
// Same lattice, compared through the normal form.
bool same_lattice(const std::vector<IntVec> &a, const std::vector<IntVec> &b);
bool lattice_contains(const std::vector<IntVec> &hnf, const IntVec &x);

// rho on a sublattice L of Z^n; basis in Hermite normal form.
struct PartialCharacter {
  FieldSpec field;
  std::size_t n = 0;
  std::vector<IntVec> basis;
  std::vector<Scalar> values;

  std::size_t rank() const { return basis.size(); }
  bool is_trivial() const;
  // Value at a lattice point; nothing when x is not in L.
  std::optional<Scalar> operator()(const IntVec &x) const;
  // The image of L under the a-th coordinate is kZ; returns k (0 if trivial).
  long long axis_projection(std::size_t a) const;
};

// Lattice spanned by e - f with rho(e - f) = beta / alpha for each generator
// alpha x^e - beta x^f, e the grevlex-larger monomial.
PartialCharacter binomial_character(const FieldSpec &f, std::size_t nvars,
                                    const std::vector<MultiPoly> &gens);

} // namespace ttow
