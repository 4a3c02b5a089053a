// Subframes, the singularity complex nabla(S; U), and the operators that
// factor through a subframe.
#pragma once

#include "ttow/complex.hpp"
#include "ttow/operators.hpp"

#include <cstdint>
#include <optional>

namespace ttow {

TTOW_ERROR(InvalidSubframe);

// U_a <= V_a for every axis, with U_0 proper and U_a nonzero for a >= 1.
class Subframe {
public:
  Subframe() = default;
  Subframe(Frame frame, std::vector<std::vector<Vec>> bases);
  // U_a spanned by the listed coordinate vectors e_i.
  static Subframe coordinate(const Frame &frame,
                             const std::vector<std::vector<std::size_t>> &idx);

  const Frame &frame() const { return frame_; }
  const std::vector<Vec> &basis(std::size_t a) const { return bases_.at(a); }
  std::size_t dim(std::size_t a) const { return bases_.at(a).size(); }
  bool contains(std::size_t a, const Vec &x) const;
  // Basis of the annihilator U_0^perp, as row vectors.
  std::vector<Vec> output_perp() const;

private:
  Frame frame_;
  std::vector<std::vector<Vec>> bases_;
};

// A in nabla iff U_A is not perpendicular to the rest:
//   0 in A:   <S|U_{A-0}, V> is not inside U_0
//   0 not in A: <S|U_A, V> != 0
SimplicialComplex nabla_complex(const std::vector<Tensor> &S, const Subframe &U);
Ideal sr_ideal_of_subframe(const std::vector<Tensor> &S, const Subframe &U);

// Spanning set of Omega(U, V), one nonzero axis per element. Input axes use
// u (x) e_j^* with u in U_a. The output axis acts on values, so it is
// realized dually: e_i (x) phi with phi in U_0^perp, killing U_0.
std::vector<TransverseOperator> omega_UV_spanning(const Subframe &U);

// Idempotent with image `image` whose kernel contains `kernel`; the vectors
// together must be independent.
DenseMatrix projection(const FieldSpec &f, std::size_t n,
                       const std::vector<Vec> &image,
                       const std::vector<Vec> &kernel = {});

struct SingularityReport {
  bool holds = false;
  bool forward = false; // SR(nabla) kills every sampled operator
  Ideal ideal;          // generated by the annihilating slice
  Ideal sr;
  SimplicialComplex complex;
  std::size_t operators = 0;
  unsigned degree = 0;
};

// Compares the degree <= D slice of Id(t, Delta) with that of SR(nabla),
// where Delta is the spanning set, scaled idempotents built for each facet
// and `samples` random elements of Omega(U, V). D = 0 means v + 1, which
// reaches every squarefree generator.
SingularityReport verify_singularity_theorem(const Tensor &t, const Subframe &U,
                                             unsigned degree_bound = 0,
                                             std::size_t samples = 8,
                                             std::uint64_t seed = 1);

struct MonomialProbe {
  Monomial monomial;
  // Complex whose Stanley-Reisner ideal is generated by x^supp(monomial).
  SimplicialComplex hint;
};

std::optional<MonomialProbe> monomial_trait_probe(const Tensor &t,
                                                  const TransverseOperator &w);

} // namespace ttow
