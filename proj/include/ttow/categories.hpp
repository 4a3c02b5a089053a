// Homotopism categories, composability verdicts for ideals and shuffles of
// variance signatures.
#pragma once

#include "ttow/groebner.hpp"
#include "ttow/lattice.hpp"
#include "ttow/operators.hpp"

#include <optional>

namespace ttow {

TTOW_ERROR(ShapeMismatch);
TTOW_ERROR(NotComposable);
TTOW_ERROR(CertificationFailed);

struct TensorCategory {
  std::size_t valence = 0;
  VarianceSignature sigma;

  TensorCategory() = default;
  explicit TensorCategory(VarianceSignature s);
  bool operator==(const TensorCategory &o) const { return sigma == o.sigma; }
  bool operator!=(const TensorCategory &o) const { return !(*this == o); }
};

// Maps between single tensors s -> t. Covariant axes carry a d_a(t) x d_a(s)
// matrix, contravariant axes a d_a(s) x d_a(t) one, constant axes the
// identity (and need d_a(s) = d_a(t)). The defining identity is
//   <s| tau_B  =  <t| omega_A
// with omega_0 (resp. tau_0) applied to the values when axis 0 is covariant
// (resp. contravariant).
class Homotopism {
public:
  // Nothing when the identity fails; ShapeMismatch on wrong sizes.
  static std::optional<Homotopism> make(const Tensor &s, const Tensor &t,
                                        std::vector<DenseMatrix> maps,
                                        const TensorCategory &cat);
  static Homotopism identity(const Tensor &t, const TensorCategory &cat);

  const Tensor &domain() const { return s_; }
  const Tensor &codomain() const { return t_; }
  const TensorCategory &category() const { return cat_; }
  const std::vector<DenseMatrix> &maps() const { return maps_; }
  const DenseMatrix &map(std::size_t a) const { return maps_.at(a); }

  // Inverse t -> s when every map is invertible.
  std::optional<Homotopism> inverse() const;
  bool operator==(const Homotopism &o) const {
    return cat_ == o.cat_ && s_ == o.s_ && t_ == o.t_ && maps_ == o.maps_;
  }

private:
  Homotopism() = default;
  Tensor s_, t_;
  TensorCategory cat_;
  std::vector<DenseMatrix> maps_;
};

bool verify_homotopism(const Tensor &s, const Tensor &t,
                       const std::vector<DenseMatrix> &maps,
                       const TensorCategory &cat);

// f o g, for g : s -> t and f : t -> r.
Homotopism compose_homotopisms(const Homotopism &f, const Homotopism &g);

struct ComposabilityVerdict {
  enum class Outcome { composable, not_composable, unknown };
  Outcome outcome = Outcome::unknown;
  std::vector<std::size_t> A, B;
  // X^e - X^f with e, f in {0,1}^{v+1}, supp e in A, supp f in B.
  std::vector<std::pair<Monomial, Monomial>> witnesses;
  std::string reason;
  // Category whose endomorphism composites land in Op(P); composable only.
  std::optional<TensorCategory> category;

  std::vector<MultiPoly> witness_polys(const FieldSpec &f) const;
};

std::string outcome_name(ComposabilityVerdict::Outcome o);

ComposabilityVerdict composability_verdict(const FieldSpec &f,
                                           std::size_t nvars,
                                           const std::vector<MultiPoly> &P);
// Field and variable count taken from P, which must be nonempty.
ComposabilityVerdict composability_verdict(const std::vector<MultiPoly> &P);

// sigma^pi(a) = sigma(pi(a)), except that the new axis 0 and the new home of
// the old axis 0 flip sign. Here pi reads new positions to old ones, so this
// is the category of shuffle(t, pi^{-1}).
TensorCategory shuffle_category(const TensorCategory &cat,
                                const std::vector<std::size_t> &pi);

} // namespace ttow
