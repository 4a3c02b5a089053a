#include "ttow/annihilator.hpp"

namespace ttow {

std::vector<Monomial> exponent_box(const std::vector<unsigned> &bounds) {
  std::vector<Monomial> out;
  Monomial e(bounds.size(), 0);
  while (true) {
    out.push_back(e);
    std::size_t a = 0;
    while (a < e.size() && e[a] == bounds[a])
      e[a++] = 0;
    if (a == e.size())
      break;
    ++e[a];
  }
  return out;
}

std::vector<unsigned> default_bounds(const TransverseOperator &op) {
  std::vector<unsigned> b;
  for (std::size_t a = 0; a < op.frame().dims.size(); ++a)
    b.push_back(op.variance()[a] == 0
                    ? 0
                    : static_cast<unsigned>(op.frame().dims[a]));
  return b;
}

DenseMatrix annihilator_matrix(const Tensor &t, const TransverseOperator &op,
                               const std::vector<Monomial> &box) {
  if (t.frame() != op.frame())
    throw DimensionMismatch("tensor and operator frames differ");
  const std::size_t n = t.frame().size();
  DenseMatrix u(t.field(), box.size(), n);
  PowerCache cache(op);
  for (std::size_t r = 0; r < box.size(); ++r) {
    Tensor img = apply_monomial(op, box[r], t, &cache);
    for (std::size_t c = 0; c < n; ++c)
      u(r, c) = img.coeffs()[c];
  }
  return u;
}

Ideal ann_operator(const Tensor &t, const TransverseOperator &op,
                   std::vector<unsigned> bounds, const MonomialOrder &order) {
  if (t.frame() != op.frame())
    throw DimensionMismatch("tensor and operator frames differ");
  auto base = default_bounds(op);
  if (bounds.empty())
    bounds = base;
  if (bounds.size() != base.size())
    throw DimensionMismatch("one exponent bound per axis");
  for (std::size_t a = 0; a < base.size(); ++a) {
    if (op.variance()[a] == 0)
      bounds[a] = 0;
    else if (bounds[a] < base[a])
      throw DimensionMismatch("exponent bound on axis " + std::to_string(a) +
                              " is below its dimension");
  }
  const FieldSpec &f = t.field();
  const std::size_t nv = base.size();
  auto box = exponent_box(bounds);
  auto coker = left_nullspace(annihilator_matrix(t, op, box));
  std::vector<MultiPoly> gens;
  for (const auto &y : coker) {
    MultiPoly p(f, nv);
    for (std::size_t r = 0; r < box.size(); ++r)
      if (!y[r].is_zero())
        p.add_term(box[r], y[r]);
    gens.push_back(std::move(p));
  }
  return Ideal(f, nv, std::move(gens), order);
}

Ideal ann_set(const std::vector<Tensor> &S,
              const std::vector<TransverseOperator> &Delta,
              const MonomialOrder &order) {
  if (S.empty() || Delta.empty()) {
    const Frame &fr = S.empty() ? (Delta.empty() ? Frame() : Delta[0].frame())
                                : S[0].frame();
    std::size_t n = fr.dims.size();
    return Ideal(fr.field, n, {MultiPoly::constant(fr.field, n,
                                                   Scalar::one(fr.field))},
                 order);
  }
  std::optional<Ideal> acc;
  for (const auto &t : S)
    for (const auto &op : Delta) {
      Ideal I = ann_operator(t, op, {}, order);
      acc = acc ? intersect(*acc, I) : I;
      if (acc->is_zero())
        return *acc;
    }
  return *acc;
}

MultiPoly min_poly_axis(const Tensor &t, const TransverseOperator &op,
                        std::size_t a) {
  const std::size_t n = t.frame().dims.size();
  if (a >= n)
    throw InvalidAxis("axis out of range");
  Ideal I = ann_operator(t, op);
  // Move x_a to the last slot and eliminate everything in front of it.
  std::vector<std::size_t> to(n), back(n);
  for (std::size_t b = 0, k = 0; b < n; ++b)
    if (b != a)
      to[b] = k++;
  to[a] = n - 1;
  for (std::size_t b = 0; b < n; ++b)
    back[to[b]] = b;
  std::vector<MultiPoly> moved;
  for (const auto &g : I.gb())
    moved.push_back(g.remap(n, to));
  Ideal E = eliminate_leading(Ideal(t.field(), n, moved), n - 1);
  // A principal ideal of K[x_{n-1}]: its reduced GB has one element.
  if (E.gb().size() != 1)
    throw Error("InternalError", "univariate elimination is not principal");
  return E.gb()[0].remap(n, back);
}

} // namespace ttow
