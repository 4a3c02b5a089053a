// JSON encodings of the library types. Everything written here can be read
// back by the matching reader.
#pragma once

#include "ttow/categories.hpp"
#include "ttow/galois.hpp"
#include "ttow/singularity.hpp"

#include <json.hpp>

namespace ttow {

TTOW_ERROR(SchemaError);

using Json = nlohmann::ordered_json;

inline constexpr const char *kSchema = "ttow/1";

Json to_json(const FieldSpec &f);
FieldSpec field_from_json(const Json &j);
// "rational" or "prime:P".
FieldSpec field_from_flag(const std::string &s);

// Integers as numbers, other rationals as "num/den".
Json to_json(const Scalar &s);
Scalar scalar_from_json(const FieldSpec &f, const Json &j);

Json to_json(const DenseMatrix &m);
DenseMatrix matrix_from_json(const FieldSpec &f, const Json &j);

// {"field", "dims", "entries": [{"idx", "val"}]}; readers also take "dense".
Json to_json(const Tensor &t);
Tensor tensor_from_json(const Json &j);

// {"field", "dims", "variance", "mats"}.
Json to_json(const TransverseOperator &op);
TransverseOperator operator_from_json(const Json &j);

Json to_json(const MultiPoly &p, const MonomialOrder &o = MonomialOrder());
MultiPoly poly_from_json(const FieldSpec &f, std::size_t nvars, const Json &j);

// {"field", "nvars", "order", "gens"}; generators are the reduced GB.
Json to_json(const Ideal &I);
Ideal ideal_from_json(const Json &j);

Json to_json(const SimplicialComplex &c);

// {"axes": [{"axis": a, "basis": [[...], ...]}]}; unlisted axes are rejected.
Json to_json(const Subframe &U);
Subframe subframe_from_json(const Frame &frame, const Json &j);

Json to_json(const ComposabilityVerdict &v);
Json to_json(const TensorCategory &c);

} // namespace ttow
