#include "ttow/io.hpp"

namespace ttow {

namespace {

const Json &need(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    throw SchemaError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::vector<std::size_t> dims_from_json(const Json &j) {
  if (!j.is_array() || j.empty())
    throw SchemaError("dims must be a nonempty array");
  std::vector<std::size_t> d;
  for (const auto &x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 1)
      throw SchemaError("dims must be positive integers");
    d.push_back(x.get<std::size_t>());
  }
  return d;
}

} // namespace

Json to_json(const FieldSpec &f) {
  if (f.is_rational())
    return Json{{"type", "rational"}};
  return Json{{"type", "prime"}, {"p", f.p()}};
}

FieldSpec field_from_json(const Json &j) {
  if (j.is_string())
    return field_from_flag(j.get<std::string>());
  auto type = need(j, "type").get<std::string>();
  if (type == "rational")
    return FieldSpec::rational();
  if (type == "prime") {
    const auto &p = need(j, "p");
    if (!p.is_number_unsigned())
      throw SchemaError("p must be a positive integer");
    try {
      return FieldSpec::prime(p.get<std::uint64_t>());
    } catch (const std::invalid_argument &e) {
      throw SchemaError(e.what());
    }
  }
  throw SchemaError("unknown field type: " + type);
}

FieldSpec field_from_flag(const std::string &s) { return FieldSpec::parse(s); }

Json to_json(const Scalar &s) {
  std::string txt = s.str();
  if (txt.find('/') == std::string::npos && txt.size() < 18)
    return std::stoll(txt);
  return txt;
}

Scalar scalar_from_json(const FieldSpec &f, const Json &j) {
  if (j.is_number_integer())
    return Scalar::from_int(f, j.get<long long>());
  if (j.is_string())
    return Scalar::parse(f, j.get<std::string>());
  throw SchemaError("scalar must be an integer or a \"num/den\" string");
}

Json to_json(const DenseMatrix &m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      r.push_back(to_json(m(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

DenseMatrix matrix_from_json(const FieldSpec &f, const Json &j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw SchemaError("matrix must be a nonempty list of rows");
  std::size_t cols = j[0].size();
  DenseMatrix m(f, j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw SchemaError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c)
      m(i, c) = scalar_from_json(f, j[i][c]);
  }
  return m;
}

Json to_json(const Tensor &t) {
  Json entries = Json::array();
  for_each_index(t.frame().dims, [&](const Index &idx) {
    const Scalar &x = t.at(idx);
    if (!x.is_zero())
      entries.push_back(Json{{"idx", idx}, {"val", to_json(x)}});
  });
  return Json{{"field", to_json(t.field())},
              {"dims", t.frame().dims},
              {"entries", std::move(entries)}};
}

Tensor tensor_from_json(const Json &j) {
  Frame fr(field_from_json(need(j, "field")), dims_from_json(need(j, "dims")));
  Tensor t(fr);
  if (j.contains("dense")) {
    const auto &d = j.at("dense");
    if (!d.is_array() || d.size() != fr.size())
      throw SchemaError("dense array has the wrong length");
    for (std::size_t i = 0; i < d.size(); ++i)
      t.coeffs()[i] = scalar_from_json(fr.field, d[i]);
  }
  if (j.contains("entries")) {
    for (const auto &e : j.at("entries")) {
      const auto &idx = need(e, "idx");
      if (!idx.is_array() || idx.size() != fr.dims.size())
        throw SchemaError("entry index has the wrong length");
      Index ix;
      for (std::size_t a = 0; a < idx.size(); ++a) {
        if (!idx[a].is_number_unsigned() ||
            idx[a].get<std::size_t>() >= fr.dims[a])
          throw SchemaError("entry index out of range");
        ix.push_back(idx[a].get<std::size_t>());
      }
      t.at(ix) = scalar_from_json(fr.field, need(e, "val"));
    }
  }
  return t;
}

Json to_json(const TransverseOperator &op) {
  Json mats = Json::array();
  for (const auto &m : op.mats())
    mats.push_back(to_json(m));
  return Json{{"field", to_json(op.frame().field)},
              {"dims", op.frame().dims},
              {"variance", op.variance().sigma},
              {"mats", std::move(mats)}};
}

TransverseOperator operator_from_json(const Json &j) {
  Frame fr(field_from_json(need(j, "field")), dims_from_json(need(j, "dims")));
  VarianceSignature v = VarianceSignature::covariant(fr.dims.size());
  if (j.contains("variance"))
    v = VarianceSignature(j.at("variance").get<std::vector<int>>());
  const auto &mj = need(j, "mats");
  if (!mj.is_array() || mj.size() != fr.dims.size())
    throw SchemaError("need one matrix per axis");
  std::vector<DenseMatrix> mats;
  for (const auto &m : mj)
    mats.push_back(matrix_from_json(fr.field, m));
  return TransverseOperator(fr, std::move(mats), v);
}

Json to_json(const MultiPoly &p, const MonomialOrder &o) { return p.str(o); }

MultiPoly poly_from_json(const FieldSpec &f, std::size_t nvars, const Json &j) {
  if (!j.is_string())
    throw SchemaError("polynomials are given as strings");
  return MultiPoly::parse(f, j.get<std::string>(), nvars);
}

Json to_json(const Ideal &I) {
  Json gens = Json::array();
  for (const auto &g : I.gb())
    gens.push_back(to_json(g, I.order()));
  return Json{{"field", to_json(I.field())},
              {"nvars", I.nvars()},
              {"order", I.order().str()},
              {"gens", std::move(gens)}};
}

Ideal ideal_from_json(const Json &j) {
  FieldSpec f = field_from_json(need(j, "field"));
  auto n = need(j, "nvars").get<std::size_t>();
  MonomialOrder o;
  if (j.contains("order"))
    o = MonomialOrder::parse(j.at("order").get<std::string>());
  std::vector<MultiPoly> gens;
  for (const auto &g : need(j, "gens"))
    gens.push_back(poly_from_json(f, n, g));
  return Ideal(f, n, std::move(gens), o);
}

Json to_json(const SimplicialComplex &c) {
  Json facets = Json::array();
  for (auto f : c.facets())
    facets.push_back(vertices_of(f));
  return Json{{"vertices", c.nvertices()}, {"facets", std::move(facets)}};
}

Json to_json(const Subframe &U) {
  Json axes = Json::array();
  for (std::size_t a = 0; a < U.frame().dims.size(); ++a) {
    Json basis = Json::array();
    for (const auto &x : U.basis(a)) {
      Json r = Json::array();
      for (const auto &c : x)
        r.push_back(to_json(c));
      basis.push_back(std::move(r));
    }
    axes.push_back(Json{{"axis", a}, {"basis", std::move(basis)}});
  }
  return Json{{"axes", std::move(axes)}};
}

Subframe subframe_from_json(const Frame &frame, const Json &j) {
  const std::size_t n = frame.dims.size();
  std::vector<std::vector<Vec>> bases(n);
  std::vector<bool> seen(n, false);
  for (const auto &ax : need(j, "axes")) {
    auto a = need(ax, "axis").get<std::size_t>();
    if (a >= n || seen[a])
      throw SchemaError("bad or repeated axis in subframe");
    seen[a] = true;
    for (const auto &row : need(ax, "basis")) {
      if (!row.is_array() || row.size() != frame.dims[a])
        throw SchemaError("subframe vector of the wrong length");
      Vec x;
      for (const auto &c : row)
        x.push_back(scalar_from_json(frame.field, c));
      bases[a].push_back(std::move(x));
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    if (!seen[a])
      throw SchemaError("subframe must list every axis");
  return Subframe(frame, std::move(bases));
}

Json to_json(const TensorCategory &c) {
  return Json{{"valence", c.valence}, {"variance", c.sigma.sigma}};
}

Json to_json(const ComposabilityVerdict &v) {
  Json j{{"outcome", outcome_name(v.outcome)}};
  if (v.outcome == ComposabilityVerdict::Outcome::composable) {
    j["A"] = v.A;
    j["B"] = v.B;
    Json w = Json::array();
    for (const auto &[e, f] : v.witnesses)
      w.push_back(Json{{"e", e}, {"f", f}});
    j["witnesses"] = std::move(w);
    if (v.category)
      j["category"] = to_json(*v.category);
  }
  if (!v.reason.empty())
    j["reason"] = v.reason;
  return j;
}

} // namespace ttow
