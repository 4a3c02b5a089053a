#include "ttow/cli.hpp"

#include "ttow/annihilator.hpp"
#include "ttow/fixtures.hpp"
#include "ttow/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace ttow {

namespace {

TTOW_ERROR(IOError);

struct Options {
  std::string field = "rational";
  std::string order = "grevlex";
  std::uint64_t seed = 1;
  std::vector<unsigned> degree_bound;
  std::size_t samples = 8;
  std::string fixture;
  std::string in, json, out;
  std::vector<std::string> polys;
  std::size_t nvars = 0;
  std::vector<std::size_t> axes{1, 2};
  std::string subframe;
  std::string name;
};

Json read_json_text(const std::string &text, const std::string &where) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw ParseError(where + ": " + e.what());
  }
}

Json read_json_file(const std::string &path) {
  std::ifstream f(path);
  if (!f)
    throw IOError("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return read_json_text(ss.str(), path);
}

// --in FILE or --json TEXT; null when neither is given.
Json input(const Options &o) {
  if (!o.in.empty() && !o.json.empty())
    throw SchemaError("give --in or --json, not both");
  if (!o.in.empty())
    return read_json_file(o.in);
  if (!o.json.empty())
    return read_json_text(o.json, "--json");
  return nullptr;
}

// Inline JSON when it starts with '{', otherwise a path.
Json json_arg(const std::string &s) {
  auto p = s.find_first_not_of(" \t\n");
  if (p != std::string::npos && s[p] == '{')
    return read_json_text(s, "inline JSON");
  return read_json_file(s);
}

struct Fixture {
  std::string name;
  Tensor t;
  std::optional<TransverseOperator> op;
};

const std::set<std::string> kSized = {"unit", "sl", "trunc_poly", "matmul",
                                      "dotprod"};
const std::vector<std::string> kPlain = {"ghz",     "w",
                                         "complex", "upper_triangular",
                                         "octonion", "albert"};

Fixture load_fixture(const std::string &full, const FieldSpec &f) {
  auto ops = operator_fixture_names();
  if (std::find(ops.begin(), ops.end(), full) != ops.end()) {
    auto ex = operator_fixture(full, f);
    return {full, ex.t, ex.op};
  }
  std::string name = full;
  std::map<std::string, long long> params;
  auto dash = full.rfind('-');
  if (dash != std::string::npos) {
    name = full.substr(0, dash);
    std::string num = full.substr(dash + 1);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos ||
        num.size() > 3)
      throw UnsupportedParams("bad fixture size in " + full);
    if (!kSized.count(name))
      throw UnsupportedParams("fixture " + name + " takes no size");
    params[name == "unit" ? "v" : "n"] = std::stoll(num);
  } else if (!kSized.count(name) &&
             std::find(kPlain.begin(), kPlain.end(), name) == kPlain.end()) {
    throw UnsupportedParams("unknown fixture: " + full);
  }
  return {full, fixture_tensor(name, f, params), std::nullopt};
}

std::vector<Tensor> tensors_of(const Json &j) {
  if (j.is_object() && j.contains("tensors")) {
    std::vector<Tensor> S;
    for (const auto &t : j.at("tensors"))
      S.push_back(tensor_from_json(t));
    return S;
  }
  if (j.is_object() && j.contains("tensor"))
    return {tensor_from_json(j.at("tensor"))};
  if (j.is_object() && j.contains("dims"))
    return {tensor_from_json(j)};
  if (j.is_object() && j.contains("basis") && j.at("basis").is_array() &&
      !j.at("basis").empty() && j.at("basis")[0].contains("entries"))
    return tensors_of(Json{{"tensors", j.at("basis")}});
  throw SchemaError("input holds no tensor");
}

std::vector<TransverseOperator> operators_of(const Json &j) {
  if (j.is_object() && j.contains("operators")) {
    std::vector<TransverseOperator> D;
    for (const auto &op : j.at("operators"))
      D.push_back(operator_from_json(op));
    return D;
  }
  if (j.is_object() && j.contains("operator"))
    return {operator_from_json(j.at("operator"))};
  if (j.is_object() && j.contains("basis") && j.at("basis").is_array() &&
      !j.at("basis").empty() && j.at("basis")[0].contains("mats"))
    return operators_of(Json{{"operators", j.at("basis")}});
  throw SchemaError("input holds no operator");
}

std::vector<Tensor> tensors(const Options &o, const FieldSpec &f) {
  if (!o.fixture.empty())
    return {load_fixture(o.fixture, f).t};
  Json j = input(o);
  if (j.is_null())
    throw SchemaError("no tensor given (use --fixture, --in or --json)");
  return tensors_of(j);
}

std::vector<MultiPoly> polys_from_strings(const std::vector<std::string> &txt,
                                          const FieldSpec &f,
                                          std::size_t nvars) {
  std::size_t n = nvars;
  for (const auto &s : txt)
    n = std::max(n, MultiPoly::parse(f, s).nvars());
  std::vector<MultiPoly> P;
  for (const auto &s : txt)
    P.push_back(MultiPoly::parse(f, s, n));
  return P;
}

Json header(const std::string &cmd) {
  return Json{{"schema", kSchema}, {"command", cmd}};
}

Json ops_json(const std::vector<TransverseOperator> &ops) {
  Json a = Json::array();
  for (const auto &op : ops)
    a.push_back(to_json(op));
  return a;
}

Json tensors_json(const std::vector<Tensor> &ts) {
  Json a = Json::array();
  for (const auto &t : ts)
    a.push_back(to_json(t));
  return a;
}

Json polys_json(const std::vector<MultiPoly> &P) {
  Json a = Json::array();
  for (const auto &p : P)
    a.push_back(to_json(p));
  return a;
}

Json cmd_ann(const Options &o) {
  FieldSpec f = field_from_flag(o.field);
  MonomialOrder ord = MonomialOrder::parse(o.order);
  Json j = header("ann");
  Json warnings = Json::array();
  if (!o.fixture.empty()) {
    auto fx = load_fixture(o.fixture, f);
    if (!fx.op)
      throw SchemaError("fixture " + o.fixture + " carries no operator");
    auto dflt = default_bounds(*fx.op);
    if (!o.degree_bound.empty() && o.degree_bound != dflt)
      warnings.push_back("degree bounds above the default box only repeat "
                         "the default answer");
    j["ideal"] = to_json(ann_operator(fx.t, *fx.op, o.degree_bound, ord));
  } else {
    Json in = input(o);
    if (in.is_null())
      throw SchemaError("no input (use --fixture, --in or --json)");
    auto S = tensors_of(in);
    auto D = operators_of(in);
    if (S.size() == 1 && D.size() == 1) {
      auto dflt = default_bounds(D[0]);
      if (!o.degree_bound.empty() && o.degree_bound != dflt)
        warnings.push_back("degree bounds above the default box only repeat "
                           "the default answer");
      j["ideal"] = to_json(ann_operator(S[0], D[0], o.degree_bound, ord));
    } else {
      if (!o.degree_bound.empty())
        warnings.push_back("--degree-bound ignored for sets");
      j["ideal"] = to_json(ann_set(S, D, ord));
    }
  }
  if (!warnings.empty())
    j["warnings"] = warnings;
  return j;
}

Json cmd_gb(const Options &o) {
  Json j = header("gb");
  if (!o.polys.empty()) {
    FieldSpec f = field_from_flag(o.field);
    auto P = polys_from_strings(o.polys, f, o.nvars);
    j["ideal"] = to_json(
        Ideal(f, P[0].nvars(), P, MonomialOrder::parse(o.order)));
    return j;
  }
  Json in = input(o);
  if (in.is_null())
    throw SchemaError("no generators (use --poly, --in or --json)");
  if (in.contains("ideal"))
    in = in.at("ideal");
  Ideal I = ideal_from_json(in);
  if (o.order != I.order().str())
    I = Ideal(I.field(), I.nvars(), I.gb(), MonomialOrder::parse(o.order));
  j["ideal"] = to_json(I);
  return j;
}

Json cmd_algebra(const Options &o, AlgebraKind kind) {
  FieldSpec f = field_from_flag(o.field);
  auto S = tensors(o, f);
  std::size_t a = 1, b = 2;
  if (kind == AlgebraKind::nucleus) {
    if (o.axes.size() != 2)
      throw SchemaError("--axes takes two axes");
    a = o.axes[0];
    b = o.axes[1];
  }
  auto A = named_algebra(S, kind, a, b);
  Json j = header(algebra_kind_name(kind));
  j["kind"] = algebra_kind_name(kind);
  j["dimension"] = A.space.dim();
  j["variance"] = A.space.variance.sigma;
  j["closed"] = A.closed;
  j["unital"] = A.unital ? Json(*A.unital) : Json(nullptr);
  if (A.counterexample)
    j["counterexample"] = {A.counterexample->first, A.counterexample->second};
  j["basis"] = ops_json(A.space.basis);
  return j;
}

Json cmd_densor(const Options &o) {
  FieldSpec f = field_from_flag(o.field);
  auto D = densor(tensors(o, f));
  Json j = header("densor");
  j["dimension"] = D.dim();
  j["basis"] = tensors_json(D.basis());
  return j;
}

Json cmd_closure(const Options &o) {
  FieldSpec f = field_from_flag(o.field);
  std::vector<TransverseOperator> Delta;
  std::vector<MultiPoly> P;
  std::vector<std::string> ptxt = o.polys;
  if (!o.fixture.empty()) {
    auto fx = load_fixture(o.fixture, f);
    if (!fx.op)
      throw SchemaError("fixture " + o.fixture + " carries no operator");
    Delta.push_back(*fx.op);
  } else {
    Json in = input(o);
    if (in.is_null())
      throw SchemaError("no operators (use --fixture, --in or --json)");
    Delta = operators_of(in);
    if (in.contains("polys"))
      for (const auto &p : in.at("polys"))
        ptxt.push_back(p.get<std::string>());
  }
  if (Delta.empty())
    throw SchemaError("need at least one operator");
  const Frame &fr = Delta[0].frame();
  P = polys_from_strings(ptxt, fr.field, fr.dims.size());
  if (P.empty())
    throw SchemaError("need at least one polynomial (--poly)");
  auto T = ten_closure(P, Delta, fr);
  Json j = header("closure");
  j["dimension"] = T.dim();
  j["basis"] = tensors_json(T.basis());
  return j;
}

struct SubframeInput {
  std::vector<Tensor> S;
  Subframe U;
};

SubframeInput subframe_input(const Options &o) {
  FieldSpec f = field_from_flag(o.field);
  SubframeInput r;
  Json sub;
  if (!o.fixture.empty()) {
    r.S = {load_fixture(o.fixture, f).t};
  } else {
    Json in = input(o);
    if (in.is_null())
      throw SchemaError("no tensor given (use --fixture, --in or --json)");
    r.S = tensors_of(in);
    if (in.contains("subframe"))
      sub = in.at("subframe");
  }
  if (!o.subframe.empty())
    sub = json_arg(o.subframe);
  if (sub.is_null())
    throw SchemaError("no subframe given (use --subframe or a \"subframe\" key)");
  r.U = subframe_from_json(r.S.at(0).frame(), sub);
  return r;
}

Json cmd_nabla(const Options &o) {
  auto in = subframe_input(o);
  auto c = nabla_complex(in.S, in.U);
  Json j = header("nabla");
  j["complex"] = to_json(c);
  j["sr"] = to_json(stanley_reisner(c, in.S[0].field()));
  return j;
}

Json cmd_verify(const Options &o) {
  auto in = subframe_input(o);
  if (in.S.size() != 1)
    throw SchemaError("verify-singularity takes one tensor");
  if (o.degree_bound.size() > 1)
    throw SchemaError("verify-singularity takes a single degree bound");
  unsigned D = o.degree_bound.empty() ? 0 : o.degree_bound[0];
  auto rep = verify_singularity_theorem(in.S[0], in.U, D, o.samples, o.seed);
  Json j = header("verify-singularity");
  j["holds"] = rep.holds;
  j["forward"] = rep.forward;
  j["degree"] = rep.degree;
  j["operators"] = rep.operators;
  j["complex"] = to_json(rep.complex);
  j["sr"] = to_json(rep.sr);
  j["ideal"] = to_json(rep.ideal);
  return j;
}

Json cmd_composable(const Options &o) {
  FieldSpec f = field_from_flag(o.field);
  std::vector<MultiPoly> P;
  if (!o.polys.empty()) {
    P = polys_from_strings(o.polys, f, o.nvars);
  } else {
    Json in = input(o);
    if (in.is_null())
      throw SchemaError("no polynomials (use --poly, --in or --json)");
    if (in.contains("ideal"))
      in = in.at("ideal");
    Ideal I = ideal_from_json(in);
    f = I.field();
    P = I.gb();
    if (P.empty())
      P.push_back(MultiPoly(f, I.nvars()));
  }
  auto v = composability_verdict(f, P[0].nvars(), P);
  Json j = header("composable");
  j.update(to_json(v));
  if (v.outcome == ComposabilityVerdict::Outcome::composable)
    j["witness_polys"] = polys_json(v.witness_polys(f));
  return j;
}

struct Morphism {
  Tensor s, t;
  std::vector<DenseMatrix> maps;
};

Morphism morphism_of(const Json &j) {
  Morphism m;
  m.s = tensor_from_json(j.contains("domain") ? j.at("domain") : Json());
  m.t = tensor_from_json(j.contains("codomain") ? j.at("codomain") : Json());
  if (!j.contains("maps") || !j.at("maps").is_array())
    throw SchemaError("morphism needs \"maps\"");
  for (const auto &mj : j.at("maps"))
    m.maps.push_back(matrix_from_json(m.s.field(), mj));
  return m;
}

Json cmd_homotopism(const Options &o) {
  Json in = input(o);
  if (in.is_null())
    throw SchemaError("no morphisms (use --in or --json)");
  if (!in.contains("variance"))
    throw SchemaError("missing key \"variance\"");
  TensorCategory cat(VarianceSignature(in.at("variance").get<std::vector<int>>()));
  if (!in.contains("morphisms") || !in.at("morphisms").is_array() ||
      in.at("morphisms").empty())
    throw SchemaError("need a nonempty \"morphisms\" list");
  std::vector<Morphism> ms;
  for (const auto &mj : in.at("morphisms"))
    ms.push_back(morphism_of(mj));
  Json j = header("homotopism");
  Json valid = Json::array();
  bool all = true;
  for (const auto &m : ms) {
    bool ok = verify_homotopism(m.s, m.t, m.maps, cat);
    valid.push_back(ok);
    all = all && ok;
  }
  j["valid"] = valid;
  if (ms.size() > 1) {
    if (!all)
      throw NotComposable("every morphism must be a homotopism to compose");
    // Listed in the order they are applied: the composite is last o ... o first.
    auto h = *Homotopism::make(ms[0].s, ms[0].t, ms[0].maps, cat);
    for (std::size_t i = 1; i < ms.size(); ++i)
      h = compose_homotopisms(
          *Homotopism::make(ms[i].s, ms[i].t, ms[i].maps, cat), h);
    Json maps = Json::array();
    for (const auto &m : h.maps())
      maps.push_back(to_json(m));
    j["composite"] = Json{{"domain", to_json(h.domain())},
                          {"codomain", to_json(h.codomain())},
                          {"maps", std::move(maps)}};
  }
  return j;
}

Json cmd_fixtures(const Options &o) {
  Json j = header("fixtures");
  if (o.name.empty() && o.fixture.empty()) {
    j["names"] = cli_fixture_names();
    return j;
  }
  FieldSpec f = field_from_flag(o.field);
  auto fx = load_fixture(o.name.empty() ? o.fixture : o.name, f);
  j["name"] = fx.name;
  j["tensor"] = to_json(fx.t);
  if (fx.op)
    j["operator"] = to_json(*fx.op);
  return j;
}

const std::set<std::string> kValidationKinds = {
    "ParseError",     "SchemaError",       "DimensionMismatch",
    "FieldMismatch",  "FrameMismatch",     "InvalidAxis",
    "InvalidSubframe", "ShapeMismatch",    "VarianceMismatch",
    "InvalidExponent", "UnsupportedParams", "NonLinearIdeal",
    "OrderMismatch",  "NotComposable",     "IOError",
    "NotDownwardClosed", "DivisionByZero"};

int fail(std::ostream &err, const std::string &kind, const std::string &msg,
         int code) {
  Json e{{"schema", kSchema},
         {"error", {{"kind", kind}, {"message", msg}, {"exit", code}}}};
  err << e.dump() << "\n";
  return code;
}

} // namespace

int exit_code_for(const std::string &error_kind) {
  return kValidationKinds.count(error_kind) ? kValidation : kComputation;
}

std::vector<std::string> cli_fixture_names() {
  std::vector<std::string> names = operator_fixture_names();
  for (const auto &n : kPlain)
    names.push_back(n);
  for (const auto &n : {"sl-2", "sl-3", "trunc_poly-2", "trunc_poly-3",
                        "trunc_poly-4", "matmul-2", "dotprod-2", "dotprod-3",
                        "unit-2", "unit-3"})
    names.push_back(n);
  return names;
}

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Transverse tensor operators: annihilators, operator algebras, "
               "densors, singularity complexes and composability."};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App *c) {
    c->add_option("--field", o.field, "rational or prime:P");
    c->add_option("--order", o.order, "grevlex or lex");
    c->add_option("--seed", o.seed);
    c->add_option("--degree-bound", o.degree_bound, "per-axis exponent bounds")
        ->delimiter(',');
    c->add_option("--samples", o.samples);
    c->add_option("--fixture", o.fixture, "built-in example");
    c->add_option("--in", o.in, "input JSON file");
    c->add_option("--json", o.json, "inline input JSON");
    c->add_option("--out", o.out, "write the result here");
  };
  struct Cmd {
    const char *name, *help;
  };
  const std::vector<Cmd> cmds = {
      {"ann", "annihilator ideal of a tensor under operators"},
      {"gb", "reduced Groebner basis"},
      {"der", "derivation algebra"},
      {"centroid", "centroid"},
      {"nucleus", "nucleus on two axes"},
      {"adjoint", "adjoint algebra"},
      {"densor", "densor subspace"},
      {"closure", "tensors killed by polynomials of operators"},
      {"nabla", "singularity complex of a subframe"},
      {"verify-singularity", "compare Id(t, Omega(U,V)) with SR(nabla)"},
      {"composable", "composability verdict of an ideal"},
      {"homotopism", "verify or compose homotopisms"},
      {"fixtures", "emit built-in examples"}};
  std::map<std::string, CLI::App *> sub;
  for (const auto &c : cmds) {
    auto *s = app.add_subcommand(c.name, c.help);
    common(s);
    sub[c.name] = s;
  }
  for (const char *c : {"gb", "composable", "closure"}) {
    sub[c]->add_option("--poly", o.polys, "polynomial, e.g. \"x0 - x1*x2\"");
    sub[c]->add_option("--nvars", o.nvars, "number of variables");
  }
  sub["nucleus"]->add_option("--axes", o.axes, "two axes a,b")->delimiter(',');
  for (const char *c : {"nabla", "verify-singularity"})
    sub[c]->add_option("--subframe", o.subframe, "subframe JSON or file");
  sub["fixtures"]->add_option("--name", o.name, "fixture name");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError &e) {
    return fail(err, "UsageError", e.what(), kValidation);
  }

  std::string name;
  for (const auto &[k, s] : sub)
    if (s->parsed())
      name = k;

  try {
    Json j;
    if (name == "ann")
      j = cmd_ann(o);
    else if (name == "gb")
      j = cmd_gb(o);
    else if (name == "der")
      j = cmd_algebra(o, AlgebraKind::derivations);
    else if (name == "centroid")
      j = cmd_algebra(o, AlgebraKind::centroid);
    else if (name == "nucleus")
      j = cmd_algebra(o, AlgebraKind::nucleus);
    else if (name == "adjoint")
      j = cmd_algebra(o, AlgebraKind::adjoint);
    else if (name == "densor")
      j = cmd_densor(o);
    else if (name == "closure")
      j = cmd_closure(o);
    else if (name == "nabla")
      j = cmd_nabla(o);
    else if (name == "verify-singularity")
      j = cmd_verify(o);
    else if (name == "composable")
      j = cmd_composable(o);
    else if (name == "homotopism")
      j = cmd_homotopism(o);
    else
      j = cmd_fixtures(o);
    std::string text = j.dump(2) + "\n";
    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream f(o.out);
      if (!f)
        throw IOError("cannot write " + o.out);
      f << text;
    }
    return kOk;
  } catch (const Error &e) {
    return fail(err, e.kind(), e.what(), exit_code_for(e.kind()));
  } catch (const Json::exception &e) {
    return fail(err, "SchemaError", e.what(), kValidation);
  } catch (const std::bad_alloc &) {
    return fail(err, "OutOfMemory", "allocation failed", kComputation);
  } catch (const std::exception &e) {
    return fail(err, "InternalError", e.what(), kComputation);
  }
}

} // namespace ttow
