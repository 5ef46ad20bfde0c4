#include "json_io.hpp"

#include <string>

namespace apc {

namespace {

const Json& expect_field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    fail(ErrorCode::malformed_input, std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::int64_t expect_int(const Json& v, const char* what) {
  if (!v.is_number_integer())
    fail(ErrorCode::malformed_input, std::string(what) + " must be an integer");
  return v.get<std::int64_t>();
}

std::vector<std::int64_t> expect_int_array(const Json& v, const char* what) {
  if (!v.is_array()) fail(ErrorCode::malformed_input, std::string(what) + " must be an array");
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const auto& item : v) out.push_back(expect_int(item, what));
  return out;
}

std::string expect_string(const Json& v, const char* what) {
  if (!v.is_string())
    fail(ErrorCode::malformed_input, std::string(what) + " must be a string");
  return v.get<std::string>();
}

}  // namespace

Json group_to_json(const GroupDescriptor& g) {
  return Json{{"free_rank", g.free_rank()},
              {"torsion_orders", g.torsion_orders()},
              {"formal_real_rank", g.formal_real_rank()}};
}

GroupDescriptor group_from_json(const Json& doc) {
  if (!doc.is_object()) fail(ErrorCode::malformed_input, "group document must be an object");
  const int k = static_cast<int>(expect_int(expect_field(doc, "free_rank"), "free_rank"));
  std::vector<std::int64_t> torsion;
  if (doc.contains("torsion_orders"))
    torsion = expect_int_array(doc.at("torsion_orders"), "torsion_orders");
  int m = 0;
  if (doc.contains("formal_real_rank"))
    m = static_cast<int>(expect_int(doc.at("formal_real_rank"), "formal_real_rank"));
  return GroupDescriptor(k, std::move(torsion), m);
}

Json element_to_json(const GroupElement& e) {
  return Json{{"free", e.free}, {"torsion", e.torsion}};
}

GroupElement element_from_json(const GroupDescriptor& g, const Json& doc) {
  if (doc.is_array()) {
    auto free = expect_int_array(doc, "free coordinates");
    return g.element(std::move(free),
                     std::vector<std::int64_t>(g.torsion_orders().size(), 0));
  }
  if (!doc.is_object())
    fail(ErrorCode::malformed_input, "element must be an object or an array");
  auto free = expect_int_array(expect_field(doc, "free"), "free coordinates");
  std::vector<std::int64_t> torsion(g.torsion_orders().size(), 0);
  if (doc.contains("torsion"))
    torsion = expect_int_array(doc.at("torsion"), "torsion coordinates");
  return g.element(std::move(free), std::move(torsion));
}

Json semigroup_to_json(const SemigroupDescriptor& j) {
  Json out{{"kind", semigroup_kind_name(j.kind())}};
  if (j.kind() == SemigroupKind::generator_list) {
    Json gens = Json::array();
    for (const auto& gen : j.generators()) gens.push_back(element_to_json(gen));
    out["generators"] = std::move(gens);
  }
  return out;
}

SemigroupDescriptor semigroup_from_json(const GroupDescriptor& ambient, const Json& doc) {
  const std::string kind = expect_string(expect_field(doc, "kind"), "kind");
  if (kind == "full_group") return SemigroupDescriptor(ambient, SemigroupKind::full_group);
  if (kind == "standard_orthant")
    return SemigroupDescriptor(ambient, SemigroupKind::standard_orthant);
  if (kind != "generator_list")
    fail(ErrorCode::malformed_input, "unknown semigroup kind '" + kind + "'");
  std::vector<GroupElement> gens;
  if (doc.contains("generators")) {
    if (!doc.at("generators").is_array())
      fail(ErrorCode::malformed_input, "generators must be an array");
    for (const auto& item : doc.at("generators"))
      gens.push_back(element_from_json(ambient, item));
  }
  return SemigroupDescriptor(ambient, SemigroupKind::generator_list, std::move(gens));
}

namespace {

Json coeffs_to_json(const CoeffMap& coeffs) {
  Json out = Json::array();
  for (const auto& [idx, value] : coeffs)
    out.push_back(Json{{"index", idx.entries()}, {"value", to_string(value)}});
  return out;
}

CoeffMap coeffs_from_json(const Json& doc, int k) {
  if (!doc.is_array()) fail(ErrorCode::malformed_input, "coeffs must be an array");
  CoeffMap out;
  for (const auto& item : doc) {
    auto entries = expect_int_array(expect_field(item, "index"), "index");
    std::vector<int> e;
    e.reserve(entries.size());
    for (auto v : entries) {
      if (v < 0) fail(ErrorCode::malformed_input, "index entries must be >= 0");
      e.push_back(static_cast<int>(v));
    }
    if (static_cast<int>(e.size()) != k)
      fail(ErrorCode::malformed_input, "index length does not match free_rank");
    const Scalar value =
        scalar_from_string(expect_string(expect_field(item, "value"), "value"));
    MultiIndex idx(std::move(e));
    auto it = out.find(idx);
    if (it != out.end()) fail(ErrorCode::malformed_input, "duplicate coefficient index");
    if (!value.is_zero()) out[idx] = value;
  }
  return out;
}

}  // namespace

Json poly_to_json(const NewtonForm& p) {
  return Json{{"basis", "newton"},
              {"free_rank", p.free_rank()},
              {"coeffs", coeffs_to_json(p.coeffs())}};
}

Json poly_to_json(const MonomialForm& p) {
  return Json{{"basis", "monomial"},
              {"free_rank", p.free_rank()},
              {"coeffs", coeffs_to_json(p.coeffs())}};
}

NewtonForm poly_from_json(const Json& doc) {
  const std::string basis = expect_string(expect_field(doc, "basis"), "basis");
  const int k = static_cast<int>(expect_int(expect_field(doc, "free_rank"), "free_rank"));
  if (k < 0) fail(ErrorCode::malformed_input, "free_rank must be >= 0");
  CoeffMap coeffs = coeffs_from_json(expect_field(doc, "coeffs"), k);
  const GroupDescriptor g(k, {}, 0);
  int bound = 0;
  for (const auto& [idx, value] : coeffs) bound = std::max(bound, idx.order());
  if (basis == "newton") return NewtonForm(g, bound, std::move(coeffs));
  if (basis == "monomial") return monomial_to_newton(MonomialForm(g, std::move(coeffs)));
  fail(ErrorCode::malformed_input, "basis must be 'newton' or 'monomial'");
}

Json table_to_json(const TableDocument& table) {
  Json values = Json::array();
  for (const auto& [element, value] : table.values)
    values.push_back(Json{{"element", element_to_json(element)}, {"value", to_string(value)}});
  return Json{{"group", group_to_json(table.group)}, {"values", std::move(values)}};
}

TableDocument table_from_json(const Json& doc) {
  TableDocument out;
  out.group = group_from_json(expect_field(doc, "group"));
  const Json& values = expect_field(doc, "values");
  if (!values.is_array()) fail(ErrorCode::malformed_input, "values must be an array");
  for (const auto& item : values) {
    GroupElement e = element_from_json(out.group, expect_field(item, "element"));
    Scalar v = scalar_from_string(expect_string(expect_field(item, "value"), "value"));
    out.values.emplace_back(std::move(e), std::move(v));
  }
  return out;
}

Json symmetric_to_json(const SymmetricForm& c) {
  Json entries = Json::array();
  for (int i = 0; i < c.dim(); ++i)
    for (int j = 0; j < c.dim(); ++j) entries.push_back(rational_to_string(c.at(i, j)));
  return Json{{"dim", c.dim()}, {"entries", std::move(entries)}};
}

SymmetricForm symmetric_from_json(const Json& doc) {
  const int n = static_cast<int>(expect_int(expect_field(doc, "dim"), "dim"));
  if (n < 0) fail(ErrorCode::malformed_input, "dim must be >= 0");
  const Json& entries = expect_field(doc, "entries");
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(n) * n)
    fail(ErrorCode::malformed_input, "entries must hold dim*dim rationals, row-major");
  Matrix<Rational> m(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[i][j] = rational_from_string(expect_string(entries.at(i * n + j), "entry"));
  return SymmetricForm(std::move(m));
}

Json inertia_to_json(const InertiaDecomposition& dec) {
  const int n = static_cast<int>(dec.diagonal.size());
  Json transform = Json::array();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) transform.push_back(rational_to_string(dec.transform[i][j]));
  Json diagonal = Json::array();
  for (const auto& d : dec.diagonal) diagonal.push_back(rational_to_string(d));
  return Json{{"dim", n},
              {"transform", std::move(transform)},
              {"diagonal", std::move(diagonal)},
              {"signature",
               Json{{"plus", dec.signature.plus},
                    {"minus", dec.signature.minus},
                    {"zero", dec.signature.zero}}}};
}

Json squares_to_json(const std::vector<SquareTerm>& terms) {
  Json out = Json::array();
  for (const auto& term : terms) {
    Json functional = Json::array();
    for (const auto& a : term.functional) functional.push_back(rational_to_string(a));
    out.push_back(Json{{"coefficient", rational_to_string(term.coefficient)},
                       {"functional", std::move(functional)}});
  }
  return Json{{"terms", std::move(out)}};
}

Json tensor_terms_to_json(const std::vector<TensorTerm>& terms) {
  Json out = Json::array();
  for (const auto& term : terms)
    out.push_back(Json{{"m", term.m},
                       {"left", poly_to_json(term.left)},
                       {"right", poly_to_json(term.right)}});
  return Json{{"terms", std::move(out)}};
}

Json infdim_certificate_to_json(const InfiniteDimCertificate& cert) {
  Json matrix = Json::array();
  for (const auto& row : cert.evaluation) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(rational_to_string(v));
    matrix.push_back(std::move(r));
  }
  Json witnesses = Json::array();
  for (const auto& w : cert.witness_points) witnesses.push_back(element_to_json(w));
  return Json{{"n", cert.n},
              {"matrix", std::move(matrix)},
              {"rank", cert.rank},
              {"witness_points", std::move(witnesses)},
              {"degree1_certified", cert.degree1_certified},
              {"additive_certified", cert.additive_certified}};
}

Json torsion_report_to_json(const TorsionConstancyReport& report) {
  Json out{{"n", report.n},
           {"group_order", report.group_order},
           {"constraints", report.constraints},
           {"nullspace_dim", report.nullspace_dim},
           {"certified", report.certified}};
  if (report.witness) {
    Json steps = Json::array();
    for (const auto& [dir, mult] : report.witness->steps)
      steps.push_back(Json{{"direction", element_to_json(dir)}, {"multiplicity", mult}});
    out["witness"] = Json{{"steps", std::move(steps)},
                          {"point", element_to_json(report.witness->point)},
                          {"value", to_string(report.witness->value)}};
  }
  return out;
}

std::string dump_document(const Json& doc) { return doc.dump() + "\n"; }

}  // namespace apc
