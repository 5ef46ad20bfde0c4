#include <apc/apc.h>

#include <cstdlib>
#include <cstring>
#include <string>

#include "difference.hpp"
#include "extension.hpp"
#include "group.hpp"
#include "inertia.hpp"
#include "json_io.hpp"
#include "polynomial.hpp"
#include "spaces.hpp"

using namespace apc;

struct apc_group {
  GroupDescriptor value;
};
struct apc_semigroup {
  SemigroupDescriptor value;
};
struct apc_poly {
  NewtonForm value;  // canonical internal basis
};
struct apc_symmat {
  SymmetricForm value;
};

namespace {

thread_local std::string g_error_code = "";
thread_local std::string g_error_message = "";

apc_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::malformed_input: return APC_ERR_MALFORMED_INPUT;
    case ErrorCode::invalid_descriptor: return APC_ERR_INVALID_DESCRIPTOR;
    case ErrorCode::descriptor_mismatch: return APC_ERR_DESCRIPTOR_MISMATCH;
    case ErrorCode::search_bound_exceeded: return APC_ERR_SEARCH_BOUND_EXCEEDED;
    case ErrorCode::membership_violation: return APC_ERR_MEMBERSHIP_VIOLATION;
    case ErrorCode::no_decomposition_available: return APC_ERR_NO_DECOMPOSITION_AVAILABLE;
    case ErrorCode::decomposition_mismatch: return APC_ERR_DECOMPOSITION_MISMATCH;
    case ErrorCode::not_a_polynomial: return APC_ERR_NOT_A_POLYNOMIAL;
    case ErrorCode::not_homogeneous_degree_2: return APC_ERR_NOT_HOMOGENEOUS_DEGREE_2;
    case ErrorCode::degenerate_input: return APC_ERR_DEGENERATE_INPUT;
    case ErrorCode::degree_violation: return APC_ERR_DEGREE_VIOLATION;
    case ErrorCode::overflow: return APC_ERR_OVERFLOW;
    case ErrorCode::invalid_argument: return APC_ERR_INVALID_ARGUMENT;
    case ErrorCode::internal: return APC_ERR_INTERNAL;
  }
  return APC_ERR_INTERNAL;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs the body, mapping exceptions to statuses and filling the error slot.
template <class Fn>
apc_status guarded(Fn&& fn) {
  try {
    fn();
    g_error_code.clear();
    g_error_message.clear();
    return APC_OK;
  } catch (const Error& e) {
    g_error_code = e.code_name();
    g_error_message = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_error_code = error_code_name(ErrorCode::malformed_input);
    g_error_message = e.what();
    return APC_ERR_MALFORMED_INPUT;
  } catch (const std::exception& e) {
    g_error_code = error_code_name(ErrorCode::internal);
    g_error_message = e.what();
    return APC_ERR_INTERNAL;
  }
}

Json parse_json(const char* text, const char* what) {
  if (text == nullptr)
    fail(ErrorCode::malformed_input, std::string(what) + " must not be null");
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded())
    fail(ErrorCode::malformed_input, std::string(what) + " is not valid JSON");
  return doc;
}

const GroupDescriptor& require_group(const apc_group* g) {
  if (g == nullptr) fail(ErrorCode::invalid_argument, "group handle is null");
  return g->value;
}

const SemigroupDescriptor& require_semigroup(const apc_semigroup* j) {
  if (j == nullptr) fail(ErrorCode::invalid_argument, "semigroup handle is null");
  return j->value;
}

const NewtonForm& require_poly(const apc_poly* p) {
  if (p == nullptr) fail(ErrorCode::invalid_argument, "polynomial handle is null");
  return p->value;
}

const SymmetricForm& require_symmat(const apc_symmat* c) {
  if (c == nullptr) fail(ErrorCode::invalid_argument, "matrix handle is null");
  return c->value;
}

GroupFunction table_oracle(const TableDocument& table) {
  return table_function(table.group, table.values);
}

// Largest degree-test radius whose probe points (base box plus up to n+1
// positive unit steps) stay inside the table's bounding box, clamped to
// [1, n + 2].
int table_probe_radius(const TableDocument& table, int n) {
  const int k = table.group.free_rank();
  if (k == 0 || table.values.empty()) return 1;
  std::vector<std::int64_t> lo(k, 0), hi(k, 0);
  for (const auto& [e, value] : table.values)
    for (int i = 0; i < k; ++i) {
      lo[i] = std::min(lo[i], e.free[i]);
      hi[i] = std::max(hi[i], e.free[i]);
    }
  std::int64_t radius = n + 2;
  for (int i = 0; i < k; ++i) {
    radius = std::min(radius, -lo[i]);
    radius = std::min(radius, hi[i] - (n + 1));
  }
  return static_cast<int>(std::max<std::int64_t>(1, radius));
}

std::optional<Decomposition> optional_decomposition(const GroupDescriptor& g,
                                                    const char* u, const char* v) {
  if (u == nullptr && v == nullptr) return std::nullopt;
  if (u == nullptr || v == nullptr)
    fail(ErrorCode::invalid_argument, "u and v must be supplied together");
  return Decomposition{element_from_json(g, parse_json(u, "u")),
                       element_from_json(g, parse_json(v, "v"))};
}

Scalar run_extension(const SemigroupDescriptor& j, const GroupFunction& q, int n,
                     const char* point, const char* u, const char* v) {
  const GroupElement t = element_from_json(j.ambient(), parse_json(point, "point"));
  return extend_eval(j, q, n, t, optional_decomposition(j.ambient(), u, v));
}

}  // namespace

extern "C" {

const char* apc_version(void) { return "1.0.0"; }

const char* apc_last_error_code(void) { return g_error_code.c_str(); }
const char* apc_last_error_message(void) { return g_error_message.c_str(); }

void apc_free_string(char* s) { std::free(s); }

apc_status apc_group_parse(const char* json, apc_group** out) {
  return guarded([&] {
    auto g = group_from_json(parse_json(json, "group document"));
    *out = new apc_group{std::move(g)};
  });
}

apc_status apc_group_to_json(const apc_group* g, char** out) {
  return guarded([&] { *out = copy_string(dump_document(group_to_json(require_group(g)))); });
}

void apc_group_free(apc_group* g) { delete g; }

apc_status apc_group_add(const apc_group* g, const char* a, const char* b, char** out) {
  return guarded([&] {
    const auto& desc = require_group(g);
    const GroupElement ea = element_from_json(desc, parse_json(a, "element"));
    const GroupElement eb = element_from_json(desc, parse_json(b, "element"));
    *out = copy_string(dump_document(element_to_json(add(desc, ea, eb))));
  });
}

apc_status apc_group_scalar_mul(const apc_group* g, int64_t m, const char* a, char** out) {
  return guarded([&] {
    const auto& desc = require_group(g);
    const GroupElement ea = element_from_json(desc, parse_json(a, "element"));
    *out = copy_string(dump_document(element_to_json(scalar_mul(desc, m, ea))));
  });
}

apc_status apc_group_project_mod_h0(const apc_group* g, const char* elem, char** out) {
  return guarded([&] {
    const auto& desc = require_group(g);
    const GroupElement e = element_from_json(desc, parse_json(elem, "element"));
    *out = copy_string(dump_document(element_to_json(project_mod_h0(desc, e))));
  });
}

apc_status apc_group_h0_subgroup(const apc_group* g, char** out) {
  return guarded([&] {
    const auto sub = h0_subgroup(require_group(g));
    *out = copy_string(dump_document(group_to_json(sub.as_group())));
  });
}

apc_status apc_semigroup_parse(const apc_group* g, const char* json, apc_semigroup** out) {
  return guarded([&] {
    auto j = semigroup_from_json(require_group(g), parse_json(json, "semigroup document"));
    *out = new apc_semigroup{std::move(j)};
  });
}

apc_status apc_semigroup_to_json(const apc_semigroup* j, char** out) {
  return guarded(
      [&] { *out = copy_string(dump_document(semigroup_to_json(require_semigroup(j)))); });
}

void apc_semigroup_free(apc_semigroup* j) { delete j; }

apc_status apc_semigroup_contains(const apc_semigroup* j, const char* elem, int* out) {
  return guarded([&] {
    const auto& desc = require_semigroup(j);
    const GroupElement e = element_from_json(desc.ambient(), parse_json(elem, "element"));
    *out = desc.contains(e) ? 1 : 0;
  });
}

apc_status apc_orthant_decompose(const apc_semigroup* j, const char* elem, char** u_out,
                                 char** v_out) {
  return guarded([&] {
    const auto& desc = require_semigroup(j);
    const GroupElement e = element_from_json(desc.ambient(), parse_json(elem, "element"));
    const auto uv = orthant_decompose(desc, e);
    *u_out = copy_string(dump_document(element_to_json(uv.u)));
    *v_out = copy_string(dump_document(element_to_json(uv.v)));
  });
}

apc_status apc_poly_parse(const char* json, apc_poly** out) {
  return guarded([&] {
    auto p = poly_from_json(parse_json(json, "polynomial document"));
    *out = new apc_poly{std::move(p)};
  });
}

apc_status apc_poly_from_table(const char* table_json, int degree, apc_poly** out) {
  return guarded([&] {
    const TableDocument table = table_from_json(parse_json(table_json, "table document"));
    auto p = newton_from_oracle(table_oracle(table), degree,
                                table_probe_radius(table, degree));
    *out = new apc_poly{std::move(p)};
  });
}

apc_status apc_poly_to_json(const apc_poly* p, const char* basis, char** out) {
  return guarded([&] {
    const auto& form = require_poly(p);
    const std::string which = basis == nullptr ? "newton" : basis;
    if (which == "newton") {
      *out = copy_string(dump_document(poly_to_json(form)));
    } else if (which == "monomial") {
      *out = copy_string(dump_document(poly_to_json(newton_to_monomial(form))));
    } else {
      fail(ErrorCode::invalid_argument, "basis must be 'newton' or 'monomial'");
    }
  });
}

void apc_poly_free(apc_poly* p) { delete p; }

apc_status apc_poly_eval(const apc_poly* p, const char* point, char** value_out) {
  return guarded([&] {
    const auto& form = require_poly(p);
    const GroupElement t = element_from_json(form.group(), parse_json(point, "point"));
    *value_out = copy_string(to_string(form.eval(t)));
  });
}

apc_status apc_poly_degree(const apc_poly* p, int* out) {
  return guarded([&] { *out = require_poly(p).degree().value_or(-1); });
}

apc_status apc_poly_degree_test(const apc_poly* p, int n, int* out) {
  return guarded([&] {
    if (n < 0) fail(ErrorCode::invalid_argument, "degree must be >= 0");
    *out = degree_at_most(require_poly(p), n) ? 1 : 0;
  });
}

apc_status apc_table_degree_test(const char* table_json, int n, int radius, int* out) {
  return guarded([&] {
    const TableDocument table = table_from_json(parse_json(table_json, "table document"));
    const GroupFunction f = table_oracle(table);
    const int r = radius > 0 ? radius : table_probe_radius(table, n);
    *out = degree_test(f, n, r) ? 1 : 0;
  });
}

apc_status apc_poly_homogeneous_parts(const apc_poly* p, char** out) {
  return guarded([&] {
    Json parts = Json::array();
    for (const auto& part : homogeneous_parts(require_poly(p)))
      parts.push_back(poly_to_json(part));
    *out = copy_string(dump_document(Json{{"parts", std::move(parts)}}));
  });
}

apc_status apc_poly_leading_coefficient(const apc_poly* p, const char* direction,
                                        char** value_out) {
  return guarded([&] {
    const auto& form = require_poly(p);
    const GroupElement s = element_from_json(form.group(), parse_json(direction, "direction"));
    *value_out = copy_string(to_string(leading_coefficient(form, s)));
  });
}

apc_status apc_extend_eval_poly(const apc_semigroup* j, const apc_poly* q, int n,
                                const char* point, const char* u, const char* v,
                                char** value_out) {
  return guarded([&] {
    const auto& desc = require_semigroup(j);
    const auto& form = require_poly(q);
    GroupFunction oracle(desc.ambient(),
                         [form](const GroupElement& t) { return form.eval(t); });
    *value_out = copy_string(to_string(run_extension(desc, oracle, n, point, u, v)));
  });
}

apc_status apc_extend_eval_table(const apc_semigroup* j, const char* table_json, int n,
                                 const char* point, const char* u, const char* v,
                                 char** value_out) {
  return guarded([&] {
    const auto& desc = require_semigroup(j);
    const TableDocument table = table_from_json(parse_json(table_json, "table document"));
    if (table.group != desc.ambient())
      fail(ErrorCode::descriptor_mismatch, "table group does not match the semigroup");
    *value_out =
        copy_string(to_string(run_extension(desc, table_oracle(table), n, point, u, v)));
  });
}

apc_status apc_tensor_split(const apc_poly* p, int k1, int k2, int n, char** out) {
  return guarded([&] {
    const auto terms = tensor_split(require_poly(p), k1, k2, n);
    *out = copy_string(dump_document(tensor_terms_to_json(terms)));
  });
}

apc_status apc_symmat_parse(const char* json, apc_symmat** out) {
  return guarded([&] {
    auto c = symmetric_from_json(parse_json(json, "matrix document"));
    *out = new apc_symmat{std::move(c)};
  });
}

apc_status apc_symmat_to_json(const apc_symmat* c, char** out) {
  return guarded(
      [&] { *out = copy_string(dump_document(symmetric_to_json(require_symmat(c)))); });
}

void apc_symmat_free(apc_symmat* c) { delete c; }

apc_status apc_inertia(const apc_symmat* c, char** out) {
  return guarded([&] {
    *out = copy_string(dump_document(inertia_to_json(sylvester_diagonalize(require_symmat(c)))));
  });
}

apc_status apc_squares(const apc_symmat* c, char** out) {
  return guarded([&] {
    *out = copy_string(dump_document(squares_to_json(squares_decomposition(require_symmat(c)))));
  });
}

apc_status apc_riss_form_of(const apc_poly* p, apc_symmat** out) {
  return guarded([&] {
    auto c = riss_form_of(newton_to_monomial(require_poly(p)));
    *out = new apc_symmat{std::move(c)};
  });
}

apc_status apc_dim_pn(const apc_group* g, int n, uint64_t* out) {
  return guarded([&] { *out = dim_pn(require_group(g), n); });
}

apc_status apc_monomial_basis(int k, int n, char** out) {
  return guarded([&] {
    Json basis = Json::array();
    for (const auto& mono : monomial_basis(k, n)) basis.push_back(poly_to_json(mono));
    *out = copy_string(dump_document(Json{{"basis", std::move(basis)}}));
  });
}

apc_status apc_certify_infdim(int n, char** out) {
  return guarded([&] {
    *out = copy_string(dump_document(infdim_certificate_to_json(infinite_dim_certificate(n))));
  });
}

apc_status apc_verify_identities(int max_m, char** out) {
  return guarded([&] {
    const IdentityReport report = verify_binomial_identities(max_m);
    Json doc{{"status", report.ok ? "ok" : "failed"}, {"checked", report.checked}};
    if (!report.ok) doc["failure"] = report.failure;
    *out = copy_string(dump_document(doc));
  });
}

}  // extern "C"
