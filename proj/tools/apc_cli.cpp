// apc command line: every subcommand reads JSON documents from files or
// standard input, calls the shared-library C API, and writes one JSON result
// document to standard output. Exit codes: 0 success, 1 domain error,
// 2 malformed input.

#include <CLI11.hpp>
#include <json.hpp>

#include <apc/apc.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::json;

class CliError : public std::runtime_error {
 public:
  CliError(std::string code, const std::string& message, int exit_code)
      : std::runtime_error(message), code_(std::move(code)), exit_code_(exit_code) {}

  const std::string& code() const { return code_; }
  int exit_code() const { return exit_code_; }

 private:
  std::string code_;
  int exit_code_;
};

[[noreturn]] void malformed(const std::string& message) {
  throw CliError("malformed_input", message, 2);
}

// Lifts a failed C API call into a CliError with the library's code string.
void check(apc_status status) {
  if (status == APC_OK) return;
  const int exit_code = status == APC_ERR_MALFORMED_INPUT ? 2 : 1;
  throw CliError(apc_last_error_code(), apc_last_error_message(), exit_code);
}

std::string owned(char* s) {
  std::string out = s ? s : "";
  apc_free_string(s);
  return out;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) malformed("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json parse_document(const std::string& text, const std::string& what) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) malformed(what + " is not valid JSON");
  return doc;
}

void emit(const Json& doc) { std::cout << doc.dump() << "\n"; }

// The C API returns canonical dumped documents; print them verbatim.
void emit_raw(const std::string& dumped) { std::cout << dumped; }

struct GroupHandle {
  apc_group* ptr = nullptr;
  ~GroupHandle() { apc_group_free(ptr); }
};
struct SemigroupHandle {
  apc_semigroup* ptr = nullptr;
  ~SemigroupHandle() { apc_semigroup_free(ptr); }
};
struct PolyHandle {
  apc_poly* ptr = nullptr;
  ~PolyHandle() { apc_poly_free(ptr); }
};
struct SymmatHandle {
  apc_symmat* ptr = nullptr;
  ~SymmatHandle() { apc_symmat_free(ptr); }
};

bool is_table_document(const Json& doc) {
  return doc.is_object() && doc.contains("values");
}

bool is_poly_document(const Json& doc) {
  return doc.is_object() && doc.contains("basis");
}

Json group_of_input(const Json& doc) {
  if (is_table_document(doc)) {
    if (!doc.contains("group")) malformed("table document lacks a group");
    return doc.at("group");
  }
  if (is_poly_document(doc)) {
    if (!doc.contains("free_rank")) malformed("polynomial document lacks free_rank");
    return Json{{"free_rank", doc.at("free_rank")},
                {"torsion_orders", Json::array()},
                {"formal_real_rank", 0}};
  }
  malformed("input must be a polynomial or table document");
}

// Builds the polynomial handle from either document flavor; table documents
// need the degree bound.
void load_poly(const Json& doc, int degree, PolyHandle& out) {
  if (is_poly_document(doc)) {
    check(apc_poly_parse(doc.dump().c_str(), &out.ptr));
  } else if (is_table_document(doc)) {
    if (degree < 0) malformed("table inputs need --degree");
    check(apc_poly_from_table(doc.dump().c_str(), degree, &out.ptr));
  } else {
    malformed("input must be a polynomial or table document");
  }
}

Json semigroup_document(const std::string& spec) {
  if (spec == "orthant" || spec == "standard_orthant")
    return Json{{"kind", "standard_orthant"}};
  if (spec == "full" || spec == "full_group") return Json{{"kind", "full_group"}};
  if (!spec.empty() && spec.front() == '{')
    return parse_document(spec, "semigroup document");
  return parse_document(read_input(spec), "semigroup document");
}

Json group_from_flags(int free_rank, int real_rank, const std::string& torsion) {
  Json orders = Json::array();
  if (!torsion.empty()) {
    std::stringstream ss(torsion);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        orders.push_back(std::stoll(item));
      } catch (const std::exception&) {
        malformed("bad torsion order '" + item + "'");
      }
    }
  }
  return Json{{"free_rank", free_rank},
              {"torsion_orders", std::move(orders)},
              {"formal_real_rank", real_rank}};
}

int run(int argc, char** argv) {
  CLI::App app{"exact finite-difference polynomial calculus on abelian groups"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string point;
  std::string direction;
  std::string semigroup_spec = "orthant";
  std::string u_arg, v_arg;
  std::string torsion;
  int degree = -1;
  int radius = 0;
  int free_rank = 0;
  int real_rank = 0;
  int k1 = 0, k2 = 0;
  int cert_n = 1;
  int max_m = 10;

  auto* eval = app.add_subcommand("eval", "evaluate a polynomial at a point");
  eval->add_option("--input", input, "polynomial or table document (path or -)");
  eval->add_option("--point", point, "evaluation point (element JSON)")->required();
  eval->add_option("--degree", degree, "degree bound for table inputs");
  eval->callback([&] {
    PolyHandle p;
    load_poly(parse_document(read_input(input), "input document"), degree, p);
    char* value = nullptr;
    check(apc_poly_eval(p.ptr, point.c_str(), &value));
    emit(Json{{"value", owned(value)}});
  });

  auto* extend = app.add_subcommand("extend", "evaluate the semigroup extension");
  extend->add_option("--input", input, "polynomial or table document on J");
  extend->add_option("--semigroup", semigroup_spec, "orthant | full | document/path");
  extend->add_option("--degree", degree, "degree bound n")->required();
  extend->add_option("--point", point, "target point in G = J - J")->required();
  extend->add_option("--u", u_arg, "decomposition part u (element JSON)");
  extend->add_option("--v", v_arg, "decomposition part v (element JSON)");
  extend->callback([&] {
    const Json doc = parse_document(read_input(input), "input document");
    GroupHandle g;
    check(apc_group_parse(group_of_input(doc).dump().c_str(), &g.ptr));
    SemigroupHandle j;
    check(apc_semigroup_parse(g.ptr, semigroup_document(semigroup_spec).dump().c_str(),
                              &j.ptr));
    const char* u = u_arg.empty() ? nullptr : u_arg.c_str();
    const char* v = v_arg.empty() ? nullptr : v_arg.c_str();
    char* value = nullptr;
    if (is_table_document(doc)) {
      check(apc_extend_eval_table(j.ptr, doc.dump().c_str(), degree, point.c_str(), u, v,
                                  &value));
    } else {
      PolyHandle p;
      load_poly(doc, degree, p);
      check(apc_extend_eval_poly(j.ptr, p.ptr, degree, point.c_str(), u, v, &value));
    }
    emit(Json{{"value", owned(value)}});
  });

  auto* decompose = app.add_subcommand("decompose", "orthant decomposition t = u - v");
  decompose->add_option("--free-rank", free_rank, "free rank of the ambient group")
      ->required();
  decompose->add_option("--torsion", torsion, "torsion orders, comma separated");
  decompose->add_option("--point", point, "point to decompose")->required();
  decompose->callback([&] {
    GroupHandle g;
    check(apc_group_parse(group_from_flags(free_rank, 0, torsion).dump().c_str(), &g.ptr));
    SemigroupHandle j;
    check(apc_semigroup_parse(g.ptr, R"({"kind":"standard_orthant"})", &j.ptr));
    char* u = nullptr;
    char* v = nullptr;
    check(apc_orthant_decompose(j.ptr, point.c_str(), &u, &v));
    emit(Json{{"u", parse_document(owned(u), "u")}, {"v", parse_document(owned(v), "v")}});
  });

  auto* homog = app.add_subcommand("homog", "homogeneous decomposition");
  homog->add_option("--input", input, "polynomial or table document");
  homog->add_option("--degree", degree, "degree bound for table inputs");
  homog->callback([&] {
    PolyHandle p;
    load_poly(parse_document(read_input(input), "input document"), degree, p);
    char* out = nullptr;
    check(apc_poly_homogeneous_parts(p.ptr, &out));
    emit_raw(owned(out));
  });

  auto* inertia = app.add_subcommand("inertia", "congruence diagonalization");
  inertia->add_option("--input", input, "symmetric matrix document");
  inertia->callback([&] {
    SymmatHandle c;
    check(apc_symmat_parse(read_input(input).c_str(), &c.ptr));
    char* out = nullptr;
    check(apc_inertia(c.ptr, &out));
    emit_raw(owned(out));
  });

  auto* squares = app.add_subcommand("squares", "signed sum-of-squares decomposition");
  squares->add_option("--input", input, "symmetric matrix document");
  squares->callback([&] {
    SymmatHandle c;
    check(apc_symmat_parse(read_input(input).c_str(), &c.ptr));
    char* out = nullptr;
    check(apc_squares(c.ptr, &out));
    emit_raw(owned(out));
  });

  auto* dim = app.add_subcommand("dim", "dimension of P^n");
  dim->add_option("--free-rank", free_rank, "free rank k")->required();
  dim->add_option("--real-rank", real_rank, "formal real rank m");
  dim->add_option("--torsion", torsion, "torsion orders, comma separated");
  dim->add_option("--degree", degree, "degree n")->required();
  dim->callback([&] {
    GroupHandle g;
    check(apc_group_parse(group_from_flags(free_rank, real_rank, torsion).dump().c_str(),
                          &g.ptr));
    uint64_t value = 0;
    check(apc_dim_pn(g.ptr, degree, &value));
    emit(Json{{"dim", value}});
  });

  auto* basis = app.add_subcommand("basis", "monomial basis of P^n(Z^k)");
  basis->add_option("--free-rank", free_rank, "free rank k")->required();
  basis->add_option("--degree", degree, "degree n")->required();
  basis->callback([&] {
    char* out = nullptr;
    check(apc_monomial_basis(free_rank, degree, &out));
    emit_raw(owned(out));
  });

  auto* split = app.add_subcommand("split", "tensor decomposition over a variable split");
  split->add_option("--input", input, "polynomial or table document");
  split->add_option("--k1", k1, "rank of the first factor")->required();
  split->add_option("--k2", k2, "rank of the second factor")->required();
  split->add_option("--degree", degree, "degree bound n")->required();
  split->callback([&] {
    PolyHandle p;
    load_poly(parse_document(read_input(input), "input document"), degree, p);
    char* out = nullptr;
    check(apc_tensor_split(p.ptr, k1, k2, degree, &out));
    emit_raw(owned(out));
  });

  auto* infdim = app.add_subcommand("certify-infdim", "rank-N witness for dim P^1");
  infdim->add_option("--n", cert_n, "number of coordinate evaluations")->required();
  infdim->callback([&] {
    char* out = nullptr;
    check(apc_certify_infdim(cert_n, &out));
    emit_raw(owned(out));
  });

  auto* verify = app.add_subcommand("verify-identities", "exhaustive identity check");
  verify->add_option("--max-m", max_m, "largest parameter to check");
  verify->callback([&] {
    char* out = nullptr;
    check(apc_verify_identities(max_m, &out));
    emit_raw(owned(out));
  });

  auto* degree_test = app.add_subcommand("degree-test", "difference-order test");
  degree_test->add_option("--input", input, "polynomial or table document");
  degree_test->add_option("--degree", degree, "candidate degree n")->required();
  degree_test->add_option("--radius", radius, "probe radius (default n + 2)");
  degree_test->callback([&] {
    const Json doc = parse_document(read_input(input), "input document");
    int result = 0;
    if (is_table_document(doc)) {
      check(apc_table_degree_test(doc.dump().c_str(), degree, radius, &result));
    } else {
      PolyHandle p;
      load_poly(doc, -1, p);
      check(apc_poly_degree_test(p.ptr, degree, &result));
    }
    emit(Json{{"result", result != 0}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    malformed(e.what());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CliError& e) {
    emit(Json{{"error", Json{{"code", e.code()}, {"message", e.what()}}}});
    return e.exit_code();
  } catch (const std::exception& e) {
    emit(Json{{"error", Json{{"code", "internal"}, {"message", e.what()}}}});
    return 1;
  }
}
