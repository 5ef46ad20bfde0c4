#pragma once

#include <json.hpp>

#include <utility>
#include <vector>

#include "group.hpp"
#include "inertia.hpp"
#include "polynomial.hpp"
#include "spaces.hpp"

namespace apc {

using Json = nlohmann::json;

// Document schemas (all rationals travel as canonical strings):
//   group      {"free_rank": k, "torsion_orders": [d...], "formal_real_rank": m}
//   element    {"free": [...], "torsion": [...]}  or a bare array of free coords
//   semigroup  {"kind": "standard_orthant"|"full_group"|"generator_list",
//               "generators": [element...]}
//   polynomial {"basis": "newton"|"monomial", "free_rank": k,
//               "coeffs": [{"index": [a...], "value": "a/b"}...]}
//   table      {"group": group, "values": [{"element": element, "value": "a/b"}...]}
//   matrix     {"dim": n, "entries": ["a/b"... row-major]}
// Schema violations raise malformed_input.

Json group_to_json(const GroupDescriptor& g);
GroupDescriptor group_from_json(const Json& doc);

Json element_to_json(const GroupElement& e);
GroupElement element_from_json(const GroupDescriptor& g, const Json& doc);

Json semigroup_to_json(const SemigroupDescriptor& j);
SemigroupDescriptor semigroup_from_json(const GroupDescriptor& ambient, const Json& doc);

Json poly_to_json(const NewtonForm& p);
Json poly_to_json(const MonomialForm& p);

// Parses either basis; the result is always held in Newton form (the
// canonical internal representation).
NewtonForm poly_from_json(const Json& doc);

struct TableDocument {
  GroupDescriptor group;
  std::vector<std::pair<GroupElement, Scalar>> values;
};

Json table_to_json(const TableDocument& table);
TableDocument table_from_json(const Json& doc);

Json symmetric_to_json(const SymmetricForm& c);
SymmetricForm symmetric_from_json(const Json& doc);

Json inertia_to_json(const InertiaDecomposition& dec);
Json squares_to_json(const std::vector<SquareTerm>& terms);
Json tensor_terms_to_json(const std::vector<TensorTerm>& terms);
Json infdim_certificate_to_json(const InfiniteDimCertificate& cert);
Json torsion_report_to_json(const TorsionConstancyReport& report);

// Canonical bytes for every output document: sorted keys (the default for
// object storage), no indentation, trailing newline.
std::string dump_document(const Json& doc);

}  // namespace apc
