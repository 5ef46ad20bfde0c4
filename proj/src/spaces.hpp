#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "function.hpp"
#include "group.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"

namespace apc {

// dim P^n(G) = C(n + m + k, m + k) for G with formal real rank m, free rank
// k and any torsion part (torsion contributes the factor 1: only constants).
std::uint64_t dim_pn(const GroupDescriptor& g, int n);

// All monomials t^a with |a| <= n in graded-lex order, as forms on Z^k.
std::vector<MonomialForm> monomial_basis(int k, int n);

struct DualSystem {
  std::vector<NewtonForm> forms;     // q_1 ... q_K
  std::vector<GroupElement> points;  // t_1 ... t_K with Delta_{t_i}^n q_j = delta_ij
};

// Sequential construction from forms of exact degree n spanning a complement
// of P^{n-1}: pick t_i with Delta_{t_i}^n q_i != 0, normalize, clean the
// remaining forms, then back-substitute; the delta property is verified
// exactly before returning. degenerate_input when a form has degree < n or
// the forms are dependent modulo P^{n-1}.
DualSystem dual_system(std::vector<NewtonForm> q, int n);

struct TensorTerm {
  int m = 0;            // degree carried by the left factor
  MonomialForm left;    // form on Z^{k1}, degree <= m
  MonomialForm right;   // form on Z^{k2}, degree <= n - m
};

// p(s, t) = sum over terms left(s) * right(t), produced by fixing dual
// systems on the first factor and peeling remainders by backward induction
// on the left degree. Output is one valid decomposition, not a canonical
// one; correctness is re-expansion plus the per-factor degree bounds.
std::vector<TensorTerm> tensor_split(const NewtonForm& p, int k1, int k2, int n);

// Re-expansion of a tensor decomposition back to a form on Z^{k1+k2}.
MonomialForm tensor_expand(const std::vector<TensorTerm>& terms, int k1, int k2);

struct DifferenceWitness {
  std::vector<std::pair<GroupElement, int>> steps;
  GroupElement point;
  Scalar value;
};

struct TorsionConstancyReport {
  int n = 0;
  std::uint64_t group_order = 0;
  std::size_t constraints = 0;
  std::size_t nullspace_dim = 0;  // 1 means: constants only
  bool certified = false;
  std::optional<DifferenceWitness> witness;
};

// Certifies that on a finite (pure torsion) group the only functions whose
// order-(n+1) generator differences all vanish are the constants, by an
// exact nullspace computation over the full function space.
TorsionConstancyReport torsion_constancy_check(const GroupDescriptor& g, int n);

// Same certificate, plus the concrete witness difference for a given
// function table (present exactly when the table is not constant).
TorsionConstancyReport torsion_constancy_check(const GroupDescriptor& g, int n,
                                               const GroupFunction& f);

// Polynomial forms ignore torsion coordinates, so they are constant on every
// H_0-coset; the oracle overload actually probes and can fail.
bool h0_constancy_check(const NewtonForm& p, int probe_radius);
bool h0_constancy_check(const GroupFunction& f, int probe_radius);

struct InfiniteDimCertificate {
  int n = 0;  // number of coordinate evaluations certified independent
  Matrix<Rational> evaluation;  // p_i at the delta sequences
  std::size_t rank = 0;
  std::vector<GroupElement> witness_points;
  bool degree1_certified = false;
  bool additive_certified = false;
};

// Example witness that dim P^1 is unbounded over the group of finitely
// supported integer sequences: the first N coordinate evaluations, probed at
// the N delta sequences, have evaluation rank N; each is additive and
// passes sampled second-difference checks.
InfiniteDimCertificate infinite_dim_certificate(int n);

struct RestrictionDimReport {
  std::uint64_t dim = 0;
  std::size_t rank_restriction = 0;   // monomial basis sampled on the sublattice
  std::size_t rank_scaled_family = 0; // the family q_j(t) = p_j(m t)
  bool ok = false;
};

// Restriction from Z^k to the sublattice (mZ)^k preserves dimension: the
// restricted basis stays independent, and so does the scaled family.
RestrictionDimReport restriction_dim_check(int k, int sublattice_scale, int n);

}  // namespace apc
