#pragma once

#include <optional>

#include "difference.hpp"
#include "function.hpp"
#include "group.hpp"
#include "polynomial.hpp"

namespace apc {

// Extension of polynomials from a subsemigroup J to the whole group
// G = J - J by the alternating-difference formula
//
//   p(u - v) = sum_{j=0}^{n} (-1)^j Delta_v^j q(u),   u, v in J,
//
// which only ever evaluates q inside J. The decomposition t = u - v is
// canonical for the standard orthant; generator-list semigroups must supply
// one.

struct Decomposition {
  GroupElement u;
  GroupElement v;
};

// Value of the unique degree-<= n polynomial extension of q at t.
Scalar extend_eval(const SemigroupDescriptor& j, const GroupFunction& q, int n,
                   const GroupElement& t,
                   const std::optional<Decomposition>& decomposition = std::nullopt);

// Both alternating sums for two decompositions of the same t agree; a false
// return is a bug certificate or a violated-precondition certificate.
bool well_definedness_check(const SemigroupDescriptor& j, const GroupFunction& q, int n,
                            const GroupElement& t, const Decomposition& first,
                            const Decomposition& second);

// L(q) = q(u) - Delta_v q(u~); the symmetric expression q(u~) - Delta_{v~} q(u)
// must agree and is asserted internally.
Scalar l_functional(const SemigroupDescriptor& j, const GroupFunction& q,
                    const Decomposition& first, const Decomposition& second);

// Exact check of the telescoping identity behind well-definedness, both
// parity branches:
//
//   sum_{j=0}^{n} (-1)^j Delta_v^j q(u)
//     = sum_{j<k} L(Delta_v^j Delta_{v~}^j q) + Delta_v^k Delta_{v~}^k q(w)   (n = 2k)
//     = sum_{j<=k} L(Delta_v^j Delta_{v~}^j q)                                (n = 2k+1)
//
// including w-independence of the even-case remainder.
bool identity_1_6_check(const SemigroupDescriptor& j, const GroupFunction& q, int n,
                        const Decomposition& first, const Decomposition& second,
                        const GroupElement& w);

// Confirms the injectivity certificate: a form vanishing on a J-spanning
// probe box has all Newton coefficients zero.
bool restriction_injectivity_check(const NewtonForm& p, const SemigroupDescriptor& j);

}  // namespace apc
