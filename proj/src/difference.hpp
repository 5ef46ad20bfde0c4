#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "function.hpp"
#include "group.hpp"
#include "scalar.hpp"

namespace apc {

// Difference operators Delta_h f(t) = f(t+h) - f(t) and the closed-form
// identities built on them.
//
// Sign convention: the m-fold iterate expands as
//
//   Delta_s^m f(t) = sum_{j=0}^{m} (-1)^(m-j) C(m,j) f(t + j s),
//
// the unique expansion consistent with the definition above (check m = 1).
// The companion identities used throughout:
//
//   f(t + m s) = sum_{j=0}^{m} C(m,j) Delta_s^j f(t)
//   f(t - s)   = sum_{j=0}^{n} (-1)^j Delta_s^j f(t)   for f in P^n.

GroupFunction delta(const GroupFunction& f, const GroupElement& h);

// Closed-form Delta_s^m f(t): m+1 oracle calls, not 2^m.
Scalar iterated_delta(const GroupFunction& f, const GroupElement& s, int m,
                      const GroupElement& t);

// Mixed difference with multiplicities: Delta_{h1}^{a1} ... Delta_{hr}^{ar} f(t).
Scalar mixed_delta(const GroupFunction& f,
                   const std::vector<std::pair<GroupElement, int>>& steps,
                   const GroupElement& t);

// sum_{j=0}^{min(m, n_bound)} C(m,j) Delta_s^j f(t); equals f(t + m s) when
// f is a polynomial of degree <= n_bound.
Scalar shift_expand(const GroupFunction& f, const GroupElement& t, const GroupElement& s,
                    int m, int n_bound);

// sum_{j=0}^{n} (-1)^j Delta_s^j f(t); equals f(t - s) when f is a polynomial
// of degree <= n. Garbage in, garbage out otherwise: this evaluates f one
// step backwards using only forward shifts.
Scalar backward_eval(const GroupFunction& f, const GroupElement& t, const GroupElement& s,
                     int n);

// Certificate that all mixed differences of order n+1 in the generator
// directions vanish over the probe box. Exact for polynomial oracles given
// with a sufficient radius; for opaque oracles it is a certificate over the
// probe set, not a proof.
bool degree_test(const GroupFunction& f, int n, int sample_radius);

// Default radius n + 2: enough points to pin down any degree-n polynomial on
// each generator line.
bool degree_test(const GroupFunction& f, int n);

struct IdentityReport {
  bool ok = true;
  std::uint64_t checked = 0;
  std::string failure;  // empty when ok
};

// Exhaustive exact check of the two combinatorial identities underlying the
// backward-evaluation formula, for all 0 <= k <= m <= max_m:
//
//   sum_{i=k}^{m} (-1)^i C(m+1, i+1) C(i, k)        == (-1)^k
//   sum_{j=0}^{m} (-1)^(m-j) C(m,j) j^k             == m! delta_{k,m}   (0^0 = 1)
IdentityReport verify_binomial_identities(int max_m);

}  // namespace apc
