#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "function.hpp"
#include "group.hpp"
#include "scalar.hpp"

namespace apc {

// Exponent vector for iterated differences and monomials.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);
  static MultiIndex zero(int k) { return MultiIndex(std::vector<int>(k, 0)); }

  int order() const { return order_; }
  int size() const { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }

  friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<int> entries_;
  int order_ = 0;
};

// Graded lexicographic: by total order, then lexicographically with the
// first variable dominant, so k=2 degree<=2 lists as 1, t1, t2, t1^2,
// t1 t2, t2^2.
struct GrlexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.entries() > b.entries();
  }
};

using CoeffMap = std::map<MultiIndex, Scalar, GrlexLess>;

// All multi-indices with size k and order <= n, graded-lex order.
std::vector<MultiIndex> multi_indices_up_to(int k, int n);

class MonomialForm;

// Polynomial on the free part Z^k in the iterated-difference basis:
// coeffs[a] = Delta_{e1}^{a1} ... Delta_{ek}^{ak} p(0), and
//
//   p(t) = sum_a coeffs[a] * C(t_1, a_1) ... C(t_k, a_k)
//
// with generalized binomials, which defines p on all of Z^k, negative
// coordinates included. Torsion coordinates of the group are ignored by
// evaluation. Zero coefficients are not stored.
class NewtonForm {
 public:
  NewtonForm(GroupDescriptor group, int degree_bound);
  NewtonForm(GroupDescriptor group, int degree_bound, CoeffMap coeffs);

  const GroupDescriptor& group() const { return group_; }
  int free_rank() const { return group_.free_rank(); }
  int degree_bound() const { return degree_bound_; }
  const CoeffMap& coeffs() const { return coeffs_; }

  Scalar coeff(const MultiIndex& idx) const;
  void set_coeff(const MultiIndex& idx, Scalar value);

  Scalar eval(const GroupElement& t) const;
  GroupFunction as_function() const;

  // Largest order with a nonzero coefficient; nullopt for the zero form.
  std::optional<int> degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  NewtonForm& operator+=(const NewtonForm& o);
  NewtonForm& operator-=(const NewtonForm& o);
  NewtonForm scaled(const Scalar& c) const;

  // Equality of content: same group and same nonzero coefficients; the
  // degree bound is bookkeeping, not content.
  friend bool operator==(const NewtonForm& a, const NewtonForm& b) {
    return a.group_ == b.group_ && a.coeffs_ == b.coeffs_;
  }

 private:
  GroupDescriptor group_;
  int degree_bound_;
  CoeffMap coeffs_;
};

// Polynomial on Z^k in the monomial (Riss) basis: coeffs[a] multiplies
// t^a = t_1^{a_1} ... t_k^{a_k}. On Z^k the coordinate maps are the
// generating homomorphisms, so these are exactly the Riss polynomials.
class MonomialForm {
 public:
  explicit MonomialForm(GroupDescriptor group);
  MonomialForm(GroupDescriptor group, CoeffMap coeffs);

  static MonomialForm constant(const GroupDescriptor& g, Scalar value);
  static MonomialForm monomial(const GroupDescriptor& g, const MultiIndex& idx,
                               Scalar value = Scalar(1));

  const GroupDescriptor& group() const { return group_; }
  int free_rank() const { return group_.free_rank(); }
  const CoeffMap& coeffs() const { return coeffs_; }

  Scalar coeff(const MultiIndex& idx) const;
  void set_coeff(const MultiIndex& idx, Scalar value);

  Scalar eval(const GroupElement& t) const;
  GroupFunction as_function() const;

  std::optional<int> degree() const;
  bool is_zero() const { return coeffs_.empty(); }

  MonomialForm& operator+=(const MonomialForm& o);
  MonomialForm& operator-=(const MonomialForm& o);
  MonomialForm scaled(const Scalar& c) const;
  MonomialForm multiplied(const MonomialForm& o) const;

  // Argument shift t -> t + u.
  MonomialForm shifted(const GroupElement& u) const;
  // Argument scaling t -> m t: each order-d coefficient picks up m^d.
  MonomialForm arg_scaled(std::int64_t m) const;
  // Terms of exact total order j.
  MonomialForm homogeneous_component(int j) const;

  friend bool operator==(const MonomialForm& a, const MonomialForm& b) {
    return a.group_ == b.group_ && a.coeffs_ == b.coeffs_;
  }

 private:
  GroupDescriptor group_;
  CoeffMap coeffs_;
};

// Exact basis changes via Stirling numbers:
//   C(x, j) = (1/j!) sum_i s(j, i) x^i        (first kind, signed)
//   x^m     = sum_j S(m, j) j! C(x, j)        (second kind)
// extended multiplicatively over variables. Mutually inverse.
MonomialForm newton_to_monomial(const NewtonForm& p);
NewtonForm monomial_to_newton(const MonomialForm& q);

// Samples Delta^a f(0) for |a| <= n after a probe-based degree check;
// not_a_polynomial if the check fails.
NewtonForm newton_from_oracle(const GroupFunction& f, int n);
NewtonForm newton_from_oracle(const GroupFunction& f, int n, int sample_radius);

// Exact degree-bound test for forms (no probing).
bool degree_at_most(const NewtonForm& p, int n);

// [a_0, ..., a_n] with a_j the order-j part of p in the monomial basis;
// sum_j a_j = p and a_j(m t) = m^j a_j(t).
std::vector<MonomialForm> homogeneous_parts(const NewtonForm& p);

// Delta_s^n p(t) / n! for n = degree_bound; the coefficient of m^n in
// p(t + m s), independent of t.
Scalar leading_coefficient(const NewtonForm& p, const GroupElement& s);

// True iff p(m s) = m^k p(s) identically, checked symbolically on the
// monomial form; when true the degree is certified <= k. Requires
// 0 <= k < degree_bound.
bool degree_reduce_check(const NewtonForm& p, int k);

}  // namespace apc
