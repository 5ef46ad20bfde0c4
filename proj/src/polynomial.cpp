#include "polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "difference.hpp"
#include "stirling.hpp"

namespace apc {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_)
    if (e < 0) fail(ErrorCode::invalid_argument, "multi-index entries must be >= 0");
  order_ = std::accumulate(entries_.begin(), entries_.end(), 0);
}

std::vector<MultiIndex> multi_indices_up_to(int k, int n) {
  if (k < 0 || n < 0) fail(ErrorCode::invalid_argument, "k and n must be >= 0");
  std::vector<MultiIndex> out;
  std::vector<int> cur(k, 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == k) {
      out.emplace_back(cur);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur[pos] = e;
      self(self, pos + 1, remaining - e);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, n);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

namespace {

void prune_zero(CoeffMap& m) {
  for (auto it = m.begin(); it != m.end();)
    it = it->second.is_zero() ? m.erase(it) : std::next(it);
}

void check_index_rank(const MultiIndex& idx, int k) {
  if (idx.size() != k)
    fail(ErrorCode::descriptor_mismatch, "multi-index length does not match free rank");
}

}  // namespace

NewtonForm::NewtonForm(GroupDescriptor group, int degree_bound)
    : group_(std::move(group)), degree_bound_(degree_bound) {
  if (degree_bound_ < 0) fail(ErrorCode::invalid_argument, "degree bound must be >= 0");
}

NewtonForm::NewtonForm(GroupDescriptor group, int degree_bound, CoeffMap coeffs)
    : NewtonForm(std::move(group), degree_bound) {
  for (const auto& [idx, value] : coeffs) {
    check_index_rank(idx, group_.free_rank());
    if (idx.order() > degree_bound_)
      fail(ErrorCode::degree_violation, "coefficient order exceeds the degree bound");
  }
  coeffs_ = std::move(coeffs);
  prune_zero(coeffs_);
}

Scalar NewtonForm::coeff(const MultiIndex& idx) const {
  auto it = coeffs_.find(idx);
  return it == coeffs_.end() ? Scalar() : it->second;
}

void NewtonForm::set_coeff(const MultiIndex& idx, Scalar value) {
  check_index_rank(idx, group_.free_rank());
  if (idx.order() > degree_bound_)
    fail(ErrorCode::degree_violation, "coefficient order exceeds the degree bound");
  if (value.is_zero())
    coeffs_.erase(idx);
  else
    coeffs_[idx] = std::move(value);
}

Scalar NewtonForm::eval(const GroupElement& t) const {
  group_.check_element(t);
  Scalar acc;
  for (const auto& [idx, value] : coeffs_) {
    Integer prod(1);
    for (int i = 0; i < idx.size(); ++i) {
      if (idx[i] == 0) continue;
      prod *= binomial_signed(t.free[i], static_cast<unsigned long>(idx[i]));
      if (prod == 0) break;
    }
    if (prod != 0) acc += value * Scalar(prod);
  }
  return acc;
}

GroupFunction NewtonForm::as_function() const {
  NewtonForm copy = *this;
  return GroupFunction(group_, [copy](const GroupElement& t) { return copy.eval(t); });
}

std::optional<int> NewtonForm::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  int d = 0;
  for (const auto& [idx, value] : coeffs_) d = std::max(d, idx.order());
  return d;
}

NewtonForm& NewtonForm::operator+=(const NewtonForm& o) {
  if (group_ != o.group_) fail(ErrorCode::descriptor_mismatch, "forms on different groups");
  degree_bound_ = std::max(degree_bound_, o.degree_bound_);
  for (const auto& [idx, value] : o.coeffs_) set_coeff(idx, coeff(idx) + value);
  return *this;
}

NewtonForm& NewtonForm::operator-=(const NewtonForm& o) {
  if (group_ != o.group_) fail(ErrorCode::descriptor_mismatch, "forms on different groups");
  degree_bound_ = std::max(degree_bound_, o.degree_bound_);
  for (const auto& [idx, value] : o.coeffs_) set_coeff(idx, coeff(idx) - value);
  return *this;
}

NewtonForm NewtonForm::scaled(const Scalar& c) const {
  NewtonForm out(group_, degree_bound_);
  if (c.is_zero()) return out;
  for (const auto& [idx, value] : coeffs_) out.coeffs_[idx] = value * c;
  return out;
}

MonomialForm::MonomialForm(GroupDescriptor group) : group_(std::move(group)) {}

MonomialForm::MonomialForm(GroupDescriptor group, CoeffMap coeffs)
    : group_(std::move(group)) {
  for (const auto& [idx, value] : coeffs) check_index_rank(idx, group_.free_rank());
  coeffs_ = std::move(coeffs);
  prune_zero(coeffs_);
}

MonomialForm MonomialForm::constant(const GroupDescriptor& g, Scalar value) {
  MonomialForm out(g);
  out.set_coeff(MultiIndex::zero(g.free_rank()), std::move(value));
  return out;
}

MonomialForm MonomialForm::monomial(const GroupDescriptor& g, const MultiIndex& idx,
                                    Scalar value) {
  MonomialForm out(g);
  out.set_coeff(idx, std::move(value));
  return out;
}

Scalar MonomialForm::coeff(const MultiIndex& idx) const {
  auto it = coeffs_.find(idx);
  return it == coeffs_.end() ? Scalar() : it->second;
}

void MonomialForm::set_coeff(const MultiIndex& idx, Scalar value) {
  check_index_rank(idx, group_.free_rank());
  if (value.is_zero())
    coeffs_.erase(idx);
  else
    coeffs_[idx] = std::move(value);
}

Scalar MonomialForm::eval(const GroupElement& t) const {
  group_.check_element(t);
  Scalar acc;
  for (const auto& [idx, value] : coeffs_) {
    Integer prod(1);
    for (int i = 0; i < idx.size(); ++i) {
      if (idx[i] == 0) continue;
      prod *= int_pow(Integer(static_cast<long>(t.free[i])),
                      static_cast<unsigned long>(idx[i]));
      if (prod == 0) break;
    }
    if (prod != 0) acc += value * Scalar(prod);
  }
  return acc;
}

GroupFunction MonomialForm::as_function() const {
  MonomialForm copy = *this;
  return GroupFunction(group_, [copy](const GroupElement& t) { return copy.eval(t); });
}

std::optional<int> MonomialForm::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  int d = 0;
  for (const auto& [idx, value] : coeffs_) d = std::max(d, idx.order());
  return d;
}

MonomialForm& MonomialForm::operator+=(const MonomialForm& o) {
  if (group_ != o.group_) fail(ErrorCode::descriptor_mismatch, "forms on different groups");
  for (const auto& [idx, value] : o.coeffs_) set_coeff(idx, coeff(idx) + value);
  return *this;
}

MonomialForm& MonomialForm::operator-=(const MonomialForm& o) {
  if (group_ != o.group_) fail(ErrorCode::descriptor_mismatch, "forms on different groups");
  for (const auto& [idx, value] : o.coeffs_) set_coeff(idx, coeff(idx) - value);
  return *this;
}

MonomialForm MonomialForm::scaled(const Scalar& c) const {
  MonomialForm out(group_);
  if (c.is_zero()) return out;
  for (const auto& [idx, value] : coeffs_) out.coeffs_[idx] = value * c;
  return out;
}

MonomialForm MonomialForm::multiplied(const MonomialForm& o) const {
  if (group_ != o.group_) fail(ErrorCode::descriptor_mismatch, "forms on different groups");
  MonomialForm out(group_);
  for (const auto& [a, va] : coeffs_) {
    for (const auto& [b, vb] : o.coeffs_) {
      std::vector<int> sum(a.entries());
      for (int i = 0; i < b.size(); ++i) sum[i] += b[i];
      MultiIndex idx(std::move(sum));
      out.set_coeff(idx, out.coeff(idx) + va * vb);
    }
  }
  return out;
}

MonomialForm MonomialForm::shifted(const GroupElement& u) const {
  group_.check_element(u);
  const int k = free_rank();
  MonomialForm out(group_);
  for (const auto& [idx, value] : coeffs_) {
    // Expand prod_i (t_i + u_i)^{a_i} term by term.
    CoeffMap expanded;
    expanded[MultiIndex::zero(k)] = value;
    for (int i = 0; i < k; ++i) {
      if (idx[i] == 0) continue;
      CoeffMap next;
      for (const auto& [partial, pv] : expanded) {
        for (int l = 0; l <= idx[i]; ++l) {
          Integer c = binomial(idx[i], l) *
                      int_pow(Integer(static_cast<long>(u.free[i])),
                              static_cast<unsigned long>(idx[i] - l));
          if (c == 0) continue;
          std::vector<int> e(partial.entries());
          e[i] += l;
          MultiIndex key(std::move(e));
          auto it = next.find(key);
          Scalar add = pv * Scalar(c);
          if (it == next.end())
            next[key] = add;
          else
            it->second += add;
        }
      }
      expanded = std::move(next);
    }
    for (const auto& [key, v] : expanded) out.set_coeff(key, out.coeff(key) + v);
  }
  return out;
}

MonomialForm MonomialForm::arg_scaled(std::int64_t m) const {
  MonomialForm out(group_);
  for (const auto& [idx, value] : coeffs_) {
    Integer factor = int_pow(Integer(static_cast<long>(m)),
                             static_cast<unsigned long>(idx.order()));
    if (factor != 0) out.set_coeff(idx, value * Scalar(factor));
  }
  return out;
}

MonomialForm MonomialForm::homogeneous_component(int j) const {
  MonomialForm out(group_);
  for (const auto& [idx, value] : coeffs_)
    if (idx.order() == j) out.set_coeff(idx, value);
  return out;
}

MonomialForm newton_to_monomial(const NewtonForm& p) {
  const int k = p.free_rank();
  MonomialForm out(p.group());
  for (const auto& [alpha, value] : p.coeffs()) {
    // prod_i C(t_i, a_i) = prod_i (1/a_i!) sum_b s(a_i, b) t_i^b
    CoeffMap expanded;
    expanded[MultiIndex::zero(k)] = value;
    for (int i = 0; i < k; ++i) {
      const int a = alpha[i];
      if (a == 0) continue;
      const Rational inv_fact(Integer(1), factorial(static_cast<unsigned long>(a)));
      CoeffMap next;
      for (const auto& [partial, pv] : expanded) {
        for (int b = 0; b <= a; ++b) {
          const Integer s = stirling_first(static_cast<unsigned>(a), static_cast<unsigned>(b));
          if (s == 0) continue;
          std::vector<int> e(partial.entries());
          e[i] += b;
          MultiIndex key(std::move(e));
          Scalar add = pv * Scalar(Rational(s) * inv_fact);
          auto it = next.find(key);
          if (it == next.end())
            next[key] = add;
          else
            it->second += add;
        }
      }
      expanded = std::move(next);
    }
    for (const auto& [key, v] : expanded) out.set_coeff(key, out.coeff(key) + v);
  }
  return out;
}

NewtonForm monomial_to_newton(const MonomialForm& q) {
  const int k = q.free_rank();
  const int bound = q.degree().value_or(0);
  NewtonForm out(q.group(), bound);
  for (const auto& [beta, value] : q.coeffs()) {
    // prod_i t_i^{b_i} = prod_i sum_j S(b_i, j) j! C(t_i, j)
    CoeffMap expanded;
    expanded[MultiIndex::zero(k)] = value;
    for (int i = 0; i < k; ++i) {
      const int b = beta[i];
      if (b == 0) continue;
      CoeffMap next;
      for (const auto& [partial, pv] : expanded) {
        for (int j = (b > 0 ? 1 : 0); j <= b; ++j) {
          const Integer s = stirling_second(static_cast<unsigned>(b), static_cast<unsigned>(j));
          if (s == 0) continue;
          std::vector<int> e(partial.entries());
          e[i] += j;
          MultiIndex key(std::move(e));
          Scalar add = pv * Scalar(Integer(s * factorial(static_cast<unsigned long>(j))));
          auto it = next.find(key);
          if (it == next.end())
            next[key] = add;
          else
            it->second += add;
        }
      }
      expanded = std::move(next);
    }
    for (const auto& [key, v] : expanded) out.set_coeff(key, out.coeff(key) + v);
  }
  return out;
}

NewtonForm newton_from_oracle(const GroupFunction& f, int n, int sample_radius) {
  if (n < 0) fail(ErrorCode::invalid_argument, "degree bound must be >= 0");
  const GroupFunction cached = memoized(f);
  if (!degree_test(cached, n, sample_radius))
    fail(ErrorCode::not_a_polynomial,
         "oracle fails the order-" + std::to_string(n + 1) + " difference test");
  const GroupDescriptor& g = f.group();
  const int k = g.free_rank();
  NewtonForm out(g, n);
  const GroupElement origin = g.zero();
  for (const auto& alpha : multi_indices_up_to(k, n)) {
    std::vector<std::pair<GroupElement, int>> steps;
    for (int i = 0; i < k; ++i) {
      if (alpha[i] == 0) continue;
      GroupElement e = g.zero();
      e.free[i] = 1;
      steps.emplace_back(std::move(e), alpha[i]);
    }
    out.set_coeff(alpha, mixed_delta(cached, steps, origin));
  }
  return out;
}

NewtonForm newton_from_oracle(const GroupFunction& f, int n) {
  return newton_from_oracle(f, n, n + 2);
}

bool degree_at_most(const NewtonForm& p, int n) {
  const auto d = p.degree();
  return !d.has_value() || *d <= n;
}

std::vector<MonomialForm> homogeneous_parts(const NewtonForm& p) {
  const MonomialForm q = newton_to_monomial(p);
  std::vector<MonomialForm> parts;
  parts.reserve(p.degree_bound() + 1);
  for (int j = 0; j <= p.degree_bound(); ++j) parts.push_back(q.homogeneous_component(j));
  return parts;
}

Scalar leading_coefficient(const NewtonForm& p, const GroupElement& s) {
  const int n = p.degree_bound();
  const Scalar top = iterated_delta(p.as_function(), s, n, p.group().zero());
  return top / Scalar(factorial(static_cast<unsigned long>(n)));
}

bool degree_reduce_check(const NewtonForm& p, int k) {
  if (k < 0 || k >= p.degree_bound())
    fail(ErrorCode::invalid_argument, "need 0 <= k < degree_bound");
  const auto parts = homogeneous_parts(p);
  for (int j = 0; j <= p.degree_bound(); ++j)
    if (j != k && !parts[j].is_zero()) return false;
  return true;
}

}  // namespace apc
