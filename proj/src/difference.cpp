#include "difference.hpp"

#include <algorithm>
#include <sstream>

namespace apc {

GroupFunction delta(const GroupFunction& f, const GroupElement& h) {
  const GroupDescriptor g = f.group();
  g.check_element(h);
  return GroupFunction(g, [f, h, g](const GroupElement& t) {
    return f(add(g, t, h)) - f(t);
  });
}

Scalar iterated_delta(const GroupFunction& f, const GroupElement& s, int m,
                      const GroupElement& t) {
  if (m < 0) fail(ErrorCode::invalid_argument, "difference order must be >= 0");
  const GroupDescriptor& g = f.group();
  Scalar acc;
  GroupElement point = t;
  for (int j = 0; j <= m; ++j) {
    if (j > 0) point = add(g, point, s);
    Scalar term = f(point) * Scalar(binomial(m, j));
    if ((m - j) % 2 != 0) term = -term;
    acc += term;
  }
  return acc;
}

Scalar mixed_delta(const GroupFunction& f,
                   const std::vector<std::pair<GroupElement, int>>& steps,
                   const GroupElement& t) {
  const GroupDescriptor& g = f.group();
  Scalar acc;
  auto expand = [&](auto&& self, std::size_t idx, const GroupElement& point,
                    const Scalar& coeff) -> void {
    if (idx == steps.size()) {
      acc += coeff * f(point);
      return;
    }
    const auto& [h, mult] = steps[idx];
    if (mult < 0) fail(ErrorCode::invalid_argument, "difference order must be >= 0");
    GroupElement p = point;
    for (int j = 0; j <= mult; ++j) {
      if (j > 0) p = add(g, p, h);
      Scalar c = coeff * Scalar(binomial(mult, j));
      if ((mult - j) % 2 != 0) c = -c;
      self(self, idx + 1, p, c);
    }
  };
  expand(expand, 0, t, Scalar(1));
  return acc;
}

Scalar shift_expand(const GroupFunction& f, const GroupElement& t, const GroupElement& s,
                    int m, int n_bound) {
  if (m < 0) fail(ErrorCode::invalid_argument, "shift count must be >= 0");
  if (n_bound < 0) fail(ErrorCode::invalid_argument, "degree bound must be >= 0");
  Scalar acc;
  const int top = std::min(m, n_bound);
  for (int j = 0; j <= top; ++j)
    acc += Scalar(binomial(m, j)) * iterated_delta(f, s, j, t);
  return acc;
}

Scalar backward_eval(const GroupFunction& f, const GroupElement& t, const GroupElement& s,
                     int n) {
  if (n < 0) fail(ErrorCode::invalid_argument, "degree bound must be >= 0");
  Scalar acc;
  for (int j = 0; j <= n; ++j) {
    Scalar term = iterated_delta(f, s, j, t);
    if (j % 2 != 0) term = -term;
    acc += term;
  }
  return acc;
}

namespace {

// Enumerate multisets of size `order` from `dirs`, as multiplicity vectors.
void for_each_multiset(int num_dirs, int order,
                       const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> mult(num_dirs, 0);
  auto rec = [&](auto&& self, int idx, int remaining) -> void {
    if (idx == num_dirs - 1) {
      mult[idx] = remaining;
      visit(mult);
      return;
    }
    for (int take = 0; take <= remaining; ++take) {
      mult[idx] = take;
      self(self, idx + 1, remaining - take);
    }
  };
  if (num_dirs > 0) rec(rec, 0, order);
}

}  // namespace

bool degree_test(const GroupFunction& f, int n, int sample_radius) {
  if (n < 0) fail(ErrorCode::invalid_argument, "degree must be >= 0");
  if (sample_radius < 1) fail(ErrorCode::invalid_argument, "sample radius must be >= 1");
  const GroupDescriptor& g = f.group();
  const auto gens = group_generators(g);
  if (gens.empty()) return true;  // trivial group: only constants exist
  const auto box = probe_box(g, sample_radius);
  const GroupFunction cached = memoized(f);

  bool ok = true;
  for_each_multiset(static_cast<int>(gens.size()), n + 1, [&](const std::vector<int>& mult) {
    if (!ok) return;
    std::vector<std::pair<GroupElement, int>> steps;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (mult[i] > 0) steps.emplace_back(gens[i], mult[i]);
    for (const auto& t : box) {
      if (!mixed_delta(cached, steps, t).is_zero()) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

bool degree_test(const GroupFunction& f, int n) { return degree_test(f, n, n + 2); }

IdentityReport verify_binomial_identities(int max_m) {
  if (max_m < 1) fail(ErrorCode::invalid_argument, "max_m must be >= 1");
  IdentityReport report;

  auto record_failure = [&](const std::string& what, int m, int k) {
    report.ok = false;
    std::ostringstream os;
    os << what << " fails at m=" << m << ", k=" << k;
    report.failure = os.str();
  };

  // sum_{i=k}^{m} (-1)^i C(m+1, i+1) C(i, k) == (-1)^k
  for (int m = 0; m <= max_m && report.ok; ++m) {
    for (int k = 0; k <= m && report.ok; ++k) {
      Integer sum = 0;
      for (int i = k; i <= m; ++i) {
        Integer term = binomial(m + 1, i + 1) * binomial(i, k);
        if (i % 2 != 0) term = -term;
        sum += term;
      }
      const Integer expected = (k % 2 == 0) ? Integer(1) : Integer(-1);
      ++report.checked;
      if (sum != expected) record_failure("alternating binomial identity", m, k);
    }
  }

  // sum_{j=0}^{m} (-1)^(m-j) C(m,j) j^k == m! delta_{k,m}, with 0^0 = 1.
  for (int m = 0; m <= max_m && report.ok; ++m) {
    for (int k = 0; k <= m && report.ok; ++k) {
      Integer sum = 0;
      for (int j = 0; j <= m; ++j) {
        Integer power = (j == 0 && k == 0) ? Integer(1) : int_pow(Integer(j), k);
        Integer term = binomial(m, j) * power;
        if ((m - j) % 2 != 0) term = -term;
        sum += term;
      }
      const Integer expected = (k == m) ? factorial(m) : Integer(0);
      ++report.checked;
      if (sum != expected) record_failure("monomial difference identity", m, k);
    }
  }
  return report;
}

}  // namespace apc
