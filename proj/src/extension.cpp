#include "extension.hpp"

namespace apc {

namespace {

void require_member(const SemigroupDescriptor& j, const GroupElement& x, const char* role) {
  if (!j.contains(x))
    fail(ErrorCode::membership_violation,
         std::string(role) + " " + to_string(x) + " is not in the semigroup");
}

void require_same_group(const SemigroupDescriptor& j, const GroupFunction& q) {
  if (q.group() != j.ambient())
    fail(ErrorCode::descriptor_mismatch, "function and semigroup live on different groups");
}

Decomposition resolve_decomposition(const SemigroupDescriptor& j, const GroupElement& t,
                                    const std::optional<Decomposition>& supplied) {
  if (supplied) {
    const auto& d = *supplied;
    require_member(j, d.u, "u");
    require_member(j, d.v, "v");
    if (sub(j.ambient(), d.u, d.v) != t)
      fail(ErrorCode::decomposition_mismatch, "u - v does not equal the target point");
    return d;
  }
  switch (j.kind()) {
    case SemigroupKind::standard_orthant: {
      auto uv = orthant_decompose(j, t);
      return Decomposition{std::move(uv.u), std::move(uv.v)};
    }
    case SemigroupKind::full_group:
      return Decomposition{t, j.ambient().zero()};
    case SemigroupKind::generator_list:
      break;
  }
  fail(ErrorCode::no_decomposition_available,
       "generator-list semigroups need an explicit decomposition t = u - v");
}

Scalar alternating_sum(const GroupFunction& q, int n, const Decomposition& d) {
  Scalar acc;
  for (int j = 0; j <= n; ++j) {
    Scalar term = iterated_delta(q, d.v, j, d.u);
    if (j % 2 != 0) term = -term;
    acc += term;
  }
  return acc;
}

}  // namespace

Scalar extend_eval(const SemigroupDescriptor& j, const GroupFunction& q, int n,
                   const GroupElement& t, const std::optional<Decomposition>& decomposition) {
  if (n < 0) fail(ErrorCode::invalid_argument, "degree bound must be >= 0");
  require_same_group(j, q);
  j.ambient().check_element(t);
  const Decomposition d = resolve_decomposition(j, t, decomposition);
  return alternating_sum(q, n, d);
}

bool well_definedness_check(const SemigroupDescriptor& j, const GroupFunction& q, int n,
                            const GroupElement& t, const Decomposition& first,
                            const Decomposition& second) {
  if (n < 0) fail(ErrorCode::invalid_argument, "degree bound must be >= 0");
  require_same_group(j, q);
  const auto& g = j.ambient();
  g.check_element(t);
  for (const auto* d : {&first, &second}) {
    require_member(j, d->u, "u");
    require_member(j, d->v, "v");
    if (sub(g, d->u, d->v) != t)
      fail(ErrorCode::decomposition_mismatch, "decomposition does not represent the point");
  }
  return alternating_sum(q, n, first) == alternating_sum(q, n, second);
}

Scalar l_functional(const SemigroupDescriptor& j, const GroupFunction& q,
                    const Decomposition& first, const Decomposition& second) {
  require_same_group(j, q);
  const auto& g = j.ambient();
  require_member(j, first.u, "u");
  require_member(j, first.v, "v");
  require_member(j, second.u, "u~");
  require_member(j, second.v, "v~");
  if (sub(g, first.u, first.v) != sub(g, second.u, second.v))
    fail(ErrorCode::decomposition_mismatch, "decompositions represent different points");

  // L(q) = q(u) - Delta_v q(u~) = q(u~) - Delta_{v~} q(u).
  const Scalar via_first = q(first.u) - (q(add(g, second.u, first.v)) - q(second.u));
  const Scalar via_second = q(second.u) - (q(add(g, first.u, second.v)) - q(first.u));
  if (via_first != via_second)
    fail(ErrorCode::internal, "the two expressions for L disagree");
  return via_first;
}

bool identity_1_6_check(const SemigroupDescriptor& j, const GroupFunction& q, int n,
                        const Decomposition& first, const Decomposition& second,
                        const GroupElement& w) {
  if (n < 0) fail(ErrorCode::invalid_argument, "degree bound must be >= 0");
  require_same_group(j, q);
  const auto& g = j.ambient();
  require_member(j, w, "w");
  require_member(j, first.u, "u");
  require_member(j, first.v, "v");
  require_member(j, second.u, "u~");
  require_member(j, second.v, "v~");
  if (sub(g, first.u, first.v) != sub(g, second.u, second.v))
    fail(ErrorCode::decomposition_mismatch, "decompositions represent different points");

  const Scalar lhs = alternating_sum(q, n, first);

  auto nested = [&](int reps, const GroupFunction& fn) {
    // Delta_v^reps Delta_{v~}^reps fn as a fresh oracle.
    return GroupFunction(g, [reps, fn, v = first.v, vt = second.v](const GroupElement& t) {
      return mixed_delta(fn, {{v, reps}, {vt, reps}}, t);
    });
  };
  auto l_of = [&](const GroupFunction& fn) {
    return fn(first.u) - (fn(add(g, second.u, first.v)) - fn(second.u));
  };

  const int k = n / 2;
  Scalar rhs;
  if (n % 2 == 0) {
    for (int jj = 0; jj < k; ++jj) rhs += l_of(nested(jj, q));
    const Scalar remainder_at_w = mixed_delta(q, {{first.v, k}, {second.v, k}}, w);
    // The remainder must not depend on the choice of w.
    const GroupElement w2 = add(g, w, first.u);
    const Scalar remainder_at_w2 = mixed_delta(q, {{first.v, k}, {second.v, k}}, w2);
    if (remainder_at_w != remainder_at_w2) return false;
    rhs += remainder_at_w;
  } else {
    for (int jj = 0; jj <= k; ++jj) rhs += l_of(nested(jj, q));
  }
  return lhs == rhs;
}

bool restriction_injectivity_check(const NewtonForm& p, const SemigroupDescriptor& j) {
  if (p.group() != j.ambient())
    fail(ErrorCode::descriptor_mismatch, "form and semigroup live on different groups");
  const auto& g = j.ambient();
  const int radius = p.degree_bound() + 1;

  std::vector<GroupElement> probes;
  switch (j.kind()) {
    case SemigroupKind::standard_orthant:
    case SemigroupKind::full_group: {
      // Box [0, radius]^k spans enough of J to pin every Newton coefficient.
      std::vector<GroupElement> box = probe_box(g, radius);
      for (auto& e : box) {
        if (j.kind() == SemigroupKind::full_group ||
            std::all_of(e.free.begin(), e.free.end(),
                        [](std::int64_t c) { return c >= 0; }))
          probes.push_back(std::move(e));
      }
      break;
    }
    case SemigroupKind::generator_list: {
      // Bounded sums of generators.
      const auto& gens = j.generators();
      GroupElement cur = g.zero();
      auto rec = [&](auto&& self, std::size_t idx, const GroupElement& acc) -> void {
        if (idx == gens.size()) {
          probes.push_back(acc);
          return;
        }
        GroupElement running = acc;
        for (int c = 0; c <= radius; ++c) {
          if (c > 0) running = add(g, running, gens[idx]);
          self(self, idx + 1, running);
        }
      };
      rec(rec, 0, cur);
      break;
    }
  }

  for (const auto& t : probes)
    if (!p.eval(t).is_zero()) return true;  // not zero on J, nothing to certify
  return p.is_zero();
}

}  // namespace apc
