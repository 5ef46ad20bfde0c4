#include "spaces.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "difference.hpp"

namespace apc {

std::uint64_t dim_pn(const GroupDescriptor& g, int n) {
  if (n < 0) fail(ErrorCode::invalid_argument, "degree must be >= 0");
  const unsigned long vars =
      static_cast<unsigned long>(g.free_rank() + g.formal_real_rank());
  const Integer dim = binomial(static_cast<unsigned long>(n) + vars, vars);
  if (!dim.fits_ulong_p()) fail(ErrorCode::overflow, "dimension does not fit in 64 bits");
  return static_cast<std::uint64_t>(dim.get_ui());
}

std::vector<MonomialForm> monomial_basis(int k, int n) {
  if (k < 0 || n < 0) fail(ErrorCode::invalid_argument, "k and n must be >= 0");
  const GroupDescriptor g(k, {}, 0);
  std::vector<MonomialForm> basis;
  for (const auto& idx : multi_indices_up_to(k, n))
    basis.push_back(MonomialForm::monomial(g, idx));
  return basis;
}

namespace {

// Delta_t^n q for a form: constant in the base point, evaluated at 0.
Scalar top_difference(const NewtonForm& q, const GroupElement& t, int n) {
  return iterated_delta(q.as_function(), t, n, q.group().zero());
}

std::vector<GroupElement> dual_candidates(const GroupDescriptor& g, int n) {
  // The grid {0..n}^k minus the origin: a nonzero polynomial of per-variable
  // degree <= n has a nonzero value somewhere on it.
  std::vector<GroupElement> out;
  const int k = g.free_rank();
  std::vector<std::int64_t> cur(k, 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == k) {
      GroupElement e = g.zero();
      e.free = cur;
      if (e != g.zero()) out.push_back(std::move(e));
      return;
    }
    for (int v = 0; v <= n; ++v) {
      cur[pos] = v;
      self(self, pos + 1);
    }
    cur[pos] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const GroupElement& a, const GroupElement& b) {
    std::int64_t sa = 0, sb = 0;
    for (auto c : a.free) sa += c;
    for (auto c : b.free) sb += c;
    if (sa != sb) return sa < sb;
    return a.free < b.free;
  });
  return out;
}

}  // namespace

DualSystem dual_system(std::vector<NewtonForm> q, int n) {
  if (n < 1) fail(ErrorCode::invalid_argument, "dual systems need n >= 1");
  if (q.empty()) fail(ErrorCode::degenerate_input, "no input forms");
  const GroupDescriptor g = q.front().group();
  for (const auto& form : q) {
    if (form.group() != g) fail(ErrorCode::descriptor_mismatch, "forms on different groups");
    const auto d = form.degree();
    if (!d || *d != n)
      fail(ErrorCode::degenerate_input, "every input form must have exact degree n");
  }

  const auto candidates = dual_candidates(g, n);
  const std::size_t count = q.size();
  std::vector<GroupElement> points;
  points.reserve(count);

  for (std::size_t i = 0; i < count; ++i) {
    std::optional<GroupElement> chosen;
    Scalar pivot;
    for (const auto& t : candidates) {
      const Scalar value = top_difference(q[i], t, n);
      if (!value.is_zero()) {
        chosen = t;
        pivot = value;
        break;
      }
    }
    if (!chosen)
      fail(ErrorCode::degenerate_input,
           "form " + std::to_string(i) + " is dependent modulo lower degree");
    q[i] = q[i].scaled(Scalar(1) / pivot);
    for (std::size_t jj = i + 1; jj < count; ++jj) {
      const Scalar lambda = top_difference(q[jj], *chosen, n);
      if (!lambda.is_zero()) q[jj] -= q[i].scaled(lambda);
    }
    points.push_back(std::move(*chosen));
  }

  // Back-substitution makes the delta property two-sided.
  for (std::size_t i = count; i-- > 1;) {
    for (std::size_t jj = 0; jj < i; ++jj) {
      const Scalar lambda = top_difference(q[jj], points[i], n);
      if (!lambda.is_zero()) q[jj] -= q[i].scaled(lambda);
    }
  }

  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t jj = 0; jj < count; ++jj) {
      const Scalar expected = i == jj ? Scalar(1) : Scalar();
      if (top_difference(q[jj], points[i], n) != expected)
        fail(ErrorCode::internal, "dual system verification failed");
    }

  return DualSystem{std::move(q), std::move(points)};
}

namespace {

// Embed a form on Z^{k1} (offset 0) or Z^{k2} (offset k1) into Z^{k1+k2}.
MonomialForm embed(const MonomialForm& f, int total, int offset) {
  const GroupDescriptor joint(total, {}, 0);
  MonomialForm out(joint);
  for (const auto& [idx, value] : f.coeffs()) {
    std::vector<int> e(total, 0);
    for (int i = 0; i < idx.size(); ++i) e[offset + i] = idx[i];
    out.set_coeff(MultiIndex(std::move(e)), value);
  }
  return out;
}

// Forward difference of a form in a fixed direction, iterated `reps` times.
MonomialForm form_delta(const MonomialForm& f, const GroupElement& step, int reps) {
  MonomialForm out = f;
  for (int r = 0; r < reps; ++r) {
    MonomialForm shifted = out.shifted(step);
    shifted -= out;
    out = std::move(shifted);
  }
  return out;
}

// Keep only monomials with no support on the first k1 variables, projected
// to a form on Z^{k2}. Errors if any mixed term survives.
MonomialForm project_right(const MonomialForm& f, int k1, int k2) {
  const GroupDescriptor right(k2, {}, 0);
  MonomialForm out(right);
  for (const auto& [idx, value] : f.coeffs()) {
    for (int i = 0; i < k1; ++i)
      if (idx[i] != 0)
        fail(ErrorCode::internal, "left-variable dependence survived the difference");
    std::vector<int> e(k2, 0);
    for (int i = 0; i < k2; ++i) e[i] = idx[k1 + i];
    out.set_coeff(MultiIndex(std::move(e)), value);
  }
  return out;
}

}  // namespace

std::vector<TensorTerm> tensor_split(const NewtonForm& p, int k1, int k2, int n) {
  if (k1 < 0 || k2 < 0) fail(ErrorCode::invalid_argument, "split ranks must be >= 0");
  if (p.free_rank() != k1 + k2)
    fail(ErrorCode::descriptor_mismatch, "form rank does not match the requested split");
  if (n < 0 || !degree_at_most(p, n))
    fail(ErrorCode::degree_violation, "form degree exceeds the requested bound");

  const GroupDescriptor left_group(k1, {}, 0);
  const GroupDescriptor joint(k1 + k2, {}, 0);

  MonomialForm remainder = newton_to_monomial(p);
  std::vector<TensorTerm> terms;

  for (int h = n; h >= 1; --h) {
    // Basis of a complement of P^{h-1}(Z^{k1}) in P^h: the exact-order-h
    // monomials, equipped with their dual points.
    std::vector<NewtonForm> basis;
    std::vector<MonomialForm> basis_monomial;
    for (const auto& idx : multi_indices_up_to(k1, h)) {
      if (idx.order() != h) continue;
      MonomialForm mono = MonomialForm::monomial(left_group, idx);
      basis.push_back(monomial_to_newton(mono));
      basis_monomial.push_back(std::move(mono));
    }
    if (basis.empty()) continue;  // k1 == 0: only the constant layer exists
    DualSystem dual = dual_system(std::move(basis), h);

    for (std::size_t i = 0; i < dual.forms.size(); ++i) {
      GroupElement joint_step = joint.zero();
      for (int c = 0; c < k1; ++c) joint_step.free[c] = dual.points[i].free[c];
      const MonomialForm diff = form_delta(remainder, joint_step, h);
      const MonomialForm right = project_right(diff, k1, k2);
      if (right.is_zero()) continue;
      if (right.degree().value_or(0) > n - h)
        fail(ErrorCode::internal, "right factor exceeds its degree bound");
      const MonomialForm left = newton_to_monomial(dual.forms[i]);
      remainder -= embed(left, k1 + k2, 0).multiplied(embed(right, k1 + k2, k1));
      terms.push_back(TensorTerm{h, left, right});
    }
  }

  // Degree-zero layer: whatever remains is constant in the left variables.
  const MonomialForm rest = project_right(remainder, k1, k2);
  if (!rest.is_zero()) {
    terms.push_back(TensorTerm{
        0, MonomialForm::constant(left_group, Scalar(1)), rest});
  }

  if (tensor_expand(terms, k1, k2) != newton_to_monomial(p))
    fail(ErrorCode::internal, "tensor decomposition does not re-expand to the input");
  return terms;
}

MonomialForm tensor_expand(const std::vector<TensorTerm>& terms, int k1, int k2) {
  const GroupDescriptor joint(k1 + k2, {}, 0);
  MonomialForm out(joint);
  for (const auto& term : terms)
    out += embed(term.left, k1 + k2, 0).multiplied(embed(term.right, k1 + k2, k1));
  return out;
}

namespace {

void for_each_multiset(int num_dirs, int order,
                       const std::function<void(const std::vector<int>&)>& visit) {
  if (num_dirs == 0) return;
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
  rec(rec, 0, order);
}

TorsionConstancyReport base_torsion_report(const GroupDescriptor& g, int n) {
  if (!g.pure_torsion())
    fail(ErrorCode::invalid_argument, "constancy certificate needs a pure torsion group");
  if (n < 0) fail(ErrorCode::invalid_argument, "degree must be >= 0");

  const auto elements = enumerate_group(g);
  const auto gens = group_generators(g);
  std::map<GroupElement, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = i;

  // One row per (direction multiset, base point): the linear constraint
  // "this order-(n+1) mixed difference of f vanishes".
  Matrix<Rational> constraints;
  for_each_multiset(static_cast<int>(gens.size()), n + 1, [&](const std::vector<int>& mult) {
    std::vector<std::pair<GroupElement, int>> steps;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (mult[i] > 0) steps.emplace_back(gens[i], mult[i]);
    for (const auto& base : elements) {
      std::vector<Rational> row(elements.size(), Rational(0));
      auto expand = [&](auto&& self, std::size_t idx, const GroupElement& point,
                        const Integer& coeff) -> void {
        if (idx == steps.size()) {
          row[index.at(point)] += Rational(coeff);
          return;
        }
        const auto& [h, m] = steps[idx];
        GroupElement p = point;
        for (int jj = 0; jj <= m; ++jj) {
          if (jj > 0) p = add(g, p, h);
          Integer c = coeff * binomial(m, jj);
          if ((m - jj) % 2 != 0) c = -c;
          self(self, idx + 1, p, c);
        }
      };
      expand(expand, 0, base, Integer(1));
      constraints.push_back(std::move(row));
    }
  });

  TorsionConstancyReport report;
  report.n = n;
  report.group_order = g.torsion_size();
  report.constraints = constraints.size();
  report.nullspace_dim = constraints.empty() ? elements.size() : nullity(constraints);
  report.certified = report.nullspace_dim == 1;
  return report;
}

}  // namespace

TorsionConstancyReport torsion_constancy_check(const GroupDescriptor& g, int n) {
  return base_torsion_report(g, n);
}

TorsionConstancyReport torsion_constancy_check(const GroupDescriptor& g, int n,
                                               const GroupFunction& f) {
  TorsionConstancyReport report = base_torsion_report(g, n);
  if (f.group() != g) fail(ErrorCode::descriptor_mismatch, "function on a different group");

  const auto elements = enumerate_group(g);
  bool constant = true;
  const Scalar first = f(elements.front());
  for (const auto& e : elements)
    if (f(e) != first) constant = false;
  if (constant) return report;

  const auto gens = group_generators(g);
  std::optional<DifferenceWitness> witness;
  for_each_multiset(static_cast<int>(gens.size()), n + 1, [&](const std::vector<int>& mult) {
    if (witness) return;
    std::vector<std::pair<GroupElement, int>> steps;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (mult[i] > 0) steps.emplace_back(gens[i], mult[i]);
    for (const auto& base : elements) {
      const Scalar value = mixed_delta(f, steps, base);
      if (!value.is_zero()) {
        witness = DifferenceWitness{steps, base, value};
        return;
      }
    }
  });
  if (!witness)
    fail(ErrorCode::internal, "non-constant table with no witness difference");
  report.witness = std::move(witness);
  return report;
}

bool h0_constancy_check(const GroupFunction& f, int probe_radius) {
  const GroupDescriptor& g = f.group();
  if (probe_radius < 0) fail(ErrorCode::invalid_argument, "probe radius must be >= 0");
  for (const auto& t : probe_box(g, probe_radius)) {
    GroupElement rep = t;
    std::fill(rep.torsion.begin(), rep.torsion.end(), 0);
    if (f(t) != f(rep)) return false;
  }
  return true;
}

bool h0_constancy_check(const NewtonForm& p, int probe_radius) {
  return h0_constancy_check(p.as_function(), probe_radius);
}

InfiniteDimCertificate infinite_dim_certificate(int n) {
  if (n < 1) fail(ErrorCode::invalid_argument, "certificate size must be >= 1");
  const GroupDescriptor g(n, {}, 0);

  std::vector<GroupFunction> evals;
  for (int i = 0; i < n; ++i)
    evals.emplace_back(g, [i](const GroupElement& s) {
      return Scalar(Integer(static_cast<long>(s.free[i])));
    });

  InfiniteDimCertificate cert;
  cert.n = n;
  for (int jj = 0; jj < n; ++jj) {
    GroupElement delta_seq = g.zero();
    delta_seq.free[jj] = 1;
    cert.witness_points.push_back(std::move(delta_seq));
  }
  cert.evaluation.assign(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj) {
      const Scalar v = evals[i](cert.witness_points[jj]);
      if (!v.is_real()) fail(ErrorCode::internal, "coordinate evaluation must be real");
      cert.evaluation[i][jj] = v.re;
    }
  cert.rank = rank(cert.evaluation);

  // Sampled degree-1 and additivity checks; deterministic generator.
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  auto next_coord = [&state]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<std::int64_t>((state >> 33) % 7) - 3;
  };
  auto random_point = [&]() {
    GroupElement e = g.zero();
    for (auto& c : e.free) c = next_coord();
    return e;
  };

  cert.degree1_certified = true;
  cert.additive_certified = true;
  for (int i = 0; i < n; ++i) {
    if (!evals[i](g.zero()).is_zero()) cert.additive_certified = false;
    for (int trial = 0; trial < 20; ++trial) {
      const GroupElement a = random_point();
      const GroupElement b = random_point();
      const GroupElement t = random_point();
      if (evals[i](add(g, a, b)) != evals[i](a) + evals[i](b))
        cert.additive_certified = false;
      if (!mixed_delta(evals[i], {{a, 1}, {b, 1}}, t).is_zero())
        cert.degree1_certified = false;
    }
  }
  return cert;
}

RestrictionDimReport restriction_dim_check(int k, int sublattice_scale, int n) {
  if (k < 0 || n < 0) fail(ErrorCode::invalid_argument, "k and n must be >= 0");
  if (sublattice_scale < 1)
    fail(ErrorCode::invalid_argument, "sublattice scale must be >= 1");

  const GroupDescriptor g(k, {}, 0);
  const auto basis = monomial_basis(k, n);

  RestrictionDimReport report;
  report.dim = dim_pn(g, n);

  // Sample points m * [0, n]^k of the sublattice; enough to separate any
  // polynomial of per-variable degree <= n.
  std::vector<GroupElement> samples;
  std::vector<std::int64_t> cur(k, 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == k) {
      GroupElement e = g.zero();
      e.free = cur;
      for (auto& c : e.free) c *= sublattice_scale;
      samples.push_back(std::move(e));
      return;
    }
    for (int v = 0; v <= n; ++v) {
      cur[pos] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);

  Matrix<Rational> evaluation(samples.size(), std::vector<Rational>(basis.size(), Rational(0)));
  for (std::size_t r = 0; r < samples.size(); ++r)
    for (std::size_t c = 0; c < basis.size(); ++c) {
      const Scalar v = basis[c].eval(samples[r]);
      evaluation[r][c] = v.re;
    }
  report.rank_restriction = rank(evaluation);

  // The scaled family q_j(t) = p_j(m t): coefficient matrix over the
  // monomials of degree <= n.
  const auto indices = multi_indices_up_to(k, n);
  std::map<MultiIndex, std::size_t, GrlexLess> column;
  for (std::size_t i = 0; i < indices.size(); ++i) column[indices[i]] = i;
  Matrix<Rational> coeff_rows;
  for (const auto& p : basis) {
    const MonomialForm q = p.arg_scaled(sublattice_scale);
    std::vector<Rational> row(indices.size(), Rational(0));
    for (const auto& [idx, value] : q.coeffs()) row[column.at(idx)] = value.re;
    coeff_rows.push_back(std::move(row));
  }
  report.rank_scaled_family = rank(coeff_rows);

  report.ok = report.rank_restriction == report.dim &&
              report.rank_scaled_family == report.dim;
  return report;
}

}  // namespace apc
