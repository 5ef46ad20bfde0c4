#include "group.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace apc {

namespace {

std::int64_t mod_floor(std::int64_t value, std::int64_t modulus) {
  std::int64_t r = value % modulus;
  return r < 0 ? r + modulus : r;
}

}  // namespace

GroupDescriptor::GroupDescriptor(int free_rank, std::vector<std::int64_t> torsion_orders,
                                 int formal_real_rank)
    : free_rank_(free_rank),
      torsion_orders_(std::move(torsion_orders)),
      formal_real_rank_(formal_real_rank) {
  if (free_rank_ < 0) fail(ErrorCode::invalid_descriptor, "free_rank must be >= 0");
  if (formal_real_rank_ < 0) fail(ErrorCode::invalid_descriptor, "formal_real_rank must be >= 0");
  for (std::int64_t d : torsion_orders_) {
    if (d < 2) fail(ErrorCode::invalid_descriptor, "torsion orders must be >= 2");
  }
}

std::uint64_t GroupDescriptor::torsion_size() const {
  std::uint64_t n = 1;
  for (std::int64_t d : torsion_orders_) n *= static_cast<std::uint64_t>(d);
  return n;
}

GroupElement GroupDescriptor::zero() const {
  return element(std::vector<std::int64_t>(free_rank_, 0),
                 std::vector<std::int64_t>(torsion_orders_.size(), 0));
}

GroupElement GroupDescriptor::element(std::vector<std::int64_t> free,
                                      std::vector<std::int64_t> torsion) const {
  if (!discrete())
    fail(ErrorCode::invalid_descriptor,
         "descriptor with formal_real_rank > 0 does not admit elements");
  if (static_cast<int>(free.size()) != free_rank_ ||
      torsion.size() != torsion_orders_.size())
    fail(ErrorCode::descriptor_mismatch, "element shape does not match descriptor");
  for (std::size_t i = 0; i < torsion.size(); ++i)
    torsion[i] = mod_floor(torsion[i], torsion_orders_[i]);
  return GroupElement{std::move(free), std::move(torsion)};
}

void GroupDescriptor::check_element(const GroupElement& e) const {
  if (!discrete())
    fail(ErrorCode::invalid_descriptor,
         "descriptor with formal_real_rank > 0 does not admit elements");
  if (static_cast<int>(e.free.size()) != free_rank_ ||
      e.torsion.size() != torsion_orders_.size())
    fail(ErrorCode::descriptor_mismatch, "element shape does not match descriptor");
  for (std::size_t i = 0; i < e.torsion.size(); ++i)
    if (e.torsion[i] < 0 || e.torsion[i] >= torsion_orders_[i])
      fail(ErrorCode::descriptor_mismatch, "torsion coordinate out of range");
}

std::string to_string(const GroupElement& e) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < e.free.size(); ++i) {
    if (i) os << ",";
    os << e.free[i];
  }
  if (!e.torsion.empty()) {
    os << ";";
    for (std::size_t i = 0; i < e.torsion.size(); ++i) {
      if (i) os << ",";
      os << e.torsion[i];
    }
  }
  os << ")";
  return os.str();
}

GroupElement add(const GroupDescriptor& g, const GroupElement& a, const GroupElement& b) {
  g.check_element(a);
  g.check_element(b);
  GroupElement out = a;
  for (int i = 0; i < g.free_rank(); ++i) out.free[i] += b.free[i];
  for (std::size_t i = 0; i < out.torsion.size(); ++i)
    out.torsion[i] = mod_floor(out.torsion[i] + b.torsion[i], g.torsion_orders()[i]);
  return out;
}

GroupElement negate(const GroupDescriptor& g, const GroupElement& a) {
  g.check_element(a);
  GroupElement out = a;
  for (auto& c : out.free) c = -c;
  for (std::size_t i = 0; i < out.torsion.size(); ++i)
    out.torsion[i] = mod_floor(-out.torsion[i], g.torsion_orders()[i]);
  return out;
}

GroupElement sub(const GroupDescriptor& g, const GroupElement& a, const GroupElement& b) {
  return add(g, a, negate(g, b));
}

GroupElement scalar_mul(const GroupDescriptor& g, std::int64_t m, const GroupElement& a) {
  g.check_element(a);
  GroupElement out = a;
  for (auto& c : out.free) c *= m;
  for (std::size_t i = 0; i < out.torsion.size(); ++i) {
    const std::int64_t d = g.torsion_orders()[i];
    out.torsion[i] = mod_floor(mod_floor(m, d) * out.torsion[i], d);
  }
  return out;
}

std::vector<GroupElement> group_generators(const GroupDescriptor& g) {
  std::vector<GroupElement> gens;
  for (int i = 0; i < g.free_rank(); ++i) {
    GroupElement e = g.zero();
    e.free[i] = 1;
    gens.push_back(std::move(e));
  }
  for (int i = 0; i < g.torsion_rank(); ++i) {
    GroupElement e = g.zero();
    e.torsion[i] = 1;
    gens.push_back(std::move(e));
  }
  return gens;
}

std::vector<GroupElement> probe_box(const GroupDescriptor& g, int radius) {
  if (radius < 0) fail(ErrorCode::invalid_argument, "probe radius must be >= 0");
  std::vector<GroupElement> points;
  GroupElement cur = g.zero();
  // Odometer over free coords in [-radius, radius] and full torsion ranges.
  auto emit = [&](auto&& self, std::size_t dim) -> void {
    const std::size_t k = cur.free.size();
    if (dim == k + cur.torsion.size()) {
      points.push_back(cur);
      return;
    }
    if (dim < k) {
      for (std::int64_t v = -radius; v <= radius; ++v) {
        cur.free[dim] = v;
        self(self, dim + 1);
      }
      cur.free[dim] = 0;
    } else {
      const std::size_t t = dim - k;
      for (std::int64_t v = 0; v < g.torsion_orders()[t]; ++v) {
        cur.torsion[t] = v;
        self(self, dim + 1);
      }
      cur.torsion[t] = 0;
    }
  };
  emit(emit, 0);
  return points;
}

std::vector<GroupElement> enumerate_group(const GroupDescriptor& g) {
  if (g.free_rank() != 0 || !g.discrete())
    fail(ErrorCode::invalid_argument, "only finite groups can be enumerated");
  return probe_box(g, 0);
}

const char* semigroup_kind_name(SemigroupKind k) {
  switch (k) {
    case SemigroupKind::full_group: return "full_group";
    case SemigroupKind::standard_orthant: return "standard_orthant";
    case SemigroupKind::generator_list: return "generator_list";
  }
  return "full_group";
}

SemigroupDescriptor::SemigroupDescriptor(GroupDescriptor ambient, SemigroupKind kind,
                                         std::vector<GroupElement> generators)
    : ambient_(std::move(ambient)), kind_(kind), generators_(std::move(generators)) {
  if (!ambient_.discrete())
    fail(ErrorCode::invalid_descriptor, "semigroups live in discrete groups");
  if (kind_ != SemigroupKind::generator_list && !generators_.empty())
    fail(ErrorCode::invalid_descriptor, "generators only apply to generator_list semigroups");
  for (const auto& gen : generators_) ambient_.check_element(gen);
}

bool SemigroupDescriptor::contains(const GroupElement& t) const {
  ambient_.check_element(t);
  switch (kind_) {
    case SemigroupKind::full_group:
      return true;
    case SemigroupKind::standard_orthant:
      return std::all_of(t.free.begin(), t.free.end(),
                         [](std::int64_t c) { return c >= 0; });
    case SemigroupKind::generator_list:
      break;
  }
  if (t == ambient_.zero()) return true;  // the empty sum
  if (generators_.empty()) return false;

  std::int64_t max_coord = 0;
  for (std::int64_t c : t.free) max_coord = std::max(max_coord, std::abs(c));
  for (std::int64_t c : t.torsion) max_coord = std::max(max_coord, c);
  const std::int64_t bound =
      1 + max_coord * static_cast<std::int64_t>(generators_.size());

  // Exhaustive search over coefficient vectors in [0, bound]^g.
  auto search = [&](auto&& self, std::size_t idx, const GroupElement& partial) -> bool {
    if (idx == generators_.size()) return partial == t;
    GroupElement running = partial;
    for (std::int64_t c = 0; c <= bound; ++c) {
      if (c > 0) running = add(ambient_, running, generators_[idx]);
      if (self(self, idx + 1, running)) return true;
    }
    return false;
  };
  if (search(search, 0, ambient_.zero())) return true;
  fail(ErrorCode::search_bound_exceeded,
       "membership of " + to_string(t) + " undecided within coefficient bound " +
           std::to_string(bound));
}

OrthantDecomposition orthant_decompose(const SemigroupDescriptor& j, const GroupElement& t) {
  if (j.kind() != SemigroupKind::standard_orthant)
    fail(ErrorCode::invalid_argument, "orthant decomposition needs a standard_orthant semigroup");
  j.ambient().check_element(t);
  GroupElement u = t;
  GroupElement v = j.ambient().zero();
  for (std::size_t i = 0; i < u.free.size(); ++i) {
    if (u.free[i] < 0) {
      v.free[i] = -u.free[i];
      u.free[i] = 0;
    }
  }
  return OrthantDecomposition{std::move(u), std::move(v)};
}

bool H0Subgroup::contains(const GroupElement& t) const {
  ambient_.check_element(t);
  return std::all_of(t.free.begin(), t.free.end(),
                     [](std::int64_t c) { return c == 0; });
}

GroupDescriptor H0Subgroup::as_group() const {
  return GroupDescriptor(0, ambient_.torsion_orders(), 0);
}

H0Subgroup h0_subgroup(const GroupDescriptor& g) {
  if (!g.discrete()) fail(ErrorCode::invalid_argument, "h0_subgroup needs a discrete group");
  return H0Subgroup(g);
}

GroupDescriptor h0_quotient(const GroupDescriptor& g) {
  if (!g.discrete()) fail(ErrorCode::invalid_argument, "h0_quotient needs a discrete group");
  return GroupDescriptor(g.free_rank(), {}, 0);
}

GroupElement project_mod_h0(const GroupDescriptor& g, const GroupElement& t) {
  g.check_element(t);
  return GroupElement{t.free, {}};
}

}  // namespace apc
