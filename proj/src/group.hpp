#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"

namespace apc {

struct GroupElement;

// A finitely generated abelian group Z^k x Z_{d1} x ... x Z_{dr}, plus a
// formal real rank m that only dimension formulas consume. Descriptors with
// m > 0 reject element construction: elements live in the discrete part.
class GroupDescriptor {
 public:
  GroupDescriptor() = default;
  GroupDescriptor(int free_rank, std::vector<std::int64_t> torsion_orders,
                  int formal_real_rank = 0);

  int free_rank() const { return free_rank_; }
  const std::vector<std::int64_t>& torsion_orders() const { return torsion_orders_; }
  int formal_real_rank() const { return formal_real_rank_; }
  int torsion_rank() const { return static_cast<int>(torsion_orders_.size()); }

  bool discrete() const { return formal_real_rank_ == 0; }
  bool pure_torsion() const { return free_rank_ == 0 && formal_real_rank_ == 0; }

  // Order of the torsion part.
  std::uint64_t torsion_size() const;

  GroupElement zero() const;
  GroupElement element(std::vector<std::int64_t> free,
                       std::vector<std::int64_t> torsion) const;

  // Throws descriptor_mismatch unless e has this descriptor's shape with
  // reduced torsion coordinates.
  void check_element(const GroupElement& e) const;

  friend bool operator==(const GroupDescriptor& a, const GroupDescriptor& b) {
    return a.free_rank_ == b.free_rank_ && a.torsion_orders_ == b.torsion_orders_ &&
           a.formal_real_rank_ == b.formal_real_rank_;
  }
  friend bool operator!=(const GroupDescriptor& a, const GroupDescriptor& b) {
    return !(a == b);
  }

 private:
  int free_rank_ = 0;
  std::vector<std::int64_t> torsion_orders_;
  int formal_real_rank_ = 0;
};

struct GroupElement {
  std::vector<std::int64_t> free;
  std::vector<std::int64_t> torsion;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.free == b.free && a.torsion == b.torsion;
  }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }
  // Lexicographic; only used as an ordered-container key.
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    if (a.free != b.free) return a.free < b.free;
    return a.torsion < b.torsion;
  }
};

std::string to_string(const GroupElement& e);

GroupElement add(const GroupDescriptor& g, const GroupElement& a, const GroupElement& b);
GroupElement negate(const GroupDescriptor& g, const GroupElement& a);
GroupElement sub(const GroupDescriptor& g, const GroupElement& a, const GroupElement& b);
GroupElement scalar_mul(const GroupDescriptor& g, std::int64_t m, const GroupElement& a);

// Unit free vectors followed by unit torsion residues: the probe directions
// for difference operators.
std::vector<GroupElement> group_generators(const GroupDescriptor& g);

// Free coordinates over [-radius, radius], torsion coordinates over their
// full ranges.
std::vector<GroupElement> probe_box(const GroupDescriptor& g, int radius);

// All elements of a finite group.
std::vector<GroupElement> enumerate_group(const GroupDescriptor& g);

enum class SemigroupKind { full_group, standard_orthant, generator_list };

const char* semigroup_kind_name(SemigroupKind k);

// A subsemigroup J of a discrete group with G = J - J in the orthant and
// full-group cases; generator lists describe J as all finite non-negative
// combinations of the generators.
class SemigroupDescriptor {
 public:
  SemigroupDescriptor(GroupDescriptor ambient, SemigroupKind kind,
                      std::vector<GroupElement> generators = {});

  const GroupDescriptor& ambient() const { return ambient_; }
  SemigroupKind kind() const { return kind_; }
  const std::vector<GroupElement>& generators() const { return generators_; }

  // true iff t in J. For generator lists the search is bounded by
  // 1 + max|coordinate of t| * #generators per coefficient; when nothing is
  // found within the bound the result is a search_bound_exceeded error,
  // never a silent false.
  bool contains(const GroupElement& t) const;

  friend bool operator==(const SemigroupDescriptor& a, const SemigroupDescriptor& b) {
    return a.ambient_ == b.ambient_ && a.kind_ == b.kind_ && a.generators_ == b.generators_;
  }

 private:
  GroupDescriptor ambient_;
  SemigroupKind kind_;
  std::vector<GroupElement> generators_;
};

struct OrthantDecomposition {
  GroupElement u;
  GroupElement v;
};

// t = u - v with u, v in the standard orthant: u takes the positive free
// part and t's torsion, v the negative free part and zero torsion.
OrthantDecomposition orthant_decompose(const SemigroupDescriptor& j, const GroupElement& t);

// H_0 = common kernel of all homomorphisms G -> R; for Z^k x F this is the
// torsion part {0} x F.
class H0Subgroup {
 public:
  explicit H0Subgroup(GroupDescriptor ambient) : ambient_(std::move(ambient)) {}

  const GroupDescriptor& ambient() const { return ambient_; }
  // Members are exactly the elements with zero free part.
  bool contains(const GroupElement& t) const;
  // H_0 as a group in its own right (pure torsion).
  GroupDescriptor as_group() const;

 private:
  GroupDescriptor ambient_;
};

H0Subgroup h0_subgroup(const GroupDescriptor& g);

// G/H_0 represented as the free part Z^k.
GroupDescriptor h0_quotient(const GroupDescriptor& g);
GroupElement project_mod_h0(const GroupDescriptor& g, const GroupElement& t);

}  // namespace apc
