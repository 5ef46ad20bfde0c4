#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "group.hpp"
#include "scalar.hpp"

namespace apc {

// Evaluation oracle from group elements to scalars; the ambient function
// space C(J). Oracles must be deterministic and safe for concurrent
// evaluation.
class GroupFunction {
 public:
  using Rule = std::function<Scalar(const GroupElement&)>;

  GroupFunction(GroupDescriptor group, Rule rule)
      : group_(std::move(group)), rule_(std::move(rule)) {}

  const GroupDescriptor& group() const { return group_; }

  Scalar operator()(const GroupElement& t) const {
    group_.check_element(t);
    return rule_(t);
  }

  static GroupFunction constant(const GroupDescriptor& g, Scalar value) {
    return GroupFunction(g, [value](const GroupElement&) { return value; });
  }

 private:
  GroupDescriptor group_;
  Rule rule_;
};

// Caching wrapper. Oracles are deterministic by contract, so probe loops
// that revisit points (degree tests, difference sampling) may share values.
inline GroupFunction memoized(const GroupFunction& f) {
  struct Cache {
    std::mutex mutex;
    std::map<GroupElement, Scalar> values;
  };
  auto cache = std::make_shared<Cache>();
  return GroupFunction(f.group(), [f, cache](const GroupElement& t) {
    {
      std::lock_guard<std::mutex> lock(cache->mutex);
      if (auto it = cache->values.find(t); it != cache->values.end()) return it->second;
    }
    Scalar value = f(t);
    std::lock_guard<std::mutex> lock(cache->mutex);
    cache->values.emplace(t, value);
    return value;
  });
}

// Finite table of (element, value) pairs wrapped as an oracle. Evaluation
// outside the table is a malformed_input error: tables declare their domain.
inline GroupFunction table_function(const GroupDescriptor& g,
                                    std::vector<std::pair<GroupElement, Scalar>> entries) {
  auto table = std::make_shared<std::map<GroupElement, Scalar>>();
  for (auto& [e, v] : entries) {
    g.check_element(e);
    (*table)[e] = v;
  }
  return GroupFunction(g, [table](const GroupElement& t) {
    auto it = table->find(t);
    if (it == table->end())
      fail(ErrorCode::malformed_input, "function table has no entry at " + to_string(t));
    return it->second;
  });
}

}  // namespace apc
