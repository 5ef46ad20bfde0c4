#include "stirling.hpp"

#include <mutex>
#include <vector>

namespace apc {

namespace {

struct Triangle {
  std::mutex mutex;
  std::vector<std::vector<Integer>> rows;  // rows[n] has n+1 entries
};

Integer lookup(Triangle& tri, unsigned n, unsigned k, bool first_kind) {
  if (k > n) return 0;
  std::lock_guard<std::mutex> lock(tri.mutex);
  if (tri.rows.empty()) tri.rows.push_back({Integer(1)});
  while (tri.rows.size() <= n) {
    const auto& prev = tri.rows.back();
    const unsigned r = static_cast<unsigned>(tri.rows.size());
    std::vector<Integer> row(r + 1);
    row[0] = 0;
    row[r] = 1;
    for (unsigned j = 1; j < r; ++j) {
      if (first_kind) {
        // s(r, j) = s(r-1, j-1) - (r-1) s(r-1, j)
        row[j] = prev[j - 1] - Integer(static_cast<long>(r - 1)) * prev[j];
      } else {
        // S(r, j) = S(r-1, j-1) + j S(r-1, j)
        row[j] = prev[j - 1] + Integer(static_cast<long>(j)) * prev[j];
      }
    }
    tri.rows.push_back(std::move(row));
  }
  return tri.rows[n][k];
}

}  // namespace

Integer stirling_first(unsigned n, unsigned k) {
  static Triangle tri;
  return lookup(tri, n, k, true);
}

Integer stirling_second(unsigned n, unsigned k) {
  static Triangle tri;
  return lookup(tri, n, k, false);
}

}  // namespace apc
