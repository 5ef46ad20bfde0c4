#pragma once

#include "scalar.hpp"

namespace apc {

// Signed Stirling numbers of the first kind:
//   x(x-1)...(x-n+1) = sum_k s(n,k) x^k.
// Computed by the standard recurrence, cached per process; the cache is
// guarded for concurrent growth.
Integer stirling_first(unsigned n, unsigned k);

// Stirling numbers of the second kind:
//   x^n = sum_k S(n,k) x(x-1)...(x-k+1).
Integer stirling_second(unsigned n, unsigned k);

}  // namespace apc
