#pragma once

#include "pmaya/poly.hpp"

namespace pmaya {

// Physicists' Hermite polynomial H_n, from the recurrence
//   H_0 = 1,  H_1 = 2z,  H_{n+1} = 2z H_n - 2n H_{n-1}.
// Results are cached; the cache is safe to use from several threads.
const Poly& hermite(long n);

// Conjugate Hermite polynomial h_n = i^{-n} H_n(i z), computed by the real
// recurrence  h_0 = 1,  h_1 = 2z,  h_{n+1} = 2z h_n + 2n h_{n-1}.
// All coefficients are positive, so h_n has no real zeros for even n and
// only z = 0 for odd n.
const Poly& conjugate_hermite(long n);

}  // namespace pmaya
