#pragma once

#include <cstdint>
#include <stdexcept>

namespace turan {

// Exact C(n, k); 0 for k < 0 or k > n. Throws on int64 overflow.
std::int64_t binom(std::int64_t n, std::int64_t k);

// Generalized binomial x(x-1)...(x-k+1)/k! for real x.
double binom_real(double x, int k);

// The unique real x >= k-1 with binom_real(x, k) == m, by bisection to
// tolerance 1e-9 on x. Requires m >= 0 and hi large enough to bracket.
double invert_binom(double m, int k, double hi);

}  // namespace turan
