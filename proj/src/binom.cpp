#include "turan/binom.hpp"

#include <limits>

namespace turan {

std::int64_t binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // r * (n-k+i) is an integer multiple of i (prefix binomials are exact)
        std::int64_t m = n - k + i;
        if (r > std::numeric_limits<std::int64_t>::max() / m)
            throw std::overflow_error("binomial overflow");
        r = r * m / i;
    }
    return r;
}

double binom_real(double x, int k) {
    if (k < 0) return 0.0;
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= (x - i) / (k - i);
    return r;
}

double invert_binom(double m, int k, double hi) {
    if (k < 1) throw std::invalid_argument("invert_binom: k must be positive");
    if (m < 0) throw std::invalid_argument("invert_binom: m must be non-negative");
    double lo = k - 1.0;
    if (binom_real(hi, k) < m) throw std::invalid_argument("invert_binom: upper bracket too small");
    while (hi - lo > 1e-9) {
        double mid = 0.5 * (lo + hi);
        if (binom_real(mid, k) < m)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace turan
