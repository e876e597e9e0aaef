#include "pmaya/hermite.hpp"

#include <deque>
#include <mutex>

namespace pmaya {

namespace {

// sign = -1 for H_n, +1 for the conjugate family.
const Poly& cached_hermite(long n, long sign) {
    if (n < 0) throw std::domain_error("hermite: negative index");
    static std::mutex mu;
    // deque: growing the cache must not invalidate references already handed out
    static std::deque<Poly> h[2];
    std::lock_guard<std::mutex> lock(mu);
    auto& cache = h[sign > 0 ? 1 : 0];
    if (cache.empty()) {
        cache.push_back(Poly(Scalar(1)));
        cache.push_back(Poly::monomial(Scalar(2), 1));
    }
    const Poly two_z = Poly::monomial(Scalar(2), 1);
    while (static_cast<long>(cache.size()) <= n) {
        long m = static_cast<long>(cache.size()) - 1;  // highest cached index
        cache.push_back(two_z * cache[m] + Scalar(sign * 2 * m) * cache[m - 1]);
    }
    return cache[n];
}

}  // namespace

const Poly& hermite(long n) { return cached_hermite(n, -1); }

const Poly& conjugate_hermite(long n) { return cached_hermite(n, +1); }

}  // namespace pmaya
