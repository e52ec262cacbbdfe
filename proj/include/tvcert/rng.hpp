#pragma once

#include <cmath>
#include <cstdint>

#include "tvcert/common.hpp"

namespace tvcert {

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}
}  // namespace detail

/// Counter-based RNG stream keyed by (seed, stream, substream). Output k of a
/// stream is a pure function of the key and k, so draws are reproducible under
/// any parallel partitioning of streams. SplitMix64 output function.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream = 0, std::uint64_t substream = 0) {
        std::uint64_t k = detail::mix64(seed);
        k = detail::mix64(k ^ (0x9e3779b97f4a7c15ULL + stream));
        k = detail::mix64(k ^ (0xc2b2ae3d27d4eb4fULL + substream));
        key_ = k;
    }

    std::uint64_t next_u64() { return detail::mix64(key_ + 0x9e3779b97f4a7c15ULL * (++ctr_)); }

    /// Uniform on (0,1); never returns exactly 0 or 1.
    double next_uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; second value of each pair is cached.
    double next_normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        const double u1 = next_uniform();
        const double u2 = next_uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        cached_ = r * std::sin(kTwoPi * u2);
        have_cached_ = true;
        return r * std::cos(kTwoPi * u2);
    }

    /// Zero-mean Laplace with parameter lambda (density lambda*exp(-lambda|x|)/2).
    double next_laplace(double lambda) {
        const double u = next_uniform();
        const double x = (u < 0.5) ? std::log(2.0 * u) : -std::log(2.0 * (1.0 - u));
        return x / lambda;
    }

    double next_exponential(double rate) { return -std::log(next_uniform()) / rate; }

private:
    std::uint64_t key_ = 0;
    std::uint64_t ctr_ = 0;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

}  // namespace tvcert
