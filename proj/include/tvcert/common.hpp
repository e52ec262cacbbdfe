#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace tvcert {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Numeric failure with a stable machine-readable code (e.g. "grid_mismatch",
/// "inversion_mass_violation"). The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// Config/schema violation; the CLI maps these to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

inline double sq(double x) { return x * x; }

inline std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

inline std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    if (n == 1) { v[0] = lo; return v; }
    const double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = lo + step * i;
    v.back() = hi;
    return v;
}

/// Log-spaced grid on [lo, hi], lo > 0; first node exactly lo, last exactly hi.
inline std::vector<double> logspace(double lo, double hi, int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    if (n == 1) { v[0] = lo; return v; }
    const double llo = std::log(lo), lhi = std::log(hi);
    const double step = (lhi - llo) / (n - 1);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = std::exp(llo + step * i);
    v.front() = lo;
    v.back() = hi;
    return v;
}

/// Trapezoidal weight of node i on a uniform n-point grid (in units of the cell).
inline double trapezoid_weight(int i, int n) {
    return (i == 0 || i == n - 1) ? 0.5 : 1.0;
}

namespace detail {
double adaptive_simpson_impl(const std::function<double(double)>& f, double a, double b,
                             double fa, double fm, double fb, double whole, double tol, int depth);
}

/// Adaptive Simpson quadrature with absolute tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10, int max_depth = 48);

// ---------------------------------------------------------------------------
// Thread plumbing. Work is split into a fixed number of chunks, independent of
// the thread count, and chunk results are combined in chunk order, so numeric
// output is identical for any --threads value.
// ---------------------------------------------------------------------------

int thread_count();
void set_thread_count(int n);  // n <= 0 selects hardware concurrency

inline constexpr int kReductionChunks = 64;

/// Runs fn(chunk_index, begin, end) over [0, n) split into at most
/// kReductionChunks contiguous chunks. fn must only touch per-chunk state.
void parallel_chunks(std::size_t n, const std::function<void(int, std::size_t, std::size_t)>& fn);

}  // namespace tvcert
