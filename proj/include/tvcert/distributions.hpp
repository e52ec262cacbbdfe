#pragma once

#include <array>
#include <complex>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tvcert/common.hpp"
#include "tvcert/rng.hpp"

namespace tvcert {

// ---------------------------------------------------------------------------
// Grid densities: density values on a uniform box grid, the common currency
// for exact metric computation. Nodes include both box endpoints.
// ---------------------------------------------------------------------------
struct GridDensity {
    int dim = 1;
    std::array<double, 2> lo{0.0, 0.0};
    std::array<double, 2> hi{0.0, 0.0};
    std::array<int, 2> npts{0, 1};  // npts[1] == 1 when dim == 1
    std::vector<double> values;     // row-major, size npts[0]*npts[1]
    double mass_tol = 1e-4;

    double step(int axis) const { return (hi[axis] - lo[axis]) / (npts[axis] - 1); }
    double cell_volume() const { return dim == 1 ? step(0) : step(0) * step(1); }
    double node(int axis, int idx) const { return lo[axis] + step(axis) * idx; }
    std::size_t size() const { return values.size(); }
    bool same_grid(const GridDensity& o) const;

    /// Trapezoidal integral of the stored values over the box.
    double mass() const;
    /// Trapezoidal weight (product over axes) of the flat node index.
    double quad_weight(std::size_t flat) const;

    static GridDensity load_csv(const std::string& path);
    void save_csv(const std::string& path) const;
};

// ---------------------------------------------------------------------------
// Certified regularity data: |phi(u)| <= c_phi (1+|u|)^{-dim-gamma} on the
// audited range, and E|X|^delta <= c_f.
// ---------------------------------------------------------------------------
struct TailEnvelope {
    double c_phi = 0.0;
    double gamma = 0.0;
    int dim = 1;
    double u_max_checked = 0.0;
    bool certified = false;

    double value(double abs_u) const {
        return c_phi * std::pow(1.0 + abs_u, -static_cast<double>(dim) - gamma);
    }
    /// (2pi)^{-d} * c_phi * a_d * U^{-gamma} / gamma: bound on the inversion
    /// error from truncating the Fourier integral at |u| > U.
    double truncation_bound(double u_cutoff) const;
};

struct MomentBound {
    double c_f = 0.0;
    double delta = 0.0;
};

// ---------------------------------------------------------------------------
// Analytic distribution families, d in {1,2}.
// ---------------------------------------------------------------------------
struct Gaussian {
    std::vector<double> mean;  // length d
    std::vector<double> cov;   // row-major d x d, SPD
};
struct Laplace {
    double lambda = 1.0;  // per-coordinate, density lambda e^{-lambda|x|}/2
    int dim = 1;
};
struct LaplaceMixture {
    int K = 100;  // truncation order; weights 6/(k^2 pi^2) renormalized
    int dim = 1;
};
struct Uniform {
    std::vector<double> a, b;  // box, a < b coordinatewise
};
struct UniformSmoothed {  // uniform[a,b] convolved with N(0, sigma^2), d = 1
    double a = 0.0, b = 1.0, sigma = 0.1;
};
struct PointMass {
    std::vector<double> x;
};
struct GridLaw {
    GridDensity grid;
};

using DistSpec =
    std::variant<Gaussian, Laplace, LaplaceMixture, Uniform, UniformSmoothed, PointMass, GridLaw>;

int dim(const DistSpec& spec);
void validate(const DistSpec& spec);  // throws ConfigError naming the offending field

/// Renormalized mixture weights w_k ~ 6/(k^2 pi^2), k = 1..K, summing to 1.
std::vector<double> mixture_weights(int K);
/// Variance of one coordinate of the truncated mixture: sum_k w_k * 2/k^2.
double mixture_sigma2(int K);
/// Tail weight dropped by the truncation: sum_{k>K} 6/(k^2 pi^2).
double mixture_truncation_weight(int K);

// ---------------------------------------------------------------------------
// Characteristic functions as evaluable objects.
// ---------------------------------------------------------------------------
struct CharFn {
    enum class Provenance { analytic, empirical, power_scaled, product };

    int dim = 1;
    Provenance provenance = Provenance::analytic;
    std::size_t sample_count = 0;  // empirical only
    std::function<std::complex<double>(std::span<const double>)> eval;

    std::complex<double> operator()(std::span<const double> u) const { return eval(u); }
    std::complex<double> operator()(double u) const {
        return eval(std::span<const double>(&u, 1));
    }
};

CharFn make_cf(const DistSpec& spec);
/// phi(u/sqrt(n))^n via log-polar exponentiation, stable for large n.
CharFn power_scaled_cf(const CharFn& base, long n);
CharFn product_cf(const CharFn& a, const CharFn& b);
/// Empirical CF of stored samples (row-major n x d).
CharFn empirical_cf_fn(std::shared_ptr<const std::vector<double>> samples, int dim);

std::complex<double> cf_eval(const DistSpec& spec, std::span<const double> u);
std::complex<double> cf_eval(const DistSpec& spec, double u);  // d = 1

/// (1/N) sum_j e^{i<u, x_j>}; samples row-major N x d. Throws "empty_samples".
std::complex<double> empirical_cf(std::span<const double> samples, int dim,
                                  std::span<const double> u);

// ---------------------------------------------------------------------------
// Closed-form densities / CDFs / moments for the analytic families.
// ---------------------------------------------------------------------------
double density(const DistSpec& spec, std::span<const double> x);
double density1(const DistSpec& spec, double x);
/// CDF, d = 1 families only.
double cdf1(const DistSpec& spec, double x);
/// E|X| (exact for d = 1 families; certified upper bound for d = 2).
double mean_abs(const DistSpec& spec);
/// Range [lo, hi] outside which the law carries mass <= eps per tail.
std::array<double, 2> support_range(const DistSpec& spec, double eps = 1e-14);

/// c_f >= E|X|^delta. Closed forms where available, else deterministic
/// quadrature on the closed-form density (result inflated by the tolerance).
MomentBound moment_bound(const DistSpec& spec, double delta);
/// Empirical moment bound: mean(|x|^delta) + 3 * sd/sqrt(N).
MomentBound moment_bound_empirical(std::span<const double> samples, int dim, double delta);

// ---------------------------------------------------------------------------
// Tail envelope fitting: least squares on log|phi| vs log(1+|u|) over a
// log-spaced audit grid, then c_phi inflated until the pointwise inequality
// holds at every audit node.
// ---------------------------------------------------------------------------
TailEnvelope fit_tail_envelope(const CharFn& cf, int dim, double u_lo, double u_hi,
                               double gamma_cap = 50.0, int audit_points = 512);

// ---------------------------------------------------------------------------
// Sampling. Deterministic given (seed, stream): sample i uses the counter
// stream (seed, stream, i), so batches are identical under any chunking.
// ---------------------------------------------------------------------------
class DistSampler {
public:
    explicit DistSampler(const DistSpec& spec);
    int dim() const { return dim_; }
    /// One draw into out[0..dim); consumes only the given stream.
    void draw(RngStream& rng, double* out) const;

private:
    DistSpec spec_;
    int dim_ = 1;
    std::array<double, 3> chol_{};       // gaussian: L11, L21, L22
    std::vector<double> mix_cdf_;        // laplace_mixture
    std::vector<double> grid_cdf_;       // grid law, d = 1
};

/// n draws, row-major n x d.
std::vector<double> sample(const DistSpec& spec, std::size_t n, std::uint64_t seed,
                           std::uint64_t stream = 0);

// JSON (de)serialization; strict schema, unknown keys rejected via ConfigError.
std::string dist_spec_to_json(const DistSpec& spec);
DistSpec dist_spec_from_json_text(const std::string& text);

}  // namespace tvcert
