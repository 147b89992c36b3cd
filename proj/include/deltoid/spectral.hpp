#ifndef DELTOID_SPECTRAL_HPP
#define DELTOID_SPECTRAL_HPP

#include <complex>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "deltoid/eigen_poly.hpp"
#include "deltoid/geometry.hpp"

namespace deltoid {

class TruncationInsufficient : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The eigenpolynomials with p + q <= N, their eigenvalues and exact norms,
/// evaluated in quad precision and normalized in L2(mu).
class HeatKernelTruncation {
public:
    HeatKernelTruncation(const Lambda& lam, int max_degree);
    explicit HeatKernelTruncation(std::shared_ptr<const EigenTable> table);

    [[nodiscard]] const Lambda& lambda() const { return table_->lambda(); }
    [[nodiscard]] int max_degree() const { return table_->max_degree(); }
    [[nodiscard]] const EigenTable& table() const { return *table_; }
    [[nodiscard]] std::size_t size() const { return table_->all().size(); }
    [[nodiscard]] double mu(std::size_t i) const { return mu_[i]; }

    /// P_i(z) / |P_i|_2 for every polynomial, in table order.
    [[nodiscard]] std::vector<std::complex<double>> normalized_values(std::complex<double> z) const;
    /// Only the polynomials with p + q <= degree, which come first in table order.
    [[nodiscard]] std::vector<std::complex<double>> normalized_values(std::complex<double> z, int degree) const;
    [[nodiscard]] std::complex<double> normalized_value(std::size_t i, std::complex<double> z) const;

private:
    struct Evaluators;
    std::shared_ptr<const EigenTable> table_;
    std::shared_ptr<const Evaluators> eval_;
    std::vector<double> mu_;
};

struct HeatValue {
    double value = 0;
    /// Extrapolated contribution of the degrees above N.
    double tail_estimate = 0;
    /// exp(-3/4 N^2 t).
    double tail_factor = 0;
};

/// sum_{p+q<=N} e^{-mu t} |P(x)|^2 / |P|^2 on the closed domain. The tail is
/// estimated from the degree-N shell with e^{-3/4 k^2 t} decay and k^{2 lambda + 1}
/// growth. Throws TruncationInsufficient when it exceeds 1% of the value.
HeatValue heat_diag(const DeltoidPoint& x, double t, const HeatKernelTruncation& trunc);
/// Same sum from precomputed normalized_values.
HeatValue heat_diag(const std::vector<std::complex<double>>& values, double t, const HeatKernelTruncation& trunc);

/// sum e^{-mu t} P(x) conj(P(y)) / |P|^2.
std::complex<double> heat_kernel(const DeltoidPoint& x, const DeltoidPoint& y, double t,
                                 const HeatKernelTruncation& trunc);

/// int p_t(x, .) dmu with the integrals of the eigenpolynomials taken exactly
/// from the moments.
std::complex<double> heat_mass(const DeltoidPoint& x, double t, const HeatKernelTruncation& trunc);

struct FitReport {
    /// t window, or the degree range of the fit.
    double window_min = 0;
    double window_max = 0;
    /// Least-squares slope and intercept of log y against log x.
    double slope = 0;
    double intercept = 0;
    /// Root mean square of the log residuals.
    double residual = 0;
    double target = 0;
    /// Largest y / x^target over the data (the empirical constant).
    double constant = 0;
    /// Largest tail_estimate / value seen.
    double max_tail_ratio = 0;
    std::vector<std::pair<double, double>> data;
};

FitReport loglog_fit(std::vector<std::pair<double, double>> data, double target);

/// Candidate points for sup_x: the three cusps and the k x k mapped grid.
std::vector<DeltoidPoint> sup_candidates(std::size_t k);

/// Slope of log sup_x heat_diag against log t over `steps` log-spaced times in
/// [t_min, t_max]; the target is -lambda.
FitReport ultracontractivity_fit(const HeatKernelTruncation& trunc, double t_min, double t_max, int steps = 10,
                                 std::size_t grid = 12);

/// Grid with `k` steps per side including the edges, so the cusps are sampled.
std::vector<TrianglePoint> closed_triangle_grid(int k);

/// sup |P| / |P|_2 for every eigenpolynomial with 1 <= p + q <= max_degree, on
/// closed_triangle_grid(grid) with one Newton step from the best local maxima.
/// The fit uses the largest ratio in each degree against its mu over the top
/// two thirds of the degrees; the target is lambda / 2 and the constant is
/// max ratio / mu^{lambda/2}.
FitReport supnorm_bound_check(const HeatKernelTruncation& trunc, int max_degree, int grid = 48);

struct HkReport {
    /// Random unit combinations: largest sup ratio per k against k.
    FitReport random;
    /// sqrt(sup_x K_k(x, x)) per k, the best constant for H_k.
    FitReport kernel;
};

/// Unit-norm random combinations in H_k (Gram matrix from the exact moments)
/// for 1 <= k <= max_k; the target is lambda + 1/2.
HkReport hk_bound_check(const HeatKernelTruncation& trunc, int max_k, int combos, std::uint64_t seed,
                        int grid = 48);

/// sum_{k>=1} k^{2p} e^{-2 a t k^2}, summed past the peak until the terms fall
/// below 1e-20 of the sum.
long double series_sum(double p, double a, double t);

/// t_max, t_max/2, ... down to t_min.
std::vector<double> dyadic_times(double t_min, double t_max);

struct SeriesReport {
    double p = 0;
    double a = 0;
    FitReport fit;  // log S against log t
    double normalized_sup = 0;
    double normalized_inf = 0;
    /// sup / inf of t^{(p+1)/2} S(t).
    double ratio = 0;
    /// sup / inf of t^{(2p+1)/2} S(t).
    double corrected_ratio = 0;
    bool pass = false;  // ratio < 10
};

SeriesReport sobolev_series_check(double p, double a, const std::vector<double>& ts);

struct KernelReport {
    int max_k = 0;
    double kernel_sup = 0;
    std::complex<double> argsup_x;
    std::complex<double> argsup_y;
    /// sum nu_k^2 C1^2 k^{2 lambda + 1}, C1 = max_k sqrt(sup K_k(x,x)) / k^{lambda + 1/2}.
    double bound = 0;
    double c1 = 0;
    /// sum nu_k^2 k^{2 lambda + 1}.
    double series = 0;
    bool pass = false;
};

/// Kernel of K^2 for the multiplier nu[k-1] on H_k, k = 1..nu.size(), as the
/// sum of nu_k^2 times the reproducing kernel of H_k, over all grid pairs.
KernelReport kernel_bound_check(const std::vector<double>& nu, const HeatKernelTruncation& trunc,
                                const std::vector<DeltoidPoint>& grid);

}  // namespace deltoid

#endif  // DELTOID_SPECTRAL_HPP
