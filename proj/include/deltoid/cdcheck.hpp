#ifndef DELTOID_CDCHECK_HPP
#define DELTOID_CDCHECK_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "deltoid/geometry.hpp"
#include "deltoid/operator.hpp"
#include "deltoid/univar_poly.hpp"

namespace deltoid {

class DegenerateDenominator : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class IdentityMismatch : public std::runtime_error {
public:
    IdentityMismatch(const std::string& what, UnivarPoly diff)
        : std::runtime_error(what), difference(std::move(diff)) {}
    UnivarPoly difference;
};

/// One CD(rho, n) inequality for L^(lambda), lambda > 1, held in all three
/// parametrizations: (rho, n), the log P tensor constants (a1, b1) with
/// rho = (lambda - 1) b1 / 3 and n - 2 = (lambda - 1) / (3 a1), and the triangle
/// constants a = 2 a1, b = b1 / 2.
struct CDParams {
    Rat lambda;
    Rat rho;
    Rat n;
    Rat a1;
    Rat b1;

    static CDParams from_rho_n(const Lambda& lam, const Rat& rho, const Rat& n);
    static CDParams from_a1_b1(const Lambda& lam, const Rat& a1, const Rat& b1);
    [[nodiscard]] Rat triangle_a() const { return 2 * a1; }
    [[nodiscard]] Rat triangle_b() const { return b1 / 2; }
};

/// (3 - b1) Gamma - (3/2) D Gamma - a1 grad log P (x) grad log P.
HermitianTensorField tensor_residual(const Rat& a1, const Rat& b1);

struct PsdPoint {
    std::complex<double> z;
    double r12 = 0;       // R12, must be >= 0
    double det = 0;       // R12^2 - R11 R22, must be >= 0
    bool pass = false;
};

struct PsdReport {
    std::vector<PsdPoint> points;
    double tolerance = -1e-12;
    double min_r12 = 0;
    double min_det = 0;
    std::size_t failures = 0;
    std::complex<double> worst_z;
    /// Distance from the worst point to the nearest cusp 1, j, j^2.
    double worst_cusp_distance = 0;
    /// Smallest cusp distance among failing points; infinite when none fail.
    double nearest_cusp_failure = 0;
    bool pass = true;
};

PsdReport psd_check(const HermitianTensorField& t, const std::vector<DeltoidPoint>& points, double tolerance = -1e-12);
/// The k x k grid of the fundamental triangle mapped to the deltoid.
std::vector<DeltoidPoint> mapped_grid(std::size_t k);

struct FactorizationReport {
    Rat a1;
    Rat b1;
    /// R12^2 - |R11|^2 on the ray cos 3theta = 1 as a polynomial in rho.
    UnivarPoly lhs;
    /// (1/4)(1 - rho)(3 - b1 + b1 rho)(3 - b1 + rho(3 - 2 b1) + 3 rho^2 (b1 - 12 a1)).
    UnivarPoly factored;
    bool identity = false;
    /// For a1 = 1/6: whether lhs equals the shortened display
    /// (1 - rho)^2 (3 - b1 + 3 rho (2 - b1)) and the quotient between them.
    std::optional<bool> short_form_equal;
    std::optional<UnivarPoly> short_form;
    /// lhs >= 0 on [0, 1].
    NonnegativityResult nonneg_ray;
    /// The opposite ray cos 3theta = -1, rho in [0, 1/3].
    NonnegativityResult nonneg_opposite;
};

/// Throws IdentityMismatch if the factorization fails.
FactorizationReport factorization_check(const Rat& a1, const Rat& b1);
/// The 5x5 grid a1 in {0, 1/12, 1/6, 1/4, 1/3}, b1 in {0, 1, 2, 9/4, 3}.
std::vector<FactorizationReport> factorization_grid();
/// Largest b1 in [0, 3] with lhs >= 0 on [0, 1] at the given a1, located by
/// exact bisection to the given width.
Rat max_b1_nonnegative(const Rat& a1, const Rat& width);

struct TriangleScanPoint {
    double theta = 0;
    double phi = 0;
    double A1 = 0;
    double B1 = 0;
    double C1 = 0;
    double N = 0;
    double b_of_a = 0;
};

namespace detail {

/// Trigonometric form of A1, B1, C1, N at (theta, phi).
template <typename S>
void trig_abcn(S a, S th, S ph, S& A1, S& B1, S& C1, S& N) {
    using std::cos;
    using std::sin;
    using std::sqrt;
    const S h = ph / 2;
    const S ch = cos(h), sh = sin(h);
    const S c2 = cos(2 * th + 3 * ph);
    const S A = 12 * (2 * c2 * (a * ch * ch - 1) - 2 * ch * cos(th + 3 * h) * ((4 * a + 1) * cos(ph) - 5) +
                      2 * a * cos(2 * ph) + a * cos(ph) + 3 * (a - 2));
    const S B = -72 * sh * sh * (a * c2 - cos(th + 2 * ph) - cos(th + ph) + (2 - a));
    const S C = 48 * sqrt(S(3)) * sh * sin(th + 3 * h) *
                (a * cos(th + 2 * ph) + a * cos(th + ph) + (1 - 2 * a) * cos(ph) - 1);
    const S s1 = sin(th / 2 + h), s2 = sin(th / 2 + ph);
    A1 = -A;
    B1 = -B;
    C1 = C;
    N = 256 * sh * sh * s1 * s1 * s2 * s2;
}

template <typename S>
S smallest_eigen_over_n(S A1, S B1, S C1, S N) {
    using std::sqrt;
    return (A1 + B1 - sqrt((A1 - B1) * (A1 - B1) + C1 * C1)) / (2 * N);
}

}  // namespace detail

/// b(a) at (theta, phi). Throws DegenerateDenominator when N < 1e-14.
/// Near the cusps the evaluation switches to quad precision.
TriangleScanPoint triangle_b(double a, double theta, double phi);

/// A1, B1, C1 from the (z, u) polynomial forms, z = e^{i theta}, u = e^{i phi};
/// imaginary parts are returned for inspection.
struct ZUForm {
    std::complex<long double> A1, B1, C1;
};
ZUForm triangle_abc_zu(long double a, long double theta, long double phi);

/// b(1/3) by the closed P(z,u), Q(z,u) form (smaller of the two branches).
long double b_third_pq(long double theta, long double phi);
/// b(1/3) by the (x, w) form with x = cos(phi/2), w = cos(theta + 3phi/2) - x.
long double b_third_xw(long double theta, long double phi);
/// t = |(2(1 - x^2) - x w) / (w sqrt(1 - x^2))|.
long double t_of(long double theta, long double phi);
/// (1/4)(t^2 + 3 - t sqrt(t^2 - 3)), written without cancellation.
long double b_third_t(long double t);

/// (x, y) -> (theta, phi) = (3x, (sqrt3 y - 3x) / 2) and back.
std::pair<double, double> triangle_to_angles(const TrianglePoint& p);
TrianglePoint angles_to_triangle(double theta, double phi);

struct TraceEntry {
    int level = 0;
    double scale = 0;
    double level_min = 0;
    double running_inf = 0;
};

struct ScanReport {
    double a = 0;
    std::size_t evaluated = 0;
    std::size_t skipped = 0;
    double inf_estimate = 0;
    double argmin_theta = 0;
    double argmin_phi = 0;
    TrianglePoint argmin;
    std::vector<TraceEntry> trace;
};

/// Global barycentric grid with `grid` steps per side, then shrinking corner
/// triangles around each vertex when refine is set.
ScanReport scan_inf_b(double a, int grid, bool refine, int levels = 10, int corner_grid = 48);

enum class Curve { quadratic, linear };

struct ProbeSample {
    double theta = 0;
    double phi = 0;
    double b = 0;
    double b_theta2 = 0;
    double A1_ratio = 0;  // A1 / theta^4
    double B1_ratio = 0;  // B1 / theta^6 (quadratic curve)
    double C1_ratio = 0;  // C1 / theta^5 (quadratic curve)
};

struct ProbeReport {
    double a = 0;
    double c = 0;
    Curve curve = Curve::quadratic;
    std::vector<ProbeSample> samples;
    /// 9 (1 - 3a) / (2 (1 - a)) for the quadratic curve.
    double predicted_limit = 0;
    double predicted_A1 = 0;
    double predicted_B1 = 0;
    double predicted_C1 = 0;
    double max_ratio_error = 0;  // at the sample nearest theta = 1e-3
    bool asymptotics_ok = false;
    bool limit_sign_ok = false;
    double min_b = 0;
};

ProbeReport divergence_probe(double a, Curve curve, double c, const std::vector<double>& thetas);
std::vector<double> default_probe_thetas();

struct Gamma2Report {
    Rat lambda;
    Rat rho;
    Rat n;
    std::size_t pairs = 0;
    double min_margin_random = 0;
    std::complex<double> argmin_random;
    std::string argmin_poly;
    /// Smallest eigenvalue of the quadratic-jet form over the same points.
    double min_margin_jet = 0;
    std::complex<double> argmin_jet;
    std::string argmin_jet_poly;
    double tolerance = -1e-10;
    bool violation_found = false;
};

/// Gamma2(f,f) - rho Gamma(f,f) - (1/n)(Lf)^2 at random interior points (half of
/// them near the cusps) for random real cubics, plus the worst real quadratic
/// at each point.
Gamma2Report gamma2_sample_check(const Lambda& lam, const Rat& rho, const Rat& n, std::size_t trials,
                                 std::uint64_t seed);
/// Margin polynomial Gamma2(f,f) - rho Gamma(f,f) - (1/n)(Lf)^2.
BivarPoly cd_margin(const BivarPoly& f, const Lambda& lam, const Rat& rho, const Rat& n);

}  // namespace deltoid

#endif  // DELTOID_CDCHECK_HPP
