#ifndef DELTOID_GEOMETRY_HPP
#define DELTOID_GEOMETRY_HPP

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <vector>

#include <Eigen/Dense>

#include "deltoid/bivar_poly.hpp"

namespace deltoid {

template <typename Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;

/// Plane point in triangle coordinates.
struct TrianglePoint {
    double x = 0;
    double y = 0;
};

/// Point of the (1/3-scaled) deltoid domain.
struct DeltoidPoint {
    std::complex<double> z;

    [[nodiscard]] double rho() const { return std::abs(z); }
    [[nodiscard]] double theta() const { return std::arg(z); }
};

/// E1 = (1, 0), E2 = (-1/2, sqrt3/2), E3 = (-1/2, -sqrt3/2).
inline std::array<Vec2<double>, 3> lattice_directions() {
    const double s = std::sqrt(3.0) / 2;
    return {Vec2<double>(1, 0), Vec2<double>(-0.5, s), Vec2<double>(-0.5, -s)};
}

/// z_k = exp(i E_k . (x, y)); |z_k| = 1 and z1 z2 z3 = 1.
template <typename Scalar>
std::array<std::complex<Scalar>, 3> zk(Scalar x, Scalar y) {
    using std::cos;
    using std::sin;
    using std::sqrt;
    const Scalar h = sqrt(Scalar(3)) / 2 * y;
    const std::array<Scalar, 3> angle = {x, -x / 2 + h, -x / 2 - h};
    std::array<std::complex<Scalar>, 3> out;
    for (int k = 0; k < 3; ++k) out[k] = std::complex<Scalar>(cos(angle[k]), sin(angle[k]));
    return out;
}

inline std::array<std::complex<double>, 3> zk(const TrianglePoint& p) { return zk(p.x, p.y); }

/// -(z1-z2)^2 (z2-z3)^2 (z3-z1)^2; real up to rounding.
template <typename Scalar>
std::complex<Scalar> w_complex(Scalar x, Scalar y) {
    const auto z = zk(x, y);
    const auto v = (z[0] - z[1]) * (z[1] - z[2]) * (z[2] - z[0]);
    return -v * v;
}

struct WValue {
    double value = 0;
    double imag_residual = 0;
};

WValue w_density(const TrianglePoint& p);

template <typename Scalar>
std::complex<Scalar> deltoid_coordinate(Scalar x, Scalar y) {
    const auto z = zk(x, y);
    return (z[0] + z[1] + z[2]) / Scalar(3);
}

DeltoidPoint triangle_to_deltoid(const TrianglePoint& p);

/// 1/4 (1 - rho^2)^2 - (rho^2 + rho^4 - 2 rho^3 cos 3theta), which equals P(Z, Zbar).
/// Positive inside, zero on the curve.
double membership_residual(const DeltoidPoint& p);
bool is_interior(const DeltoidPoint& p);

/// Vertices 0, (4pi/3, 0), (2pi/3, 2pi/sqrt3).
std::array<TrianglePoint, 3> fundamental_triangle();
/// Centroid; maps to Z = 0.
TrianglePoint triangle_center();
/// Point with barycentric weights (1 - u - v, u, v).
TrianglePoint triangle_point(double u, double v);

enum class SampleMode { grid, low_discrepancy };

/// Interior samples. Grid mode needs n = k^2 and returns the centroids of the
/// k^2 subtriangles of the k-fold subdivision. Low-discrepancy mode folds an
/// R2 sequence with a seeded offset into the triangle. n = 1 gives the center.
std::vector<TrianglePoint> sample_interior(std::size_t n, SampleMode mode, std::uint64_t seed = 0);

/// [Gamma(Z,Z) Gamma(Z,Zbar); Gamma(Zbar,Z) Gamma(Zbar,Zbar)] from the
/// Euclidean gradient of Z by central differences.
Eigen::Matrix2cd pushforward_metric(const TrianglePoint& p, double h = 1e-5);

/// Same matrix from the coordinate Gamma of L^(1) at Z(p).
Eigen::Matrix2cd gamma_at(std::complex<double> z);

struct DiscriminantDerivation {
    /// Discriminant of t^3 - 3Z t^2 + 3Zbar t - 1, from the Sylvester resultant.
    BivarPoly discriminant;
    /// W = -disc on SU(3) eigenvalues, so W = constant * P.
    Rat constant;
    bool proportional = false;
};

DiscriminantDerivation derive_discriminant_constant();

struct DiscriminantReport {
    std::size_t points = 0;
    double max_relative_error = 0;
    double min_w = 0;
    double constant = 0;
};

/// Compares W with c P(Z, Zbar), c from derive_discriminant_constant, at n
/// random interior points, both sides in quad precision.
DiscriminantReport discriminant_check(std::size_t n, std::uint64_t seed);

/// Header row then x,y,re_z,im_z,w.
void write_points_csv(std::ostream& os, const std::vector<TrianglePoint>& points);

}  // namespace deltoid

#endif  // DELTOID_GEOMETRY_HPP
