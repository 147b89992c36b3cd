#include "deltoid/geometry.hpp"

#include <random>

#include <boost/multiprecision/float128.hpp>
#include <limits>
#include <stdexcept>

#include "deltoid/operator.hpp"

namespace deltoid {

WValue w_density(const TrianglePoint& p) {
    const auto w = w_complex(p.x, p.y);
    return {w.real(), std::abs(w.imag())};
}

DeltoidPoint triangle_to_deltoid(const TrianglePoint& p) { return {deltoid_coordinate(p.x, p.y)}; }

double membership_residual(const DeltoidPoint& p) {
    const double r2 = std::norm(p.z);
    const double re3 = (p.z * p.z * p.z).real();  // rho^3 cos 3theta
    return 0.25 * (1 - r2) * (1 - r2) - r2 - r2 * r2 + 2 * re3;
}

bool is_interior(const DeltoidPoint& p) { return membership_residual(p) > 0; }

std::array<TrianglePoint, 3> fundamental_triangle() {
    constexpr double pi = std::numbers::pi;
    return {TrianglePoint{0, 0}, TrianglePoint{4 * pi / 3, 0},
            TrianglePoint{2 * pi / 3, 2 * pi / std::sqrt(3.0)}};
}

TrianglePoint triangle_point(double u, double v) {
    const auto t = fundamental_triangle();
    const double w = 1 - u - v;
    return {w * t[0].x + u * t[1].x + v * t[2].x, w * t[0].y + u * t[1].y + v * t[2].y};
}

TrianglePoint triangle_center() { return triangle_point(1.0 / 3, 1.0 / 3); }

namespace {

std::vector<TrianglePoint> grid_samples(std::size_t n) {
    const auto k = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
    if (k * k != n) throw std::invalid_argument("grid sampling needs a perfect square count");
    std::vector<TrianglePoint> out;
    out.reserve(n);
    const double dk = static_cast<double>(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; i + j < k; ++j) {
            out.push_back(triangle_point((i + 1.0 / 3) / dk, (j + 1.0 / 3) / dk));
            if (i + j + 2 <= k) out.push_back(triangle_point((i + 2.0 / 3) / dk, (j + 2.0 / 3) / dk));
        }
    }
    return out;
}

std::vector<TrianglePoint> r2_samples(std::size_t n, std::uint64_t seed) {
    // plastic number
    constexpr double g = 1.32471795724474602596;
    constexpr double a1 = 1 / g;
    constexpr double a2 = 1 / (g * g);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0, 1);
    const double s1 = unif(rng);
    const double s2 = unif(rng);
    std::vector<TrianglePoint> out;
    out.reserve(n);
    for (std::size_t i = 1; out.size() < n; ++i) {
        double u = std::fmod(s1 + a1 * static_cast<double>(i), 1.0);
        double v = std::fmod(s2 + a2 * static_cast<double>(i), 1.0);
        if (u + v > 1) {
            u = 1 - u;
            v = 1 - v;
        }
        const auto p = triangle_point(u, v);
        if (w_density(p).value >= 1e-12) out.push_back(p);
    }
    return out;
}

}  // namespace

std::vector<TrianglePoint> sample_interior(std::size_t n, SampleMode mode, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("sample count must be positive");
    if (n == 1) return {triangle_center()};
    return mode == SampleMode::grid ? grid_samples(n) : r2_samples(n, seed);
}

Eigen::Matrix2cd pushforward_metric(const TrianglePoint& p, double h) {
    const auto dx = (deltoid_coordinate(p.x + h, p.y) - deltoid_coordinate(p.x - h, p.y)) / (2 * h);
    const auto dy = (deltoid_coordinate(p.x, p.y + h) - deltoid_coordinate(p.x, p.y - h)) / (2 * h);
    Eigen::Matrix2cd j;
    j << dx, dy, std::conj(dx), std::conj(dy);
    return j * j.transpose();
}

Eigen::Matrix2cd gamma_at(std::complex<double> z) {
    const auto& gm = gamma_matrix();
    const auto g12 = eval(gm.g12, z);
    Eigen::Matrix2cd g;
    g << eval(gm.g11, z), g12, g12, eval(gm.g22, z);
    return g;
}

namespace {

BivarPoly det(std::vector<std::vector<BivarPoly>> m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    BivarPoly out;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) continue;
        std::vector<std::vector<BivarPoly>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<BivarPoly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        const auto term = m[0][c] * det(std::move(minor));
        out += c % 2 == 0 ? term : -term;
    }
    return out;
}

}  // namespace

DiscriminantDerivation derive_discriminant_constant() {
    const auto Z = BivarPoly::Z(), Zb = BivarPoly::Zbar();
    // f = t^3 + a t^2 + b t + c, f' = 3t^2 + 2a t + b
    const BivarPoly a = GaussRat(-3) * Z, b = GaussRat(3) * Zb, c(-1), zero;
    const BivarPoly a2 = GaussRat(2) * a, three(3), one(1);
    const std::vector<std::vector<BivarPoly>> syl{
        {one, a, b, c, zero},
        {zero, one, a, b, c},
        {three, a2, b, zero, zero},
        {zero, three, a2, b, zero},
        {zero, zero, three, a2, b},
    };
    DiscriminantDerivation d;
    // disc = (-1)^{n(n-1)/2} Res(f, f') for monic f of degree 3
    d.discriminant = -det(syl);
    const auto p = boundary_poly();
    const GaussRat ratio = divide(d.discriminant.coeff(0, 0), p.coeff(0, 0));
    d.proportional = ratio.is_real() && d.discriminant == ratio * p;
    // prod (z_i - z_j)^2 = -(z1 z2 z3)^2 prod |z_i - z_j|^2 on the unit circle
    d.constant = -ratio.re;
    return d;
}

DiscriminantReport discriminant_check(std::size_t n, std::uint64_t seed) {
    using boost::multiprecision::float128;
    const NumericPoly<float128> p(boundary_poly());
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0, 1);
    DiscriminantReport r;
    const auto derived = derive_discriminant_constant();
    if (!derived.proportional) throw std::logic_error("discriminant is not a multiple of P");
    r.constant = to_double(derived.constant);
    const float128 k = derived.constant.convert_to<float128>();
    r.min_w = std::numeric_limits<double>::infinity();
    while (r.points < n) {
        double u = unif(rng), v = unif(rng);
        if (u + v > 1) {
            u = 1 - u;
            v = 1 - v;
        }
        const auto q = triangle_point(u, v);
        const float128 x = q.x, y = q.y;
        const float128 w = w_complex(x, y).real();
        if (w <= 0) continue;
        const float128 pz = p(deltoid_coordinate(x, y)).real();
        const double rel = static_cast<double>(abs(w - k * pz) / w);
        r.max_relative_error = std::max(r.max_relative_error, rel);
        r.min_w = std::min(r.min_w, static_cast<double>(w));
        ++r.points;
    }
    return r;
}

void write_points_csv(std::ostream& os, const std::vector<TrianglePoint>& points) {
    os << "x,y,re_z,im_z,w\n";
    os.precision(17);
    for (const auto& p : points) {
        const auto z = triangle_to_deltoid(p).z;
        os << p.x << ',' << p.y << ',' << z.real() << ',' << z.imag() << ',' << w_density(p).value << '\n';
    }
}

}  // namespace deltoid
