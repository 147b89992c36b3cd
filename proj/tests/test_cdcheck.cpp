#include <doctest.h>

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "deltoid/cdcheck.hpp"
#include "oracles.hpp"

using namespace deltoid;

namespace {

// Smallest eigenvalue of -Hess sigma - a grad sigma (x) grad sigma, sigma = log W / 2,
// by finite differences in the triangle coordinates.
long double fd_b(long double a, long double x, long double y) {
    using oracle::LD;
    auto s = [](LD u, LD v) { return std::log(w_complex(u, v).real()) / 2; };
    // first and second differences at step h; Richardson on h and h/2
    auto diffs = [&](LD h) {
        return Eigen::Matrix<LD, 5, 1>(
            (s(x + h, y) - s(x - h, y)) / (2 * h), (s(x, y + h) - s(x, y - h)) / (2 * h),
            (s(x + h, y) - 2 * s(x, y) + s(x - h, y)) / (h * h), (s(x, y + h) - 2 * s(x, y) + s(x, y - h)) / (h * h),
            (s(x + h, y + h) - s(x + h, y - h) - s(x - h, y + h) + s(x - h, y - h)) / (4 * h * h));
    };
    const Eigen::Matrix<LD, 5, 1> d = (4 * diffs(5e-5L) - diffs(1e-4L)) / 3;
    const LD sx = d(0), sy = d(1), sxx = d(2), syy = d(3), sxy = d(4);
    const LD m11 = -sxx - a * sx * sx, m22 = -syy - a * sy * sy, m12 = -sxy - a * sx * sy;
    return (m11 + m22 - std::sqrt((m11 - m22) * (m11 - m22) + 4 * m12 * m12)) / 2;
}

// Interior points kept away from the edges.
std::vector<TrianglePoint> inner_points(std::size_t n, std::uint64_t seed) {
    std::vector<TrianglePoint> out;
    for (const auto& p : sample_interior(4 * n, SampleMode::low_discrepancy, seed)) {
        if (w_density(p).value > 1e-2) out.push_back(p);
        if (out.size() == n) break;
    }
    return out;
}

}  // namespace

TEST_CASE("parameter conversions") {
    const Lambda lam(Rat(4));
    const auto p = CDParams::from_rho_n(lam, Rat(9, 4), Rat(8));
    CHECK(p.a1 == Rat(1, 6));
    CHECK(p.b1 == Rat(9, 4));
    CHECK(p.triangle_a() == Rat(1, 3));
    CHECK(p.triangle_b() == Rat(9, 8));
    const auto q = CDParams::from_a1_b1(lam, p.a1, p.b1);
    CHECK(q.rho == Rat(9, 4));
    CHECK(q.n == Rat(8));
    const auto r = CDParams::from_a1_b1(Lambda(Rat(7, 2)), Rat(1, 6), Rat(9, 4));
    CHECK(r.rho == Rat(15, 8));
    CHECK(r.n == Rat(7));
    CHECK_THROWS_AS(CDParams::from_rho_n(Lambda(Rat(1)), Rat(1), Rat(8)), std::invalid_argument);
    CHECK_THROWS_AS(CDParams::from_rho_n(lam, Rat(1), Rat(2)), std::invalid_argument);
}

TEST_CASE("tensor residual at the origin") {
    const auto t = tensor_residual(Rat(1, 6), Rat(9, 4));
    CHECK(eval_exact(t.r12, Rat(0)) == GaussRat(Rat(3, 8)));
    CHECK(eval_exact(t.r11, Rat(0)) == GaussRat(Rat(0)));
    CHECK(conj_swap(t.r12) == t.r12);
    CHECK(conj_swap(t.r11) == t.r22);
}

TEST_CASE("ray factorization") {
    const auto grid = factorization_grid();
    CHECK(grid.size() == 25);
    for (const auto& r : grid) CHECK(r.identity);

    const auto ok = factorization_check(Rat(1, 6), Rat(9, 4));
    CHECK(ok.nonneg_ray.nonnegative);
    CHECK(ok.nonneg_opposite.nonnegative);
    const UnivarPoly rho = UnivarPoly::x();
    const UnivarPoly expect(std::vector<Rat>{Rat(9, 64), Rat(0), Rat(-27, 32), Rat(9, 8), Rat(-27, 64)});
    CHECK(ok.lhs == expect);
    REQUIRE(ok.short_form_equal.has_value());
    CHECK_FALSE(*ok.short_form_equal);
    // the display drops the factor (3 - b1 + b1 rho)/4
    CHECK(ok.lhs * UnivarPoly(4) ==
          *ok.short_form * UnivarPoly(std::vector<Rat>{Rat(3, 4), Rat(9, 4)}));

    const auto bad = factorization_check(Rat(1, 6), Rat(113, 50));
    CHECK_FALSE(bad.nonneg_ray.nonnegative);
    CHECK(bad.nonneg_ray.witness >= 0);
    CHECK(bad.nonneg_ray.witness <= 1);
    CHECK_FALSE(bad.nonneg_opposite.nonnegative);

    const Rat m = max_b1_nonnegative(Rat(1, 6), Rat(1, 4096));
    CHECK(m <= Rat(9, 4));
    CHECK(Rat(9, 4) - m <= Rat(1, 4096));
}

TEST_CASE("pointwise tensor check") {
    const auto pts = mapped_grid(120);
    const auto good = psd_check(tensor_residual(Rat(1, 6), Rat(9, 4)), pts);
    CHECK(good.pass);
    CHECK(good.failures == 0);
    const auto bad = psd_check(tensor_residual(Rat(1, 6), Rat(113, 50)), pts);
    CHECK_FALSE(bad.pass);
    CHECK(bad.failures > 0);
    CHECK(bad.nearest_cusp_failure < 0.1);
    // the deepest violation sits on an arc midpoint, rho = 1/3
    CHECK(std::abs(std::abs(bad.worst_z) - 1.0 / 3) < 0.02);
}

TEST_CASE("b(a) against finite differences") {
    for (const double a : {0.0, 1.0 / 3, 0.5, 1.0}) {
        for (const auto& p : inner_points(60, 5)) {
            const auto [th, ph] = triangle_to_angles(p);
            const double b = triangle_b(a, th, ph).b_of_a;
            const double ref = static_cast<double>(fd_b(a, p.x, p.y));
            CHECK(std::abs(b - ref) < 1e-5 * std::max(1.0, std::abs(ref)));
        }
    }
}

TEST_CASE("angle coordinates round trip") {
    for (const auto& p : sample_interior(20, SampleMode::low_discrepancy, 6)) {
        const auto [th, ph] = triangle_to_angles(p);
        const auto q = angles_to_triangle(th, ph);
        CHECK(std::abs(q.x - p.x) < 1e-13);
        CHECK(std::abs(q.y - p.y) < 1e-13);
    }
}

TEST_CASE("representations of b(1/3) agree") {
    std::size_t n = 0;
    for (const auto& p : inner_points(1000, 7)) {
        const auto [th, ph] = triangle_to_angles(p);
        const long double b = triangle_b(1.0 / 3, th, ph).b_of_a;
        const long double tol = 1e-9L * std::max(1.0L, std::abs(b));
        CHECK(std::abs(b_third_pq(th, ph) - b) < tol);
        CHECK(std::abs(b_third_xw(th, ph) - b) < tol);
        CHECK(std::abs(b_third_t(t_of(th, ph)) - b) < tol);
        CHECK(b >= 9.0L / 8 - 1e-12L);

        const auto zu = triangle_abc_zu(1.0L / 3, th, ph);
        long double A1, B1, C1, N;
        detail::trig_abcn<long double>(1.0L / 3, th, ph, A1, B1, C1, N);
        const long double s = 1 + std::abs(A1) + std::abs(B1) + std::abs(C1);
        CHECK(std::abs(zu.A1 - A1) < 1e-12L * s);
        CHECK(std::abs(zu.B1 - B1) < 1e-12L * s);
        CHECK(std::abs(zu.C1 - C1) < 1e-12L * s);
        ++n;
    }
    CHECK(n == 1000);
}

TEST_CASE("closed form in t") {
    CHECK(std::abs(b_third_t(2) - 1.25L) < 1e-18L);
    // sqrt(t^2 - 3) amplifies the rounding of t near sqrt3
    CHECK(std::abs(b_third_t(std::sqrt(3.0L)) - 1.5L) < 1e-9L);
    // t -> infinity gives 9/8
    CHECK(std::abs(b_third_t(1e9L) - 1.125L) < 1e-9L);
}

TEST_CASE("b is decreasing in a") {
    for (const auto& p : inner_points(100, 8)) {
        const auto [th, ph] = triangle_to_angles(p);
        double prev = triangle_b(-0.5, th, ph).b_of_a;
        for (double a = -0.25; a <= 1.0; a += 0.25) {
            const double b = triangle_b(a, th, ph).b_of_a;
            CHECK(b <= prev + 1e-12 * std::max(1.0, std::abs(prev)));
            prev = b;
        }
    }
}

TEST_CASE("degenerate denominator") {
    CHECK_THROWS_AS(triangle_b(1.0 / 3, 1.0, 0.0), DegenerateDenominator);
}

TEST_CASE("infimum scan at a = 1/3") {
    const auto r = scan_inf_b(1.0 / 3, 300, true);
    CHECK(r.inf_estimate >= 1.125 - 1e-9);
    CHECK(r.inf_estimate <= 1.125 + 1e-3);
    CHECK(r.evaluated > 0);
    REQUIRE_FALSE(r.trace.empty());
    for (std::size_t k = 1; k < r.trace.size(); ++k) CHECK(r.trace[k].running_inf <= r.trace[k - 1].running_inf);
}

TEST_CASE("divergence along the quadratic curve") {
    const auto r = divergence_probe(0.4, Curve::quadratic, 1.0, default_probe_thetas());
    CHECK(r.asymptotics_ok);
    CHECK(r.limit_sign_ok);
    CHECK(r.predicted_limit == doctest::Approx(-1.5));
    CHECK(r.samples.back().b_theta2 == doctest::Approx(-1.5).epsilon(0.01));
    CHECK(r.min_b < -1e5);

    const auto t = divergence_probe(1.0 / 3, Curve::quadratic, 1.0, default_probe_thetas());
    CHECK(t.limit_sign_ok);
    CHECK(t.min_b > 1.0);

    const auto l = divergence_probe(0.6, Curve::linear, 1.0, default_probe_thetas());
    CHECK(l.min_b < -1e6);
}

TEST_CASE("Gamma2 margin") {
    const Lambda lam(Rat(4));
    CHECK(cd_margin(BivarPoly(5), lam, Rat(9, 4), Rat(8)).is_zero());

    const auto ok = gamma2_sample_check(lam, Rat(9, 4), Rat(8), 200, 11);
    CHECK_FALSE(ok.violation_found);
    CHECK(ok.min_margin_random >= -1e-10);
    CHECK(ok.min_margin_jet >= -1e-10);
    const auto bad = gamma2_sample_check(lam, Rat(9, 4), Rat(7), 200, 11);
    CHECK(bad.violation_found);
}

TEST_CASE("Gamma2 and tensor routes agree") {
    for (const Rat l : {Rat(4), Rat(7, 2)}) {
        const Lambda lam(l);
        const auto good = CDParams::from_a1_b1(lam, Rat(1, 6), Rat(9, 4));
        CHECK_FALSE(gamma2_sample_check(lam, good.rho, good.n, 100, 12).violation_found);
        CHECK(psd_check(tensor_residual(good.a1, good.b1), mapped_grid(60)).pass);
        const auto bad = CDParams::from_a1_b1(lam, Rat(1, 6), Rat(113, 50));
        CHECK(gamma2_sample_check(lam, bad.rho, bad.n, 100, 12).violation_found);
        CHECK_FALSE(psd_check(tensor_residual(bad.a1, bad.b1), mapped_grid(60)).pass);
    }
}
