#include <doctest.h>

#include <cmath>
#include <numbers>

#include <boost/multiprecision/float128.hpp>

#include "deltoid/spectral.hpp"
#include "oracles.hpp"

using namespace deltoid;

namespace {

const HeatKernelTruncation& trunc4_40() {
    static const HeatKernelTruncation t(Lambda(Rat(4)), 40);
    return t;
}

const HeatKernelTruncation& trunc4_12() {
    static const HeatKernelTruncation t(Lambda(Rat(4)), 12);
    return t;
}

}  // namespace

TEST_CASE("eigenvalues grow along the diagonal") {
    for (const Rat l : {Rat(1), Rat(4), Rat(7, 2)})
        for (int p = 0; p < 20; ++p) CHECK(eigenvalue(p + 1, p + 1, Lambda(l)) > eigenvalue(p, p, Lambda(l)));
}

TEST_CASE("cusp values are the SU(3) dimensions at lambda = 4") {
    // normalized eigenpolynomials at lambda = 4 are the irreducible characters
    // of SU(3) as functions of tr U / 3; Z = 1 is U = I
    const auto& t = trunc4_40();
    const auto v = t.normalized_values(1.0, 30);
    const auto& all = t.table().all();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double p = all[i].p, q = all[i].q;
        const double dim = (p + 1) * (q + 1) * (p + q + 2) / 2;
        CHECK(std::abs(std::abs(v[i]) - dim) < 1e-9 * dim);
    }
}

TEST_CASE("heat diagonal") {
    const auto& t = trunc4_40();
    const auto h = heat_diag(DeltoidPoint{0}, 0.05, t);
    CHECK(h.value > 0);
    CHECK(std::isfinite(h.value));
    CHECK(h.tail_factor == doctest::Approx(std::exp(-0.75 * 1600 * 0.05)));
    CHECK(heat_diag(DeltoidPoint{{0.2, -0.1}}, 60, t).value == doctest::Approx(1).epsilon(1e-12));
    const std::complex<double> x(0.31, 0.12);
    const auto rot = std::polar(1.0, 2 * std::numbers::pi / 3);
    CHECK(std::abs(heat_diag(DeltoidPoint{x}, 0.05, t).value - heat_diag(DeltoidPoint{rot * x}, 0.05, t).value) <
          1e-9);
    CHECK(std::abs(heat_diag(DeltoidPoint{x}, 0.05, t).value -
                   heat_diag(DeltoidPoint{std::conj(x)}, 0.05, t).value) < 1e-9);
    CHECK_THROWS_AS(heat_diag(DeltoidPoint{1.0}, 0.01, trunc4_12()), TruncationInsufficient);
    CHECK_THROWS_AS(heat_diag(DeltoidPoint{1.5}, 0.1, t), std::invalid_argument);
    for (const auto& p : sup_candidates(6))
        for (const double s : {0.03, 0.3, 3.0}) CHECK(heat_diag(p, s, t).value > 0);
}

TEST_CASE("mass conservation") {
    const auto& t = trunc4_12();
    for (const auto& e : t.table().all())
        if (e.p + e.q > 0) CHECK(inner_product(e.poly, BivarPoly(1), t.table().moment_table()).is_zero());
    for (const double s : {0.05, 0.5})
        CHECK(std::abs(heat_mass(DeltoidPoint{{0.3, 0.1}}, s, t) - 1.0) < 1e-14);
}

TEST_CASE("semigroup property against quadrature") {
    const auto& t = trunc4_12();
    const DeltoidPoint x{{0.2, 0.1}}, y{{-0.1, 0.25}};
    const double s1 = 0.3, s2 = 0.5;
    const auto vx = t.normalized_values(x.z), vy = t.normalized_values(y.z);
    auto f = [&](std::complex<double> z) {
        const auto vz = t.normalized_values(z);
        std::complex<double> a = 0, b = 0;
        for (std::size_t i = 0; i < vz.size(); ++i) {
            a += std::exp(-t.mu(i) * s1) * vx[i] * std::conj(vz[i]);
            b += std::exp(-t.mu(i) * s2) * vz[i] * std::conj(vy[i]);
        }
        return a * b;
    };
    const auto composed = oracle::triangle_integral(f, 4.0, 90);
    const auto direct = heat_kernel(x, y, s1 + s2, t);
    CHECK(std::abs(composed - direct) < 1e-3 * std::abs(direct));
}

TEST_CASE("ultracontractivity exponents") {
    const auto r4 = ultracontractivity_fit(trunc4_40(), 0.02, 0.2);
    CHECK(r4.target == -4);
    CHECK(r4.slope >= -4.5);
    CHECK(r4.slope <= -3.5);
    CHECK(r4.max_tail_ratio < 0.01);
    const auto late = ultracontractivity_fit(trunc4_40(), 2, 4, 5);
    CHECK(std::abs(late.slope) < 0.05);

    const HeatKernelTruncation t1(Lambda(Rat(1)), 30);
    const auto r1 = ultracontractivity_fit(t1, 0.02, 0.2);
    CHECK(r1.slope >= -1.3);
    CHECK(r1.slope <= -0.8);
}

TEST_CASE("sup norms of eigenpolynomials") {
    const auto& t = trunc4_40();
    // P_{1,0} = Z: sup |Z| = 1 at the cusps and |Z|_2^2 = 1/(2 lambda + 1)
    CHECK(std::abs(t.normalized_value(1, 1.0)) == doctest::Approx(3));
    CHECK(t.table().all()[1].norm2 == Rat(1, 9));
    const auto r = supnorm_bound_check(t, 30);
    CHECK(r.slope <= 2.1);
    CHECK(r.constant > 0);
    CHECK(r.window_max == 30);
}

TEST_CASE("H_k sup norms") {
    const auto r = hk_bound_check(trunc4_40(), 20, 12, 5);
    CHECK(r.random.slope <= 4.6);
    CHECK(r.kernel.slope <= 4.6);
    // H_1 = span{Z, Zbar}: K_1(1, 1) = 2 (2 lambda + 1)
    const auto small = hk_bound_check(trunc4_12(), 3, 4, 5, 12);
    CHECK(small.kernel.data.front().second == doctest::Approx(std::sqrt(18.0)));
    for (std::size_t k = 0; k < small.random.data.size(); ++k)
        CHECK(small.random.data[k].second <= small.kernel.data[k].second * (1 + 1e-12));
}

TEST_CASE("series estimate") {
    using boost::multiprecision::float128;
    float128 ref = 0;
    for (int k = 1; k < 200; ++k) ref += pow(float128(k), 9) * exp(-float128(1.5) * k * k);
    CHECK(std::abs(series_sum(4.5, 0.75, 1.0) - static_cast<long double>(ref)) < 1e-12L * static_cast<long double>(ref));

    const auto ts = dyadic_times(1e-4, 1);
    CHECK(ts.size() == 14);
    const auto r = sobolev_series_check(4.5, 0.75, ts);
    CHECK(r.fit.slope == doctest::Approx(-5).epsilon(0.01));
    CHECK(r.corrected_ratio < 1.1);
    // the stated normalization t^{(p+1)/2} leaves a t^{-p/2} growth
    CHECK(r.ratio > 1e8);
    CHECK_FALSE(r.pass);
    const auto doubled = sobolev_series_check(4.5, 1.5, ts);
    CHECK(doubled.normalized_sup < r.normalized_sup);
}

TEST_CASE("kernel of K squared") {
    const auto& t = trunc4_12();
    const auto grid = sup_candidates(6);
    std::vector<double> nu;
    for (int k = 1; k <= 10; ++k) nu.push_back(std::exp(-k));
    const auto r = kernel_bound_check(nu, t, grid);
    CHECK(r.pass);
    CHECK(r.kernel_sup > 0);

    const auto one = kernel_bound_check({1.0}, t, grid);
    CHECK(one.kernel_sup == doctest::Approx(18));
    CHECK(one.pass);
    CHECK(one.series == doctest::Approx(1));

    const auto zero = kernel_bound_check(std::vector<double>(5, 0.0), t, grid);
    CHECK(zero.kernel_sup == 0);
    CHECK(zero.pass);
    CHECK_THROWS_AS(kernel_bound_check(std::vector<double>(13, 1.0), t, grid), std::invalid_argument);
}
