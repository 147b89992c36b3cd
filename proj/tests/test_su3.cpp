#include <doctest.h>

#include <cmath>

#include "deltoid/eigen_poly.hpp"
#include "deltoid/operator.hpp"
#include "deltoid/su3.hpp"

using namespace deltoid;

namespace {

using CLD = std::complex<long double>;

double dist(CLD a, std::complex<double> b) { return static_cast<double>(std::abs(a - CLD(b.real(), b.imag()))); }

long double max_coeff(const EntryPoly& p) {
    long double m = 0;
    for (const auto& [e, c] : p.terms()) m = std::max(m, std::abs(c));
    return m;
}

}  // namespace

TEST_CASE("Haar samples") {
    const auto us = haar_sample(3, 5000);
    CHECK(us.size() == 5000);
    for (const auto& u : us) CHECK_NOTHROW(SpecialUnitary3::checked(u.u));
    const auto again = haar_sample(3, 5000);
    CHECK((again[4321].u - us[4321].u).norm() == 0);
    CHECK((haar_sample(4, 1)[0].u - us[0].u).norm() > 0);
    CHECK_THROWS_AS(haar_sample(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(SpecialUnitary3::checked(2 * Eigen::Matrix3cd::Identity()), std::invalid_argument);
}

TEST_CASE("trace moments") {
    const auto s = trace_statistics(haar_sample(1, 100000));
    CHECK(std::abs(s.mean_trace.real()) < 3 * s.trace_se);
    CHECK(std::abs(s.mean_trace.imag()) < 3 * s.trace_se);
    const Rat m11 = moments(Lambda(Rat(4)), 2)(1, 1);
    CHECK(m11 == Rat(1, 9));
    CHECK(std::abs(s.mean_abs2 - to_double(m11)) < 3 * s.abs2_se);
}

TEST_CASE("Haar invariance under left multiplication") {
    const auto v = haar_sample(21, 1)[0].u;
    auto moved = haar_sample(22, 40000);
    for (auto& u : moved) u.u = v * u.u;
    const auto a = trace_statistics(haar_sample(23, 40000));
    const auto b = trace_statistics(moved);
    const double se_tr = std::hypot(a.trace_se, b.trace_se);
    CHECK(std::abs(a.mean_trace.real() - b.mean_trace.real()) < 3 * se_tr);
    CHECK(std::abs(a.mean_trace.imag() - b.mean_trace.imag()) < 3 * se_tr);
    CHECK(std::abs(a.mean_abs2 - b.mean_abs2) < 3 * std::hypot(a.abs2_se, b.abs2_se));
}

TEST_CASE("Lie basis") {
    const auto& b = lie_basis();
    CHECK(b.a == doctest::Approx(std::sqrt(2.0 / 3)));
    CHECK(1 + 3 * b.a * b.a == doctest::Approx(3));
    CHECK(2 / (b.a * b.a) == doctest::Approx(3));
    Eigen::Matrix3cd cas = Eigen::Matrix3cd::Zero();
    for (const auto& x : b.x) {
        CHECK((x + x.adjoint()).norm() < 1e-15);
        CHECK(std::abs(x.trace()) < 1e-15);
        cas += x * x;
    }
    // Casimir -16/3 I
    CHECK((cas + 16.0 / 3 * Eigen::Matrix3cd::Identity()).norm() < 1e-14);
    CHECK(b.names[3] == "S12");
}

TEST_CASE("commutator table and Ricci constant") {
    const auto t = commutator_table();
    CHECK(t.size() == 36);
    const auto& b = lie_basis();
    const Eigen::Matrix3cd c = b.x[0] * b.x[3] - b.x[3] * b.x[0];
    CHECK((c - 2 / b.a * b.x[6]).norm() < 1e-14);
    const auto r = ricci_report();
    CHECK(std::abs(r.constant - 3) < 1e-10);
    CHECK(r.max_table_residual < 1e-12);
    CHECK(r.max_expansion_residual < 1e-12);
    CHECK(ricci_constant() == doctest::Approx(3).epsilon(1e-12));
}

TEST_CASE("entry formulas") {
    CHECK(entry_laplacian_coefficient() == doctest::Approx(-16.0 / 3));
    const Eigen::Matrix3cd id = Eigen::Matrix3cd::Identity();
    CHECK(std::abs(entry_gamma(0, 0, 0, 0, id, EntryGammaKind::zzbar) - 4.0 / 3) < 1e-15);
    CHECK(std::abs(entry_gamma(0, 1, 0, 2, id, EntryGammaKind::zzbar)) < 1e-15);
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) {
            const auto l = su3_generator(EntryPoly::z(p, q));
            const auto e = EntryPoly::z(p, q) * CLD(-16.0L / 3);
            CHECK(max_coeff(l - e) < 1e-14L);
        }
}

TEST_CASE("vector fields against the entry formulas") {
    const auto us = haar_sample(31, 100);
    double worst = 0;
    for (const auto& u : us)
        for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l)
                for (int r = 0; r < 3; ++r)
                    for (int q = 0; q < 3; ++q) {
                        const auto f = EntryPoly::z(k, l);
                        worst = std::max(worst, std::abs(vectorfield_gamma_oracle(f, EntryPoly::z(r, q), u.u) -
                                                         entry_gamma(k, l, r, q, u.u, EntryGammaKind::zz)));
                        worst = std::max(worst, std::abs(vectorfield_gamma_oracle(f, EntryPoly::zbar(r, q), u.u) -
                                                         entry_gamma(k, l, r, q, u.u, EntryGammaKind::zzbar)));
                    }
    CHECK(worst < 1e-10);
    CHECK(su3_gamma(EntryPoly(2.0), EntryPoly::z(0, 1)).is_zero());

    const auto z = EntryPoly::trace_z();
    for (const auto& u : haar_sample(32, 20)) {
        const auto zz = u.z();
        CHECK(std::abs(vectorfield_gamma_oracle(z, conj(z), u.u) - 2.0 / 3 * (1.0 - std::norm(zz))) < 1e-12);
        // (3/4) Gamma^SU equals the deltoid Gamma(Z, Zbar)
        CHECK(std::abs(0.75 * vectorfield_gamma_oracle(z, conj(z), u.u) - 0.5 * (1.0 - std::norm(zz))) < 1e-12);
    }
}

TEST_CASE("characteristic polynomial identities") {
    for (const auto& u : haar_sample(41, 30)) {
        const auto r = charpoly_identity_check(u, 2.0, {0, 3});
        CHECK(r.gamma < 1e-9);
        CHECK(r.generator < 1e-9);
        const auto s = charpoly_identity_check(u, {0.3, -0.7}, {0.3, -0.7});
        CHECK(std::isfinite(s.gamma));
        CHECK(s.gamma < 1e-9);
    }
    const auto id = charpoly_identity_check({Eigen::Matrix3cd::Identity()}, 2.0, {0, 3});
    CHECK(id.gamma < 1e-12);
    CHECK(id.generator < 1e-12);
}

TEST_CASE("X = Y limit of the divided difference") {
    const auto u = haar_sample(42, 1)[0];
    const std::complex<double> x(0.4, 0.9);
    // continuity in Y at Y = X
    const auto a = charpoly_identity_check(u, x, x);
    const auto b = charpoly_identity_check(u, x, x + 1e-7);
    CHECK(a.gamma < 1e-9);
    CHECK(b.gamma < 1e-9);
}

TEST_CASE("pushforward to the deltoid at lambda = 4") {
    const auto Z = BivarPoly::Z(), Zb = BivarPoly::Zbar();
    const auto us = haar_sample(51, 100);
    const auto r = pushforward_check({Z, Z * Zb, pow(Z, 3), GaussRat(Rat(2), Rat(-1)) * Z * Z * Zb + Zb}, us);
    CHECK(r.max_gamma_residual < 1e-9);
    CHECK(r.max_generator_residual < 1e-9);
    const Lambda lam(Rat(4));
    CHECK(generator(Z, lam) == GaussRat(-4) * Z);
    CHECK(generator(Z * Zb, lam) == GaussRat(-9) * Z * Zb + BivarPoly(1));
    for (const auto& u : haar_sample(52, 10)) {
        const auto z = u.z();
        const auto f = compose_trace(Z * Zb);
        CHECK(dist(CLD(0.75L) * su3_generator(f)(u.u), -9.0 * std::norm(z) + 1.0) < 1e-12);
    }
}

TEST_CASE("CD(3, 8)") {
    const auto r = cd38_sample_check(12, 20, 61);
    CHECK(r.points == 240);
    CHECK(r.pass);
    CHECK(r.min_margin >= -1e-8);
    // linear functions of the entries
    const auto f = EntryPoly::z(0, 0) + EntryPoly::zbar(0, 0);
    const auto lf = su3_generator(f), g = su3_gamma(f, f), g2 = su3_gamma2(f, f);
    for (const auto& u : haar_sample(62, 20)) {
        const CLD l = lf(u.u);
        const long double m = (g2(u.u) - CLD(3) * g(u.u) - l * l / CLD(8)).real();
        CHECK(m >= -1e-8L);
    }
}
