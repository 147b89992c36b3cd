#include <doctest.h>

#include <random>

#include "deltoid/operator.hpp"
#include "oracles.hpp"

using namespace deltoid;

namespace {

const BivarPoly Z = BivarPoly::Z();
const BivarPoly Zb = BivarPoly::Zbar();

}  // namespace

TEST_CASE("gamma on coordinates") {
    CHECK(gamma(Z, Z) == Zb - Z * Z);
    CHECK(gamma(Z, Zb) == GaussRat(Rat(1, 2)) * (BivarPoly(1) - Z * Zb));
    CHECK(gamma(BivarPoly(3), Z * Z * Zb).is_zero());
}

TEST_CASE("generator") {
    for (const Rat l : {Rat(4), Rat(1), Rat(7, 2), Rat(1, 3)}) {
        const Lambda lam(l);
        CHECK(generator(Z, lam) == GaussRat(-l) * Z);
        CHECK(generator(Z * Zb, lam) == GaussRat(-(2 * l + 1)) * Z * Zb + BivarPoly(1));
        CHECK(generator(BivarPoly(1), lam).is_zero());
    }
}

TEST_CASE("generator matches the triangle representation") {
    using oracle::LD;
    const std::vector<std::pair<BivarPoly, std::function<oracle::CLD(oracle::CLD)>>> cases = {
        {Z * Zb, [](oracle::CLD z) { return z * std::conj(z); }},
        {Z * Z * Zb, [](oracle::CLD z) { return z * z * std::conj(z); }},
        {pow(Zb, 3), [](oracle::CLD z) { return std::pow(std::conj(z), 3); }},
    };
    const auto pts = sample_interior(5, SampleMode::low_discrepancy, 3);
    for (const double lam : {4.0, 3.5, 1.0}) {
        const Lambda l(parse_rat(lam == 3.5 ? "7/2" : (lam == 4.0 ? "4" : "1")));
        for (const auto& [poly, fn] : cases) {
            const auto lf = generator(poly, l);
            for (const auto& p : pts) {
                auto f = [&](LD x, LD y) { return fn(deltoid_coordinate(x, y)); };
                const auto fd = oracle::triangle_generator(f, lam, p.x, p.y);
                const auto ex = eval(lf, triangle_to_deltoid(p).z);
                CHECK(std::abs(std::complex<double>(fd) - ex) < 1e-5);
            }
        }
    }
}

TEST_CASE("gamma2") {
    CHECK(gamma2(BivarPoly(2), Z * Z, Lambda(4)).is_zero());
    for (const Rat l : {Rat(1), Rat(4), Rat(7, 2)}) {
        const Lambda lam(l);
        const auto g2 = eval_exact(gamma2(Z, Z, lam), Rat(0));
        const auto g = eval_exact(gamma(Z, Z), Rat(0));
        const auto lz = eval_exact(generator(Z, lam), Rat(0));
        const auto m = g2 - GaussRat(Rat(3) * (l - 1) / 4) * g - GaussRat(Rat(1) / (2 * l)) * lz * lz;
        CHECK(m.re >= 0);
    }
    // CD(9/4, 8) for lambda = 4 on random real quadratics.
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coef(-9, 9);
    const Lambda lam(4);
    const auto pts = sample_interior(50, SampleMode::low_discrepancy, 5);
    for (int t = 0; t < 10; ++t) {
        BivarPoly g;
        for (int d = 1; d <= 2; ++d)
            for (int i = 0; i <= d; ++i) g.add_term({i, d - i}, GaussRat(Rat(coef(rng)), Rat(coef(rng))));
        const auto f = g + conj_swap(g);
        const auto lf = generator(f, lam);
        const auto m = gamma2(f, f, lam) - GaussRat(Rat(9, 4)) * gamma(f, f) - GaussRat(Rat(1, 8)) * lf * lf;
        for (const auto& p : pts) CHECK(eval(m, triangle_to_deltoid(p).z).real() >= -1e-10);
    }
}

TEST_CASE("boundary polynomial") {
    const auto p = boundary_poly();
    CHECK(eval_exact(p, Rat(0)) == GaussRat(Rat(1, 4)));
    CHECK(eval_exact(p, Rat(1)).is_zero());
    CHECK(eval_exact(p, Rat(1, 3)).re > 0);
    const auto r = check_boundary_equation();
    CHECK(r.pass);
    CHECK(r.residual_z.is_zero());
    CHECK(r.residual_zbar.is_zero());
    const auto bad = check_boundary_equation(p + GaussRat(Rat(1, 1000)) * Z);
    CHECK_FALSE(bad.pass);
    CHECK_FALSE(bad.residual_z.is_zero());
}

TEST_CASE("hessian of log P") {
    const auto direct = hessian_logP_direct();
    const auto reduced = hessian_logP_reduced();
    CHECK(direct == reduced);
    CHECK(reduced.r11 == GaussRat(-3) * (Zb - Z * Z) + GaussRat(Rat(3, 2)) * (Zb - GaussRat(2) * Z * Z));
    CHECK(eval_exact(reduced.r12, Rat(0)) == GaussRat(Rat(-3, 2)));
}

TEST_CASE("outer product of grad log P") {
    const auto m = outer_logP();
    CHECK(eval(m.r12, std::complex<double>(0.3, 0.2)).real() == doctest::Approx(9 * 0.13));
    CHECK(eval_exact(m.r11, Rat(0)).is_zero());
    CHECK(m.r11 == GaussRat(9) * Z * Z);
    CHECK(m.r22 == GaussRat(9) * Zb * Zb);
    // Gamma(log P, Z) Gamma(log P, Zbar) with Gamma(Z, log P) = -3Z.
    CHECK(m.r12 == GaussRat(9) * Z * Zb);
}
