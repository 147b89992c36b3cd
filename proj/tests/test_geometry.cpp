#include <doctest.h>

#include <numbers>
#include <sstream>

#include "deltoid/geometry.hpp"
#include "deltoid/operator.hpp"

using namespace deltoid;

TEST_CASE("z_k") {
    const auto o = zk(TrianglePoint{0, 0});
    for (const auto& z : o) CHECK(std::abs(z - 1.0) < 1e-15);
    for (const auto& p : sample_interior(200, SampleMode::low_discrepancy, 1)) {
        const auto z = zk(p);
        CHECK(std::abs(z[0] * z[1] * z[2] - 1.0) < 1e-12);
        for (const auto& v : z) CHECK(std::abs(std::abs(v) - 1) < 1e-12);
    }
}

TEST_CASE("lattice translates and reflections") {
    constexpr double pi = std::numbers::pi;
    for (const auto& p : sample_interior(20, SampleMode::low_discrepancy, 2)) {
        const auto a = zk(p);
        const auto b = zk(TrianglePoint{p.x + 2 * pi, p.y + 2 * pi / std::sqrt(3.0)});
        for (int k = 0; k < 3; ++k) CHECK(std::abs(a[k] - b[k]) < 1e-12);
        // reflection through the edge on the x axis swaps z2 and z3
        const auto r = zk(TrianglePoint{p.x, -p.y});
        CHECK(std::abs(r[0] - a[0]) < 1e-12);
        CHECK(std::abs(r[1] - a[2]) < 1e-12);
        CHECK(std::abs(r[2] - a[1]) < 1e-12);
        // translating by the top vertex rotates Z by a cube root of unity
        const auto c = fundamental_triangle()[2];
        const auto zt = deltoid_coordinate(p.x + c.x, p.y + c.y);
        CHECK(std::abs(zt - std::polar(1.0, 2 * pi / 3) * triangle_to_deltoid(p).z) < 1e-12);
    }
}

TEST_CASE("W density") {
    const auto t = fundamental_triangle();
    // midpoint of the edge from 0 to (4pi/3, 0) has z2 = z3
    const TrianglePoint mid{(t[0].x + t[1].x) / 2, (t[0].y + t[1].y) / 2};
    CHECK(std::abs(w_density(mid).value) < 1e-12);
    for (const auto& p : sample_interior(1000, SampleMode::low_discrepancy, 4)) {
        const auto w = w_density(p);
        CHECK(w.value > 0);
        CHECK(w.imag_residual < 1e-12);
    }
}

TEST_CASE("discriminant constant from the Sylvester resultant") {
    const auto d = derive_discriminant_constant();
    CHECK(d.proportional);
    CHECK(d.constant == 108);
    // a^2 b^2 - 4 b^3 - 4 a^3 c - 27 c^2 + 18 a b c with a = -3Z, b = 3Zbar, c = -1
    const auto Z = BivarPoly::Z(), Zb = BivarPoly::Zbar();
    const auto closed = GaussRat(81) * Z * Z * Zb * Zb - GaussRat(108) * pow(Zb, 3) - GaussRat(108) * pow(Z, 3) -
                        BivarPoly(27) + GaussRat(162) * Z * Zb;
    CHECK(d.discriminant == closed);
}

TEST_CASE("discriminant identity W = 108 P") {
    const auto r = discriminant_check(1000, 17);
    CHECK(r.points == 1000);
    CHECK(r.max_relative_error < 1e-10);
    CHECK(r.min_w > 0);
}

TEST_CASE("triangle to deltoid") {
    CHECK(std::abs(triangle_to_deltoid({0, 0}).z - 1.0) < 1e-15);
    CHECK(std::abs(triangle_to_deltoid(triangle_center()).z) < 1e-15);
    for (const auto& p : sample_interior(400, SampleMode::grid)) CHECK(is_interior(triangle_to_deltoid(p)));
    // edges map onto the boundary curve
    const auto t = fundamental_triangle();
    for (int e = 0; e < 3; ++e)
        for (double s = 0; s <= 1; s += 0.05) {
            const auto& a = t[e];
            const auto& b = t[(e + 1) % 3];
            const TrianglePoint q{a.x + s * (b.x - a.x), a.y + s * (b.y - a.y)};
            CHECK(std::abs(membership_residual(triangle_to_deltoid(q))) < 1e-9);
        }
}

TEST_CASE("sampling") {
    const auto one = sample_interior(1, SampleMode::low_discrepancy, 9);
    REQUIRE(one.size() == 1);
    CHECK(one[0].x == triangle_center().x);
    CHECK(sample_interior(1, SampleMode::grid)[0].y == triangle_center().y);
    const auto g = sample_interior(49, SampleMode::grid);
    CHECK(g.size() == 49);
    for (const auto& p : g) CHECK(w_density(p).value >= 1e-12);
    CHECK_THROWS_AS(sample_interior(50, SampleMode::grid), std::invalid_argument);
    CHECK_THROWS_AS(sample_interior(0, SampleMode::grid), std::invalid_argument);
    const auto a = sample_interior(100, SampleMode::low_discrepancy, 42);
    const auto b = sample_interior(100, SampleMode::low_discrepancy, 42);
    const auto c = sample_interior(100, SampleMode::low_discrepancy, 43);
    bool same = true, differ = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        same = same && a[i].x == b[i].x && a[i].y == b[i].y;
        differ = differ || a[i].x != c[i].x;
    }
    CHECK(same);
    CHECK(differ);
    for (const auto& p : a) CHECK(w_density(p).value >= 1e-12);
}

TEST_CASE("pushforward of the Euclidean metric is Gamma of L^(1)") {
    for (const auto& p : sample_interior(100, SampleMode::low_discrepancy, 8)) {
        const auto j = pushforward_metric(p);
        const auto g = gamma_at(triangle_to_deltoid(p).z);
        CHECK((j - g).cwiseAbs().maxCoeff() < 1e-8);
    }
}

TEST_CASE("csv") {
    std::ostringstream os;
    write_points_csv(os, sample_interior(4, SampleMode::grid));
    const auto s = os.str();
    CHECK(s.rfind("x,y,re_z,im_z,w\n", 0) == 0);
    CHECK(std::count(s.begin(), s.end(), '\n') == 5);
}
