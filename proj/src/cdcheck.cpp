#include "deltoid/cdcheck.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include <boost/multiprecision/float128.hpp>

namespace deltoid {

using boost::multiprecision::float128;

CDParams CDParams::from_rho_n(const Lambda& lam, const Rat& rho, const Rat& n) {
    const Rat l1 = lam.value() - 1;
    if (l1 <= 0) throw std::invalid_argument("tensor form needs lambda > 1");
    if (n <= 2) throw std::invalid_argument("tensor form needs n > 2");
    return {lam.value(), rho, n, l1 / (3 * (n - 2)), 3 * rho / l1};
}

CDParams CDParams::from_a1_b1(const Lambda& lam, const Rat& a1, const Rat& b1) {
    const Rat l1 = lam.value() - 1;
    if (l1 <= 0) throw std::invalid_argument("tensor form needs lambda > 1");
    if (a1 <= 0) throw std::invalid_argument("tensor form needs a1 > 0");
    return {lam.value(), l1 * b1 / 3, 2 + l1 / (3 * a1), a1, b1};
}

HermitianTensorField tensor_residual(const Rat& a1, const Rat& b1) {
    const auto& g = gamma_matrix();
    const HermitianTensorField gam{g.g11, g.g12, g.g22};
    const HermitianTensorField dgam{euler(g.g11), euler(g.g12), euler(g.g22)};
    return GaussRat(3 - b1) * gam - GaussRat(Rat(3, 2)) * dgam - GaussRat(a1) * outer_logP();
}

namespace {

double cusp_distance(std::complex<double> z) {
    double d = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 3; ++k) d = std::min(d, std::abs(z - std::polar(1.0, 2 * std::numbers::pi * k / 3)));
    return d;
}

}  // namespace

PsdReport psd_check(const HermitianTensorField& t, const std::vector<DeltoidPoint>& points, double tolerance) {
    const NumericPoly<double> r11(t.r11), r12(t.r12), r22(t.r22);
    PsdReport rep;
    rep.tolerance = tolerance;
    rep.min_r12 = rep.min_det = std::numeric_limits<double>::infinity();
    rep.nearest_cusp_failure = std::numeric_limits<double>::infinity();
    double worst = std::numeric_limits<double>::infinity();
    rep.points.reserve(points.size());
    for (const auto& p : points) {
        PsdPoint q;
        q.z = p.z;
        q.r12 = r12(p.z).real();
        q.det = q.r12 * q.r12 - (r11(p.z) * r22(p.z)).real();
        q.pass = q.r12 >= tolerance && q.det >= tolerance;
        rep.min_r12 = std::min(rep.min_r12, q.r12);
        rep.min_det = std::min(rep.min_det, q.det);
        if (!q.pass) {
            ++rep.failures;
            rep.nearest_cusp_failure = std::min(rep.nearest_cusp_failure, cusp_distance(p.z));
        }
        const double m = std::min(q.r12, q.det);
        if (m < worst) {
            worst = m;
            rep.worst_z = p.z;
        }
        rep.points.push_back(q);
    }
    rep.worst_cusp_distance = cusp_distance(rep.worst_z);
    rep.pass = rep.failures == 0;
    return rep;
}

std::vector<DeltoidPoint> mapped_grid(std::size_t k) {
    std::vector<DeltoidPoint> out;
    for (const auto& p : sample_interior(k * k, SampleMode::grid)) out.push_back(triangle_to_deltoid(p));
    return out;
}

namespace {

// Restriction to the real axis Z = Zbar = x.
UnivarPoly along_real_axis(const BivarPoly& p) {
    std::vector<GaussRat> c(std::max(0, p.degree() + 1));
    for (const auto& [m, v] : p.terms()) c[m.degree()] += v;
    std::vector<Rat> re;
    for (const auto& v : c) {
        if (!v.is_real()) throw std::domain_error("polynomial is not real on the real axis");
        re.push_back(v.re);
    }
    return UnivarPoly(std::move(re));
}

UnivarPoly lin(const Rat& c0, const Rat& c1) { return UnivarPoly(std::vector<Rat>{c0, c1}); }

UnivarPoly ray_polynomial(const Rat& a1, const Rat& b1) {
    const auto t = tensor_residual(a1, b1);
    const auto r12 = along_real_axis(t.r12);
    return r12 * r12 - along_real_axis(t.r11) * along_real_axis(t.r22);
}

}  // namespace

FactorizationReport factorization_check(const Rat& a1, const Rat& b1) {
    FactorizationReport r;
    r.a1 = a1;
    r.b1 = b1;
    r.lhs = ray_polynomial(a1, b1);
    const UnivarPoly quad(std::vector<Rat>{3 - b1, 3 - 2 * b1, 3 * (b1 - 12 * a1)});
    r.factored = UnivarPoly(Rat(1, 4)) * lin(1, -1) * lin(3 - b1, b1) * quad;
    r.identity = r.lhs == r.factored;
    if (!r.identity) throw IdentityMismatch("factorization does not match", r.lhs - r.factored);
    if (a1 == Rat(1, 6)) {
        r.short_form = lin(1, -1) * lin(1, -1) * lin(3 - b1, 3 * (2 - b1));
        r.short_form_equal = *r.short_form == r.lhs;
    }
    r.nonneg_ray = nonnegative_on(r.lhs, 0, 1);
    r.nonneg_opposite = nonnegative_on(reflect(r.lhs), 0, Rat(1, 3));
    return r;
}

std::vector<FactorizationReport> factorization_grid() {
    const std::vector<Rat> as = {Rat(0), Rat(1, 12), Rat(1, 6), Rat(1, 4), Rat(1, 3)};
    const std::vector<Rat> bs = {Rat(0), Rat(1), Rat(2), Rat(9, 4), Rat(3)};
    std::vector<FactorizationReport> out;
    for (const auto& a : as)
        for (const auto& b : bs) out.push_back(factorization_check(a, b));
    return out;
}

Rat max_b1_nonnegative(const Rat& a1, const Rat& width) {
    auto ok = [&](const Rat& b1) { return nonnegative_on(ray_polynomial(a1, b1), 0, 1).nonnegative; };
    Rat lo = 0, hi = 3;
    if (!ok(lo)) return Rat(-1);
    if (ok(hi)) return hi;
    while (hi - lo > width) {
        const Rat mid = (lo + hi) / 2;
        (ok(mid) ? lo : hi) = mid;
    }
    return lo;
}

TriangleScanPoint triangle_b(double a, double theta, double phi) {
    TriangleScanPoint p;
    p.theta = theta;
    p.phi = phi;
    double A1, B1, C1, N;
    detail::trig_abcn(a, theta, phi, A1, B1, C1, N);
    if (N < 1e-6) {
        float128 qa1, qb1, qc1, qn;
        detail::trig_abcn(float128(a), float128(theta), float128(phi), qa1, qb1, qc1, qn);
        if (qn < 1e-14) throw DegenerateDenominator("N below 1e-14 at the scan point");
        p.A1 = static_cast<double>(qa1);
        p.B1 = static_cast<double>(qb1);
        p.C1 = static_cast<double>(qc1);
        p.N = static_cast<double>(qn);
        p.b_of_a = static_cast<double>(detail::smallest_eigen_over_n(qa1, qb1, qc1, qn));
        return p;
    }
    p.A1 = A1;
    p.B1 = B1;
    p.C1 = C1;
    p.N = N;
    p.b_of_a = detail::smallest_eigen_over_n(A1, B1, C1, N);
    return p;
}

ZUForm triangle_abc_zu(long double a, long double theta, long double phi) {
    using C = std::complex<long double>;
    const C z = std::polar(1.0L, theta), u = std::polar(1.0L, phi);
    const C u2 = u * u, u3 = u2 * u, u4 = u3 * u, u5 = u4 * u, u6 = u5 * u;
    const C z2 = z * z, z3 = z2 * z, z4 = z3 * z;
    const C A = 3.0L * ((a * (u2 + 1.0L) + (2 * a - 4) * u) * (1.0L + u6 * z4) -
                        u * z * (u + 1.0L) * (4 * a * (u2 + 1.0L) + u2 - 10.0L * u + 1.0L) * (1.0L + z2 * u3) +
                        2.0L * u2 * z2 * (2 * a * (u4 + 1.0L) + a * (u3 + u) + (6 * a - 12) * u2));
    const C B = 9.0L * (u - 1.0L) * (u - 1.0L) *
                (a * (u6 * z4 + 1.0L) - (u5 * z3 + u * z) - (u4 * z3 + u2 * z) + (4 - 2 * a) * u3 * z2);
    const C Cc = 6.0L * std::sqrt(3.0L) * (u - 1.0L) * (1.0L - z2 * u3) *
                 (a * (u4 * z2 + 1.0L) + a * (u3 * z2 + u) + (1 - 2 * a) * (u3 * z + u * z) - 2.0L * u2 * z);
    const C s = z2 * u4;
    return {-A / s, -B / s, Cc / s};
}

long double b_third_pq(long double theta, long double phi) {
    using C = std::complex<long double>;
    const C z = std::polar(1.0L, theta), u = std::polar(1.0L, phi);
    const C u2 = u * u, u3 = u2 * u, u4 = u3 * u, u6 = u3 * u3;
    const C z2 = z * z, z4 = z2 * z2;
    const C P = (u2 - 4.0L * u + 1.0L) * (1.0L + u6 * z4) -
                4.0L * z * u * (u + 1.0L) * (u2 - 3.0L * u + 1.0L) * (1.0L + z2 * u3) +
                u2 * z2 * (u4 + 8.0L * u3 - 30.0L * u2 + 8.0L * u + 1.0L);
    const C f3 = z2 * u4 + z2 * u3 + z * u3 - 6.0L * z * u2 + z * u + u + 1.0L;
    const C Q = (z2 * u4 - z * u3 - z * u2 + u2 - u + 1.0L) * (z2 * u2 - z2 * u3 + z2 * u4 - z * u - z * u2 + 1.0L) *
                f3 * f3;
    const C d1 = u - 1.0L, d2 = z * u2 - 1.0L, d3 = z * u - 1.0L;
    const C D = d1 * d1 * d2 * d2 * d3 * d3;
    const C s = std::sqrt(Q);
    const long double lo = (0.5L * (P - s) / D).real();
    const long double hi = (0.5L * (P + s) / D).real();
    return std::min(lo, hi);
}

long double b_third_xw(long double theta, long double phi) {
    const long double x = std::cos(phi / 2);
    const long double w = std::cos(theta + 1.5L * phi) - x;
    const long double e = 1 - x * x;
    const long double g = 2 * e - x * w;
    return 0.25L * (g * g + 3 * w * w * e - g * std::sqrt(g * g - 3 * w * w * e)) / (e * w * w);
}

long double t_of(long double theta, long double phi) {
    const long double x = std::cos(phi / 2);
    const long double w = std::cos(theta + 1.5L * phi) - x;
    const long double e = 1 - x * x;
    return std::abs((2 * e - x * w) / (w * std::sqrt(e)));
}

long double b_third_t(long double t) { return 0.25L * (3 + 3 * t / (t + std::sqrt(t * t - 3))); }

std::pair<double, double> triangle_to_angles(const TrianglePoint& p) {
    return {3 * p.x, (std::sqrt(3.0) * p.y - 3 * p.x) / 2};
}

TrianglePoint angles_to_triangle(double theta, double phi) { return {theta / 3, (theta + 2 * phi) / std::sqrt(3.0)}; }

namespace {

struct Scanner {
    double a;
    ScanReport& rep;

    // Returns b or +inf when the point sits in the excluded collar.
    double visit(const TrianglePoint& p) {
        const auto [th, ph] = triangle_to_angles(p);
        try {
            const auto s = triangle_b(a, th, ph);
            ++rep.evaluated;
            if (s.b_of_a < rep.inf_estimate) {
                rep.inf_estimate = s.b_of_a;
                rep.argmin = p;
                rep.argmin_theta = th;
                rep.argmin_phi = ph;
            }
            return s.b_of_a;
        } catch (const DegenerateDenominator&) {
            ++rep.skipped;
            return std::numeric_limits<double>::infinity();
        }
    }
};

}  // namespace

ScanReport scan_inf_b(double a, int grid, bool refine, int levels, int corner_grid) {
    if (grid < 3) throw std::invalid_argument("scan grid needs at least 3 steps");
    ScanReport rep;
    rep.a = a;
    rep.inf_estimate = std::numeric_limits<double>::infinity();
    Scanner sc{a, rep};
    double level_min = std::numeric_limits<double>::infinity();
    for (int i = 1; i < grid; ++i)
        for (int j = 1; i + j < grid; ++j)
            level_min = std::min(level_min, sc.visit(triangle_point(double(i) / grid, double(j) / grid)));
    rep.trace.push_back({0, 1.0, level_min, rep.inf_estimate});
    if (!refine) return rep;
    const auto v = fundamental_triangle();
    for (int m = 1; m <= levels; ++m) {
        const double s = std::ldexp(1.0, -m);
        level_min = std::numeric_limits<double>::infinity();
        for (int k = 0; k < 3; ++k) {
            const auto& o = v[k];
            const auto& p1 = v[(k + 1) % 3];
            const auto& p2 = v[(k + 2) % 3];
            for (int i = 1; i < corner_grid; ++i)
                for (int j = 1; i + j < corner_grid; ++j) {
                    const double u = s * i / corner_grid, w = s * j / corner_grid;
                    const TrianglePoint q{o.x + u * (p1.x - o.x) + w * (p2.x - o.x),
                                          o.y + u * (p1.y - o.y) + w * (p2.y - o.y)};
                    level_min = std::min(level_min, sc.visit(q));
                }
        }
        rep.trace.push_back({m, s, level_min, rep.inf_estimate});
    }
    return rep;
}

std::vector<double> default_probe_thetas() {
    std::vector<double> t;
    for (int k = 0; k <= 12; ++k) t.push_back(std::pow(10.0, -1.0 - k / 4.0));
    return t;
}

ProbeReport divergence_probe(double a, Curve curve, double c, const std::vector<double>& thetas) {
    ProbeReport r;
    r.a = a;
    r.c = c;
    r.curve = curve;
    r.predicted_A1 = 12 * (1 - a);
    r.predicted_B1 = 18 * c * c * (1 - 2 * a);
    r.predicted_C1 = -24 * std::sqrt(3.0) * c * a;
    r.predicted_limit = 9 * (1 - 3 * a) / (2 * (1 - a));
    r.min_b = std::numeric_limits<double>::infinity();
    for (const double th : thetas) {
        const float128 t = th;
        const float128 ph = curve == Curve::quadratic ? float128(c) * t * t : float128(c) * t;
        float128 A1, B1, C1, N;
        detail::trig_abcn(float128(a), t, ph, A1, B1, C1, N);
        ProbeSample s;
        s.theta = th;
        s.phi = static_cast<double>(ph);
        const float128 b = detail::smallest_eigen_over_n(A1, B1, C1, N);
        s.b = static_cast<double>(b);
        s.b_theta2 = static_cast<double>(b * t * t);
        s.A1_ratio = static_cast<double>(A1 / (t * t * t * t));
        s.B1_ratio = static_cast<double>(B1 / (t * t * t * t * t * t));
        s.C1_ratio = static_cast<double>(C1 / (t * t * t * t * t));
        r.min_b = std::min(r.min_b, s.b);
        r.samples.push_back(s);
    }
    if (r.samples.empty()) return r;
    const auto near = std::min_element(r.samples.begin(), r.samples.end(), [](const auto& x, const auto& y) {
        return std::abs(std::log(x.theta / 1e-3)) < std::abs(std::log(y.theta / 1e-3));
    });
    auto rel = [](double v, double ref) { return ref == 0 ? std::abs(v) : std::abs(v / ref - 1); };
    const auto& last = *std::min_element(r.samples.begin(), r.samples.end(),
                                         [](const auto& x, const auto& y) { return x.theta < y.theta; });
    if (curve == Curve::quadratic) {
        r.max_ratio_error = std::max({rel(near->A1_ratio, r.predicted_A1), rel(near->B1_ratio, r.predicted_B1),
                                      rel(near->C1_ratio, r.predicted_C1)});
        r.asymptotics_ok = r.max_ratio_error < 0.05;
        if (std::abs(1 - 3 * a) < 1e-12)
            r.limit_sign_ok = std::abs(last.b_theta2) < 1e-3;
        else
            r.limit_sign_ok = (last.b_theta2 < 0) == (1 - 3 * a < 0) && rel(last.b_theta2, r.predicted_limit) < 0.05;
    } else {
        // b keeps decreasing as theta shrinks.
        bool mono = true;
        auto sorted = r.samples;
        std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return x.theta > y.theta; });
        for (std::size_t k = 1; k < sorted.size(); ++k) mono = mono && sorted[k].b < sorted[k - 1].b;
        r.asymptotics_ok = mono;
        r.limit_sign_ok = last.b_theta2 < 0;
    }
    return r;
}

BivarPoly cd_margin(const BivarPoly& f, const Lambda& lam, const Rat& rho, const Rat& n) {
    const auto lf = generator(f, lam);
    return gamma2(f, f, lam) - GaussRat(rho) * gamma(f, f) - GaussRat(Rat(1) / n) * lf * lf;
}

namespace {

// Real and imaginary parts of Z.
BivarPoly re_z() { return GaussRat(Rat(1, 2)) * (BivarPoly::Z() + BivarPoly::Zbar()); }
BivarPoly im_z() { return GaussRat(Rat(0), Rat(-1, 2)) * (BivarPoly::Z() - BivarPoly::Zbar()); }

std::vector<std::complex<double>> cd_points(std::size_t m, std::uint64_t seed) {
    std::vector<std::complex<double>> z;
    const std::size_t interior = (m + 1) / 2;
    for (const auto& p : sample_interior(interior, SampleMode::low_discrepancy, seed))
        z.push_back(triangle_to_deltoid(p).z);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> unif(0, 1);
    std::uniform_real_distribution<double> depth(0.5, 4);
    const auto v = fundamental_triangle();
    while (z.size() < m) {
        const int k = static_cast<int>(z.size() % 3);
        const double s = std::pow(10.0, -depth(rng));
        double u = unif(rng), w = unif(rng);
        if (u + w > 1) {
            u = 1 - u;
            w = 1 - w;
        }
        const auto& o = v[k];
        const auto& p1 = v[(k + 1) % 3];
        const auto& p2 = v[(k + 2) % 3];
        const TrianglePoint q{o.x + s * (u * (p1.x - o.x) + w * (p2.x - o.x)),
                              o.y + s * (u * (p1.y - o.y) + w * (p2.y - o.y))};
        if (w_density(q).value <= 0) continue;
        z.push_back(triangle_to_deltoid(q).z);
    }
    return z;
}

}  // namespace

Gamma2Report gamma2_sample_check(const Lambda& lam, const Rat& rho, const Rat& n, std::size_t trials,
                                 std::uint64_t seed) {
    if (n <= 0) throw std::invalid_argument("n must be positive");
    Gamma2Report rep;
    rep.lambda = lam.value();
    rep.rho = rho;
    rep.n = n;
    rep.min_margin_random = rep.min_margin_jet = std::numeric_limits<double>::infinity();
    const auto polys = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(trials))));
    const std::size_t per = (trials + polys - 1) / polys;
    const auto pts = cd_points(per, seed);

    const auto X = re_z(), Y = im_z();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (std::size_t t = 0; t < polys; ++t) {
        BivarPoly f;
        for (int d = 1; d <= 3; ++d)
            for (int i = 0; i <= d; ++i) f += GaussRat(coef(rng)) * pow(X, i) * pow(Y, d - i);
        const NumericPoly<double> m(cd_margin(f, lam, rho, n));
        for (const auto& z : pts) {
            const double v = m(z).real();
            ++rep.pairs;
            if (v < rep.min_margin_random) {
                rep.min_margin_random = v;
                rep.argmin_random = z;
                rep.argmin_poly = to_string(f);
            }
        }
    }

    // Worst real quadratic at each point: smallest eigenvalue of the form
    // Gamma2 - rho Gamma - (1/n) L (x) L on the basis below.
    const BivarPoly Z = BivarPoly::Z(), Zb = BivarPoly::Zbar();
    const GaussRat i(Rat(0), Rat(1));
    const std::vector<BivarPoly> basis = {Z + Zb, i * (Z - Zb), Z * Z + Zb * Zb, i * (Z * Z - Zb * Zb), Z * Zb};
    constexpr int K = 5;
    std::vector<NumericPoly<double>> g2, g1, lb;
    for (int k = 0; k < K; ++k) {
        lb.emplace_back(generator(basis[k], lam));
        for (int l = 0; l < K; ++l) {
            g2.emplace_back(gamma2(basis[k], basis[l], lam));
            g1.emplace_back(gamma(basis[k], basis[l]));
        }
    }
    const double r = to_double(rho), inv_n = 1 / to_double(n);
    for (const auto& z : pts) {
        Eigen::Matrix<double, K, K> m;
        Eigen::Matrix<double, K, 1> lv;
        for (int k = 0; k < K; ++k) lv(k) = lb[k](z).real();
        for (int k = 0; k < K; ++k)
            for (int l = 0; l < K; ++l)
                m(k, l) = g2[k * K + l](z).real() - r * g1[k * K + l](z).real() - inv_n * lv(k) * lv(l);
        const Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, K, K>> es(m);
        const double lo = es.eigenvalues()(0);
        if (lo < rep.min_margin_jet) {
            rep.min_margin_jet = lo;
            rep.argmin_jet = z;
            const auto v = es.eigenvectors().col(0);
            std::ostringstream os;
            os.precision(6);
            for (int k = 0; k < K; ++k) os << (k ? " + " : "") << v(k) << "*[" << to_string(basis[k]) << "]";
            rep.argmin_jet_poly = os.str();
        }
    }
    rep.violation_found = std::min(rep.min_margin_random, rep.min_margin_jet) < rep.tolerance;
    return rep;
}

}  // namespace deltoid
