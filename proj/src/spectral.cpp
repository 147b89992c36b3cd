#include "deltoid/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <limits>
#include <numbers>
#include <random>
#include <thread>

#include <boost/multiprecision/float128.hpp>

namespace deltoid {

using boost::multiprecision::float128;

namespace {

// DELTOID_THREADS, else up to 8.
std::size_t worker_count() {
    if (const char* env = std::getenv("DELTOID_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
}

// Runs f(i) for i in [0, n) over a few threads.
template <typename F>
void parallel_for(std::size_t n, F f) {
    const std::size_t workers = worker_count();
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::future<void>> jobs;
    for (std::size_t start = 0; start < n; start += chunk)
        jobs.push_back(std::async(std::launch::async, [&f, start, end = std::min(n, start + chunk)] {
            for (std::size_t i = start; i < end; ++i) f(i);
        }));
    for (auto& j : jobs) j.get();
}

double lambda_double(const Lambda& lam) { return to_double(lam.value()); }

std::array<std::complex<double>, 3> cusps() {
    return {std::complex<double>(1, 0), std::polar(1.0, 2 * std::numbers::pi / 3),
            std::polar(1.0, -2 * std::numbers::pi / 3)};
}

}  // namespace

struct HeatKernelTruncation::Evaluators {
    std::vector<NumericPoly<float128>> polys;
    std::vector<float128> inv_norm;
};

HeatKernelTruncation::HeatKernelTruncation(const Lambda& lam, int max_degree)
    : HeatKernelTruncation(std::make_shared<const EigenTable>(lam, max_degree)) {}

HeatKernelTruncation::HeatKernelTruncation(std::shared_ptr<const EigenTable> table) : table_(std::move(table)) {
    auto ev = std::make_shared<Evaluators>();
    for (const auto& e : table_->all()) {
        ev->polys.emplace_back(e.poly);
        ev->inv_norm.push_back(1 / sqrt(float128(e.norm2.convert_to<float128>())));
        mu_.push_back(to_double(e.mu));
    }
    eval_ = std::move(ev);
}

std::vector<std::complex<double>> HeatKernelTruncation::normalized_values(std::complex<double> z) const {
    return normalized_values(z, max_degree());
}

std::vector<std::complex<double>> HeatKernelTruncation::normalized_values(std::complex<double> z, int degree) const {
    degree = std::min(degree, max_degree());
    std::vector<std::complex<double>> out(static_cast<std::size_t>(degree + 1) * (degree + 2) / 2);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = normalized_value(i, z);
    return out;
}

std::complex<double> HeatKernelTruncation::normalized_value(std::size_t i, std::complex<double> z) const {
    const std::complex<float128> zq(z.real(), z.imag());
    const auto v = eval_->polys[i](zq) * eval_->inv_norm[i];
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

HeatValue heat_diag(const std::vector<std::complex<double>>& values, double t, const HeatKernelTruncation& trunc) {
    if (t <= 0) throw std::invalid_argument("heat_diag needs t > 0");
    const auto& all = trunc.table().all();
    const int n = trunc.max_degree();
    HeatValue h;
    double shell = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double s = std::norm(values[i]);
        h.value += std::exp(-trunc.mu(i) * t) * s;
        if (all[i].p + all[i].q == n) shell += s;
    }
    h.tail_factor = std::exp(-0.75 * n * n * t);
    const double growth = 2 * lambda_double(trunc.lambda()) + 1;
    for (int k = n + 1;; ++k) {
        const double term = shell * std::pow(double(k) / n, growth) * std::exp(-0.75 * k * k * t);
        h.tail_estimate += term;
        if (term < 1e-16 * h.tail_estimate || term == 0) break;
    }
    if (h.tail_estimate > 0.01 * h.value)
        throw TruncationInsufficient("heat_diag tail estimate exceeds 1% of the truncated sum");
    return h;
}

HeatValue heat_diag(const DeltoidPoint& x, double t, const HeatKernelTruncation& trunc) {
    if (membership_residual(x) < -1e-12) throw std::invalid_argument("heat_diag point outside the deltoid");
    return heat_diag(trunc.normalized_values(x.z), t, trunc);
}

std::complex<double> heat_kernel(const DeltoidPoint& x, const DeltoidPoint& y, double t,
                                 const HeatKernelTruncation& trunc) {
    const auto a = trunc.normalized_values(x.z), b = trunc.normalized_values(y.z);
    std::complex<double> s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::exp(-trunc.mu(i) * t) * a[i] * std::conj(b[i]);
    return s;
}

std::complex<double> heat_mass(const DeltoidPoint& x, double t, const HeatKernelTruncation& trunc) {
    const auto v = trunc.normalized_values(x.z);
    const auto& all = trunc.table().all();
    std::complex<double> s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const GaussRat integral = inner_product(all[i].poly, BivarPoly(1), trunc.table().moment_table());
        if (integral.is_zero()) continue;
        const std::complex<double> c(to_double(integral.re), -to_double(integral.im));
        s += std::exp(-trunc.mu(i) * t) * v[i] * c / std::sqrt(to_double(all[i].norm2));
    }
    return s;
}

FitReport loglog_fit(std::vector<std::pair<double, double>> data, double target) {
    FitReport r;
    r.target = target;
    r.data = std::move(data);
    const std::size_t n = r.data.size();
    if (n < 2) throw std::invalid_argument("fit needs at least two points");
    Eigen::MatrixXd a(n, 2);
    Eigen::VectorXd b(n);
    r.window_min = std::numeric_limits<double>::infinity();
    r.window_max = -r.window_min;
    for (std::size_t i = 0; i < n; ++i) {
        const auto [x, y] = r.data[i];
        a(i, 0) = std::log(x);
        a(i, 1) = 1;
        b(i) = std::log(y);
        r.window_min = std::min(r.window_min, x);
        r.window_max = std::max(r.window_max, x);
        r.constant = std::max(r.constant, y / std::pow(x, target));
    }
    const Eigen::Vector2d c = a.colPivHouseholderQr().solve(b);
    r.slope = c(0);
    r.intercept = c(1);
    r.residual = std::sqrt((a * c - b).squaredNorm() / n);
    return r;
}

std::vector<DeltoidPoint> sup_candidates(std::size_t k) {
    std::vector<DeltoidPoint> out;
    for (const auto& c : cusps()) out.push_back({c});
    for (const auto& p : sample_interior(k * k, SampleMode::grid)) out.push_back(triangle_to_deltoid(p));
    return out;
}

FitReport ultracontractivity_fit(const HeatKernelTruncation& trunc, double t_min, double t_max, int steps,
                                 std::size_t grid) {
    if (!(0 < t_min && t_min < t_max) || steps < 2) throw std::invalid_argument("bad t window");
    const auto pts = sup_candidates(grid);
    std::vector<std::vector<std::complex<double>>> values(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) { values[i] = trunc.normalized_values(pts[i].z); });
    std::vector<std::pair<double, double>> data;
    double tail = 0;
    for (int s = 0; s < steps; ++s) {
        const double t = t_min * std::pow(t_max / t_min, double(s) / (steps - 1));
        double sup = 0;
        for (const auto& v : values) {
            const auto h = heat_diag(v, t, trunc);
            sup = std::max(sup, h.value);
            tail = std::max(tail, h.tail_estimate / h.value);
        }
        data.emplace_back(t, sup);
    }
    auto r = loglog_fit(std::move(data), -lambda_double(trunc.lambda()));
    r.max_tail_ratio = tail;
    return r;
}

std::vector<TrianglePoint> closed_triangle_grid(int k) {
    if (k < 1) throw std::invalid_argument("grid needs k >= 1");
    std::vector<TrianglePoint> out;
    for (int i = 0; i <= k; ++i)
        for (int j = 0; i + j <= k; ++j) out.push_back(triangle_point(double(i) / k, double(j) / k));
    return out;
}

namespace {

bool in_closed_triangle(const TrianglePoint& p) {
    // barycentric weights with respect to fundamental_triangle()
    const auto t = fundamental_triangle();
    const double det = (t[1].x - t[0].x) * (t[2].y - t[0].y) - (t[2].x - t[0].x) * (t[1].y - t[0].y);
    const double u = ((p.x - t[0].x) * (t[2].y - t[0].y) - (t[2].x - t[0].x) * (p.y - t[0].y)) / det;
    const double v = ((t[1].x - t[0].x) * (p.y - t[0].y) - (p.x - t[0].x) * (t[1].y - t[0].y)) / det;
    return u >= 0 && v >= 0 && u + v <= 1;
}

// One Newton step on |P|^2 in triangle coordinates; keeps the better point.
double polish(const HeatKernelTruncation& trunc, std::size_t i, const TrianglePoint& p, double start) {
    auto f = [&](double x, double y) { return std::norm(trunc.normalized_value(i, deltoid_coordinate(x, y))); };
    const double h = 1e-4;
    const double f0 = f(p.x, p.y);
    const double fx = (f(p.x + h, p.y) - f(p.x - h, p.y)) / (2 * h);
    const double fy = (f(p.x, p.y + h) - f(p.x, p.y - h)) / (2 * h);
    const double fxx = (f(p.x + h, p.y) - 2 * f0 + f(p.x - h, p.y)) / (h * h);
    const double fyy = (f(p.x, p.y + h) - 2 * f0 + f(p.x, p.y - h)) / (h * h);
    const double fxy = (f(p.x + h, p.y + h) - f(p.x + h, p.y - h) - f(p.x - h, p.y + h) + f(p.x - h, p.y - h)) / (4 * h * h);
    const double det = fxx * fyy - fxy * fxy;
    if (!(fxx < 0 && det > 0)) return start;
    const TrianglePoint q{p.x - (fyy * fx - fxy * fy) / det, p.y - (fxx * fy - fxy * fx) / det};
    if (!in_closed_triangle(q)) return start;
    return std::max(start, f(q.x, q.y));
}

}  // namespace

FitReport supnorm_bound_check(const HeatKernelTruncation& trunc, int max_degree, int grid) {
    if (max_degree > trunc.max_degree() || max_degree < 2) throw std::invalid_argument("degree out of range");
    const auto pts = closed_triangle_grid(grid);
    std::vector<std::complex<double>> zs;
    for (const auto& p : pts) zs.push_back(deltoid_coordinate(p.x, p.y));
    const auto& all = trunc.table().all();
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < all.size(); ++i) {
        const int d = all[i].p + all[i].q;
        // |P_qp| = |P_pq| at every point
        if (d >= 1 && d <= max_degree && all[i].p >= all[i].q) idx.push_back(i);
    }
    std::vector<double> ratio(idx.size());
    parallel_for(idx.size(), [&](std::size_t n) {
        const std::size_t i = idx[n];
        std::vector<std::pair<double, std::size_t>> vals(pts.size());
        for (std::size_t k = 0; k < pts.size(); ++k) vals[k] = {std::norm(trunc.normalized_value(i, zs[k])), k};
        std::partial_sort(vals.begin(), vals.begin() + 3, vals.end(), std::greater<>());
        double best = vals[0].first;
        for (int m = 0; m < 3; ++m) best = std::max(best, polish(trunc, i, pts[vals[m].second], vals[m].first));
        ratio[n] = std::sqrt(best);
    });
    // largest ratio per degree
    std::vector<std::pair<double, double>> per_degree(max_degree + 1, {0, 0});
    for (std::size_t n = 0; n < idx.size(); ++n) {
        const int d = all[idx[n]].p + all[idx[n]].q;
        if (ratio[n] > per_degree[d].second) per_degree[d] = {trunc.mu(idx[n]), ratio[n]};
    }
    const double half = lambda_double(trunc.lambda()) / 2;
    std::vector<std::pair<double, double>> data;
    for (int d = std::max(1, max_degree / 3); d <= max_degree; ++d) data.push_back(per_degree[d]);
    auto r = loglog_fit(std::move(data), half);
    r.window_min = std::max(1, max_degree / 3);
    r.window_max = max_degree;
    for (std::size_t n = 0; n < idx.size(); ++n)
        r.constant = std::max(r.constant, ratio[n] / std::pow(trunc.mu(idx[n]), half));
    return r;
}

HkReport hk_bound_check(const HeatKernelTruncation& trunc, int max_k, int combos, std::uint64_t seed, int grid) {
    if (max_k > trunc.max_degree() || max_k < 2) throw std::invalid_argument("k out of range");
    const auto pts = closed_triangle_grid(grid);
    std::vector<std::vector<std::complex<double>>> values(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) { values[i] = trunc.normalized_values(deltoid_coordinate(pts[i].x, pts[i].y), max_k); });
    const auto& all = trunc.table().all();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> n01;
    std::vector<std::pair<double, double>> rnd, ker;
    for (int k = 1; k <= max_k; ++k) {
        std::vector<std::size_t> shell;
        for (std::size_t i = 0; i < all.size(); ++i)
            if (all[i].p + all[i].q == k) shell.push_back(i);
        const auto m = static_cast<Eigen::Index>(shell.size());
        Eigen::MatrixXcd g(m, m);
        for (Eigen::Index a = 0; a < m; ++a)
            for (Eigen::Index b = 0; b < m; ++b) {
                const auto& pa = all[shell[a]];
                const auto& pb = all[shell[b]];
                const GaussRat ip = inner_product(pa.poly, pb.poly, trunc.table().moment_table());
                g(a, b) = std::complex<double>(to_double(ip.re), to_double(ip.im)) /
                          std::sqrt(to_double(pa.norm2) * to_double(pb.norm2));
            }
        const Eigen::LLT<Eigen::MatrixXcd> llt(g);
        double kernel_sup = 0;
        std::vector<Eigen::VectorXcd> v(pts.size(), Eigen::VectorXcd(m));
        for (std::size_t x = 0; x < pts.size(); ++x) {
            for (Eigen::Index a = 0; a < m; ++a) v[x](a) = values[x][shell[a]];
            kernel_sup = std::max(kernel_sup, v[x].dot(llt.solve(v[x])).real());
        }
        ker.emplace_back(k, std::sqrt(kernel_sup));
        double best = 0;
        for (int c = 0; c < combos; ++c) {
            Eigen::VectorXcd b(m);
            for (Eigen::Index a = 0; a < m; ++a) b(a) = {n01(rng), n01(rng)};
            b /= std::sqrt(b.dot(g * b).real());
            for (const auto& vx : v) best = std::max(best, std::abs(b.dot(vx)));
        }
        rnd.emplace_back(k, best);
    }
    const double target = lambda_double(trunc.lambda()) + 0.5;
    auto window = [max_k](std::vector<std::pair<double, double>> d) {
        std::erase_if(d, [max_k](const auto& e) { return e.first < std::max(1, max_k / 3); });
        return d;
    };
    HkReport r{loglog_fit(window(rnd), target), loglog_fit(window(ker), target)};
    for (const auto& [k, y] : rnd) r.random.constant = std::max(r.random.constant, y / std::pow(k, target));
    for (const auto& [k, y] : ker) r.kernel.constant = std::max(r.kernel.constant, y / std::pow(k, target));
    return r;
}

long double series_sum(double p, double a, double t) {
    if (!(p > 0 && a > 0 && t > 0)) throw std::invalid_argument("series needs p, a, t > 0");
    const long double peak = std::sqrt(p / (2 * a * t));
    long double s = 0;
    for (long k = 1;; ++k) {
        const long double kk = k;
        const long double term = std::exp(2 * p * std::log(kk) - 2 * a * t * kk * kk);
        s += term;
        if (kk > peak && term < 1e-20L * s) break;
    }
    return s;
}

std::vector<double> dyadic_times(double t_min, double t_max) {
    std::vector<double> ts;
    for (double t = t_max; t >= t_min; t /= 2) ts.push_back(t);
    return ts;
}

SeriesReport sobolev_series_check(double p, double a, const std::vector<double>& ts) {
    SeriesReport r;
    r.p = p;
    r.a = a;
    std::vector<std::pair<double, double>> data;
    double lo = std::numeric_limits<double>::infinity(), hi = 0, clo = lo, chi = 0;
    for (const double t : ts) {
        const double s = static_cast<double>(series_sum(p, a, t));
        data.emplace_back(t, s);
        const double g = std::pow(t, (p + 1) / 2) * s;
        const double gc = std::pow(t, (2 * p + 1) / 2) * s;
        lo = std::min(lo, g);
        hi = std::max(hi, g);
        clo = std::min(clo, gc);
        chi = std::max(chi, gc);
    }
    r.fit = loglog_fit(std::move(data), -(p + 1) / 2);
    r.normalized_sup = hi;
    r.normalized_inf = lo;
    r.ratio = hi / lo;
    r.corrected_ratio = chi / clo;
    r.pass = r.ratio < 10;
    return r;
}

KernelReport kernel_bound_check(const std::vector<double>& nu, const HeatKernelTruncation& trunc,
                                const std::vector<DeltoidPoint>& grid) {
    KernelReport r;
    r.max_k = static_cast<int>(nu.size());
    if (r.max_k > trunc.max_degree()) throw std::invalid_argument("multiplier range exceeds the truncation");
    const double lam = lambda_double(trunc.lambda());
    const auto& all = trunc.table().all();
    std::vector<std::vector<std::complex<double>>> values(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) { values[i] = trunc.normalized_values(grid[i].z, r.max_k); });
    // w_k(x) = G_k^{-1} v_k(x) and K_k(x, y) = v_k(y)^* w_k(x)
    const std::size_t n = grid.size();
    Eigen::MatrixXcd kernel = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 1; k <= r.max_k; ++k) {
        std::vector<std::size_t> shell;
        for (std::size_t i = 0; i < all.size(); ++i)
            if (all[i].p + all[i].q == k) shell.push_back(i);
        const auto m = static_cast<Eigen::Index>(shell.size());
        Eigen::MatrixXcd g(m, m), v(m, static_cast<Eigen::Index>(n));
        for (Eigen::Index a = 0; a < m; ++a)
            for (Eigen::Index b = 0; b < m; ++b) {
                const GaussRat ip = inner_product(all[shell[a]].poly, all[shell[b]].poly, trunc.table().moment_table());
                g(a, b) = std::complex<double>(to_double(ip.re), to_double(ip.im)) /
                          std::sqrt(to_double(all[shell[a]].norm2) * to_double(all[shell[b]].norm2));
            }
        for (std::size_t x = 0; x < n; ++x)
            for (Eigen::Index a = 0; a < m; ++a) v(a, static_cast<Eigen::Index>(x)) = values[x][shell[a]];
        const Eigen::MatrixXcd kk = v.adjoint() * Eigen::LLT<Eigen::MatrixXcd>(g).solve(v);  // (y, x)
        r.c1 = std::max(r.c1, std::sqrt(kk.diagonal().real().maxCoeff()) / std::pow(k, lam + 0.5));
        const double w = nu[k - 1] * nu[k - 1];
        if (w != 0) kernel += w * kk;
        r.series += w * std::pow(k, 2 * lam + 1);
    }
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x) {
            const double a = std::abs(kernel(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)));
            if (a > r.kernel_sup) {
                r.kernel_sup = a;
                r.argsup_x = grid[x].z;
                r.argsup_y = grid[y].z;
            }
        }
    r.bound = r.c1 * r.c1 * r.series;
    r.pass = r.kernel_sup <= r.bound * (1 + 1e-9);
    return r;
}

}  // namespace deltoid
