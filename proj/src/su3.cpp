#include "deltoid/su3.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <random>

#include "deltoid/operator.hpp"

namespace deltoid {

namespace {

using CLD = std::complex<long double>;

constexpr std::size_t haar_block = 4096;

Eigen::Matrix3cd haar_one(std::mt19937_64& rng) {
    std::normal_distribution<double> n01(0.0, 1.0);
    Eigen::Matrix3cd g;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) g(i, j) = {n01(rng), n01(rng)};
    const Eigen::HouseholderQR<Eigen::Matrix3cd> qr(g);
    Eigen::Matrix3cd q = qr.householderQ();
    for (int k = 0; k < 3; ++k) {
        const auto r = qr.matrixQR()(k, k);
        q.col(k) *= r / std::abs(r);
    }
    const auto det = q.determinant();
    return q / std::polar(1.0, std::arg(det) / 3);
}

}  // namespace

SpecialUnitary3 SpecialUnitary3::checked(const Eigen::Matrix3cd& m) {
    if ((m.adjoint() * m - Eigen::Matrix3cd::Identity()).norm() >= 1e-12)
        throw std::invalid_argument("matrix is not unitary");
    if (std::abs(m.determinant() - 1.0) >= 1e-12) throw std::invalid_argument("determinant is not 1");
    return {m};
}

std::vector<SpecialUnitary3> haar_sample(std::uint64_t seed, std::size_t n) {
    if (n == 0) throw std::invalid_argument("haar_sample needs n >= 1");
    std::vector<SpecialUnitary3> out(n);
    std::vector<std::future<void>> jobs;
    for (std::size_t start = 0; start < n; start += haar_block) {
        jobs.push_back(std::async(std::launch::async, [&out, seed, start, n] {
            std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                              static_cast<std::uint32_t>(start / haar_block)};
            std::mt19937_64 rng(seq);
            const std::size_t end = std::min(n, start + haar_block);
            for (std::size_t k = start; k < end; ++k) out[k].u = haar_one(rng);
        }));
    }
    for (auto& j : jobs) j.get();
    return out;
}

const LieBasis& lie_basis() {
    static const LieBasis basis = [] {
        LieBasis b;
        b.a = std::sqrt(2.0 / 3.0);
        const std::complex<double> i(0, 1);
        auto e = [](int k, int l) {
            Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
            m(k, l) = 1;
            return m;
        };
        const std::array<std::pair<int, int>, 3> pairs = {{{0, 1}, {0, 2}, {1, 2}}};
        for (int p = 0; p < 3; ++p) {
            const auto [k, l] = pairs[p];
            const std::string tag = std::to_string(k + 1) + std::to_string(l + 1);
            b.x[p] = e(k, l) - e(l, k);
            b.x[3 + p] = i * (e(k, l) + e(l, k));
            b.x[6 + p] = b.a * i * (e(k, k) - e(l, l));
            b.names[p] = "R" + tag;
            b.names[3 + p] = "S" + tag;
            b.names[6 + p] = "D" + tag;
        }
        return b;
    }();
    return basis;
}

std::vector<CommutatorEntry> commutator_table() {
    const double a = std::sqrt(2.0 / 3.0);
    enum { R12, R13, R23, S12, S13, S23, D12, D13, D23 };
    return {
        {R12, R13, {{R23, -1}}},     {R12, R23, {{R13, 1}}},      {R12, S12, {{D12, 2 / a}}},
        {R12, S13, {{S23, -1}}},     {R12, S23, {{S13, 1}}},      {R12, D12, {{S12, -2 * a}}},
        {R12, D13, {{S12, -a}}},     {R12, D23, {{S12, a}}},

        {R13, R23, {{R12, -1}}},     {R13, S12, {{S23, -1}}},     {R13, S13, {{D13, 2 / a}}},
        {R13, S23, {{S12, 1}}},      {R13, D12, {{S13, -a}}},     {R13, D13, {{S13, -2 * a}}},
        {R13, D23, {{S13, -a}}},

        {R23, S12, {{S13, -1}}},     {R23, S13, {{S12, 1}}},      {R23, S23, {{D23, 2 / a}}},
        {R23, D12, {{S23, a}}},      {R23, D13, {{S23, -a}}},     {R23, D23, {{S23, -2 * a}}},

        {S12, S13, {{R23, -1}}},     {S12, S23, {{R13, -1}}},     {S12, D12, {{R12, 2 * a}}},
        {S12, D13, {{R12, a}}},      {S12, D23, {{R12, -a}}},

        {S13, S23, {{R12, -1}}},     {S13, D12, {{R13, a}}},      {S13, D13, {{R13, 2 * a}}},
        {S13, D23, {{R13, a}}},

        {S23, D12, {{R23, -a}}},     {S23, D13, {{R23, a}}},      {S23, D23, {{R23, 2 * a}}},

        {D12, D13, {}},              {D12, D23, {}},              {D13, D23, {}},
    };
}

namespace {

Eigen::Matrix<double, 18, 1> vectorize(const Eigen::Matrix3cd& m) {
    Eigen::Matrix<double, 18, 1> v;
    for (int k = 0; k < 9; ++k) {
        v(2 * k) = m(k / 3, k % 3).real();
        v(2 * k + 1) = m(k / 3, k % 3).imag();
    }
    return v;
}

}  // namespace

RicciReport ricci_report() {
    const auto& b = lie_basis();
    RicciReport rep;
    Eigen::Matrix<double, 18, 9> basis;
    Eigen::Matrix<double, 18, 18> g = Eigen::Matrix<double, 18, 18>::Zero();
    for (int i = 0; i < 9; ++i) {
        basis.col(i) = vectorize(b.x[i]);
        g += basis.col(i) * basis.col(i).transpose();
    }
    const auto cod = basis.completeOrthogonalDecomposition();
    Eigen::Matrix<double, 18, 18> r = Eigen::Matrix<double, 18, 18>::Zero();
    for (const auto& e : commutator_table()) {
        const Eigen::Matrix3cd c = b.x[e.i] * b.x[e.j] - b.x[e.j] * b.x[e.i];
        const auto y = vectorize(c);
        r += 0.5 * y * y.transpose();
        const Eigen::Matrix<double, 9, 1> coeff = cod.solve(y);
        rep.max_expansion_residual = std::max(rep.max_expansion_residual, (basis * coeff - y).norm());
        Eigen::Matrix3cd t = Eigen::Matrix3cd::Zero();
        for (const auto& [k, v] : e.terms) t += v * b.x[k];
        rep.max_table_residual = std::max(rep.max_table_residual, (c - t).norm());
    }
    rep.constant = (r.array() * g.array()).sum() / g.squaredNorm();
    rep.proportionality_residual = (r - rep.constant * g).norm() / g.norm();
    if (rep.proportionality_residual >= 1e-10)
        throw NonConstantRicci("Ricci form is not a multiple of the metric");
    return rep;
}

double ricci_constant() { return ricci_report().constant; }

double entry_laplacian_coefficient(int d) { return -2.0 * (d * d - 1) / d; }

std::complex<double> entry_gamma(int k, int l, int r, int q, const Eigen::Matrix3cd& u, EntryGammaKind kind, int d) {
    if (kind == EntryGammaKind::zz) return -2.0 * u(k, q) * u(r, l) + (2.0 / d) * u(k, l) * u(r, q);
    const double delta = (k == r && l == q) ? 1.0 : 0.0;
    return 2.0 * (delta - (1.0 / d) * u(k, l) * std::conj(u(r, q)));
}

EntryPoly::EntryPoly(Coeff c) {
    if (c != Coeff(0)) terms_[Exponents{}] = c;
}

EntryPoly EntryPoly::z(int i, int j) {
    EntryPoly p;
    Exponents e{};
    e[3 * i + j] = 1;
    p.terms_[e] = 1;
    return p;
}

EntryPoly EntryPoly::zbar(int i, int j) {
    EntryPoly p;
    Exponents e{};
    e[9 + 3 * i + j] = 1;
    p.terms_[e] = 1;
    return p;
}

EntryPoly EntryPoly::trace_z() {
    EntryPoly p;
    for (int k = 0; k < 3; ++k) p += z(k, k);
    return p * Coeff(1.0L / 3);
}

void EntryPoly::add_term(const Exponents& e, const Coeff& c) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) it->second += c;
    if (std::abs(it->second) < 1e-24L) terms_.erase(it);
}

EntryPoly::Coeff EntryPoly::operator()(const Eigen::Matrix3cd& u) const {
    int top = 0;
    for (const auto& [e, c] : terms_) top = std::max<int>(top, *std::max_element(e.begin(), e.end()));
    std::array<std::vector<CLD>, 18> pw;
    for (int v = 0; v < 18; ++v) {
        const auto z = u((v % 9) / 3, v % 3);
        const CLD x = v < 9 ? CLD(z.real(), z.imag()) : CLD(z.real(), -z.imag());
        pw[v].assign(top + 1, CLD(1));
        for (int k = 1; k <= top; ++k) pw[v][k] = pw[v][k - 1] * x;
    }
    CLD acc = 0;
    for (const auto& [e, c] : terms_) {
        CLD m = c;
        for (int v = 0; v < 18; ++v)
            if (e[v]) m *= pw[v][e[v]];
        acc += m;
    }
    return acc;
}

EntryPoly& EntryPoly::operator+=(const EntryPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

EntryPoly& EntryPoly::operator-=(const EntryPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

EntryPoly& EntryPoly::operator*=(const Coeff& c) {
    if (c == Coeff(0)) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

EntryPoly operator*(const EntryPoly& a, const EntryPoly& b) {
    EntryPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            EntryPoly::Exponents e;
            for (int v = 0; v < 18; ++v) e[v] = ea[v] + eb[v];
            out.add_term(e, ca * cb);
        }
    return out;
}

EntryPoly conj(const EntryPoly& f) {
    EntryPoly out;
    for (const auto& [e, c] : f.terms()) {
        EntryPoly::Exponents s;
        for (int v = 0; v < 9; ++v) {
            s[v] = e[v + 9];
            s[v + 9] = e[v];
        }
        out.add_term(s, std::conj(c));
    }
    return out;
}

EntryPoly derive(const EntryPoly& f, const Eigen::Matrix3cd& x) {
    // D_X z_ij = sum_k z_ik X_kj, D_X zbar_ij = sum_k zbar_ik conj(X_kj)
    EntryPoly out;
    for (const auto& [e, c] : f.terms()) {
        for (int v = 0; v < 18; ++v) {
            if (!e[v]) continue;
            const int base = v < 9 ? 0 : 9;
            const int i = (v - base) / 3, j = (v - base) % 3;
            EntryPoly::Exponents d = e;
            --d[v];
            for (int k = 0; k < 3; ++k) {
                const auto xk = base ? std::conj(x(k, j)) : x(k, j);
                if (xk == 0.0) continue;
                EntryPoly::Exponents t = d;
                ++t[base + 3 * i + k];
                out.add_term(t, c * static_cast<long double>(e[v]) * CLD(xk.real(), xk.imag()));
            }
        }
    }
    return out;
}

EntryPoly su3_generator(const EntryPoly& f) {
    EntryPoly out;
    for (const auto& x : lie_basis().x) out += derive(derive(f, x), x);
    return out;
}

EntryPoly su3_gamma(const EntryPoly& f, const EntryPoly& g) {
    EntryPoly out;
    for (const auto& x : lie_basis().x) out += derive(f, x) * derive(g, x);
    return out;
}

EntryPoly su3_gamma2(const EntryPoly& f, const EntryPoly& g) {
    EntryPoly out = su3_generator(su3_gamma(f, g));
    out -= su3_gamma(f, su3_generator(g));
    out -= su3_gamma(su3_generator(f), g);
    return out * CLD(0.5L);
}

EntryPoly compose_trace(const BivarPoly& f) {
    const EntryPoly z = EntryPoly::trace_z(), zb = conj(z);
    std::vector<EntryPoly> zp{EntryPoly(1.0)}, zbp{EntryPoly(1.0)};
    EntryPoly out;
    for (const auto& [m, c] : f.terms()) {
        while (static_cast<int>(zp.size()) <= m.i) zp.push_back(zp.back() * z);
        while (static_cast<int>(zbp.size()) <= m.j) zbp.push_back(zbp.back() * zb);
        const CLD cc(c.re.convert_to<long double>(), c.im.convert_to<long double>());
        out += (zp[m.i] * zbp[m.j]) * cc;
    }
    return out;
}

std::complex<double> vectorfield_gamma_oracle(const EntryPoly& f, const EntryPoly& g, const Eigen::Matrix3cd& u) {
    const auto v = su3_gamma(f, g)(u);
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

namespace {

// (X^m Y^n - X^n Y^m) / (X - Y) as a polynomial in X, Y.
CLD divided(int m, int n, CLD x, CLD y) {
    if (m == n) return 0;
    if (m < n) return -divided(n, m, x, y);
    const int k = m - n;
    CLD s = 0;
    for (int i = 0; i < k; ++i) s += std::pow(x, i) * std::pow(y, k - 1 - i);
    return std::pow(x * y, n) * s;
}

}  // namespace

CharpolyResiduals charpoly_identity_check(const SpecialUnitary3& u, std::complex<double> xd, std::complex<double> yd) {
    constexpr int d = 3;
    const CLD x(xd.real(), xd.imag()), y(yd.real(), yd.imag());
    const EntryPoly z = EntryPoly::trace_z(), zb = conj(z);
    const std::array<EntryPoly, 4> c = {EntryPoly(-1.0), zb * CLD(3), z * CLD(-3), EntryPoly(1.0)};
    std::array<CLD, 4> p;
    for (int k = 0; k < 4; ++k) p[k] = c[k](u.u);
    auto dpoly = [&](CLD t) { return p[1] + t * (CLD(2) * p[2] + t * CLD(3) * p[3]); };
    auto d2poly = [&](CLD t) { return CLD(2) * p[2] + CLD(6) * t * p[3]; };

    const CLD half_d(d / 2.0L);
    CLD gl = 0, ll = 0;
    for (int j = 0; j < 4; ++j) {
        ll += std::pow(x, j) * su3_generator(c[j])(u.u);
        for (int k = 0; k < 4; ++k) gl += std::pow(x, j) * std::pow(y, k) * su3_gamma(c[j], c[k])(u.u);
    }
    gl *= half_d;
    ll *= half_d;

    CLD dd = 0;
    for (int j = 1; j < 4; ++j)
        for (int k = 0; k < 4; ++k) dd += CLD(j) * p[j] * p[k] * divided(j - 1, k, x, y);
    const CLD gr = x * y * (dpoly(x) * dpoly(y) + CLD(d) * dd);
    const CLD lr = CLD(1 - d * d) * x * dpoly(x) + CLD(1 + d) * x * x * d2poly(x);
    auto rel = [](CLD a, CLD b) { return static_cast<double>(std::abs(a - b) / std::max(1.0L, std::abs(b))); };
    return {rel(gl, gr), rel(ll, lr)};
}

PushforwardReport pushforward_check(const std::vector<BivarPoly>& fs, const std::vector<SpecialUnitary3>& us) {
    PushforwardReport rep;
    rep.polys = fs.size();
    rep.samples = us.size();
    const Lambda lam(Rat(4));
    for (const auto& f : fs) {
        const auto fc = conj_swap(f);
        const EntryPoly F = compose_trace(f), Fc = compose_trace(fc);
        const EntryPoly lf = su3_generator(F), gff = su3_gamma(F, F), gfc = su3_gamma(F, Fc);
        const NumericPoly<long double> dl(generator(f, lam)), dg(gamma(f, f)), dgc(gamma(f, fc));
        for (const auto& u : us) {
            const auto zd = u.z();
            const CLD z(zd.real(), zd.imag());
            const CLD q(0.75L);
            rep.max_generator_residual =
                std::max(rep.max_generator_residual, static_cast<double>(std::abs(q * lf(u.u) - dl(z))));
            rep.max_gamma_residual =
                std::max({rep.max_gamma_residual, static_cast<double>(std::abs(q * gff(u.u) - dg(z))),
                          static_cast<double>(std::abs(q * gfc(u.u) - dgc(z)))});
        }
    }
    return rep;
}

Cd38Report cd38_sample_check(std::size_t polys, std::size_t points_per_poly, std::uint64_t seed) {
    Cd38Report rep;
    rep.min_margin = std::numeric_limits<double>::infinity();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> deg(1, 3), var(0, 17), coef(-3, 3);
    for (std::size_t t = 0; t < polys; ++t) {
        EntryPoly g;
        for (int term = 0; term < 3; ++term) {
            EntryPoly::Exponents e{};
            const int n = deg(rng);
            for (int k = 0; k < n; ++k) ++e[var(rng)];
            int re = 0, im = 0;
            while (re == 0 && im == 0) {
                re = coef(rng);
                im = coef(rng);
            }
            g.add_term(e, CLD(re, im));
        }
        const EntryPoly f = g + conj(g);
        const EntryPoly lf = su3_generator(f), gf = su3_gamma(f, f), g2 = su3_gamma2(f, f);
        for (const auto& u : haar_sample(seed + 1 + t, points_per_poly)) {
            const CLD l = lf(u.u);
            const long double m = (g2(u.u) - CLD(3) * gf(u.u) - l * l / CLD(8)).real();
            rep.min_margin = std::min(rep.min_margin, static_cast<double>(m));
            ++rep.points;
        }
        ++rep.polys;
    }
    rep.pass = rep.min_margin >= rep.tolerance;
    return rep;
}

TraceStats trace_statistics(const std::vector<SpecialUnitary3>& us) {
    TraceStats s;
    s.samples = us.size();
    const double n = static_cast<double>(us.size());
    double sr = 0, si = 0, sr2 = 0, si2 = 0, a = 0, a2 = 0;
    for (const auto& u : us) {
        const auto t = u.u.trace();
        const double v = std::norm(t / 3.0);
        sr += t.real();
        si += t.imag();
        sr2 += t.real() * t.real();
        si2 += t.imag() * t.imag();
        a += v;
        a2 += v * v;
    }
    s.mean_trace = {sr / n, si / n};
    auto se = [n](double sum, double sum2) { return std::sqrt(std::max(0.0, sum2 / n - sum * sum / (n * n)) / n); };
    s.trace_se = std::max(se(sr, sr2), se(si, si2));
    s.mean_abs2 = a / n;
    s.abs2_se = se(a, a2);
    return s;
}

}  // namespace deltoid
