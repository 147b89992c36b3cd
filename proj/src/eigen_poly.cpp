#include "deltoid/eigen_poly.hpp"

#include <algorithm>
#include <string>

namespace deltoid {

Rat eigenvalue(int p, int q, const Lambda& lam) {
    if (p < 0 || q < 0) throw std::invalid_argument("negative degree");
    return (lam.value() - 1) * (p + q) + p * p + q * q + p * q;
}

MomentTable::MomentTable(Lambda lam, int max_degree) : lam_(std::move(lam)), max_degree_(max_degree) {
    if (max_degree < 0) throw std::invalid_argument("negative moment degree");
    m_.resize(index(0, max_degree + 1));
    m_[index(0, 0)] = 1;
    // int L(Z^i Zbar^j) dmu = 0 with L(Z^i Zbar^j) = -mu_ij Z^i Zbar^j + lower terms.
    for (int d = 1; d <= max_degree; ++d) {
        for (int j = 0; j <= d; ++j) {
            const int i = d - j;
            Rat s = 0;
            if (i >= 2) s += Rat(i * (i - 1)) * m_[index(i - 2, j + 1)];
            if (i >= 1 && j >= 1) s += Rat(i * j) * m_[index(i - 1, j - 1)];
            if (j >= 2) s += Rat(j * (j - 1)) * m_[index(i + 1, j - 2)];
            m_[index(i, j)] = s == 0 ? Rat(0) : Rat(s / eigenvalue(i, j, lam_));
        }
    }
}

const Rat& MomentTable::operator()(int i, int j) const {
    if (i < 0 || j < 0 || i + j > max_degree_)
        throw MomentRangeExceeded("moment (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") beyond table degree " + std::to_string(max_degree_));
    return m_[index(i, j)];
}

MomentTable moments(const Lambda& lam, int max_degree) { return MomentTable(lam, max_degree); }

GaussRat inner_product(const BivarPoly& f, const BivarPoly& g, const MomentTable& table) {
    if (f.degree() + g.degree() > table.max_degree())
        throw MomentRangeExceeded("inner product needs moments of degree " +
                                  std::to_string(f.degree() + g.degree()));
    GaussRat acc;
    for (const auto& [mf, cf] : f.terms()) {
        for (const auto& [mg, cg] : g.terms()) {
            const Rat& m = table(mf.i + mg.j, mf.j + mg.i);
            if (m == 0) continue;
            acc += cf * cg.conj() * GaussRat(m);
        }
    }
    return acc;
}

namespace {

using Solved = std::map<std::pair<int, int>, const EigenPolynomial*>;

// Back-substitution of (L + mu) P = 0 from the leading monomial downwards.
// Lower-degree monomials resonant with mu are left at zero when consistent and
// the finished polynomial is projected off the resonant eigenpolynomials.
EigenPolynomial solve_with(int p, int q, const Lambda& lam, const MomentTable& table,
                           const Solved& lower) {
    const int k = p + q;
    if (p < 0 || q < 0) throw std::invalid_argument("negative degree");
    if (table.max_degree() < 2 * k) throw MomentRangeExceeded("moment table too small for norm");
    const Rat mu = eigenvalue(p, q, lam);

    // Dense coefficient triangle indexed like MomentTable.
    auto idx = [](int i, int j) {
        const int d = i + j;
        return static_cast<std::size_t>(d) * (d + 1) / 2 + j;
    };
    std::vector<Rat> c(idx(0, k + 1));
    c[idx(p, q)] = 1;
    std::vector<std::pair<int, int>> resonant;
    auto coef = [&](int i, int j) -> const Rat* {
        if (i < 0 || j < 0 || i + j > k) return nullptr;
        return &c[idx(i, j)];
    };

    for (int d = k - 1; d >= 0; --d) {
        for (int a = d; a >= 0; --a) {
            const int b = d - a;
            if (((a - b) - (p - q)) % 3 != 0) continue;
            Rat s = 0;
            if (const Rat* v = coef(a + 2, b - 1); v && *v != 0) s += Rat((a + 2) * (a + 1)) * *v;
            if (const Rat* v = coef(a + 1, b + 1); v && *v != 0) s += Rat((a + 1) * (b + 1)) * *v;
            if (const Rat* v = coef(a - 1, b + 2); v && *v != 0) s += Rat((b + 2) * (b + 1)) * *v;
            const Rat gap = eigenvalue(a, b, lam) - mu;
            if (gap == 0) {
                if (s != 0)
                    throw EigenvalueCollision("mu_{" + std::to_string(p) + "," + std::to_string(q) +
                                              "} = mu_{" + std::to_string(a) + "," + std::to_string(b) +
                                              "} with inconsistent back-substitution at lambda = " +
                                              to_string(lam.value()));
                resonant.emplace_back(a, b);
                continue;
            }
            if (s != 0) c[idx(a, b)] = s / gap;
        }
    }

    EigenPolynomial out{p, q, lam, {}, mu, 0};
    for (int d = 0; d <= k; ++d)
        for (int a = 0; a <= d; ++a)
            if (c[idx(a, d - a)] != 0) out.poly.add_term({a, d - a}, GaussRat(c[idx(a, d - a)]));

    for (const auto& [a, b] : resonant) {
        const EigenPolynomial* r = nullptr;
        EigenPolynomial local;
        if (auto it = lower.find({a, b}); it != lower.end()) {
            r = it->second;
        } else {
            local = solve_with(a, b, lam, table, lower);
            r = &local;
        }
        GaussRat proj = inner_product(out.poly, r->poly, table);
        if (!proj.is_zero()) out.poly -= GaussRat(proj.re / r->norm2, proj.im / r->norm2) * r->poly;
    }

    // P is orthogonal to all lower degrees and its only top-degree term is
    // Z^p Zbar^q, so |P|^2 = <P, Z^p Zbar^q>.
    Rat n2 = 0;
    for (const auto& [m, v] : out.poly.terms()) n2 += v.re * table(m.i + q, m.j + p);
    out.norm2 = n2;
    return out;
}

}  // namespace

EigenTable::EigenTable(Lambda lam, int max_degree)
    : max_degree_(max_degree), moments_(lam, 2 * std::max(max_degree, 0)) {
    if (max_degree < 0) throw std::invalid_argument("negative degree");
    polys_.reserve(static_cast<std::size_t>(max_degree + 1) * (max_degree + 2) / 2);
    Solved solved;
    for (int k = 0; k <= max_degree; ++k) {
        for (int p = 0; p <= k; ++p) {
            polys_.push_back(solve_with(p, k - p, lam, moments_, solved));
        }
        // Pointers are stable once reserved.
        for (std::size_t n = polys_.size() - (k + 1); n < polys_.size(); ++n)
            solved[{polys_[n].p, polys_[n].q}] = &polys_[n];
    }
}

const EigenPolynomial& EigenTable::at(int p, int q) const {
    if (p < 0 || q < 0 || p + q > max_degree_) throw std::out_of_range("eigenpolynomial beyond table");
    const int k = p + q;
    return polys_[static_cast<std::size_t>(k) * (k + 1) / 2 + p];
}

EigenPolynomial solve_eigenpoly(int p, int q, const Lambda& lam) {
    if (p < 0 || q < 0) throw std::invalid_argument("negative degree");
    MomentTable table(lam, 2 * (p + q));
    return solve_with(p, q, lam, table, {});
}

HkSpace hk_space(int k, const Lambda& lam, const MomentTable& table) {
    if (k < 0) throw std::invalid_argument("negative degree");
    HkSpace h;
    h.k = k;
    for (int p = 0; p <= k; ++p) h.basis.push_back(solve_with(p, k - p, lam, table, {}));
    for (int p = 0; 2 * p <= k; ++p) {
        const BivarPoly& a = h.basis[p].poly;      // P_{p, k-p}
        const BivarPoly& b = h.basis[k - p].poly;  // P_{k-p, p}
        h.symmetric_forms.emplace_back(p, GaussRat(Rat(1, 2)) * (a + b));
        if (2 * p != k) h.antisymmetric_forms.emplace_back(p, GaussRat(0, Rat(-1, 2)) * (a - b));
        h.distinct_eigenvalues.push_back(h.basis[p].mu);
    }
    std::sort(h.distinct_eigenvalues.begin(), h.distinct_eigenvalues.end());
    h.distinct_eigenvalues.erase(std::unique(h.distinct_eigenvalues.begin(), h.distinct_eigenvalues.end()),
                                 h.distinct_eigenvalues.end());
    return h;
}

}  // namespace deltoid
