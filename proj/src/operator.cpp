#include "deltoid/operator.hpp"

#include <stdexcept>

namespace deltoid {

Lambda::Lambda(Rat value) : value_(std::move(value)) {
    if (value_ <= 0) throw std::invalid_argument("lambda must be positive");
}

HermitianTensorField operator+(const HermitianTensorField& a, const HermitianTensorField& b) {
    return {a.r11 + b.r11, a.r12 + b.r12, a.r22 + b.r22};
}

HermitianTensorField operator-(const HermitianTensorField& a, const HermitianTensorField& b) {
    return {a.r11 - b.r11, a.r12 - b.r12, a.r22 - b.r22};
}

HermitianTensorField operator*(const GaussRat& c, const HermitianTensorField& t) {
    return {c * t.r11, c * t.r12, c * t.r22};
}

const GammaMatrix& gamma_matrix() {
    static const GammaMatrix m = [] {
        const BivarPoly z = BivarPoly::Z(), zb = BivarPoly::Zbar();
        GammaMatrix g;
        g.g11 = zb - z * z;
        g.g12 = GaussRat(Rat(1, 2)) * (BivarPoly(1L) - z * zb);
        g.g22 = z - zb * zb;
        return g;
    }();
    return m;
}

BivarPoly gamma(const BivarPoly& f, const BivarPoly& g) {
    const auto& m = gamma_matrix();
    BivarPoly fz = partial(f, Var::Z), fzb = partial(f, Var::Zbar);
    BivarPoly gz = partial(g, Var::Z), gzb = partial(g, Var::Zbar);
    return fz * gz * m.g11 + (fz * gzb + fzb * gz) * m.g12 + fzb * gzb * m.g22;
}

BivarPoly generator(const BivarPoly& f, const Lambda& lam) {
    const auto& m = gamma_matrix();
    BivarPoly fz = partial(f, Var::Z), fzb = partial(f, Var::Zbar);
    BivarPoly first = GaussRat(-lam.value()) * (BivarPoly::Z() * fz + BivarPoly::Zbar() * fzb);
    BivarPoly second = partial(fz, Var::Z) * m.g11 + GaussRat(2) * partial(fz, Var::Zbar) * m.g12 +
                       partial(fzb, Var::Zbar) * m.g22;
    return first + second;
}

BivarPoly gamma2(const BivarPoly& f, const BivarPoly& g, const Lambda& lam) {
    BivarPoly r = generator(gamma(f, g), lam) - gamma(f, generator(g, lam)) - gamma(g, generator(f, lam));
    return GaussRat(Rat(1, 2)) * r;
}

BivarPoly boundary_poly() {
    const auto& m = gamma_matrix();
    return m.g12 * m.g12 - m.g11 * m.g22;
}

BoundaryCheck check_boundary_equation(const BivarPoly& p) {
    BoundaryCheck out;
    out.residual_z = gamma(BivarPoly::Z(), p) + GaussRat(3) * BivarPoly::Z() * p;
    out.residual_zbar = gamma(BivarPoly::Zbar(), p) + GaussRat(3) * BivarPoly::Zbar() * p;
    out.pass = out.residual_z.is_zero() && out.residual_zbar.is_zero();
    return out;
}

BoundaryCheck check_boundary_equation() { return check_boundary_equation(boundary_poly()); }

BivarPoly exact_divide(const BivarPoly& p, const BivarPoly& q) {
    if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
    const auto& [lm, lc] = *q.terms().rbegin();
    BivarPoly rem = p, quot;
    while (!rem.is_zero()) {
        const auto& [m, c] = *rem.terms().rbegin();
        if (m.i < lm.i || m.j < lm.j) throw std::domain_error("polynomial division is not exact");
        BivarPoly t = BivarPoly::monomial(m.i - lm.i, m.j - lm.j, divide(c, lc));
        quot += t;
        rem -= t * q;
    }
    return quot;
}

namespace {

// Gamma(log P, g) = Gamma(P, g) / P.
BivarPoly gamma_logP(const BivarPoly& p, const BivarPoly& g) { return exact_divide(gamma(p, g), p); }

BivarPoly hessian_entry(const BivarPoly& p, const BivarPoly& h, const BivarPoly& k) {
    BivarPoly s = gamma(h, gamma_logP(p, k)) + gamma(k, gamma_logP(p, h)) - gamma_logP(p, gamma(h, k));
    return GaussRat(Rat(1, 2)) * s;
}

}  // namespace

HermitianTensorField hessian_logP_direct() {
    const BivarPoly p = boundary_poly();
    const BivarPoly z = BivarPoly::Z(), zb = BivarPoly::Zbar();
    return {hessian_entry(p, z, z), hessian_entry(p, z, zb), hessian_entry(p, zb, zb)};
}

HermitianTensorField hessian_logP_reduced() {
    const auto& m = gamma_matrix();
    const GaussRat half3(Rat(3, 2));
    auto reduce = [&](const BivarPoly& g) { return GaussRat(-3) * g + half3 * euler(g); };
    return {reduce(m.g11), reduce(m.g12), reduce(m.g22)};
}

HermitianTensorField outer_logP() {
    const BivarPoly z = BivarPoly::Z(), zb = BivarPoly::Zbar();
    const GaussRat nine(9);
    return {nine * z * z, nine * z * zb, nine * zb * zb};
}

}  // namespace deltoid
