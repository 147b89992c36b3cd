#ifndef DELTOID_BIVAR_POLY_HPP
#define DELTOID_BIVAR_POLY_HPP

#include <algorithm>
#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "deltoid/rational.hpp"

namespace deltoid {

/// Exponent pair of the monomial Z^i Zbar^j.
struct Monomial {
    int i = 0;
    int j = 0;

    [[nodiscard]] int degree() const { return i + j; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded order: total degree first, then the exponent of Z.
struct GradedLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.i < b.i;
    }
};

enum class Var { Z, Zbar };

/// Sparse polynomial in the commuting indeterminates Z and Zbar with Gaussian
/// rational coefficients. Zero coefficients are never stored.
class BivarPoly {
public:
    using Terms = std::map<Monomial, GaussRat, GradedLess>;

    BivarPoly() = default;
    BivarPoly(GaussRat c) { add_term({0, 0}, std::move(c)); }
    BivarPoly(long c) : BivarPoly(GaussRat(c)) {}
    BivarPoly(Rat c) : BivarPoly(GaussRat(std::move(c))) {}

    static BivarPoly monomial(int i, int j, GaussRat c = GaussRat(1));
    static BivarPoly Z() { return monomial(1, 0); }
    static BivarPoly Zbar() { return monomial(0, 1); }

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const;
    [[nodiscard]] GaussRat coeff(int i, int j) const;
    [[nodiscard]] bool has_real_coefficients() const;

    /// Adds c Z^i Zbar^j in place, pruning a resulting zero.
    void add_term(Monomial m, const GaussRat& c);

    BivarPoly& operator+=(const BivarPoly& o);
    BivarPoly& operator-=(const BivarPoly& o);
    BivarPoly& operator*=(const GaussRat& c);

    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
    friend BivarPoly operator-(BivarPoly a) { return a *= GaussRat(-1); }
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
    friend BivarPoly operator*(BivarPoly a, const GaussRat& c) { return a *= c; }
    friend BivarPoly operator*(const GaussRat& c, BivarPoly a) { return a *= c; }
    friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

BivarPoly add(const BivarPoly& p, const BivarPoly& q);
BivarPoly mul(const BivarPoly& p, const BivarPoly& q);
BivarPoly pow(const BivarPoly& p, int n);
BivarPoly partial(const BivarPoly& p, Var v);
/// Z d/dZ + Zbar d/dZbar; multiplies each monomial by its total degree.
BivarPoly euler(const BivarPoly& p);
/// (i, j) -> (j, i) with conjugated coefficients.
BivarPoly conj_swap(const BivarPoly& p);

std::string to_string(const BivarPoly& p);

/// Coefficients of a BivarPoly converted to a floating type, laid out by rows
/// of fixed Z-exponent for nested Horner evaluation. Build once, evaluate many
/// times.
template <typename Real>
class NumericPoly {
public:
    using Complex = std::complex<Real>;

    NumericPoly() = default;
    explicit NumericPoly(const BivarPoly& p) {
        if (p.is_zero()) return;
        int top = 0;
        for (const auto& [m, c] : p.terms()) top = std::max(top, m.i);
        rows_.resize(top + 1);
        for (const auto& [m, c] : p.terms()) {
            auto& row = rows_[m.i];
            if (static_cast<int>(row.size()) <= m.j) row.resize(m.j + 1);
            row[m.j] = Complex(c.re.template convert_to<Real>(), c.im.template convert_to<Real>());
        }
    }

    /// Z := z, Zbar := w.
    [[nodiscard]] Complex operator()(const Complex& z, const Complex& w) const {
        Complex acc{};
        for (auto row = rows_.rbegin(); row != rows_.rend(); ++row) {
            Complex inner{};
            for (auto c = row->rbegin(); c != row->rend(); ++c) inner = inner * w + *c;
            acc = acc * z + inner;
        }
        return acc;
    }

    /// Real-point evaluation Z := z, Zbar := conj(z).
    [[nodiscard]] Complex operator()(const Complex& z) const { return (*this)(z, std::conj(z)); }

private:
    std::vector<std::vector<Complex>> rows_;
};

/// Evaluates p with Z := z and Zbar := w independently.
template <typename Real>
std::complex<Real> eval2(const BivarPoly& p, std::complex<Real> z, std::complex<Real> w) {
    return NumericPoly<Real>(p)(z, w);
}

/// Real-point evaluation: Z := z, Zbar := conj(z).
template <typename Real>
std::complex<Real> eval(const BivarPoly& p, std::complex<Real> z) {
    return NumericPoly<Real>(p)(z);
}

/// Exact value at a rational real point Z = Zbar = x.
GaussRat eval_exact(const BivarPoly& p, const Rat& x);

/// List of records {i, j, re_num, re_den, im_num, im_den}, numerators and
/// denominators as decimal strings.
nlohmann::json to_json(const BivarPoly& p);
BivarPoly bivar_from_json(const nlohmann::json& j);

}  // namespace deltoid

#endif  // DELTOID_BIVAR_POLY_HPP
