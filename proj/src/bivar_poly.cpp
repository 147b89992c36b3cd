#include "deltoid/bivar_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace deltoid {

BivarPoly BivarPoly::monomial(int i, int j, GaussRat c) {
    if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
    BivarPoly p;
    p.add_term({i, j}, c);
    return p;
}

int BivarPoly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

GaussRat BivarPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? GaussRat() : it->second;
}

bool BivarPoly::has_real_coefficients() const {
    for (const auto& [m, c] : terms_)
        if (!c.is_real()) return false;
    return true;
}

void BivarPoly::add_term(Monomial m, const GaussRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

BivarPoly& BivarPoly::operator*=(const GaussRat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term({ma.i + mb.i, ma.j + mb.j}, ca * cb);
    return r;
}

BivarPoly add(const BivarPoly& p, const BivarPoly& q) { return p + q; }
BivarPoly mul(const BivarPoly& p, const BivarPoly& q) { return p * q; }

BivarPoly pow(const BivarPoly& p, int n) {
    if (n < 0) throw std::invalid_argument("negative power");
    BivarPoly r(1L);
    for (int k = 0; k < n; ++k) r = r * p;
    return r;
}

BivarPoly partial(const BivarPoly& p, Var v) {
    BivarPoly r;
    for (const auto& [m, c] : p.terms()) {
        int e = v == Var::Z ? m.i : m.j;
        if (e == 0) continue;
        Monomial d = v == Var::Z ? Monomial{m.i - 1, m.j} : Monomial{m.i, m.j - 1};
        r.add_term(d, c * GaussRat(e));
    }
    return r;
}

BivarPoly euler(const BivarPoly& p) {
    BivarPoly r;
    for (const auto& [m, c] : p.terms()) r.add_term(m, c * GaussRat(m.degree()));
    return r;
}

BivarPoly conj_swap(const BivarPoly& p) {
    BivarPoly r;
    for (const auto& [m, c] : p.terms()) r.add_term({m.j, m.i}, c.conj());
    return r;
}

GaussRat eval_exact(const BivarPoly& p, const Rat& x) {
    GaussRat acc;
    for (const auto& [m, c] : p.terms()) {
        Rat xp = 1;
        for (int k = 0; k < m.degree(); ++k) xp *= x;
        acc += c * GaussRat(xp);
    }
    return acc;
}

std::string to_string(const BivarPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << " + ";
        first = false;
        bool unit = c == GaussRat(1) && m.degree() > 0;
        if (!unit) os << (c.is_real() ? to_string(c) : "(" + to_string(c) + ")");
        if (m.i > 0) os << (unit ? "" : "*") << "Z" << (m.i > 1 ? "^" + std::to_string(m.i) : "");
        if (m.j > 0)
            os << (unit && m.i == 0 ? "" : "*") << "Zb" << (m.j > 1 ? "^" + std::to_string(m.j) : "");
    }
    return os.str();
}

nlohmann::json to_json(const BivarPoly& p) {
    auto out = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        out.push_back({{"i", m.i},
                       {"j", m.j},
                       {"re_num", numerator(c.re).str()},
                       {"re_den", denominator(c.re).str()},
                       {"im_num", numerator(c.im).str()},
                       {"im_den", denominator(c.im).str()}});
    }
    return out;
}

BivarPoly bivar_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    auto field = [](const nlohmann::json& rec, const char* key) -> BigInt {
        const auto& v = rec.at(key);
        return v.is_string() ? BigInt(v.get<std::string>()) : BigInt(v.get<long long>());
    };
    BivarPoly p;
    for (const auto& rec : j) {
        BigInt rd = field(rec, "re_den"), id = field(rec, "im_den");
        if (rd == 0 || id == 0) throw std::invalid_argument("zero denominator in polynomial JSON");
        GaussRat c(Rat(field(rec, "re_num"), rd), Rat(field(rec, "im_num"), id));
        p.add_term({rec.at("i").get<int>(), rec.at("j").get<int>()}, c);
    }
    return p;
}

}  // namespace deltoid
