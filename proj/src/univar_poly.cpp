#include "deltoid/univar_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace deltoid {

UnivarPoly::UnivarPoly(Rat c) : c_{std::move(c)} { trim(); }

UnivarPoly::UnivarPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UnivarPoly UnivarPoly::x() { return UnivarPoly(std::vector<Rat>{Rat(0), Rat(1)}); }

void UnivarPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat UnivarPoly::operator()(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UnivarPoly& UnivarPoly::operator+=(const UnivarPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UnivarPoly& UnivarPoly::operator-=(const UnivarPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UnivarPoly(std::move(c));
}

UnivarPoly derivative(const UnivarPoly& p) {
    std::vector<Rat> c;
    for (std::size_t k = 1; k < p.coeffs().size(); ++k) c.push_back(p.coeffs()[k] * static_cast<long>(k));
    return UnivarPoly(std::move(c));
}

UnivarPoly reflect(const UnivarPoly& p) {
    auto c = p.coeffs();
    for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
    return UnivarPoly(std::move(c));
}

std::pair<UnivarPoly, UnivarPoly> divmod(const UnivarPoly& p, const UnivarPoly& d) {
    if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
    std::vector<Rat> r = p.coeffs();
    const int dd = d.degree();
    std::vector<Rat> q(std::max(0, p.degree() - dd + 1));
    for (int k = p.degree(); k >= dd; --k) {
        const Rat f = r[k] / d.leading();
        q[k - dd] = f;
        if (f == 0) continue;
        for (int i = 0; i <= dd; ++i) r[k - dd + i] -= f * d.coeffs()[i];
    }
    r.resize(std::max(0, dd));
    return {UnivarPoly(std::move(q)), UnivarPoly(std::move(r))};
}

UnivarPoly gcd(UnivarPoly a, UnivarPoly b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    const Rat lc = a.leading();
    std::vector<Rat> c = a.coeffs();
    for (auto& v : c) v /= lc;
    return UnivarPoly(std::move(c));
}

std::string to_string(const UnivarPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rat& c = p.coeffs()[k];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << to_string(c);
        if (k >= 1) os << '*' << var;
        if (k >= 2) os << '^' << k;
    }
    return os.str();
}

std::vector<UnivarPoly> sturm_sequence(const UnivarPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
    std::vector<UnivarPoly> chain{p, derivative(p)};
    while (!chain.back().is_zero()) {
        const auto& a = chain[chain.size() - 2];
        const auto& b = chain.back();
        chain.push_back(-divmod(a, b).second);
    }
    chain.pop_back();
    return chain;
}

namespace {

int sign_changes(const std::vector<UnivarPoly>& chain, const Rat& x) {
    int changes = 0;
    int prev = 0;
    for (const auto& q : chain) {
        const Rat v = q(x);
        const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

// Splits (lo, hi) at a point where the squarefree part does not vanish.
Rat split_point(const UnivarPoly& s, const Rat& lo, const Rat& hi) {
    for (long k = 2;; ++k) {
        const Rat m = lo + (hi - lo) / k * (k / 2);
        if (s(m) != 0) return m;
    }
}

void isolate(const UnivarPoly& s, const std::vector<UnivarPoly>& chain, const Rat& lo, const Rat& hi,
             std::vector<Rat>& samples) {
    const int n = count_roots(chain, lo, hi);
    if (n == 0) return;
    samples.push_back(lo);
    samples.push_back(hi);
    if (n == 1) return;
    const Rat m = split_point(s, lo, hi);
    isolate(s, chain, lo, m, samples);
    isolate(s, chain, m, hi, samples);
}

}  // namespace

int count_roots(const std::vector<UnivarPoly>& chain, const Rat& a, const Rat& b) {
    return sign_changes(chain, a) - sign_changes(chain, b);
}

NonnegativityResult nonnegative_on(const UnivarPoly& p, const Rat& a, const Rat& b) {
    NonnegativityResult res;
    if (p.is_zero()) return res;
    std::vector<Rat> samples{a, b};
    if (p.degree() > 0) {
        const auto s = divmod(p, gcd(p, derivative(p))).first;
        const auto chain = sturm_sequence(s);
        // Move the ends inward until no root sits in the end pieces, so every
        // component between consecutive roots holds a sample.
        Rat lo = a, hi = b;
        if (s(a) == 0) {
            Rat step = (b - a) / 2;
            while (s(a + step) == 0 || count_roots(chain, a, a + step) != 0) step /= 2;
            lo = a + step;
        }
        if (s(b) == 0) {
            Rat step = (b - lo) / 2;
            while (s(b - step) == 0 || count_roots(chain, b - step, b) != 1) step /= 2;
            hi = b - step;
        }
        samples.push_back(lo);
        samples.push_back(hi);
        if (lo < hi) isolate(s, chain, lo, hi, samples);
    }
    for (const auto& x : samples) {
        const Rat v = p(x);
        if (v < 0) {
            res.nonnegative = false;
            res.witness = x;
            res.witness_value = v;
            return res;
        }
    }
    return res;
}

}  // namespace deltoid
