#include "deltoid/rational.hpp"

#include <stdexcept>

namespace deltoid {

namespace {

BigInt parse_int(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (k == s.size()) throw std::invalid_argument("malformed integer");
    for (std::size_t i = k; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw std::invalid_argument("malformed integer: " + std::string(s));
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return BigInt(digits);
}

}  // namespace

Rat parse_rat(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_int(text.substr(0, slash));
        BigInt den = parse_int(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        std::string digits(whole);
        if (digits.empty() || digits == "-" || digits == "+") digits += "0";
        digits += frac;
        BigInt num = parse_int(digits);
        BigInt den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        return Rat(num, den);
    }
    return Rat(parse_int(text));
}

std::string to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

GaussRat divide(const GaussRat& a, const GaussRat& b) {
    Rat n2 = b.re * b.re + b.im * b.im;
    if (n2 == 0) throw std::domain_error("division by zero Gaussian rational");
    GaussRat q = a * b.conj();
    return {q.re / n2, q.im / n2};
}

std::string to_string(const GaussRat& c) {
    if (c.im == 0) return to_string(c.re);
    if (c.re == 0) return to_string(c.im) + "i";
    std::string im = to_string(c.im);
    return to_string(c.re) + (c.im > 0 ? "+" : "") + im + "i";
}

}  // namespace deltoid
