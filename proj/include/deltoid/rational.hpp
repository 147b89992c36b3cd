#ifndef DELTOID_RATIONAL_HPP
#define DELTOID_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace deltoid {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Parses "num/den", "num" or a terminating decimal such as "2.26".
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rat parse_rat(std::string_view text);

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rat& r);

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

/// Gaussian rational re + i*im.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() = default;
    GaussRat(Rat r) : re(std::move(r)) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    GaussRat(long r) : re(r) {}

    [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }
    [[nodiscard]] bool is_real() const { return im == 0; }
    [[nodiscard]] GaussRat conj() const { return {re, -im}; }

    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        Rat r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
};

/// Exact quotient; throws std::domain_error when b is zero.
GaussRat divide(const GaussRat& a, const GaussRat& b);

std::string to_string(const GaussRat& c);

}  // namespace deltoid

#endif  // DELTOID_RATIONAL_HPP
