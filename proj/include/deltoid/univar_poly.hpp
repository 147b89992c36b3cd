#ifndef DELTOID_UNIVAR_POLY_HPP
#define DELTOID_UNIVAR_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "deltoid/rational.hpp"

namespace deltoid {

/// Dense univariate polynomial over Q; coefficient k multiplies x^k and the
/// leading coefficient is never zero.
class UnivarPoly {
public:
    UnivarPoly() = default;
    UnivarPoly(Rat c);
    UnivarPoly(long c) : UnivarPoly(Rat(c)) {}
    explicit UnivarPoly(std::vector<Rat> coeffs);

    static UnivarPoly x();

    [[nodiscard]] const std::vector<Rat>& coeffs() const { return c_; }
    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] const Rat& leading() const { return c_.back(); }
    [[nodiscard]] Rat operator()(const Rat& x) const;

    UnivarPoly& operator+=(const UnivarPoly& o);
    UnivarPoly& operator-=(const UnivarPoly& o);

    friend UnivarPoly operator+(UnivarPoly a, const UnivarPoly& b) { return a += b; }
    friend UnivarPoly operator-(UnivarPoly a, const UnivarPoly& b) { return a -= b; }
    friend UnivarPoly operator-(const UnivarPoly& a) { return UnivarPoly() - a; }
    friend UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b);
    friend bool operator==(const UnivarPoly& a, const UnivarPoly& b) { return a.c_ == b.c_; }

private:
    void trim();
    std::vector<Rat> c_;
};

UnivarPoly derivative(const UnivarPoly& p);
/// p(-x).
UnivarPoly reflect(const UnivarPoly& p);
/// p = q d + r with deg r < deg d; d nonzero.
std::pair<UnivarPoly, UnivarPoly> divmod(const UnivarPoly& p, const UnivarPoly& d);
UnivarPoly gcd(UnivarPoly a, UnivarPoly b);
std::string to_string(const UnivarPoly& p, const std::string& var = "rho");

/// Sturm chain of a nonzero polynomial.
std::vector<UnivarPoly> sturm_sequence(const UnivarPoly& p);
/// Distinct real roots in (a, b].
int count_roots(const std::vector<UnivarPoly>& chain, const Rat& a, const Rat& b);

/// Exact test of p >= 0 on [a, b] by isolating the distinct roots and checking
/// the sign on every component between them. Also returns a witness point
/// with p < 0 when the test fails.
struct NonnegativityResult {
    bool nonnegative = true;
    Rat witness;
    Rat witness_value;
};
NonnegativityResult nonnegative_on(const UnivarPoly& p, const Rat& a, const Rat& b);

}  // namespace deltoid

#endif  // DELTOID_UNIVAR_POLY_HPP
