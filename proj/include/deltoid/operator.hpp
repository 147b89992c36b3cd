#ifndef DELTOID_OPERATOR_HPP
#define DELTOID_OPERATOR_HPP

#include "deltoid/bivar_poly.hpp"

namespace deltoid {

/// Positive rational parameter of the operator family. The invariant density
/// on the deltoid is proportional to P^alpha with lambda = (6 alpha + 5) / 2.
class Lambda {
public:
    explicit Lambda(Rat value);
    Lambda(long value) : Lambda(Rat(value)) {}

    [[nodiscard]] const Rat& value() const { return value_; }
    [[nodiscard]] double to_double() const { return deltoid::to_double(value_); }
    [[nodiscard]] bool is_geq_one() const { return value_ >= 1; }
    /// alpha = (2 lambda - 5) / 6.
    [[nodiscard]] Rat alpha() const { return (2 * value_ - 5) / 6; }

private:
    Rat value_;
};

/// The carre du champ on the coordinate functions.
struct GammaMatrix {
    BivarPoly g11;  // Gamma(Z, Z)
    BivarPoly g12;  // Gamma(Z, Zbar)
    BivarPoly g22;  // Gamma(Zbar, Zbar)
};

/// 2x2 tensor in complex coordinates; r21 = r12 is implied.
struct HermitianTensorField {
    BivarPoly r11;
    BivarPoly r12;
    BivarPoly r22;

    friend bool operator==(const HermitianTensorField&, const HermitianTensorField&) = default;
};

HermitianTensorField operator+(const HermitianTensorField& a, const HermitianTensorField& b);
HermitianTensorField operator-(const HermitianTensorField& a, const HermitianTensorField& b);
HermitianTensorField operator*(const GaussRat& c, const HermitianTensorField& t);

/// Gamma(Z,Z) = Zbar - Z^2, Gamma(Z,Zbar) = (1 - Z Zbar)/2, Gamma(Zbar,Zbar) = Z - Zbar^2.
const GammaMatrix& gamma_matrix();

/// Carre du champ by the chain rule over the coordinate data.
BivarPoly gamma(const BivarPoly& f, const BivarPoly& g);
/// L^(lambda) f, with L(Z) = -lambda Z and L(Zbar) = -lambda Zbar.
BivarPoly generator(const BivarPoly& f, const Lambda& lam);
/// (L Gamma(f,g) - Gamma(f, Lg) - Gamma(g, Lf)) / 2.
BivarPoly gamma2(const BivarPoly& f, const BivarPoly& g, const Lambda& lam);

/// Gamma(Z,Zbar)^2 - Gamma(Z,Z) Gamma(Zbar,Zbar); vanishes on the deltoid curve.
BivarPoly boundary_poly();

struct BoundaryCheck {
    bool pass = false;
    BivarPoly residual_z;     // Gamma(Z, P) + 3 Z P
    BivarPoly residual_zbar;  // Gamma(Zbar, P) + 3 Zbar P
};

/// Verifies Gamma(Z, log P) = -3Z and its conjugate, cleared of the
/// denominator P. An explicit P may be passed to test sensitivity.
BoundaryCheck check_boundary_equation(const BivarPoly& p);
BoundaryCheck check_boundary_equation();

/// Hessian of log P on (Z, Zbar) pairs via
/// H[f](h,k) = (Gamma(h, Gamma(f,k)) + Gamma(k, Gamma(f,h)) - Gamma(f, Gamma(h,k))) / 2,
/// where Gamma(log P, G) = Gamma(P, G) / P is divided out exactly.
HermitianTensorField hessian_logP_direct();
/// Entrywise -3 Gamma + (3/2) D Gamma with D the Euler operator.
HermitianTensorField hessian_logP_reduced();
/// grad log P (x) grad log P in the same coordinates: 9 (Z^2, Z Zbar, Zbar^2).
HermitianTensorField outer_logP();

/// Exact division; throws std::domain_error when q does not divide p.
BivarPoly exact_divide(const BivarPoly& p, const BivarPoly& q);

}  // namespace deltoid

#endif  // DELTOID_OPERATOR_HPP
