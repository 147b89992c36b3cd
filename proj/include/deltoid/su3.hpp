#ifndef DELTOID_SU3_HPP
#define DELTOID_SU3_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "deltoid/bivar_poly.hpp"

namespace deltoid {

class NonConstantRicci : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SpecialUnitary3 {
    Eigen::Matrix3cd u;

    /// Throws std::invalid_argument unless |U*U - I| and |det U - 1| are below 1e-12.
    static SpecialUnitary3 checked(const Eigen::Matrix3cd& m);
    /// Z = tr U / 3.
    [[nodiscard]] std::complex<double> z() const { return u.trace() / 3.0; }
};

/// Haar samples on SU(3): QR of a complex Gaussian matrix with the phases of
/// diag R moved into Q, divided by the principal cube root of det Q.
/// Blocks of samples run in parallel, each on its own stream from the seed.
std::vector<SpecialUnitary3> haar_sample(std::uint64_t seed, std::size_t n);

/// R_kl = E_kl - E_lk, S_kl = i(E_kl + E_lk), Dhat_kl = a i(E_kk - E_ll),
/// a = sqrt(2/3); order R12 R13 R23 S12 S13 S23 D12 D13 D23.
struct LieBasis {
    std::array<Eigen::Matrix3cd, 9> x;
    std::array<std::string, 9> names;
    double a = 0;
};
const LieBasis& lie_basis();

/// [X_i, X_j] = sum of coefficient * X_k as tabulated.
struct CommutatorEntry {
    int i = 0;
    int j = 0;
    std::vector<std::pair<int, double>> terms;
};
/// All 36 pairs i < j.
std::vector<CommutatorEntry> commutator_table();

struct RicciReport {
    double constant = 0;
    /// Least-squares expansion of each commutator in the basis.
    double max_expansion_residual = 0;
    /// Matrix distance between each commutator and its table entry.
    double max_table_residual = 0;
    /// |R - c G| / |G| for the two quadratic forms.
    double proportionality_residual = 0;
};

/// Compares (1/2) sum_{i<j} [X_i,X_j] (x) [X_i,X_j] with sum_i X_i (x) X_i as
/// forms on the real 18-dimensional matrix space. Throws NonConstantRicci if
/// they are not proportional to 1e-10.
RicciReport ricci_report();
double ricci_constant();

/// L(z_pq) = -2(d^2 - 1)/d z_pq.
double entry_laplacian_coefficient(int d = 3);

enum class EntryGammaKind { zz, zzbar };

/// Gamma(z_kl, z_rq) = -2 z_kq z_rl + (2/d) z_kl z_rq and
/// Gamma(z_kl, zbar_rq) = 2(delta_kr delta_lq - (1/d) z_kl zbar_rq); indices from 0.
std::complex<double> entry_gamma(int k, int l, int r, int q, const Eigen::Matrix3cd& u, EntryGammaKind kind,
                                 int d = 3);

/// Polynomial in the nine entries z_ij and their conjugates; variable 3i+j is
/// z_ij and 9+3i+j is zbar_ij.
class EntryPoly {
public:
    using Exponents = std::array<std::uint8_t, 18>;
    using Coeff = std::complex<long double>;
    using Terms = std::map<Exponents, Coeff>;

    EntryPoly() = default;
    EntryPoly(Coeff c);
    EntryPoly(double c) : EntryPoly(Coeff(c)) {}

    static EntryPoly z(int i, int j);
    static EntryPoly zbar(int i, int j);
    /// tr U / 3.
    static EntryPoly trace_z();

    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    void add_term(const Exponents& e, const Coeff& c);

    [[nodiscard]] Coeff operator()(const Eigen::Matrix3cd& u) const;

    EntryPoly& operator+=(const EntryPoly& o);
    EntryPoly& operator-=(const EntryPoly& o);
    EntryPoly& operator*=(const Coeff& c);

    friend EntryPoly operator+(EntryPoly a, const EntryPoly& b) { return a += b; }
    friend EntryPoly operator-(EntryPoly a, const EntryPoly& b) { return a -= b; }
    friend EntryPoly operator*(EntryPoly a, const Coeff& c) { return a *= c; }
    friend EntryPoly operator*(const Coeff& c, EntryPoly a) { return a *= c; }
    friend EntryPoly operator*(const EntryPoly& a, const EntryPoly& b);

private:
    Terms terms_;
};

/// Swaps z and zbar and conjugates coefficients.
EntryPoly conj(const EntryPoly& f);
/// The left-invariant field of X: D_X z_ij = (U X)_ij.
EntryPoly derive(const EntryPoly& f, const Eigen::Matrix3cd& x);
/// Sum of D_X^2 over the basis.
EntryPoly su3_generator(const EntryPoly& f);
/// Sum of D_X f D_X g over the basis.
EntryPoly su3_gamma(const EntryPoly& f, const EntryPoly& g);
/// (1/2)(L Gamma(f,g) - Gamma(f, Lg) - Gamma(Lf, g)).
EntryPoly su3_gamma2(const EntryPoly& f, const EntryPoly& g);
/// f(Z, Zbar) with Z = tr U / 3.
EntryPoly compose_trace(const BivarPoly& f);

std::complex<double> vectorfield_gamma_oracle(const EntryPoly& f, const EntryPoly& g, const Eigen::Matrix3cd& u);

struct CharpolyResiduals {
    double gamma = 0;
    double generator = 0;
};

/// Gamma(P(X), P(Y)) and L P(X) for P(X) = X^3 - 3Z X^2 + 3Zbar X - 1, from the
/// vector fields on the coefficient functions, against
/// XY(P'(X)P'(Y) + d (P'(X)P(Y) - P'(Y)P(X))/(X - Y)) and
/// (1 - d^2) X P' + (1 + d) X^2 P''. The field side carries the factor d/2.
/// The divided difference is expanded as a polynomial, so X = Y is allowed.
CharpolyResiduals charpoly_identity_check(const SpecialUnitary3& u, std::complex<double> x, std::complex<double> y);

struct PushforwardReport {
    std::size_t polys = 0;
    std::size_t samples = 0;
    double max_gamma_residual = 0;
    double max_generator_residual = 0;
};

/// (3/4) Gamma^SU and (3/4) L^SU on f(tr U / 3) against gamma and generator at
/// lambda = 4, evaluated at Z = tr U / 3. Gamma is taken on (f, f) and (f, conj f).
PushforwardReport pushforward_check(const std::vector<BivarPoly>& fs, const std::vector<SpecialUnitary3>& us);

struct Cd38Report {
    std::size_t polys = 0;
    std::size_t points = 0;
    double min_margin = 0;
    double tolerance = -1e-8;
    bool pass = true;
};

/// Gamma2(f,f) - 3 Gamma(f,f) - (1/8)(Lf)^2 for random real entry polynomials
/// g + conj g of degree at most 3, each at points_per_poly Haar points.
Cd38Report cd38_sample_check(std::size_t polys, std::size_t points_per_poly, std::uint64_t seed);

struct TraceStats {
    std::size_t samples = 0;
    std::complex<double> mean_trace;
    /// Standard error of the real and imaginary parts of the mean trace.
    double trace_se = 0;
    /// Mean of |tr U / 3|^2 and its standard error.
    double mean_abs2 = 0;
    double abs2_se = 0;
};

TraceStats trace_statistics(const std::vector<SpecialUnitary3>& us);

}  // namespace deltoid

#endif  // DELTOID_SU3_HPP
