#ifndef DELTOID_EIGEN_POLY_HPP
#define DELTOID_EIGEN_POLY_HPP

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "deltoid/operator.hpp"

namespace deltoid {

/// Back-substitution hit mu_{p,q} = mu_{i,j} at a lower-degree monomial whose
/// equation is inconsistent.
class EigenvalueCollision : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MomentRangeExceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// mu_{p,q} = (lambda - 1)(p + q) + p^2 + q^2 + p q.
Rat eigenvalue(int p, int q, const Lambda& lam);

/// Exact moments m_{i,j} = int Z^i Zbar^j dmu for i + j <= max_degree.
class MomentTable {
public:
    MomentTable(Lambda lam, int max_degree);

    [[nodiscard]] const Lambda& lambda() const { return lam_; }
    [[nodiscard]] int max_degree() const { return max_degree_; }
    /// Throws MomentRangeExceeded beyond max_degree.
    [[nodiscard]] const Rat& operator()(int i, int j) const;

private:
    [[nodiscard]] static std::size_t index(int i, int j) {
        const int d = i + j;
        return static_cast<std::size_t>(d) * (d + 1) / 2 + j;
    }

    Lambda lam_;
    int max_degree_;
    std::vector<Rat> m_;
};

MomentTable moments(const Lambda& lam, int max_degree);

/// int f conj(g) dmu, exact.
GaussRat inner_product(const BivarPoly& f, const BivarPoly& g, const MomentTable& table);

struct EigenPolynomial {
    int p = 0;
    int q = 0;
    Lambda lam{1};
    BivarPoly poly;  // leading monomial Z^p Zbar^q with coefficient 1
    Rat mu;
    Rat norm2;  // int |P|^2 dmu
};

/// All eigenpolynomials with p + q <= max_degree, solved in graded order and
/// sharing one moment table of degree 2 * max_degree.
class EigenTable {
public:
    EigenTable(Lambda lam, int max_degree);

    [[nodiscard]] const Lambda& lambda() const { return moments_.lambda(); }
    [[nodiscard]] int max_degree() const { return max_degree_; }
    [[nodiscard]] const MomentTable& moment_table() const { return moments_; }
    [[nodiscard]] const EigenPolynomial& at(int p, int q) const;
    /// Ordered by (p + q, p).
    [[nodiscard]] const std::vector<EigenPolynomial>& all() const { return polys_; }

private:
    int max_degree_;
    MomentTable moments_;
    std::vector<EigenPolynomial> polys_;
};

/// Unique P_{p,q} with leading term Z^p Zbar^q and L P = -mu_{p,q} P, orthogonal
/// to every polynomial of lower degree.
EigenPolynomial solve_eigenpoly(int p, int q, const Lambda& lam);

/// Degree-k eigenspace decomposition of the orthogonal complement H_k.
struct HkSpace {
    int k = 0;
    std::vector<EigenPolynomial> basis;  // P_{p, k-p}, p = 0..k
    /// (p, S_{p,q}) and (p, A_{p,q}) for p <= q, S = (P_pq + P_qp)/2,
    /// A = -i (P_pq - P_qp)/2.
    std::vector<std::pair<int, BivarPoly>> symmetric_forms;
    std::vector<std::pair<int, BivarPoly>> antisymmetric_forms;
    std::vector<Rat> distinct_eigenvalues;  // ascending

    [[nodiscard]] int r_k() const { return static_cast<int>(distinct_eigenvalues.size()); }
};

HkSpace hk_space(int k, const Lambda& lam, const MomentTable& table);

}  // namespace deltoid

#endif  // DELTOID_EIGEN_POLY_HPP
