#ifndef DELTOID_TEST_ORACLES_HPP
#define DELTOID_TEST_ORACLES_HPP

// Independent numerical oracles built on the triangle picture only: the
// deltoid coordinate Z(x, y), the weight W and plain finite differences.

#include <cmath>
#include <complex>
#include <functional>

#include "deltoid/geometry.hpp"

namespace oracle {

using LD = long double;
using CLD = std::complex<LD>;

/// L^(lambda) f at (x, y) via Delta f + ((lambda - 1)/3) grad log W . grad f.
inline CLD triangle_generator(const std::function<CLD(LD, LD)>& f, LD lam, LD x, LD y, LD h = 1e-4L) {
    const auto fxx = (f(x + h, y) - LD(2) * f(x, y) + f(x - h, y)) / (h * h);
    const auto fyy = (f(x, y + h) - LD(2) * f(x, y) + f(x, y - h)) / (h * h);
    const auto fx = (f(x + h, y) - f(x - h, y)) / (2 * h);
    const auto fy = (f(x, y + h) - f(x, y - h)) / (2 * h);
    auto logw = [](LD a, LD b) { return std::log(deltoid::w_complex(a, b).real()); };
    const LD lx = (logw(x + h, y) - logw(x - h, y)) / (2 * h);
    const LD ly = (logw(x, y + h) - logw(x, y - h)) / (2 * h);
    return fxx + fyy + (lam - 1) / 3 * (lx * fx + ly * fy);
}

/// int f dmu by a midpoint rule on the k-fold subdivided triangle, weight
/// W^((lambda-1)/3).
inline std::complex<double> triangle_integral(const std::function<std::complex<double>(std::complex<double>)>& f,
                                              double lam, std::size_t k) {
    const auto pts = deltoid::sample_interior(k * k, deltoid::SampleMode::grid);
    std::complex<double> num = 0;
    double den = 0;
    for (const auto& p : pts) {
        const double w = std::pow(deltoid::w_density(p).value, (lam - 1) / 3);
        num += w * f(deltoid::triangle_to_deltoid(p).z);
        den += w;
    }
    return num / den;
}

}  // namespace oracle

#endif
