#include "wedgese/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wedgese::quadrature {

GaussLegendre gauss_legendre(int n, double a, double b) {
    if (n < 1) throw std::domain_error("gauss_legendre: need at least one node");
    if (!(std::isfinite(a) && std::isfinite(b)) || !(a < b))
        throw std::domain_error("gauss_legendre: interval must be finite with a < b");

    GaussLegendre rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    const double xm = 0.5 * (b + a);
    const double xl = 0.5 * (b - a);
    const int half = (n + 1) / 2;  // roots come in +/- pairs on [-1, 1]

    for (int i = 0; i < half; ++i) {
        // Chebyshev-like initial guess, then Newton on P_n(z).
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::fabs(dz) < 1e-15) break;
        }
        rule.nodes[i] = xm - xl * z;
        rule.nodes[n - 1 - i] = xm + xl * z;
        const double w = 2.0 * xl / ((1.0 - z * z) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

}  // namespace wedgese::quadrature
