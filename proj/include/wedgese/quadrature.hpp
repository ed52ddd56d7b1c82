#pragma once

// Gauss-Legendre rules for the polar-angle integrals in the mode sums.

#include <vector>

namespace wedgese::quadrature {

struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// n-point rule on [a, b].  Nodes found by Newton iteration on P_n; this is
// the textbook construction and is bit-reproducible, which matters because
// scan output must not depend on how work is split across threads.
GaussLegendre gauss_legendre(int n, double a, double b);

}  // namespace wedgese::quadrature
