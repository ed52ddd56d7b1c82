#pragma once

// Brute-force cross-check of the closed-form braces factors: the wedge
// mode sum is evaluated directly (m-sum over azimuthal channels, TM and TE
// polarizations, Gauss-Legendre quadrature over the polar angle), with no
// use of the Bessel summation identities that produce the closed forms.
// Agreement between the two routes is therefore real evidence, not a
// tautology.  Also hosts standalone numerical checks of those identities.

#include <stdexcept>
#include <string>

#include "wedgese/rates.hpp"

namespace wedgese::oracle {

struct QuadratureConfig {
    int nodes = 400;      // polar-angle quadrature points (>= 16)
    int m_margin = 40;    // azimuthal truncation margin (>= 10): sum to qM > 2x + m_margin
    double tolerance = 1e-8;  // node-doubling self-consistency target
};

// Doubling test failed: the result moved by more than the tolerance when
// the node count was doubled.  Carries both values for diagnostics.
class non_convergence_error : public std::runtime_error {
public:
    non_convergence_error(const std::string& what, double coarse, double fine)
        : std::runtime_error(what), coarse_(coarse), fine_(fine) {}
    double coarse() const noexcept { return coarse_; }
    double fine() const noexcept { return fine_; }

private:
    double coarse_;
    double fine_;
};

// An m-sum was cut off while its last term still mattered.
class truncation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Polarization { Rho, Phi, Z };
enum class ModeKind { TM, TE };

// Contribution of a single (m, TM/TE) channel to the mode sum at one polar
// angle.  Every channel is a squared amplitude, so value >= 0 always; the
// TE z channel is identically zero.
struct ModeWeight {
    double value;
};

ModeWeight mode_weight(const WedgeGeometry& geom, const AtomPosition& pos,
                       Polarization pol, int m, ModeKind kind, double theta);

// braces_j by direct mode summation, normalized so the free-space limit is
// 2/3 (directly comparable to braces_rho/braces_phi/braces_z).  TM channels
// enter for m >= 1, TE for m >= 0, with the m = 0 channel at half weight.
// Runs the quadrature at cfg.nodes and 2*cfg.nodes; throws
// non_convergence_error unless they agree within cfg.tolerance, and returns
// the doubled-node value.
double mode_sum_braces(const WedgeGeometry& geom, const AtomPosition& pos,
                       Polarization pol, const QuadratureConfig& cfg = {});

enum class TrigKind { Sin2, Cos2 };
enum class SumFamily { JSquared, MSquaredJSquared, JPrimeSquared };

// |LHS - RHS| of the Bessel summation theorems that collapse the m-sum
// into a finite sum over the 2q image angles.  LHS: sum over m in [-M, M]
// of family(J_{qm}(arg)) * trig(qm*phi); the m^2-weighted family carries a
// (q/arg)^2 prefactor.  RHS: finite l-sum of J_0 and J_1(z)/z evaluated at
// the image angles phi + pi*l/q and pi*l/q.  Throws truncation_error if the
// last m-term still exceeds 1e-15 of the running sum.
double check_addition_theorem(int q, double arg, double phi, TrigKind trig,
                              SumFamily family, int m_terms);

// |LHS - RHS| of the J_n'^2 decomposition
//   J_n'^2 = (n/x) J_n' J_n - d/dx[J_n J_{n+1}] + J_n^2 - (n+1)/x J_n J_{n+1},
// the derivative taken by central difference with step 1e-5*max(1, x).
double check_derivative_identity(int n, double x);

// |LHS - RHS| of the polar-angle reduction
//   int_0^{pi/2} J_mu(a sin t) sin^(mu+1) t cos^(2nu+1) t dt
//     = 2^nu nu! a^-(nu+1) J_(nu+mu+1)(a),
// left side by quadrature.  Only mu = 0 and nu in {0, 1} are supported.
double check_angular_reduction(int mu, int nu, double a);

}  // namespace wedgese::oracle
