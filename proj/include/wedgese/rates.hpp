#pragma once

// Spontaneous-emission rates for a dipole between two grounded conducting
// half-planes meeting at opening angle pi/q (integer q >= 1).  Everything
// is expressed through dimensionless "braces" factors, one per dipole
// orientation; the normalized rate is Gamma/Gamma_free = (3/2) * braces,
// which tends to 1 far from the plates (braces -> 2/3).

#include <vector>

namespace wedgese {

struct WedgeGeometry {
    int q;  // opening angle is pi/q; q = 1 is a single plate

    explicit WedgeGeometry(int q_);
    double alpha() const;  // opening angle in radians
};

struct AtomPosition {
    double x;    // |k_ab| * rho: distance from the edge in emitted wavelengths
    double phi;  // angle from one plate, in [0, alpha]

    AtomPosition(double x_, double phi_);

    // Angle measured from the wedge bisector instead of from a plate.
    double declination(const WedgeGeometry& geom) const;
};

// One emission line of a multi-level atom: transition wavenumber and the
// free-space rates carried by each dipole component.
struct Transition {
    double k_ab;
    double gamma_free_rho;
    double gamma_free_phi;
    double gamma_free_z;

    Transition(double k_ab_, double gamma_free_rho_, double gamma_free_phi_,
               double gamma_free_z_);
};

// Fractions of |dipole|^2 along (rho, phi, z).  Must be non-negative and
// sum to 1 (within 1e-12); an isotropically averaged dipole is (1/3,1/3,1/3).
struct DipoleWeights {
    double rho;
    double phi;
    double z;

    DipoleWeights(double rho_, double phi_, double z_);
};

struct RateResult {
    double braces_rho, braces_phi, braces_z;  // each -> 2/3 in free space
    double norm_rho, norm_phi, norm_z;        // Gamma_j / Gamma_free_j
    double norm_total;                        // weighted by the dipole fractions
};

// Dimensionless braces factors from the closed-form image sums over the
// 2q reflections of the dipole.  The rho and z factors vanish exactly
// (bitwise 0.0) on the plates phi = 0 and phi = alpha, where those dipole
// orientations are shorted out by the conductor.
double braces_z(const WedgeGeometry& geom, const AtomPosition& pos);
double braces_phi(const WedgeGeometry& geom, const AtomPosition& pos);
double braces_rho(const WedgeGeometry& geom, const AtomPosition& pos);

RateResult normalized_rates(const WedgeGeometry& geom, const AtomPosition& pos,
                            const DipoleWeights& weights);

// Gamma_free = 4 d^2 k^3 / hbar for dipole matrix element squared d^2.
double free_space_rate(double dipole_sq, double k_ab, double hbar);

// Rate of change of the atom's energy from spontaneous emission, summed
// over its lines: each contributes -(1/2) hbar c k_ab * sum_j gamma_j *
// braces_j evaluated at x = k_ab * rho.  Always <= 0 (the atom loses the
// radiated energy); rho is a physical length here, unlike AtomPosition::x.
double emitted_power(const std::vector<Transition>& transitions,
                     const WedgeGeometry& geom, double rho, double phi,
                     double hbar, double c);

}  // namespace wedgese
