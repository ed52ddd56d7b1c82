#include "wedgese/rates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wedgese/specfun.hpp"

namespace wedgese {

namespace {

constexpr double kPi = std::numbers::pi;

// The geometry is mirror-symmetric about the bisector, so fold phi into
// [0, alpha/2] before evaluating.  Besides halving the work it makes two
// exactness guarantees cheap: phi = alpha lands exactly on the phi = 0
// branch, and there the image sum cancels bitwise term by term (psi_l =
// 0.0 + pi*l/q shares every bit with pi*l/q), giving braces_z = braces_rho
// = 0.0 on the plates with no rounding residue.
double folded_phi(const WedgeGeometry& geom, double phi) {
    const double a = geom.alpha();
    if (!std::isfinite(phi) || phi < 0.0 || phi > a * (1.0 + 1e-12))
        throw std::domain_error("atom angle must lie in [0, pi/q]");
    if (phi > a) phi = a;
    return phi > 0.5 * a ? a - phi : phi;
}

double gpar_at(double two_x, double psi) {
    return specfun::g_parallel(two_x * std::fabs(std::sin(psi)));
}

}  // namespace

WedgeGeometry::WedgeGeometry(int q_) : q(q_) {
    if (q < 1) throw std::domain_error("wedge parameter q must be an integer >= 1");
}

double WedgeGeometry::alpha() const { return kPi / q; }

AtomPosition::AtomPosition(double x_, double phi_) : x(x_), phi(phi_) {
    if (!std::isfinite(x) || x < 0.0)
        throw std::domain_error("atom distance x = k*rho must be finite and >= 0");
    if (!std::isfinite(phi) || phi < 0.0)
        throw std::domain_error("atom angle must be finite and >= 0");
}

double AtomPosition::declination(const WedgeGeometry& geom) const {
    return phi - 0.5 * geom.alpha();
}

Transition::Transition(double k_ab_, double gamma_free_rho_, double gamma_free_phi_,
                       double gamma_free_z_)
    : k_ab(k_ab_),
      gamma_free_rho(gamma_free_rho_),
      gamma_free_phi(gamma_free_phi_),
      gamma_free_z(gamma_free_z_) {
    if (!std::isfinite(k_ab) || k_ab <= 0.0)
        throw std::domain_error("transition wavenumber must be finite and > 0");
    if (!std::isfinite(gamma_free_rho) || gamma_free_rho < 0.0 ||
        !std::isfinite(gamma_free_phi) || gamma_free_phi < 0.0 ||
        !std::isfinite(gamma_free_z) || gamma_free_z < 0.0)
        throw std::domain_error("free-space rates must be finite and >= 0");
}

DipoleWeights::DipoleWeights(double rho_, double phi_, double z_)
    : rho(rho_), phi(phi_), z(z_) {
    if (!std::isfinite(rho) || rho < 0.0 || !std::isfinite(phi) || phi < 0.0 ||
        !std::isfinite(z) || z < 0.0)
        throw std::domain_error("dipole weights must be finite and >= 0");
    if (std::fabs(rho + phi + z - 1.0) > 1e-12)
        throw std::domain_error("dipole weights must sum to 1");
}

double braces_z(const WedgeGeometry& geom, const AtomPosition& pos) {
    const double phi = folded_phi(geom, pos.phi);
    const double two_x = 2.0 * pos.x;
    double acc = 2.0 / 3.0 - gpar_at(two_x, phi);
    for (int l = 1; l < geom.q; ++l) {
        const double base = kPi * l / geom.q;
        acc -= gpar_at(two_x, phi + base) - gpar_at(two_x, base);
    }
    return acc;
}

double braces_phi(const WedgeGeometry& geom, const AtomPosition& pos) {
    const double phi = folded_phi(geom, pos.phi);
    const double two_x = 2.0 * pos.x;
    double acc = 2.0 / 3.0 - specfun::h_phi(two_x, phi);
    for (int l = 1; l < geom.q; ++l) {
        const double base = kPi * l / geom.q;
        acc -= specfun::h_phi(two_x, phi + base) + specfun::h_phi(two_x, base);
    }
    return acc;
}

double braces_rho(const WedgeGeometry& geom, const AtomPosition& pos) {
    const double phi = folded_phi(geom, pos.phi);
    const double two_x = 2.0 * pos.x;
    double acc = 2.0 / 3.0 - specfun::h_rho(two_x, phi);
    for (int l = 1; l < geom.q; ++l) {
        const double base = kPi * l / geom.q;
        acc -= specfun::h_rho(two_x, phi + base) - specfun::h_rho(two_x, base);
    }
    return acc;
}

RateResult normalized_rates(const WedgeGeometry& geom, const AtomPosition& pos,
                            const DipoleWeights& weights) {
    RateResult r{};
    r.braces_rho = braces_rho(geom, pos);
    r.braces_phi = braces_phi(geom, pos);
    r.braces_z = braces_z(geom, pos);
    // Free space has braces = 2/3, so 3/2 normalizes the far-field rate to 1.
    r.norm_rho = 1.5 * r.braces_rho;
    r.norm_phi = 1.5 * r.braces_phi;
    r.norm_z = 1.5 * r.braces_z;
    r.norm_total = weights.rho * r.norm_rho + weights.phi * r.norm_phi + weights.z * r.norm_z;
    return r;
}

double free_space_rate(double dipole_sq, double k_ab, double hbar) {
    if (!std::isfinite(dipole_sq) || dipole_sq < 0.0)
        throw std::domain_error("squared dipole moment must be finite and >= 0");
    if (!std::isfinite(k_ab) || k_ab == 0.0)
        throw std::domain_error("transition wavenumber must be finite and nonzero");
    if (!std::isfinite(hbar) || hbar <= 0.0)
        throw std::domain_error("hbar must be finite and > 0");
    const double k = std::fabs(k_ab);
    return 4.0 * dipole_sq * k * k * k / hbar;
}

double emitted_power(const std::vector<Transition>& transitions,
                     const WedgeGeometry& geom, double rho, double phi,
                     double hbar, double c) {
    if (transitions.empty())
        throw std::domain_error("emitted_power: need at least one transition");
    if (!std::isfinite(rho) || rho < 0.0)
        throw std::domain_error("emitted_power: rho must be finite and >= 0");
    if (!std::isfinite(hbar) || hbar <= 0.0 || !std::isfinite(c) || c <= 0.0)
        throw std::domain_error("emitted_power: hbar and c must be finite and > 0");

    double power = 0.0;
    for (const Transition& t : transitions) {
        const AtomPosition pos(t.k_ab * rho, phi);
        const double sum = t.gamma_free_rho * braces_rho(geom, pos) +
                           t.gamma_free_phi * braces_phi(geom, pos) +
                           t.gamma_free_z * braces_z(geom, pos);
        power += -0.5 * hbar * c * t.k_ab * sum;
    }
    return power;
}

}  // namespace wedgese
