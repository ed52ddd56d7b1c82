#include "wedgese/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "wedgese/quadrature.hpp"
#include "wedgese/specfun.hpp"

namespace wedgese::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

void require_config(const QuadratureConfig& cfg) {
    if (cfg.nodes < 16) throw std::domain_error("quadrature config: need nodes >= 16");
    if (cfg.m_margin < 10) throw std::domain_error("quadrature config: need m_margin >= 10");
    if (!std::isfinite(cfg.tolerance) || cfg.tolerance <= 0.0)
        throw std::domain_error("quadrature config: tolerance must be > 0");
}

void require_in_wedge(const WedgeGeometry& geom, const AtomPosition& pos) {
    if (pos.phi > geom.alpha() * (1.0 + 1e-12))
        throw std::domain_error("atom angle must lie in [0, pi/q]");
}

// J_n(z)/z with its limit at z = 0 (1/2 for n = 1, else 0).  Shows up both
// in the azimuthal channels (as qm J_qm(arg)/arg) and on the finite side of
// the summation theorems (as J_1(z)/z).
double j_over_arg(int n, double arg, double jn) {
    if (arg == 0.0) return n == 1 ? 0.5 : 0.0;
    return jn / arg;
}

// Number of azimuthal channels: smallest M with q*M > 2x + margin.  The
// largest Bessel argument in the integrand is x, so this overshoots the
// super-exponential J_n decay threshold by at least a factor of two.
int channel_count(const WedgeGeometry& geom, const AtomPosition& pos, int m_margin) {
    return static_cast<int>((2.0 * pos.x + m_margin) / geom.q) + 1;
}

struct Channels {
    double tm;
    double te;
};

// Both polarization channels of azimuthal order m at polar angle theta.
// s^3, c^2 s, s are the measure/projection factors left over after the
// radial delta-function reduction; everything else is squared amplitudes.
Channels channels_at(const WedgeGeometry& geom, const AtomPosition& pos,
                     Polarization pol, int m, double theta,
                     const std::vector<double>& bessel_row) {
    const int n = geom.q * m;
    const double s = std::sin(theta), c = std::cos(theta);
    const double arg = pos.x * s;
    const double jn = bessel_row[n];
    const double jpn = (n == 0) ? -bessel_row[1]
                                : 0.5 * (bessel_row[n - 1] - bessel_row[n + 1]);
    const double r = j_over_arg(n, arg, jn);
    const double sin2 = std::pow(std::sin(n * pos.phi), 2);
    const double cos2 = std::pow(std::cos(n * pos.phi), 2);
    const double nn = static_cast<double>(n) * n;

    Channels ch{0.0, 0.0};
    switch (pol) {
        case Polarization::Z:
            if (m >= 1) ch.tm = jn * jn * sin2 * s * s * s;
            break;  // TE z channel vanishes identically
        case Polarization::Rho:
            if (m >= 1) ch.tm = jpn * jpn * sin2 * c * c * s;
            ch.te = nn * r * r * sin2 * s;
            break;
        case Polarization::Phi:
            if (m >= 1) ch.tm = nn * r * r * cos2 * c * c * s;
            ch.te = jpn * jpn * cos2 * s;
            break;
    }
    return ch;
}

double mode_sum_at(const WedgeGeometry& geom, const AtomPosition& pos,
                   Polarization pol, int m_count, int nodes) {
    const auto rule = quadrature::gauss_legendre(nodes, 0.0, 0.5 * kPi);
    const int n_max = geom.q * m_count + 1;  // +1 so J' of the top order exists
    double total = 0.0;
    for (int i = 0; i < nodes; ++i) {
        const double theta = rule.nodes[i];
        const auto row = specfun::bessel_j_array(n_max, pos.x * std::sin(theta));
        double node_sum = 0.0;
        for (int m = 0; m <= m_count; ++m) {
            const Channels ch = channels_at(geom, pos, pol, m, theta, row);
            // m = 0 carries half weight; m >= 1 stands for the +/-m pair.
            node_sum += (m == 0 ? 1.0 : 2.0) * (ch.tm + ch.te);
        }
        total += rule.weights[i] * node_sum;
    }
    return 2.0 * geom.q * total;
}

}  // namespace

ModeWeight mode_weight(const WedgeGeometry& geom, const AtomPosition& pos,
                       Polarization pol, int m, ModeKind kind, double theta) {
    if (m < 0) throw std::domain_error("mode_weight: azimuthal index must be >= 0");
    if (!std::isfinite(theta) || theta < 0.0 || theta > 0.5 * kPi)
        throw std::domain_error("mode_weight: polar angle must lie in [0, pi/2]");
    require_in_wedge(geom, pos);
    const int n_max = geom.q * m + 1;
    const auto row = specfun::bessel_j_array(std::max(n_max, 1),
                                             pos.x * std::sin(theta));
    const Channels ch = channels_at(geom, pos, pol, m, theta, row);
    return ModeWeight{kind == ModeKind::TM ? ch.tm : ch.te};
}

double mode_sum_braces(const WedgeGeometry& geom, const AtomPosition& pos,
                       Polarization pol, const QuadratureConfig& cfg) {
    require_config(cfg);
    require_in_wedge(geom, pos);
    const int m_count = channel_count(geom, pos, cfg.m_margin);
    const double coarse = mode_sum_at(geom, pos, pol, m_count, cfg.nodes);
    const double fine = mode_sum_at(geom, pos, pol, m_count, 2 * cfg.nodes);
    if (!(std::fabs(coarse - fine) < cfg.tolerance))
        throw non_convergence_error("mode_sum_braces: node doubling moved the result by " +
                                        std::to_string(std::fabs(coarse - fine)),
                                    coarse, fine);
    return fine;
}

double check_addition_theorem(int q, double arg, double phi, TrigKind trig,
                              SumFamily family, int m_terms) {
    if (q < 1) throw std::domain_error("check_addition_theorem: q must be >= 1");
    if (!std::isfinite(arg) || arg <= 0.0)
        throw std::domain_error("check_addition_theorem: argument must be finite and > 0");
    if (!std::isfinite(phi)) throw std::domain_error("check_addition_theorem: angle must be finite");
    if (m_terms < 1) throw std::domain_error("check_addition_theorem: need at least one m-term");

    const bool use_sin = (trig == TrigKind::Sin2);

    // Left side: m-sum over the full lattice, folded to m >= 0.
    double lhs = 0.0;
    double last = 0.0;
    for (int m = 0; m <= m_terms; ++m) {
        const int n = q * m;
        const double t = use_sin ? std::sin(n * phi) : std::cos(n * phi);
        double factor = 0.0;
        switch (family) {
            case SumFamily::JSquared: {
                const double j = specfun::bessel_j(n, arg);
                factor = j * j;
                break;
            }
            case SumFamily::MSquaredJSquared: {
                const double j = specfun::bessel_j(n, arg);
                // the m^2-weighted theorem holds for (q m / arg)^2 J^2
                factor = (static_cast<double>(q) * q / (arg * arg)) * m * m * j * j;
                break;
            }
            case SumFamily::JPrimeSquared: {
                const double jp = specfun::bessel_j_prime(n, arg);
                factor = jp * jp;
                break;
            }
        }
        last = (m == 0 ? 1.0 : 2.0) * factor * t * t;
        lhs += last;
    }
    if (std::fabs(last) > 1e-15 * (std::fabs(lhs) + 1e-300))
        throw truncation_error("check_addition_theorem: m-sum cut off too early");

    // Right side: finite sum over the 2q image angles.
    double rhs = 0.0;
    for (int l = 0; l < q; ++l) {
        const double psi = phi + kPi * l / q;
        const double beta = kPi * l / q;
        const double z1 = 2.0 * arg * std::fabs(std::sin(psi));
        const double z0 = 2.0 * arg * std::fabs(std::sin(beta));
        const double j0_1 = specfun::bessel_j(0, z1);
        const double j0_0 = specfun::bessel_j(0, z0);
        switch (family) {
            case SumFamily::JSquared:
                rhs += use_sin ? j0_0 - j0_1 : j0_0 + j0_1;
                break;
            case SumFamily::MSquaredJSquared: {
                const double c1 = std::pow(std::cos(psi), 2);
                const double c0 = std::pow(std::cos(beta), 2);
                const double r1 = j_over_arg(1, z1, specfun::bessel_j(1, z1));
                const double r0 = j_over_arg(1, z0, specfun::bessel_j(1, z0));
                rhs += use_sin ? -j0_1 * c1 + j0_0 * c0 + r1 - r0
                               : j0_1 * c1 + j0_0 * c0 - r1 - r0;
                break;
            }
            case SumFamily::JPrimeSquared: {
                const double s1 = std::pow(std::sin(psi), 2);
                const double s0 = std::pow(std::sin(beta), 2);
                const double r1 = j_over_arg(1, z1, specfun::bessel_j(1, z1));
                const double r0 = j_over_arg(1, z0, specfun::bessel_j(1, z0));
                rhs += use_sin ? j0_1 * s1 - j0_0 * s0 - r1 + r0
                               : -j0_1 * s1 - j0_0 * s0 + r1 + r0;
                break;
            }
        }
    }
    rhs /= 2.0 * q;

    return std::fabs(lhs - rhs);
}

double check_derivative_identity(int n, double x) {
    if (n < 0) throw std::domain_error("check_derivative_identity: order must be >= 0");
    if (!std::isfinite(x) || x <= 0.0)
        throw std::domain_error("check_derivative_identity: x must be finite and > 0");
    const double h = 1e-5 * std::max(1.0, x);
    if (x <= h)
        throw std::domain_error("check_derivative_identity: x too small for the difference step");

    const double jn = specfun::bessel_j(n, x);
    const double jn1 = specfun::bessel_j(n + 1, x);
    const double jpn = specfun::bessel_j_prime(n, x);
    const double prod_hi = specfun::bessel_j(n, x + h) * specfun::bessel_j(n + 1, x + h);
    const double prod_lo = specfun::bessel_j(n, x - h) * specfun::bessel_j(n + 1, x - h);
    const double dprod = (prod_hi - prod_lo) / (2.0 * h);

    const double lhs = jpn * jpn;
    const double rhs = (n / x) * jpn * jn - dprod + jn * jn - ((n + 1.0) / x) * jn * jn1;
    return std::fabs(lhs - rhs);
}

double check_angular_reduction(int mu, int nu, double a) {
    if (mu != 0) throw std::domain_error("check_angular_reduction: only mu = 0 is supported");
    if (nu != 0 && nu != 1)
        throw std::domain_error("check_angular_reduction: nu must be 0 or 1");
    if (!std::isfinite(a) || a <= 0.0)
        throw std::domain_error("check_angular_reduction: a must be finite and > 0");

    const auto rule = quadrature::gauss_legendre(240, 0.0, 0.5 * kPi);
    double lhs = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double s = std::sin(rule.nodes[i]);
        const double c = std::cos(rule.nodes[i]);
        lhs += rule.weights[i] * specfun::bessel_j(0, a * s) * s * std::pow(c, 2 * nu + 1);
    }
    const double rhs = (nu == 0) ? specfun::bessel_j(1, a) / a
                                 : 2.0 * specfun::bessel_j(2, a) / (a * a);
    return std::fabs(lhs - rhs);
}

}  // namespace wedgese::oracle
