#include "wedgese/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "wedgese/oracle.hpp"
#include "wedgese/rates.hpp"
#include "wedgese/specfun.hpp"

namespace wedgese::verify {

namespace {

constexpr double kPi = std::numbers::pi;

// Single-plate references evaluated in long double: the three closed-form
// terms cancel from ~1/X^2 down to O(1) at small X, and 80-bit arithmetic
// keeps that reference noise near 1e-14, well under the 1e-12 bound.
double plate_braces_z_ref(double x) {
    const long double X = 2.0L * static_cast<long double>(x);
    const long double s = sinl(X), c = cosl(X);
    return static_cast<double>(2.0L / 3.0L - s / X - c / (X * X) + s / (X * X * X));
}

double plate_braces_rho_ref(double x) {
    const long double X = 2.0L * static_cast<long double>(x);
    const long double s = sinl(X), c = cosl(X);
    return static_cast<double>(2.0L / 3.0L - 2.0L * (c / (X * X) - s / (X * X * X)));
}

struct Sweep {
    double worst = 0.0;
    void update(double residual) { worst = std::max(worst, std::fabs(residual)); }
};

CheckResult make_result(std::string name, double residual, double bound,
                        std::string note = {}) {
    const bool pass = residual <= bound;
    return CheckResult{std::move(name), residual, bound, pass, std::move(note)};
}

CheckResult check_series_continuity() {
    // The kernels switch from Maclaurin series to closed form at x = 0.5;
    // both branches must agree in a band around the switch.
    std::mt19937 rng(20250811);
    std::uniform_real_distribution<double> band(0.35, 0.65);
    Sweep sweep;
    for (int i = 0; i < 10000; ++i) {
        const double x = band(rng);
        sweep.update(specfun::detail::g_parallel_series(x) - specfun::detail::g_parallel_closed(x));
        sweep.update(specfun::detail::g_perp_series(x) - specfun::detail::g_perp_closed(x));
    }
    return make_result("kernel-series-continuity", sweep.worst, 1e-12);
}

CheckResult check_addition_family(const char* name, oracle::SumFamily family) {
    std::mt19937 rng(family == oracle::SumFamily::JSquared          ? 101
                     : family == oracle::SumFamily::MSquaredJSquared ? 202
                                                                     : 303);
    std::uniform_int_distribution<int> qs(1, 10);
    std::uniform_real_distribution<double> args(0.05, 30.0);
    std::uniform_real_distribution<double> fracs(0.05, 0.95);
    Sweep sweep;
    try {
        for (int i = 0; i < 500; ++i) {
            const int q = qs(rng);
            const double arg = args(rng);
            const double phi = fracs(rng) * kPi / q;
            const int m_terms = static_cast<int>((arg + 40.0) / q) + 1;
            sweep.update(oracle::check_addition_theorem(q, arg, phi, oracle::TrigKind::Sin2,
                                                        family, m_terms));
            sweep.update(oracle::check_addition_theorem(q, arg, phi, oracle::TrigKind::Cos2,
                                                        family, m_terms));
        }
    } catch (const oracle::truncation_error& e) {
        return make_result(name, std::numeric_limits<double>::infinity(), 1e-10, e.what());
    }
    return make_result(name, sweep.worst, 1e-10);
}

CheckResult check_derivative() {
    std::mt19937 rng(404);
    std::uniform_int_distribution<int> ns(0, 25);
    std::uniform_real_distribution<double> xs(0.05, 30.0);
    Sweep sweep;
    for (int i = 0; i < 300; ++i)
        sweep.update(oracle::check_derivative_identity(ns(rng), xs(rng)));
    return make_result("derivative-identity", sweep.worst, 1e-8);
}

CheckResult check_angular() {
    std::mt19937 rng(505);
    std::uniform_real_distribution<double> as(1e-3, 30.0);
    Sweep sweep;
    for (int i = 0; i < 200; ++i) {
        const double a = as(rng);
        sweep.update(oracle::check_angular_reduction(0, 0, a));
        sweep.update(oracle::check_angular_reduction(0, 1, a));
    }
    return make_result("angular-reduction", sweep.worst, 1e-9);
}

CheckResult check_single_plate() {
    const WedgeGeometry geom(1);
    Sweep sweep;
    for (int i = 0; i < 2000; ++i) {
        // log-spaced x in [1e-3, 100]
        const double x = std::pow(10.0, -3.0 + 5.0 * i / 1999.0);
        const AtomPosition pos(x, 0.5 * kPi);
        const double ref_par = plate_braces_z_ref(x);
        sweep.update(braces_z(geom, pos) - ref_par);
        sweep.update(braces_phi(geom, pos) - ref_par);
        sweep.update(braces_rho(geom, pos) - plate_braces_rho_ref(x));
    }
    return make_result("single-plate-reduction", sweep.worst, 1e-12);
}

CheckResult check_plate_zero() {
    // On either plate the rho- and z-dipoles are shorted by the conductor;
    // the image sum must cancel bitwise, not merely to rounding.
    Sweep sweep;
    for (int q = 1; q <= 10; ++q) {
        const WedgeGeometry geom(q);
        for (int i = 0; i <= 100; ++i) {
            const double x = 50.0 * i / 100.0;
            for (const double phi : {0.0, geom.alpha()}) {
                const AtomPosition pos(x, phi);
                sweep.update(braces_z(geom, pos));
                sweep.update(braces_rho(geom, pos));
            }
        }
    }
    return make_result("plate-zero", sweep.worst, 0.0);
}

CheckResult check_cusp() {
    // For q >= 2 every polarization is suppressed at the edge.
    Sweep sweep;
    for (int q = 2; q <= 8; ++q) {
        const WedgeGeometry geom(q);
        for (const double frac : {0.125, 0.5, 0.875}) {
            const AtomPosition pos(1e-6, frac * geom.alpha());
            sweep.update(braces_rho(geom, pos));
            sweep.update(braces_phi(geom, pos));
            sweep.update(braces_z(geom, pos));
        }
    }
    return make_result("cusp-suppression", sweep.worst, 1e-9);
}

CheckResult check_mirror() {
    std::mt19937 rng(606);
    std::uniform_int_distribution<int> qs(1, 10);
    std::uniform_real_distribution<double> xs(0.0, 50.0);
    std::uniform_real_distribution<double> fracs(0.0, 0.5);
    Sweep sweep;
    for (int i = 0; i < 2000; ++i) {
        const WedgeGeometry geom(qs(rng));
        const double x = xs(rng);
        const double phi = fracs(rng) * geom.alpha();
        const AtomPosition a(x, phi), b(x, geom.alpha() - phi);
        sweep.update(braces_rho(geom, a) - braces_rho(geom, b));
        sweep.update(braces_phi(geom, a) - braces_phi(geom, b));
        sweep.update(braces_z(geom, a) - braces_z(geom, b));
    }
    return make_result("mirror-symmetry", sweep.worst, 1e-12);
}

CheckResult check_free_space() {
    const DipoleWeights iso(1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0);
    Sweep sweep;
    for (const int q : {1, 2, 3, 5, 8}) {
        const WedgeGeometry geom(q);
        const AtomPosition pos(1e3, 0.5 * geom.alpha());
        const RateResult r = normalized_rates(geom, pos, iso);
        sweep.update(r.norm_rho - 1.0);
        sweep.update(r.norm_phi - 1.0);
        sweep.update(r.norm_z - 1.0);
    }
    return make_result("free-space-recovery", sweep.worst, 7.5e-3);
}

CheckResult check_oracle_grid(int nodes) {
    oracle::QuadratureConfig cfg;
    cfg.nodes = nodes;
    Sweep sweep;
    for (const int q : {1, 2, 3, 4, 6}) {
        const WedgeGeometry geom(q);
        for (const double x : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
            for (const double frac : {0.125, 0.25, 0.5}) {
                const AtomPosition pos(x, frac * geom.alpha());
                try {
                    sweep.update(oracle::mode_sum_braces(geom, pos, oracle::Polarization::Rho, cfg) -
                                 braces_rho(geom, pos));
                    sweep.update(oracle::mode_sum_braces(geom, pos, oracle::Polarization::Phi, cfg) -
                                 braces_phi(geom, pos));
                    sweep.update(oracle::mode_sum_braces(geom, pos, oracle::Polarization::Z, cfg) -
                                 braces_z(geom, pos));
                } catch (const oracle::non_convergence_error& e) {
                    return make_result("oracle-equivalence",
                                       std::numeric_limits<double>::infinity(), 1e-6, e.what());
                }
            }
        }
    }
    return make_result("oracle-equivalence", sweep.worst, 1e-6);
}

CheckResult check_oracle_truncation(int nodes) {
    // Once q*M > 2x + margin holds, widening the margin by 50% must not move
    // the sum: the neglected channels are past the Bessel decay threshold.
    oracle::QuadratureConfig base;
    base.nodes = nodes;
    oracle::QuadratureConfig wide = base;
    wide.m_margin = base.m_margin + base.m_margin / 2;
    Sweep sweep;
    for (const int q : {1, 3}) {
        const WedgeGeometry geom(q);
        for (const double x : {2.0, 10.0}) {
            const AtomPosition pos(x, 0.25 * geom.alpha());
            for (const auto pol : {oracle::Polarization::Rho, oracle::Polarization::Phi,
                                   oracle::Polarization::Z}) {
                try {
                    sweep.update(oracle::mode_sum_braces(geom, pos, pol, base) -
                                 oracle::mode_sum_braces(geom, pos, pol, wide));
                } catch (const oracle::non_convergence_error& e) {
                    return make_result("oracle-m-truncation",
                                       std::numeric_limits<double>::infinity(), 1e-10, e.what());
                }
            }
        }
    }
    return make_result("oracle-m-truncation", sweep.worst, 1e-10);
}

}  // namespace

bool Report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

Report run_verify(Level level, int oracle_nodes) {
    if (oracle_nodes < 16)
        throw std::domain_error("run_verify: need at least 16 quadrature nodes");
    Report report;
    report.checks.push_back(check_series_continuity());
    report.checks.push_back(check_addition_family("addition-theorem-J2", oracle::SumFamily::JSquared));
    report.checks.push_back(
        check_addition_family("addition-theorem-m2J2", oracle::SumFamily::MSquaredJSquared));
    report.checks.push_back(
        check_addition_family("addition-theorem-Jprime2", oracle::SumFamily::JPrimeSquared));
    report.checks.push_back(check_derivative());
    report.checks.push_back(check_angular());
    report.checks.push_back(check_single_plate());
    report.checks.push_back(check_plate_zero());
    report.checks.push_back(check_cusp());
    report.checks.push_back(check_mirror());
    report.checks.push_back(check_free_space());
    if (level == Level::Full) {
        report.checks.push_back(check_oracle_grid(oracle_nodes));
        report.checks.push_back(check_oracle_truncation(oracle_nodes));
    }
    return report;
}

}  // namespace wedgese::verify
