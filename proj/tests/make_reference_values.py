#!/usr/bin/env python3
"""Regenerates tests/reference_values.hpp.

All values are evaluated with mpmath at 50 significant digits and rounded
to the nearest double. Run from the repository root:

    python3 tests/make_reference_values.py > tests/reference_values.hpp
"""
import mpmath as mp

mp.mp.dps = 50


def g_par(x):
    x = mp.mpf(x)
    if x == 0:
        return mp.mpf(2) / 3
    return mp.sin(x) / x + mp.cos(x) / x**2 - mp.sin(x) / x**3


def g_perp(x):
    x = mp.mpf(x)
    if x == 0:
        return mp.mpf(-1) / 3
    return mp.cos(x) / x**2 - mp.sin(x) / x**3


def h_phi(x, psi):
    s, c = mp.sin(psi), mp.cos(psi)
    return g_par(x * s) * s**2 + 2 * g_perp(x * s) * c**2


def h_rho(x, psi):
    s, c = mp.sin(psi), mp.cos(psi)
    return g_par(x * s) * c**2 + 2 * g_perp(x * s) * s**2


def braces_z(q, x, phi):
    acc = mp.mpf(2) / 3 - g_par(2 * x * mp.sin(phi))
    for l in range(1, q):
        acc -= g_par(2 * x * mp.sin(phi + mp.pi * l / q)) - g_par(2 * x * mp.sin(mp.pi * l / q))
    return acc


def braces_phi(q, x, phi):
    acc = mp.mpf(2) / 3 - h_phi(2 * x, phi)
    for l in range(1, q):
        acc -= h_phi(2 * x, phi + mp.pi * l / q) + h_phi(2 * x, mp.pi * l / q)
    return acc


def braces_rho(q, x, phi):
    acc = mp.mpf(2) / 3 - h_rho(2 * x, phi)
    for l in range(1, q):
        acc -= h_rho(2 * x, phi + mp.pi * l / q) - h_rho(2 * x, mp.pi * l / q)
    return acc


def emit(name, value):
    print(f"inline constexpr double {name} = {mp.nstr(mp.mpf(value), 17, strip_zeros=False)};")


def emit_table(name, rows, cols):
    print(f"inline constexpr double {name}[][{cols}] = {{")
    for r in rows:
        body = ", ".join(mp.nstr(mp.mpf(v), 17, strip_zeros=False) for v in r)
        print(f"    {{{body}}},")
    print("};")


print("// Generated by tests/make_reference_values.py -- do not edit by hand.")
print("#pragma once")
print()
print("namespace wedgese::testing {")
print()

emit("kGparPi", g_par(mp.pi))
emit("kGparHalfPi", g_par(mp.pi / 2))
emit("kGpar1_5", g_par("1.5"))
emit("kGperp1_5", g_perp("1.5"))
emit("kGperpPi", g_perp(mp.pi))
emit("kGpar10", g_par(10))
emit("kHphi3PiSixth", h_phi(3, mp.pi / 6))
emit("kHrho3PiSixth", h_rho(3, mp.pi / 6))
print()

# Kernel reference samples: log-spaced x in [1e-8, 100], plus the series switch.
xs = [mp.mpf(10) ** (mp.mpf(e) / 4) for e in range(-32, 9)]  # 1e-8 .. 100
xs += [mp.mpf("0.4999"), mp.mpf("0.5"), mp.mpf("0.5001")]
rows = [(x, g_par(x), g_perp(x)) for x in xs]
emit_table("kKernelTable", rows, 3)
print()

# Bessel J_n(x) spot checks across evaluation regimes.
bessel_pts = [
    (0, 0.0), (1, 0.0), (5, 0.0),
    (0, 1.0), (1, 1.0), (2, 1.0), (7, 1.0),
    (0, 0.5), (3, 0.5),
    (0, 11.9), (1, 11.9), (4, 11.9),
    (0, 12.0), (2, 12.0),
    (0, 35.3), (7, 35.3), (30, 35.3), (52, 35.3),
    (0, 100.0), (1, 100.0), (40, 100.0), (100, 100.0), (120, 100.0),
    (0, 200.0), (150, 200.0), (200, 200.0), (230, 200.0),
    (50, 20.0), (100, 45.0), (201, 150.0), (400, 199.0), (400, 200.0),
    (10, 0.1), (25, 3.0), (60, 20.0),
]
rows = [(n, x, mp.besselj(n, mp.mpf(x))) for (n, x) in bessel_pts]
emit_table("kBesselTable", rows, 3)
print()

rows = [(n, x, (mp.besselj(n - 1, mp.mpf(x)) - mp.besselj(n + 1, mp.mpf(x))) / 2 if n >= 1
         else -mp.besselj(1, mp.mpf(x)))
        for (n, x) in [(0, 1.0), (1, 0.0), (1, 1.0), (3, 7.7), (12, 12.0), (40, 100.0), (100, 100.0)]]
emit_table("kBesselPrimeTable", rows, 3)
print()

emit("kBesselJ0_1", mp.besselj(0, 1))
emit("kBesselJ1_1", mp.besselj(1, 1))
print()

# Closed-form braces at assorted interior points (same formulas at 50 digits;
# the independent route is the mode-sum oracle).
pts = [
    (1, mp.pi / 2, mp.pi / 2),
    (2, mp.mpf(5), mp.pi / 4),
    (3, mp.mpf(2), mp.mpf("0.3")),
    (3, mp.mpf(10), mp.pi / 6),
    (4, mp.mpf("0.5"), mp.pi / 16),
    (6, mp.mpf(20), mp.pi / 12),
]
rows = [(q, x, phi, braces_rho(q, x, phi), braces_phi(q, x, phi), braces_z(q, x, phi))
        for (q, x, phi) in pts]
emit_table("kBracesTable", rows, 6)
print()

emit("kBracesZ_q1_xHalfPi", braces_z(1, mp.pi / 2, mp.pi / 2))
emit("kRateZ_q1_x5", mp.mpf("1.5") * (mp.mpf(2) / 3 - g_par(10)))
print()
print("}  // namespace wedgese::testing")
