"""Reference values for the C++ tests, computed with mpmath at 40 digits.

Run: python3 tests/oracles/generate.py > tests/oracles.hpp

Every kernel value here is evaluated from the literal definitions
(logarithms, finite geometric sums, direct quadrature), never from the
series or tail forms the library uses.
"""

import random

import mpmath as mp

mp.mp.dps = 40
PI = mp.pi


def E(z):
    return mp.log(abs(z)) / (2 * PI)


def E_n(z, zeta, n):
    if abs(zeta) <= 1:
        return E(z - zeta)
    s = mp.log(abs(zeta))
    for k in range(1, n):
        s -= mp.re((z / zeta) ** k) / k
    return E(z - zeta) - s / (2 * PI)


def G(z, zeta):
    return E(z - zeta) - E(z - mp.conj(zeta))


def G_m(z, zeta, m):
    return E_n(z, zeta, m + 1) - E_n(z, mp.conj(zeta), m + 1)


def P(z, xi):
    return mp.im(z) / (PI * abs(z - xi) ** 2)


def P_m(z, xi, m):
    if abs(xi) <= 1:
        return P(z, xi)
    return P(z, xi) - sum(mp.im(z**k / mp.mpf(xi) ** (k + 1)) for k in range(1, m + 1)) / PI


def v_power15(z):
    # Poisson integral of |xi|^1.5 with the order-1 kernel, closed form.
    r, t = abs(z), mp.arg(z)
    s = mp.mpf(3) / 2
    return r**s * (mp.cos(s * t) + mp.tan(s * PI / 2) * mp.sin(s * t)) + 2 * mp.im(z) / (PI * (s - 1))


def v_power15_quad(z):
    f = lambda xi: P_m(z, xi, 1) * abs(xi) ** mp.mpf(1.5)
    x = mp.re(z)
    pts = [-mp.inf, -abs(x) - 10 * abs(z), -1, 0, 1, x, abs(x) + 10 * abs(z), mp.inf]
    pts = sorted(set(pts), key=lambda p: float(p) if p not in (mp.inf, -mp.inf) else float(p))
    return mp.quad(f, pts, maxdegree=10)


def fmt(x):
    return mp.nstr(mp.mpf(x), 17, min_fixed=-mp.inf, max_fixed=mp.inf, strip_zeros=False)


def c(z):
    return f"{{{fmt(mp.re(z))}, {fmt(mp.im(z))}}}"


def main():
    rnd = random.Random(20240611)
    out = []
    w = out.append
    w("// Generated by tests/oracles/generate.py (mpmath, 40 digits). Do not edit.")
    w("#pragma once")
    w("")
    w("#include <array>")
    w("#include <complex>")
    w("")
    w("namespace oracle {")
    w("")
    w("using C = std::complex<double>;")
    w("")
    w(f"inline constexpr double kE2_i_2i = {fmt(E_n(mp.mpc(0, 1), mp.mpc(0, 2), 2))};")
    w(f"inline constexpr double kE1_i_2i = {fmt(E_n(mp.mpc(0, 1), mp.mpc(0, 2), 1))};")
    w(f"inline constexpr double kG_i_2i = {fmt(G(mp.mpc(0, 1), mp.mpc(0, 2)))};")
    w(f"inline constexpr double kG1_i_4i = {fmt(G_m(mp.mpc(0, 1), mp.mpc(0, 4), 1))};")
    w(f"inline constexpr double kP1_i_2 = {fmt(P_m(mp.mpc(0, 1), 2, 1))};")
    w(f"inline constexpr double kH_halfi_w2 = {fmt(2 * G(mp.mpc(0, 1), mp.mpc(0, 0.5)))};")
    w(f"inline constexpr double kU_indicator_atom3i = {fmt(mp.mpf(1) / 2 + G(mp.mpc(0, 1), mp.mpc(0, 3)))};")
    w(f"inline constexpr double kMeasureNorm_two_atoms = {fmt(mp.mpf(2) / 9 + mp.mpf(6) / 28)};")
    w("")

    # Kernel tables at random points, including near-boundary and far-field ones.
    def rand_upper(lo, hi):
        r = mp.mpf(10) ** rnd.uniform(mp.log10(lo), mp.log10(hi))
        th = rnd.choice([rnd.uniform(0.0, 3.14159), rnd.uniform(1e-4, 1e-2), mp.pi - rnd.uniform(1e-4, 1e-2)])
        return mp.mpc(float(r * mp.cos(th)), float(r * mp.sin(th)))

    w("struct GreenCase { C z; C zeta; int m; double value; };")
    rows = []
    for _ in range(48):
        m = rnd.choice([0, 1, 2, 3, 4, 8])
        zeta = rand_upper(1.01, 1e3)
        z = rand_upper(1e-2, 1e3)
        if abs(z - zeta) < 1e-3 * abs(zeta):
            continue
        rows.append(f"    {{{c(z)}, {c(zeta)}, {m}, {fmt(G_m(z, zeta, m))}}},")
    w(f"inline const std::array<GreenCase, {len(rows)}> kGreenTable{{{{")
    out.extend(rows)
    w("}};")
    w("")

    w("struct PoissonCase { C z; double xi; int m; double value; };")
    rows = []
    for _ in range(48):
        m = rnd.choice([0, 1, 2, 3, 4, 8])
        xi = mp.mpf(float(rnd.choice([-1, 1]) * mp.mpf(10) ** rnd.uniform(0.01, 3)))
        z = rand_upper(1e-2, 1e3)
        rows.append(f"    {{{c(z)}, {fmt(xi)}, {m}, {fmt(P_m(z, xi, m))}}},")
    w(f"inline const std::array<PoissonCase, {len(rows)}> kPoissonTable{{{{")
    out.extend(rows)
    w("}};")
    w("")

    # Poisson integral of |xi|^1.5 with m = 1; closed form cross-checked by quadrature.
    w("struct PotentialCase { C z; double v; };")
    pts = [
        mp.mpc(100 * mp.cos(PI / 4), 100 * mp.sin(PI / 4)),
        mp.mpc(1000 * mp.cos(PI / 4), 1000 * mp.sin(PI / 4)),
        mp.mpc(0, 100),
        mp.mpc(10 * mp.cos(PI / 6), 10 * mp.sin(PI / 6)),
        mp.mpc(3 * mp.cos(1), 3 * mp.sin(1)),
    ]
    pts = [mp.mpc(float(mp.re(p)), float(mp.im(p))) for p in pts]
    rows = []
    for p in pts:
        closed = v_power15(p)
        if p == pts[-1]:
            quad = v_power15_quad(p)
            assert abs(quad - closed) < mp.mpf(10) ** -20 * abs(closed), (quad, closed)
        rows.append(f"    {{{c(p)}, {fmt(closed)}}},")
    w(f"inline const std::array<PotentialCase, {len(rows)}> kPower15Order1{{{{")
    out.extend(rows)
    w("}};")
    w("")
    w("}  // namespace oracle")
    print("\n".join(out))


if __name__ == "__main__":
    main()
