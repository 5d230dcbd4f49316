#!/usr/bin/env python3
"""Golden values for the special-function kernels, computed with mpmath.

Prints C++-pasteable rows:
  erf on rays and sector grid
  complete Airy/Scorer pairs
  incomplete Airy/Gairy windows (direct high-precision quadrature)
  cubic-phase catastrophe integral reference values
Run: python3 tools/oracle/specfun_goldens.py
"""
from mpmath import (mp, mpf, mpc, erf, exp, sqrt, pi, cos, sin, airyai,
                    airybi, scorergi, quad, arg, fabs, mpmathify, nstr)

mp.dps = 30
I = mpc(0, 1)


def cx(z, digits=17):
    return "{%s, %s}" % (nstr(z.real, digits), nstr(z.imag, digits))


def section(name):
    print("\n// --- %s ---" % name)


section("erf: modulus, ray e^{i pi/4} and e^{-i pi/4}, real, imaginary, sector")
pts = []
for r in ["0.5", "1", "2", "2.9", "3.1", "5", "10", "20", "30"]:
    pts.append(mpf(r) * exp(I * pi / 4))
    pts.append(mpf(r) * exp(-I * pi / 4))
for r in ["0.5", "1.7", "3", "6"]:
    pts.append(mpc(r, 0))
for r in ["0.5", "1.3", "2.9"]:
    pts.append(mpc(0, r))
for x in ["0.3", "1.1", "2.8", "4", "7"]:
    for y in ["0.3", "1.1", "2.8", "4"]:
        pts.append(mpc(x, y))
pts.append(mpc("-1.5", "2.5"))
pts.append(mpc("2.5", "-4.0"))
for z in pts:
    print("{%s, %s}," % (cx(z), cx(erf(z))))

section("complete Airy / Scorer-Gi at x (Ai(x), Gi(x))")
for x in ["0", "-1", "-2", "-5", "-25", "1", "2.5"]:
    xv = mpf(x)
    print('{%s, %s, %s},' % (nstr(xv, 17), nstr(airyai(xv), 17),
                             nstr(scorergi(xv), 17)))

section("incomplete Airy/Gairy: x, z1, z2, Ai_inc, Gi_inc")
def ai_gi_inc(x, z1, z2):
    f_re = lambda t: cos(t ** 3 / 3 + x * t) / pi
    f_im = lambda t: sin(t ** 3 / 3 + x * t) / pi
    # chop at phase increments to keep each panel mild for the oscillatory part
    n = 400
    ts = [z1 + (z2 - z1) * mpf(k) / n for k in range(n + 1)]
    re = sum(quad(f_re, [ts[k], ts[k + 1]]) for k in range(n))
    im = sum(quad(f_im, [ts[k], ts[k + 1]]) for k in range(n))
    return re, im

cases = [("-1", "-1.2", "0.8"), ("2", "-5", "3"), ("-2", "0.3", "2.7"),
         ("-63.0", "-3", "12"), ("0", "-2.98", "0.71")]
for x, z1, z2 in cases:
    a_, g_ = ai_gi_inc(mpf(x), mpf(z1), mpf(z2))
    print('{%s, %s, %s, %s, %s},' % (nstr(mpf(x), 17), nstr(mpf(z1), 17),
                                     nstr(mpf(z2), 17), nstr(a_, 17), nstr(g_, 17)))

section("cubic catastrophe integral: kappa, eps, a, xi-, xi+, value")
def cat_direct(kappa, eps, a, x1, x2):
    f = lambda t: exp(I * kappa * (eps * t ** 2 + a * t ** 3))
    # uniform-in-phase chopping
    n = 2000
    ts = [x1 + (x2 - x1) * mpf(k) / n for k in range(n + 1)]
    return sum(quad(f, [ts[k], ts[k + 1]]) for k in range(n))

for kappa, eps, a in [("1000", "0.1", "0.16666666666666667"),
                      ("1000", "-0.1", "0.16666666666666667"),
                      ("300", "0.02", "-0.25")]:
    v = cat_direct(mpf(kappa), mpf(eps), mpf(a), mpf(-1), mpf(1))
    print('{%s, %s, %s, -1, 1, %s},' % (kappa, eps, a, cx(v)))

section("half-range phase jump, endpoint-regularized, kappa=1e5")
def half_phase(kappa, eps, a):
    ups = -eps / (3 * a)
    lo, hi = (ups, mpf(1)) if eps > 0 else (mpf(-1), ups)
    f = lambda t: exp(I * kappa * (eps * t ** 2 + a * t ** 3))
    n = 6000
    ts = [lo + (hi - lo) * mpf(k) / n for k in range(n + 1)]
    Iv = sum(quad(f, [ts[k], ts[k + 1]]) for k in range(n))
    phi = lambda t: eps * t ** 2 + a * t ** 3
    dphi = lambda t: 2 * eps * t + 3 * a * t ** 2
    B = lambda t: exp(I * kappa * phi(t)) / (I * kappa * dphi(t))
    return Iv - B(hi) + B(lo)

k = mpf(100000)
a6 = mpf(1) / 6
Ip = half_phase(k, mpf("0.05"), a6)
Im_ = half_phase(k, mpf("-0.05"), a6)
d = arg(Ip) - arg(Im_)
print("// I+ = %s  I- = %s" % (cx(Ip), cx(Im_)))
print("// arg difference - pi/2 = %s" % nstr(d - pi / 2, 8))
