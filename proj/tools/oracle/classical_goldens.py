#!/usr/bin/env python3
"""Golden values for the classical-orbit module: radial action, angle
advance, curvature, resonant-torus data, closed forms. mpmath, dps=30.
Run: python3 tools/oracle/classical_goldens.py
"""
from mpmath import (mp, mpf, sqrt, pi, sin, cos, quad, gamma, nstr)

mp.dps = 30


def pr2(r, E, L, al):
    return 2 * (E - r ** al) - L ** 2 / r ** 2


def psqrt(x):
    return sqrt(x) if x > 0 else mpf(0)


def bisect(f, a, b, n=200):
    fa = f(a)
    for _ in range(n):
        m = (a + b) / 2
        fm = f(m)
        if fa * fm <= 0:
            b = m
        else:
            a, fa = m, fm
    return (a + b) / 2


def turning(E, L, al):
    rbar = (L ** 2 / al) ** (mpf(1) / (al + 2))
    f = lambda r: pr2(r, E, L, al)
    r1 = bisect(f, rbar, mpf('1e-15'))
    r2 = bisect(f, rbar, E ** (1 / al) * mpf(2))
    return r1, r2


def Ir(E, L, al):
    if L == 0:
        rmax = E ** (1 / al)
        f = lambda r: psqrt(2 * (E - r ** al))
        return quad(f, [0, rmax]) / pi
    r1, r2 = turning(E, L, al)
    def f(t):
        r = r1 + (r2 - r1) * sin(t) ** 2
        dr = (r2 - r1) * 2 * sin(t) * cos(t)
        return psqrt(pr2(r, E, L, al)) * dr
    return quad(f, [0, pi / 2]) / pi


def Theta(E, L, al):
    r1, r2 = turning(E, L, al)
    def f(t):
        r = r1 + (r2 - r1) * sin(t) ** 2
        dr = (r2 - r1) * 2 * sin(t) * cos(t)
        v = pr2(r, E, L, al)
        return (L / r ** 2) / psqrt(v) * dr if v > 0 else mpf(0)
    return 2 * quad(f, [0, pi / 2])


def circle(al):
    rc = (2 / (al + 2)) ** (1 / al)
    Lc = sqrt(al) * rc ** ((al + 2) / 2)
    return rc, Lc


E = mpf(1)
print("// alpha=6, L = L_C/2: I_r, Theta, K=d2I/dL2 (Richardson h,h/2)")
al = mpf(6)
rc, Lc = circle(al)
L = Lc / 2
h = mpf('1e-3')
def K_fd(E, L, al, h):
    return (Ir(E, L + h, al) - 2 * Ir(E, L, al) + Ir(E, L - h, al)) / h ** 2
K1, K2 = K_fd(E, L, al, h), K_fd(E, L, al, h / 2)
print("{%s, %s, %s}," % (nstr(Ir(E, L, al), 17), nstr(Theta(E, L, al), 17),
                         nstr((4 * K2 - K1) / 3, 12)))

print("// alpha=6: I_r(L=0) numeric and Gamma closed form; T_r(L=0) closed form")
i0 = Ir(E, mpf(0), al)
i0c = sqrt(2) / pi * gamma(1 + 1 / al) * gamma(mpf(3) / 2) / gamma(mpf(3) / 2 + 1 / al)
t0c = sqrt(2 * pi / E) * E ** (1 / al) * gamma(1 + 1 / al) / gamma(mpf(1) / 2 + 1 / al)
print("{%s, %s, %s}," % (nstr(i0, 17), nstr(i0c, 17), nstr(t0c, 17)))
print("// tau_D(alpha=6) = 4*pi*I_r(1,0) =", nstr(4 * pi * i0, 17))

print("// K_D closed form Gamma(1-1/a)/(Gamma(1/2-1/a) sqrt(2 pi)) at alpha=4,6,8")
for a_ in [4, 6, 8]:
    al_ = mpf(a_)
    kd = gamma(1 - 1 / al_) / (gamma(mpf(1) / 2 - 1 / al_) * sqrt(2 * pi))
    print("{%d, %s}," % (a_, nstr(kd, 17)))

print("// alpha=2 analytic: I_r(E=1, L=0.2) vs (E/omega - L)/2, omega=sqrt(2)")
al2 = mpf(2)
print("{%s, %s}," % (nstr(Ir(E, mpf('0.2'), al2), 17),
                     nstr((1 / sqrt(2) - mpf('0.2')) / 2, 17)))

print("// resonant torus (3,1) at alpha=8: L*, K_P, T_r, I_r, tau_P")
al8 = mpf(8)
rc8, Lc8 = circle(al8)
Ls = bisect(lambda L: Theta(E, L, al8) - 2 * pi / 3, Lc8 * mpf('0.999'),
            Lc8 * mpf('0.01'), 140)
K1, K2 = K_fd(E, Ls, al8, h), K_fd(E, Ls, al8, h / 2)
KP = (4 * K2 - K1) / 3
hE = mpf('1e-5')
Tr = 2 * pi * (Ir(E + hE, Ls, al8) - Ir(E - hE, Ls, al8)) / (2 * hE)
IrS = Ir(E, Ls, al8)
print("{%s, %s, %s, %s, %s}," % (nstr(Ls, 17), nstr(KP, 12), nstr(Tr, 14),
                                 nstr(IrS, 17), nstr(2 * pi * (3 * IrS + Ls), 17)))

print("// circle-orbit curvature magnitude |K_C| = (a+1)(a-2)/(12 (a+2)^{3/2} L_C) at 6,7,8")
for a_ in [6, 7, 8]:
    al_ = mpf(a_)
    rc_, Lc_ = circle(al_)
    kc = (al_ + 1) * (al_ - 2) / (12 * (al_ + 2) ** mpf('1.5') * Lc_)
    print("{%d, %s, %s, %s}," % (a_, nstr(rc_, 17), nstr(Lc_, 17), nstr(kc, 17)))

print("// honest curvature limit L->L_C at alpha=7 (ladder L = L_C(1-d))")
al7 = mpf(7)
rc7, Lc7 = circle(al7)
for d in ['1e-2', '1e-3']:
    L = Lc7 * (1 - mpf(d))
    K1, K2 = K_fd(E, L, al7, mpf('2e-4')), K_fd(E, L, al7, mpf('1e-4'))
    print("// d=%s  K=%s" % (d, nstr((4 * K2 - K1) / 3, 10)))
