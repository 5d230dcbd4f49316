#!/usr/bin/env python3
"""Golden eigenvalues for the radial Schrodinger problem, from a
finite-difference tridiagonal eigensolver with Richardson extrapolation.
Independent of the shooting-method implementation under test.
Run: python3 tools/oracle/quantum_goldens.py
"""
import numpy as np
from scipy.linalg import eigh_tridiagonal


def fd_levels(alpha, l, rbox, n, count):
    h = rbox / (n + 1)
    r = h * np.arange(1, n + 1)
    veff = r ** alpha + l * (l + 1) / (2 * r ** 2)
    diag = 1.0 / h ** 2 + veff
    off = -0.5 / h ** 2 * np.ones(n - 1)
    vals = eigh_tridiagonal(diag, off, select='i',
                            select_range=(0, count - 1))[0]
    return vals


def richardson(alpha, l, rbox, n, count):
    e1 = fd_levels(alpha, l, rbox, n, count)
    e2 = fd_levels(alpha, l, rbox, 2 * n, count)
    return (4 * e2 - e1) / 3


for alpha, l, cnt in [(6.0, 0, 4), (6.0, 5, 3), (7.0, 0, 3), (8.0, 2, 3)]:
    vals = richardson(alpha, l, 6.0, 24000, cnt)
    row = ", ".join("%.12f" % v for v in vals)
    print("{%.1f, %d, {%s}}," % (alpha, l, row))

print("// HO cross-check alpha=2: expect sqrt(2)*(2n+l+1.5)")
vals = richardson(2.0, 1, 12.0, 24000, 3)
exact = [np.sqrt(2) * (2 * n + 1 + 1.5) for n in range(3)]
for v, ex in zip(vals, exact):
    print("// %.12f  vs  %.12f   (diff %.2e)" % (v, ex, abs(v - ex)))
