"""Shared independent oracles for the test suite.

Everything here deliberately avoids the library's main evaluation paths:
closed-form eigenfunctions go through the unnormalized Hermite recurrence
with explicit factorials, and eigenvalues of tiny matrices come from
bisection on the characteristic polynomial evaluated by cofactor expansion.
"""

import math

import numpy as np

from hgritz import hermite_eval


def oscillator_state_closed_form(r, x, alpha=1.0):
    """Normalized oscillator eigenfunction from the textbook closed form.

    (alpha/pi)^(1/4) / sqrt(2^r r!) * H_r(x sqrt(alpha)) * exp(-alpha x^2/2),
    valid for r small enough that 2^r r! stays in range.
    """
    xv = np.asarray(x, dtype=float)
    norm = (alpha / math.pi) ** 0.25 / math.sqrt(2.0**r * math.factorial(r))
    return norm * hermite_eval(r, xv * math.sqrt(alpha)) * np.exp(-0.5 * alpha * xv * xv)


def _det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = 0.0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        total += (-1.0) ** j * m[0][j] * _det(minor)
    return total


def charpoly_eigenvalues(a, samples=8001):
    """Roots of det(a - x I) by sign-change bisection between Gershgorin bounds.

    Intended for small matrices (n <= 4) with well-separated eigenvalues;
    raises if the scan does not isolate exactly n simple roots.
    """
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    radius = max(abs(a[i, i]) + sum(abs(a[i, j]) for j in range(n) if j != i)
                 for i in range(n))
    lo, hi = -radius - 1.0, radius + 1.0
    eye = np.eye(n)

    def p(x):
        return _det((a - x * eye).tolist())

    xs = np.linspace(lo, hi, samples)
    vals = np.array([p(x) for x in xs])
    roots = []
    for k in range(samples - 1):
        va, vb = vals[k], vals[k + 1]
        if va == 0.0:
            roots.append(xs[k])
            continue
        if np.sign(va) == np.sign(vb):
            continue
        left, right, fl = xs[k], xs[k + 1], va
        for _ in range(80):
            mid = 0.5 * (left + right)
            fm = p(mid)
            if fm == 0.0:
                left = right = mid
                break
            if np.sign(fm) == np.sign(fl):
                left, fl = mid, fm
            else:
                right = mid
        roots.append(0.5 * (left + right))
    if len(roots) != n:
        raise AssertionError(f"charpoly scan found {len(roots)} roots, expected {n}")
    return np.array(sorted(roots))
