"""Pure-Python univariate polynomial kernels.

Reference implementations of the hot root-counting primitives; the
compiled twin in _ckernels.pyx mirrors these semantics exactly. All
coefficient arrays are dense float64 in descending-power (numpy polyval)
order.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"

# Coefficients at or below this fraction of the max-norm are treated as
# structural zeros when determining degrees inside the Sturm chain.
_STRIP_RTOL = 1e-13


def _strip_leading(c: list[float]) -> list[float]:
    m = max(abs(v) for v in c)
    if m == 0.0:
        return []
    tol = _STRIP_RTOL * m
    i = 0
    while i < len(c) - 1 and abs(c[i]) <= tol:
        i += 1
    if abs(c[i]) <= tol:
        return []
    return c[i:]


def _normalized(c: list[float]) -> list[float]:
    m = max(abs(v) for v in c)
    return [v / m for v in c]


def _neg_remainder(u: list[float], v: list[float]) -> list[float]:
    """-(u mod v) by synthetic division; u, v descending, deg v >= 1."""
    r = list(u)
    dv = len(v) - 1
    lead = v[0]
    while len(r) - 1 >= dv:
        q = r[0] / lead
        for j in range(1, len(v)):
            r[j] -= q * v[j]
        r.pop(0)
        if not r:
            break
    return [-val for val in r]


def _sign_variations(signs: list[int]) -> int:
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            count += 1
        prev = s
    return count


def sturm_real_root_count(coeffs) -> int:
    """Number of distinct real roots of a polynomial over the whole line.

    Uses the canonical negated-remainder chain; each member is rescaled to
    unit max-norm, which preserves the sign structure. The count is exact
    for well-separated roots and is intended to be cross-checked against an
    eigenvalue-based root finder.
    """
    c = _strip_leading([float(v) for v in np.asarray(coeffs).ravel()])
    if not c:
        raise ValueError("zero polynomial has no Sturm chain")
    if len(c) == 1:
        return 0
    c = _normalized(c)
    deriv = _strip_leading(
        [c[i] * (len(c) - 1 - i) for i in range(len(c) - 1)]
    )
    chain = [c, _normalized(deriv)]
    while len(chain[-1]) > 1:
        r = _neg_remainder(chain[-2], chain[-1])
        if not r or max(abs(v) for v in r) <= _STRIP_RTOL:
            break  # common factor reached: chain still counts distinct roots
        r = _strip_leading(r)
        if not r:
            break
        chain.append(_normalized(r))
    at_pos = []
    at_neg = []
    for member in chain:
        lead = 1 if member[0] > 0 else -1
        deg = len(member) - 1
        at_pos.append(lead)
        at_neg.append(lead if deg % 2 == 0 else -lead)
    return _sign_variations(at_neg) - _sign_variations(at_pos)


def eval_poly(coeffs, xs):
    """Horner evaluation; xs may be real or complex, scalar or array."""
    c = np.asarray(coeffs)
    x = np.asarray(xs)
    result = np.zeros_like(x, dtype=np.result_type(c, x))
    for coeff in c:
        result = result * x + coeff
    return result


def newton_polish(coeffs, roots, iters: int = 8):
    """Refine approximate roots with damped-free Newton steps.

    Roots where the derivative underflows are left untouched; polishing a
    simple root contracts quadratically so a handful of iterations reaches
    machine precision.
    """
    c = np.asarray(coeffs, dtype=np.complex128)
    dc = c[:-1] * np.arange(len(c) - 1, 0, -1)
    z = np.array(roots, dtype=np.complex128)
    for _ in range(iters):
        dv = eval_poly(dc, z)
        ok = np.abs(dv) > 1e-300
        step = np.where(ok, eval_poly(c, z) / np.where(ok, dv, 1.0), 0.0)
        z = z - step
    return z
