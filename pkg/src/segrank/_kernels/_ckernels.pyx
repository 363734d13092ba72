# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled univariate polynomial kernels.

Semantics mirror _pykernels exactly; the per-call agreement of the two
backends is asserted in the test suite. Coefficients are dense float64 in
descending-power order.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport fabs

cnp.import_array()

BACKEND_NAME = "c"

DEF MAXN = 160  # max number of coefficients (degree 159)

cdef double STRIP_RTOL = 1e-13


cdef int _strip_normalize(double* c, int nc) nogil:
    """Strip tiny leading coefficients and rescale to unit max-norm.

    Returns the new length (0 if the polynomial is numerically zero).
    Operates in place; the surviving window is moved to the front.
    """
    cdef double m = 0.0
    cdef int i, start
    for i in range(nc):
        if fabs(c[i]) > m:
            m = fabs(c[i])
    if m == 0.0:
        return 0
    cdef double tol = STRIP_RTOL * m
    start = 0
    while start < nc - 1 and fabs(c[start]) <= tol:
        start += 1
    if fabs(c[start]) <= tol:
        return 0
    for i in range(start, nc):
        c[i - start] = c[i] / m
    return nc - start


cdef int _neg_remainder(double* u, int nu, double* v, int nv, double* r) nogil:
    """r = -(u mod v); returns length of r (before stripping)."""
    cdef int i, j, nr
    cdef double q
    for i in range(nu):
        r[i] = u[i]
    nr = nu
    while nr - 1 >= nv - 1:
        q = r[0] / v[0]
        for j in range(1, nv):
            r[j] -= q * v[j]
        for j in range(1, nr):
            r[j - 1] = r[j]
        nr -= 1
        if nr == 0:
            break
    for j in range(nr):
        r[j] = -r[j]
    return nr


def sturm_real_root_count(coeffs) -> int:
    """Number of distinct real roots over the whole line (Sturm chain)."""
    cdef cnp.ndarray[cnp.float64_t, ndim=1] arr = np.ascontiguousarray(
        np.asarray(coeffs, dtype=np.float64).ravel()
    )
    cdef int nc = arr.shape[0]
    if nc > MAXN:
        raise ValueError(f"degree {nc - 1} exceeds compiled kernel limit")
    cdef double a[MAXN]
    cdef double b[MAXN]
    cdef double r[MAXN]
    cdef int na, nb, nr, i, deg
    cdef double rmax
    cdef int lead_sign
    cdef int prev_pos = 0, prev_neg = 0, var_pos = 0, var_neg = 0
    cdef int sign_pos, sign_neg

    for i in range(nc):
        a[i] = arr[i]
    na = _strip_normalize(a, nc)
    if na == 0:
        raise ValueError("zero polynomial has no Sturm chain")
    if na == 1:
        return 0
    # derivative
    for i in range(na - 1):
        b[i] = a[i] * (na - 1 - i)
    nb = _strip_normalize(b, na - 1)

    # process chain members incrementally, tracking sign variations at +/-inf
    deg = na - 1
    lead_sign = 1 if a[0] > 0 else -1
    prev_pos = lead_sign
    prev_neg = lead_sign if deg % 2 == 0 else -lead_sign

    deg = nb - 1
    lead_sign = 1 if b[0] > 0 else -1
    sign_pos = lead_sign
    sign_neg = lead_sign if deg % 2 == 0 else -lead_sign
    if sign_pos != prev_pos:
        var_pos += 1
    if sign_neg != prev_neg:
        var_neg += 1
    prev_pos = sign_pos
    prev_neg = sign_neg

    while nb > 1:
        nr = _neg_remainder(a, na, b, nb, r)
        if nr == 0:
            break
        # remainder negligible relative to the unit-norm dividend: gcd reached
        rmax = 0.0
        for i in range(nr):
            if fabs(r[i]) > rmax:
                rmax = fabs(r[i])
        if rmax <= STRIP_RTOL:
            break
        nr = _strip_normalize(r, nr)
        if nr == 0:
            break
        for i in range(nb):
            a[i] = b[i]
        na = nb
        for i in range(nr):
            b[i] = r[i]
        nb = nr
        deg = nb - 1
        lead_sign = 1 if b[0] > 0 else -1
        sign_pos = lead_sign
        sign_neg = lead_sign if deg % 2 == 0 else -lead_sign
        if sign_pos != prev_pos:
            var_pos += 1
        if sign_neg != prev_neg:
            var_neg += 1
        prev_pos = sign_pos
        prev_neg = sign_neg

    return var_neg - var_pos


def eval_poly(coeffs, xs):
    """Horner evaluation; dispatches on real vs complex input."""
    c = np.asarray(coeffs)
    x = np.asarray(xs)
    if np.iscomplexobj(c) or np.iscomplexobj(x):
        return _eval_poly_complex(
            np.ascontiguousarray(c.ravel(), dtype=np.complex128),
            np.ascontiguousarray(x.ravel(), dtype=np.complex128),
        ).reshape(x.shape)
    return _eval_poly_real(
        np.ascontiguousarray(c.ravel(), dtype=np.float64),
        np.ascontiguousarray(x.ravel(), dtype=np.float64),
    ).reshape(x.shape)


cdef cnp.ndarray _eval_poly_real(double[::1] c, double[::1] x):
    cdef Py_ssize_t i, j, nc = c.shape[0], nx = x.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(nx, dtype=np.float64)
    cdef double acc, xv
    for i in range(nx):
        xv = x[i]
        acc = 0.0
        for j in range(nc):
            acc = acc * xv + c[j]
        out[i] = acc
    return out


cdef cnp.ndarray _eval_poly_complex(double complex[::1] c, double complex[::1] x):
    cdef Py_ssize_t i, j, nc = c.shape[0], nx = x.shape[0]
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] out = np.empty(
        nx, dtype=np.complex128
    )
    cdef double complex acc, xv
    for i in range(nx):
        xv = x[i]
        acc = 0.0
        for j in range(nc):
            acc = acc * xv + c[j]
        out[i] = acc
    return out


def newton_polish(coeffs, roots, int iters=8):
    """Refine approximate roots with Newton steps (quadratic contraction)."""
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] c = np.ascontiguousarray(
        np.asarray(coeffs, dtype=np.complex128).ravel()
    )
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] z = np.array(
        roots, dtype=np.complex128
    ).ravel()
    cdef Py_ssize_t nc = c.shape[0], nz = z.shape[0]
    cdef cnp.ndarray[cnp.complex128_t, ndim=1] dc = np.empty(
        max(nc - 1, 0), dtype=np.complex128
    )
    cdef Py_ssize_t i, j, it
    for j in range(nc - 1):
        dc[j] = c[j] * (nc - 1 - j)
    cdef double complex val, dval, zv
    for i in range(nz):
        zv = z[i]
        for it in range(iters):
            val = 0.0
            dval = 0.0
            for j in range(nc - 1):
                val = val * zv + c[j]
                dval = dval * zv + dc[j]
            val = val * zv + c[nc - 1]
            if abs(dval) <= 1e-300:
                break
            zv = zv - val / dval
        z[i] = zv
    return z
