"""Binary forms and certified real projective root counting.

The root finder runs two independent methods, companion-matrix eigenvalues
and a Sturm sign-variation count, and refuses to answer (AmbiguousRoots)
when they disagree or when a root sits too close to the real/complex
decision boundary. Monte Carlo callers reject such trials.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import AmbiguousRoots

# Relative size below which a leading coefficient counts as a structural
# zero, i.e. a projective root at [0:1].
DEGREE_DROP_RTOL = 1e-12

# Two real roots closer than this (relative) are folded into one.
ROOT_CLUSTER_RTOL = 1e-7

DEFAULT_TAU = 1e-7


@dataclass(frozen=True)
class BinaryForm:
    """Homogeneous form sum_i coeffs[i] * x0^(d-i) * x1^i of degree d."""

    coeffs: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.coeffs, dtype=np.float64).ravel()
        if arr.size < 1:
            raise ValueError("a binary form needs at least one coefficient")
        if not np.all(np.isfinite(arr)):
            raise ValueError("coefficients must be finite")
        scale = np.max(np.abs(arr))
        if scale == 0.0:
            raise ValueError("zero form has no well-defined roots")
        arr = arr / scale
        arr.flags.writeable = False
        object.__setattr__(self, "coeffs", arr)

    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def evaluate(self, x0, x1):
        x0 = np.asarray(x0, dtype=np.float64)
        x1 = np.asarray(x1, dtype=np.float64)
        d = self.degree
        powers0 = np.stack([x0 ** (d - i) for i in range(d + 1)])
        powers1 = np.stack([x1**i for i in range(d + 1)])
        return np.einsum("i,i...,i...->...", self.coeffs, powers0, powers1)


def _companion_eigenvalues(desc: np.ndarray) -> np.ndarray:
    e = desc.size - 1
    if e == 0:
        return np.empty(0, dtype=np.complex128)
    comp = np.zeros((e, e))
    comp[0, :] = -desc[1:] / desc[0]
    if e > 1:
        comp[1:, :-1] = np.eye(e - 1)
    return np.linalg.eigvals(comp)


def _fold_close(values: np.ndarray) -> np.ndarray:
    if values.size == 0:
        return values
    ordered = np.sort(values)
    kept = [ordered[0]]
    for v in ordered[1:]:
        if abs(v - kept[-1]) > ROOT_CLUSTER_RTOL * (1.0 + abs(v)):
            kept.append(v)
    return np.array(kept)


def _projective_point(t: float | None) -> np.ndarray:
    if t is None:  # root at infinity
        return np.array([0.0, 1.0])
    v = np.array([1.0, t]) / np.hypot(1.0, t)
    return v


def real_roots_binary_form(
    form: BinaryForm, tau: float = DEFAULT_TAU
) -> tuple[int, list[np.ndarray]]:
    """Distinct real projective roots of a binary form.

    Returns (count, points) with each point a unit 2-vector [x0, x1] whose
    first nonzero coordinate is positive. Degree drop at the top coefficient
    is reported as a root at [0:1]. Companion eigenvalues are cross-checked
    against the Sturm count; a mismatch, or any eigenvalue with
    |imag|/(1+|real|) inside (tau/10, 10*tau), raises AmbiguousRoots.
    """
    asc = form.coeffs  # unit max-norm by construction
    top = asc.size
    while top > 1 and abs(asc[top - 1]) <= DEGREE_DROP_RTOL:
        top -= 1
    has_infinity_root = top < asc.size
    affine = asc[:top]

    points: list[np.ndarray] = []
    if top == 1:
        # form is c * x0^j * x1^(d-j) up to noise; affine part constant
        if abs(affine[0]) <= DEGREE_DROP_RTOL:
            raise AmbiguousRoots("form vanished under degree stripping")
        real_affine = np.empty(0)
    else:
        desc = affine[::-1].copy()
        raw = _companion_eigenvalues(desc)
        polished = _kernels.newton_polish(desc, raw, 10)
        ratios = np.abs(polished.imag) / (1.0 + np.abs(polished.real))
        dead = (ratios > tau / 10.0) & (ratios < 10.0 * tau)
        if np.any(dead):
            raise AmbiguousRoots(
                f"root with imag ratio {ratios[dead][0]:.3e} in dead zone"
            )
        real_affine = _fold_close(polished.real[ratios <= tau / 10.0])
        sturm = _kernels.sturm_real_root_count(desc)
        if sturm != real_affine.size:
            raise AmbiguousRoots(
                f"Sturm count {sturm} != companion count {real_affine.size}"
            )
    for t in real_affine:
        points.append(_projective_point(float(t)))
    if has_infinity_root:
        points.append(_projective_point(None))
    return len(points), points
