"""Linear subspaces of m x n matrices under the trace inner product.

Matrices are flattened row-major to vectors in R^(mn), where the trace
inner product Trace(A^T B) becomes the ordinary dot product. Subspaces are
stored as orthonormal bases; uniform subspaces are produced by
orthonormalizing Gaussian spans, which inherits orthogonal invariance from
the Gaussian ensemble.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSpan
from .formats import Tensor3
from .rng import SeededRng

# Relative singular-value cutoff below which a span is rejected as a
# measure-zero degenerate sample.
SPAN_RTOL = 1e-10

# Orthonormality certification tolerance for stored bases.
ORTHO_TOL = 1e-10

_UNIFORM_RETRIES = 8


@dataclass(frozen=True)
class MatrixSubspace:
    """A d-dimensional subspace of m x n matrices with an orthonormal basis.

    basis has shape (d, m, n); its row-major flattenings are orthonormal in
    R^(mn) within ORTHO_TOL.
    """

    m: int
    n: int
    basis: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.basis, dtype=np.float64)
        if arr.ndim != 3 or arr.shape[1:] != (self.m, self.n):
            raise ValueError(
                f"basis shape {arr.shape} incompatible with ambient "
                f"{self.m}x{self.n}"
            )
        d = arr.shape[0]
        if not 1 <= d <= self.m * self.n:
            raise ValueError(f"subspace dimension {d} out of range")
        flat = arr.reshape(d, -1)
        gram = flat @ flat.T
        if np.max(np.abs(gram - np.eye(d))) > ORTHO_TOL:
            raise ValueError("basis is not orthonormal under the trace inner product")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "basis", arr)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def ambient_dim(self) -> int:
        return self.m * self.n

    @property
    def flat(self) -> np.ndarray:
        """Basis as a (dim, mn) matrix of flattened rows."""
        return self.basis.reshape(self.dim, -1)

    def project(self, matrix: np.ndarray) -> np.ndarray:
        """Orthogonal projection of a matrix onto the subspace."""
        v = np.asarray(matrix, dtype=np.float64).reshape(-1)
        coeff = self.flat @ v
        return (coeff @ self.flat).reshape(self.m, self.n)

    def projection_defect(self, matrix: np.ndarray) -> float:
        """Relative distance of a matrix from the subspace."""
        a = np.asarray(matrix, dtype=np.float64)
        scale = np.linalg.norm(a)
        if scale == 0.0:
            return 0.0
        return float(np.linalg.norm(a - self.project(a)) / scale)

    def contains(self, matrix: np.ndarray, tol: float = 1e-8) -> bool:
        return self.projection_defect(matrix) <= tol


def _mgs_orthonormalize(rows: np.ndarray, expected_dim: int) -> np.ndarray:
    """Modified Gram-Schmidt with one reorthogonalization pass.

    Accepts a (k, N) stack and returns (expected_dim, N) orthonormal rows
    spanning the same space. Raises DegenerateSpan if fewer than
    expected_dim rows survive.
    """
    basis: list[np.ndarray] = []
    for row in rows:
        v = row.astype(np.float64, copy=True)
        scale = np.linalg.norm(v)
        if scale == 0.0:
            continue
        for _ in range(2):  # second sweep restores orthogonality lost to cancellation
            for b in basis:
                v -= (b @ v) * b
        norm = np.linalg.norm(v)
        if norm <= SPAN_RTOL * scale:
            if len(basis) >= expected_dim:
                continue  # surplus dependent rows are fine past full rank
            raise DegenerateSpan(
                f"row reduced to norm {norm:.3e} during orthonormalization"
            )
        basis.append(v / norm)
        if len(basis) == expected_dim and len(rows) == expected_dim:
            break
    if len(basis) < expected_dim:
        raise DegenerateSpan(
            f"stack spans {len(basis)} dimensions, expected {expected_dim}"
        )
    return np.array(basis[:expected_dim])


def _check_stack_rank(flat: np.ndarray, expected_dim: int) -> None:
    svals = np.linalg.svd(flat, compute_uv=False)
    if svals[expected_dim - 1] < SPAN_RTOL * svals[0]:
        raise DegenerateSpan(
            f"singular value ratio {svals[expected_dim - 1] / svals[0]:.3e} "
            f"below {SPAN_RTOL:.0e}"
        )


def subspace_from_matrices(matrices, m: int, n: int) -> MatrixSubspace:
    """Orthonormalized span of a stack of m x n matrices."""
    stack = np.asarray(matrices, dtype=np.float64).reshape(-1, m * n)
    expected = min(stack.shape[0], m * n)
    _check_stack_rank(stack, expected)
    basis = _mgs_orthonormalize(stack, expected)
    return MatrixSubspace(m, n, basis.reshape(expected, m, n))


def slice_span(tensor: Tensor3) -> MatrixSubspace:
    """Span of the frontal slices of a tensor.

    For ell > mn the span is the full matrix space. A numerically
    rank-deficient slice stack raises DegenerateSpan; with Gaussian input
    this is a measure-zero event and the caller rejects the trial.

    One singular value decomposition provides both the rank certificate and
    an orthonormal basis of the row space.
    """
    f = tensor.format
    stack = tensor.slices.reshape(f.ell, f.m * f.n)
    expected = min(f.ell, f.m * f.n)
    _, svals, vh = np.linalg.svd(stack, full_matrices=False)
    if svals[expected - 1] < SPAN_RTOL * svals[0]:
        raise DegenerateSpan(
            f"slice stack singular value ratio "
            f"{svals[expected - 1] / svals[0]:.3e} below {SPAN_RTOL:.0e}"
        )
    return MatrixSubspace(f.m, f.n, vh[:expected].reshape(expected, f.m, f.n))


def uniform_subspace(
    d: int, m: int, n: int, rng: SeededRng
) -> MatrixSubspace:
    """Uniform random d-dimensional subspace of m x n matrices.

    Orthonormalized span of d i.i.d. Gaussian matrices; the resulting
    distribution is the unique orthogonally invariant one on the
    Grassmannian of d-planes.
    """
    if not 1 <= d <= m * n:
        raise ValueError(f"subspace dimension {d} out of range for {m}x{n}")
    last_err: DegenerateSpan | None = None
    for _ in range(_UNIFORM_RETRIES):
        try:
            return subspace_from_matrices(rng.normal((d, m, n)), m, n)
        except DegenerateSpan as err:  # pragma: no cover - measure zero
            last_err = err
    raise DegenerateSpan(
        f"no non-degenerate Gaussian span after {_UNIFORM_RETRIES} draws"
    ) from last_err


def orthogonal_complement(space: MatrixSubspace) -> MatrixSubspace:
    """Orthogonal complement under the trace inner product.

    The complement of a uniform subspace is uniform, and applying the
    operation twice returns the original subspace.
    """
    if space.dim == space.ambient_dim:
        raise ValueError("full space has no nonzero orthogonal complement")
    _, _, vh = np.linalg.svd(space.flat, full_matrices=True)
    comp = vh[space.dim :]
    return MatrixSubspace(space.m, space.n, comp.reshape(-1, space.m, space.n))


def subspace_distance(a: MatrixSubspace, b: MatrixSubspace) -> float:
    """Frobenius distance between orthogonal projectors; 0 iff equal spans."""
    pa = a.flat.T @ a.flat
    pb = b.flat.T @ b.flat
    return float(np.linalg.norm(pa - pb))
