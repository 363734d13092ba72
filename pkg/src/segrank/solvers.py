"""Real intersection points of matrix subspaces with the rank-one variety.

Supported exact solvers:

* ambient 2 x n, subspace dimension n: the determinant of the induced
  matrix pencil is a degree-n binary form whose real projective roots are
  the intersection points;
* ambient 3 x 3, subspace dimension 5: the intersection is cut out by the
  four 3 x 3 minors of a 3 x 4 matrix of linear forms; two random cubic
  combinations are solved by a hidden-variable Sylvester resultant and the
  nine Bezout candidates are filtered back onto the variety.

Also here: rank-one witness search for subspaces of small codimension, and
two exact constructions whose intersection points are enumerable by
combinatorics alone, used as oracles for the numeric solvers.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import (
    AmbiguousRoots,
    AmbiguousSystem,
    DegeneratePosition,
    DegenerateSpan,
    DegenerateSystem,
    UnsupportedFormat,
)
from .polynomials import BinaryForm, real_roots_binary_form
from .rng import SeededRng
from .segre import conjugate_real_count
from .subspaces import (
    MatrixSubspace,
    orthogonal_complement,
    subspace_from_matrices,
)

# Maximum residual of the defining equations at a certified point.
TAU_RES = 1e-8

# Real/complex decision threshold on |imag| / (1 + |real|); candidates in
# (TAU_REAL, 100 * TAU_REAL) make the trial ambiguous.
TAU_REAL = 1e-7

# Verification tolerance for the exactly-constructed points.
CONSTRUCTION_TOL = 1e-9

_SOLVE_ATTEMPTS = 5
_NEWTON_ITERS = 8


class SolveStatus(enum.Enum):
    CERTIFIED = "certified"
    AMBIGUOUS = "ambiguous"


@dataclass(frozen=True)
class IntersectionResult:
    """Certified count of real points of a linear section.

    points holds one (x, y) pair per real intersection point x (x) y, each
    a unit vector with positive leading coordinate. real_count and
    complex_count always share parity: strictly complex points come in
    conjugate pairs.
    """

    real_count: int
    complex_count: int
    points: tuple[tuple[np.ndarray, np.ndarray], ...]
    max_residual: float
    status: SolveStatus = SolveStatus.CERTIFIED


@dataclass(frozen=True)
class RankOneWitness:
    """A rank-one matrix x (x) y certified to lie in the subspace."""

    x: np.ndarray
    y: np.ndarray
    residual: float


def _unit_sign(v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=np.float64)
    v = v / np.linalg.norm(v)
    big = np.abs(v) > 1e-12
    if big.any() and v[np.argmax(big)] < 0:
        return -v
    return v


def _complement_flat(space: MatrixSubspace) -> np.ndarray:
    """Orthonormal basis of the complement as raw (k, m, n) rows.

    Same computation as orthogonal_complement, without constructing (and
    re-validating) a MatrixSubspace; used on the Monte Carlo hot path.
    """
    _, _, vh = np.linalg.svd(space.flat, full_matrices=True)
    return vh[space.dim :].reshape(-1, space.m, space.n)


def _chebyshev_nodes(count: int) -> np.ndarray:
    j = np.arange(count)
    return np.cos((2 * j + 1) * np.pi / (2 * count))


def _haar_orthogonal(rng: SeededRng, size: int) -> np.ndarray:
    q, r = np.linalg.qr(rng.normal((size, size)))
    return q * np.sign(np.diag(r))


# ---------------------------------------------------------------------------
# m = 2: matrix pencils


def pencil_intersection_count(space: MatrixSubspace) -> IntersectionResult:
    """Intersection count for an n-dimensional subspace of 2 x n matrices.

    With M_1..M_n an orthonormal basis of the orthogonal complement, the
    matrix C(x) with rows x^T M_i is singular exactly at intersection
    points; det C is a binary form of degree n assembled by evaluation and
    interpolation at Chebyshev nodes.
    """
    if space.m != 2:
        raise UnsupportedFormat("pencil solver needs ambient 2 x n")
    n = space.n
    if space.dim != n:
        raise UnsupportedFormat(
            f"pencil solver needs dimension {n}, got {space.dim}"
        )
    perp = _complement_flat(space)
    a = perp[:, 0, :]  # (n, n): first-row parts of the M_i
    b = perp[:, 1, :]
    nodes = _chebyshev_nodes(n + 1)
    stacked = a[None, :, :] + nodes[:, None, None] * b[None, :, :]
    dets = np.linalg.det(stacked)
    if np.max(np.abs(dets)) < 1e-12 * 2 ** (n / 2):
        raise DegenerateSystem("pencil determinant numerically zero")
    vander = np.vander(nodes, n + 1, increasing=True)
    coeffs = np.linalg.solve(vander, dets)

    count, proj_roots = real_roots_binary_form(BinaryForm(coeffs), TAU_REAL)

    points: list[tuple[np.ndarray, np.ndarray]] = []
    max_residual = 0.0
    for root in proj_roots:
        cmat = root[0] * a + root[1] * b
        _, _, vh = np.linalg.svd(cmat)
        y = _unit_sign(vh[-1])
        residual = float(np.max(np.abs(cmat @ y)))
        if residual > TAU_RES:
            raise AmbiguousRoots(
                f"pencil point residual {residual:.3e} exceeds {TAU_RES:.0e}"
            )
        max_residual = max(max_residual, residual)
        points.append((_unit_sign(root), y))
    return IntersectionResult(
        real_count=count,
        complex_count=n,
        points=tuple(points),
        max_residual=max_residual,
    )


# ---------------------------------------------------------------------------
# ambient 3 x 3, dimension 5: the four-cubics system

# Degree-3 principal lattice on [-1, 1]^2, unisolvent for bivariate cubics.
_LATTICE_UV = np.array(
    [
        (-1.0 + 2.0 * i / 3.0, -1.0 + 2.0 * j / 3.0)
        for i in range(4)
        for j in range(4 - i)
    ]
)
_MONOMIALS = [(ai, bi) for ai in range(4) for bi in range(4 - ai)]
_LATTICE_VANDER = np.array(
    [[u**ai * v**bi for (ai, bi) in _MONOMIALS] for (u, v) in _LATTICE_UV]
)
_LATTICE_INV = np.linalg.inv(_LATTICE_VANDER)

_RES_NODES = _chebyshev_nodes(19)
_RES_VANDER = np.vander(_RES_NODES, 10, increasing=True)
_RES_PINV = np.linalg.pinv(_RES_VANDER)
_RES_POWERS = np.vander(_RES_NODES, 4, increasing=True)

_MINOR_COLUMNS = [
    [1, 2, 3],
    [0, 2, 3],
    [0, 1, 3],
    [0, 1, 2],
]


def _coeff_grid(flat_coeffs: np.ndarray) -> np.ndarray:
    grid = np.zeros((4, 4), dtype=flat_coeffs.dtype)
    for value, (ai, bi) in zip(flat_coeffs, _MONOMIALS):
        grid[ai, bi] = value
    return grid


def _bivariate_eval(grid: np.ndarray, u: np.ndarray, v: np.ndarray):
    pu = u[:, None] ** np.arange(4)[None, :]
    pv = v[:, None] ** np.arange(4)[None, :]
    return np.einsum("na,ab,nb->n", pu, grid, pv)


def _derivative_grids(grid: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    du = np.zeros_like(grid)
    dv = np.zeros_like(grid)
    du[:3, :] = grid[1:, :] * np.arange(1, 4)[:, None]
    dv[:, :3] = grid[:, 1:] * np.arange(1, 4)[None, :]
    return du, dv


class _MinorSystem:
    """The 3 x 4 pencil B(y) = [M_0 y | ... | M_3 y] and its four minors."""

    def __init__(self, perp_basis: np.ndarray):
        # d[j, r, i] = (M_i)[r, j] so that B(y) = sum_j y_j * d[j]
        self.d = perp_basis.transpose(2, 1, 0)

    def matrices(self, ys: np.ndarray) -> np.ndarray:
        return np.einsum("nj,jri->nri", ys, self.d)

    def minors(self, ys: np.ndarray) -> np.ndarray:
        bmats = self.matrices(ys)
        return np.stack(
            [np.linalg.det(bmats[:, :, cols]) for cols in _MINOR_COLUMNS],
            axis=1,
        )


def _sylvester_values(
    pvals: np.ndarray, qvals: np.ndarray
) -> np.ndarray:
    """Batched 6x6 Sylvester matrices from cubic v-coefficients.

    pvals, qvals have shape (N, 4) holding p_0..p_3 evaluated at N points
    of the hidden variable; column layout is descending in v so a right
    null vector is proportional to (v^5, ..., v, 1).
    """
    count = pvals.shape[0]
    syl = np.zeros((count, 6, 6), dtype=pvals.dtype)
    for r in range(3):
        for s in range(4):
            syl[:, r, r + s] = pvals[:, 3 - s]
            syl[:, 3 + r, r + s] = qvals[:, 3 - s]
    return syl


def three_by_three_intersection_count(
    space: MatrixSubspace, rng: SeededRng | None = None
) -> IntersectionResult:
    """Real intersection points for a 5-dimensional subspace of 3 x 3
    matrices.

    Generic sections meet the rank-one variety in six complex points. Two
    random combinations of the four defining cubics are solved by a
    hidden-variable Sylvester resultant; the nine Bezout candidates are
    Newton-polished and filtered by their residual on all four cubics, and
    exactly six certified survivors are required.
    """
    if (space.m, space.n) != (3, 3) or space.dim != 5:
        raise UnsupportedFormat("solver needs a 5-dimensional space of 3x3 matrices")
    if rng is None:
        rng = SeededRng(0)
    system = _MinorSystem(_complement_flat(space))

    lattice_h = np.column_stack([_LATTICE_UV, np.ones(len(_LATTICE_UV))])
    base_minors = system.minors(lattice_h)
    svals = np.linalg.svd(base_minors, compute_uv=False)
    if svals[-1] < 1e-10 * svals[0]:
        raise DegenerateSystem("defining cubics are numerically dependent")

    for _ in range(_SOLVE_ATTEMPTS):
        combo = rng.normal((2, 4))
        rot = _haar_orthogonal(rng, 3)
        chart_nodes = lattice_h @ rot.T
        gvals = system.minors(chart_nodes) @ combo.T  # (10, 2)
        coeffs = _LATTICE_INV @ gvals
        g1 = _coeff_grid(coeffs[:, 0])
        g2 = _coeff_grid(coeffs[:, 1])

        # hidden-variable resultant in u, degree <= 9
        pvals = _RES_POWERS @ g1
        qvals = _RES_POWERS @ g2
        res_vals = np.linalg.det(_sylvester_values(pvals, qvals))
        scale = np.max(np.abs(res_vals))
        if scale < 1e-12:
            continue
        res_vals = res_vals / scale
        c9 = _RES_PINV @ res_vals
        if np.max(np.abs(_RES_VANDER @ c9 - res_vals)) > 1e-6:
            continue  # resultant not a degree-9 polynomial: bad chart
        c9 = c9 / np.max(np.abs(c9))
        top = c9.size
        while top > 1 and abs(c9[top - 1]) <= 1e-12:
            top -= 1
        eff_deg = top - 1
        if eff_deg < 6:
            continue
        desc = c9[:top][::-1]
        comp = np.zeros((eff_deg, eff_deg))
        comp[0, :] = -desc[1:] / desc[0]
        if eff_deg > 1:
            comp[1:, :-1] = np.eye(eff_deg - 1)
        u_roots = np.linalg.eigvals(comp).astype(np.complex128)

        # back-substitute v from the null vector of the evaluated Sylvester
        pu = u_roots[:, None] ** np.arange(4)[None, :]
        syl = _sylvester_values(pu @ g1.astype(np.complex128), pu @ g2.astype(np.complex128))
        _, _, vh = np.linalg.svd(syl)
        null = vh[:, -1, :].conj()
        v_roots = np.einsum("ni,ni->n", null[:, :5], null[:, 1:].conj()) / np.einsum(
            "ni,ni->n", null[:, 1:], null[:, 1:].conj()
        )

        # Newton iteration on the square system (g1, g2)
        u, v = u_roots, v_roots
        g1u, g1v = _derivative_grids(g1)
        g2u, g2v = _derivative_grids(g2)
        for _ in range(_NEWTON_ITERS):
            f1 = _bivariate_eval(g1.astype(np.complex128), u, v)
            f2 = _bivariate_eval(g2.astype(np.complex128), u, v)
            ja = _bivariate_eval(g1u.astype(np.complex128), u, v)
            jb = _bivariate_eval(g1v.astype(np.complex128), u, v)
            jc = _bivariate_eval(g2u.astype(np.complex128), u, v)
            jd = _bivariate_eval(g2v.astype(np.complex128), u, v)
            det_j = ja * jd - jb * jc
            ok = np.abs(det_j) > 1e-14
            det_safe = np.where(ok, det_j, 1.0)
            du = np.where(ok, (-f1 * jd + f2 * jb) / det_safe, 0.0)
            dv = np.where(ok, (-f2 * ja + f1 * jc) / det_safe, 0.0)
            u = u + du
            v = v + dv

        cands = np.column_stack([u, v, np.ones_like(u)]) @ rot.T.astype(
            np.complex128
        )
        norms = np.linalg.norm(cands, axis=1)
        good = np.isfinite(norms) & (norms > 0)
        cands = cands[good] / norms[good, None]
        if cands.shape[0] == 0:
            continue
        resid = np.max(np.abs(system.minors(cands)), axis=1)
        survivors = cands[resid <= TAU_RES]
        sur_resid = resid[resid <= TAU_RES]

        # deduplicate projectively (Newton can merge basins)
        order = np.argsort(sur_resid)
        kept: list[np.ndarray] = []
        kept_resid: list[float] = []
        for idx in order:
            y = survivors[idx]
            if all(1.0 - abs(np.vdot(k, y)) > 1e-6 for k in kept):
                kept.append(y)
                kept_resid.append(float(sur_resid[idx]))
        if len(kept) != 6:
            continue

        result = _classify_and_package(kept, kept_resid, system)
        if result is not None:
            return result
    raise AmbiguousSystem(
        "could not certify six intersection points after "
        f"{_SOLVE_ATTEMPTS} randomized attempts"
    )


def _classify_and_package(
    kept: list[np.ndarray],
    kept_resid: list[float],
    system: _MinorSystem,
) -> IntersectionResult | None:
    """Split certified candidates into real points and conjugate pairs.

    Returns None when a complex candidate lacks its conjugate partner
    (a retryable numerical failure); raises AmbiguousSystem for dead-zone
    candidates, which no retry can fix.
    """
    real_ys: list[np.ndarray] = []
    complex_ids: list[int] = []
    for i, y in enumerate(kept):
        lead = y[int(np.argmax(np.abs(y)))]
        y_phase = y * (lead.conjugate() / abs(lead))
        ratio = float(
            np.max(np.abs(y_phase.imag) / (1.0 + np.abs(y_phase.real)))
        )
        if ratio <= TAU_REAL:
            real_ys.append(y_phase.real / np.linalg.norm(y_phase.real))
        elif ratio < 100.0 * TAU_REAL:
            raise AmbiguousSystem(
                f"candidate imag ratio {ratio:.3e} in the dead zone"
            )
        else:
            complex_ids.append(i)

    unpaired = set(complex_ids)
    for i in complex_ids:
        if i not in unpaired:
            continue
        partner = None
        for j in unpaired:
            if j != i and 1.0 - abs(np.vdot(np.conj(kept[i]), kept[j])) < 1e-6:
                partner = j
                break
        if partner is None:
            return None
        unpaired.discard(i)
        unpaired.discard(partner)

    points: list[tuple[np.ndarray, np.ndarray]] = []
    max_residual = max(kept_resid, default=0.0)
    for y in real_ys:
        bmat = system.matrices(y[None, :])[0]
        umat, _, _ = np.linalg.svd(bmat)
        x = umat[:, -1]
        residual = float(np.max(np.abs(x @ bmat)))
        if residual > TAU_RES:
            return None
        max_residual = max(max_residual, residual)
        points.append((_unit_sign(x), _unit_sign(y)))
    return IntersectionResult(
        real_count=len(points),
        complex_count=6,
        points=tuple(points),
        max_residual=max_residual,
    )


# ---------------------------------------------------------------------------
# rank-one witnesses for small complement dimension


def rank_one_witness_search(
    space: MatrixSubspace, rng: SeededRng | None = None
) -> RankOneWitness:
    """Find a rank-one matrix inside the subspace.

    Supported cases, with k = mn - dim the complement dimension: k < m or
    k < n (a linear kernel solve after fixing one factor), and the 3 x 3
    case with k = 3, where the singular locus of the induced 3 x 3 pencil
    is a plane cubic and a random line through it always meets it in a
    real point. In these cases a witness always exists.
    """
    if rng is None:
        rng = SeededRng(0)
    m, n = space.m, space.n
    k = m * n - space.dim
    if k == 0:
        x = np.zeros(m)
        x[0] = 1.0
        y = np.zeros(n)
        y[0] = 1.0
        return RankOneWitness(x=x, y=y, residual=0.0)
    perp = orthogonal_complement(space)

    if k < m:
        y = _unit_sign(rng.normal(n))
        cols = np.einsum("imn,n->mi", perp.basis, y)  # (m, k)
        umat, _, _ = np.linalg.svd(cols)
        x = _unit_sign(umat[:, -1])
        return _package_witness(perp, x, y)
    if k < n:
        x = _unit_sign(rng.normal(m))
        rows = np.einsum("imn,m->in", perp.basis, x)  # (k, n)
        _, _, vh = np.linalg.svd(rows)
        y = _unit_sign(vh[-1])
        return _package_witness(perp, x, y)
    if (m, n, k) == (3, 3, 3):
        return _witness_from_plane_cubic(perp, rng)
    raise UnsupportedFormat(
        f"no witness route for ambient {m}x{n} with complement dimension {k}"
    )


def _package_witness(
    perp: MatrixSubspace, x: np.ndarray, y: np.ndarray
) -> RankOneWitness:
    defect = float(
        np.linalg.norm(np.einsum("imn,m,n->i", perp.basis, x, y))
    )
    if defect > TAU_RES:
        raise AmbiguousSystem(f"witness projection defect {defect:.3e}")
    return RankOneWitness(x=x, y=y, residual=defect)


def _witness_from_plane_cubic(
    perp: MatrixSubspace, rng: SeededRng, attempts: int = 20
) -> RankOneWitness:
    nodes = _chebyshev_nodes(4)
    vander_inv = np.linalg.inv(np.vander(nodes, 4, increasing=True))
    for _ in range(attempts):
        x_a = rng.normal(3)
        x_b = rng.normal(3)
        lines = x_a[None, :] + nodes[:, None] * x_b[None, :]  # (4, 3)
        cmats = np.einsum("imn,tm->tin", perp.basis, lines)  # (4, 3, 3)
        dets = np.linalg.det(cmats)
        if np.max(np.abs(dets)) < 1e-12:
            continue
        asc = vander_inv @ dets
        asc = asc / np.max(np.abs(asc))
        top = asc.size
        while top > 1 and abs(asc[top - 1]) <= 1e-12:
            top -= 1
        candidates: list[np.ndarray] = []
        if top > 1:
            desc = asc[:top][::-1]
            comp = np.zeros((top - 1, top - 1))
            comp[0, :] = -desc[1:] / desc[0]
            if top > 2:
                comp[1:, :-1] = np.eye(top - 2)
            roots = _kernels.newton_polish(desc, np.linalg.eigvals(comp), 10)
            ratios = np.abs(roots.imag) / (1.0 + np.abs(roots.real))
            for t in np.sort(roots.real[ratios <= TAU_REAL]):
                candidates.append(x_a + float(t) * x_b)
        if top < asc.size:
            candidates.append(x_b.copy())  # root escaped to infinity
        for x_raw in candidates:
            x = _unit_sign(x_raw)
            cmat = np.einsum("imn,m->in", perp.basis, x)
            _, _, vh = np.linalg.svd(cmat)
            y = _unit_sign(vh[-1])
            defect = float(
                np.linalg.norm(np.einsum("imn,m,n->i", perp.basis, x, y))
            )
            if defect <= TAU_RES:
                return RankOneWitness(x=x, y=y, residual=defect)
    raise AmbiguousSystem("no certified rank-one witness on the plane cubic")


# ---------------------------------------------------------------------------
# exact constructions with enumerable intersection points


def _one_dim_kernel(stack: np.ndarray) -> np.ndarray:
    """Unit spanning vector of the kernel of a (d-1, d) stack."""
    _, svals, vh = np.linalg.svd(stack)
    if svals[-1] < 1e-10 * svals[0]:
        raise DegeneratePosition("constraint stack is rank-deficient")
    return _unit_sign(vh[-1])


def bilinear_constraint_subspace(
    a_vectors: np.ndarray, b_vectors: np.ndarray
) -> tuple[MatrixSubspace, list[tuple[np.ndarray, np.ndarray]]]:
    """Subspace {M : a_i^T M b_i = 0 for all i} with its exact real
    intersection points.

    With k = m + n - 2 generic vector pairs the subspace has the boundary
    dimension (m-1)(n-1)+1 and meets the rank-one variety in exactly
    comb(k, m-1) real points: for every (m-1)-subset S the factor x spans
    the kernel of {a_i : i in S} and y the kernel of {b_j : j not in S}.
    """
    a = np.asarray(a_vectors, dtype=np.float64)
    b = np.asarray(b_vectors, dtype=np.float64)
    k, m = a.shape
    k2, n = b.shape
    if k != k2 or k != m + n - 2:
        raise ValueError(
            f"need m+n-2 = {m + n - 2} vector pairs, got {k} and {k2}"
        )
    constraints = np.einsum("km,kn->kmn", a, b)
    try:
        perp = subspace_from_matrices(constraints, m, n)
    except DegenerateSpan as err:
        raise DegeneratePosition(
            "constraint rank-one matrices are dependent"
        ) from err
    space = orthogonal_complement(perp)

    points: list[tuple[np.ndarray, np.ndarray]] = []
    for subset in itertools.combinations(range(k), m - 1):
        complement = [i for i in range(k) if i not in subset]
        x = _one_dim_kernel(a[list(subset)])
        y = _one_dim_kernel(b[complement])
        defect = float(
            np.linalg.norm(np.einsum("imn,m,n->i", perp.basis, x, y))
        )
        if defect > CONSTRUCTION_TOL:
            raise DegeneratePosition(
                f"constructed point defect {defect:.3e} exceeds "
                f"{CONSTRUCTION_TOL:.0e}"
            )
        points.append((x, y))
    return space, points


def conjugate_constraint_subspace(
    m: int, n: int, rng: SeededRng
) -> tuple[MatrixSubspace, int, list[tuple[np.ndarray, np.ndarray]]]:
    """Boundary-dimension subspace built from conjugate constraint pairs.

    The m+n-2 bilinear constraints come from floor(k/2) random complex
    conjugate pairs plus one real pair when k is odd, realified into real
    constraints. Exactly conjugate_real_count(m, n) of the complex
    intersection points are real: those indexed by subsets stable under the
    conjugation swap. Returns (subspace, expected_real, real_points).
    """
    k = m + n - 2
    pairs = k // 2
    odd = k % 2 == 1
    a_cplx = rng.normal((pairs, m)) + 1j * rng.normal((pairs, m))
    b_cplx = rng.normal((pairs, n)) + 1j * rng.normal((pairs, n))
    a_real = rng.normal(m) if odd else None
    b_real = rng.normal(n) if odd else None

    constraints = []
    for j in range(pairs):
        outer = np.outer(a_cplx[j], b_cplx[j])
        constraints.append(outer.real)
        constraints.append(outer.imag)
    if odd:
        constraints.append(np.outer(a_real, b_real))
    try:
        perp = subspace_from_matrices(np.array(constraints), m, n)
    except DegenerateSpan as err:
        raise DegeneratePosition("realified constraints are dependent") from err
    space = orthogonal_complement(perp)

    expected = conjugate_real_count(m, n)
    target = m - 1
    use_real = target % 2 == 1
    if use_real and not odd:
        if expected != 0:
            raise DegeneratePosition("parity bookkeeping failed")
        return space, 0, []
    chosen_pairs = (target - 1) // 2 if use_real else target // 2

    points: list[tuple[np.ndarray, np.ndarray]] = []
    for subset in itertools.combinations(range(pairs), chosen_pairs):
        x_rows = [row for j in subset for row in (a_cplx[j].real, a_cplx[j].imag)]
        if use_real:
            x_rows.append(a_real)
        y_rows = [
            row
            for j in range(pairs)
            if j not in subset
            for row in (b_cplx[j].real, b_cplx[j].imag)
        ]
        if odd and not use_real:
            y_rows.append(b_real)
        x = _one_dim_kernel(np.array(x_rows))
        y = _one_dim_kernel(np.array(y_rows))
        defect = float(
            np.linalg.norm(np.einsum("imn,m,n->i", perp.basis, x, y))
        )
        if defect > CONSTRUCTION_TOL:
            raise DegeneratePosition(
                f"conjugate-construction point defect {defect:.3e}"
            )
        points.append((x, y))
    if len(points) != expected:
        raise DegeneratePosition(
            f"enumerated {len(points)} real points, expected {expected}"
        )
    return space, expected, points
