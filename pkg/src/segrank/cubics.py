"""Random determinantal cubic surfaces and their real line counts.

A cubic surface det(z0*M0 + ... + z3*M3) = 0 built from four independent
Gaussian 3 x 3 matrices carries 27 complex lines of which 3, 7, 15 or 27
are real. The real line count is obtained exactly from the number of real
points in which the orthogonal complement of span{M0..M3} meets the
rank-one variety: 0 -> 3, 2 -> 7, 4 -> 15, 6 -> 27. Also here: the exact
rational polytope of feasible (expected lines, P(27 real)) pairs.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .classify import ProbEstimate
from .errors import DegenerateSpan, DegenerateSurface, TrialRejected
from .rng import SeededRng
from .solvers import three_by_three_intersection_count
from .subspaces import orthogonal_complement, subspace_from_matrices

# Real line counts indexed by the real intersection count of the section.
LINES_FROM_COUNT = {0: 3, 2: 7, 4: 15, 6: 27}

# Exponent tuples (a0, a1, a2, a3) with sum 3, one per cubic monomial.
CUBIC_MONOMIALS: tuple[tuple[int, int, int, int], ...] = tuple(
    sorted(
        {
            tuple(
                sum(1 for j in triple if j == var) for var in range(4)
            )
            for triple in itertools.product(range(4), repeat=3)
        },
        reverse=True,
    )
)
_MONOMIAL_INDEX = {mono: i for i, mono in enumerate(CUBIC_MONOMIALS)}


def determinant_form_coefficients(matrices: np.ndarray) -> np.ndarray:
    """Monomial coefficients of det(sum_j z_j M_j) for four 3x3 matrices.

    Expands the determinant by trilinearity over column assignments; the
    result is ordered like CUBIC_MONOMIALS.
    """
    mats = np.asarray(matrices, dtype=np.float64)
    if mats.shape != (4, 3, 3):
        raise ValueError(f"need four 3x3 matrices, got shape {mats.shape}")
    triples = list(itertools.product(range(4), repeat=3))
    stacked = np.empty((len(triples), 3, 3))
    for t, (j0, j1, j2) in enumerate(triples):
        stacked[t, :, 0] = mats[j0, :, 0]
        stacked[t, :, 1] = mats[j1, :, 1]
        stacked[t, :, 2] = mats[j2, :, 2]
    dets = np.linalg.det(stacked)
    coeffs = np.zeros(len(CUBIC_MONOMIALS))
    for t, (j0, j1, j2) in enumerate(triples):
        mono = tuple(sum(1 for j in (j0, j1, j2) if j == var) for var in range(4))
        coeffs[_MONOMIAL_INDEX[mono]] += dets[t]
    return coeffs


@dataclass(frozen=True)
class CubicSurface:
    """Determinantal cubic surface in projective 3-space."""

    matrices: np.ndarray
    coefficients: np.ndarray

    def __post_init__(self) -> None:
        mats = np.asarray(self.matrices, dtype=np.float64)
        if mats.shape != (4, 3, 3):
            raise ValueError(f"need four 3x3 matrices, got shape {mats.shape}")
        mats = mats.copy()
        mats.flags.writeable = False
        object.__setattr__(self, "matrices", mats)
        coeffs = np.asarray(self.coefficients, dtype=np.float64).copy()
        coeffs.flags.writeable = False
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def from_matrices(cls, matrices) -> "CubicSurface":
        mats = np.asarray(matrices, dtype=np.float64)
        return cls(mats, determinant_form_coefficients(mats))

    def evaluate(self, z: np.ndarray) -> np.ndarray:
        """Evaluate the expanded cubic form at points z of shape (..., 4)."""
        z = np.asarray(z, dtype=np.float64)
        exps = np.array(CUBIC_MONOMIALS)  # (20, 4)
        powers = np.prod(z[..., None, :] ** exps[None, :, :], axis=-1)
        return powers @ self.coefficients

    def determinant_at(self, z: np.ndarray) -> np.ndarray:
        """Evaluate det(sum z_j M_j) directly (identity check vs evaluate)."""
        z = np.asarray(z, dtype=np.float64)
        pencil = np.einsum("...j,jrc->...rc", z, self.matrices)
        return np.linalg.det(pencil)


def random_cubic(rng: SeededRng) -> CubicSurface:
    """Cubic surface from four i.i.d. Gaussian matrices."""
    return CubicSurface.from_matrices(rng.normal((4, 3, 3)))


@dataclass(frozen=True)
class LineCountResult:
    real_lines: int
    source_count: int


def count_real_lines(
    surface: CubicSurface, rng: SeededRng | None = None
) -> LineCountResult:
    """Number of real lines among the surface's 27 complex lines.

    Depends only on the span of the four matrices; rescaling or changing
    the basis of the span leaves the count unchanged.
    """
    try:
        span = subspace_from_matrices(surface.matrices, 3, 3)
    except DegenerateSpan as err:
        raise DegenerateSurface("matrix span has dimension < 4") from err
    if span.dim != 4:
        raise DegenerateSurface(f"matrix span has dimension {span.dim}")
    section = orthogonal_complement(span)
    result = three_by_three_intersection_count(section, rng)
    return LineCountResult(
        real_lines=LINES_FROM_COUNT[result.real_count],
        source_count=result.real_count,
    )


@dataclass(frozen=True)
class LineStatistics:
    """Monte Carlo line-count statistics over random cubic surfaces."""

    trials: int
    seed: int
    rejected: int
    line_tallies: dict[int, int]
    source_tallies: dict[int, int]
    line_estimates: dict[int, ProbEstimate]
    expected_lines: float
    expected_ci95: tuple[float, float]


def _line_trial_range(
    seed: int, start: int, stop: int
) -> tuple[dict[int, int], dict[int, int], int]:
    line_tallies = {3: 0, 7: 0, 15: 0, 27: 0}
    source_tallies = {0: 0, 2: 0, 4: 0, 6: 0}
    rejected = 0
    for index in range(start, stop):
        rng = SeededRng(seed, stream=index)
        try:
            outcome = count_real_lines(random_cubic(rng), rng)
        except TrialRejected:
            rejected += 1
            continue
        line_tallies[outcome.real_lines] += 1
        source_tallies[outcome.source_count] += 1
    return line_tallies, source_tallies, rejected


def estimate_line_statistics(
    trials: int, seed: int, workers: int = 1
) -> LineStatistics:
    """Estimate the distribution of real line counts and its mean.

    Trial i uses RNG stream i of the master seed, so tallies do not depend
    on the worker count. The mean carries a delta-method 95% interval from
    the per-trial variance of the line count.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    workers = max(workers, 1)
    bounds = [(trials * w) // workers for w in range(workers + 1)]
    ranges = [
        (bounds[w], bounds[w + 1])
        for w in range(workers)
        if bounds[w] < bounds[w + 1]
    ]
    if workers <= 1 or len(ranges) <= 1:
        partials = [_line_trial_range(seed, start, stop) for start, stop in ranges]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_line_trial_range, seed, start, stop)
                for start, stop in ranges
            ]
            partials = [f.result() for f in futures]
    line_tallies = {3: 0, 7: 0, 15: 0, 27: 0}
    source_tallies = {0: 0, 2: 0, 4: 0, 6: 0}
    rejected = 0
    for lines, sources, rej in partials:
        for key, val in lines.items():
            line_tallies[key] += val
        for key, val in sources.items():
            source_tallies[key] += val
        rejected += rej
    effective = trials - rejected
    if effective > 0:
        mean = sum(j * t for j, t in line_tallies.items()) / effective
        second = sum(j * j * t for j, t in line_tallies.items()) / effective
        half = 1.96 * math.sqrt(max(second - mean * mean, 0.0) / effective)
        ci = (mean - half, mean + half)
    else:
        mean, ci = float("nan"), (float("nan"), float("nan"))
    estimates = {
        j: ProbEstimate.from_tally(t, trials, rejected)
        for j, t in line_tallies.items()
    }
    return LineStatistics(
        trials=trials,
        seed=seed,
        rejected=rejected,
        line_tallies=line_tallies,
        source_tallies=source_tallies,
        line_estimates=estimates,
        expected_lines=mean,
        expected_ci95=ci,
    )


# ---------------------------------------------------------------------------
# the exact (expected lines, P(27 real)) polytope


@dataclass(frozen=True)
class PolygonVertices:
    """Exact rational vertices of a convex polygon, counterclockwise."""

    points: tuple[tuple[Fraction, Fraction], ...]


def _convex_hull_ccw(
    points: list[tuple[Fraction, Fraction]]
) -> list[tuple[Fraction, Fraction]]:
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[tuple[Fraction, Fraction]] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[Fraction, Fraction]] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def polytope_vertices() -> PolygonVertices:
    """Vertices of the feasible (expected lines, P(27 real)) region.

    The probabilities (p0, p2, p4, p6) of the four intersection counts
    satisfy nonnegativity, sum 1, and mean count 3; expected lines are
    3p0 + 7p2 + 15p4 + 27p6. Basic solutions come from zeroing pairs of
    probabilities and solving the remaining 2x2 system exactly; infeasible
    ones (negative entries) are discarded.
    """
    count_weight = (Fraction(0), Fraction(2), Fraction(4), Fraction(6))
    line_weight = (Fraction(3), Fraction(7), Fraction(15), Fraction(27))
    vertices: list[tuple[Fraction, Fraction]] = []
    for free in itertools.combinations(range(4), 2):
        i, j = free
        det = count_weight[j] - count_weight[i]
        if det == 0:
            continue
        p_i = (count_weight[j] - 3) / det
        p_j = 1 - p_i
        if p_i < 0 or p_j < 0:
            continue
        probs = [Fraction(0)] * 4
        probs[i], probs[j] = p_i, p_j
        expected = sum(w * p for w, p in zip(line_weight, probs))
        vertices.append((expected, probs[3]))
    return PolygonVertices(points=tuple(_convex_hull_ccw(vertices)))
