"""Rank classification of sampled tensors and the Monte Carlo harness.

The classification rules, by regime of (m, n, ell):

* boundary (ell = (m-1)(n-1)+1): rank is ell iff the slice span meets the
  rank-one variety in at least ell real points, else ell + 1; implemented
  for ambient 2 x n (pencil solver) and 3 x 3 (four-cubics solver);
* mid: rank is ell, certified by a rank-one witness in the span
  (implemented for 3 x 3 x 6);
* tall ((m-1)n < ell < mn): rank is ell unconditionally;
* full (ell >= mn): rank is mn.

Monte Carlo trials map trial index i to RNG stream i of the master seed,
so tallies are reproducible bit-for-bit for any worker count.
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import TrialRejected, UnsupportedFormat
from .formats import Format, Regime, Tensor3, sample_gaussian_tensor
from .rng import SeededRng
from .segre import segre_degree
from .solvers import (
    IntersectionResult,
    RankOneWitness,
    pencil_intersection_count,
    rank_one_witness_search,
    three_by_three_intersection_count,
)
from .subspaces import slice_span


class RankBasis(enum.Enum):
    BOUNDARY_COUNT = "boundary_count"
    MID_WITNESS = "mid_witness"
    TALL_RULE = "tall_rule"
    FULL_RULE = "full_rule"


@dataclass(frozen=True)
class RankVerdict:
    rank: int
    basis: RankBasis
    evidence: IntersectionResult | RankOneWitness | None = None


def is_format_supported(fmt: Format) -> bool:
    regime = fmt.regime
    if regime in (Regime.TALL, Regime.FULL):
        return True
    if regime == Regime.BOUNDARY:
        return fmt.m == 2 or (fmt.m, fmt.n) == (3, 3)
    if regime == Regime.MID:
        return (fmt.m, fmt.n) == (3, 3)
    return False


def classify_rank(tensor: Tensor3, rng: SeededRng | None = None) -> RankVerdict:
    """Classify the rank of one tensor.

    May raise a TrialRejected subclass for measure-zero or numerically
    ambiguous samples; Monte Carlo callers tally those as rejected.
    """
    fmt = tensor.format
    regime = fmt.regime
    if regime == Regime.FULL:
        return RankVerdict(fmt.m * fmt.n, RankBasis.FULL_RULE)
    if regime == Regime.TALL:
        return RankVerdict(fmt.ell, RankBasis.TALL_RULE)
    if regime == Regime.MID:
        if (fmt.m, fmt.n) != (3, 3):
            raise UnsupportedFormat(
                f"mid regime implemented only for 3x3 ambient, got {fmt}"
            )
        witness = rank_one_witness_search(slice_span(tensor), rng)
        return RankVerdict(fmt.ell, RankBasis.MID_WITNESS, witness)
    if regime == Regime.BOUNDARY:
        space = slice_span(tensor)
        if fmt.m == 2:
            result = pencil_intersection_count(space)
        elif (fmt.m, fmt.n) == (3, 3):
            result = three_by_three_intersection_count(space, rng)
        else:
            raise UnsupportedFormat(
                f"unsupported boundary format {fmt}; only 2xNxN and 3x3x5 "
                "have exact solvers"
            )
        rank = fmt.ell if result.real_count >= fmt.ell else fmt.ell + 1
        return RankVerdict(rank, RankBasis.BOUNDARY_COUNT, result)
    raise UnsupportedFormat(f"sub-boundary format {fmt} outside scope")


# ---------------------------------------------------------------------------
# estimates


def wilson_interval(
    successes: int, trials: int, z: float = 1.96
) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    if not 0 <= successes <= trials or trials < 1:
        raise ValueError("need 0 <= successes <= trials, trials >= 1")
    p_hat = successes / trials
    denom = 1.0 + z * z / trials
    center = (p_hat + z * z / (2 * trials)) / denom
    half = (
        z
        * math.sqrt(p_hat * (1.0 - p_hat) / trials + z * z / (4 * trials * trials))
        / denom
    )
    return max(0.0, center - half), min(1.0, center + half)


@dataclass(frozen=True)
class ProbEstimate:
    """Binomial tally with a 95% Wilson interval over non-rejected trials."""

    successes: int
    trials: int
    rejected: int
    p_hat: float
    ci95: tuple[float, float]

    @classmethod
    def from_tally(
        cls, successes: int, trials: int, rejected: int
    ) -> "ProbEstimate":
        effective = trials - rejected
        if effective <= 0:
            return cls(successes, trials, rejected, float("nan"), (0.0, 1.0))
        return cls(
            successes=successes,
            trials=trials,
            rejected=rejected,
            p_hat=successes / effective,
            ci95=wilson_interval(successes, effective),
        )


@dataclass(frozen=True)
class CountDistribution:
    """Tallies of real intersection counts for a boundary format."""

    support: tuple[int, ...]
    tallies: dict[int, int]
    trials: int
    rejected: int

    def probability(self, count: int) -> float:
        effective = self.trials - self.rejected
        return self.tallies.get(count, 0) / effective if effective else float("nan")

    @property
    def mean(self) -> float:
        effective = self.trials - self.rejected
        total = sum(c * t for c, t in self.tallies.items())
        return total / effective if effective else float("nan")


@dataclass(frozen=True)
class MonteCarloRun:
    format: Format
    trials: int
    seed: int
    rejected: int
    rank_estimates: dict[int, ProbEstimate]
    counts: CountDistribution | None


def _run_trial_range(
    fmt_tuple: tuple[int, int, int], seed: int, start: int, stop: int
) -> tuple[dict[int, int], dict[int, int], int]:
    fmt = Format(*fmt_tuple)
    rank_tally: Counter[int] = Counter()
    count_tally: Counter[int] = Counter()
    rejected = 0
    for index in range(start, stop):
        rng = SeededRng(seed, stream=index)
        try:
            tensor = sample_gaussian_tensor(fmt, rng)
            verdict = classify_rank(tensor, rng)
        except TrialRejected:
            rejected += 1
            continue
        rank_tally[verdict.rank] += 1
        if isinstance(verdict.evidence, IntersectionResult):
            count_tally[verdict.evidence.real_count] += 1
    return dict(rank_tally), dict(count_tally), rejected


def monte_carlo_rank(
    fmt: Format, trials: int, seed: int, workers: int = 1
) -> MonteCarloRun:
    """Estimate rank probabilities over independent Gaussian tensors.

    Trial i draws from RNG stream i of the master seed, both for the tensor
    entries and for any solver-internal randomization, so results are
    identical for any number of workers.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    if not is_format_supported(fmt):
        raise UnsupportedFormat(f"unsupported format {fmt}")

    bounds = [
        (trials * w) // max(workers, 1) for w in range(max(workers, 1) + 1)
    ]
    ranges = [
        (bounds[w], bounds[w + 1])
        for w in range(max(workers, 1))
        if bounds[w] < bounds[w + 1]
    ]
    fmt_tuple = (fmt.m, fmt.n, fmt.ell)
    if workers <= 1 or len(ranges) <= 1:
        partials = [
            _run_trial_range(fmt_tuple, seed, start, stop)
            for start, stop in ranges
        ]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_run_trial_range, fmt_tuple, seed, start, stop)
                for start, stop in ranges
            ]
            partials = [f.result() for f in futures]

    rank_tally: Counter[int] = Counter()
    count_tally: Counter[int] = Counter()
    rejected = 0
    for ranks, counts, rej in partials:
        rank_tally.update(ranks)
        count_tally.update(counts)
        rejected += rej

    expected_ranks = _expected_ranks(fmt)
    for rank in rank_tally:
        if rank not in expected_ranks:  # pragma: no cover - contract guard
            raise AssertionError(f"classifier produced unexpected rank {rank}")
    estimates = {
        rank: ProbEstimate.from_tally(rank_tally.get(rank, 0), trials, rejected)
        for rank in expected_ranks
    }

    counts = None
    if fmt.regime == Regime.BOUNDARY:
        degree = segre_degree(fmt.m, fmt.n)
        support = tuple(range(degree % 2, degree + 1, 2))
        keys = sorted(set(count_tally) | set(support))
        counts = CountDistribution(
            support=support,
            tallies={c: count_tally.get(c, 0) for c in keys},
            trials=trials,
            rejected=rejected,
        )
    return MonteCarloRun(
        format=fmt,
        trials=trials,
        seed=seed,
        rejected=rejected,
        rank_estimates=estimates,
        counts=counts,
    )


def _expected_ranks(fmt: Format) -> tuple[int, ...]:
    regime = fmt.regime
    if regime == Regime.BOUNDARY:
        return (fmt.ell, fmt.ell + 1)
    if regime in (Regime.MID, Regime.TALL):
        return (fmt.ell,)
    return (fmt.m * fmt.n,)
