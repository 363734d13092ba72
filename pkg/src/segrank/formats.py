"""Tensor formats, regime classification, and Gaussian tensor sampling."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .rng import SeededRng


class Regime(enum.Enum):
    """Position of ell relative to the critical dimensions of the format.

    The boundary value is ell = (m-1)(n-1)+1, the codimension of the
    rank-one variety plus one; tall means (m-1)n < ell < mn.
    """

    SUB_BOUNDARY = "sub_boundary"
    BOUNDARY = "boundary"
    MID = "mid"
    TALL = "tall"
    FULL = "full"


@dataclass(frozen=True)
class Format:
    """Shape (m, n, ell) of an order-three tensor, with 2 <= m <= n <= ell."""

    m: int
    n: int
    ell: int

    def __post_init__(self) -> None:
        if not (2 <= self.m <= self.n <= self.ell):
            raise ValueError(
                f"format must satisfy 2 <= m <= n <= ell, got "
                f"({self.m}, {self.n}, {self.ell})"
            )

    @property
    def boundary_ell(self) -> int:
        return (self.m - 1) * (self.n - 1) + 1

    @property
    def regime(self) -> Regime:
        m, n, ell = self.m, self.n, self.ell
        if ell >= m * n:
            return Regime.FULL
        if ell > (m - 1) * n:
            return Regime.TALL
        if ell > self.boundary_ell:
            return Regime.MID
        if ell == self.boundary_ell:
            return Regime.BOUNDARY
        return Regime.SUB_BOUNDARY

    def __str__(self) -> str:
        return f"{self.m}x{self.n}x{self.ell}"

    @classmethod
    def parse(cls, text: str) -> "Format":
        parts = text.lower().split("x")
        if len(parts) != 3:
            raise ValueError(f"expected 'MxNxL', got {text!r}")
        try:
            m, n, ell = (int(p) for p in parts)
        except ValueError:
            raise ValueError(f"expected 'MxNxL', got {text!r}") from None
        return cls(m, n, ell)


@dataclass(frozen=True)
class Tensor3:
    """Real order-three tensor stored as an (m, n, ell) array.

    The frontal slices T_1, ..., T_ell are entries[:, :, k]; they are the
    m x n matrices whose span drives every rank statement in this library.
    """

    format: Format
    entries: np.ndarray

    def __post_init__(self) -> None:
        f = self.format
        arr = np.asarray(self.entries, dtype=np.float64)
        if arr.shape != (f.m, f.n, f.ell):
            raise ValueError(
                f"entries shape {arr.shape} does not match format {f}"
            )
        if not np.all(np.isfinite(arr)):
            raise ValueError("tensor entries must be finite")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "entries", arr)

    @property
    def slices(self) -> np.ndarray:
        """Slices as an (ell, m, n) array; slices[k] is the k-th layer."""
        return np.moveaxis(self.entries, 2, 0)

    @classmethod
    def from_slices(cls, slices) -> "Tensor3":
        stack = np.asarray(slices, dtype=np.float64)
        ell, m, n = stack.shape
        return cls(Format(m, n, ell), np.moveaxis(stack, 0, 2))


def sample_gaussian_tensor(fmt: Format, rng: SeededRng) -> Tensor3:
    """Draw a tensor with i.i.d. standard normal entries."""
    return Tensor3(fmt, rng.normal((fmt.m, fmt.n, fmt.ell)))
