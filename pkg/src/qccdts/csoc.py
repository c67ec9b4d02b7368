"""Convolutional parity-check construction from DTS supports.

The systematic specialization is the workhorse: a family of n-1 support
sets becomes the single parity row X(D) = [x_1(D), ..., x_{n-1}(D), 1],
where x_i carries the i-th set as its exponent support and the constant
last entry is the systematic (identity) column. The general row/column
construction is also provided but is exercised only by the systematic
path; treat it as experimental.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .dts import DtsClass, DtsFamily, SupportLike, as_support, positive_differences
from .gf2poly import ONE, Gf2Poly, PolyMatrix, coefficient_matrix


class NonStrongFamilyWarning(UserWarning):
    """Construction from a family below STRONG: well-defined, no guarantees."""


@dataclass(frozen=True, slots=True)
class CodeParams:
    """Classical convolutional code parameters read off a parity check."""

    n: int
    parity_rows: int
    mu: int
    w: int | None
    nu: int


@dataclass(frozen=True, slots=True)
class DifferenceCollision:
    """A repeated positive difference, with the 1-based entries involved."""

    difference: int
    entries: tuple[int, ...]

    def __str__(self) -> str:
        where = ", ".join(f"entry {e}" for e in self.entries)
        return f"difference {self.difference} repeats ({where})"


@dataclass(frozen=True, slots=True)
class CsocReport:
    """Outcome of the self-orthogonality test on a systematic parity row."""

    ok: bool
    collisions: tuple[DifferenceCollision, ...]


def build_parity_check(
    row_sets: Sequence[SupportLike],
    col_sets: Sequence[SupportLike],
    n: int,
) -> PolyMatrix:
    """General construction: entry (i,j) has support {t-1 : t in T_i & S_j}.

    Row and column sets use the 1-based table convention, so delay t maps
    to exponent t-1. A row whose set misses every column set would be an
    all-zero parity equation and is rejected.
    """
    if len(col_sets) != n:
        raise ValueError(f"expected {n} column sets, got {len(col_sets)}")
    rows = [as_support(t) for t in row_sets]
    cols = [as_support(s) for s in col_sets]
    for s in rows + cols:
        if s.elements[0] < 1:
            raise ValueError("row/column sets are 1-based; element 0 is invalid")

    grid = []
    for i, t_row in enumerate(rows):
        entries = []
        for s_col in cols:
            common = sorted(set(t_row.elements) & set(s_col.elements))
            entries.append(Gf2Poly(tuple(t - 1 for t in common)))
        if all(p.is_zero() for p in entries):
            raise ValueError(f"vacuous parity row {i + 1}: no taps survive")
        grid.append(tuple(entries))
    return PolyMatrix(tuple(grid))


def build_systematic_x(family: DtsFamily) -> PolyMatrix:
    """Systematic 1 x n parity row [x_1, ..., x_{n-1}, 1] from a 0-based family.

    Equivalent to :func:`build_parity_check` with the full 1-based window as
    the row set, the family members as column sets and {1} as the identity
    column. Families below STRONG are allowed but warned about.
    """
    if family.classification < DtsClass.STRONG:
        warnings.warn(
            f"family classifies as {family.classification}, not STRONG; "
            "self-orthogonality and distance guarantees lapse",
            NonStrongFamilyWarning,
            stacklevel=2,
        )
    entries = tuple(s.to_poly() for s in family.sets) + (ONE,)
    return PolyMatrix.row(entries)


def is_systematic(x: PolyMatrix) -> bool:
    return x.nrows == 1 and x.ncols >= 2 and x.entry(0, x.ncols - 1) == ONE


def require_systematic(x: PolyMatrix) -> None:
    if not is_systematic(x):
        raise ValueError(
            "expected a systematic 1 x n row with constant 1 in the last entry"
        )


def parity_supports(x: PolyMatrix) -> tuple[tuple[int, ...], ...]:
    """Exponent supports of the n-1 parity entries of a systematic row."""
    require_systematic(x)
    return tuple(x.entry(0, j).support for j in range(x.ncols - 1))


def memory(h: PolyMatrix, n: int | None = None, k: int | None = None) -> int:
    """Encoder memory: ceil((max exponent + 1) / (n - k)) - 1.

    For the systematic single-parity-row case this is just the maximum
    exponent of the matrix.
    """
    if h.is_zero():
        raise ValueError("memory of the zero matrix is undefined")
    if n is None:
        n = h.ncols
    if k is None:
        k = n - h.nrows
    r = n - k
    if r < 1:
        raise ValueError(f"n - k must be positive, got {r}")
    one_based_scope = int(h.max_degree) + 1
    return math.ceil(one_based_scope / r) - 1


def constraint_length(h: PolyMatrix) -> int:
    """Sum over parity rows of the row's maximum entry degree."""
    if h.is_zero():
        raise ValueError("constraint length of the zero matrix is undefined")
    total = 0
    for row in h.entries:
        deg = max(p.degree for p in row)
        if deg == float("-inf"):
            raise ValueError("all-zero parity row has no degree")
        total += int(deg)
    return total


def is_csoc(x: PolyMatrix) -> CsocReport:
    """Self-orthogonality test on a systematic row.

    True iff every parity entry's positive-difference multiset is
    duplicate-free and the difference sets are pairwise disjoint across
    entries. The report lists every colliding difference value together
    with the entries it involves.
    """
    require_systematic(x)
    per_entry = [
        positive_differences(sup) if sup else ()
        for sup in parity_supports(x)
    ]

    collisions: list[DifferenceCollision] = []
    for i, diffs in enumerate(per_entry):
        seen = set()
        for d in diffs:
            if d in seen:
                collisions.append(DifferenceCollision(d, (i + 1,)))
            seen.add(d)
    for i in range(len(per_entry)):
        for j in range(i + 1, len(per_entry)):
            for d in sorted(set(per_entry[i]) & set(per_entry[j])):
                collisions.append(DifferenceCollision(d, (i + 1, j + 1)))
    return CsocReport(ok=not collisions, collisions=tuple(collisions))


def block_toeplitz(h: PolyMatrix, j: int) -> np.ndarray:
    """Truncated lower-banded block parity-check matrix on window [0..j].

    Block (t, u) equals the coefficient matrix H_{t-u} when 0 <= t-u <= mu
    and is zero otherwise; shape is ((j+1) r, (j+1) n).
    """
    if j < 0:
        raise ValueError("window length must be non-negative")
    r, n = h.nrows, h.ncols
    out = np.zeros(((j + 1) * r, (j + 1) * n), dtype=np.uint8)
    if h.is_zero():
        return out
    mu = int(h.max_degree)
    blocks = {ell: coefficient_matrix(h, ell) for ell in range(mu + 1)}
    for t in range(j + 1):
        for ell in range(min(mu, t) + 1):
            u = t - ell
            out[t * r : (t + 1) * r, u * n : (u + 1) * n] = blocks[ell]
    return out


def code_params(x: PolyMatrix) -> CodeParams:
    """Read n, parity rows, memory, entry weight and constraint length."""
    weights = {len(sup) for sup in parity_supports(x)}
    return CodeParams(
        n=x.ncols,
        parity_rows=x.nrows,
        mu=memory(x),
        w=weights.pop() if len(weights) == 1 else None,
        nu=constraint_length(x),
    )
