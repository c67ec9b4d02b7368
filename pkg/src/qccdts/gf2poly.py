"""Binary Laurent polynomials in the delay operator D, and matrices of them.

A polynomial is stored sparsely as its exponent support: a strictly
increasing tuple of integers, each carrying coefficient 1 over GF(2).
Negative exponents are allowed (Laurent terms); the zero polynomial has
empty support. All values are immutable and all operations are pure, so
they are safe to share across threads.

The textual form used everywhere (CLI output, golden files) is
``1+D+D^3``: terms ascend, exponent 0 prints as ``1``, exponent 1 as
``D``, and every other exponent as ``D^k``. Rendering is byte-stable.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

#: Degree of the zero polynomial. A distinguished sentinel, never -1.
NEG_INF = float("-inf")


@dataclass(frozen=True, slots=True)
class Gf2Poly:
    """A binary Laurent polynomial, represented by its exponent support."""

    support: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        prev = None
        for e in self.support:
            if not isinstance(e, int):
                raise ValueError(f"exponent {e!r} is not an integer")
            if prev is not None and e <= prev:
                raise ValueError(
                    f"support {self.support!r} must be strictly increasing"
                )
            prev = e

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "Gf2Poly":
        """Build a polynomial from exponents, folding duplicates mod 2."""
        counts = Counter(exponents)
        return cls(tuple(sorted(e for e, c in counts.items() if c % 2)))

    @property
    def degree(self) -> int | float:
        """Largest exponent, or NEG_INF for the zero polynomial."""
        return self.support[-1] if self.support else NEG_INF

    @property
    def min_exponent(self) -> int | float:
        return self.support[0] if self.support else NEG_INF

    @property
    def weight(self) -> int:
        """Number of nonzero coefficients."""
        return len(self.support)

    def is_zero(self) -> bool:
        return not self.support

    def __bool__(self) -> bool:
        return bool(self.support)

    def __add__(self, other: "Gf2Poly") -> "Gf2Poly":
        # Characteristic 2: addition is the symmetric difference of supports.
        return Gf2Poly(tuple(sorted(set(self.support) ^ set(other.support))))

    def __mul__(self, other: "Gf2Poly") -> "Gf2Poly":
        counts: Counter[int] = Counter()
        for a in self.support:
            for b in other.support:
                counts[a + b] += 1
        return Gf2Poly(tuple(sorted(e for e, c in counts.items() if c % 2)))

    def coeff(self, s: int) -> int:
        """Coefficient of D^s (0 or 1)."""
        return 1 if s in self.support else 0

    def shift(self, k: int) -> "Gf2Poly":
        """Multiply by D^k."""
        return Gf2Poly(tuple(e + k for e in self.support))

    def reverse(self, window: int) -> "Gf2Poly":
        """Reverse within the degree window [0, window]: a -> window - a.

        Applying twice with the same window is the identity. Exponents
        outside the window are rejected rather than wrapped or clipped.
        """
        for e in self.support:
            if e < 0 or e > window:
                raise ValueError(
                    f"reversal window violated: exponent {e} outside [0, {window}]"
                )
        return Gf2Poly(tuple(sorted(window - e for e in self.support)))

    def subst_inverse(self) -> "Gf2Poly":
        """Substitute D -> D^-1, negating every exponent."""
        return Gf2Poly(tuple(sorted(-e for e in self.support)))

    def __str__(self) -> str:
        if not self.support:
            return "0"
        return "+".join(_term(e) for e in self.support)

    def __repr__(self) -> str:
        return f"Gf2Poly({str(self)!r})"


def _term(e: int) -> str:
    if e == 0:
        return "1"
    if e == 1:
        return "D"
    return f"D^{e}"


ZERO = Gf2Poly()
ONE = Gf2Poly((0,))
D = Gf2Poly((1,))


def poly_add(p: Gf2Poly, q: Gf2Poly) -> Gf2Poly:
    return p + q


def poly_mul(p: Gf2Poly, q: Gf2Poly) -> Gf2Poly:
    return p * q


def poly_reverse(p: Gf2Poly, window: int) -> Gf2Poly:
    return p.reverse(window)


def substitute_inverse(p: Gf2Poly) -> Gf2Poly:
    return p.subst_inverse()


def parse_poly(text: str) -> Gf2Poly:
    """Parse the ``1+D+D^3`` textual form (inverse of ``str``)."""
    body = text.strip()
    if body == "0":
        return ZERO
    exponents = []
    for term in body.split("+"):
        term = term.strip()
        if term == "1":
            exponents.append(0)
        elif term == "D":
            exponents.append(1)
        elif term.startswith("D^"):
            try:
                exponents.append(int(term[2:]))
            except ValueError:
                raise ValueError(f"malformed term {term!r} in {text!r}") from None
        else:
            raise ValueError(f"malformed term {term!r} in {text!r}")
    if len(set(exponents)) != len(exponents):
        raise ValueError(f"repeated exponent in {text!r}")
    return Gf2Poly(tuple(sorted(exponents)))


def parse_poly_row(text: str) -> tuple[Gf2Poly, ...]:
    """Parse a rendered row ``(1+D, 1+D^2, 1)`` back into polynomials."""
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"expected parenthesized row, got {text!r}")
    return tuple(parse_poly(part) for part in body[1:-1].split(","))


@dataclass(frozen=True, slots=True)
class PolyMatrix:
    """An r x n grid of Gf2Poly values (rows of stabilizer generators)."""

    entries: tuple[tuple[Gf2Poly, ...], ...]

    def __post_init__(self) -> None:
        if not self.entries or not self.entries[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(self.entries[0])
        for row in self.entries:
            if len(row) != width:
                raise ValueError("ragged rows in matrix")
            for p in row:
                if not isinstance(p, Gf2Poly):
                    raise ValueError(f"entry {p!r} is not a Gf2Poly")

    @classmethod
    def row(cls, polys: Iterable[Gf2Poly]) -> "PolyMatrix":
        return cls((tuple(polys),))

    @classmethod
    def from_supports(cls, grid: Iterable[Iterable[Iterable[int]]]) -> "PolyMatrix":
        return cls(
            tuple(
                tuple(Gf2Poly.from_exponents(cell) for cell in row) for row in grid
            )
        )

    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.entries[0])

    def entry(self, i: int, j: int) -> Gf2Poly:
        return self.entries[i][j]

    def __iter__(self) -> Iterator[tuple[Gf2Poly, ...]]:
        return iter(self.entries)

    @property
    def max_degree(self) -> int | float:
        return max(p.degree for row in self.entries for p in row)

    @property
    def min_exponent(self) -> int | float:
        live = [p.min_exponent for row in self.entries for p in row if p]
        return min(live) if live else NEG_INF

    def is_zero(self) -> bool:
        return all(p.is_zero() for row in self.entries for p in row)

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError(
                f"shape mismatch: {self.nrows}x{self.ncols} vs "
                f"{other.nrows}x{other.ncols}"
            )
        return PolyMatrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self.entries, other.entries)
            )
        )

    def __str__(self) -> str:
        rows = ["(" + ", ".join(str(p) for p in row) + ")" for row in self.entries]
        if len(rows) == 1:
            return rows[0]
        return "[" + "; ".join(rows) + "]"


def mat_mul_transpose(a: PolyMatrix, b: PolyMatrix, invert_b: bool) -> PolyMatrix:
    """Compute A(D) * B'(D)^T where B' is B with D -> D^-1 when flagged.

    This is the building block of the symplectic product: both matrices
    must have the same column count; the result is r_A x r_B.
    """
    if a.ncols != b.ncols:
        raise ValueError(f"column counts differ: {a.ncols} vs {b.ncols}")
    out = []
    for i in range(a.nrows):
        row = []
        for j in range(b.nrows):
            acc = ZERO
            for k in range(a.ncols):
                rhs = b.entry(j, k).subst_inverse() if invert_b else b.entry(j, k)
                acc = acc + a.entry(i, k) * rhs
            row.append(acc)
        out.append(tuple(row))
    return PolyMatrix(tuple(out))


def coefficient_matrix(a: PolyMatrix, s: int) -> np.ndarray:
    """The binary matrix of D^s coefficients of every entry."""
    out = np.zeros((a.nrows, a.ncols), dtype=np.uint8)
    for i in range(a.nrows):
        for j in range(a.ncols):
            out[i, j] = a.entry(i, j).coeff(s)
    return out
