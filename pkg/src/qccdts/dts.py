"""Difference triangle set combinatorics.

A support set is a finite set of distinct non-negative delay exponents.
For a family of equal-size support sets the classification hierarchy is:

  WDTS         every set's positive pairwise differences are distinct
  DTS          WDTS, and the per-set difference sets are pairwise disjoint
  STRONG       DTS whose differences all fall in {1..M} for a budget M,
               so each admissible difference appears at most once
  FULL_STRONG  STRONG with exact coverage: every value 1..M appears once

The canonical internal convention is 0-based exponents (an element t is
the exponent of D^t). Table-style 1-based sets are converted at the I/O
boundary with :func:`from_one_based`.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .gf2poly import Gf2Poly


class DtsClass(enum.IntEnum):
    """Classification levels; each level implies all lower ones."""

    NOT_WDTS = 0
    WDTS = 1
    DTS = 2
    STRONG = 3
    FULL_STRONG = 4

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class SupportSet:
    """Sorted distinct non-negative delay exponents of one family member."""

    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.elements:
            raise ValueError("support set must be nonempty")
        prev = -1
        for e in self.elements:
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"element {e!r} must be a non-negative integer")
            if e <= prev:
                raise ValueError(f"elements {self.elements!r} must strictly increase")
            prev = e

    @classmethod
    def from_iterable(cls, elements: Iterable[int]) -> "SupportSet":
        elems = sorted(elements)
        if len(set(elems)) != len(elems):
            raise ValueError(f"duplicate elements in {elems!r}")
        return cls(tuple(elems))

    @property
    def weight(self) -> int:
        return len(self.elements)

    @property
    def scope(self) -> int:
        return self.elements[-1]

    def normalize(self) -> "SupportSet":
        """Shift so the minimum element is 0; differences are unchanged."""
        lo = self.elements[0]
        return SupportSet(tuple(e - lo for e in self.elements))

    def reflect(self, window: int) -> "SupportSet":
        """Map every element a to window - a and re-sort."""
        if self.scope > window:
            raise ValueError(
                f"element {self.scope} exceeds reflection window {window}"
            )
        return SupportSet(tuple(sorted(window - e for e in self.elements)))

    def to_poly(self) -> Gf2Poly:
        return Gf2Poly(self.elements)

    def __str__(self) -> str:
        return "{" + ", ".join(str(e) for e in self.elements) + "}"


SupportLike = SupportSet | Sequence[int]


def as_support(value: SupportLike) -> SupportSet:
    if isinstance(value, SupportSet):
        return value
    return SupportSet.from_iterable(value)


def positive_differences(t: SupportLike) -> tuple[int, ...]:
    """All C(w,2) pairwise positive differences, with multiplicity, sorted."""
    s = as_support(t)
    out = [
        b - a for a, b in itertools.combinations(s.elements, 2)
    ]
    return tuple(sorted(out))


def normalize(t: SupportLike) -> SupportSet:
    """Shift a set so its minimum element is 0."""
    return as_support(t).normalize()


def from_one_based(elements: Iterable[int]) -> SupportSet:
    """Convert a 1-based table set to 0-based exponents (subtract 1)."""
    elems = list(elements)
    if any(e == 0 for e in elems):
        raise ValueError("input is already 0-based or malformed")
    return SupportSet.from_iterable(e - 1 for e in elems)


@dataclass(frozen=True, slots=True)
class DtsFamily:
    """An ordered family of equal-weight support sets with its verdict.

    ``budget`` is the difference budget M, populated only for STRONG and
    FULL_STRONG verdicts (the tightest valid budget unless an explicit
    one was supplied to :func:`classify`).
    """

    sets: tuple[SupportSet, ...]
    classification: DtsClass
    budget: int | None

    @property
    def size(self) -> int:
        return len(self.sets)

    @property
    def weight(self) -> int:
        return self.sets[0].weight

    @property
    def scope(self) -> int:
        return max(s.scope for s in self.sets)

    def difference_spectrum(self) -> tuple[tuple[int, ...], ...]:
        """Per-set difference multisets, in family order."""
        return tuple(positive_differences(s) for s in self.sets)

    def to_json(self) -> dict:
        return {
            "one_based": False,
            "sets": [list(s.elements) for s in self.sets],
            "classification": str(self.classification),
            "scope": self.scope,
            "budget": self.budget,
        }

    def __str__(self) -> str:
        return "; ".join(str(s) for s in self.sets)


def classify(sets: Iterable[SupportLike], budget: int | None = None) -> DtsFamily:
    """Classify a family, recomputing the verdict from scratch.

    An explicit ``budget`` caps the admissible differences at {1..budget};
    by default the budget is the maximum difference observed. Weight-1
    sets have no differences and classify as WDTS vacuously.
    """
    members = tuple(as_support(s) for s in sets)
    if not members:
        raise ValueError("cannot classify an empty family")
    w = members[0].weight
    if any(s.weight != w for s in members):
        raise ValueError("all sets in a family must share one cardinality")

    per_set = [positive_differences(s) for s in members]
    is_wdts = all(len(set(d)) == len(d) for d in per_set)
    if not is_wdts:
        return DtsFamily(members, DtsClass.NOT_WDTS, None)
    if w == 1:
        return DtsFamily(members, DtsClass.WDTS, None)

    all_diffs = [d for ds in per_set for d in ds]
    if len(set(all_diffs)) != len(all_diffs):
        return DtsFamily(members, DtsClass.WDTS, None)

    observed = max(all_diffs)
    m = observed if budget is None else budget
    if m < observed:
        return DtsFamily(members, DtsClass.DTS, None)

    if sorted(all_diffs) == list(range(1, m + 1)):
        # Counting identity for exact coverage: r * C(w,2) == M.
        assert len(members) * (w * (w - 1) // 2) == m
        return DtsFamily(members, DtsClass.FULL_STRONG, m)
    return DtsFamily(members, DtsClass.STRONG, m)


def family_from_json(payload: dict) -> DtsFamily:
    """Load a family from its JSON form ({"one_based": bool, "sets": [...]})."""
    raw = payload["sets"]
    if payload.get("one_based", False):
        members = [from_one_based(s) for s in raw]
    else:
        members = [as_support(s) for s in raw]
    return classify(members)


def _wdts_candidates(w: int, max_scope: int) -> list[tuple[SupportSet, frozenset[int]]]:
    out = []
    for combo in itertools.combinations(range(1, max_scope + 1), w - 1):
        elems = (0,) + combo
        diffs = positive_differences(elems)
        if len(set(diffs)) == len(diffs):
            out.append((SupportSet(elems), frozenset(diffs)))
    return out


def search_strong_dts(r: int, w: int, max_scope: int) -> Iterator[DtsFamily]:
    """Enumerate every strong family of r normalized w-sets, scope <= max_scope.

    Families are canonical (member sets in lexicographic order, which also
    deduplicates permuted copies) and are yielded in lexicographic order of
    that canonical form. The stream is empty when no family exists.
    """
    if r < 1:
        raise ValueError("need at least one set")
    if w < 2:
        raise ValueError("search requires weight >= 2")
    if max_scope < w - 1:
        raise ValueError(f"scope {max_scope} cannot hold a {w}-set")

    candidates = _wdts_candidates(w, max_scope)

    def extend(
        start: int, chosen: list[SupportSet], used: frozenset[int]
    ) -> Iterator[DtsFamily]:
        if len(chosen) == r:
            yield classify(chosen)
            return
        for idx in range(start, len(candidates)):
            member, diffs = candidates[idx]
            if used & diffs:
                continue
            yield from extend(idx + 1, chosen + [member], used | diffs)

    yield from extend(0, [], frozenset())
