"""The reflection-permutation map from X-supports to Z-supports.

Reflecting every exponent a to M - a (M the family scope) preserves all
pairwise differences, so a strong family stays strong, scope and entry
weights are unchanged, and the reflected polynomials are the window
reversals D^M x(D^-1) of the originals.

Whether the resulting pair (X, Z) commutes symplectically depends on the
entry permutation pi: the pair commutes exactly when the mod-2 product
sum Q(D) = sum_k x_k(D) x_{pi(k)}(D) is palindromic on [0, 2M]. Any
involution whose fixed entries are themselves palindromic (reflection-
invariant) satisfies this; an arbitrary pi does not. ``build_z`` accepts
any permutation and leaves the judgement to the commutation check.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Sequence

from . import distance as distance_mod
from . import symplectic as symplectic_mod
from .csoc import build_systematic_x, is_csoc, memory, parity_supports, require_systematic
from .dts import DtsClass, DtsFamily, classify, positive_differences
from .gf2poly import ONE, PolyMatrix


def reflect_family(family: DtsFamily, window: int | None = None) -> DtsFamily:
    """Reflect every member set about the family scope.

    The reflection window must equal the scope: a smaller window cannot
    hold the sets and a larger one would silently pad the code memory,
    so both are rejected. The result is re-classified from scratch and
    keeps the original difference spectrum, scope and classification.
    """
    scope = family.scope
    if window is None:
        window = scope
    elif window < scope:
        raise ValueError(f"exponent {scope} exceeds reflection window {window}")
    elif window > scope:
        raise ValueError(
            f"window {window} exceeds family scope {scope}; "
            "reflection about a padded window is not supported"
        )
    # carry any explicit budget through so the classification is preserved
    return classify([s.reflect(window) for s in family.sets], budget=family.budget)


def identity_permutation(streams: int) -> tuple[int, ...]:
    return tuple(range(1, streams + 1))


def _check_permutation(pi: Sequence[int], streams: int) -> tuple[int, ...]:
    pi = tuple(pi)
    if sorted(pi) != list(range(1, streams + 1)):
        raise ValueError(
            f"pi {pi!r} is not a permutation of streams 1..{streams}"
        )
    return pi


def build_z(x: PolyMatrix, pi: Sequence[int] | None = None) -> PolyMatrix:
    """Companion row: parity entry j of Z is the reversal of x_{pi(j)}.

    ``pi`` permutes the 1-based parity streams and defaults to the
    identity. The reversal window is the memory of X; the systematic
    last entry stays the constant 1, untouched by the reversal.
    """
    require_systematic(x)
    streams = x.ncols - 1
    pi = identity_permutation(streams) if pi is None else _check_permutation(pi, streams)
    window = memory(x)
    entries = tuple(
        x.entry(0, pi[j] - 1).reverse(window) for j in range(streams)
    ) + (ONE,)
    return PolyMatrix.row(entries)


@dataclass(frozen=True, slots=True)
class PreservationReport:
    """Which of the reflection-preservation claims hold for a pair."""

    spectrum_match: bool
    memory_match: bool
    weight_match: bool
    memory_x: int
    memory_z: int
    common_weight: int | None

    @property
    def ok(self) -> bool:
        return self.spectrum_match and self.memory_match and self.weight_match


def check_preservation(x: PolyMatrix, z: PolyMatrix) -> PreservationReport:
    """Compare difference spectra, memory and entry weights of X and Z.

    The spectrum comparison is as a multiset of per-entry difference
    multisets, so any entry permutation is tolerated. Equal weights mean
    both sides carry the same dual-distance certificate w + 1.
    """
    sup_x = parity_supports(x)
    sup_z = parity_supports(z)
    spec_x = sorted(positive_differences(s) if s else () for s in sup_x)
    spec_z = sorted(positive_differences(s) if s else () for s in sup_z)
    mu_x, mu_z = memory(x), memory(z)
    weights_x = sorted(len(s) for s in sup_x)
    weights_z = sorted(len(s) for s in sup_z)
    uniform = set(weights_x) | set(weights_z)
    return PreservationReport(
        spectrum_match=spec_x == spec_z,
        memory_match=mu_x == mu_z,
        weight_match=weights_x == weights_z,
        memory_x=mu_x,
        memory_z=mu_z,
        common_weight=uniform.pop() if len(uniform) == 1 else None,
    )


@dataclass(frozen=True, slots=True)
class CertificationFlags:
    """Cached certification results; None means not yet checked."""

    strong_dts: bool | None = None
    csoc_x: bool | None = None
    csoc_z: bool | None = None
    commuting: bool | None = None
    dfree: bool | None = None


@dataclass(frozen=True, slots=True)
class StabilizerPair:
    """A stabilizer pair (X(D), Z(D)) plus construction metadata."""

    n: int
    x: PolyMatrix
    z: PolyMatrix
    degree_bound: int
    w: int | None
    pi: tuple[int, ...]
    certified: CertificationFlags = CertificationFlags()


def pair_from_family(
    family: DtsFamily, pi: Sequence[int] | None = None
) -> StabilizerPair:
    """Build the (X, Z) pair for a family; certification flags start empty."""
    x = build_systematic_x(family)
    z = build_z(x, pi)
    streams = x.ncols - 1
    return StabilizerPair(
        n=x.ncols,
        x=x,
        z=z,
        degree_bound=memory(x),
        w=family.weight,
        pi=identity_permutation(streams) if pi is None else tuple(pi),
    )


def certify(pair: StabilizerPair) -> StabilizerPair:
    """Run every certification check and cache the outcomes on the pair."""
    fam_x = classify(list(parity_supports(pair.x)))
    csoc_x = is_csoc(pair.x).ok
    csoc_z = is_csoc(pair.z).ok
    commuting = symplectic_mod.is_commuting(pair.x, pair.z).commuting

    dfree_ok: bool | None = None
    if csoc_x and csoc_z:
        cert_x = distance_mod.certify_dfree(pair.x)
        cert_z = distance_mod.certify_dfree(pair.z)
        dfree_ok = cert_x.d_free == cert_z.d_free

    return dataclasses.replace(
        pair,
        certified=CertificationFlags(
            strong_dts=fam_x.classification >= DtsClass.STRONG,
            csoc_x=csoc_x,
            csoc_z=csoc_z,
            commuting=commuting,
            dfree=dfree_ok,
        ),
    )


@dataclass(frozen=True, slots=True)
class QccParams:
    """Quantum code parameters; the rate is kept unreduced (e.g. 2/4)."""

    n: int
    r_x: int
    r_z: int
    rate_numerator: int
    rate_denominator: int

    @property
    def rate_label(self) -> str:
        return f"{self.rate_numerator}/{self.rate_denominator}"


def qcc_params(pair: StabilizerPair) -> QccParams:
    """Report parameters of a certified pair; refuses non-commuting pairs."""
    if pair.certified.commuting is not True:
        raise ValueError("cannot report parameters for non-commuting pair")
    r_x, r_z = pair.x.nrows, pair.z.nrows
    num = pair.n - r_x - r_z
    if num < 0:
        raise ValueError("more stabilizer rows than qubits per frame")
    return QccParams(
        n=pair.n, r_x=r_x, r_z=r_z, rate_numerator=num, rate_denominator=pair.n
    )
