"""Column distances, free-distance search and the CSOC distance certificate.

Everything here works on the systematic single-parity-row form: the n-1
information streams are free and the parity stream is their tap-filtered
sum, so codewords are enumerated by information frames alone. The exact
free-distance search is a bounded-weight depth-first search over frames
(never a full state-space sweep): with budget b and memory mu, any
codeword of weight <= b closes within b * (mu + 1) frames, because each
nonzero input adds weight and gaps longer than mu flush the encoder.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .csoc import is_csoc, memory, parity_supports, require_systematic
from .gf2poly import PolyMatrix

MAX_EXACT_BUDGET = 6
MAX_EXACT_MEMORY = 12
MAX_WINDOW_BITS = 45

Frame = tuple[int, ...]
Witness = tuple[tuple[int, Frame], ...]


class Method(enum.Enum):
    EXACT_SEARCH = "exact_search"
    CSOC_CERTIFICATE = "csoc_certificate"
    UPPER_BOUND = "upper_bound"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, slots=True)
class DistanceCertificate:
    """A free-distance claim plus the codeword witnessing the upper bound.

    The witness is a list of (time, frame) pairs covering the nonzero
    frames of a codeword of weight d_free whose first nonzero block sits
    at time 0. ``search_budget`` records the weight bound exhaustively
    refuted by search, when a search ran.
    """

    d_free: int
    method: Method
    witness: Witness
    search_budget: int | None = None


def _delay_masks(x: PolyMatrix) -> tuple[list[int], int, int]:
    """Per-delay stream masks: bit i of masks[l] set iff l taps stream i+1."""
    supports = parity_supports(x)
    streams = len(supports)
    mu = max((max(s) for s in supports if s), default=0)
    masks = [0] * (mu + 1)
    for i, sup in enumerate(supports):
        for ell in sup:
            masks[ell] |= 1 << i
    return masks, streams, mu


def _parity_bit(masks: list[int], history: tuple[int, ...], u: int) -> int:
    """Parity output at the step consuming u with the given input history."""
    acc = (masks[0] & u).bit_count()
    for ell in range(1, len(masks)):
        past = history[ell - 1] if ell - 1 < len(history) else 0
        acc += (masks[ell] & past).bit_count()
    return acc & 1


def column_distance(h: PolyMatrix, j: int) -> int:
    """Minimum weight over window-[0..j] codewords with a nonzero first block.

    Exact: a depth-first search over information windows with running
    branch-and-bound pruning visits every window that could beat the
    incumbent. Window size is capped to keep the search desk-scale.
    """
    require_systematic(h)
    if j < 0:
        raise ValueError("window index must be non-negative")
    streams = h.ncols - 1
    if (j + 1) * streams > MAX_WINDOW_BITS:
        raise ValueError(
            f"window too large for exact oracle: {(j + 1) * streams} information "
            f"bits exceeds {MAX_WINDOW_BITS}"
        )
    masks, streams, mu = _delay_masks(h)
    best = (j + 2) * h.ncols  # above any achievable window weight

    def descend(t: int, history: tuple[int, ...], weight: int) -> None:
        nonlocal best
        if t > j:
            best = min(best, weight)
            return
        first = range(1, 1 << streams) if t == 0 else range(0, 1 << streams)
        for u in first:
            w2 = weight + u.bit_count() + _parity_bit(masks, history, u)
            if w2 >= best:
                continue
            descend(t + 1, (u,) + history[: mu - 1] if mu else (), w2)

    descend(0, (0,) * mu, 0)
    return best


def dfree_upper(x: PolyMatrix) -> DistanceCertificate:
    """Upper bound by a single information impulse on the lightest stream.

    The impulse on stream i produces information weight 1 and parity
    weight equal to the tap count of x_i, so total weight w_i + 1. Ties
    are broken toward the smallest stream index.
    """
    require_systematic(x)
    supports = parity_supports(x)
    weights = [len(s) for s in supports]
    stream = min(range(len(weights)), key=lambda i: (weights[i], i))
    sup = supports[stream]
    streams = len(supports)

    frames: dict[int, list[int]] = {}
    impulse = [0] * (streams + 1)
    impulse[stream] = 1
    frames[0] = impulse
    for t in sup:
        frames.setdefault(t, [0] * (streams + 1))[streams] ^= 1
    witness = tuple(
        (t, tuple(bits)) for t, bits in sorted(frames.items()) if any(bits)
    )
    return DistanceCertificate(
        d_free=weights[stream] + 1,
        method=Method.UPPER_BOUND,
        witness=witness,
    )


def dfree_exact(
    x: PolyMatrix, budget: int, horizon: int | None = None
) -> int | None:
    """True free distance when it is <= budget, else None.

    Bounded-weight DFS over information frames; the state is the last mu
    frames and a path closes (yields a codeword) when the state flushes
    to all zero. The default horizon budget * (mu + 1) frames is enough
    for any codeword within budget; raise it only for diagnostics.
    """
    require_systematic(x)
    if budget < 1:
        raise ValueError("budget must be positive")
    if budget > MAX_EXACT_BUDGET:
        raise ValueError(
            f"budget {budget} exceeds exact-search guard {MAX_EXACT_BUDGET}"
        )
    masks, streams, mu = _delay_masks(x)
    if mu > MAX_EXACT_MEMORY:
        raise ValueError(
            f"memory {mu} exceeds exact-search guard {MAX_EXACT_MEMORY}"
        )
    max_depth = horizon if horizon is not None else budget * (mu + 1)
    best = budget + 1

    def descend(depth: int, history: tuple[int, ...], weight: int) -> None:
        nonlocal best
        choices = range(1, 1 << streams) if depth == 0 else range(0, 1 << streams)
        for u in choices:
            w2 = weight + u.bit_count() + _parity_bit(masks, history, u)
            if w2 >= best:
                continue
            nxt = (u,) + history[: mu - 1] if mu else ()
            if not any(nxt):
                best = w2  # encoder flushed: a complete codeword
            elif depth + 1 < max_depth:
                descend(depth + 1, nxt, w2)

    descend(0, (0,) * mu, 0)
    return best if best <= budget else None


def certify_dfree(x: PolyMatrix) -> DistanceCertificate:
    """Distance certificate d_free = w + 1 for a self-orthogonal row.

    The impulse witness proves the upper bound; when the desk-scale
    guards allow it, the exact search is also run and must agree, in
    which case the exhausted budget is recorded on the certificate.
    """
    report = is_csoc(x)
    if not report.ok:
        raise ValueError("certificate requires CSOC; input row is not")
    upper = dfree_upper(x)
    target = upper.d_free

    search_budget = None
    if target <= MAX_EXACT_BUDGET and memory(x) <= MAX_EXACT_MEMORY:
        found = dfree_exact(x, budget=target)
        if found != target:
            raise RuntimeError(
                f"distance certificate contradicted: exact search returned "
                f"{found!r}, certificate says {target}"
            )
        search_budget = target
    return DistanceCertificate(
        d_free=target,
        method=Method.CSOC_CERTIFICATE,
        witness=upper.witness,
        search_budget=search_budget,
    )
