"""The Catalan simplicial set as boolean interval tables.

An n-simplex stores one bit per interval 0 <= i < j <= n, subject to an
outward closure law: a 1 on any interval forces a 1 on every enclosing
interval, equivalently x(i, k) = 0 forces x(i, j) = x(j, k) = 0 for
i <= j <= k.  Levels count 1, 2, 5, 14, 42, ...; the simplices that fail
the degeneracy test are counted by 1, 1, 2, 4, 9, 21, ...

Intervals are ordered canonically by (length, left endpoint) and a simplex
is packed into an integer whose highest bit carries the first interval in
that order, so integer order equals lexicographic order on bit tuples and
enumeration output comes out sorted.  Pulling back along a monotone map
reads x'(p, q) = x(xi(p), xi(q)) when xi(p) < xi(q) and inserts 0 when the
endpoints collapse.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from . import delta, sset
from .delta import MonotoneMap
from .errors import (
    DomainMismatchError,
    InvalidInputError,
    LevelTooLargeError,
)

__all__ = [
    "HARD_LEVEL_BOUND",
    "DEFAULT_COUNT_BOUND",
    "DEFAULT_CHECK_BOUND",
    "MOTZKIN",
    "LaxMatrix",
    "intervals",
    "interval_index",
    "lax_from_bits",
    "enumerate_level",
    "level_count",
    "act",
    "catalan_number",
    "reference_counts",
    "matrix_is_degenerate",
    "nondegenerate_level",
    "nondegenerate_count",
    "level_export",
    "CatalanSet",
]

HARD_LEVEL_BOUND = 14     # enumeration ceiling; growth is roughly 4x per level
DEFAULT_COUNT_BOUND = 10  # counting stops here unless overridden
DEFAULT_CHECK_BOUND = 6   # exhaustive structural checks stop here

#: reference counts of non-degenerate simplices per level, 0..14
MOTZKIN = (1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511, 41835, 113634)


@lru_cache(maxsize=None)
def intervals(n: int) -> tuple[tuple[int, int], ...]:
    """Intervals of [n] in canonical order: by length, then left endpoint."""
    return tuple(
        (i, i + d) for d in range(1, n + 1) for i in range(0, n - d + 1)
    )


@lru_cache(maxsize=None)
def interval_index(n: int) -> dict[tuple[int, int], int]:
    return {pair: k for k, pair in enumerate(intervals(n))}


@dataclass(frozen=True, slots=True)
class LaxMatrix:
    """One simplex: its level ``n`` and the packed interval bits."""

    n: int
    bits: int

    def entry(self, i: int, j: int) -> int:
        count = self.n * (self.n + 1) // 2
        pos = interval_index(self.n)[(i, j)]
        return (self.bits >> (count - 1 - pos)) & 1

    def bit_tuple(self) -> tuple[int, ...]:
        count = self.n * (self.n + 1) // 2
        return tuple((self.bits >> (count - 1 - k)) & 1 for k in range(count))

    def __repr__(self) -> str:
        word = "".join(map(str, self.bit_tuple()))
        return f"Lax({self.n}:{word})" if word else f"Lax({self.n}:)"


def lax_from_bits(n: int, bits: Iterable[int]) -> LaxMatrix:
    """Build a simplex from bits in canonical interval order, checking closure."""
    seq = tuple(int(b) for b in bits)
    count = n * (n + 1) // 2
    if n < 0 or len(seq) != count:
        raise InvalidInputError(f"level {n} needs {count} bits, got {len(seq)}")
    if any(b not in (0, 1) for b in seq):
        raise InvalidInputError("entries must be 0 or 1")
    idx = interval_index(n)
    for (i, j), k in idx.items():
        if j - i >= 2 and seq[k] < max(seq[idx[(i, j - 1)]], seq[idx[(i + 1, j)]]):
            raise InvalidInputError(
                f"closure fails at interval ({i}, {j}): inner 1 under outer 0"
            )
    packed = 0
    for b in seq:
        packed = (packed << 1) | b
    return LaxMatrix(n, packed)


@lru_cache(maxsize=None)
def enumerate_level(n: int) -> tuple[LaxMatrix, ...]:
    """All simplices at a level, in lexicographic (canonical) order."""
    if n < 0:
        raise LevelTooLargeError("level must be >= 0")
    if n > HARD_LEVEL_BOUND:
        raise LevelTooLargeError(
            f"level {n} above the enumeration ceiling {HARD_LEVEL_BOUND}"
        )
    pos = intervals(n)
    idx = interval_index(n)
    count = len(pos)
    # positions of the two maximal sub-intervals, or None for unit length
    inner = [
        None if j - i == 1 else (idx[(i, j - 1)], idx[(i + 1, j)]) for (i, j) in pos
    ]
    out: list[LaxMatrix] = []
    vals = [0] * count

    def rec(k: int, acc: int) -> None:
        if k == count:
            out.append(LaxMatrix(n, acc))
            return
        low = 0
        if inner[k] is not None:
            a, b = inner[k]
            low = vals[a] if vals[a] >= vals[b] else vals[b]
        if low == 0:
            vals[k] = 0
            rec(k + 1, acc << 1)
        vals[k] = 1
        rec(k + 1, (acc << 1) | 1)

    rec(0, 0)
    return tuple(out)


def level_count(n: int) -> int:
    return len(enumerate_level(n))


@lru_cache(maxsize=None)
def _act_table(xi: MonotoneMap) -> tuple[tuple[int, ...], int, int]:
    m, n = xi.domain_top, xi.codomain_top
    idx_n = interval_index(n)
    table = tuple(
        idx_n[(xi.values[p], xi.values[q])] if xi.values[p] < xi.values[q] else -1
        for (p, q) in intervals(m)
    )
    return table, m * (m + 1) // 2, n * (n + 1) // 2


def act(xi: MonotoneMap, x: LaxMatrix) -> LaxMatrix:
    """Pull back a simplex along a monotone map (contravariant action)."""
    if xi.codomain_top != x.n:
        raise DomainMismatchError(
            f"map into [{xi.codomain_top}] cannot act on a level-{x.n} simplex"
        )
    table, count_m, count_n = _act_table(xi)
    bits = 0
    src = x.bits
    for k, s in enumerate(table):
        if s >= 0 and (src >> (count_n - 1 - s)) & 1:
            bits |= 1 << (count_m - 1 - k)
    return LaxMatrix(xi.domain_top, bits)


def catalan_number(m: int) -> int:
    return math.comb(2 * m, m) // (m + 1)


def reference_counts(n_max: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Closed-form level counts and the fixed non-degenerate reference, 0..n_max."""
    if n_max < 0 or n_max >= len(MOTZKIN):
        raise LevelTooLargeError(
            f"reference values available for 0..{len(MOTZKIN) - 1}"
        )
    return (
        tuple(catalan_number(n + 1) for n in range(n_max + 1)),
        MOTZKIN[: n_max + 1],
    )


def matrix_is_degenerate(x: LaxMatrix) -> bool:
    if x.n == 0:
        return False
    return any(
        act(delta.degeneracy(i, x.n - 1), act(delta.face(i, x.n), x)) == x
        for i in range(x.n)
    )


@lru_cache(maxsize=None)
def nondegenerate_level(n: int) -> tuple[LaxMatrix, ...]:
    return tuple(x for x in enumerate_level(n) if not matrix_is_degenerate(x))


def nondegenerate_count(n: int) -> int:
    return len(nondegenerate_level(n))


def level_export(n: int) -> dict:
    """JSON-ready view of a level; bit order is the canonical interval order."""
    sims = enumerate_level(n)
    return {
        "n": n,
        "count": len(sims),
        "simplices": [list(x.bit_tuple()) for x in sims],
        "nondegenerate": [not matrix_is_degenerate(x) for x in sims],
    }


class CatalanSet(sset.TruncatedSimplicialSet):
    """The simplicial-set interface over the interval-table model."""

    def __init__(self, top_level: int = DEFAULT_CHECK_BOUND):
        if top_level > HARD_LEVEL_BOUND:
            raise LevelTooLargeError(
                f"top level {top_level} above the ceiling {HARD_LEVEL_BOUND}"
            )
        super().__init__(top_level)

    def level(self, n: int) -> Sequence[LaxMatrix]:
        self._check_level(n)
        return enumerate_level(n)

    def act(self, xi: MonotoneMap, x: LaxMatrix) -> LaxMatrix:
        self._check_level(xi.codomain_top)
        self._check_level(xi.domain_top)
        return act(xi, x)
