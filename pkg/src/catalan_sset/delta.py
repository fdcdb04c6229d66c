"""Order-preserving maps between the finite ordinals [n] = {0, ..., n}.

Every such map factors as a run of collapsing surjections sigma_i (which
repeat the value i) followed by a run of injections delta_i (which skip the
value i); these generators induce all face and degeneracy actions used in
the rest of the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterator

from .errors import (
    DomainMismatchError,
    IndexOutOfRangeError,
    NonMonotoneError,
    OutOfRangeError,
)

__all__ = [
    "MonotoneMap",
    "identity",
    "face",
    "degeneracy",
    "compose",
    "all_maps",
    "epi_mono_indices",
    "epi_mono_factor",
    "recompose",
]


@dataclass(frozen=True, slots=True)
class MonotoneMap:
    """A weakly increasing function [domain_top] -> [codomain_top], stored pointwise."""

    domain_top: int
    codomain_top: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if self.domain_top < 0 or self.codomain_top < 0:
            raise OutOfRangeError("ordinal tops must be non-negative")
        if len(self.values) != self.domain_top + 1:
            raise OutOfRangeError(
                f"expected {self.domain_top + 1} values, got {len(self.values)}"
            )
        for p, (a, b) in enumerate(zip(self.values, self.values[1:])):
            if b < a:
                raise NonMonotoneError(f"values decrease at position {p}: {a} > {b}")
        for v in self.values:
            if not 0 <= v <= self.codomain_top:
                raise OutOfRangeError(f"value {v} outside [0, {self.codomain_top}]")

    def __call__(self, p: int) -> int:
        return self.values[p]

    @property
    def is_identity(self) -> bool:
        return self.domain_top == self.codomain_top and all(
            v == p for p, v in enumerate(self.values)
        )

    @property
    def is_surjective(self) -> bool:
        return len(set(self.values)) == self.codomain_top + 1

    def __str__(self) -> str:
        inside = ",".join(map(str, self.values))
        return f"[{self.domain_top}]->[{self.codomain_top}]:({inside})"


def identity(n: int) -> MonotoneMap:
    return MonotoneMap(n, n, tuple(range(n + 1)))


def face(i: int, n: int) -> MonotoneMap:
    """delta_i : [n-1] -> [n], the injection whose image omits i."""
    if n < 1 or not 0 <= i <= n:
        raise IndexOutOfRangeError(f"no face index {i} at level {n}")
    return MonotoneMap(n - 1, n, tuple(p if p < i else p + 1 for p in range(n)))


def degeneracy(i: int, n: int) -> MonotoneMap:
    """sigma_i : [n+1] -> [n], the surjection that hits i twice."""
    if n < 0 or not 0 <= i <= n:
        raise IndexOutOfRangeError(f"no degeneracy index {i} at level {n}")
    return MonotoneMap(n + 1, n, tuple(p if p <= i else p - 1 for p in range(n + 2)))


def compose(outer: MonotoneMap, inner: MonotoneMap) -> MonotoneMap:
    """The composite outer . inner (inner applied first)."""
    if inner.codomain_top != outer.domain_top:
        raise DomainMismatchError(f"cannot compose {outer} after {inner}")
    return MonotoneMap(
        inner.domain_top,
        outer.codomain_top,
        tuple(outer.values[v] for v in inner.values),
    )


def all_maps(m: int, n: int) -> Iterator[MonotoneMap]:
    """Every monotone map [m] -> [n], in lexicographic order of value tuples."""
    for values in combinations_with_replacement(range(n + 1), m + 1):
        yield MonotoneMap(m, n, values)


def epi_mono_indices(
    xi: MonotoneMap,
) -> tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]]:
    """Generator indices factoring xi, as (degeneracies, faces) in application order.

    Each entry is a pair (i, level) naming sigma_i : [level+1] -> [level] or
    delta_i : [level] -> [level+1].  Applying all degeneracies first and then
    all faces reproduces xi.
    """
    values = list(xi.values)
    level = xi.domain_top
    degs: list[tuple[int, int]] = []
    while True:
        dup = next(
            (p for p in range(len(values) - 1) if values[p] == values[p + 1]), None
        )
        if dup is None:
            break
        degs.append((dup, level - 1))
        del values[dup]
        level -= 1
    # values is now strictly increasing; insert the missing codomain values,
    # peeling from the largest gap so earlier indices stay stable
    faces_rev: list[tuple[int, int]] = []
    top = xi.codomain_top
    while len(values) - 1 < top:
        gap = max(v for v in range(top + 1) if v not in values)
        faces_rev.append((gap, top))
        values = [v if v < gap else v - 1 for v in values]
        top -= 1
    return tuple(degs), tuple(reversed(faces_rev))


def epi_mono_factor(xi: MonotoneMap) -> list[MonotoneMap]:
    """Factor xi into generator maps, listed in application order."""
    degs, faces = epi_mono_indices(xi)
    parts = [degeneracy(i, lvl) for i, lvl in degs]
    parts.extend(face(i, lvl) for i, lvl in faces)
    return parts


def recompose(parts: list[MonotoneMap], domain_top: int) -> MonotoneMap:
    """Compose generator maps given in application order."""
    acc = identity(domain_top)
    for g in parts:
        acc = compose(g, acc)
    return acc
