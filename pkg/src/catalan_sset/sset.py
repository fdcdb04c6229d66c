"""Truncated simplicial sets and the generic machinery over them.

A concrete simplicial set implements ``level`` and ``act``; faces,
degeneracies, the degeneracy test, the surjection/non-degenerate
decomposition, boundary and filler search, the simplicial-identity
harness and the enumeration of truncated simplicial maps are all derived
here and work against any implementation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterator, Sequence

from . import delta
from .delta import MonotoneMap
from .errors import LevelOutOfRangeError, NotCoskeletalError

Code = Any

__all__ = [
    "TruncatedSimplicialSet",
    "PointSimplicialSet",
    "TableSimplicialSet",
    "Boundary",
    "IdentityReport",
    "IdentityViolation",
    "FillerReport",
    "TruncatedMap",
    "MapEnumeration",
    "RejectionWitness",
    "boundary_of",
    "is_compatible_boundary",
    "compatible_boundaries",
    "fillers",
    "coskeletal_filler_report",
    "enumerate_truncated_maps",
]


class TruncatedSimplicialSet:
    """Base class: finitely many simplices per level, defined up to ``top_level``."""

    def __init__(self, top_level: int):
        if top_level < 0:
            raise LevelOutOfRangeError("top_level must be >= 0")
        self.top_level = top_level

    # -- interface -----------------------------------------------------

    def level(self, n: int) -> Sequence[Code]:
        raise NotImplementedError

    def act(self, xi: MonotoneMap, x: Code) -> Code:
        raise NotImplementedError

    # -- derived operations ---------------------------------------------

    def _check_level(self, n: int, low: int = 0) -> None:
        if not low <= n <= self.top_level:
            raise LevelOutOfRangeError(
                f"level {n} outside [{low}, {self.top_level}]"
            )

    def face(self, i: int, n: int, x: Code) -> Code:
        return self.act(delta.face(i, n), x)

    def degeneracy(self, i: int, n: int, x: Code) -> Code:
        return self.act(delta.degeneracy(i, n), x)

    def is_degenerate(self, x: Code, n: int) -> bool:
        """Whether x == s_i(d_i(x)) for some i; level 0 is rejected."""
        self._check_level(n, low=1)
        return any(
            self.degeneracy(i, n - 1, self.face(i, n, x)) == x for i in range(n)
        )

    def nondegenerate(self, n: int) -> tuple[Code, ...]:
        self._check_level(n)
        if n == 0:
            return tuple(self.level(0))
        return tuple(x for x in self.level(n) if not self.is_degenerate(x, n))

    def ez_decompose(self, x: Code, n: int) -> tuple[MonotoneMap, Code, int]:
        """Return (eta, y, m) with x = act(eta, y), eta surjective, y non-degenerate."""
        self._check_level(n)
        if n == 0:
            return delta.identity(0), x, 0
        for i in range(n):
            y1 = self.face(i, n, x)
            if self.degeneracy(i, n - 1, y1) == x:
                eta, y, m = self.ez_decompose(y1, n - 1)
                return delta.compose(eta, delta.degeneracy(i, n - 1)), y, m
        return delta.identity(n), x, n

    def verify_simplicial_identities(self, n_max: int) -> "IdentityReport":
        """Exhaustively check the face/degeneracy relations on levels <= n_max.

        An identity is checked whenever every level it touches stays inside
        [0, n_max].
        """
        self._check_level(n_max)
        checked = 0
        violations: list[IdentityViolation] = []

        def note(law: str, n: int, x: Code, idx: str, lhs: Code, rhs: Code) -> None:
            violations.append(
                IdentityViolation(law, n, x, f"{idx} on {x!r}: {lhs!r} != {rhs!r}")
            )

        for n in range(n_max + 1):
            for x in self.level(n):
                if n >= 2:
                    for j in range(n + 1):
                        dj = self.face(j, n, x)
                        for i in range(j):
                            lhs = self.face(i, n - 1, dj)
                            rhs = self.face(j - 1, n - 1, self.face(i, n, x))
                            checked += 1
                            if lhs != rhs:
                                note("d_i d_j = d_{j-1} d_i", n, x, f"i={i} j={j}", lhs, rhs)
                if n + 2 <= n_max:
                    for j in range(n + 1):
                        sj = self.degeneracy(j, n, x)
                        for i in range(j + 1):
                            lhs = self.degeneracy(i, n + 1, sj)
                            rhs = self.degeneracy(j + 1, n + 1, self.degeneracy(i, n, x))
                            checked += 1
                            if lhs != rhs:
                                note("s_i s_j = s_{j+1} s_i", n, x, f"i={i} j={j}", lhs, rhs)
                if n + 1 <= n_max:
                    for j in range(n + 1):
                        sj = self.degeneracy(j, n, x)
                        for i in range(n + 2):
                            got = self.face(i, n + 1, sj)
                            if i < j:
                                want = self.degeneracy(j - 1, n - 1, self.face(i, n, x))
                                law = "d_i s_j = s_{j-1} d_i (i < j)"
                            elif i in (j, j + 1):
                                want = x
                                law = "d_i s_j = id (i in {j, j+1})"
                            else:
                                want = self.degeneracy(j, n - 1, self.face(i - 1, n, x))
                                law = "d_i s_j = s_j d_{i-1} (i > j+1)"
                            checked += 1
                            if got != want:
                                note(law, n, x, f"i={i} j={j}", got, want)
        return IdentityReport(checked, tuple(violations))


class PointSimplicialSet(TruncatedSimplicialSet):
    """One simplex per level: the terminal truncated simplicial set."""

    def level(self, n: int) -> Sequence[Code]:
        self._check_level(n)
        return ("pt",)

    def act(self, xi: MonotoneMap, x: Code) -> Code:
        return "pt"


class TableSimplicialSet(TruncatedSimplicialSet):
    """A simplicial set given by explicit level lists and generator tables.

    ``faces[(i, n, x)]`` and ``degeneracies[(i, n, x)]`` hold the generator
    actions; general actions are assembled through the epi-mono
    factorisation.  Tables are plain dicts so tests can corrupt single
    entries for fault injection.
    """

    def __init__(self, levels: Sequence[Sequence[Code]], faces: dict, degeneracies: dict):
        super().__init__(len(levels) - 1)
        self.levels = [tuple(lv) for lv in levels]
        self.faces = dict(faces)
        self.degeneracies = dict(degeneracies)

    @classmethod
    def mirror(cls, source: TruncatedSimplicialSet, r: int) -> "TableSimplicialSet":
        """Tabulate another simplicial set up to level r."""
        levels = [list(source.level(n)) for n in range(r + 1)]
        faces = {
            (i, n, x): source.face(i, n, x)
            for n in range(1, r + 1)
            for x in levels[n]
            for i in range(n + 1)
        }
        degeneracies = {
            (i, n, x): source.degeneracy(i, n, x)
            for n in range(r)
            for x in levels[n]
            for i in range(n + 1)
        }
        return cls(levels, faces, degeneracies)

    def level(self, n: int) -> Sequence[Code]:
        self._check_level(n)
        return self.levels[n]

    def act(self, xi: MonotoneMap, x: Code) -> Code:
        if xi.is_identity:
            return x
        degs, face_parts = delta.epi_mono_indices(xi)
        # contravariant: the outermost generator acts first
        for i, lvl in reversed(face_parts):
            x = self.faces[(i, lvl, x)]
        for i, lvl in reversed(degs):
            x = self.degeneracies[(i, lvl, x)]
        return x


# -- reports ------------------------------------------------------------


@dataclass(frozen=True)
class IdentityViolation:
    law: str
    level: int
    simplex: Code
    detail: str


@dataclass(frozen=True)
class IdentityReport:
    checked: int
    violations: tuple[IdentityViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary(self) -> str:
        if self.ok:
            return f"checked={self.checked} violations=0 verdict=OK"
        first = self.violations[0]
        return (
            f"checked={self.checked} violations={len(self.violations)} verdict=FAIL "
            f"first: {first.law} at level {first.level}: {first.detail}"
        )


# -- boundaries and fillers ----------------------------------------------


@dataclass(frozen=True)
class Boundary:
    """An (n+1)-tuple of (n-1)-level simplices standing where faces would."""

    dimension: int
    entries: tuple


def boundary_of(X: TruncatedSimplicialSet, x: Code, n: int) -> Boundary:
    return Boundary(n, tuple(X.face(i, n, x) for i in range(n + 1)))


def is_compatible_boundary(X: TruncatedSimplicialSet, b: Boundary) -> bool:
    n = b.dimension
    if n < 2:
        return True
    return all(
        X.face(j, n - 1, b.entries[i]) == X.face(i, n - 1, b.entries[j + 1])
        for j in range(n)
        for i in range(j + 1)
    )


def compatible_boundaries(X: TruncatedSimplicialSet, n: int) -> Iterator[Boundary]:
    """All compatible boundaries at dimension n, assembled by backtracking."""
    X._check_level(n - 1)
    cells = list(X.level(n - 1))
    face_rows = (
        {x: tuple(X.face(j, n - 1, x) for j in range(n)) for x in cells}
        if n >= 2
        else None
    )
    chosen: list[Code] = []

    def rec(e: int) -> Iterator[Boundary]:
        if e == n + 1:
            yield Boundary(n, tuple(chosen))
            return
        for x in cells:
            if face_rows is not None and e >= 1:
                row = face_rows[x]
                if any(face_rows[chosen[i]][e - 1] != row[i] for i in range(e)):
                    continue
            chosen.append(x)
            yield from rec(e + 1)
            chosen.pop()

    yield from rec(0)


def fillers(X: TruncatedSimplicialSet, b: Boundary) -> list[Code]:
    n = b.dimension
    X._check_level(n)
    return [x for x in X.level(n) if boundary_of(X, x, n) == b]


@dataclass(frozen=True)
class FillerReport:
    dimension: int
    boundary_count: int
    violations: tuple[tuple[Boundary, int], ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def coskeletal_filler_report(X: TruncatedSimplicialSet, n: int) -> FillerReport:
    """Count fillers of every compatible n-boundary; unique fillers pass."""
    total = 0
    violations = []
    for b in compatible_boundaries(X, n):
        total += 1
        k = len(fillers(X, b))
        if k != 1:
            violations.append((b, k))
    return FillerReport(n, total, tuple(violations))


# -- truncated simplicial maps --------------------------------------------


class TruncatedMap:
    """A simplicial map between truncations, tabulated on non-degenerate simplices."""

    __slots__ = ("source", "target", "r", "images")

    def __init__(self, source, target, r, images):
        self.source = source
        self.target = target
        self.r = r
        self.images = dict(images)

    def __call__(self, n: int, x: Code) -> Code:
        if (n, x) in self.images:
            return self.images[(n, x)]
        eta, y, m = self.source.ez_decompose(x, n)
        return self.target.act(eta, self.images[(m, y)])

    def full_table(self) -> dict:
        return {
            (n, x): self(n, x)
            for n in range(self.r + 1)
            for x in self.source.level(n)
        }

    def __eq__(self, other):
        return isinstance(other, TruncatedMap) and self.images == other.images

    def __hash__(self):
        return hash(frozenset(self.images.items()))

    def __repr__(self):
        parts = ", ".join(
            f"{x!r}|->{y!r}" for (_, x), y in sorted(self.images.items(), key=lambda kv: (kv[0][0], repr(kv[0][1])))
        )
        return f"TruncatedMap({parts})"


@dataclass(frozen=True)
class RejectionWitness:
    level: int
    simplex: Code
    candidate: Code
    face_index: int
    required: Code
    found: Code


@dataclass
class MapEnumeration:
    maps: list[TruncatedMap]
    rejections: list[RejectionWitness]


def _filler_spot_check(Y: TruncatedSimplicialSet, r: int) -> None:
    if Y.top_level < r + 1:
        raise LevelOutOfRangeError(
            f"coskeletal spot check needs level {r + 1}, have {Y.top_level}"
        )
    for b in compatible_boundaries(Y, r + 1):
        k = len(fillers(Y, b))
        if k != 1:
            raise NotCoskeletalError(
                f"boundary at dimension {r + 1} has {k} fillers: {b.entries!r}"
            )


def naturality_failures(f: TruncatedMap) -> list[tuple[MonotoneMap, Code]]:
    """Every monotone map with endpoints <= r is replayed against f's table."""
    X, Y, r = f.source, f.target, f.r
    table = f.full_table()
    bad = []
    for n in range(r + 1):
        for m in range(r + 1):
            for xi in delta.all_maps(m, n):
                for x in X.level(n):
                    if Y.act(xi, table[(n, x)]) != table[(m, X.act(xi, x))]:
                        bad.append((xi, x))
    return bad


def enumerate_truncated_maps(
    X: TruncatedSimplicialSet,
    Y: TruncatedSimplicialSet,
    r: int,
    *,
    coskeletal_check: bool = False,
) -> MapEnumeration:
    """All simplicial maps between the r-truncations of X and Y.

    Candidate images are chosen only on non-degenerate simplices of X
    (naturality forces the degenerate ones); every completed assignment is
    then re-checked against every monotone map with endpoints <= r.  With
    ``coskeletal_check`` the target's boundaries one level above r are first
    verified to have unique fillers, which is what makes the truncated maps
    extend uniquely.
    """
    X._check_level(r)
    Y._check_level(r)
    if coskeletal_check:
        _filler_spot_check(Y, r)

    nd = [(n, x) for n in range(r + 1) for x in X.nondegenerate(n)]
    images: dict = {}
    rejections: list[RejectionWitness] = []
    maps: list[TruncatedMap] = []

    def image_of(n: int, x: Code) -> Code:
        eta, y, m = X.ez_decompose(x, n)
        return Y.act(eta, images[(m, y)])

    def rec(k: int) -> None:
        if k == len(nd):
            maps.append(TruncatedMap(X, Y, r, images))
            return
        n, x = nd[k]
        face_imgs = (
            [image_of(n - 1, X.face(i, n, x)) for i in range(n + 1)] if n else []
        )
        for y in Y.level(n):
            witness = None
            for i in range(n + 1) if n else ():
                got = Y.face(i, n, y)
                if got != face_imgs[i]:
                    witness = RejectionWitness(n, x, y, i, face_imgs[i], got)
                    break
            if witness is not None:
                rejections.append(witness)
                continue
            images[(n, x)] = y
            rec(k + 1)
            del images[(n, x)]

    rec(0)
    for f in maps:
        bad = naturality_failures(f)
        if bad:
            xi, x = bad[0]
            raise AssertionError(
                f"enumerated map fails naturality at {xi} on {x!r}; "
                "face-consistent assignments must extend naturally"
            )
    return MapEnumeration(maps, rejections)
