"""Nerves of validated posetal inputs, as truncated simplicial sets.

The monoidal nerve of a posetal monoidal 2-category stores, per simplex, an
object for every interval and a 1-cell for every triple i < j < k running
from the tensor of the outer interval objects to the inner one; from level
3 upward each quadruple must satisfy one hom-poset inequality, and nothing
more is ever required because parallel 2-cells in a poset are equal.  The
plain nerve of a posetal 2-category stores an object per vertex and a
1-cell per interval with a triple inequality.

Pulling back along a monotone map restricts the stored data; collapsed
intervals receive the unit object (or the vertex object) and collapsed
triples receive identity cells, which is exactly what strictness makes of
the general degeneracy formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .bicats import (
    PosetalBicat,
    PosetalMonoidalBicat,
    require_valid,
    validate_bicat,
    validate_monoidal_bicat,
)
from .catalan import intervals, interval_index
from .delta import MonotoneMap
from .errors import DomainMismatchError
from .sset import TruncatedSimplicialSet

__all__ = [
    "MonoidalNerveSimplex",
    "BicatNerveSimplex",
    "MonoidalNerve",
    "BicatNerve",
    "triples",
    "triple_index",
    "monoidal_nerve_level",
    "bicat_nerve_level",
]


@lru_cache(maxsize=None)
def triples(n: int) -> tuple[tuple[int, int, int], ...]:
    return tuple(combinations(range(n + 1), 3))


@lru_cache(maxsize=None)
def triple_index(n: int) -> dict[tuple[int, int, int], int]:
    return {t: k for k, t in enumerate(triples(n))}


@dataclass(frozen=True, slots=True)
class MonoidalNerveSimplex:
    """Objects per interval (canonical order) and cells per triple (lex order)."""

    n: int
    objects: tuple[str, ...]
    cells: tuple[str, ...]

    def object_at(self, i: int, j: int) -> str:
        return self.objects[interval_index(self.n)[(i, j)]]

    def cell_at(self, i: int, j: int, k: int) -> str:
        return self.cells[triple_index(self.n)[(i, j, k)]]

    def __repr__(self) -> str:
        return f"NrvM({self.n}|{','.join(self.objects)}|{','.join(self.cells)})"


@dataclass(frozen=True, slots=True)
class BicatNerveSimplex:
    """Objects per vertex and cells per interval (canonical order)."""

    n: int
    vertices: tuple[str, ...]
    cells: tuple[str, ...]

    def cell_at(self, i: int, j: int) -> str:
        return self.cells[interval_index(self.n)[(i, j)]]

    def __repr__(self) -> str:
        return f"NrvK({self.n}|{','.join(self.vertices)}|{','.join(self.cells)})"


class MonoidalNerve(TruncatedSimplicialSet):
    """The nerve of a posetal monoidal 2-category, truncated at ``top_level``."""

    def __init__(self, b: PosetalMonoidalBicat, top_level: int = 4, validate: bool = True):
        if validate:
            require_valid(validate_monoidal_bicat(b))
        super().__init__(top_level)
        self.b = b
        self._levels: dict[int, tuple[MonoidalNerveSimplex, ...]] = {}

    # -- enumeration ----------------------------------------------------

    def _quad_ok(self, objs, cells, n, quad) -> bool:
        b = self.b
        i, j, k, l = quad
        idx = interval_index(n)
        tdx = triple_index(n)
        a_ij = objs[idx[(i, j)]]
        a_kl = objs[idx[(k, l)]]
        lhs = b.compose_cells(
            cells[tdx[(i, j, l)]],
            b.tensor_cells(cells[tdx[(j, k, l)]], b.identity_of(a_ij)),
        )
        rhs = b.compose_cells(
            cells[tdx[(i, k, l)]],
            b.tensor_cells(b.identity_of(a_kl), cells[tdx[(i, j, k)]]),
        )
        return b.leq_cells(lhs, rhs)

    def _enumerate(self, n: int) -> tuple[MonoidalNerveSimplex, ...]:
        b = self.b
        pos = intervals(n)
        idx = interval_index(n)
        tris = triples(n)
        tdx = triple_index(n)
        # triples become checkable once their last interval (the outer one,
        # latest in canonical order) is assigned
        tri_ready: list[list[tuple[int, int, int]]] = [[] for _ in pos]
        for t in tris:
            i, j, k = t
            tri_ready[max(idx[(i, j)], idx[(j, k)], idx[(i, k)])].append(t)
        # quadruples become checkable once their lex-last triple is assigned
        quad_ready: list[list[tuple[int, int, int, int]]] = [[] for _ in tris]
        for quad in combinations(range(n + 1), 4):
            _, j, k, l = quad
            quad_ready[tdx[(j, k, l)]].append(quad)

        results: list[MonoidalNerveSimplex] = []
        objs: list[str] = [""] * len(pos)
        cells: list[str] = [""] * len(tris)

        def assign_cells(t_pos: int) -> None:
            if t_pos == len(tris):
                results.append(MonoidalNerveSimplex(n, tuple(objs), tuple(cells)))
                return
            i, j, k = tris[t_pos]
            dom = b.tensor_objects(objs[idx[(j, k)]], objs[idx[(i, j)]])
            cod = objs[idx[(i, k)]]
            for cell in b.hom(dom, cod):
                cells[t_pos] = cell
                if all(
                    self._quad_ok(objs, cells, n, quad)
                    for quad in quad_ready[t_pos]
                ):
                    assign_cells(t_pos + 1)

        def assign_objects(o_pos: int) -> None:
            if o_pos == len(pos):
                assign_cells(0)
                return
            for obj in b.objects:
                objs[o_pos] = obj
                ok = True
                for (i, j, k) in tri_ready[o_pos]:
                    dom = b.tensor_objects(objs[idx[(j, k)]], objs[idx[(i, j)]])
                    if not b.hom(dom, objs[idx[(i, k)]]):
                        ok = False
                        break
                if ok:
                    assign_objects(o_pos + 1)

        if n == 0:
            return (MonoidalNerveSimplex(0, (), ()),)
        assign_objects(0)
        return tuple(results)

    # -- simplicial-set interface ----------------------------------------

    def level(self, n: int):
        self._check_level(n)
        if n not in self._levels:
            self._levels[n] = self._enumerate(n)
        return self._levels[n]

    def act(self, xi: MonotoneMap, x: MonoidalNerveSimplex) -> MonoidalNerveSimplex:
        if xi.codomain_top != x.n:
            raise DomainMismatchError("map endpoints do not match the simplex level")
        b = self.b
        m = xi.domain_top
        unit = b.unit_object

        def obj(p: int, q: int) -> str:
            a, c = xi.values[p], xi.values[q]
            return x.object_at(a, c) if a < c else unit

        objs = tuple(obj(p, q) for (p, q) in intervals(m))
        cells = []
        for (p, q, r) in triples(m):
            a, c, e = xi.values[p], xi.values[q], xi.values[r]
            if a < c < e:
                cells.append(x.cell_at(a, c, e))
            elif a == c and c < e:
                cells.append(b.identity_of(x.object_at(c, e)))
            elif a < c and c == e:
                cells.append(b.identity_of(x.object_at(a, c)))
            else:
                cells.append(b.identity_of(unit))
        return MonoidalNerveSimplex(m, objs, tuple(cells))


class BicatNerve(TruncatedSimplicialSet):
    """The nerve of a posetal 2-category, truncated at ``top_level``."""

    def __init__(self, k: PosetalBicat, top_level: int = 4, validate: bool = True):
        if validate:
            require_valid(validate_bicat(k))
        super().__init__(top_level)
        self.k = k
        self._levels: dict[int, tuple[BicatNerveSimplex, ...]] = {}

    def _enumerate(self, n: int) -> tuple[BicatNerveSimplex, ...]:
        k = self.k
        pos = intervals(n)
        idx = interval_index(n)
        results: list[BicatNerveSimplex] = []
        cells: list[str] = [""] * len(pos)

        def assign_cells(c_pos: int, verts) -> None:
            if c_pos == len(pos):
                results.append(BicatNerveSimplex(n, verts, tuple(cells)))
                return
            i, j = pos[c_pos]
            for cell in k.hom(verts[i], verts[j]):
                cells[c_pos] = cell
                # the outer interval closes every triple (i, q, j)
                if all(
                    k.leq_cells(
                        k.compose_cells(cells[idx[(q, j)]], cells[idx[(i, q)]]),
                        cell,
                    )
                    for q in range(i + 1, j)
                ):
                    assign_cells(c_pos + 1, verts)

        for verts in product(k.objects, repeat=n + 1):
            assign_cells(0, verts)
        return tuple(results)

    def level(self, n: int):
        self._check_level(n)
        if n not in self._levels:
            self._levels[n] = self._enumerate(n)
        return self._levels[n]

    def act(self, xi: MonotoneMap, x: BicatNerveSimplex) -> BicatNerveSimplex:
        if xi.codomain_top != x.n:
            raise DomainMismatchError("map endpoints do not match the simplex level")
        k = self.k
        m = xi.domain_top
        verts = tuple(x.vertices[xi.values[p]] for p in range(m + 1))
        cells = []
        for (p, q) in intervals(m):
            a, c = xi.values[p], xi.values[q]
            if a < c:
                cells.append(x.cell_at(a, c))
            else:
                cells.append(k.identity_of(x.vertices[a]))
        return BicatNerveSimplex(m, verts, tuple(cells))


def monoidal_nerve_level(b: PosetalMonoidalBicat, n: int) -> tuple[MonoidalNerveSimplex, ...]:
    return MonoidalNerve(b, top_level=max(n, 4)).level(n)


def bicat_nerve_level(k: PosetalBicat, n: int) -> tuple[BicatNerveSimplex, ...]:
    return BicatNerve(k, top_level=max(n, 4)).level(n)
