import pytest

from catalan_sset import delta, sset
from catalan_sset.bicats import Cell, PosetalBicat, embed, suspend
from catalan_sset.catalan import CatalanSet, enumerate_level, intervals
from catalan_sset.inputs import load_suite
from catalan_sset.nerve import (
    BicatNerve,
    MonoidalNerve,
    MonoidalNerveSimplex,
    bicat_nerve_level,
    monoidal_nerve_level,
    triples,
)
from catalan_sset.posets import MonoidalPoset


@pytest.fixture(scope="module")
def or2_bicat():
    return embed(load_suite("or2"))


@pytest.fixture(scope="module")
def or2_nerve(or2_bicat):
    return MonoidalNerve(or2_bicat)


def test_monoidal_nerve_sizes_match_catalan_levels(or2_nerve):
    assert [len(or2_nerve.level(n)) for n in range(5)] == [1, 2, 5, 14, 42]


def _transport(b, x):
    """The canonical relabelling from an interval table into the nerve of
    the embedded two-element poset."""
    n = x.n
    objs = tuple(str(x.entry(i, j)) for (i, j) in intervals(n))

    def cell(p, q, r):
        dom = str(max(x.entry(p, q), x.entry(q, r)))
        cod = str(x.entry(p, r))
        return f"{dom}->{cod}"

    cells = tuple(cell(p, q, r) for (p, q, r) in triples(n))
    return MonoidalNerveSimplex(n, objs, cells)


def test_monoidal_nerve_is_the_catalan_set_bit_for_bit(or2_bicat, or2_nerve):
    for n in range(5):
        transported = [_transport(or2_bicat, x) for x in enumerate_level(n)]
        assert set(transported) == set(or2_nerve.level(n))
        assert len(transported) == len(or2_nerve.level(n))


def test_monoidal_nerve_action_matches_catalan_action(or2_bicat, or2_nerve):
    cs = CatalanSet(4)
    for n in range(5):
        for m in range(4):
            for xi in delta.all_maps(m, n):
                for x in enumerate_level(n):
                    assert or2_nerve.act(xi, _transport(or2_bicat, x)) == _transport(
                        or2_bicat, cs.act(xi, x)
                    )


def test_suspension_nerve_low_levels():
    nv = MonoidalNerve(load_suite("sigma-or2"))
    assert len(nv.level(1)) == 1
    assert len(nv.level(2)) == 2


def test_trivial_input_has_terminal_nerve():
    one = MonoidalPoset(
        elements=("e",),
        leq=frozenset({("e", "e")}),
        tensor={("e", "e"): "e"},
        unit="e",
    )
    nv = MonoidalNerve(suspend(one))
    assert [len(nv.level(n)) for n in range(5)] == [1, 1, 1, 1, 1]


def test_plain_nerve_of_suspension_matches_catalan_sizes():
    nk = BicatNerve(load_suite("sigma-or2"))
    assert [len(nk.level(n)) for n in range(5)] == [1, 2, 5, 14, 42]


def test_plain_nerve_of_discrete_objects_is_constant():
    k = PosetalBicat(
        objects=("x", "y", "z"),
        cells=tuple(Cell(f"id{o}", o, o) for o in ("x", "y", "z")),
        leq=frozenset((f"id{o}", f"id{o}") for o in ("x", "y", "z")),
        compose={(f"id{o}", f"id{o}"): f"id{o}" for o in ("x", "y", "z")},
        identities={o: f"id{o}" for o in ("x", "y", "z")},
    )
    nk = BicatNerve(k)
    for n in range(5):
        assert len(nk.level(n)) == 3


def test_plain_nerve_level_one_counts_order_pairs():
    nk = BicatNerve(load_suite("chain2-discrete"))
    assert len(nk.level(1)) == 3


def test_degeneracy_of_an_edge_inserts_the_unit(or2_nerve):
    a = MonoidalNerveSimplex(1, ("1",), ())
    s0 = or2_nerve.degeneracy(0, 1, a)
    assert s0.objects == ("0", "1", "1")  # interval (0,1) collapses to the unit
    assert s0.cells == ("1->1",)
    s1 = or2_nerve.degeneracy(1, 1, a)
    assert s1.objects == ("1", "0", "1")
    assert s1.cells == ("1->1",)


def test_identity_action_is_trivial(or2_nerve):
    for n in range(4):
        for x in or2_nerve.level(n):
            assert or2_nerve.act(delta.identity(n), x) == x


def test_faces_of_stored_simplices_live_one_level_down(or2_nerve):
    for n in (1, 2, 3, 4):
        lower = set(or2_nerve.level(n - 1))
        for x in or2_nerve.level(n):
            for i in range(n + 1):
                assert or2_nerve.face(i, n, x) in lower


def test_simplicial_identities_on_suite_nerves():
    spaces = [
        MonoidalNerve(embed(load_suite("or2"))),
        MonoidalNerve(embed(load_suite("and2"))),
        MonoidalNerve(load_suite("sigma-or2")),
        BicatNerve(load_suite("sigma-or2")),
        BicatNerve(load_suite("chain2-discrete")),
        BicatNerve(load_suite("trivial")),
    ]
    for space in spaces:
        assert space.verify_simplicial_identities(4).ok


def test_three_boundaries_fill_at_most_once_and_four_boundaries_exactly_once():
    for space in (
        MonoidalNerve(embed(load_suite("and2"))),
        MonoidalNerve(load_suite("sigma-or2")),
        BicatNerve(load_suite("chain2-discrete")),
    ):
        for b in sset.compatible_boundaries(space, 3):
            assert len(sset.fillers(space, b)) <= 1
        report = sset.coskeletal_filler_report(space, 4)
        assert report.ok


def test_level_helpers(or2_bicat):
    assert len(monoidal_nerve_level(or2_bicat, 2)) == 5
    assert len(bicat_nerve_level(load_suite("trivial"), 3)) == 1


def test_suspension_nerve_identities_hold_despite_nontrivial_cells():
    nv = MonoidalNerve(load_suite("sigma-or2"))
    assert nv.verify_simplicial_identities(4).ok
