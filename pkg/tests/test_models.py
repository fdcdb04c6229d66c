import pytest
from hypothesis import given, strategies as st

from catalan_sset import delta, models
from catalan_sset.catalan import LaxMatrix, enumerate_level, lax_from_bits
from catalan_sset.errors import (
    MissingIdentityIdealError,
    NotAnIdealError,
    NotInterpolativeError,
    ShapeMismatchError,
)
from catalan_sset.models import (
    IdealRelation,
    InterpolativeRelation,
    adjoint_ideals,
    compose_ideals,
    enumerate_square_ideals,
    full_ideal,
    ideal_leq,
    ideal_pullback,
    ideal_to_lax,
    identity_ideal,
    lax_to_ideal,
    lax_to_relation,
    relation_pullback,
    relation_to_lax,
)

C = LaxMatrix(1, 1)
ZERO1 = LaxMatrix(1, 0)
T = lax_from_bits(2, (1, 1, 1))
I2 = lax_from_bits(2, (0, 0, 1))


# -- relations ----------------------------------------------------------------


def test_all_ones_relates_only_the_diagonal():
    assert lax_to_relation(T).pairs == frozenset({(0, 0), (1, 1), (2, 2)})


def test_unit_shape_relation():
    got = lax_to_relation(I2).pairs
    diag = {(0, 0), (1, 1), (2, 2)}
    assert got == frozenset(diag | {(0, 1), (1, 0), (1, 2), (2, 1)})


def test_all_zero_relates_everything():
    x = lax_from_bits(2, (0, 0, 0))
    assert lax_to_relation(x).pairs == frozenset(
        (a, b) for a in range(3) for b in range(3)
    )


def test_relation_round_trips():
    for n in range(5):
        for x in enumerate_level(n):
            assert relation_to_lax(lax_to_relation(x)) == x


def test_relation_validation():
    with pytest.raises(NotInterpolativeError):
        relation_to_lax(InterpolativeRelation(1, frozenset({(0, 0)})))
    with pytest.raises(NotInterpolativeError):
        relation_to_lax(
            InterpolativeRelation(1, frozenset({(0, 0), (1, 1), (0, 1)}))
        )
    with pytest.raises(NotInterpolativeError):
        # (0, 2) present without (0, 1): interpolation fails
        relation_to_lax(
            InterpolativeRelation(
                2, frozenset({(0, 0), (1, 1), (2, 2), (0, 2), (2, 0), (1, 2), (2, 1)})
            )
        )


# -- ideals ---------------------------------------------------------------------


def test_marked_edge_gives_identity_ideal():
    assert lax_to_ideal(C) == identity_ideal(1)


def test_zero_edge_gives_full_ideal():
    assert lax_to_ideal(ZERO1) == full_ideal(1, 1)


def test_ideal_round_trips():
    for n in range(5):
        for x in enumerate_level(n):
            assert ideal_to_lax(lax_to_ideal(x)) == x


def test_ideal_census_is_independent_and_agrees():
    for n in range(5):
        ideals = enumerate_square_ideals(n)
        level = enumerate_level(n)
        assert len(ideals) == len(level)
        assert set(ideals) == {lax_to_ideal(x) for x in level}


def test_ideal_validation_errors():
    with pytest.raises(NotAnIdealError):
        ideal_to_lax(IdealRelation(1, 1, frozenset({(1, 0)})))
    with pytest.raises(MissingIdentityIdealError):
        ideal_to_lax(IdealRelation(1, 1, frozenset()))
    with pytest.raises(ShapeMismatchError):
        ideal_to_lax(IdealRelation(1, 2, frozenset()))


def test_ideal_law_matches_full_quantifier_form():
    def full_law(pairs, top):
        return all(
            (q, p) in pairs
            for (j, i) in pairs
            for q in range(j + 1)
            for p in range(i, top + 1)
        )

    import itertools

    grid = list(itertools.product(range(3), range(3)))
    for bits in range(2 ** len(grid)):
        pairs = frozenset(g for k, g in enumerate(grid) if (bits >> k) & 1)
        assert models._is_ideal(pairs, 2, 2) == full_law(pairs, 2)


# -- ideal calculus ---------------------------------------------------------------


def test_identity_map_has_identity_adjoints():
    lo, up = adjoint_ideals(delta.identity(1))
    assert lo == identity_ideal(1)
    assert up == identity_ideal(1)


def test_collapse_map_adjoints():
    lo, up = adjoint_ideals(delta.degeneracy(0, 0))
    assert lo.pairs == frozenset({(0, 0), (0, 1)})
    assert up.pairs == frozenset({(0, 0), (1, 0)})
    for x in enumerate_level(0):
        b = lax_to_ideal(x)
        sandwich = compose_ideals(compose_ideals(up, b), lo)
        assert sandwich == ideal_pullback(delta.degeneracy(0, 0), b)


def test_adjunction_laws_up_to_level_three():
    for m in range(4):
        for n in range(4):
            for xi in delta.all_maps(m, n):
                lo, up = adjoint_ideals(xi)
                assert ideal_leq(identity_ideal(m), compose_ideals(up, lo))
                assert ideal_leq(compose_ideals(lo, up), identity_ideal(n))


def test_sandwich_equals_inverse_image_up_to_level_three():
    for m in range(4):
        for n in range(4):
            for xi in delta.all_maps(m, n):
                lo, up = adjoint_ideals(xi)
                for x in enumerate_level(n):
                    b = lax_to_ideal(x)
                    assert compose_ideals(compose_ideals(up, b), lo) == ideal_pullback(
                        xi, b
                    )


def test_compose_shape_mismatch():
    with pytest.raises(ShapeMismatchError):
        compose_ideals(identity_ideal(1), identity_ideal(2))
    with pytest.raises(ShapeMismatchError):
        ideal_leq(identity_ideal(1), identity_ideal(2))


def test_composite_of_ideals_is_an_ideal():
    for m in range(3):
        for n in range(3):
            for xi in delta.all_maps(m, n):
                lo, up = adjoint_ideals(xi)
                comp = compose_ideals(up, lo)
                assert models._is_ideal(comp.pairs, comp.m_top, comp.n_top)


# -- actions commute with both conversions ------------------------------------------


def test_conversions_commute_with_actions_up_to_level_three():
    from catalan_sset.catalan import act

    for n in range(4):
        level = enumerate_level(n)
        for m in range(4):
            for xi in delta.all_maps(m, n):
                for x in level:
                    y = act(xi, x)
                    assert ideal_pullback(xi, lax_to_ideal(x)) == lax_to_ideal(y)
                    assert relation_pullback(xi, lax_to_relation(x)) == lax_to_relation(y)


@given(st.data())
def test_pullback_of_ideal_is_ideal(data):
    n = data.draw(st.integers(min_value=0, max_value=5))
    m = data.draw(st.integers(min_value=0, max_value=5))
    values = tuple(
        sorted(
            data.draw(
                st.lists(
                    st.integers(min_value=0, max_value=n),
                    min_size=m + 1,
                    max_size=m + 1,
                )
            )
        )
    )
    xi = delta.MonotoneMap(m, n, values)
    x = data.draw(st.sampled_from(enumerate_level(n)))
    pulled = ideal_pullback(xi, lax_to_ideal(x))
    assert models._is_ideal(pulled.pairs, m, m)
    assert ideal_leq(identity_ideal(m), pulled)
