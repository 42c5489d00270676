from itertools import permutations
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cycpres import presentations as pres
from cycpres.alexander import branched_cover_order, torus_alexander
from cycpres.brieskorn import (
    BraidWord,
    BrieskornParams,
    Geometry,
    braid_permutation,
    cover_homology_order,
    covering_triple,
    cycle_count,
    geometry_type,
    torus_braid,
    torus_link_components,
)
from cycpres.homology import abelianization


def test_geometry_anchors():
    assert geometry_type(BrieskornParams(2, 3, 5)) is Geometry.SPHERICAL
    assert geometry_type(BrieskornParams(2, 3, 6)) is Geometry.NILPOTENT
    assert geometry_type(BrieskornParams(2, 3, 7)) is Geometry.SL2R_TILDE
    assert geometry_type(BrieskornParams(2, 4, 4)) is Geometry.NILPOTENT
    assert geometry_type(BrieskornParams(3, 3, 3)) is Geometry.NILPOTENT
    assert geometry_type(BrieskornParams(2, 2, 100)) is Geometry.SPHERICAL


def test_params_validated():
    with pytest.raises(ValueError):
        BrieskornParams(1, 3, 5)
    with pytest.raises(ValueError):
        BraidWord(3, (3,))
    with pytest.raises(ValueError):
        BraidWord(3, (0,))


@given(st.integers(2, 30), st.integers(2, 30), st.integers(2, 30))
def test_geometry_permutation_invariant(p, q, r):
    g = geometry_type(BrieskornParams(p, q, r))
    assert all(geometry_type(BrieskornParams(*t)) is g for t in permutations((p, q, r)))


def test_component_examples():
    assert torus_link_components(3, 2) == 1
    assert torus_link_components(2, 2) == 2
    assert torus_link_components(4, 6) == 2
    assert torus_braid(3, 2).letters == (1, 2, 1, 2)


def test_braid_permutation_of_full_twist_is_identity():
    assert braid_permutation(torus_braid(4, 4)) == (0, 1, 2, 3)
    assert cycle_count((1, 2, 0)) == 1
    assert cycle_count((1, 0, 3, 2)) == 2


@pytest.mark.parametrize("p", range(2, 13))
def test_components_equal_gcd(p):
    for q in range(2, 13):
        assert torus_link_components(p, q) == gcd(p, q)


def test_covering_triple():
    got = [(c.degree, c.link) for c in covering_triple(BrieskornParams(5, 3, 2))]
    assert got == [(2, (5, 3)), (3, (2, 5)), (5, (3, 2))]
    same = covering_triple(BrieskornParams(4, 4, 4))
    assert len(set(same)) == 1 and len(same) == 3
    assert sorted(c.degree for c in covering_triple(BrieskornParams(2, 3, 5))) == [2, 3, 5]
    assert str(covering_triple(BrieskornParams(5, 3, 2))[0]) == "2-fold cover of S^3 branched over T(5,3)"


@pytest.mark.parametrize("m", range(2, 11))
def test_cover_order_matches_sieradski_groups(m):
    assert cover_homology_order(BrieskornParams(3, 2, m)) == abelianization(pres.sieradski(m)).order()
    assert cover_homology_order(BrieskornParams(5, 2, m)) == abelianization(pres.sieradski_q2(m, 2)).order()


def test_poincare_sphere_is_homology_sphere():
    # every cyclic reading of (2,3,5) gives order 1
    for c in covering_triple(BrieskornParams(2, 3, 5)):
        assert branched_cover_order(torus_alexander(*c.link), c.degree) == 1
