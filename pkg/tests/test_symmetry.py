import pytest

from cycpres import presentations as pres
from cycpres.complexes import FacePairing, Pair, build_P
from cycpres.homology import abelianization, parse_group
from cycpres.symmetry import (
    CyclicAction,
    SymmetryError,
    check_automorphism,
    family_complex,
    quotient_by_rho,
    quotient_homology,
    rho,
)


def test_rho_P4_quoted_images():
    a = rho(4, "P")
    assert a.face_map["Fm2"] == "Fm3"
    assert a.vertex_map["u2"] == "u3"
    assert a.vertex_map["N"] == "N"


@pytest.mark.parametrize("family,n", [("P", n) for n in range(2, 9)] + [("Q", n) for n in range(2, 6)])
def test_rho_order_and_orbits(family, n):
    a = rho(n, family)
    full = a.power(n)
    assert all(v == x for v, x in full.vertex_map.items())
    assert all(f == x for f, x in full.face_map.items())
    assert a.fixed_vertices() == {"N", "S"}
    assert all(len(o) == n for o in a.face_orbits())
    sizes = sorted(len(o) for o in a.vertex_orbits())
    assert sizes[:2] == [1, 1] and set(sizes[2:]) == {n}


@pytest.mark.parametrize("family,n", [("P", 5), ("Q", 4)])
def test_rho_commutes_with_pairing(family, n):
    (C, P), _ = family_complex(family, n)
    a = rho(n, family)
    for p in P.pairs:
        q = P.pair_of(a.face_map[p.source])
        assert q.source == a.face_map[p.source]
        assert q.target == a.face_map[p.target]


def test_non_automorphism_rejected():
    C, P = build_P(4)
    a = rho(4, "P")
    bad_pairs = tuple(Pair(p.source, p.target, (p.offset + 1) % 5 if p.source == "Fm0" else p.offset, True, p.name)
                      for p in P.pairs)
    assert check_automorphism(C, FacePairing(bad_pairs), a)
    with pytest.raises(SymmetryError):
        quotient_by_rho(C, FacePairing(bad_pairs), a)
    swapped = dict(a.vertex_map)
    swapped["N"], swapped["S"] = "S", "N"
    assert check_automorphism(C, P, CyclicAction(4, swapped, a.face_map))


@pytest.mark.parametrize("n", range(2, 13))
def test_P_quotient_is_lens_3(n):
    (C, P), _ = family_complex("P", n)
    res = quotient_by_rho(C, P, rho(n, "P"))
    assert res.complex.counts == (1, 1, 1)
    assert len(res.pairing.pairs) == 1
    (r,) = res.relators
    assert abs(sum(e for _, e in r.letters)) == 3
    assert res.fixed_vertices == ["N", "S"]
    assert quotient_homology("P", n) == parse_group("Z/3")


@pytest.mark.parametrize("n", range(2, 9))
def test_Q_quotient_is_lens_5(n):
    (C, P), _ = family_complex("Q", n)
    res = quotient_by_rho(C, P, rho(n, "Q"))
    assert len(res.pairing.pairs) == 1
    (r,) = res.relators
    assert abs(sum(e for _, e in r.letters)) == 5
    assert quotient_homology("Q", n) == parse_group("Z/5")


@pytest.mark.parametrize("n", [2, 4, 6])
def test_trivial_action_quotient(n):
    (C, P), expected = family_complex("P", n)
    res = quotient_by_rho(C, P, CyclicAction.identity(C), expected)
    assert res.sphere is C
    assert res.complex.counts == (1, n, n)
    assert quotient_homology("P", n, trivial=True) == abelianization(pres.half_q3(n))


def test_unknown_family():
    with pytest.raises(SymmetryError):
        rho(4, "R")
