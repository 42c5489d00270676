"""The index-shift symmetry of P_n and Q_n and the complex it cuts out.

Applying the action to the ball gives a rotation about the axis through
N and S; the orbit sphere carries a single face pair whose quotient has
a one-relator presentation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import (
    Face,
    FacePairing,
    Pair,
    PolygonalSphere,
    QuotientComplex,
    build_P,
    build_Q,
    quotient,
    read_presentation,
    validate_sphere,
)
from .homology import AbelianGroup, relators_abelianization
from .presentations import CyclicPresentation, half_q3, half_q5


class SymmetryError(ValueError):
    pass


@dataclass(frozen=True)
class CyclicAction:
    order: int
    vertex_map: dict
    face_map: dict

    @classmethod
    def identity(cls, C: PolygonalSphere) -> "CyclicAction":
        return cls(1, {v: v for v in C.vertices}, {f.name: f.name for f in C.faces})

    def power(self, k: int) -> "CyclicAction":
        vm = {v: v for v in self.vertex_map}
        fm = {f: f for f in self.face_map}
        for _ in range(k % self.order if self.order else 0):
            vm = {v: self.vertex_map[x] for v, x in vm.items()}
            fm = {f: self.face_map[x] for f, x in fm.items()}
        return CyclicAction(self.order, vm, fm)

    def fixed_vertices(self) -> set:
        return {v for v, x in self.vertex_map.items() if v == x}

    def vertex_orbits(self) -> list[list]:
        return _orbits(self.vertex_map)

    def face_orbits(self) -> list[list]:
        return _orbits(self.face_map)


def _orbits(mapping: dict) -> list[list]:
    seen, out = set(), []
    for x in mapping:
        if x in seen:
            continue
        orb = [x]
        seen.add(x)
        y = mapping[x]
        while y != x:
            orb.append(y)
            seen.add(y)
            y = mapping[y]
        out.append(orb)
    return out


def _rotations(image: tuple, target: tuple) -> list[int]:
    """All r with image[k] == target[k + r]."""
    L = len(target)
    return [r for r in range(L) if all(image[k] == target[(k + r) % L] for k in range(L))]


def check_automorphism(C: PolygonalSphere, pairing: FacePairing, a: CyclicAction) -> list[str]:
    """Problems preventing ``a`` from being an automorphism of the paired sphere."""
    problems = []
    vm, fm = a.vertex_map, a.face_map
    if sorted(vm) != sorted(C.vertices) or sorted(vm.values()) != sorted(C.vertices):
        problems.append("vertex map is not a bijection of the vertices")
    names = [f.name for f in C.faces]
    if sorted(fm) != sorted(names) or sorted(fm.values()) != sorted(names):
        problems.append("face map is not a bijection of the faces")
    if problems:
        return problems
    full = a.power(a.order)
    if any(v != x for v, x in full.vertex_map.items()) or any(f != x for f, x in full.face_map.items()):
        problems.append(f"action does not have order dividing {a.order}")
    rot = {}
    for f in C.faces:
        img = tuple(vm[v] for v in f.vertices)
        rs = _rotations(img, C.face(fm[f.name]).vertices)
        if not rs:
            problems.append(f"face {f.name} is not carried onto face {fm[f.name]}")
        rot[f.name] = rs
    if problems:
        return problems
    by_source = {p.source: p for p in pairing.pairs}
    for p in pairing.pairs:
        q = by_source.get(fm[p.source])
        if q is None or q.target != fm[p.target] or q.reversing != p.reversing:
            problems.append(f"pair {p.label} is not carried onto a pair")
            continue
        L = len(C.face(p.source))
        sign = 1 if p.reversing else -1
        if not any((p.offset + rf + sign * rg - q.offset) % L == 0 for rf in rot[p.source] for rg in rot[p.target]):
            problems.append(f"pair {p.label} is carried onto {q.label} with the wrong vertex correspondence")
    return problems


def _action_from_faces(C: PolygonalSphere, face_map: dict, order: int) -> CyclicAction:
    vm: dict = {}
    for f in C.faces:
        for v, x in zip(f.vertices, C.face(face_map[f.name]).vertices):
            if vm.setdefault(v, x) != x:
                raise SymmetryError(f"face map does not induce a vertex map at {v}")
    return CyclicAction(order, vm, face_map)


def family_complex(family: str, n: int):
    family = family.upper()
    if family == "P":
        return build_P(n), half_q3(n)
    if family == "Q":
        return build_Q(n), half_q5(n)
    raise SymmetryError(f"unknown family {family!r}; expected P or Q")


def rho(n: int, family: str) -> CyclicAction:
    """Index shift i -> i+1 on the faces of P_n or Q_n, checked to be an automorphism."""
    (C, pairing), _ = family_complex(family, n)
    fm = {}
    for f in C.faces:
        stem = f.name.rstrip("0123456789")
        i = int(f.name[len(stem):])
        fm[f.name] = f"{stem}{(i + 1) % n}"
    a = _action_from_faces(C, fm, n)
    problems = check_automorphism(C, pairing, a)
    if problems:
        raise SymmetryError(f"shift is not an automorphism: {problems[:3]}")
    return a


@dataclass
class RhoQuotient:
    complex: QuotientComplex
    presentation: CyclicPresentation | None
    sphere: PolygonalSphere
    pairing: FacePairing
    relators: list = field(default_factory=list)
    fixed_vertices: list = field(default_factory=list)
    vertex_orbits: int = 0
    face_orbits: int = 0

    def __iter__(self):
        return iter((self.complex, self.presentation))


def quotient_by_rho(C: PolygonalSphere, pairing: FacePairing, a: CyclicAction,
                    expected: CyclicPresentation | None = None) -> RhoQuotient:
    """Orbit sphere with the induced pairing, its quotient and read-off presentation."""
    problems = check_automorphism(C, pairing, a)
    if problems:
        raise SymmetryError(f"not an automorphism: {problems[:3]}")
    v_orbits = a.vertex_orbits()
    f_orbits = a.face_orbits()
    fixed = sorted(a.fixed_vertices())
    if a.order == 1:
        Q = quotient(C, pairing)
        reading = read_presentation(C, pairing, expected, Q)
        return RhoQuotient(Q, reading.presentation, C, pairing, reading.relators, fixed, len(v_orbits), len(f_orbits))
    name = {}
    for orb in v_orbits:
        label = orb[0] if len(orb) == 1 else f"[{orb[0]}]"
        for v in orb:
            name[v] = label
    rep = {}
    for orb in f_orbits:
        for f in orb:
            rep[f] = orb[0]
    faces = []
    for orb in f_orbits:
        f = C.face(orb[0])
        faces.append(Face(f.name, tuple(name[v] for v in f.vertices)))
    pairs = []
    for orb in f_orbits:
        p = pairing.pair_of(orb[0])
        if p.source == orb[0]:
            if rep[p.target] != p.target:
                raise SymmetryError("pair partners are not orbit representatives together")
            pairs.append(Pair(p.source, p.target, p.offset, p.reversing, p.name))
    sphere = PolygonalSphere(tuple(sorted(set(name.values()))), tuple(faces))
    report = validate_sphere(sphere)
    if not report.ok:
        raise SymmetryError(f"orbit sphere is invalid: {report.problems[:3]}")
    orbit_pairing = FacePairing(tuple(pairs))
    Q = quotient(sphere, orbit_pairing)
    reading = read_presentation(sphere, orbit_pairing, None, Q)
    return RhoQuotient(Q, reading.presentation, sphere, orbit_pairing, reading.relators, fixed,
                       len(v_orbits), len(f_orbits))


def quotient_homology(family: str, n: int, trivial: bool = False) -> AbelianGroup:
    """H_1 of the quotient presentation; ``trivial`` uses the identity action."""
    (C, pairing), expected = family_complex(family, n)
    a = CyclicAction.identity(C) if trivial else rho(n, family)
    res = quotient_by_rho(C, pairing, a, expected)
    return relators_abelianization(res.relators, len(res.complex.edge_classes))
