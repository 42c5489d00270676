"""Brieskorn parameters B(p,q,r), their geometry, and torus links as braid closures."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction


class Geometry(enum.Enum):
    SPHERICAL = "SPHERICAL"
    NILPOTENT = "NILPOTENT"
    SL2R_TILDE = "SL2R_TILDE"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class BrieskornParams:
    p: int
    q: int
    r: int

    def __post_init__(self):
        if min(self.p, self.q, self.r) < 2:
            raise ValueError(f"Brieskorn parameters must be >= 2, got {(self.p, self.q, self.r)}")


@dataclass(frozen=True)
class BraidWord:
    """Letters are signed generator indices: +i for sigma_i, -i for its inverse."""

    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError("a braid needs at least 2 strands")
        for s in self.letters:
            if s == 0 or abs(s) >= self.strands:
                raise ValueError(f"generator index {s} out of range for {self.strands} strands")


def geometry_type(B: BrieskornParams) -> Geometry:
    total = Fraction(1, B.p) + Fraction(1, B.q) + Fraction(1, B.r)
    if total > 1:
        return Geometry.SPHERICAL
    if total == 1:
        return Geometry.NILPOTENT
    return Geometry.SL2R_TILDE


def torus_braid(p: int, q: int) -> BraidWord:
    """(sigma_1 ... sigma_(p-1))^q on p strands."""
    if p < 2 or q < 1:
        raise ValueError("need p >= 2 and q >= 1")
    return BraidWord(p, tuple(range(1, p)) * q)


def braid_permutation(b: BraidWord) -> tuple[int, ...]:
    """Underlying permutation: strand starting at position i ends at perm[i]."""
    pos = [0] * b.strands         # pos[strand] = final position
    at = list(range(b.strands))   # at[position] = strand
    for s in b.letters:
        i = abs(s) - 1
        at[i], at[i + 1] = at[i + 1], at[i]
    for p_, strand in enumerate(at):
        pos[strand] = p_
    return tuple(pos)


def cycle_count(perm) -> int:
    seen = [False] * len(perm)
    count = 0
    for i in range(len(perm)):
        if not seen[i]:
            count += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return count


def torus_link_components(p: int, q: int) -> int:
    """Components of the closure of the torus braid, counted from its permutation."""
    return cycle_count(braid_permutation(torus_braid(p, q)))


@dataclass(frozen=True)
class CoverStatement:
    degree: int
    link: tuple[int, int]

    def __str__(self):
        return f"{self.degree}-fold cover of S^3 branched over T({self.link[0]},{self.link[1]})"


def covering_triple(B: BrieskornParams) -> list[CoverStatement]:
    p, q, r = B.p, B.q, B.r
    return [CoverStatement(r, (p, q)), CoverStatement(q, (r, p)), CoverStatement(p, (q, r))]


def cover_homology_order(B: BrieskornParams):
    """|H_1| via the r-fold cover over T(p,q); requires gcd(p,q) = 1."""
    from .alexander import branched_cover_order, torus_alexander

    return branched_cover_order(torus_alexander(B.p, B.q), B.r)
