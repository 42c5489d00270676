"""Cyclic presentations G_n(w), the named families, and halving rewrites.

All generators are 0-indexed.  A family relation written with 1-indexed
generators is translated by subtracting one from every index.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .words import (
    CyclicWord,
    Letter,
    WordError,
    concat,
    cyclic_class,
    cyclic_reduce,
    format_word,
    invert,
    parse_word,
    reindex,
    rotate,
    shift,
    substitute,
    word,
)


class PresentationError(ValueError):
    pass


class InconsistentElimination(PresentationError):
    """The proposed generator elimination is not a valid Tietze move."""


@dataclass(frozen=True)
class CyclicPresentation:
    n: int
    w: CyclicWord

    def __post_init__(self):
        if self.w.modulus != self.n:
            raise PresentationError(f"defining word has modulus {self.w.modulus}, expected {self.n}")
        if not self.w.letters:
            raise PresentationError("defining word is empty")
        if not self.w.is_cyclically_reduced():
            raise PresentationError(f"defining word {self.w} is not cyclically reduced")

    def __str__(self):
        return format_presentation(self)

    def relators(self) -> list[CyclicWord]:
        return relators(self)


def relators(P: CyclicPresentation) -> list[CyclicWord]:
    """The relators w, eta(w), ..., eta^(n-1)(w)."""
    return [shift(P.w, i) for i in range(P.n)]


def cyclic(n: int, letters: Sequence[tuple[int, int]]) -> CyclicPresentation:
    """G_n of the word given by ``letters`` (indices taken mod n, then reduced)."""
    w = cyclic_reduce(word(letters, n))
    if not w.letters:
        raise PresentationError("defining word reduces to the empty word")
    return CyclicPresentation(n, w)


def _positive(indices):
    return [(i, 1) for i in indices]


def _negative(indices):
    # inverse of the product x_{i1} x_{i2} ...
    return [(i, -1) for i in reversed(list(indices))]


def _check(cond, msg):
    if not cond:
        raise PresentationError(msg)


def fibonacci(r: int, m: int) -> CyclicPresentation:
    """F(r, m): x_i x_(i+1) ... x_(i+r-1) = x_(i+r)."""
    return fibonacci_F(r, m, 1)


def fibonacci_F(r: int, m: int, k: int) -> CyclicPresentation:
    """Generalised Fibonacci F(r, m, k): x_i ... x_(i+r-1) = x_(i+r-1+k)."""
    _check(r >= 2 and m >= 3 and k >= 1, f"need r >= 2, m >= 3, k >= 1; got r={r}, m={m}, k={k}")
    return cyclic(m, _positive(range(r)) + _negative([r - 1 + k]))


def fibonacci_H(r: int, m: int, k: int) -> CyclicPresentation:
    """H(r, m, k): x_i ... x_(i+r-1) = x_(i+r) ... x_(i+r-1+k)."""
    _check(r >= 2 and m >= 3 and k >= 1, f"need r >= 2, m >= 3, k >= 1; got r={r}, m={m}, k={k}")
    return cyclic(m, _positive(range(r)) + _negative(range(r, r + k)))


def sieradski(m: int) -> CyclicPresentation:
    """S(m) = S(m, 3, 2): x_i x_(i+2) = x_(i+1)."""
    return sieradski_q2(m, 1)


def sieradski_q2(m: int, d: int) -> CyclicPresentation:
    """S(m, 2d+1, 2): x_i x_(i+2) ... x_(i+2d) = x_(i+1) x_(i+3) ... x_(i+2d-1)."""
    _check(m >= 2 and d >= 1, f"need m >= 2, d >= 1; got m={m}, d={d}")
    return cyclic(m, _positive(range(0, 2 * d + 1, 2)) + _negative(range(1, 2 * d, 2)))


def johnson_mawdesley(n: int, m: int, k: int) -> CyclicPresentation:
    """G_n(m, k): x_i x_(i+m) = x_(i+k)."""
    _check(n >= 2 and m >= 0 and k >= 0, f"bad Johnson-Mawdesley parameters n={n}, m={m}, k={k}")
    return cyclic(n, [(0, 1), (m, 1), (k, -1)])


def neuwirth(m: int, l: int) -> CyclicPresentation:
    """Generalised Neuwirth group: x_i x_(i+1) ... x_(i+m-2) = x_(i+m-1)^l."""
    _check(m >= 3 and l >= 1, f"need m >= 3, l >= 1; got m={m}, l={l}")
    return cyclic(m, _positive(range(m - 1)) + [(m - 1, -1)] * l)


def _sieradski_general_word(m: int, p: int, q: int) -> CyclicPresentation:
    _check(q >= 2 and p > q and (p - 1) % q == 0, f"need p = 1 + d*q with d >= 1; got p={p}, q={q}")
    d = (p - 1) // q
    top = (q - 1) * d
    left = [q * j for j in range(top + 1)]
    right = [1 + q * j for j in range(top)]
    return cyclic(m, _positive(left) + _negative(right))


def sieradski_general(m: int, p: int, q: int) -> CyclicPresentation:
    """Experimental S(m, p, q) for arbitrary q, read literally from the printed relation.

    The printed index pattern is ambiguous for q > 2, so the result is only
    returned when its first homology order matches the order of H_1 of the
    m-fold branched cover of T(p, q).  Otherwise PresentationError is raised.
    For q = 2 this agrees with :func:`sieradski_q2`.
    """
    from .alexander import branched_cover_order, torus_alexander
    from .homology import abelianization

    P = _sieradski_general_word(m, p, q)
    got = abelianization(P).order()
    want = branched_cover_order(torus_alexander(p, q), m)
    if got != want:
        raise PresentationError(
            f"S({m},{p},{q}) literal relator fails the homology check: |H1| = {got}, covering order = {want}")
    return P


# -- text format ----------------------------------------------------------

def format_presentation(P: CyclicPresentation) -> str:
    return f"G({P.n}; {format_word(P.w)})"


_PRES = re.compile(r"^\s*G\s*\(\s*(\d+)\s*;(.*)\)\s*$")


def parse_presentation(text: str) -> CyclicPresentation:
    m = _PRES.match(text)
    if not m:
        raise PresentationError(f"cannot parse presentation {text!r}; expected 'G(n; word)'")
    n = int(m.group(1))
    try:
        w = parse_word(m.group(2), n)
    except WordError as exc:
        raise PresentationError(str(exc)) from exc
    return CyclicPresentation(n, w)


# -- correspondences ------------------------------------------------------

@dataclass(frozen=True)
class GeneratorCorrespondence:
    source_n: int
    target_n: int
    map: tuple[int, ...]

    def __post_init__(self):
        if len(self.map) != self.source_n:
            raise PresentationError(f"correspondence has {len(self.map)} entries, expected {self.source_n}")
        if any(not 0 <= j < self.target_n for j in self.map):
            raise PresentationError("correspondence image out of range")
        if self.source_n == self.target_n and len(set(self.map)) != self.source_n:
            raise PresentationError("correspondence is not a bijection")

    @classmethod
    def affine(cls, n: int, a: int, b: int = 0) -> "GeneratorCorrespondence":
        """x_j -> a_(a*j + b mod n)."""
        return cls(n, n, tuple((a * j + b) % n for j in range(n)))


@dataclass
class CorrespondenceReport:
    ok: bool
    matches: list[tuple[int, int | None]]
    images: list[CyclicWord]

    def __bool__(self):
        return self.ok


def check_correspondence(P: CyclicPresentation, Q: CyclicPresentation,
                         c: GeneratorCorrespondence) -> CorrespondenceReport:
    """Does ``c`` carry the relators of P onto those of Q (up to rotation and inversion)?"""
    if not (P.n == c.source_n and Q.n == c.target_n):
        raise PresentationError("correspondence dimensions do not fit the presentations")
    images_map = {j: CyclicWord((Letter(c.map[j], 1),), Q.n) for j in range(P.n)}
    images = [cyclic_reduce(substitute(r, images_map)) for r in relators(P)]
    pool: dict[CyclicWord, list[int]] = {}
    for idx, r in enumerate(relators(Q)):
        pool.setdefault(cyclic_class(r), []).append(idx)
    matches = []
    ok = True
    for i, img in enumerate(images):
        bucket = pool.get(cyclic_class(img))
        if bucket:
            matches.append((i, bucket.pop(0)))
        else:
            matches.append((i, None))
            ok = False
    return CorrespondenceReport(ok, matches, images)


# -- relabelling search ---------------------------------------------------

def _variants(w: CyclicWord):
    seen = set()
    for base in (w, invert(w)):
        for k in range(max(len(base), 1)):
            v = rotate(base, k)
            if v not in seen:
                seen.add(v)
                yield v


def match_relabeling(found: Sequence[CyclicWord], expected: Sequence[CyclicWord]):
    """Find generator renaming and orientation flips carrying ``found`` onto ``expected``.

    ``found`` and ``expected`` are relator lists, possibly over different
    generator sets of equal size.  Returns ``{g: (h, sign)}`` meaning
    ``x_g -> x_h^sign``, chosen so that the renamed relators equal the
    expected ones as a multiset up to rotation and inversion, or ``None``.
    """
    if len(found) != len(expected):
        return None
    if found and found[0].modulus != expected[0].modulus:
        return None
    order = sorted(range(len(found)), key=lambda i: -len(found[i]))
    used = [False] * len(expected)

    def unify(r, target, fwd, back):
        fwd, back = dict(fwd), dict(back)
        for (g, e), (h, t) in zip(r.letters, target.letters):
            sign = e * t
            if g in fwd:
                if fwd[g] != (h, sign):
                    return None
            elif h in back:
                return None
            else:
                fwd[g] = (h, sign)
                back[h] = g
        return fwd, back

    def rec(pos, fwd, back):
        if pos == len(order):
            return fwd
        r = found[order[pos]]
        for j, e in enumerate(expected):
            if used[j] or len(e) != len(r):
                continue
            used[j] = True
            for v in _variants(e):
                nxt = unify(r, v, fwd, back)
                if nxt is not None:
                    out = rec(pos + 1, *nxt)
                    if out is not None:
                        return out
            used[j] = False
        return None

    return rec(0, {}, {})


# -- halving --------------------------------------------------------------

@dataclass
class Elimination:
    presentation: CyclicPresentation
    trace: list[str] = field(default_factory=list)
    images: list[CyclicWord] = field(default_factory=list)
    definitions: list[CyclicWord] = field(default_factory=list)


def odd_images_from(template: Sequence[tuple[int, int]], n2: int) -> Callable[[int], CyclicWord]:
    """Shift-equivariant rule: x_(2j+1) -> shift(template, 2j) over 2n generators.

    ``template`` is the image of x_1, written with (possibly negative)
    generator offsets.
    """
    base = word(template, n2)

    def image(j: int) -> CyclicWord:
        return shift(base, 2 * j)

    return image


def _is_consequence(d: CyclicWord, rels: list[CyclicWord], depth: int) -> str | None:
    """Certify that relation ``d`` follows from ``rels`` by at most ``depth`` subword rewrites.

    A rewrite replaces an occurrence of ``u`` in a cyclic permutation of a
    relator by ``v`` where ``u v^-1`` is a cyclic permutation of a relator
    or its inverse.  Returns a description of the derivation or None.
    """
    target = cyclic_class(d)
    gens = {g for g, _ in d.letters}
    local = [r for r in rels if gens & {g for g, _ in r.letters}]
    known = {cyclic_class(r): f"relator {format_word(r)}" for r in local}
    if target in known:
        return known[target]
    splits: dict[Letter, list] = {}
    for s in local:
        for v in _variants(s):
            for cut in range(1, len(v)):
                u = v.letters[:cut]
                rest = CyclicWord(v.letters[cut:], v.modulus)
                splits.setdefault(u[0], []).append((u, invert(rest), s))
    frontier = dict(known)
    for _ in range(depth):
        nxt = {}
        for cls, why in frontier.items():
            for rot in _variants(cls):
                letters = rot.letters
                for u, v, s in splits.get(letters[0], ()):
                    lu = len(u)
                    if lu > len(letters) or letters[:lu] != u:
                        continue
                    new = cyclic_reduce(concat(v, CyclicWord(letters[lu:], rot.modulus)))
                    if not new.letters:
                        continue
                    c = cyclic_class(new)
                    if c not in nxt and c not in frontier:
                        nxt[c] = f"{why}; replace {format_word(CyclicWord(u, rot.modulus))} by {format_word(v)} using {format_word(s)}"
        if target in nxt:
            return nxt[target]
        frontier.update(nxt)
    return None


def eliminate_even_odd(P: CyclicPresentation, odd_image, target: CyclicWord | None = None,
                       max_rewrites: int = 1) -> Elimination:
    """Eliminate the odd generators of a 2n-cyclic presentation.

    ``odd_image(j)`` is the word in even generators assigned to x_(2j+1).
    Nothing is trusted:

    * each definition x_(2j+1) = odd_image(j) must be a relator of P up to
      rotation and inversion, or follow from relators by ``max_rewrites``
      subword rewrites;
    * after substitution every relator must become empty or equal (up to
      rotation and inversion) to a shift of the single surviving word.

    The surviving word is reindexed by y_j = x_(2j).  If ``target`` is
    given the result is G_n(target) after checking the surviving family
    equals the target family.
    """
    if P.n % 2:
        raise PresentationError(f"need an even number of generators, got {P.n}")
    n2, n = P.n, P.n // 2
    rels = relators(P)
    images = {2 * j: CyclicWord((Letter(2 * j, 1),), n2) for j in range(n)}
    trace = [f"start: G({n2}; {format_word(P.w)})"]
    definitions = []
    for j in range(n):
        img = odd_image(j)
        if any(g % 2 for g, _ in img.letters):
            raise InconsistentElimination(f"image of x{2 * j + 1} uses odd generators: {img}")
        images[2 * j + 1] = img
        d = cyclic_reduce(concat(img, CyclicWord((Letter(2 * j + 1, -1),), n2)))
        why = _is_consequence(d, rels, max_rewrites)
        if why is None:
            raise InconsistentElimination(f"x{2 * j + 1} = {img} does not follow from the relators")
        definitions.append(d)
        trace.append(f"x{2 * j + 1} = {format_word(img)}  [{why}]")

    halve = {2 * j: j for j in range(n)}
    out_images = []
    survivors = []
    for i, r in enumerate(rels):
        img = cyclic_reduce(substitute(r, images))
        out_images.append(img)
        if img.letters:
            y = cyclic_reduce(reindex(img, halve, n))
            survivors.append(y)
            trace.append(f"relator {i}: {format_word(r)} -> {format_word(y)} (in y)")
        else:
            trace.append(f"relator {i}: {format_word(r)} -> 1")
    if not survivors:
        raise InconsistentElimination("every relator became trivial")
    w_new = target if target is not None else survivors[0]
    if w_new.modulus != n:
        raise PresentationError(f"target word has modulus {w_new.modulus}, expected {n}")
    family = {cyclic_class(shift(w_new, j)) for j in range(n)}
    stray = [y for y in survivors if cyclic_class(y) not in family]
    if stray:
        raise InconsistentElimination(f"surviving relator {stray[0]} is not a shift of {w_new}")
    hit = {cyclic_class(y) for y in survivors}
    if hit != family:
        raise InconsistentElimination("surviving relators do not cover every shift of the new word")
    result = CyclicPresentation(n, cyclic_reduce(w_new))
    trace.append(f"result: {format_presentation(result)}")
    return Elimination(result, trace, out_images, definitions)


# Odd-generator rules used in the halving chains, as images of x_1 with
# generator offsets relative to x_1's even neighbours.
SIERADSKI_3_2_RULE = [(0, 1), (2, 1)]                        # x_(2j+1) = x_2j x_(2j+2)
FIBONACCI_RULE = [(0, -1), (2, 1)]                           # x_(2j+1) = x_2j^-1 x_(2j+2)
SIERADSKI_5_2_RULE = [(0, -1), (-2, -1), (-4, -1), (-2, 1), (0, 1)]
# x_(2j+1) = (x_(2j-4) x_(2j-2) x_2j)^-1 x_(2j-2) x_2j


HALF_Q3_LETTERS = [(0, 1), (1, 1), (1, 1), (2, 1), (1, -1)]
FIGURE_EIGHT_LETTERS = [(0, -1), (1, 1), (1, 1), (2, -1), (1, 1)]
HALF_Q5_LETTERS = [(0, 1), (1, 1), (2, 1), (2, 1), (3, 1), (4, 1), (3, -1), (2, -1),
                   (1, 1), (2, 1), (3, 1), (2, -1), (1, -1)]


def half_q3(n: int) -> CyclicPresentation:
    """G_n(x0 x1^2 x2 x1^-1)."""
    return cyclic(n, HALF_Q3_LETTERS)


def figure_eight(n: int) -> CyclicPresentation:
    """G_n(y0^-1 y1^2 y2^-1 y1), the n-generator form of F(2, 2n)."""
    return cyclic(n, FIGURE_EIGHT_LETTERS)


def half_q5(n: int) -> CyclicPresentation:
    """G_n(x0 x1 x2 x2 x3 x4 x3^-1 x2^-1 x1 x2 x3 x2^-1 x1^-1)."""
    return cyclic(n, HALF_Q5_LETTERS)


HALVINGS = {
    # name: (2n-presentation builder, odd rule, n-presentation builder)
    "sieradski-3-2": (lambda n: sieradski_q2(2 * n, 1), SIERADSKI_3_2_RULE, half_q3),
    "fibonacci": (lambda n: fibonacci(2, 2 * n) if 2 * n >= 3 else cyclic(2 * n, [(0, 1), (1, 1), (2, -1)]),
                  FIBONACCI_RULE, figure_eight),
    "sieradski-5-2": (lambda n: sieradski_q2(2 * n, 2), SIERADSKI_5_2_RULE, half_q5),
}


def halve(family: str, n: int) -> Elimination:
    """Run one of the named halving chains at n and check it lands on the expected word."""
    try:
        big, rule, small = HALVINGS[family]
    except KeyError:
        raise PresentationError(f"unknown halving family {family!r}; choose from {sorted(HALVINGS)}") from None
    P = big(n)
    expected = small(n)
    return eliminate_even_odd(P, odd_images_from(rule, 2 * n), target=expected.w)
