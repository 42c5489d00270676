"""Batch verification behind ``verify-all``.

Every check returns a Verdict; a FAIL carries a counterexample payload.
Builders can be swapped out to inject faults.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import gcd, prod
from typing import Callable

from . import alexander as alx
from . import homology as hom
from . import presentations as pres
from .brieskorn import BrieskornParams, Geometry, geometry_type, torus_link_components
from .complexes import build_P, build_Q, find_trace, is_spine, quotient, read_presentation, validate_sphere
from .words import free_reduce, parse_word, shift

X3_TRACE_P4 = [("N", "u0"), ("v2", "S"), ("w2", "u3"), ("u3", "v3"), ("v3", "w3")]

Q4_RELATIONS = [
    "x0 x1 x2 x2 x3 x0 x3^-1 x2^-1 x1 x2 x3 x2^-1 x1^-1",
    "x1 x2 x3 x3 x0 x1 x0^-1 x3^-1 x2 x3 x0 x3^-1 x2^-1",
    "x2 x3 x0 x0 x1 x2 x1^-1 x0^-1 x3 x0 x1 x0^-1 x3^-1",
    "x3 x0 x1 x1 x2 x3 x2^-1 x1^-1 x0 x1 x2 x1^-1 x0^-1",
]


@dataclass
class Verdict:
    check: str
    status: str
    detail: str = ""
    counterexample: dict | None = None

    def as_dict(self):
        return {"check": self.check, "status": self.status, "detail": self.detail,
                "counterexample": self.counterexample}


@dataclass
class _Collector:
    name: str
    failures: list = field(default_factory=list)

    def fail(self, **payload):
        self.failures.append(payload)

    def verdict(self, ok_detail: str) -> Verdict:
        if self.failures:
            return Verdict(self.name, "FAIL", f"{len(self.failures)} failure(s)", self.failures[0])
        return Verdict(self.name, "PASS", ok_detail)


def fmt_order(x) -> str:
    return "INF" if x == hom.INFINITE else str(x)


def check_family_spine(name, builder, expected_of, ns, length) -> Verdict:
    col = _Collector(name)
    for n in ns:
        try:
            C, P = builder(n)
        except Exception as exc:  # construction failure is a finding, not a crash
            col.fail(n=n, error=str(exc))
            continue
        report = validate_sphere(C)
        if not report.ok:
            col.fail(n=n, sphere=report.problems[:3])
            continue
        Q = quotient(C, P)
        bad = [ec.edges for ec in Q.edge_classes if len(ec) != length]
        if Q.counts != (1, n, n) or bad:
            col.fail(n=n, counts=list(Q.counts), edge_class=bad[0] if bad else None)
            continue
        cert = is_spine(C, P, Q)
        if not cert:
            col.fail(n=n, spine=cert.problems)
            continue
        if len(Q.vertex_classes) == 1:
            rd = read_presentation(C, P, expected_of(n), Q)
            if not rd.matches:
                col.fail(n=n, relators=[str(r) for r in rd.relators])
    return col.verdict(f"n = {ns[0]}..{ns[-1]}: (1, n, n), chi = 0, presentation matches" if ns else "empty range")


def check_q4_words(builder) -> Verdict:
    col = _Collector("Q4 face words")
    C, P = builder(4)
    Q = quotient(C, P)
    rd = read_presentation(C, P, pres.half_q5(4), Q)
    if not rd.matches:
        col.fail(relators=[str(r) for r in rd.relators])
        return col.verdict("")
    for i, (got, text) in enumerate(zip(rd.renamed(), Q4_RELATIONS)):
        if got != parse_word(text, 4):
            col.fail(face=i, got=str(got), want=text)
    return col.verdict("four face words equal the printed relations")


def check_x3_trace(builder) -> Verdict:
    col = _Collector("x3 edge trace")
    C, P = builder(4)
    Q = quotient(C, P)
    idx = find_trace(Q, X3_TRACE_P4)
    if idx is None:
        col.fail(classes=[ec.edges for ec in Q.edge_classes])
    return col.verdict(f"edge class {idx} reproduces the trace")


def check_homology_ladder(max_m: int) -> Verdict:
    col = _Collector("homology ladder")
    d1 = alx.torus_alexander(3, 2)
    d2 = alx.torus_alexander(5, 2)
    for m in range(2, max_m + 1):
        a = hom.abelianization(pres.sieradski_q2(m, 1)).order()
        b = alx.branched_cover_order(d1, m)
        if a != b:
            col.fail(family="S(m,3,2)", m=m, snf=fmt_order(a), resultant=fmt_order(b))
    for m in range(2, min(max_m, 10) + 1):
        a = hom.abelianization(pres.sieradski_q2(m, 2)).order()
        b = alx.branched_cover_order(d2, m)
        if a != b:
            col.fail(family="S(m,5,2)", m=m, snf=fmt_order(a), resultant=fmt_order(b))
    anchors = {4: 3, 5: 1, 6: hom.INFINITE, 7: 1}
    for m, want in anchors.items():
        got = hom.abelianization(pres.sieradski(m)).order()
        if got != want:
            col.fail(anchor=m, got=fmt_order(got), want=fmt_order(want))
    if hom.abelianization(pres.sieradski_q2(2, 2)).order() != 5:
        col.fail(anchor="S(2,5,2)", want=5)
    return col.verdict(f"SNF and resultant agree for m <= {max_m}; anchors hold")


def check_halvings(ns) -> Verdict:
    col = _Collector("halving identities")
    for fam in pres.HALVINGS:
        for n in ns:
            try:
                e = pres.halve(fam, n)
            except pres.PresentationError as exc:
                col.fail(family=fam, n=n, error=str(exc))
                continue
            _, _, small = pres.HALVINGS[fam]
            if e.presentation != small(n):
                col.fail(family=fam, n=n, got=str(e.presentation))
    return col.verdict(f"three chains, n = {ns[0]}..{ns[-1]}" if ns else "empty range")


def check_s852() -> Verdict:
    col = _Collector("S(8,5,2) three-way")
    a = hom.abelianization(pres.half_q5(4)).order()
    b = hom.seifert_homology(hom.SeifertData(((4, 1), (5, 2), (5, 2), (1, -1)))).order()
    c = alx.branched_cover_order(alx.torus_alexander(5, 2), 8)
    if not a == b == c == 5:
        col.fail(snf=fmt_order(a), seifert=fmt_order(b), resultant=fmt_order(c))
    return col.verdict("all three routes give 5")


def check_lens(p_ns, q_ns) -> Verdict:
    from .symmetry import quotient_by_rho, quotient_homology, rho, family_complex

    col = _Collector("quotient lens homology")
    for fam, ns, want in (("P", p_ns, 3), ("Q", q_ns, 5)):
        for n in ns:
            H = quotient_homology(fam, n)
            (C, P), _ = family_complex(fam, n)
            res = quotient_by_rho(C, P, rho(n, fam))
            rel = res.relators
            sums = [sum(r.exponent_sums()) for r in rel]
            if str(H) != f"Z/{want}" or len(rel) != 1 or abs(sums[0]) != want:
                col.fail(family=fam, n=n, homology=str(H), relators=[str(r) for r in rel])
    return col.verdict("Z/3 for P, Z/5 for Q, one relator each")


def check_correspondences(ks) -> Verdict:
    col = _Collector("isomorphism correspondences")
    for k in ks:
        pairs = [
            ("F(2,2k+1,k) -> S(2k+1)", pres.fibonacci_F(2, 2 * k + 1, k), pres.sieradski(2 * k + 1), 2 * k + 1),
            ("H(k,2k-1,k-1) -> S(2k-1,2k-1,2)", pres.fibonacci_H(k, 2 * k - 1, k - 1),
             pres.sieradski_q2(2 * k - 1, k - 1), 2 * k - 1),
        ]
        for label, A, B, m in pairs:
            c = pres.GeneratorCorrespondence.affine(m, 2, 0)
            if not pres.check_correspondence(A, B, c):
                col.fail(pair=label, k=k)
            elif hom.abelianization(A) != hom.abelianization(B):
                col.fail(pair=label, k=k, homology=[str(hom.abelianization(A)), str(hom.abelianization(B))])
    return col.verdict(f"k = {ks[0]}..{ks[-1]}")


def check_word_polynomial() -> Verdict:
    col = _Collector("word polynomial anchor")
    got = alx.word_polynomial(pres.figure_eight(3).w)
    if got != alx.IntPolynomial([-1, 3, -1]):
        col.fail(got=str(got))
    return col.verdict(str(got))


def check_brieskorn(top: int = 12) -> Verdict:
    col = _Collector("Brieskorn facts")
    for p in range(2, top + 1):
        for q in range(2, top + 1):
            if torus_link_components(p, q) != gcd(p, q):
                col.fail(p=p, q=q, braid=torus_link_components(p, q))
    anchors = {(2, 3, 5): Geometry.SPHERICAL, (2, 3, 6): Geometry.NILPOTENT, (2, 3, 7): Geometry.SL2R_TILDE}
    for t, g in anchors.items():
        if geometry_type(BrieskornParams(*t)) is not g:
            col.fail(params=list(t))
    return col.verdict(f"braid cycles = gcd for p, q <= {top}")


def check_seifert() -> Verdict:
    col = _Collector("Seifert cross-check")
    for m in range(3, 7):
        for l in range(1, 4):
            a = hom.seifert_homology(hom.neuwirth_seifert(m, l))
            b = hom.abelianization(pres.neuwirth(m, l))
            if a != b:
                col.fail(m=m, l=l, seifert=str(a), presentation=str(b))
    return col.verdict("m = 3..6, l = 1..3")


def _random_word(rng, n, length):
    return free_reduce([(rng.randrange(n), rng.choice((1, -1))) for _ in range(length)], n)


def check_properties(seed: int = 0, samples: int = 50) -> Verdict:
    """Seeded sample of the property suite (the full suite lives in the tests)."""
    col = _Collector("property sample")
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randrange(1, 9)
        w = _random_word(rng, n, rng.randrange(0, 12))
        if free_reduce(w.letters, n) != w or shift(shift(w, 3), -3) != w:
            col.fail(word=str(w), n=n)
        if w.letters:
            P = pres.CyclicPresentation(n, w) if w.is_cyclically_reduced() else None
            if P is not None:
                det = abs(hom.determinant(hom.relation_matrix(P)))
                res = abs(alx.resultant(alx.word_polynomial(w), alx.t_power_minus_one(n)))
                if det != res:
                    col.fail(word=str(w), n=n, det=det, res=res)
    for size in range(1, 6):
        M = [[rng.randrange(-5, 6) for _ in range(size)] for _ in range(size)]
        d, _ = hom.smith_normal_form(M)
        nz = [x for x in d if x]
        if any(b % a for a, b in zip(nz, nz[1:])) or (d and abs(hom.determinant(M)) != (0 if 0 in d else prod(d))):
            col.fail(matrix=M, diagonal=d)
    return col.verdict(f"{samples} random words, SNF sizes 1..5")


def verify_all(max_n: int = 8, build_p: Callable = build_P, build_q: Callable = build_Q) -> list[Verdict]:
    top = max(max_n, 2)
    ns = list(range(2, top + 1))
    p_ns = [n for n in ns if n <= 12]
    q_ns = [n for n in ns if n <= 8]
    return [
        check_family_spine("P_n spine", build_p, pres.half_q3, p_ns, 5),
        check_family_spine("Q_n spine", build_q, pres.half_q5, q_ns, 13),
        check_q4_words(build_q),
        check_x3_trace(build_p),
        check_homology_ladder(max(top, 7)),
        check_halvings(ns),
        check_s852(),
        check_lens(p_ns, q_ns),
        check_correspondences(list(range(2, 7))),
        check_word_polynomial(),
        check_brieskorn(),
        check_seifert(),
        check_properties(),
    ]
