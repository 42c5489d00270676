"""Command-line front end.

Exit codes: 0 when every check passes, 1 when any check fails, 2 for
usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from math import gcd

from . import alexander as alx
from . import homology as hom
from . import presentations as pres
from .brieskorn import BrieskornParams, cover_homology_order, geometry_type
from .complexes import (
    ComplexError,
    ConstructionError,
    build_P,
    build_Q,
    emit_complex,
    is_spine,
    parse_complex,
    quotient,
    read_presentation,
    validate_sphere,
)
from .verify import Verdict, fmt_order, verify_all
from .words import WordError


class UsageError(Exception):
    pass


@dataclass
class Report:
    command: str
    params: dict
    records: list[dict] = field(default_factory=list)
    verdicts: list[Verdict] = field(default_factory=list)
    lines: list[str] = field(default_factory=list)

    def verdict(self, check, ok, detail="", counterexample=None):
        status = "PASS" if ok else "FAIL"
        if not ok and counterexample is None:
            counterexample = {"detail": detail}
        self.verdicts.append(Verdict(check, status, detail, counterexample))

    @property
    def failed(self) -> bool:
        return any(v.status == "FAIL" for v in self.verdicts)

    def as_dict(self):
        return {"command": self.command, "params": self.params, "records": self.records,
                "verdicts": [v.as_dict() for v in self.verdicts]}


FAMILIES = {
    "fibonacci": (pres.fibonacci, 2),
    "fibonacci-F": (pres.fibonacci_F, 3),
    "fibonacci-H": (pres.fibonacci_H, 3),
    "sieradski": (pres.sieradski, 1),
    "sieradski-q2": (pres.sieradski_q2, 2),
    "sieradski-general": (pres.sieradski_general, 3),
    "johnson-mawdesley": (pres.johnson_mawdesley, 3),
    "neuwirth": (pres.neuwirth, 2),
    "half-q3": (pres.half_q3, 1),
    "figure-eight": (pres.figure_eight, 1),
    "half-q5": (pres.half_q5, 1),
}


def _family(name: str, args: list[int]) -> pres.CyclicPresentation:
    if name not in FAMILIES:
        raise UsageError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")
    fn, arity = FAMILIES[name]
    if len(args) != arity:
        raise UsageError(f"family {name} takes {arity} integer argument(s), got {len(args)}")
    return fn(*args)


def cmd_family(a) -> Report:
    P = _family(a.name, a.args)
    r = Report("family", {"name": a.name, "args": a.args})
    text = pres.format_presentation(P)
    r.records.append({"presentation": text, "n": P.n, "word": str(P.w)})
    r.lines.append(text)
    return r


def cmd_abelianize(a) -> Report:
    P = pres.parse_presentation(a.presentation)
    A = hom.abelianization(P)
    r = Report("abelianize", {"presentation": pres.format_presentation(P)})
    r.records.append({"presentation": pres.format_presentation(P), "H1": str(A), "order": fmt_order(A.order())})
    r.lines.append(str(A))
    return r


def cmd_alexander(a) -> Report:
    r = Report("alexander", {"kind": a.kind, "args": a.args, "cover": a.cover})
    if a.kind == "torus":
        if len(a.args) != 2:
            raise UsageError("alexander torus takes P Q")
        p, q = (int(x) for x in a.args)
        delta = alx.torus_alexander(p, q)
        rec = {"knot": f"T({p},{q})", "polynomial": str(delta)}
    else:
        if len(a.args) != 1:
            raise UsageError("alexander word takes one presentation 'G(n; word)'")
        P = pres.parse_presentation(a.args[0])
        delta = alx.word_polynomial(P.w)
        rec = {"presentation": pres.format_presentation(P), "polynomial": str(delta)}
    r.lines.append(str(delta))
    if a.cover is not None:
        order = alx.branched_cover_order(delta, a.cover)
        rec["cover"] = a.cover
        rec["order"] = fmt_order(order)
        r.lines.append(f"|Res(D, t^{a.cover} - 1)| = {fmt_order(order)}")
    r.records.append(rec)
    return r


def _spine_summary(r: Report, C, P, expected=None):
    sphere = validate_sphere(C)
    r.verdict("sphere", sphere.ok, f"V={sphere.V} E={sphere.E} F={sphere.F}",
              None if sphere.ok else {"problems": sphere.problems[:5]})
    if not sphere.ok:
        return
    Q = quotient(C, P)
    cert = is_spine(C, P, Q)
    V, E, F = Q.counts
    rec = {"V": sphere.V, "E": sphere.E, "F": sphere.F, "Vq": V, "Eq": E, "Fq": F, "chi": cert.euler,
           "spine": cert.is_spine}
    r.lines.append(f"sphere: V={sphere.V} E={sphere.E} F={sphere.F}")
    r.lines.append(f"quotient: V={V} E={E} F={F} chi={cert.euler}")
    r.verdict("spine", cert.is_spine, f"chi={cert.euler}", None if cert else {"problems": cert.problems})
    if V == 1:
        rd = read_presentation(C, P, expected, Q)
        rec["relators"] = [str(w) for w in rd.relators]
        for w in rd.relators:
            r.lines.append(f"relator: {w}")
        if expected is not None:
            r.verdict("presentation", bool(rd.matches), pres.format_presentation(expected),
                      None if rd.matches else {"relators": rec["relators"]})
    r.records.append(rec)


def cmd_spine(a) -> Report:
    if a.check:
        with open(a.check) as fh:
            C, P = parse_complex(fh.read())
        r = Report("spine", {"check": a.check})
        _spine_summary(r, C, P)
        return r
    if not a.family or a.n is None:
        raise UsageError("spine needs --family P|Q and --n, or --check FILE")
    fam = a.family.upper()
    if fam == "P":
        C, P = build_P(a.n)
        expected = pres.half_q3(a.n)
    elif fam == "Q":
        C, P = build_Q(a.n)
        expected = pres.half_q5(a.n)
    else:
        raise UsageError("family must be P or Q")
    r = Report("spine", {"family": fam, "n": a.n})
    if a.emit:
        with open(a.emit, "w") as fh:
            fh.write(emit_complex(C, P))
        r.lines.append(f"wrote {a.emit}")
    _spine_summary(r, C, P, expected)
    return r


def cmd_quotient(a) -> Report:
    from .symmetry import family_complex, quotient_by_rho, rho

    fam = a.family.upper()
    (C, P), _ = family_complex(fam, a.n)
    act = rho(a.n, fam)
    res = quotient_by_rho(C, P, act)
    H = hom.relators_abelianization(res.relators, len(res.complex.edge_classes))
    words = [str(w) for w in res.relators]
    r = Report("quotient", {"family": fam, "n": a.n})
    r.records.append({"vertex_orbits": res.vertex_orbits, "face_orbits": res.face_orbits,
                      "fixed_vertices": res.fixed_vertices, "counts": list(res.complex.counts),
                      "relators": words, "H1": str(H)})
    r.lines += [f"vertex orbits: {res.vertex_orbits}, face orbits: {res.face_orbits}",
                f"fixed vertices: {' '.join(res.fixed_vertices)}",
                f"quotient cells: V={res.complex.counts[0]} E={res.complex.counts[1]} F={res.complex.counts[2]}",
                f"relator: {'; '.join(words)}",
                f"H1: {H}",
                "lens-space type is not determined beyond H1"]
    want = {"P": "Z/3", "Q": "Z/5"}[fam]
    r.verdict("quotient H1", str(H) == want, f"{H} (expected {want})")
    return r


def cmd_correspond(a) -> Report:
    k = a.k
    if a.kind == "fibonacci":
        A, B, m = pres.fibonacci_F(2, 2 * k + 1, k), pres.sieradski(2 * k + 1), 2 * k + 1
    else:
        A, B, m = pres.fibonacci_H(k, 2 * k - 1, k - 1), pres.sieradski_q2(2 * k - 1, k - 1), 2 * k - 1
    c = pres.GeneratorCorrespondence.affine(m, 2, 0)
    rep = pres.check_correspondence(A, B, c)
    r = Report("correspond", {"kind": a.kind, "k": k})
    HA, HB = hom.abelianization(A), hom.abelianization(B)
    r.records.append({"source": str(A), "target": str(B), "map": "x_j -> a_(2j)",
                      "images": [str(w) for w in rep.images], "H1": [str(HA), str(HB)]})
    r.lines += [f"{A}  ->  {B}", "x_j -> a_(2j mod m)", f"H1: {HA} / {HB}"]
    r.verdict("relators correspond", rep.ok, "", None if rep.ok else {"matches": rep.matches})
    r.verdict("abelianizations agree", HA == HB, f"{HA}")
    return r


def cmd_halve(a) -> Report:
    e = pres.halve(a.family, a.n)
    r = Report("halve", {"family": a.family, "n": a.n})
    r.records.append({"result": str(e.presentation), "trace": e.trace})
    r.lines += e.trace
    r.verdict("halving", True, str(e.presentation))
    return r


def cmd_table(a) -> Report:
    r = Report("table", {"kind": a.kind})
    if a.kind == "brieskorn":
        top = a.max
        r.params["max"] = top
        for p in range(2, top + 1):
            for q in range(2, top + 1):
                for rr in range(2, top + 1):
                    B = BrieskornParams(p, q, rr)
                    rec = {"p": p, "q": q, "r": rr, "geometry": str(geometry_type(B)),
                           "H1_order": fmt_order(cover_homology_order(B)) if gcd(p, q) == 1 else ""}
                    r.records.append(rec)
        r.lines = [f"({x['p']},{x['q']},{x['r']}), {x['geometry']}" + (f", {x['H1_order']}" if x["H1_order"] else "")
                   for x in r.records]
    elif a.kind == "sieradski-orders":
        p, q, top = a.p, a.q, a.max_m
        r.params.update({"p": p, "q": q, "max_m": top})
        delta = alx.torus_alexander(p, q)
        for m in range(2, top + 1):
            res = alx.branched_cover_order(delta, m)
            rec = {"m": m, "resultant": fmt_order(res)}
            try:
                P = pres.sieradski_q2(m, (p - 1) // 2) if q == 2 else pres.sieradski_general(m, p, q)
                snf = hom.abelianization(P).order()
                rec["snf"] = fmt_order(snf)
                r.verdict(f"m={m}", snf == res, f"{fmt_order(snf)} vs {fmt_order(res)}")
            except pres.PresentationError as exc:
                rec["snf"] = ""
                rec["note"] = str(exc)
            r.records.append(rec)
            r.lines.append(f"m={m} -> {rec['resultant']}")
    elif a.kind == "quotients":
        from .symmetry import quotient_homology

        top = a.max_n
        r.params["max_n"] = top
        for fam, limit, want in (("P", 12, "Z/3"), ("Q", 8, "Z/5")):
            for n in range(2, min(top, limit) + 1):
                H = str(quotient_homology(fam, n))
                r.records.append({"family": fam, "n": n, "H1": H})
                r.verdict(f"{fam} n={n}", H == want, H)
                r.lines.append(f"{fam} n={n} -> {H}")
    else:
        raise UsageError(f"unknown table {a.kind!r}")
    return r


def cmd_verify_all(a) -> Report:
    top = a.max_n_flag if a.max_n_flag is not None else a.max_n
    r = Report("verify-all", {"max_n": top})
    r.verdicts = verify_all(top)
    return r


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cycpres", description="Cyclic presentations, spines and homology checks")
    out = argparse.ArgumentParser(add_help=False)
    g = out.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_true", help="emit a JSON report")
    g.add_argument("--csv", action="store_true", help="emit records as CSV")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", parents=[out], help="expand a family to G(n; word)")
    p.add_argument("name")
    p.add_argument("args", nargs="*", type=int)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("abelianize", parents=[out], help="H1 of a presentation 'G(n; word)'")
    p.add_argument("presentation")
    p.set_defaults(func=cmd_abelianize)

    p = sub.add_parser("alexander", parents=[out], help="torus-knot or word polynomials and cover orders")
    p.add_argument("kind", choices=["torus", "word"])
    p.add_argument("args", nargs="+")
    p.add_argument("--cover", type=int)
    p.set_defaults(func=cmd_alexander)

    p = sub.add_parser("spine", parents=[out], help="build or check a face-paired sphere")
    p.add_argument("--family")
    p.add_argument("--n", type=int)
    p.add_argument("--emit", metavar="FILE")
    p.add_argument("--check", metavar="FILE")
    p.set_defaults(func=cmd_spine)

    p = sub.add_parser("quotient", parents=[out], help="quotient by the cyclic symmetry")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("correspond", parents=[out], help="check a generator correspondence")
    p.add_argument("--kind", choices=["fibonacci", "H"], default="fibonacci")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_correspond)

    p = sub.add_parser("halve", parents=[out], help="run a halving chain")
    p.add_argument("family", choices=sorted(pres.HALVINGS))
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_halve)

    p = sub.add_parser("table", parents=[out], help="homology and geometry tables")
    p.add_argument("kind", choices=["brieskorn", "sieradski-orders", "quotients"])
    p.add_argument("--max", type=int, default=12)
    p.add_argument("--p", type=int, default=3)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--max-m", type=int, default=12)
    p.add_argument("--max-n", type=int, default=12)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify-all", parents=[out], help="run the full verification suite")
    p.add_argument("max_n", nargs="?", type=int, default=12)
    p.add_argument("--max-n", dest="max_n_flag", type=int)
    p.set_defaults(func=cmd_verify_all)
    return ap


def render(r: Report, args) -> str:
    if args.json:
        return json.dumps(r.as_dict(), indent=2, sort_keys=False)
    if args.csv:
        buf = io.StringIO()
        rows = r.records or [v.as_dict() for v in r.verdicts]
        keys: list[str] = []
        for row in rows:
            for k in row:
                if k not in keys:
                    keys.append(k)
        w = csv.DictWriter(buf, fieldnames=keys, lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow({k: (json.dumps(v) if isinstance(v, (list, dict)) else v) for k, v in row.items()})
        return buf.getvalue().rstrip("\n")
    lines = list(r.lines)
    for v in r.verdicts:
        text = f"{v.status} {v.check}" + (f": {v.detail}" if v.detail else "")
        if v.status == "FAIL" and v.counterexample:
            text += f"\n    counterexample: {json.dumps(v.counterexample)}"
        lines.append(text)
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report = args.func(args)
    except (UsageError, WordError, pres.PresentationError, ComplexError, alx.PolynomialError,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConstructionError as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return 1
    print(render(report, args))
    return 1 if report.failed else 0


if __name__ == "__main__":
    sys.exit(main())
