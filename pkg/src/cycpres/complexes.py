"""Face-paired polygonal spheres, their quotients, and the families P_n, Q_n.

A face is a cyclic vertex sequence; dart ``(f, k)`` runs from
``f[k]`` to ``f[k+1]``.  All faces of a sphere are stored with one
common orientation, so every directed vertex pair occurs exactly once
and its reverse occurs exactly once.

A pair with offset ``o`` sends ``F[k]`` to ``G[(o - k) mod L]`` when it
reverses orientation (the manifold case) and to ``G[(o + k) mod L]``
when it preserves it.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
import re
from dataclasses import dataclass, field

from .presentations import CyclicPresentation, match_relabeling, relators
from .words import CyclicWord, cyclic_equal, free_reduce, shift


class ComplexError(ValueError):
    """Invalid sphere, pairing, or an unsupported read-off."""


class ConstructionError(RuntimeError):
    """A builder could not produce a valid complex."""


# -- data -----------------------------------------------------------------

@dataclass(frozen=True)
class Face:
    name: str
    vertices: tuple[str, ...]

    def __len__(self):
        return len(self.vertices)

    def dart(self, k: int) -> tuple[str, str]:
        L = len(self.vertices)
        return self.vertices[k % L], self.vertices[(k + 1) % L]


@dataclass(frozen=True)
class PolygonalSphere:
    vertices: tuple[str, ...]
    faces: tuple[Face, ...]

    def face(self, name: str) -> Face:
        for f in self.faces:
            if f.name == name:
                return f
        raise KeyError(name)

    def darts(self):
        for f in self.faces:
            for k in range(len(f)):
                yield (f.name, k), f.dart(k)


@dataclass(frozen=True)
class Pair:
    source: str
    target: str
    offset: int
    reversing: bool = True
    name: str | None = None

    @property
    def label(self) -> str:
        return self.name or self.source

    def image_index(self, k: int, L: int) -> int:
        return (self.offset - k) % L if self.reversing else (self.offset + k) % L


@dataclass(frozen=True)
class FacePairing:
    pairs: tuple[Pair, ...]

    def pair_of(self, face: str) -> Pair:
        for p in self.pairs:
            if face in (p.source, p.target):
                return p
        raise KeyError(face)


@dataclass
class SphereReport:
    ok: bool
    V: int
    E: int
    F: int
    problems: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.ok


# -- validation -----------------------------------------------------------

def validate_sphere(C: PolygonalSphere) -> SphereReport:
    """Check double edge coverage in opposite directions, connectivity and V - E + F = 2."""
    problems = []
    names = [f.name for f in C.faces]
    if len(set(names)) != len(names):
        problems.append("duplicate face names")
    directed: dict[tuple[str, str], list] = {}
    for f in C.faces:
        if len(f) < 3:
            problems.append(f"face {f.name} has fewer than 3 vertices")
        for v in f.vertices:
            if v not in C.vertices:
                problems.append(f"face {f.name} uses unknown vertex {v}")
    for dart, (a, b) in C.darts():
        if a == b:
            problems.append(f"loop at {a} in face {dart[0]}")
        directed.setdefault((a, b), []).append(dart)
    for (a, b), ds in directed.items():
        if len(ds) > 1:
            problems.append(f"directed edge {a}->{b} occurs {len(ds)} times: {ds}")
        if (b, a) not in directed:
            problems.append(f"edge {a}-{b} is covered only once (dart {ds[0]})")
    edges = {frozenset(e) for e in directed}
    used = {v for f in C.faces for v in f.vertices}
    for v in C.vertices:
        if v not in used:
            problems.append(f"vertex {v} lies on no face")
    # face adjacency through shared edges
    owner: dict[frozenset, list[str]] = {}
    for (name, _), (a, b) in C.darts():
        owner.setdefault(frozenset((a, b)), []).append(name)
    if C.faces:
        seen = {C.faces[0].name}
        stack = [C.faces[0].name]
        adj: dict[str, set] = {}
        for fs in owner.values():
            for x in fs:
                adj.setdefault(x, set()).update(fs)
        while stack:
            x = stack.pop()
            for y in adj.get(x, ()):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if len(seen) != len(C.faces):
            problems.append("face adjacency graph is disconnected")
    V, E, F = len(C.vertices), len(edges), len(C.faces)
    if V - E + F != 2:
        problems.append(f"Euler characteristic {V - E + F} != 2")
    return SphereReport(not problems, V, E, F, problems)


def validate_pairing(C: PolygonalSphere, pairing: FacePairing) -> list[str]:
    problems = []
    names = [f.name for f in C.faces]
    seen: list[str] = []
    for p in pairing.pairs:
        for x in (p.source, p.target):
            if x not in names:
                problems.append(f"pair {p.label} names unknown face {x}")
        seen += [p.source, p.target]
        if p.source in names and p.target in names and len(C.face(p.source)) != len(C.face(p.target)):
            problems.append(f"pair {p.label} matches faces of different lengths")
    if sorted(seen) != sorted(names):
        problems.append("pairing is not a perfect matching of the faces")
    return problems


# -- quotient -------------------------------------------------------------

@dataclass(frozen=True)
class Step:
    """One sphere edge in an edge-class trace, as a directed vertex pair."""
    face: str
    dart: int
    sign: int
    edge: tuple[str, str]
    via: str


@dataclass
class EdgeClass:
    steps: list[Step]

    def __len__(self):
        return len(self.steps)

    @property
    def edges(self) -> list[tuple[str, str]]:
        return [s.edge for s in self.steps]


@dataclass
class QuotientComplex:
    vertex_classes: list[frozenset[str]]
    edge_classes: list[EdgeClass]
    face_count: int
    cells: int = 1
    reversed_edges: list[tuple[str, str]] = field(default_factory=list)
    dart_class: dict = field(default_factory=dict, repr=False)

    @property
    def counts(self) -> tuple[int, int, int]:
        return len(self.vertex_classes), len(self.edge_classes), self.face_count

    @property
    def euler(self) -> int:
        V, E, F = self.counts
        return V - E + F - self.cells


def _twins(C: PolygonalSphere) -> dict[tuple[str, int], tuple[str, int]]:
    where = {}
    for dart, e in C.darts():
        where[e] = dart
    return {dart: where[(b, a)] for dart, (a, b) in C.darts()}


def _pair_step(C: PolygonalSphere, pairing: FacePairing, side):
    """Carry side ``(face, dart, sign)`` across the pairing of its face."""
    f, k, s = side
    p = pairing.pair_of(f)
    L = len(C.face(f))
    if f == p.source:
        g, label = p.target, p.label
    else:
        g, label = p.source, p.label + "^-1"
    if p.reversing:
        return (g, (p.offset - k - 1) % L, -s), label
    if f == p.source:
        return (g, (p.offset + k) % L, s), label
    return (g, (k - p.offset) % L, s), label


def _oriented(C, side):
    f, k, s = side
    a, b = C.face(f).dart(k)
    return (a, b) if s == 1 else (b, a)


def edge_trace(C: PolygonalSphere, pairing: FacePairing, face: str, dart: int, sign: int = 1):
    """Follow the pairings from a directed sphere edge until it closes up.

    Each step crosses the current face's pairing and then passes to the
    other face sharing that sphere edge.  Returns the steps and whether the
    cycle came back with reversed direction.
    """
    twins = _twins(C)
    start = (face, dart % len(C.face(face)), sign)
    side, via = start, "start"
    steps = []
    seen = {}
    while True:
        f, k, s = side
        key = frozenset(((f, k), twins[(f, k)]))
        edge = _oriented(C, side)
        if key in seen:
            first = steps[seen[key]].edge
            return steps, edge != first
        seen[key] = len(steps)
        steps.append(Step(f, k, s, edge, via))
        side, via = _pair_step(C, pairing, side)
        g, j, t = side
        side = (*twins[(g, j)], -t)


def quotient(C: PolygonalSphere, pairing: FacePairing) -> QuotientComplex:
    report = validate_sphere(C)
    if not report.ok:
        raise ComplexError(f"not a valid sphere: {report.problems[:3]}")
    problems = validate_pairing(C, pairing)
    if problems:
        raise ComplexError(f"invalid pairing: {problems[:3]}")

    parent = {v: v for v in C.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for p in pairing.pairs:
        F, G = C.face(p.source), C.face(p.target)
        L = len(F)
        for k in range(L):
            a, b = find(F.vertices[k]), find(G.vertices[p.image_index(k, L)])
            if a != b:
                parent[a] = b
    groups: dict[str, set] = {}
    for v in C.vertices:
        groups.setdefault(find(v), set()).add(v)
    vclasses = sorted((frozenset(g) for g in groups.values()), key=lambda g: min(g))

    twins = _twins(C)
    classes, dart_class, reversed_edges = [], {}, []
    for f in C.faces:
        for k in range(len(f)):
            if (f.name, k) in dart_class:
                continue
            steps, flipped = edge_trace(C, pairing, f.name, k, 1)
            c = len(classes)
            for st in steps:
                dart_class[(st.face, st.dart)] = (c, st.sign)
                dart_class[twins[(st.face, st.dart)]] = (c, -st.sign)
            if flipped:
                reversed_edges.append(steps[0].edge)
            classes.append(EdgeClass(steps))
    return QuotientComplex(vclasses, classes, len(pairing.pairs), 1, reversed_edges, dart_class)


@dataclass
class SpineCertificate:
    is_spine: bool
    euler: int
    counts: tuple[int, int, int]
    orientation_reversing: bool
    problems: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.is_spine


def is_spine(C: PolygonalSphere, pairing: FacePairing, Q: QuotientComplex | None = None) -> SpineCertificate:
    """Closed orientable 3-manifold test: chi = 0 and every pair reverses orientation."""
    if Q is None:
        Q = quotient(C, pairing)
    problems = []
    orient = all(p.reversing for p in pairing.pairs)
    if not orient:
        problems.append("pairs preserving orientation: " + ", ".join(p.label for p in pairing.pairs if not p.reversing))
    if Q.euler != 0:
        problems.append(f"Euler characteristic {Q.euler} != 0")
    if Q.reversed_edges:
        problems.append(f"edges identified with their own reverse: {Q.reversed_edges}")
    return SpineCertificate(not problems, Q.euler, Q.counts, orient, problems)


# -- presentation read-off -----------------------------------------------

@dataclass
class Reading:
    """Relators read from the source faces, with edge classes as generators."""
    relators: list[CyclicWord]
    presentation: CyclicPresentation | None
    relabeling: dict | None = None
    matches: bool | None = None
    shift_offset: int | None = None

    def renamed(self) -> list[CyclicWord]:
        """Face words after applying the relabeling (requires a match)."""
        if self.relabeling is None:
            raise ComplexError("no relabeling available")
        out = []
        for r in self.relators:
            n = r.modulus
            letters = [(self.relabeling[g][0], e * self.relabeling[g][1]) for g, e in r.letters]
            out.append(free_reduce(letters, n))
        return out


def face_words(C: PolygonalSphere, pairing: FacePairing, Q: QuotientComplex) -> list[CyclicWord]:
    n = len(Q.edge_classes)
    words = []
    for p in pairing.pairs:
        F = C.face(p.source)
        words.append(free_reduce([Q.dart_class[(F.name, k)] for k in range(len(F))], n))
    return words


def read_presentation(C: PolygonalSphere, pairing: FacePairing,
                      expected: CyclicPresentation | None = None,
                      Q: QuotientComplex | None = None) -> Reading:
    """Edge classes become generators, one relator per face pair.

    With ``expected`` the relators are matched against it up to rotation,
    inversion and generator renaming; ``shift_offset`` is set when the
    renamed relator of the i-th pair is a cyclic conjugate of
    ``shift(w, i + c)`` (or its inverse) for one fixed c.
    """
    if Q is None:
        Q = quotient(C, pairing)
    if len(Q.vertex_classes) != 1:
        raise ComplexError(f"{len(Q.vertex_classes)} vertex classes; not a one-vertex complex")
    found = face_words(C, pairing, Q)
    n = len(Q.edge_classes)
    reading = Reading(found, None)
    if n == 1 and len(found) == 1 and len(found[0]):
        reading.presentation = CyclicPresentation(1, found[0])
    if expected is None:
        return reading
    target = relators(expected)
    if expected.n != n:
        reading.matches = False
        return reading
    relabel = match_relabeling(found, target)
    reading.relabeling = relabel
    reading.matches = relabel is not None
    if relabel is not None:
        reading.presentation = expected
        renamed = reading.renamed()
        for c in range(n):
            if all(cyclic_equal(r, shift(expected.w, i + c), allow_inverse=True) for i, r in enumerate(renamed)):
                reading.shift_offset = c
                break
    return reading


# -- P_n ------------------------------------------------------------------

def build_P(n: int) -> tuple[PolygonalSphere, FacePairing]:
    """2n pentagons; pair F_i sends (N u v w u') onto (v_i w_i u_(i+1) v_(i+1) S).

    The target face is stored reversed so that all faces share one
    orientation; the pair then has offset 4.
    """
    if n < 2:
        raise ComplexError("P_n needs n >= 2")
    u = lambda i: f"u{i % n}"
    v = lambda i: f"v{i % n}"
    w = lambda i: f"w{i % n}"
    vertices = ("N", "S") + tuple(x(i) for i in range(n) for x in (u, v, w))
    faces, pairs = [], []
    for i in range(n):
        minus = (("N", u(i + 1), v(i + 1), w(i + 1), u(i + 2)))
        plus = (v(i), w(i), u(i + 1), v(i + 1), "S")
        faces.append(Face(f"Fm{i}", minus))
        faces.append(Face(f"Fp{i}", tuple(reversed(plus))))
        pairs.append(Pair(f"Fm{i}", f"Fp{i}", 4, True, f"F{i}"))
    faces.sort(key=lambda f: (f.name[:2] != "Fm", int(f.name[2:])))
    return PolygonalSphere(vertices, tuple(faces)), FacePairing(tuple(pairs))


# -- Q_n through the vertex link ------------------------------------------

def _link_graph(w: CyclicWord, n: int):
    """Corners of the one-vertex complex of G_n(w) as edges of its vertex link.

    Link vertices are (g, 0) for the tail and (g, 1) for the head of x_g.
    Corner (i, k) joins the head of letter k of shift(w, i) to the tail
    of letter k+1.
    """
    L = len(w)
    rel = [shift(w, i).letters for i in range(n)]
    head = lambda l: (l.generator, 1 if l.exponent == 1 else 0)
    tail = lambda l: (l.generator, 0 if l.exponent == 1 else 1)
    ends = {}
    for i in range(n):
        for k in range(L):
            ends[(i, k)] = (head(rel[i][k]), tail(rel[i][(k + 1) % L]))
    beta: dict[int, dict] = {}
    for i in range(n):
        for k in range(L):
            g, e = rel[i][k]
            prev, nxt = (i, (k - 1) % L), (i, k)
            if e == 1:
                beta.setdefault(g, {})[prev] = nxt
            else:
                beta.setdefault(g, {})[nxt] = prev
    return rel, ends, beta


def _shift_vertex(x, s, n):
    return ((x[0] + s) % n, x[1])


def _shift_corner(c, s, n):
    return ((c[0] + s) % n, c[1])


def _canon_cycle(seq):
    seq = list(seq)
    if not seq:
        return ()
    m = min(range(len(seq)), key=lambda k: seq[k:] + seq[:k])
    return tuple(seq[m:] + seq[:m])


def _equivariant_rotation_system(w: CyclicWord, n: int):
    """Rotation system of the vertex link compatible with the gluings and the shift.

    The simple underlying graph is embedded with networkx; parallel
    corners are ordered by search at generator 0 and copied to the other
    generators by the shift.  Compatibility: the rotation at the tail of
    x_g, carried across x_g, is the reversed rotation at its head.
    """
    import networkx as nx

    rel, ends, beta = _link_graph(w, n)
    G = nx.Graph()
    G.add_edges_from(ends.values())
    planar, emb = nx.check_planarity(G)
    if not planar:
        raise ConstructionError("vertex link is not planar")
    base = {x: list(emb.neighbors_cw_order(x)) for x in G}
    bundles: dict[tuple, list] = {}
    for c, (a, b) in ends.items():
        bundles.setdefault((a, b), []).append(c)
        if a != b:
            bundles.setdefault((b, a), []).append(c)

    def attempt(nbr):
        # nbr must itself be shift-equivariant
        for x, ys in nbr.items():
            img = [_shift_vertex(y, 1, n) for y in ys]
            if _canon_cycle(img) != _canon_cycle(nbr[_shift_vertex(x, 1, n)]):
                return None
        order: dict[tuple, tuple] = {}

        def put(a, b, seq, log, spread=True):
            for s in range(n if spread else 1):
                a2, b2 = _shift_vertex(a, s, n), _shift_vertex(b, s, n)
                seq2 = tuple(_shift_corner(c, s, n) for c in seq)
                for key, val in (((a2, b2), seq2), ((b2, a2), seq2[::-1])):
                    old = order.get(key)
                    if old is None:
                        order[key] = val
                        log.append(key)
                    elif old != val:
                        return False
            return True

        def rotation(x):
            out = []
            for y in nbr[x]:
                if (x, y) not in order:
                    return None
                out += order[(x, y)]
            return out

        def force_head(g, log, spread=True):
            ro = rotation((g, 0))
            if ro is None:
                return False
            img = [beta[g][c] for c in ro][::-1]
            x = (g, 1)
            other = lambda c: ends[c][1] if ends[c][0] == x else ends[c][0]
            m = len(img)
            starts = [k for k in range(m) if other(img[k]) == nbr[x][0] and other(img[k - 1]) != nbr[x][0]]
            if len(starts) != 1:
                return False
            seq = img[starts[0]:] + img[:starts[0]]
            pos = 0
            for y in nbr[x]:
                blk = []
                while pos < m and other(seq[pos]) == y:
                    blk.append(seq[pos])
                    pos += 1
                if len(blk) != len(bundles[(x, y)]) or not put(x, y, tuple(blk), log, spread):
                    return False
            return pos == m

        x0 = (0, 0)
        free = []
        for y in nbr[x0]:
            if y not in free:
                free.append(y)
        for choice in itertools.product(*[itertools.permutations(bundles[(x0, y)]) for y in free]):
            # cheap local test at generator 0 before spreading by the shift
            order.clear()
            log: list = []
            if not (all(put(x0, y, c, log, False) for y, c in zip(free, choice)) and force_head(0, log, False)):
                continue
            order.clear()
            ok = all(put(x0, y, c, log) for y, c in zip(free, choice))
            ok = ok and all(force_head(g, log) for g in range(n))
            if ok and all(rotation((g, t)) is not None for g in range(n) for t in (0, 1)):
                rot = {x: rotation(x) for x in nbr}
                return rot
        return None

    for mirror in (False, True):
        nbr = {x: (ys[::-1] if mirror else ys) for x, ys in base.items()}
        rot = attempt(nbr)
        if rot is not None:
            return rel, ends, rot
    raise ConstructionError("no shift-equivariant compatible link embedding")


def _regions(ends, rot):
    """Faces of the embedded link graph; ``region[(corner, from_vertex)]``."""
    region = {}
    count = 0
    for c, (a, b) in ends.items():
        for start in ((a, b), (b, a)):
            if (c, start[0]) in region:
                continue
            dart = (c, start[0], start[1])
            while (dart[0], dart[1]) not in region:
                region[(dart[0], dart[1])] = count
                e, x, y = dart
                ro = rot[y]
                # at y, the corner e appears once (or twice for a loop)
                idx = [i for i, f in enumerate(ro) if f == e]
                if len(idx) != 1:
                    raise ConstructionError("loops in the vertex link are not supported")
                nxt = ro[(idx[0] + 1) % len(ro)]
                p, q = ends[nxt]
                dart = (nxt, y, q if p == y else p)
            count += 1
    return region, count


def build_spine(w: CyclicWord, n: int, prefix: str = "F") -> tuple[PolygonalSphere, FacePairing]:
    """Face-paired sphere whose quotient has presentation complex G_n(w).

    Face F_i reads shift(w, i) along its stored order, dart m carrying
    letter m; its partner Fbar_i carries the same word the other way.
    """
    rel, ends, rot = _equivariant_rotation_system(w, n)
    region, count = _regions(ends, rot)
    L = len(w)

    # orbit labels; regions fixed by the shift become N and S
    shift_region = {}
    for (c, x), r in region.items():
        shift_region[r] = region[(_shift_corner(c, 1, n), _shift_vertex(x, 1, n))]
    corner_region = lambda i, k, side: region[((i, k), ends[(i, k)][side])]
    top = [corner_region(i, k, 0) for i in range(n) for k in range(L)]
    labels: dict[int, str] = {}
    fixed = [r for r in range(count) if shift_region[r] == r]
    orbit_no = 0
    for r in top + [corner_region(i, k, 1) for i in range(n) for k in range(L)]:
        if r in labels:
            continue
        if r in fixed:
            labels[r] = "N" if "N" not in labels.values() else ("S" if "S" not in labels.values() else f"c{r}")
            continue
        x, j = r, 0
        while x not in labels:
            labels[x] = f"r{orbit_no}_{j}"
            x, j = shift_region[x], j + 1
        orbit_no += 1

    faces, pairs = [], []
    for i in range(n):
        c = [labels[corner_region(i, k, 0)] for k in range(L)]
        cb = [labels[corner_region(i, k, 1)] for k in range(L)]
        faces.append(Face(f"{prefix}{i}", tuple([c[-1]] + c[:-1])))
        faces.append(Face(f"{prefix}bar{i}", tuple(reversed([cb[-1]] + cb[:-1]))))
        pairs.append(Pair(f"{prefix}{i}", f"{prefix}bar{i}", L - 1, True, f"{prefix}{i}"))
    verts = tuple(sorted(set(labels.values()), key=_vertex_key))
    C = PolygonalSphere(verts, tuple(faces))
    P = FacePairing(tuple(pairs))
    report = validate_sphere(C)
    if not report.ok:
        raise ConstructionError(f"link embedding did not give a sphere: {report.problems[:3]}")
    return C, P


def _vertex_key(v: str):
    if v in ("N", "S"):
        return (0, v, 0)
    m = re.fullmatch(r"r(\d+)_(\d+)", v)
    if m:
        return (1, int(m.group(1)), int(m.group(2)))
    return (2, v, 0)


@lru_cache(maxsize=None)
def build_Q(n: int) -> tuple[PolygonalSphere, FacePairing]:
    """2n 13-gons F_i, Fbar_i for the 13-letter word."""
    if n < 2:
        raise ComplexError("Q_n needs n >= 2")
    from .presentations import half_q5

    return build_spine(half_q5(n).w, n)


# -- text format ----------------------------------------------------------

def emit_complex(C: PolygonalSphere, pairing: FacePairing) -> str:
    lines = ["vertex " + " ".join(C.vertices)]
    for f in C.faces:
        lines.append(f"face {f.name}: " + " ".join(f.vertices))
    for p in pairing.pairs:
        extra = "" if p.reversing else " preserving"
        if p.name:
            extra += f" as {p.name}"
        lines.append(f"pair {p.source} {p.target}: offset {p.offset}{extra}")
    return "\n".join(lines) + "\n"


_PAIR = re.compile(r"pair\s+(\S+)\s+(\S+)\s*:\s*offset\s+(-?\d+)(\s+preserving)?(?:\s+as\s+(\S+))?\s*$")
_FACE = re.compile(r"face\s+(\S+)\s*:(.*)$")


def parse_complex(text: str) -> tuple[PolygonalSphere, FacePairing]:
    vertices: list[str] = []
    faces, pairs = [], []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vertex"):
            vertices += line.split()[1:]
        elif m := _FACE.match(line):
            faces.append(Face(m.group(1), tuple(m.group(2).split())))
        elif m := _PAIR.match(line):
            pairs.append(Pair(m.group(1), m.group(2), int(m.group(3)), m.group(4) is None, m.group(5)))
        else:
            raise ComplexError(f"line {no}: cannot parse {raw!r}")
    return PolygonalSphere(tuple(vertices), tuple(faces)), FacePairing(tuple(pairs))


def find_trace(Q: QuotientComplex, edges: list[tuple[str, str]]):
    """Index of the edge class whose trace is ``edges`` as a cyclic sequence.

    Edges are compared as unordered vertex pairs; the trace may be run in
    either direction.  Returns None when no class matches.
    """
    want = [frozenset(e) for e in edges]
    for idx, ec in enumerate(Q.edge_classes):
        have = [frozenset(e) for e in ec.edges]
        if len(have) != len(want):
            continue
        for seq in (have, have[::-1]):
            if any(seq[k:] + seq[:k] == want for k in range(len(seq))):
                return idx
    return None
