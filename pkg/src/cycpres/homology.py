"""Exact abelianization through Smith normal form, and Seifert fibered H_1.

Everything is done with Python integers; no floating point is used.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Sequence

INFINITE = math.inf

IntMatrix = list[list[int]]


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank + Z/d1 + ... with d1 | d2 | ... and every d >= 2."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        t = self.torsion
        if any(d < 2 for d in t) or any(b % a for a, b in zip(t, t[1:])):
            raise ValueError(f"torsion {t} is not a divisibility chain of integers >= 2")

    @classmethod
    def from_invariants(cls, diagonal: Sequence[int], generators: int) -> "AbelianGroup":
        nonzero = [abs(d) for d in diagonal if d != 0]
        return cls(generators - len(nonzero), tuple(d for d in nonzero if d > 1))

    def order(self):
        if self.free_rank:
            return INFINITE
        return math.prod(self.torsion)

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self):
        parts = [f"Z^{self.free_rank}"] if self.free_rank else []
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "1"


def order(A: AbelianGroup):
    return A.order()


def parse_group(text: str) -> AbelianGroup:
    text = text.strip()
    if text == "1":
        return AbelianGroup(0)
    rank, torsion = 0, []
    for part in text.split("+"):
        part = part.strip()
        if m := re.fullmatch(r"Z\^(\d+)", part):
            rank += int(m.group(1))
        elif m := re.fullmatch(r"Z/(\d+)", part):
            torsion.append(int(m.group(1)))
        else:
            raise ValueError(f"cannot parse group component {part!r}")
    return AbelianGroup(rank, tuple(torsion))


def smith_normal_form(M: Sequence[Sequence[int]]) -> tuple[list[int], int]:
    """Diagonal d1 | d2 | ... (length min(rows, cols), non-negative) and rank.

    Elimination pivots on the smallest nonzero absolute entry of the
    remaining block.
    """
    A = [list(map(int, row)) for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    diag = []
    for t in range(min(rows, cols)):
        while True:
            pivot = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if A[i][j] and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                diag.extend([0] * (min(rows, cols) - t))
                return diag, sum(1 for d in diag if d)
            i, j = pivot
            A[t], A[i] = A[i], A[t]
            for row in A:
                row[t], row[j] = row[j], row[t]
            p = A[t][t]
            clean = True
            for i in range(t + 1, rows):
                q = A[i][t] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                if A[i][t]:
                    clean = False
            for j in range(t + 1, cols):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j]:
                    clean = False
            if not clean:
                continue
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if A[i][j] % p), None)
            if bad is not None:
                A[t] = [a + b for a, b in zip(A[t], A[bad[0]])]
                continue
            diag.append(abs(p))
            break
    return diag, sum(1 for d in diag if d)


def relation_matrix(P) -> IntMatrix:
    """Exponent-sum matrix: entry (i, j) is the exponent sum of x_j in shift(w, i)."""
    first = P.w.exponent_sums()
    n = P.n
    return [[first[(j - i) % n] for j in range(n)] for i in range(n)]


def cokernel(M: Sequence[Sequence[int]], generators: int | None = None) -> AbelianGroup:
    """Abelian group with one generator per column and one relation per row."""
    if generators is None:
        generators = len(M[0]) if M else 0
    if not M:
        return AbelianGroup(generators)
    diag, _ = smith_normal_form(M)
    return AbelianGroup.from_invariants(diag, generators)


def abelianization(P) -> AbelianGroup:
    return cokernel(relation_matrix(P), P.n)


def relators_abelianization(relators, generators: int) -> AbelianGroup:
    """H_1 of an arbitrary presentation given as a list of words."""
    rows = [r.exponent_sums() for r in relators]
    return cokernel(rows, generators)


def determinant(M: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    A = [list(map(int, row)) for row in M]
    n = len(A)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k]), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


@dataclass(frozen=True)
class SeifertData:
    """Orientable Seifert space over S^2 with fiber invariants (alpha, beta).

    A pair (1, b) carries the Euler-number term and is treated like any
    other pair.
    """

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.pairs:
            raise ValueError("need at least one (alpha, beta) pair")
        if any(a < 1 for a, _ in self.pairs):
            raise ValueError("alpha must be >= 1")


def seifert_matrix(S: SeifertData) -> IntMatrix:
    k = len(S.pairs)
    rows = []
    for i, (a, b) in enumerate(S.pairs):
        row = [0] * (k + 1)
        row[i] = a
        row[k] = b
        rows.append(row)
    rows.append([1] * k + [0])
    return rows


def seifert_homology(S: SeifertData) -> AbelianGroup:
    return cokernel(seifert_matrix(S))


def neuwirth_seifert(m: int, l: int) -> SeifertData:
    """(0 o 0 | -1; (l+1, 1) repeated m times)."""
    return SeifertData(tuple([(l + 1, 1)] * m) + ((1, -1),))
