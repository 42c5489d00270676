"""Words in a free group on cyclically indexed generators x0, ..., x(n-1).

A word is stored one letter per generator occurrence: ``x1^-2`` is two
letters ``(1, -1), (1, -1)``.  This keeps edge tracing in the complexes
module aligned with letters.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence


class WordError(ValueError):
    """Raised for malformed words or incompatible moduli."""


class Letter(NamedTuple):
    generator: int
    exponent: int

    def inverse(self) -> "Letter":
        return Letter(self.generator, -self.exponent)


def _is_cancelling(a: Letter, b: Letter) -> bool:
    return a.generator == b.generator and a.exponent == -b.exponent


def _reduce_letters(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for letter in letters:
        if stack and _is_cancelling(stack[-1], letter):
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


@dataclass(frozen=True)
class CyclicWord:
    """A freely reduced word over generators indexed mod ``modulus``."""

    letters: tuple[Letter, ...]
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise WordError(f"modulus must be positive, got {self.modulus}")
        for letter in self.letters:
            if not 0 <= letter.generator < self.modulus:
                raise WordError(f"generator index {letter.generator} out of range for modulus {self.modulus}")
            if letter.exponent not in (1, -1):
                raise WordError(f"letter exponent must be +1 or -1, got {letter.exponent}")
        for a, b in zip(self.letters, self.letters[1:]):
            if _is_cancelling(a, b):
                raise WordError("word is not freely reduced; build it with free_reduce")

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __str__(self):
        return format_word(self) or "1"

    def __repr__(self):
        return f"CyclicWord({format_word(self)!r}, modulus={self.modulus})"

    def exponent_sums(self) -> list[int]:
        sums = [0] * self.modulus
        for g, e in self.letters:
            sums[g] += e
        return sums

    def is_cyclically_reduced(self) -> bool:
        return len(self.letters) < 2 or not _is_cancelling(self.letters[-1], self.letters[0])


def free_reduce(letters: Iterable[Sequence[int]], n: int) -> CyclicWord:
    """Freely reduce a letter sequence over ``n`` generators."""
    checked = []
    for g, e in letters:
        if not 0 <= g < n:
            raise WordError(f"generator index {g} out of range for {n} generators")
        checked.append(Letter(g, e))
    return CyclicWord(_reduce_letters(checked), n)


def word(letters: Iterable[Sequence[int]], n: int) -> CyclicWord:
    """Like :func:`free_reduce` but indices are first taken mod ``n``."""
    return free_reduce(((g % n, e) for g, e in letters), n)


def cyclic_reduce(w: CyclicWord) -> CyclicWord:
    letters = w.letters
    i, j = 0, len(letters)
    while j - i >= 2 and _is_cancelling(letters[i], letters[j - 1]):
        i += 1
        j -= 1
    return CyclicWord(letters[i:j], w.modulus)


def invert(w: CyclicWord) -> CyclicWord:
    return CyclicWord(tuple(l.inverse() for l in reversed(w.letters)), w.modulus)


def concat(a: CyclicWord, b: CyclicWord) -> CyclicWord:
    if a.modulus != b.modulus:
        raise WordError(f"modulus mismatch: {a.modulus} vs {b.modulus}")
    return CyclicWord(_reduce_letters(a.letters + b.letters), a.modulus)


def power(w: CyclicWord, k: int) -> CyclicWord:
    base = w if k >= 0 else invert(w)
    out = CyclicWord((), w.modulus)
    for _ in range(abs(k)):
        out = concat(out, base)
    return out


def shift(w: CyclicWord, s: int) -> CyclicWord:
    """Apply the index shift x_i -> x_(i+s) (indices mod n)."""
    n = w.modulus
    return CyclicWord(tuple(Letter((g + s) % n, e) for g, e in w.letters), n)


def rotate(w: CyclicWord, k: int) -> CyclicWord:
    """Cyclic permutation of letters, starting at position ``k``.

    The result is only guaranteed reduced when ``w`` is cyclically reduced.
    """
    if not w.letters:
        return w
    k %= len(w.letters)
    return CyclicWord(w.letters[k:] + w.letters[:k], w.modulus)


def substitute(w: CyclicWord, images: Mapping[int, CyclicWord]) -> CyclicWord:
    """Image of ``w`` under the homomorphism x_g -> images[g]."""
    moduli = {img.modulus for img in images.values()}
    if len(moduli) > 1:
        raise WordError(f"images have mixed moduli {sorted(moduli)}")
    target = moduli.pop() if moduli else w.modulus
    out: list[Letter] = []
    for g, e in w.letters:
        if g not in images:
            raise WordError(f"no image given for generator x{g}")
        img = images[g] if e == 1 else invert(images[g])
        out.extend(img.letters)
    return CyclicWord(_reduce_letters(out), target)


def reindex(w: CyclicWord, mapping: Mapping[int, int], modulus: int) -> CyclicWord:
    """Rename generators through ``mapping`` into a word over ``modulus`` generators."""
    return free_reduce(((mapping[g], e) for g, e in w.letters), modulus)


def _letter_key(letter: Letter) -> tuple[int, int]:
    # +1 sorts before -1
    return (letter.generator, 0 if letter.exponent == 1 else 1)


def cyclic_canonical(w: CyclicWord) -> CyclicWord:
    """Lexicographically least rotation under the (index, exponent) order."""
    if not w.letters:
        return w
    keys = [_letter_key(l) for l in w.letters]
    m = len(keys)
    best = min(range(m), key=lambda k: keys[k:] + keys[:k])
    return rotate(w, best)


def cyclic_equal(a: CyclicWord, b: CyclicWord, allow_inverse: bool = False) -> bool:
    if a.modulus != b.modulus or len(a) != len(b):
        return False
    ca = cyclic_canonical(a)
    if ca == cyclic_canonical(b):
        return True
    return allow_inverse and ca == cyclic_canonical(invert(b))


def cyclic_class(w: CyclicWord) -> CyclicWord:
    """Representative of ``w`` up to rotation and inversion."""
    c1, c2 = cyclic_canonical(w), cyclic_canonical(invert(w))
    return min(c1, c2, key=lambda c: [_letter_key(l) for l in c.letters])


_TERM = re.compile(r"x(\d+)(?:\^([+-]?\d+))?")


def parse_word(text: str, n: int) -> CyclicWord:
    """Parse ``x0 x1^2 x2 x1^-1`` style text; ``1`` or blank is the empty word.

    The parsed word is freely reduced.  Indices must already be below ``n``.
    """
    s = text.strip()
    if s in ("", "1"):
        return CyclicWord((), n)
    letters: list[tuple[int, int]] = []
    pos = 0
    while pos < len(s):
        if s[pos].isspace() or s[pos] == "*":
            pos += 1
            continue
        m = _TERM.match(s, pos)
        if not m:
            raise WordError(f"cannot parse word at {s[pos:]!r}")
        g = int(m.group(1))
        k = int(m.group(2)) if m.group(2) is not None else 1
        sign = 1 if k > 0 else -1
        letters.extend([(g, sign)] * abs(k))
        pos = m.end()
    return free_reduce(letters, n)


def format_word(w: CyclicWord) -> str:
    """Serialize with runs compressed: ``x0 x1^2 x2 x1^-1``."""
    parts = []
    i = 0
    letters = w.letters
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        g, e = letters[i]
        k = (j - i) * e
        parts.append(f"x{g}" if k == 1 else f"x{g}^{k}")
        i = j
    return " ".join(parts)
