"""Cyclically presented groups, face-paired spines and exact homology checks."""

from .words import (
    CyclicWord,
    Letter,
    WordError,
    concat,
    cyclic_canonical,
    cyclic_equal,
    cyclic_reduce,
    free_reduce,
    invert,
    parse_word,
    shift,
    substitute,
    word,
)
from .presentations import (
    CyclicPresentation,
    GeneratorCorrespondence,
    PresentationError,
    check_correspondence,
    eliminate_even_odd,
    fibonacci,
    fibonacci_F,
    fibonacci_H,
    format_presentation,
    halve,
    johnson_mawdesley,
    neuwirth,
    parse_presentation,
    sieradski,
    sieradski_general,
    sieradski_q2,
    half_q3,
    half_q5,
)
from .homology import INFINITE, AbelianGroup, SeifertData, abelianization, seifert_homology, smith_normal_form
from .alexander import IntPolynomial, branched_cover_order, resultant, torus_alexander, word_polynomial

__version__ = "0.1.0"
