"""Exhaustive and sampled coherence suites over small tensor words."""
from __future__ import annotations

import random
from itertools import product

from .monoidal import (
    UNIT,
    Atom,
    MonoidalCategory,
    bracketings,
    check_coherence,
    check_pentagon,
    check_triangle,
)
from .report import AxiomReport


def words_by_length(atom_names, max_len):
    """``{n: [words with n leaves]}``; length 0 is the unit alone."""
    out = {0: [UNIT]}
    for n in range(1, max_len + 1):
        words = []
        for seq in product([Atom(a) for a in atom_names], repeat=n):
            words.extend(bracketings(seq))
        out[n] = words
    return out


def word_tuples(words, arity, max_total):
    """Every ``arity``-tuple of words whose leaf counts add up to at most ``max_total``."""
    for lens in product(range(max_total + 1), repeat=arity):
        if sum(lens) <= max_total:
            yield from product(*(words[n] for n in lens))


def coherence_suite(category: MonoidalCategory, max_total=5, *, atoms=None,
                    rng: random.Random | None = None, samples=None) -> AxiomReport:
    """Pentagon, triangle and two-path coherence on words over the declared atoms.

    Tuples range over all words (units included) with at most ``max_total``
    leaves in total. With ``samples`` set, a seeded random subset of each
    family is checked instead.
    """
    names = sorted(atoms if atoms is not None else category.atoms)
    words = words_by_length(names, max_total)
    obj = category.obj

    def pick(items):
        items = list(items)
        if samples is None or len(items) <= samples:
            return items
        return (rng or random.Random(0)).sample(items, samples)

    report = AxiomReport()
    for quad in pick(word_tuples(words, 4, max_total)):
        report.extend(check_pentagon(*map(obj, quad)))
    for pair in pick(word_tuples(words, 2, max_total)):
        report.extend(check_triangle(*map(obj, pair)))
    for w in pick(w for n in range(3, max_total + 1) for w in words[n]):
        report.extend(check_coherence(obj(w)))
    return report
