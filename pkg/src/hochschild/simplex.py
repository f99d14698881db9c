"""The simplex category: finite ordinals ``[k] = {0..k}`` and monotone maps."""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .report import AxiomReport


@dataclass(frozen=True)
class MonotoneMap:
    source: int
    target: int
    values: tuple

    def __post_init__(self):
        v = tuple(self.values)
        object.__setattr__(self, "values", v)
        if self.source < 0 or self.target < 0:
            raise ValueError("ordinals are non-empty: [k] needs k >= 0")
        if len(v) != self.source + 1:
            raise ValueError(f"map out of [{self.source}] needs {self.source + 1} values")
        if any(not 0 <= x <= self.target for x in v):
            raise ValueError(f"values {v} leave [{self.target}]")
        if any(a > b for a, b in zip(v, v[1:])):
            raise ValueError(f"values {v} are not monotone")

    def __call__(self, j):
        return self.values[j]

    def __str__(self):
        return f"[{self.source}]->[{self.target}] {self.values}"


def identity_map(k: int) -> MonotoneMap:
    return MonotoneMap(k, k, tuple(range(k + 1)))


def face(i: int, k: int) -> MonotoneMap:
    """``ε_i : [k-1] -> [k]``, the injection missing i."""
    if k < 1 or not 0 <= i <= k:
        raise ValueError(f"face index {i} out of range for [{k}]")
    return MonotoneMap(k - 1, k, tuple(j if j < i else j + 1 for j in range(k)))


def degeneracy(i: int, k: int) -> MonotoneMap:
    """``ζ_i : [k+1] -> [k]``, the surjection hitting i twice."""
    if k < 0 or not 0 <= i <= k:
        raise ValueError(f"degeneracy index {i} out of range for [{k}]")
    return MonotoneMap(k + 1, k, tuple(j if j <= i else j - 1 for j in range(k + 2)))


def compose_maps(g: MonotoneMap, f: MonotoneMap) -> MonotoneMap:
    """``g ∘ f``."""
    if f.target != g.source:
        raise ValueError(f"cannot compose {g} after {f}")
    return MonotoneMap(f.source, g.target, tuple(g.values[x] for x in f.values))


def factorize(f: MonotoneMap):
    """Normal form ``f = ε_{a1}∘...∘ε_{ap}∘ζ_{b1}∘...∘ζ_{bq}``.

    Face indices strictly decrease, degeneracy indices strictly increase.
    Returns ``(faces, degeneracies)`` as lists of ``(index, target ordinal)``
    in the written (left-to-right) order.
    """
    n, m = f.source, f.target
    image = set(f.values)
    missed = sorted((i for i in range(m + 1) if i not in image), reverse=True)
    repeats = [j for j in range(n) if f.values[j] == f.values[j + 1]]
    p, q = len(missed), len(repeats)
    faces = [(a, m - r) for r, a in enumerate(missed)]
    # ζ_{b_r} goes [x+1] -> [x]; the rightmost one starts from [n]
    degeneracies = [(b, n - (q - r)) for r, b in enumerate(repeats)]
    assert m - p == n - q
    return faces, degeneracies


def recompose(faces, degeneracies, source: int) -> MonotoneMap:
    out = identity_map(source)
    for i, k in reversed(degeneracies):
        out = compose_maps(degeneracy(i, k), out)
    for i, k in reversed(faces):
        out = compose_maps(face(i, k), out)
    return out


def all_monotone(k: int, l: int):
    """Every monotone map ``[k] -> [l]``."""
    for vals in combinations_with_replacement(range(l + 1), k + 1):
        yield MonotoneMap(k, l, vals)


def random_monotone(rng: random.Random, k: int, l: int) -> MonotoneMap:
    return MonotoneMap(k, l, tuple(sorted(rng.randint(0, l) for _ in range(k + 1))))


def simplicial_identity_instances(k_max: int):
    """Yield ``(name, lhs, rhs)`` for every face/degeneracy identity with ordinals <= k_max.

    The relations are the ones a covariant functor turns into the cosimplicial
    identities: ``ε_j ε_i = ε_i ε_{j-1}`` (i < j), ``ζ_j ζ_i = ζ_i ζ_{j+1}``
    (i <= j) and the three mixed cases for ``ζ_j ε_i``.
    """
    for n in range(0, k_max):
        # ε_i : [n] -> [n+1], ε_j : [n+1] -> [n+2]
        if n + 2 <= k_max:
            for j in range(n + 3):
                for i in range(j):
                    yield (f"face-face i={i} j={j} on [{n}]",
                           compose_maps(face(j, n + 2), face(i, n + 1)),
                           compose_maps(face(i, n + 2), face(j - 1, n + 1)))
        # ζ_i : [n+2] -> [n+1], ζ_j : [n+1] -> [n]
        if n + 2 <= k_max:
            for j in range(n + 1):
                for i in range(j + 1):
                    yield (f"degeneracy-degeneracy i={i} j={j} on [{n + 2}]",
                           compose_maps(degeneracy(j, n), degeneracy(i, n + 1)),
                           compose_maps(degeneracy(i, n), degeneracy(j + 1, n + 1)))
    for n in range(0, k_max):
        # ε_i : [n] -> [n+1], ζ_j : [n+1] -> [n]
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = compose_maps(degeneracy(j, n), face(i, n + 1))
                if i < j:
                    rhs = compose_maps(face(i, n), degeneracy(j - 1, n - 1))
                elif i in (j, j + 1):
                    rhs = identity_map(n)
                else:
                    rhs = compose_maps(face(i - 1, n), degeneracy(j, n - 1))
                yield f"degeneracy-face i={i} j={j} on [{n}]", lhs, rhs


def check_simplicial_identities(k_max: int) -> AxiomReport:
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    report = AxiomReport()
    for name, lhs, rhs in simplicial_identity_instances(k_max):
        report.record(name, lhs == rhs, detail="" if lhs == rhs else f"{lhs} vs {rhs}")
    return report
