"""Reference Hochschild cohomology through the classical strict complex.

This path is kept separate from the categorical engine on purpose: no
tensor words, no associators, no hom-space objects. Cochains are functions on
tuples of basis indices, the differential is the textbook formula

    (df)(a0,...,ak) = a0 f(a1..ak) + sum_i (-1)^i f(..., a_{i-1} a_i, ...)
                      + (-1)^{k+1} f(a0..a_{k-1}) ak,

and the groups come from sympy: free rank by rank-nullity, torsion as the
invariant factors of the incoming differential. Intended for tests.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product

from sympy import QQ as SQQ
from sympy import ZZ as SZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from .cohomology import CohomologyGroup
from .errors import RingError


def _table(mat, outer, inner):
    # column outer_index * inner + inner_index -> {row: value}
    t = [[{} for _ in range(inner)] for _ in range(outer)]
    for r in range(mat.rows):
        for col, v in enumerate(mat.row(r)):
            if v:
                a, b = divmod(col, inner)
                t[a][b][r] = v
    return t


def strict_differentials(m, x, k_max):
    """Dicts ``{(row, col): value}`` with shapes, for d^0 .. d^{k_max-1}."""
    d, e = m.rank, x.rank
    mu = _table(m.mu.mat, d, d)          # mu[i][j] = e_i e_j
    left = _table(x.nu.mat, d, e)        # left[i][p] = e_i . x_p
    right = _table(x.omega.mat, e, d)    # right[p][i] = x_p . e_i
    out = []
    for k in range(k_max):
        src_tuples = d ** k
        n_rows, n_cols = e * d ** (k + 1), e * src_tuples
        entries = {}

        def add(row, col, v):
            w = entries.get((row, col), 0) + v
            if w:
                entries[(row, col)] = w
            else:
                entries.pop((row, col), None)

        def tidx(t):
            i = 0
            for a in t:
                i = i * d + a
            return i

        for t in product(range(d), repeat=k + 1):
            ti = tidx(t)
            # a0 . f(a1..ak)
            rest = tidx(t[1:])
            for q in range(e):
                for p, v in left[t[0]][q].items():
                    add(p * d ** (k + 1) + ti, q * src_tuples + rest, v)
            # inner products
            for i in range(1, k + 1):
                sign = -1 if i % 2 else 1
                for l, v in mu[t[i - 1]][t[i]].items():
                    merged = tidx(t[:i - 1] + (l,) + t[i + 1:])
                    for p in range(e):
                        add(p * d ** (k + 1) + ti, p * src_tuples + merged, sign * v)
            # f(a0..a_{k-1}) . ak
            sign = -1 if (k + 1) % 2 else 1
            head = tidx(t[:k])
            for q in range(e):
                for p, v in right[q][t[k]].items():
                    add(p * d ** (k + 1) + ti, q * src_tuples + head, sign * v)
        out.append(((n_rows, n_cols), entries))
    return out


def _to_domain(shape, entries, ring):
    dom = SZZ if ring.kind == "Z" else SQQ
    rows = [[dom.zero] * shape[1] for _ in range(shape[0])]
    for (r, c), v in entries.items():
        if isinstance(v, Fraction):
            rows[r][c] = dom(v.numerator, v.denominator)
        else:
            rows[r][c] = dom(v)
    return DomainMatrix(rows, shape, dom).to_sparse()


def bar_oracle(m, x, k_max):
    """HH^0 .. HH^{k_max-1} of ``m`` with coefficients in ``x``."""
    if m.category.graded:
        raise RingError("the strict oracle only handles free-module instances")
    ring = m.ring
    if ring.kind not in ("Z", "Q"):
        raise RingError(f"the strict oracle handles Z and Q only, got {ring}")
    mats = [_to_domain(shape, ent, ring) for shape, ent in strict_differentials(m, x, k_max)]
    ranks = [M.convert_to(SQQ).rank() if ring.kind == "Z" else M.rank() for M in mats]
    groups = []
    for k in range(k_max):
        n_k = mats[k].shape[1]
        prev_rank = ranks[k - 1] if k > 0 else 0
        free = n_k - ranks[k] - prev_rank
        torsion = ()
        if ring.kind == "Z" and k > 0 and prev_rank:
            inv = invariant_factors(mats[k - 1].to_dense())
            torsion = tuple(int(f) for f in inv if abs(int(f)) > 1)
        groups.append(CohomologyGroup(k, free, torsion))
    return groups
