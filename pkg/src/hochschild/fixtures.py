"""Structure constants for the standard test algebras.

Each constructor builds a fresh category instance, so fixtures never share
atoms. Structure-constant matrices use the row-major pairing: column
``i*d + j`` of ``mu`` is the product of basis vectors i and j.
"""
from __future__ import annotations

from .algebra import MonoidObject, make_bimodule, make_monoid, regular_bimodule
from .linalg import Matrix
from .monoidal import FreeModCategory, GradedVecCategory
from .rings import QQ, ZZ


def _mu_from_table(ring, d, product):
    """``product(i, j) -> {l: coeff}`` gives ``e_i e_j``."""
    rows = [[0] * (d * d) for _ in range(d)]
    for i in range(d):
        for j in range(d):
            for l, c in product(i, j).items():
                rows[l][i * d + j] = c
    return Matrix.from_rows(ring, rows, d * d)


def _column(ring, values):
    return Matrix.from_rows(ring, [[v] for v in values], 1)


def unit_monoid(ring=ZZ) -> MonoidObject:
    cat = FreeModCategory(ring)
    return make_monoid(cat, "M", Matrix.from_rows(ring, [[1]]), _column(ring, [1]))


def dual_numbers(ring=QQ) -> MonoidObject:
    """``R[x]/(x^2)`` on the basis ``(1, x)``."""
    def prod(i, j):
        return {} if i + j > 1 else {i + j: 1}
    cat = FreeModCategory(ring)
    return make_monoid(cat, "M", _mu_from_table(ring, 2, prod), _column(ring, [1, 0]))


def matrix_algebra(n=2, ring=QQ) -> MonoidObject:
    """``M_n(R)`` on matrix units, ``e_ab`` at index ``a*n + b``."""
    d = n * n

    def prod(i, j):
        a, b = divmod(i, n)
        c, e = divmod(j, n)
        return {a * n + e: 1} if b == c else {}
    unit = [1 if i // n == i % n else 0 for i in range(d)]
    cat = FreeModCategory(ring)
    return make_monoid(cat, "M", _mu_from_table(ring, d, prod), _column(ring, unit))


def cyclic_group_ring(n=2, ring=ZZ) -> MonoidObject:
    """``R[C_n]`` on the basis ``g^0, ..., g^{n-1}``."""
    cat = FreeModCategory(ring)
    mu = _mu_from_table(ring, n, lambda i, j: {(i + j) % n: 1})
    return make_monoid(cat, "M", mu, _column(ring, [1] + [0] * (n - 1)))


def twisted_dual_numbers(ring=QQ) -> MonoidObject:
    """``R[x]/(x^2)`` in Z/2-graded spaces with ``x`` odd and ω(1,1,1) = -1.

    Every product of two odd vectors vanishes, so associativity survives the
    twist while the associators on odd triples are genuinely -1.
    """
    cat = GradedVecCategory(ring, 2, [1] * 7 + [-1])
    def prod(i, j):
        return {} if i + j > 1 else {i + j: 1}
    return make_monoid(cat, "M", _mu_from_table(ring, 2, prod), _column(ring, [1, 0]),
                       grades=[0, 1])


def column_module(m: MonoidObject):
    """``R^n`` as a left ``M_n(R)``-module; the right action is zero."""
    d = m.rank
    n = int(round(d ** 0.5))
    ring = m.ring
    nu = [[0] * (d * n) for _ in range(n)]
    for a in range(n):
        for b in range(n):
            # e_ab e_b = e_a; column index of (e_ab, e_b) is (a*n+b)*n + b
            nu[a][(a * n + b) * n + b] = 1
    return make_bimodule(m, "V", Matrix.from_rows(ring, nu, d * n),
                         Matrix.zeros(ring, n, n * d))


def augmentation_module(m: MonoidObject, weights=None):
    """``R`` with both actions through the character ``e_i -> weights[i]``.

    The default character sends the first basis vector to 1 and the rest to
    0, which is the augmentation of ``R[x]/(x^2)`` on the basis ``(1, x)``.
    """
    d, ring = m.rank, m.ring
    w = list(weights) if weights is not None else [1] + [0] * (d - 1)
    act = Matrix.from_rows(ring, [w], d)
    return make_bimodule(m, "K", act, act)


def perturb_mu(m: MonoidObject, index: int, delta=1) -> MonoidObject:
    """Copy of ``m`` in a fresh category with one ``mu`` entry shifted by ``delta``."""
    ring = m.ring
    old = m.category
    if old.graded:
        cat = GradedVecCategory(ring, old.order, old.cocycle)
    else:
        cat = FreeModCategory(ring)
    e = list(m.mu.mat.entries)
    e[index] = ring.add(e[index], ring.normalize(delta))
    mu = Matrix(ring, m.mu.mat.rows, m.mu.mat.cols, e)
    return make_monoid(cat, m.M.word.name, mu, m.eta.mat, rank=m.rank, grades=m.M.grades)


STANDARD = {
    "unit_Z": lambda: unit_monoid(ZZ),
    "dual_numbers_Q": lambda: dual_numbers(QQ),
    "matrices_2_Q": lambda: matrix_algebra(2, QQ),
    "group_ring_C2_Z": lambda: cyclic_group_ring(2, ZZ),
    "dual_numbers_Z": lambda: dual_numbers(ZZ),
}


def standard_pairs():
    """``(name, monoid, regular bimodule)`` for every standard fixture."""
    out = []
    for name, make in STANDARD.items():
        m = make()
        out.append((name, m, regular_bimodule(m)))
    return out
