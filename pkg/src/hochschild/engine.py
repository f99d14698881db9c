"""Hochschild cochains as explicit matrices on vectorised hom-spaces.

Two independent assemblies of the same complex live here:

* :func:`build_cochain_complex` evaluates the whole alternating sum of
  summands on each basis hom, adding morphisms in the Ab-enriched category,
  with every rebracketing written inline from associators;
* :func:`build_cosimplicial` materialises each coface and codegeneracy as its
  own matrix, using the tuple-isolation helpers from :mod:`monoidal`.

:func:`compare_formulations` checks that the first equals the alternating
coface sum of the second, entry for entry.

Index convention: in degree k the cofaces are δ^0..δ^{k+1}; δ^0 applies the
left action to the front factor, δ^i (1 <= i <= k) multiplies leaves i and
i+1, δ^{k+1} applies the right action to the last factor. σ^i inserts the
unit after leaf i.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field

from .algebra import BimoduleObject, MonoidObject, check_bimodule, check_monoid_axioms
from .errors import AxiomFailure, InvariantBreach, ResourceCeilingError
from .linalg import Matrix
from .monoidal import (
    Morphism,
    ObjectHandle,
    associator,
    associator_inverse,
    compose,
    compose_all,
    identity,
    isolate_first,
    isolate_pair,
    left_unitor_inverse,
    power,
    right_unitor_inverse,
    tensor_morphisms,
    whisker_right,
)
from .report import AxiomReport
from .simplex import MonotoneMap, factorize

DEFAULT_RANK_CEILING = 65536
RANK_CEILING_ENV = "HOCHSCHILD_RANK_CEILING"


@dataclass(frozen=True)
class EngineConfig:
    rank_ceiling: int = DEFAULT_RANK_CEILING
    check_axioms: bool = True

    @classmethod
    def from_env(cls, **overrides):
        raw = os.environ.get(RANK_CEILING_ENV)
        if raw is not None and "rank_ceiling" not in overrides:
            overrides["rank_ceiling"] = int(raw)
        return cls(**overrides)


# ---------------------------------------------------------------------------
# hom-spaces


@dataclass(frozen=True)
class HomSpace:
    """``Hom(M^{⊗k}, X)`` with elementary homs as basis.

    The elementary hom ``E_{p,q}`` (codomain row p, domain column q) sits at
    flat position ``p * rank(M)^k + q``; ``positions`` lists the flat
    positions that are morphisms of the category, in increasing order (all
    of them for free modules, the grade-preserving ones for graded spaces).
    """

    degree: int
    dom: ObjectHandle
    cod: ObjectHandle
    positions: tuple

    @property
    def rank(self) -> int:
        return len(self.positions)

    @property
    def ring(self):
        return self.dom.category.ring

    def basis_hom(self, idx) -> Morphism:
        pos = self.positions[idx]
        e = [0] * (self.cod.rank * self.dom.rank)
        e[pos] = 1
        mat = Matrix(self.ring, self.cod.rank, self.dom.rank, e, normalized=True)
        return Morphism(self.dom, self.cod, mat, check=False)

    def vectorize(self, f: Morphism):
        if f.dom != self.dom or f.cod != self.cod:
            raise InvariantBreach(f"{f} does not live in Hom({self.dom}, {self.cod})")
        e = f.mat.entries
        if len(self.positions) != len(e):
            off = set(range(len(e))) - set(self.positions)
            if any(e[i] for i in off):
                raise InvariantBreach(f"composite {f} left the graded hom-space")
        return [e[i] for i in self.positions]


def hom_space(m: MonoidObject, x: BimoduleObject, k: int) -> HomSpace:
    dom = power(m.M, k)
    cod = x.X
    R = dom.rank
    if m.category.graded:
        gd, gc = dom.grades, cod.grades
        positions = tuple(p * R + q for p in range(cod.rank) for q in range(R) if gc[p] == gd[q])
    else:
        positions = tuple(range(cod.rank * R))
    return HomSpace(k, dom, cod, positions)


def hom_rank(m: MonoidObject, x: BimoduleObject, k: int) -> int:
    """Rank of ``C^k`` without building the position list."""
    if not m.category.graded:
        return x.rank * m.rank ** k
    return hom_space(m, x, k).rank


def _guard(m, x, k, config: EngineConfig):
    # ranks grow geometrically; the ungraded bound is cheap and an upper bound
    bound = x.rank * m.rank ** k
    if bound > config.rank_ceiling and hom_rank(m, x, k) > config.rank_ceiling:
        raise ResourceCeilingError(
            f"rank of C^{k} exceeds the ceiling {config.rank_ceiling} "
            f"(override with {RANK_CEILING_ENV})")


def _validate(m, x, config: EngineConfig):
    if not config.check_axioms:
        return
    report = check_monoid_axioms(m)
    if x.monoid is not m:
        raise AxiomFailure("bimodule is over a different monoid object")
    report.extend(check_bimodule(m, x))
    if not report.ok:
        raise AxiomFailure("structure maps fail: " + ", ".join(report.failed_names), report)


def evaluate_on_basis(src: HomSpace, dst: HomSpace, fn) -> Matrix:
    """Matrix of the linear map ``fn : src -> dst``, one column per basis hom."""
    cols = [dst.vectorize(fn(src.basis_hom(j))) for j in range(src.rank)]
    return Matrix.from_columns(src.ring, cols, dst.rank)


# ---------------------------------------------------------------------------
# cosimplicial object


def _coface_map(m: MonoidObject, x: BimoduleObject, k: int, i: int):
    """``f -> δ^i(f)`` for f in degree k, built from the tuple-isolation helpers."""
    M = m.M
    if not 0 <= i <= k + 1:
        raise ValueError(f"coface index {i} out of range in degree {k}")
    if i == 0:
        front = right_unitor_inverse(M) if k == 0 else isolate_first(M, k + 1)
        one = identity(M)
        return lambda f: compose_all(x.nu, tensor_morphisms(one, f), front)
    if i == k + 1:
        one = identity(M)
        if k == 0:
            lam = left_unitor_inverse(M)
            return lambda f: compose_all(x.omega, tensor_morphisms(f, one), lam)
        return lambda f: compose(x.omega, tensor_morphisms(f, one))
    contract = _pair_product(m, k + 1, i)
    pre = compose(contract, isolate_pair(M, k + 1, i))
    return lambda f: compose(f, pre)


def _pair_product(m: MonoidObject, n: int, i: int) -> Morphism:
    # μ on the isolated pair (i, i+1) of the rebracketed n-fold word
    M = m.M
    core = m.mu if i == 1 else tensor_morphisms(identity(power(M, i - 1)), m.mu)
    return whisker_right(core, M, n - i - 1)


def _codegeneracy_pre(m: MonoidObject, k: int, i: int) -> Morphism:
    """Structure map ``M^{⊗k} -> M^{⊗(k+1)}`` inserting the unit after leaf i."""
    M, eta = m.M, m.eta
    one = identity(M)
    if k == 0:
        return eta
    if i == 0:
        return compose(whisker_right(tensor_morphisms(eta, one), M, k - 1),
                       whisker_right(left_unitor_inverse(M), M, k - 1))
    if i == k:
        if k == 1:
            return compose(tensor_morphisms(one, eta), right_unitor_inverse(M))
        head = identity(power(M, k - 1))
        return compose_all(associator_inverse(power(M, k - 1), M, M),
                           tensor_morphisms(head, tensor_morphisms(one, eta)),
                           tensor_morphisms(head, right_unitor_inverse(M)))
    head = identity(power(M, i))
    pad = k - i - 1
    return compose_all(whisker_right(associator_inverse(power(M, i), M, M), M, pad),
                       whisker_right(tensor_morphisms(head, tensor_morphisms(eta, one)), M, pad),
                       whisker_right(tensor_morphisms(head, left_unitor_inverse(M)), M, pad))


def coface(m: MonoidObject, x: BimoduleObject, k: int, i: int, *, config=None) -> Matrix:
    """Matrix of ``δ^i : C^k -> C^{k+1}``."""
    config = config or EngineConfig.from_env()
    if k < 0:
        raise ValueError("negative degree")
    _guard(m, x, k + 1, config)
    fn = _coface_map(m, x, k, i)
    return evaluate_on_basis(hom_space(m, x, k), hom_space(m, x, k + 1), fn)


def codegeneracy(m: MonoidObject, x: BimoduleObject, k: int, i: int, *, config=None) -> Matrix:
    """Matrix of ``σ^i : C^{k+1} -> C^k``."""
    config = config or EngineConfig.from_env()
    if k < 0 or not 0 <= i <= k:
        raise ValueError(f"codegeneracy index {i} out of range in degree {k}")
    _guard(m, x, k + 1, config)
    pre = _codegeneracy_pre(m, k, i)
    return evaluate_on_basis(hom_space(m, x, k + 1), hom_space(m, x, k),
                             lambda f: compose(f, pre))


@dataclass
class CosimplicialModel:
    monoid: MonoidObject
    bimodule: BimoduleObject
    k_max: int
    spaces: list
    cofaces: list = field(default_factory=list)         # cofaces[k][i]: A^k -> A^{k+1}
    codegeneracies: list = field(default_factory=list)  # codegeneracies[k][i]: A^{k+1} -> A^k

    def rank(self, k):
        return self.spaces[k].rank

    def alternating_sum(self, k) -> Matrix:
        total = None
        for i, mat in enumerate(self.cofaces[k]):
            term = mat if i % 2 == 0 else -mat
            total = term if total is None else total + term
        return total


def build_cosimplicial(m: MonoidObject, x: BimoduleObject, k_max: int, *, config=None) -> CosimplicialModel:
    """Cofaces and codegeneracies between degrees 0..k_max."""
    config = config or EngineConfig.from_env()
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    _validate(m, x, config)
    for k in range(k_max + 1):
        _guard(m, x, k, config)
    model = CosimplicialModel(m, x, k_max, [hom_space(m, x, k) for k in range(k_max + 1)])
    for k in range(k_max):
        src, dst = model.spaces[k], model.spaces[k + 1]
        model.cofaces.append([evaluate_on_basis(src, dst, _coface_map(m, x, k, i))
                              for i in range(k + 2)])
        degs = []
        for i in range(k + 1):
            pre = _codegeneracy_pre(m, k, i)
            degs.append(evaluate_on_basis(dst, src, lambda f, pre=pre: compose(f, pre)))
        model.codegeneracies.append(degs)
    return model


def check_cosimplicial_identities(a: CosimplicialModel) -> AxiomReport:
    report = AxiomReport()
    d, s, K = a.cofaces, a.codegeneracies, a.k_max

    def ident(n):
        return Matrix.identity(a.spaces[n].ring, a.rank(n))

    for n in range(K - 1):
        for j in range(n + 3):
            for i in range(j):
                report.compare(f"δ^{j}δ^{i} = δ^{i}δ^{j - 1} on A^{n}",
                               d[n + 1][j] @ d[n][i], d[n + 1][i] @ d[n][j - 1])
        for j in range(n + 1):
            for i in range(j + 1):
                report.compare(f"σ^{j}σ^{i} = σ^{i}σ^{j + 1} on A^{n + 2}",
                               s[n][j] @ s[n + 1][i], s[n][i] @ s[n + 1][j + 1])
    for n in range(K):
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = s[n][j] @ d[n][i]
                if i < j:
                    name, rhs = f"σ^{j}δ^{i} = δ^{i}σ^{j - 1} on A^{n}", d[n - 1][i] @ s[n - 1][j - 1]
                elif i in (j, j + 1):
                    name, rhs = f"σ^{j}δ^{i} = 1 on A^{n}", ident(n)
                else:
                    name, rhs = f"σ^{j}δ^{i} = δ^{i - 1}σ^{j} on A^{n}", d[n - 1][i - 1] @ s[n - 1][j]
                report.compare(name, lhs, rhs)
    return report


def realize_monotone(a: CosimplicialModel, f: MonotoneMap) -> Matrix:
    """``A(f)``, composed along the face/degeneracy normal form of f."""
    if f.source > a.k_max or f.target > a.k_max:
        raise ValueError(f"{f} leaves the built degree range 0..{a.k_max}")
    faces, degs = factorize(f)
    out = Matrix.identity(a.spaces[f.source].ring, a.rank(f.source))
    for i, k in reversed(degs):
        out = a.codegeneracies[k][i] @ out
    for i, k in reversed(faces):
        out = a.cofaces[k - 1][i] @ out
    return out


# ---------------------------------------------------------------------------
# cochain complex


def _hochschild_sum(m: MonoidObject, x: BimoduleObject, k: int):
    """``f -> d^k(f)`` as a sum of morphisms, every summand composed inline."""
    M = m.M
    one = identity(M)
    if k == 0:
        rho_inv, lam_inv = right_unitor_inverse(M), left_unitor_inverse(M)

        def d0(f):
            return (compose_all(x.nu, tensor_morphisms(one, f), rho_inv)
                    - compose_all(x.omega, tensor_morphisms(f, one), lam_inv))
        return d0

    n = k + 1
    # α¹ : M^{⊗n} -> M ⊗ M^{⊗k}, one associator layer at a time
    alpha1 = identity(power(M, n))
    for j in range(1, n - 1):
        alpha1 = compose(whisker_right(associator(M, power(M, j), M), M, n - j - 2), alpha1)
    inner = []
    for i in range(1, k + 1):
        if i == 1:
            step = whisker_right(m.mu, M, n - 2)
        else:
            rebracket = whisker_right(associator(power(M, i - 1), M, M), M, n - i - 1)
            mult = whisker_right(tensor_morphisms(identity(power(M, i - 1)), m.mu), M, n - i - 1)
            step = compose(mult, rebracket)
        inner.append(step)

    def dk(f):
        total = compose_all(x.nu, tensor_morphisms(one, f), alpha1)
        for i, step in enumerate(inner, start=1):
            chi = compose(f, step)
            total = total - chi if i % 2 else total + chi
        last = compose(x.omega, tensor_morphisms(f, one))
        return total - last if (k + 1) % 2 else total + last
    return dk


@dataclass
class CochainComplex:
    monoid: MonoidObject
    bimodule: BimoduleObject
    k_max: int
    spaces: list                                   # C^0..C^{k_max}
    D: list = field(default_factory=list)          # D[k] : C^k -> C^{k+1}, k < k_max

    @property
    def ring(self):
        return self.monoid.ring

    def rank(self, k):
        return self.spaces[k].rank if 0 <= k <= self.k_max else 0

    def ranks(self):
        return [s.rank for s in self.spaces]

    def differential(self, k) -> Matrix:
        """``D^k``; zero map for negative k."""
        if k < 0:
            return Matrix.zeros(self.ring, self.rank(0) if k == -1 else 0, 0)
        return self.D[k]


def differential(m: MonoidObject, x: BimoduleObject, k: int, *, config=None) -> Matrix:
    """``d^k`` as the alternating sum of the coface matrices; zero for k < 0."""
    config = config or EngineConfig.from_env()
    if k < 0:
        return Matrix.zeros(m.ring, hom_rank(m, x, 0) if k == -1 else 0, 0)
    total = None
    for i in range(k + 2):
        c = coface(m, x, k, i, config=config)
        term = c if i % 2 == 0 else -c
        total = term if total is None else total + term
    return total


def build_cochain_complex(m: MonoidObject, x: BimoduleObject, k_max: int, *, config=None) -> CochainComplex:
    config = config or EngineConfig.from_env()
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    _validate(m, x, config)
    for k in range(k_max + 1):
        _guard(m, x, k, config)
    c = CochainComplex(m, x, k_max, [hom_space(m, x, k) for k in range(k_max + 1)])
    for k in range(k_max):
        c.D.append(evaluate_on_basis(c.spaces[k], c.spaces[k + 1], _hochschild_sum(m, x, k)))
    return c


def check_dd_zero(c: CochainComplex) -> AxiomReport:
    report = AxiomReport()
    for k in range(len(c.D) - 1):
        prod = c.D[k + 1] @ c.D[k]
        if prod.is_zero():
            report.record(f"d^{k + 1}∘d^{k} = 0", True)
        else:
            idx = next(i for i, v in enumerate(prod.entries) if v)
            r, col = divmod(idx, prod.cols)
            report.record(f"d^{k + 1}∘d^{k} = 0", False,
                          detail=f"degree {k}: entry ({r},{col}) = {prod.entries[idx]}",
                          lhs=prod, rhs=Matrix.zeros(prod.ring, prod.rows, prod.cols))
    return report


def compare_formulations(c: CochainComplex, a: CosimplicialModel) -> AxiomReport:
    report = AxiomReport()
    if c.monoid is not a.monoid or c.bimodule is not a.bimodule:
        report.record("same input data", False,
                      detail="complex and cosimplicial model were built from different objects")
    for k in range(min(c.k_max, a.k_max)):
        report.compare(f"d^{k} = alternating coface sum", c.D[k], a.alternating_sum(k))
    return report
