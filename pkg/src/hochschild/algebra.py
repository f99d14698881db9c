"""Monoid objects and (bi)module objects given by explicit structure maps.

Nothing is assumed at construction beyond shapes: every defining diagram is
checked exactly by the ``check_*`` functions, which return an
:class:`~hochschild.report.AxiomReport` carrying both composites of any
diagram that fails to commute.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ShapeError
from .monoidal import (
    Atom,
    Morphism,
    ObjectHandle,
    associator,
    compose,
    compose_all,
    identity,
    left_unitor,
    left_unitor_inverse,
    right_unitor,
    right_unitor_inverse,
    tensor_morphisms,
    tensor_objects,
)
from .report import AxiomReport


def _expect(f: Morphism, dom: ObjectHandle, cod: ObjectHandle, what: str):
    if not isinstance(f, Morphism):
        raise ShapeError(f"{what} must be a Morphism")
    if f.dom != dom or f.cod != cod:
        raise ShapeError(f"{what} must be {dom} -> {cod}, got {f.dom} -> {f.cod}")


@dataclass(frozen=True, eq=False)
class MonoidObject:
    M: ObjectHandle
    mu: Morphism
    eta: Morphism

    def __post_init__(self):
        if not isinstance(self.M.word, Atom):
            raise ShapeError(f"monoid object must be a single atom, got {self.M}")
        _expect(self.mu, tensor_objects(self.M, self.M), self.M, "mu")
        _expect(self.eta, self.M.category.unit(), self.M, "eta")

    @property
    def category(self):
        return self.M.category

    @property
    def ring(self):
        return self.M.category.ring

    @property
    def rank(self):
        return self.M.rank


@dataclass(frozen=True, eq=False)
class BimoduleObject:
    monoid: MonoidObject
    X: ObjectHandle
    nu: Morphism
    omega: Morphism

    def __post_init__(self):
        if not isinstance(self.X.word, Atom):
            raise ShapeError(f"bimodule object must be a single atom, got {self.X}")
        M = self.monoid.M
        _expect(self.nu, tensor_objects(M, self.X), self.X, "nu (left action)")
        _expect(self.omega, tensor_objects(self.X, M), self.X, "omega (right action)")

    @property
    def rank(self):
        return self.X.rank


def check_monoid_axioms(m: MonoidObject) -> AxiomReport:
    M, mu, eta = m.M, m.mu, m.eta
    one = identity(M)
    report = AxiomReport()
    report.compare(
        "associative relation",
        compose_all(mu, tensor_morphisms(one, mu), associator(M, M, M)).mat,
        compose(mu, tensor_morphisms(mu, one)).mat,
    )
    report.compare(
        "left unitarity relation",
        compose_all(mu, tensor_morphisms(eta, one), left_unitor_inverse(M)).mat,
        one.mat,
    )
    report.compare(
        "right unitarity relation",
        compose_all(mu, tensor_morphisms(one, eta), right_unitor_inverse(M)).mat,
        one.mat,
    )
    return report


def check_right_module(m: MonoidObject, x: BimoduleObject) -> AxiomReport:
    M, X, omega = m.M, x.X, x.omega
    report = AxiomReport()
    report.compare(
        "right action associativity",
        compose(omega, tensor_morphisms(omega, identity(M))).mat,
        compose_all(omega, tensor_morphisms(identity(X), m.mu), associator(X, M, M)).mat,
    )
    report.compare(
        "right unit action",
        compose(omega, tensor_morphisms(identity(X), m.eta)).mat,
        right_unitor(X).mat,
    )
    return report


def check_left_module(m: MonoidObject, x: BimoduleObject) -> AxiomReport:
    M, X, nu = m.M, x.X, x.nu
    report = AxiomReport()
    report.compare(
        "left action associativity",
        compose_all(nu, tensor_morphisms(identity(M), nu), associator(M, M, X)).mat,
        compose(nu, tensor_morphisms(m.mu, identity(X))).mat,
    )
    report.compare(
        "left unit action",
        compose(nu, tensor_morphisms(m.eta, identity(X))).mat,
        left_unitor(X).mat,
    )
    return report


def check_bimodule_compat(m: MonoidObject, x: BimoduleObject) -> AxiomReport:
    M, X = m.M, x.X
    report = AxiomReport()
    report.compare(
        "bimodule compatibility",
        compose_all(x.nu, tensor_morphisms(identity(M), x.omega), associator(M, X, M)).mat,
        compose(x.omega, tensor_morphisms(x.nu, identity(M))).mat,
    )
    return report


def check_bimodule(m: MonoidObject, x: BimoduleObject) -> AxiomReport:
    report = AxiomReport()
    report.extend(check_left_module(m, x))
    report.extend(check_right_module(m, x))
    report.extend(check_bimodule_compat(m, x))
    return report


def check_monoid_morphism(f: Morphism, m1: MonoidObject, m2: MonoidObject) -> AxiomReport:
    _expect(f, m1.M, m2.M, "monoid morphism")
    report = AxiomReport()
    report.compare("multiplication preserved",
                   compose(f, m1.mu).mat,
                   compose(m2.mu, tensor_morphisms(f, f)).mat)
    report.compare("unit preserved", compose(f, m1.eta).mat, m2.eta.mat)
    return report


def check_left_action_preserved(f: Morphism, m: MonoidObject, x, y) -> AxiomReport:
    report = AxiomReport()
    report.compare("left action preserved",
                   compose(f, x.nu).mat,
                   compose(y.nu, tensor_morphisms(identity(m.M), f)).mat)
    return report


def check_right_action_preserved(f: Morphism, m: MonoidObject, x, y) -> AxiomReport:
    report = AxiomReport()
    report.compare("right action preserved",
                   compose(f, x.omega).mat,
                   compose(y.omega, tensor_morphisms(f, identity(m.M))).mat)
    return report


def verify_bimodule_morphism_theorem(f: Morphism, m: MonoidObject,
                                     x: BimoduleObject, y: BimoduleObject) -> AxiomReport:
    """A left- and right-action preserving map respects the bimodule structure.

    Checks every face of the cube-shaped diagram relating the compatibility
    squares of ``x`` and ``y`` along ``f``. When f does not preserve both
    actions the face checks are reported as not applicable.
    """
    _expect(f, x.X, y.X, "bimodule morphism")
    M, X, Y = m.M, x.X, y.X
    report = AxiomReport()
    pre = AxiomReport()
    pre.extend(check_left_action_preserved(f, m, x, y))
    pre.extend(check_right_action_preserved(f, m, x, y))
    report.extend(pre, prefix="precondition: ")
    faces = ("top square (naturality of α)", "back hexagon", "front hexagon",
             "compatibility of source", "compatibility of target", "outer diagram")
    if not pre.ok:
        for name in faces:
            report.skip(name, "f does not preserve both actions")
        return report

    one_m = identity(M)
    a_x, a_y = associator(M, X, M), associator(M, Y, M)
    top_in = tensor_morphisms(tensor_morphisms(one_m, f), one_m)   # (M⊗X)⊗M -> (M⊗Y)⊗M
    top_out = tensor_morphisms(one_m, tensor_morphisms(f, one_m))  # M⊗(X⊗M) -> M⊗(Y⊗M)

    report.compare(faces[0], compose(a_y, top_in).mat, compose(top_out, a_x).mat)
    # back: (M⊗X)⊗M -> X⊗M -> X -> Y   vs  (M⊗X)⊗M -> (M⊗Y)⊗M -> Y⊗M -> Y
    back_l = compose_all(f, x.omega, tensor_morphisms(x.nu, one_m))
    back_r = compose_all(y.omega, tensor_morphisms(y.nu, one_m), top_in)
    report.compare(faces[1], back_l.mat, back_r.mat)
    # front: M⊗(X⊗M) -> M⊗X -> X -> Y  vs  M⊗(X⊗M) -> M⊗(Y⊗M) -> M⊗Y -> Y
    front_l = compose_all(f, x.nu, tensor_morphisms(one_m, x.omega))
    front_r = compose_all(y.nu, tensor_morphisms(one_m, y.omega), top_out)
    report.compare(faces[2], front_l.mat, front_r.mat)
    for name, z, a_z in ((faces[3], x, a_x), (faces[4], y, a_y)):
        report.compare(name,
                       compose_all(z.nu, tensor_morphisms(one_m, z.omega), a_z).mat,
                       compose(z.omega, tensor_morphisms(z.nu, one_m)).mat)
    outer_l = compose(f, compose(x.omega, tensor_morphisms(x.nu, one_m)))
    outer_r = compose_all(y.nu, tensor_morphisms(one_m, y.omega), a_y, top_in)
    report.compare(faces[5], outer_l.mat, outer_r.mat)
    return report


def regular_bimodule(m: MonoidObject) -> BimoduleObject:
    """``M`` as a bimodule over itself, both actions given by ``mu``."""
    return BimoduleObject(m, m.M, m.mu, m.mu)


def make_monoid(category, name, mu_matrix, eta_matrix, *, rank=None, grades=None) -> MonoidObject:
    """Declare atom ``name`` and wrap structure-constant matrices.

    ``mu_matrix`` is ``d x d^2`` with column ``i*d + j`` holding the product of
    basis vectors i and j; ``eta_matrix`` is ``d x 1``.
    """
    if category.graded:
        M = category.declare(name, grades)
    else:
        M = category.declare(name, rank if rank is not None else mu_matrix.rows)
    mu = Morphism(tensor_objects(M, M), M, mu_matrix)
    eta = Morphism(category.unit(), M, eta_matrix)
    return MonoidObject(M, mu, eta)


def make_bimodule(m: MonoidObject, name, nu_matrix, omega_matrix, *, grades=None) -> BimoduleObject:
    category = m.category
    if category.graded:
        X = category.declare(name, grades)
    else:
        X = category.declare(name, nu_matrix.rows)
    nu = Morphism(tensor_objects(m.M, X), X, nu_matrix)
    omega = Morphism(tensor_objects(X, m.M), X, omega_matrix)
    return BimoduleObject(m, X, nu, omega)
