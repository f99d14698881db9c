"""Hochschild cohomology groups ``ker d^k / im d^{k-1}`` and the quasi-centre."""
from __future__ import annotations

from dataclasses import dataclass

from .engine import CochainComplex
from .errors import RingError
from .linalg import Matrix, kernel_basis, lattice_coordinates, rank, smith_normal_form
from .monoidal import Morphism
from .rings import ZZ


@dataclass(frozen=True)
class CohomologyGroup:
    degree: int
    free_rank: int
    torsion: tuple = ()

    def __str__(self):
        parts = [f"R^{self.free_rank}"] if self.free_rank else []
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"

    def to_dict(self):
        return {"degree": self.degree, "free_rank": self.free_rank,
                "torsion": [str(t) for t in self.torsion]}


def _check_ring(c: CochainComplex):
    ring = c.ring
    if ring.kind == "Zmod" and not ring.is_field:
        raise RingError(f"cohomology over {ring} is not supported (composite modulus)")


def _check_degree(c: CochainComplex, k: int):
    if not 0 <= k < c.k_max:
        raise ValueError(f"degree {k} outside 0..{c.k_max - 1} "
                         f"(d^{k} is not built for k_max = {c.k_max})")


def cohomology_at(c: CochainComplex, k: int) -> CohomologyGroup:
    _check_ring(c)
    _check_degree(c, k)
    dk = c.D[k]
    if c.ring != ZZ:
        prev = rank(c.D[k - 1]) if k > 0 else 0
        return CohomologyGroup(k, dk.cols - rank(dk) - prev)
    K = kernel_basis(dk)
    if k == 0 or K.cols == 0:
        return CohomologyGroup(k, K.cols)
    coords = lattice_coordinates(K, c.D[k - 1])
    snf = smith_normal_form(coords)
    factors = snf.invariant_factors
    return CohomologyGroup(k, K.cols - len(factors), tuple(d for d in factors if d > 1))


def quotient_dimension(c: CochainComplex, k: int) -> int:
    """Field case, by building the quotient: dim K minus the rank of the image in K-coordinates."""
    _check_degree(c, k)
    K = kernel_basis(c.D[k])
    if k == 0 or K.cols == 0:
        return K.cols
    return K.cols - rank(lattice_coordinates(K, c.D[k - 1]))


def cohomology_table(c: CochainComplex):
    return [cohomology_at(c, k) for k in range(c.k_max)]


@dataclass(frozen=True)
class QuasiCentre:
    basis: tuple        # vectors in C^0 = Hom(1, X)
    space: object

    @property
    def dimension(self):
        return len(self.basis)

    def morphisms(self):
        sp = self.space
        out = []
        for v in self.basis:
            e = [0] * (sp.cod.rank * sp.dom.rank)
            for pos, val in zip(sp.positions, v):
                e[pos] = val
            out.append(Morphism(sp.dom, sp.cod,
                                Matrix(sp.ring, sp.cod.rank, sp.dom.rank, e, normalized=True)))
        return out


def quasi_centre(c: CochainComplex) -> QuasiCentre:
    _check_ring(c)
    K = kernel_basis(c.D[0])
    return QuasiCentre(tuple(tuple(v) for v in K.columns()), c.spaces[0])
