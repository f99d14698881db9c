"""Concrete Ab-enriched monoidal categories with explicit structure maps.

Objects are bracketed tensor words over declared atoms; a morphism is an
exact matrix between the flattened bases of its domain and codomain words.
Composition insists on *identical* words, so every rebracketing has to be
written out with associators, even in :class:`FreeModCategory` where the
associator matrices are identities.

Flattening: the basis of ``A ⊗ B`` is the row-major pairing of bases, index
``i * rank(B) + j``, the same convention as :func:`linalg.kronecker`. Both
bracketings of a triple then flatten to the same ordering, which is why free
module associators are identity matrices.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import InstanceError, ShapeError, WordMismatchError
from .linalg import Matrix, kronecker, mat_mul
from .report import AxiomReport
from .rings import RingSpec, Scalar

# ---------------------------------------------------------------------------
# tensor words


@dataclass(frozen=True)
class Unit:
    def __str__(self):
        return "1"


@dataclass(frozen=True)
class Atom:
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Tensor:
    left: object
    right: object

    def __str__(self):
        return f"({self.left}⊗{self.right})"


UNIT = Unit()


def leaves(word):
    if isinstance(word, Tensor):
        return leaves(word.left) + leaves(word.right)
    return (word,)


def word_length(word) -> int:
    return len(leaves(word))


def left_nested(leaf_seq):
    """``(((a⊗b)⊗c)⊗...)``; a single leaf is returned unchanged."""
    seq = list(leaf_seq)
    if not seq:
        return UNIT
    w = seq[0]
    for x in seq[1:]:
        w = Tensor(w, x)
    return w


def right_nested(leaf_seq):
    seq = list(leaf_seq)
    if not seq:
        return UNIT
    w = seq[-1]
    for x in reversed(seq[:-1]):
        w = Tensor(x, w)
    return w


def bracketings(leaf_seq):
    """Every binary bracketing of a fixed leaf sequence."""
    seq = tuple(leaf_seq)
    if len(seq) == 1:
        return [seq[0]]
    out = []
    for cut in range(1, len(seq)):
        for a in bracketings(seq[:cut]):
            for b in bracketings(seq[cut:]):
                out.append(Tensor(a, b))
    return out


# ---------------------------------------------------------------------------
# categories and objects


class MonoidalCategory:
    """Common machinery; subclasses fix grading and the associator."""

    graded = False

    def __init__(self, ring: RingSpec):
        self.ring = ring
        self._atoms = {}
        self._rank_cache = {}
        self._assoc_cache = {}

    def _check_name(self, name):
        if not isinstance(name, str) or not name or name == "1":
            raise InstanceError(f"invalid atom name {name!r}")
        if name in self._atoms:
            raise InstanceError(f"atom {name!r} already declared")

    def atom_data(self, name):
        try:
            return self._atoms[name]
        except KeyError:
            raise InstanceError(f"undeclared atom {name!r}") from None

    @property
    def atoms(self):
        return dict(self._atoms)

    def obj(self, word) -> ObjectHandle:
        for leaf in leaves(word):
            if isinstance(leaf, Atom):
                self.atom_data(leaf.name)
            elif not isinstance(leaf, Unit):
                raise InstanceError(f"not a tensor word leaf: {leaf!r}")
        return ObjectHandle(self, word)

    def atom(self, name) -> ObjectHandle:
        return self.obj(Atom(name))

    def unit(self) -> ObjectHandle:
        return ObjectHandle(self, UNIT)

    def rank(self, word) -> int:
        r = self._rank_cache.get(word)
        if r is None:
            if isinstance(word, Tensor):
                r = self.rank(word.left) * self.rank(word.right)
            elif isinstance(word, Unit):
                r = 1
            else:
                r = self._atom_rank(word.name)
            self._rank_cache[word] = r
        return r

    def grades(self, word):
        return None

    def _atom_rank(self, name):
        raise NotImplementedError

    def associator_matrix(self, a, b, c) -> Matrix:
        raise NotImplementedError

    def check_morphism_matrix(self, dom, cod, mat):
        pass


class FreeModCategory(MonoidalCategory):
    """Finite-rank free modules over a ring with identity structure maps."""

    def declare(self, name, rank: int) -> ObjectHandle:
        self._check_name(name)
        if not isinstance(rank, int) or rank < 0:
            raise InstanceError(f"rank of {name!r} must be a non-negative integer")
        self._atoms[name] = rank
        return self.atom(name)

    def _atom_rank(self, name):
        return self.atom_data(name)

    def associator_matrix(self, a, b, c):
        return Matrix.identity(self.ring, a.rank * b.rank * c.rank)

    def __repr__(self):
        return f"FreeModCategory({self.ring})"


class GradedVecCategory(MonoidalCategory):
    """Z/n-graded vector spaces whose associator is twisted by a 3-cocycle.

    ``cocycle`` is the flat table of ``omega(g, h, l)`` in lexicographic
    order. It must be normalised (1 whenever an argument is 0) and take
    invertible values; the cocycle condition itself is *not* enforced here,
    the pentagon check is what detects a bad table.
    """

    graded = True

    def __init__(self, ring: RingSpec, order: int, cocycle=None):
        super().__init__(ring)
        if not ring.is_field:
            raise InstanceError(f"graded vector spaces need a field, got {ring}")
        if not isinstance(order, int) or order < 1:
            raise InstanceError(f"group order must be a positive integer, got {order!r}")
        self.order = n = order
        if cocycle is None:
            cocycle = [1] * n ** 3
        cocycle = [ring.normalize(v.value if isinstance(v, Scalar) else v) for v in cocycle]
        if len(cocycle) != n ** 3:
            raise InstanceError(f"cocycle table needs {n ** 3} entries, got {len(cocycle)}")
        for (g, h, l), v in zip(product(range(n), repeat=3), cocycle):
            if not ring.is_unit(v):
                raise InstanceError(f"cocycle entry ({g},{h},{l}) = {v} is not invertible")
            if 0 in (g, h, l) and v != 1:
                raise InstanceError(f"cocycle is not normalised: ({g},{h},{l}) = {v}")
        self.cocycle = cocycle
        self._grade_cache = {}

    def omega(self, g, h, l):
        n = self.order
        return self.cocycle[(g * n + h) * n + l]

    def declare(self, name, grades) -> ObjectHandle:
        self._check_name(name)
        grades = tuple(grades)
        for g in grades:
            if not isinstance(g, int):
                raise InstanceError(f"grade {g!r} of {name!r} is not an integer")
        self._atoms[name] = tuple(g % self.order for g in grades)
        return self.atom(name)

    def _atom_rank(self, name):
        return len(self.atom_data(name))

    def grades(self, word):
        gr = self._grade_cache.get(word)
        if gr is None:
            if isinstance(word, Tensor):
                n = self.order
                gr = tuple((x + y) % n for x in self.grades(word.left)
                           for y in self.grades(word.right))
            elif isinstance(word, Unit):
                gr = (0,)
            else:
                gr = self.atom_data(word.name)
            self._grade_cache[word] = gr
        return gr

    def associator_matrix(self, a, b, c):
        ga, gb, gc = a.grades, b.grades, c.grades
        return Matrix.diagonal(self.ring, [self.omega(x, y, z)
                                           for x in ga for y in gb for z in gc])

    def check_morphism_matrix(self, dom, cod, mat):
        gd, gc = dom.grades, cod.grades
        e, cols = mat.entries, mat.cols
        for i, gi in enumerate(gc):
            base = i * cols
            for j, gj in enumerate(gd):
                if gi != gj and e[base + j]:
                    raise ShapeError(f"morphism {dom} -> {cod} does not preserve grading "
                                     f"(entry ({i},{j}) maps grade {gj} to grade {gi})")

    def __repr__(self):
        return f"GradedVecCategory({self.ring}, Z/{self.order})"


@dataclass(frozen=True)
class ObjectHandle:
    category: MonoidalCategory
    word: object

    @property
    def rank(self) -> int:
        return self.category.rank(self.word)

    @property
    def grades(self):
        return self.category.grades(self.word)

    def __str__(self):
        return str(self.word)


def _same_category(*handles):
    cat = handles[0].category
    for h in handles[1:]:
        if h.category is not cat:
            raise ShapeError("objects belong to different category instances")
    return cat


def tensor_objects(a: ObjectHandle, b: ObjectHandle) -> ObjectHandle:
    cat = _same_category(a, b)
    return ObjectHandle(cat, Tensor(a.word, b.word))


def power(m: ObjectHandle, k: int) -> ObjectHandle:
    """Left-nested ``m^{⊗k}``; ``k = 0`` gives the unit object."""
    if k < 0:
        raise ValueError("negative tensor power")
    return ObjectHandle(m.category, left_nested([m.word] * k))


# ---------------------------------------------------------------------------
# morphisms


class Morphism:
    """An arrow ``dom -> cod`` carried by an exact matrix.

    Morphisms form abelian groups under ``+``/``-``; ``g @ f`` composes.
    """

    __slots__ = ("dom", "cod", "mat")

    def __init__(self, dom: ObjectHandle, cod: ObjectHandle, mat: Matrix, *, check=True):
        if check:
            cat = _same_category(dom, cod)
            if mat.ring != cat.ring:
                raise ShapeError(f"matrix over {mat.ring}, category over {cat.ring}")
            if mat.rows != cod.rank or mat.cols != dom.rank:
                raise ShapeError(f"matrix is {mat.rows}x{mat.cols}, "
                                 f"expected {cod.rank}x{dom.rank} for {dom} -> {cod}")
            cat.check_morphism_matrix(dom, cod, mat)
        self.dom = dom
        self.cod = cod
        self.mat = mat

    @property
    def category(self):
        return self.dom.category

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return self.dom == other.dom and self.cod == other.cod and self.mat == other.mat

    def __hash__(self):
        return hash((self.dom, self.cod, self.mat))

    def _parallel(self, other):
        if self.dom != other.dom or self.cod != other.cod:
            raise ShapeError(f"morphisms are not parallel: {self} vs {other}")

    def __add__(self, other):
        self._parallel(other)
        return Morphism(self.dom, self.cod, self.mat + other.mat, check=False)

    def __sub__(self, other):
        self._parallel(other)
        return Morphism(self.dom, self.cod, self.mat - other.mat, check=False)

    def __neg__(self):
        return Morphism(self.dom, self.cod, -self.mat, check=False)

    def scale(self, c):
        return Morphism(self.dom, self.cod, self.mat.scale(c), check=False)

    def __matmul__(self, other):
        return compose(self, other)

    def __repr__(self):
        return f"Morphism({self.dom} -> {self.cod}, {self.mat.rows}x{self.mat.cols})"


def identity(a: ObjectHandle) -> Morphism:
    return Morphism(a, a, Matrix.identity(a.category.ring, a.rank), check=False)


def zero_morphism(dom: ObjectHandle, cod: ObjectHandle) -> Morphism:
    _same_category(dom, cod)
    return Morphism(dom, cod, Matrix.zeros(dom.category.ring, cod.rank, dom.rank), check=False)


def compose(g: Morphism, f: Morphism) -> Morphism:
    """``g ∘ f``; the codomain word of f must equal the domain word of g."""
    _same_category(g.dom, f.cod)
    if f.cod.word != g.dom.word:
        if f.cod.rank == g.dom.rank:
            raise WordMismatchError(f"word mismatch: {f.cod} vs {g.dom} "
                                    "(same rank, different bracketing)")
        raise ShapeError(f"cannot compose: {f.cod} (rank {f.cod.rank}) "
                         f"vs {g.dom} (rank {g.dom.rank})")
    return Morphism(f.dom, g.cod, mat_mul(g.mat, f.mat), check=False)


def compose_all(*arrows: Morphism) -> Morphism:
    """``compose_all(h, g, f) == h ∘ g ∘ f``."""
    out = arrows[-1]
    for g in reversed(arrows[:-1]):
        out = compose(g, out)
    return out


def tensor_morphisms(f: Morphism, g: Morphism) -> Morphism:
    _same_category(f.dom, g.dom)
    return Morphism(tensor_objects(f.dom, g.dom), tensor_objects(f.cod, g.cod),
                    kronecker(f.mat, g.mat), check=False)


def whisker_right(f: Morphism, m: ObjectHandle, times: int) -> Morphism:
    """``(...((f ⊗ 1_m) ⊗ 1_m) ...) ⊗ 1_m`` with ``times`` factors."""
    one = identity(m)
    for _ in range(times):
        f = tensor_morphisms(f, one)
    return f


# ---------------------------------------------------------------------------
# structure isomorphisms


def associator(a: ObjectHandle, b: ObjectHandle, c: ObjectHandle) -> Morphism:
    """``α_{a,b,c} : (a⊗b)⊗c -> a⊗(b⊗c)``."""
    cat = _same_category(a, b, c)
    key = (a.word, b.word, c.word)
    mat = cat._assoc_cache.get(key)
    if mat is None:
        mat = cat._assoc_cache[key] = cat.associator_matrix(a, b, c)
    return Morphism(tensor_objects(tensor_objects(a, b), c),
                    tensor_objects(a, tensor_objects(b, c)), mat, check=False)


def associator_inverse(a, b, c) -> Morphism:
    fwd = associator(a, b, c)
    ring = a.category.ring
    n = fwd.mat.rows
    # associators are diagonal in both instances
    inv = Matrix.diagonal(ring, [ring.inv(fwd.mat[i, i]) for i in range(n)])
    return Morphism(fwd.cod, fwd.dom, inv, check=False)


def left_unitor(a: ObjectHandle) -> Morphism:
    """``λ_a : 1⊗a -> a``."""
    u = a.category.unit()
    return Morphism(tensor_objects(u, a), a, Matrix.identity(a.category.ring, a.rank), check=False)


def left_unitor_inverse(a: ObjectHandle) -> Morphism:
    lam = left_unitor(a)
    return Morphism(lam.cod, lam.dom, lam.mat, check=False)


def right_unitor(a: ObjectHandle) -> Morphism:
    """``ρ_a : a⊗1 -> a``."""
    u = a.category.unit()
    return Morphism(tensor_objects(a, u), a, Matrix.identity(a.category.ring, a.rank), check=False)


def right_unitor_inverse(a: ObjectHandle) -> Morphism:
    rho = right_unitor(a)
    return Morphism(rho.cod, rho.dom, rho.mat, check=False)


# ---------------------------------------------------------------------------
# coherence


def check_pentagon(w, x, y, z) -> AxiomReport:
    report = AxiomReport()
    lhs = compose(associator(w, x, tensor_objects(y, z)),
                  associator(tensor_objects(w, x), y, z))
    rhs = compose_all(tensor_morphisms(identity(w), associator(x, y, z)),
                      associator(w, tensor_objects(x, y), z),
                      tensor_morphisms(associator(w, x, y), identity(z)))
    report.compare("pentagon", lhs.mat, rhs.mat, detail=f"{w}, {x}, {y}, {z}")
    return report


def check_triangle(x, y) -> AxiomReport:
    report = AxiomReport()
    u = x.category.unit()
    lhs = compose(tensor_morphisms(identity(x), left_unitor(y)), associator(x, u, y))
    rhs = tensor_morphisms(right_unitor(x), identity(y))
    report.compare("triangle", lhs.mat, rhs.mat, detail=f"{x}, {y}")
    return report


def normalize_outer_first(a: ObjectHandle) -> Morphism:
    """Rebracket to the right-nested word, reassociating at the root first."""
    w = a.word
    if not isinstance(w, Tensor):
        return identity(a)
    cat = a.category
    left, right = ObjectHandle(cat, w.left), ObjectHandle(cat, w.right)
    if isinstance(w.left, Tensor):
        p, q = ObjectHandle(cat, w.left.left), ObjectHandle(cat, w.left.right)
        step = associator(p, q, right)
        return compose(normalize_outer_first(step.cod), step)
    return tensor_morphisms(identity(left), normalize_outer_first(right))


def normalize_inner_first(a: ObjectHandle) -> Morphism:
    """Rebracket to the right-nested word, normalising both factors first."""
    w = a.word
    if not isinstance(w, Tensor):
        return identity(a)
    cat = a.category
    inner = tensor_morphisms(normalize_inner_first(ObjectHandle(cat, w.left)),
                             normalize_inner_first(ObjectHandle(cat, w.right)))
    return compose(_merge_normal(inner.cod), inner)


def _merge_normal(a: ObjectHandle) -> Morphism:
    # a = L ⊗ R with L and R right-nested
    cat = a.category
    w = a.word
    if not isinstance(w.left, Tensor):
        return identity(a)
    p, q = ObjectHandle(cat, w.left.left), ObjectHandle(cat, w.left.right)
    r = ObjectHandle(cat, w.right)
    step = associator(p, q, r)
    rest = tensor_morphisms(identity(p), _merge_normal(tensor_objects(q, r)))
    return compose(rest, step)


def check_coherence(a: ObjectHandle) -> AxiomReport:
    """Two different associator composites to the right-nested word agree."""
    report = AxiomReport()
    f, g = normalize_outer_first(a), normalize_inner_first(a)
    if f.cod != g.cod:
        report.record("coherence", False, detail=f"{a}: paths end at {f.cod} and {g.cod}")
    else:
        report.compare("coherence", f.mat, g.mat, detail=str(a))
    return report


# ---------------------------------------------------------------------------
# tuple rebracketing for M^{⊗k}


def isolate_pair(m: ObjectHandle, k: int, i: int) -> Morphism:
    """Rebracket ``m^{⊗k}`` so that the leaves ``i, i+1`` (1-based) form a pair.

    ``i = 1`` is the identity (the front pair is already isolated); otherwise
    ``(...(α_{m^{⊗(i-1)}, m, m} ⊗ 1) ...) ⊗ 1``.
    """
    if k < 2 or not 1 <= i <= k - 1:
        raise ValueError(f"pair index {i} out of range for k = {k}")
    if i == 1:
        return identity(power(m, k))
    core = associator(power(m, i - 1), m, m)
    return whisker_right(core, m, k - i - 1)


def isolate_pair_inverse(m: ObjectHandle, k: int, i: int) -> Morphism:
    if k < 2 or not 1 <= i <= k - 1:
        raise ValueError(f"pair index {i} out of range for k = {k}")
    if i == 1:
        return identity(power(m, k))
    core = associator_inverse(power(m, i - 1), m, m)
    return whisker_right(core, m, k - i - 1)


def isolate_first(m: ObjectHandle, k: int) -> Morphism:
    """``α¹ : m^{⊗k} -> m ⊗ m^{⊗(k-1)}`` as a chain of ``k - 2`` associator layers."""
    if k < 2:
        raise ValueError(f"isolate_first needs k >= 2, got {k}")
    out = identity(power(m, k))
    for j in range(1, k - 1):
        layer = whisker_right(associator(m, power(m, j), m), m, k - j - 2)
        out = compose(layer, out)
    return out
