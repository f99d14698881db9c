"""Dense exact matrices over Z, Q and Z/n.

Storage is a flat row-major list of raw ring values (see :mod:`rings`).
Products skip zero entries, which is what keeps the structure-constant
matrices of this package cheap to multiply even though they are stored
densely. Elimination routines work on sparse row dictionaries internally.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import InvariantBreach, RingError, ShapeError
from .rings import QQ, ZZ, RingSpec, Scalar


def _normalize_list(ring: RingSpec, values):
    if ring.kind == "Z":
        return values
    if ring.kind == "Zmod":
        n = ring.modulus
        return [v % n for v in values]
    if all(type(v) is int for v in values):
        return values
    return [v.numerator if type(v) is Fraction and v.denominator == 1 else v for v in values]


def _coerce_list(ring: RingSpec, values):
    # fast path for the common case of plain ints
    if all(type(v) is int for v in values):
        if ring.kind == "Zmod":
            n = ring.modulus
            return [v % n for v in values]
        return values
    return [ring.normalize(v) for v in values]


class Matrix:
    """An exact ``rows x cols`` matrix. Treat instances as immutable."""

    __slots__ = ("ring", "rows", "cols", "entries", "_hash", "_nz_rows")

    def __init__(self, ring: RingSpec, rows: int, cols: int, entries, *, normalized=False):
        if rows < 0 or cols < 0:
            raise ShapeError(f"negative shape {rows}x{cols}")
        entries = list(entries)
        if len(entries) != rows * cols:
            raise ShapeError(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(entries)}")
        if not normalized:
            entries = _coerce_list(ring, entries)
        self.ring = ring
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._hash = None
        self._nz_rows = None

    @classmethod
    def from_rows(cls, ring, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ShapeError(f"ragged rows: expected {cols} columns, got {len(r)}")
        return cls(ring, len(rows), cols, [v for r in rows for v in r])

    @classmethod
    def zeros(cls, ring, rows, cols):
        return cls(ring, rows, cols, [0] * (rows * cols), normalized=True)

    @classmethod
    def identity(cls, ring, n):
        e = [0] * (n * n)
        for i in range(n):
            e[i * n + i] = 1
        return cls(ring, n, n, e, normalized=True)

    @classmethod
    def diagonal(cls, ring, values):
        values = list(values)
        n = len(values)
        e = [0] * (n * n)
        for i, v in enumerate(values):
            e[i * n + i] = v
        return cls(ring, n, n, e)

    @classmethod
    def from_columns(cls, ring, columns, rows):
        columns = [list(c) for c in columns]
        e = [0] * (rows * len(columns))
        for j, c in enumerate(columns):
            if len(c) != rows:
                raise ShapeError(f"column {j} has length {len(c)}, expected {rows}")
            for i, v in enumerate(c):
                e[i * len(columns) + j] = v
        return cls(ring, rows, len(columns), e)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def scalar(self, i, j) -> Scalar:
        return Scalar(self.ring, self[i, j])

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j):
        return self.entries[j::self.cols] if self.cols else []

    def nonzero_rows(self):
        """Per row, the list of ``(column, value)`` pairs with nonzero value (cached)."""
        if self._nz_rows is None:
            c, e = self.cols, self.entries
            self._nz_rows = [[(j, e[i * c + j]) for j in range(c) if e[i * c + j]]
                             for i in range(self.rows)]
        return self._nz_rows

    def to_rows(self):
        return [self.row(i) for i in range(self.rows)]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> Matrix:
        r, c, e = self.rows, self.cols, self.entries
        return Matrix(self.ring, c, r, [e[i * c + j] for j in range(c) for i in range(r)],
                      normalized=True)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def nonzero_count(self) -> int:
        return sum(1 for v in self.entries if v)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self.ring == other.ring and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.rows, self.cols, tuple(self.entries)))
        return self._hash

    def _same_shape(self, other):
        if self.ring != other.ring:
            raise RingError(f"ring mismatch: {self.ring} vs {other.ring}")
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._same_shape(other)
        return Matrix(self.ring, self.rows, self.cols,
                      _normalize_list(self.ring, [a + b for a, b in zip(self.entries, other.entries)]),
                      normalized=True)

    def __sub__(self, other):
        self._same_shape(other)
        return Matrix(self.ring, self.rows, self.cols,
                      _normalize_list(self.ring, [a - b for a, b in zip(self.entries, other.entries)]),
                      normalized=True)

    def __neg__(self):
        return Matrix(self.ring, self.rows, self.cols,
                      _normalize_list(self.ring, [-a for a in self.entries]), normalized=True)

    def scale(self, c) -> Matrix:
        if isinstance(c, Scalar):
            if c.ring != self.ring:
                raise RingError(f"ring mismatch: {c.ring} vs {self.ring}")
            c = c.value
        c = self.ring.normalize(c)
        return Matrix(self.ring, self.rows, self.cols,
                      _normalize_list(self.ring, [c * a for a in self.entries]), normalized=True)

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __repr__(self):
        return f"Matrix({self.ring}, {self.rows}x{self.cols}, {self.to_rows()!r})"

    def pretty(self) -> str:
        rows = [[str(v) for v in r] for r in self.to_rows()]
        if not rows or not self.cols:
            return f"[{self.rows}x{self.cols} empty]"
        w = max(len(s) for r in rows for s in r)
        return "\n".join("[" + " ".join(s.rjust(w) for s in r) + "]" for r in rows)


def _value_fixer(ring: RingSpec):
    """Normaliser for products/sums of already normalised values, or None for Z."""
    if ring.kind == "Z":
        return None
    if ring.kind == "Zmod":
        n = ring.modulus
        return lambda v: v % n
    return lambda v: v.numerator if type(v) is Fraction and v.denominator == 1 else v


def _from_sparse_rows(ring, n, p, sparse):
    """Build a matrix from per-row ``{col: value}`` dicts, dropping zeros."""
    fix = _value_fixer(ring)
    out = [0] * (n * p)
    nz = []
    for i, acc in enumerate(sparse):
        row = []
        base = i * p
        for j in sorted(acc):
            v = acc[j] if fix is None else fix(acc[j])
            if v:
                out[base + j] = v
                row.append((j, v))
        nz.append(row)
    m = Matrix(ring, n, p, out, normalized=True)
    m._nz_rows = nz
    return m


def mat_mul(g: Matrix, f: Matrix) -> Matrix:
    """Exact product ``g @ f``."""
    if g.ring != f.ring:
        raise RingError(f"ring mismatch: {g.ring} vs {f.ring}")
    if g.cols != f.rows:
        raise ShapeError(f"cannot multiply {g.rows}x{g.cols} by {f.rows}x{f.cols}")
    frows = f.nonzero_rows()
    sparse = []
    for grow in g.nonzero_rows():
        acc = {}
        for k, a in grow:
            for j, b in frows[k]:
                acc[j] = acc.get(j, 0) + a * b
        sparse.append(acc)
    return _from_sparse_rows(g.ring, g.rows, f.cols, sparse)


def kronecker(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; row ``i*b.rows + r`` pairs row i of a with row r of b."""
    if a.ring != b.ring:
        raise RingError(f"ring mismatch: {a.ring} vs {b.ring}")
    arows, brows = a.nonzero_rows(), b.nonzero_rows()
    sparse = []
    for i in range(a.rows):
        for r in range(b.rows):
            acc = {}
            for j, x in arows[i]:
                c0 = j * b.cols
                for c, v in brows[r]:
                    acc[c0 + c] = x * v
            sparse.append(acc)
    return _from_sparse_rows(a.ring, a.rows * b.rows, a.cols * b.cols, sparse)


def hstack(blocks, ring=None, rows=None) -> Matrix:
    blocks = list(blocks)
    if not blocks:
        return Matrix.zeros(ring, rows or 0, 0)
    ring = blocks[0].ring
    rows = blocks[0].rows
    cols = []
    for b in blocks:
        if b.rows != rows or b.ring != ring:
            raise ShapeError("hstack blocks disagree in rows or ring")
        cols.extend(b.columns())
    return Matrix.from_columns(ring, cols, rows)


# ---------------------------------------------------------------------------
# elimination over fields


def _check_rank_ring(ring: RingSpec):
    if ring.kind == "Zmod" and not ring.is_field:
        raise RingError(f"rank/kernel over {ring} is not supported (composite modulus)")


def _sparse_rows(a: Matrix):
    c, e = a.cols, a.entries
    out = []
    for i in range(a.rows):
        base = i * c
        row = {j: e[base + j] for j in range(c) if e[base + j]}
        if row:
            out.append(row)
    return out


def _primitive_int_row(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g != 1:
        row = {k: v // g for k, v in row.items()}
    return row


def _rank_integer_rows(rows) -> int:
    """Rank over Q of integer sparse rows, fraction-free with content removal."""
    pivots = {}
    for row in rows:
        row = _primitive_int_row(row)
        while row:
            c = min(row)
            p = pivots.get(c)
            if p is None:
                pivots[c] = row
                break
            a, b = row[c], p[c]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {k: v * b for k, v in row.items()}
            for k, v in p.items():
                w = new.get(k, 0) - a * v
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            row = _primitive_int_row(new) if new else new
    return len(pivots)


def _to_integer_rows(rows):
    out = []
    for row in rows:
        den = 1
        for v in row.values():
            if type(v) is Fraction:
                den = den * v.denominator // gcd(den, v.denominator)
        if den == 1:
            out.append(row)
        else:
            out.append({k: int(v * den) for k, v in row.items()})
    return out


def _field_rref(ring: RingSpec, rows):
    """Reduced row echelon form over a field; returns {pivot column: row}."""
    mod = ring.modulus if ring.kind == "Zmod" else None

    def norm(v):
        if mod is not None:
            return v % mod
        return v.numerator if type(v) is Fraction and v.denominator == 1 else v

    pivots = {}
    for row in rows:
        row = dict(row)
        while row:
            c = min(row)
            p = pivots.get(c)
            if p is None:
                inv = ring.inv(row[c])
                row = {k: norm(v * inv) for k, v in row.items()}
                pivots[c] = row
                break
            a = row[c]
            for k, v in p.items():
                w = norm(row.get(k, 0) - a * v)
                if w:
                    row[k] = w
                else:
                    row.pop(k, None)
    # back substitution, highest pivot first
    for c in sorted(pivots, reverse=True):
        p = pivots[c]
        for c2, q in pivots.items():
            if c2 < c and c in q:
                a = q[c]
                for k, v in p.items():
                    w = norm(q.get(k, 0) - a * v)
                    if w:
                        q[k] = w
                    else:
                        q.pop(k, None)
    return pivots


def rank(a: Matrix) -> int:
    """Exact rank; over Z this is the rank over Q."""
    _check_rank_ring(a.ring)
    rows = _sparse_rows(a)
    if a.ring.kind in ("Z", "Q"):
        return _rank_integer_rows(_to_integer_rows(rows))
    return len(_field_rref(a.ring, rows))


# ---------------------------------------------------------------------------
# integer echelon forms


def _int_row_echelon(rows, ncols, track=False):
    """Row echelon form of a dense integer matrix by unimodular row operations.

    Returns ``(H, U, pivot_cols)`` with ``U @ A = H`` when ``track`` is set.
    Pivots are positive; entries above pivots are not reduced.
    """
    H = [list(r) for r in rows]
    m = len(H)
    U = [[int(i == j) for j in range(m)] for i in range(m)] if track else None
    pivot_cols = []
    r = 0
    for c in range(ncols):
        if r >= m:
            break
        while True:
            nz = [i for i in range(r, m) if H[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(H[i][c]))
            if piv != r:
                H[r], H[piv] = H[piv], H[r]
                if track:
                    U[r], U[piv] = U[piv], U[r]
            done = True
            p = H[r][c]
            for i in range(r + 1, m):
                x = H[i][c]
                if x:
                    q = x // p
                    if q:
                        Hr = H[r]
                        H[i] = [u - q * v for u, v in zip(H[i], Hr)]
                        if track:
                            U[i] = [u - q * v for u, v in zip(U[i], U[r])]
                    if H[i][c]:
                        done = False
            if done:
                break
        if r < m and H[r][c]:
            if H[r][c] < 0:
                H[r] = [-v for v in H[r]]
                if track:
                    U[r] = [-v for v in U[r]]
            pivot_cols.append(c)
            r += 1
    return H, U, pivot_cols


def hermite_normal_form_rows(rows, ncols):
    """Row-style Hermite normal form: nonzero rows only, positive pivots,
    entries above each pivot reduced into ``[0, pivot)``."""
    H, _, pivots = _int_row_echelon(rows, ncols)
    H = H[:len(pivots)]
    for r, c in enumerate(pivots):
        p = H[r][c]
        for i in range(r):
            q = H[i][c] // p
            if q:
                H[i] = [u - q * v for u, v in zip(H[i], H[r])]
    return H, pivots


def hermite_normal_form(a: Matrix) -> Matrix:
    if a.ring != ZZ:
        raise RingError("Hermite normal form needs an integer matrix")
    H, _ = hermite_normal_form_rows(a.to_rows(), a.cols)
    return Matrix.from_rows(ZZ, H, a.cols)


def _integer_kernel_rows(a: Matrix):
    # left kernel of A^T via a unimodular transform: saturated by construction
    At = a.transpose().to_rows()
    H, U, pivots = _int_row_echelon(At, a.rows, track=True)
    basis = U[len(pivots):]
    if not basis:
        return []
    hnf, _ = hermite_normal_form_rows(basis, a.cols)
    return hnf


def _field_kernel_rows(a: Matrix):
    ring = a.ring
    pivots = _field_rref(ring, _sparse_rows(a))
    free = [j for j in range(a.cols) if j not in pivots]
    vecs = []
    for f in free:
        v = {f: 1}
        for c, p in pivots.items():
            x = p.get(f)
            if x:
                v[c] = ring.neg(x)
        vecs.append(v)
    # canonical basis: reduced echelon form of the kernel vectors
    red = _field_rref(ring, vecs)
    out = []
    for c in sorted(red):
        row = [0] * a.cols
        for k, v in red[c].items():
            row[k] = v
        out.append(row)
    return out


def kernel_basis(a: Matrix) -> Matrix:
    """Columns form a basis of ``{x : a x = 0}``.

    Over Z the basis spans the full integer solution lattice. The basis is
    canonical: as rows it is in reduced echelon (field) or Hermite (Z) form.
    """
    _check_rank_ring(a.ring)
    if a.ring == ZZ:
        rows = _integer_kernel_rows(a)
    else:
        rows = _field_kernel_rows(a)
    return Matrix.from_columns(a.ring, rows, a.cols)


def lattice_coordinates(basis: Matrix, vectors: Matrix) -> Matrix:
    """Coordinates ``C`` with ``basis @ C == vectors``.

    ``basis`` columns must be a kernel basis as returned by :func:`kernel_basis`
    (echelon shaped). Raises InvariantBreach if some vector is not in the span.
    """
    ring = basis.ring
    if vectors.rows != basis.rows:
        raise ShapeError("basis and vectors live in different spaces")
    B = basis.columns()
    leads = []
    for b in B:
        j = next((i for i, v in enumerate(b) if v), None)
        if j is None:
            raise ShapeError("zero vector in basis")
        leads.append(j)
    coords = []
    for vec in vectors.columns():
        v = list(vec)
        c = []
        for b, j in zip(B, leads):
            x = v[j]
            if ring == ZZ:
                q, rem = divmod(x, b[j])
                if rem:
                    raise InvariantBreach("vector is not in the integer span of the basis")
            else:
                q = ring.mul(x, ring.inv(b[j]))
            c.append(q)
            if q:
                v = [ring.sub(u, ring.mul(q, w)) for u, w in zip(v, b)]
        if any(v):
            raise InvariantBreach("vector is not in the span of the basis")
        coords.append(c)
    return Matrix.from_columns(ring, coords, len(B))


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SnfResult:
    D: Matrix
    U: Matrix
    V: Matrix

    @property
    def invariant_factors(self):
        n = min(self.D.rows, self.D.cols)
        return [self.D[i, i] for i in range(n) if self.D[i, i]]

    @property
    def rank(self):
        return len(self.invariant_factors)


def smith_normal_form(a: Matrix) -> SnfResult:
    """``U @ a @ V == D`` with U, V unimodular and ``d1 | d2 | ...`` on the diagonal."""
    if a.ring != ZZ:
        raise RingError(f"Smith normal form needs an integer matrix, got {a.ring}")
    m, n = a.rows, a.cols
    A = a.to_rows()
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for R in A:
            R[i], R[j] = R[j], R[i]
        for R in V:
            R[i], R[j] = R[j], R[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        A[dst] = [u + q * v for u, v in zip(A[dst], A[src])]
        U[dst] = [u + q * v for u, v in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for R in A:
            R[dst] += q * R[src]
        for R in V:
            R[dst] += q * R[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = A[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    if A[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    if A[t][j]:
                        clean = False
            if not clean:
                # move the smallest remainder in row/column t into the pivot
                cand = [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
                cand += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
                _, i, j = min(cand)
                if j == t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            A[t] = [-v for v in A[t]]
            U[t] = [-v for v in U[t]]
    D = Matrix.from_rows(ZZ, A, n)
    return SnfResult(D, Matrix.from_rows(ZZ, U, m), Matrix.from_rows(ZZ, V, n))


def determinant(a: Matrix):
    """Exact determinant (Bareiss over Z, Gaussian elimination otherwise)."""
    if a.rows != a.cols:
        raise ShapeError("determinant of a non-square matrix")
    n = a.rows
    if n == 0:
        return 1
    ring = a.ring
    if ring == ZZ:
        M = a.to_rows()
        sign, prev = 1, 1
        for k in range(n - 1):
            if M[k][k] == 0:
                sw = next((i for i in range(k + 1, n) if M[i][k]), None)
                if sw is None:
                    return 0
                M[k], M[sw] = M[sw], M[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            prev = M[k][k]
        return sign * M[n - 1][n - 1]
    _check_rank_ring(ring)
    M = a.to_rows()
    det = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if M[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
            det = ring.neg(det)
        det = ring.mul(det, M[k][k])
        inv = ring.inv(M[k][k])
        for i in range(k + 1, n):
            q = ring.mul(M[i][k], inv)
            if q:
                M[i] = [ring.sub(u, ring.mul(q, v)) for u, v in zip(M[i], M[k])]
    return det


def change_ring(a: Matrix, ring: RingSpec) -> Matrix:
    return Matrix(ring, a.rows, a.cols, a.entries)


__all__ = [
    "Matrix", "SnfResult", "mat_mul", "kronecker", "hstack", "rank", "kernel_basis",
    "lattice_coordinates", "smith_normal_form", "hermite_normal_form", "determinant",
    "change_ring", "QQ", "ZZ",
]
