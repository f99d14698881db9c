"""JSON instance files: a ring, a category, a monoid and optionally a bimodule.

Scalars are strings so that arbitrary precision survives transport. Nothing
about the algebra is trusted at load time; only shapes, parseability and the
cocycle's normalisation and invertibility are enforced here.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path

from .algebra import BimoduleObject, MonoidObject, make_bimodule, make_monoid, regular_bimodule
from .errors import InstanceError, RingError, ShapeError
from .linalg import Matrix
from .monoidal import FreeModCategory, GradedVecCategory, MonoidalCategory
from .rings import QQ, ZZ, RingSpec, zmod

FORMAT_VERSION = 1


@dataclass(frozen=True)
class LoadedInstance:
    category: MonoidalCategory
    monoid: MonoidObject
    bimodule: BimoduleObject
    digest: str
    regular: bool


def _ring(raw):
    if raw == "Z":
        return ZZ
    if raw == "Q":
        return QQ
    if isinstance(raw, dict) and set(raw) == {"Zmod"}:
        n = raw["Zmod"]
        if not isinstance(n, int) or isinstance(n, bool) or n < 2:
            raise InstanceError(f"ring.Zmod: modulus must be an integer >= 2, got {n!r}")
        return zmod(n)
    raise InstanceError(f'ring: expected "Z", "Q" or {{"Zmod": n}}, got {raw!r}')


def _scalar(ring: RingSpec, raw, where):
    if isinstance(raw, bool) or not isinstance(raw, (str, int)):
        raise InstanceError(f"{where}: scalars must be strings, got {raw!r}")
    try:
        return ring.parse(str(raw))
    except RingError as exc:
        raise InstanceError(f"{where}: {exc}") from exc


def _require(obj, key, where):
    if not isinstance(obj, dict):
        raise InstanceError(f"{where}: expected an object")
    if key not in obj:
        raise InstanceError(f"{where}.{key}: missing field")
    return obj[key]


def _dim(obj, where):
    d = _require(obj, "dim", where)
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise InstanceError(f"{where}.dim: expected a positive integer, got {d!r}")
    return d


def _matrix(ring, raw, rows, cols, where):
    if not isinstance(raw, list) or len(raw) != rows:
        got = len(raw) if isinstance(raw, list) else type(raw).__name__
        raise ShapeError(f"{where}: expected {rows} rows, got {got}")
    out = []
    for r, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != cols:
            got = len(row) if isinstance(row, list) else type(row).__name__
            raise ShapeError(f"{where}[{r}]: expected {cols} columns, got {got}")
        out.append([_scalar(ring, v, f"{where}[{r}][{c}]") for c, v in enumerate(row)])
    return Matrix.from_rows(ring, out, cols)


def _grades(obj, dim, order, where):
    if order is None:
        if "grades" in obj:
            raise InstanceError(f"{where}.grades: only allowed for graded_vec categories")
        return None
    g = _require(obj, "grades", where)
    if not isinstance(g, list) or len(g) != dim:
        raise ShapeError(f"{where}.grades: expected {dim} integers")
    if any(not isinstance(v, int) or isinstance(v, bool) for v in g):
        raise InstanceError(f"{where}.grades: entries must be integers")
    return [v % order for v in g]


def _category(ring, raw):
    kind = _require(raw, "kind", "category")
    if kind == "free_mod":
        return FreeModCategory(ring), None
    if kind != "graded_vec":
        raise InstanceError(f'category.kind: expected "free_mod" or "graded_vec", got {kind!r}')
    n = _require(raw, "group_order", "category")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InstanceError(f"category.group_order: expected a positive integer, got {n!r}")
    if not ring.is_field:
        raise InstanceError(f"category: graded_vec needs a field ring, got {ring}")
    table = _require(raw, "cocycle", "category")
    if not isinstance(table, list) or len(table) != n ** 3:
        raise ShapeError(f"category.cocycle: expected {n ** 3} entries")
    values = [_scalar(ring, v, f"category.cocycle[{i}]") for i, v in enumerate(table)]
    try:
        return GradedVecCategory(ring, n, values), n
    except InstanceError as exc:
        raise InstanceError(f"category.cocycle: {exc}") from exc


def parse_instance(data: dict, digest: str = "") -> LoadedInstance:
    if not isinstance(data, dict):
        raise InstanceError("top level: expected an object")
    version = data.get("format_version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise InstanceError(f"format_version: unsupported value {version!r}")
    ring = _ring(_require(data, "ring", "top level"))
    cat, order = _category(ring, _require(data, "category", "top level"))

    mon = _require(data, "monoid", "top level")
    d = _dim(mon, "monoid")
    mu = _matrix(ring, _require(mon, "mu", "monoid"), d, d * d, "monoid.mu")
    eta_raw = _require(mon, "eta", "monoid")
    if not isinstance(eta_raw, list) or len(eta_raw) != d:
        raise ShapeError(f"monoid.eta: expected {d} scalars")
    eta = Matrix.from_rows(ring, [[_scalar(ring, v, f"monoid.eta[{i}]")]
                                  for i, v in enumerate(eta_raw)], 1)
    grades = _grades(mon, d, order, "monoid")
    try:
        m = make_monoid(cat, "M", mu, eta, rank=d, grades=grades)
    except ShapeError as exc:
        raise ShapeError(f"monoid: {exc}") from exc

    bim = data.get("bimodule")
    if bim is None:
        return LoadedInstance(cat, m, regular_bimodule(m), digest, True)
    e = _dim(bim, "bimodule")
    nu = _matrix(ring, _require(bim, "nu", "bimodule"), e, d * e, "bimodule.nu")
    om = _matrix(ring, _require(bim, "omega", "bimodule"), e, e * d, "bimodule.omega")
    bgrades = _grades(bim, e, order, "bimodule")
    try:
        x = make_bimodule(m, "X", nu, om, grades=bgrades)
    except ShapeError as exc:
        raise ShapeError(f"bimodule: {exc}") from exc
    return LoadedInstance(cat, m, x, digest, False)


def load_instance(path) -> LoadedInstance:
    """Read and validate an instance file; structure axioms are not checked here."""
    raw = Path(path).read_bytes()
    digest = hashlib.sha256(raw).hexdigest()
    try:
        data = json.loads(raw.decode("utf-8"))
    except UnicodeDecodeError as exc:
        raise InstanceError(f"{path}: not UTF-8 ({exc})") from exc
    except json.JSONDecodeError as exc:
        raise InstanceError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return parse_instance(data, digest)


def instance_to_dict(m: MonoidObject, x: BimoduleObject | None = None) -> dict:
    """Inverse of ``parse_instance``; used to write the shipped instance files."""
    ring = m.ring
    cat = m.category
    fmt = ring.format

    def rows(mat):
        return [[fmt(v) for v in r] for r in mat.to_rows()]

    if ring.kind == "Zmod":
        ring_raw = {"Zmod": ring.modulus}
    else:
        ring_raw = ring.kind
    if cat.graded:
        cat_raw = {"kind": "graded_vec", "group_order": cat.order,
                   "cocycle": [fmt(v) for v in cat.cocycle]}
    else:
        cat_raw = {"kind": "free_mod"}
    mon = {"dim": m.rank, "mu": rows(m.mu.mat), "eta": [fmt(r[0]) for r in m.eta.mat.to_rows()]}
    if cat.graded:
        mon["grades"] = list(m.M.grades)
    out = {"format_version": FORMAT_VERSION, "ring": ring_raw, "category": cat_raw, "monoid": mon}
    if x is not None and x.X != m.M:
        b = {"dim": x.rank, "nu": rows(x.nu.mat), "omega": rows(x.omega.mat)}
        if cat.graded:
            b["grades"] = list(x.X.grades)
        out["bimodule"] = b
    return out
