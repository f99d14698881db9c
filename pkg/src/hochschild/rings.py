"""Exact coefficient rings: the integers, the rationals and Z/n.

Values are plain Python objects so that matrix kernels can run on them
without wrapping: ``int`` for Z and Z/n (reduced into ``[0, n)``), and for Q
an ``int`` when the value is integral and a reduced ``Fraction`` otherwise.
``Fraction`` and ``int`` compare and hash consistently, and the
normalisation makes the representation unique, so equality is exact.

:class:`Scalar` pairs a value with its ring for the public arithmetic API.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt

from .errors import NotInvertibleError, RingError, ScalarParseError

_SCALAR_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for p in range(3, isqrt(n) + 1, 2):
        if n % p == 0:
            return False
    return True


@dataclass(frozen=True)
class RingSpec:
    """One of Z, Q or Z/n.

    Use the module constants ``ZZ`` and ``QQ`` or :func:`zmod` rather than
    calling the constructor directly.
    """

    kind: str  # "Z", "Q" or "Zmod"
    modulus: int | None = None
    is_field: bool = field(init=False, compare=False)

    def __post_init__(self):
        if self.kind not in ("Z", "Q", "Zmod"):
            raise RingError(f"unknown ring kind {self.kind!r}")
        if (self.kind == "Zmod") != (self.modulus is not None):
            raise RingError("modulus is required for Zmod and forbidden otherwise")
        if self.kind == "Zmod" and (not isinstance(self.modulus, int) or self.modulus < 2):
            raise RingError(f"modulus must be an integer >= 2, got {self.modulus!r}")
        is_field = self.kind == "Q" or (self.kind == "Zmod" and _is_prime(self.modulus))
        object.__setattr__(self, "is_field", is_field)

    def __str__(self):
        return {"Z": "Z", "Q": "Q"}.get(self.kind) or f"Z/{self.modulus}"

    # raw-value arithmetic; inputs are assumed normalised

    def normalize(self, v):
        if self.kind == "Z":
            if isinstance(v, Fraction):
                if v.denominator != 1:
                    raise RingError(f"{v} is not an integer")
                return v.numerator
            return int(v)
        if self.kind == "Zmod":
            if isinstance(v, Fraction):
                return (v.numerator * pow(v.denominator, -1, self.modulus)) % self.modulus
            return int(v) % self.modulus
        if isinstance(v, Fraction):
            return v.numerator if v.denominator == 1 else v
        return int(v)

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return self.normalize(a + b)

    def sub(self, a, b):
        return self.normalize(a - b)

    def mul(self, a, b):
        return self.normalize(a * b)

    def neg(self, a):
        return self.normalize(-a)

    def is_unit(self, a) -> bool:
        if self.kind == "Q":
            return a != 0
        if self.kind == "Z":
            return a in (1, -1)
        return gcd(a, self.modulus) == 1

    def inv(self, a):
        if a == 0:
            raise NotInvertibleError(f"0 has no inverse in {self}")
        if self.kind == "Q":
            return self.normalize(1 / Fraction(a))
        if self.kind == "Z":
            if a in (1, -1):
                return a
            raise NotInvertibleError(f"{a} is not a unit in Z")
        if gcd(a, self.modulus) != 1:
            raise NotInvertibleError(f"{a} is not a unit in {self}")
        return pow(a, -1, self.modulus)

    def parse(self, text: str):
        if not isinstance(text, str):
            raise ScalarParseError(f"scalar must be given as a string, got {text!r}")
        m = _SCALAR_RE.match(text.replace("−", "-"))
        if m is None:
            raise ScalarParseError(f"malformed scalar {text!r}")
        num, den = int(m.group(1)), m.group(2)
        if den is None:
            return self.normalize(num)
        den = int(den)
        if den == 0:
            raise ScalarParseError(f"zero denominator in {text!r}")
        if self.kind != "Q":
            raise ScalarParseError(f"fraction {text!r} given for ring {self}")
        return self.normalize(Fraction(num, den))

    def format(self, v) -> str:
        return str(v)


ZZ = RingSpec("Z")
QQ = RingSpec("Q")


def zmod(n: int) -> RingSpec:
    return RingSpec("Zmod", n)


@dataclass(frozen=True)
class Scalar:
    """A ring element. Arithmetic between different rings raises RingError."""

    ring: RingSpec
    value: object

    def __post_init__(self):
        object.__setattr__(self, "value", self.ring.normalize(self.value))

    def _check(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        if other.ring != self.ring:
            raise RingError(f"ring mismatch: {self.ring} vs {other.ring}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return Scalar(self.ring, self.ring.add(self.value, other.value))

    def __sub__(self, other):
        other = self._check(other)
        return Scalar(self.ring, self.ring.sub(self.value, other.value))

    def __mul__(self, other):
        other = self._check(other)
        return Scalar(self.ring, self.ring.mul(self.value, other.value))

    def __neg__(self):
        return Scalar(self.ring, self.ring.neg(self.value))

    def inverse(self) -> Scalar:
        return Scalar(self.ring, self.ring.inv(self.value))

    def __str__(self):
        return self.ring.format(self.value)


def ring_arith(spec: RingSpec, op: str, a: Scalar, b: Scalar | None = None) -> Scalar:
    """Apply ``op`` in ``{"add", "sub", "mul", "neg"}``; ``b`` is ignored for neg."""
    for s in (a, b):
        if s is not None and s.ring != spec:
            raise RingError(f"ring mismatch: scalar in {s.ring}, expected {spec}")
    if op == "neg":
        return -a
    if b is None:
        raise RingError(f"{op} needs two operands")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise RingError(f"unknown operation {op!r}")


def scalar_inverse(spec: RingSpec, a: Scalar) -> Scalar:
    if a.ring != spec:
        raise RingError(f"ring mismatch: scalar in {a.ring}, expected {spec}")
    return a.inverse()


def parse_scalar(spec: RingSpec, text: str) -> Scalar:
    return Scalar(spec, spec.parse(text))


def format_scalar(a: Scalar) -> str:
    return str(a)
