"""Exact scalar arithmetic over prime fields GF(p) and the rationals.

Scalars carry their field with them and are kept in a unique canonical form:
residues in [0, p) for GF(p), reduced fractions with positive denominator for
the rationals.  Equality and hashing are therefore structural, so scalars can
be used as dict keys and set members.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FieldMismatch, ZeroInverse

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin test (exact far beyond 64-bit inputs)."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class FieldSpec:
    """Ground field descriptor: GF(p) for a prime p, or the rationals."""

    __slots__ = ("kind", "p")

    _prime_cache: dict[int, "FieldSpec"] = {}

    def __init__(self, kind: str, p: int | None = None):
        if kind == "prime":
            if p is None or not is_prime(p):
                raise ValueError(f"modulus {p!r} is not prime")
        elif kind != "rational":
            raise ValueError(f"unknown field kind {kind!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("FieldSpec is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.kind == other.kind
            and self.p == other.p
        )

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return f"GF({self.p})" if self.kind == "prime" else "QQ"

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "prime"

    def element(self, value) -> "Scalar":
        """Coerce an int, Fraction, decimal/fraction string, or Scalar."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatch(f"scalar from {value.field} used in {self}")
            return value
        if self.kind == "prime":
            if isinstance(value, str):
                value = int(value.strip(), 10)
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise ValueError(f"{value} is not an integer residue")
                value = value.numerator
            if not isinstance(value, int):
                raise TypeError(f"cannot coerce {value!r} into {self}")
            return Scalar(value % self.p, self)
        if isinstance(value, (int, str)):
            value = Fraction(value)
        if not isinstance(value, Fraction):
            raise TypeError(f"cannot coerce {value!r} into {self}")
        return Scalar(value, self)

    @property
    def zero(self) -> "Scalar":
        return self.element(0)

    @property
    def one(self) -> "Scalar":
        return self.element(1)

    def random_element(self, rng) -> "Scalar":
        """Draw a scalar from `rng`; small mixed-sign fractions over QQ."""
        if self.kind == "prime":
            return Scalar(rng.randrange(self.p), self)
        return Scalar(Fraction(rng.randrange(-9, 10), rng.randrange(1, 10)), self)


def gf(p: int) -> FieldSpec:
    """The prime field GF(p); instances are interned per modulus."""
    spec = FieldSpec._prime_cache.get(p)
    if spec is None:
        spec = FieldSpec("prime", p)
        FieldSpec._prime_cache[p] = spec
    return spec


RATIONALS = FieldSpec("rational")


class Scalar:
    """A field element in canonical form, closed under arithmetic."""

    __slots__ = ("value", "field")

    def __init__(self, value, field: FieldSpec):
        # value must already be canonical; use FieldSpec.element to coerce
        self.value = value
        self.field = field

    def _coerce(self, other) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field is self.field or other.field == self.field:
                return other
            raise FieldMismatch(f"{self.field} vs {other.field}")
        return self.field.element(other)

    def __add__(self, other):
        other = self._coerce(other)
        f = self.field
        if f.kind == "prime":
            return Scalar((self.value + other.value) % f.p, f)
        return Scalar(self.value + other.value, f)

    def __sub__(self, other):
        other = self._coerce(other)
        f = self.field
        if f.kind == "prime":
            return Scalar((self.value - other.value) % f.p, f)
        return Scalar(self.value - other.value, f)

    def __mul__(self, other):
        other = self._coerce(other)
        f = self.field
        if f.kind == "prime":
            return Scalar(self.value * other.value % f.p, f)
        return Scalar(self.value * other.value, f)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        f = self.field
        if f.kind == "prime":
            return Scalar(-self.value % f.p, f)
        return Scalar(-self.value, f)

    def inverse(self) -> "Scalar":
        if not self.value:
            raise ZeroInverse(f"zero has no inverse in {self.field}")
        f = self.field
        if f.kind == "prime":
            return Scalar(pow(self.value, f.p - 2, f.p), f)
        return Scalar(1 / self.value, f)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __bool__(self):
        return bool(self.value)

    @property
    def is_zero(self) -> bool:
        return not self.value

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self == self.field.element(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.kind, self.field.p, self.value))

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"{self.value} in {self.field!r}"


def scalar_inv(a: Scalar) -> Scalar:
    """Multiplicative inverse; raises ZeroInverse on 0."""
    return a.inverse()
