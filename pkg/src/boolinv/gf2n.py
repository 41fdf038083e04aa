"""GF(2^n) arithmetic and the permutation-polynomial decision.

Field elements are coefficient bit vectors in the polynomial basis
{1, a, ..., a^(n-1)} packed into ints (bit i = coefficient of a^i).
A univariate polynomial over the field expands into n Boolean
coordinate functions by evaluating at all 2^n points and transforming
each output bit's truth table to ANF; the polynomial permutes the field
exactly when that square map is invertible.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import Anf, mask_of
from .maps import BoolMap, is_invertible_square
from .oracle import TruthTable

#: Everything here enumerates 2**n field points; stay at desk scale.
MAX_DEGREE = 16


def _poly_deg(p: int) -> int:
    return p.bit_length() - 1


def _clmul(a: int, b: int) -> int:
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        a <<= 1
        b >>= 1
    return acc


def _poly_mod(a: int, m: int) -> int:
    dm = _poly_deg(m)
    while _poly_deg(a) >= dm and a:
        a ^= m << (_poly_deg(a) - dm)
    return a


def _is_irreducible(m: int, n: int) -> bool:
    """Trial division by every polynomial of degree 1..n//2."""
    if _poly_deg(m) != n or not m & 1:
        return False
    for d in range(1, n // 2 + 1):
        for g in range(1 << d, 1 << (d + 1)):
            if _poly_mod(m, g) == 0:
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Degree and monic irreducible modulus of one binary field."""

    n: int
    modulus: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_DEGREE:
            raise ValueError(f"extension degree must be in 1..{MAX_DEGREE}")
        if not _is_irreducible(self.modulus, self.n):
            raise ValueError(
                f"modulus {self.modulus:#b} is not irreducible of degree {self.n}"
            )

    @classmethod
    def default(cls, n: int) -> "FieldSpec":
        """Lowest irreducible polynomial of degree n, found by search."""
        return _default_spec(n)

    @property
    def order(self) -> int:
        return 1 << self.n

    def element(self, value: int) -> "FieldElem":
        return FieldElem(self, value)

    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    def one(self) -> "FieldElem":
        return FieldElem(self, 1)


@dataclass(frozen=True)
class FieldElem:
    """Packed basis coefficients; arithmetic is mod the field's modulus."""

    spec: FieldSpec
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.spec.order:
            raise ValueError(f"value {self.value} outside the field of {self.spec.order}")

    def _check(self, other: "FieldElem") -> None:
        if self.spec != other.spec:
            raise ValueError("operands belong to different fields")

    def __add__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        return FieldElem(self.spec, self.value ^ other.value)

    def __mul__(self, other: "FieldElem") -> "FieldElem":
        self._check(other)
        prod = _clmul(self.value, other.value)
        return FieldElem(self.spec, _poly_mod(prod, self.spec.modulus))

    def __pow__(self, e: int) -> "FieldElem":
        if e < 0:
            raise ValueError("negative exponents not supported")
        acc = FieldElem(self.spec, 1)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    @property
    def is_zero(self) -> bool:
        return self.value == 0


@lru_cache(maxsize=None)
def _default_spec(n: int) -> FieldSpec:
    if not 1 <= n <= MAX_DEGREE:
        raise ValueError(f"extension degree must be in 1..{MAX_DEGREE}")
    for low in range(1, 1 << n, 2):
        m = (1 << n) | low
        if _is_irreducible(m, n):
            return FieldSpec(n, m)
    raise AssertionError("unreachable: irreducibles exist for every degree")


def gf_add(a: FieldElem, b: FieldElem) -> FieldElem:
    return a + b


def gf_mul(a: FieldElem, b: FieldElem) -> FieldElem:
    return a * b


def gf_pow(a: FieldElem, e: int) -> FieldElem:
    return a**e


@dataclass(frozen=True)
class UniPoly:
    """Univariate polynomial; coefficient index = exponent."""

    spec: FieldSpec
    coefficients: tuple[FieldElem, ...]

    def __post_init__(self):
        for c in self.coefficients:
            if c.spec != self.spec:
                raise ValueError("coefficient from a different field")
        trimmed = self.coefficients
        while trimmed and trimmed[-1].is_zero:
            trimmed = trimmed[:-1]
        object.__setattr__(self, "coefficients", trimmed)

    @classmethod
    def of(cls, spec: FieldSpec, values) -> "UniPoly":
        return cls(spec, tuple(FieldElem(spec, v) for v in values))

    @classmethod
    def monomial(cls, spec: FieldSpec, e: int, coeff: int = 1) -> "UniPoly":
        return cls.of(spec, [0] * e + [coeff])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def evaluate(self, x: FieldElem) -> FieldElem:
        if x.spec != self.spec:
            raise ValueError("point from a different field")
        acc = self.spec.zero()
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc


def coordinate_functions(
    p: UniPoly, spec: FieldSpec | None = None, cap: int = MAX_DEGREE
) -> BoolMap:
    """Expand x -> p(x) into n Boolean coordinates over the basis.

    Input bit i is the coefficient of a^i in x; output bit j likewise.
    Each output truth table is converted to ANF, so evaluating the
    returned map on the bits of x reproduces the bits of p(x) exactly.
    """
    spec = spec or p.spec
    if spec != p.spec:
        raise ValueError("polynomial and field specs differ")
    n = spec.n
    if n > cap:
        raise ValueError(f"degree {n} exceeds the enumeration cap {cap}")
    tables = [0] * n
    for v in range(spec.order):
        y = p.evaluate(spec.element(v)).value
        for j in range(n):
            if (y >> j) & 1:
                tables[j] |= 1 << v
    uni = mask_of(range(n))
    coords = [TruthTable(bits, uni).to_anf() for bits in tables]
    return BoolMap.of(coords, n)


def is_permutation_polynomial(p: UniPoly, spec: FieldSpec | None = None) -> bool:
    """Whether x -> p(x) is a bijection of the field."""
    return is_invertible_square(coordinate_functions(p, spec)).one_to_one
