"""Exact arithmetic in GF(p^e).

An element is a coefficient vector ``(c0, c1, ..., c_{e-1})`` over Z_p, read
as ``c0 + c1*z + ... + c_{e-1}*z^(e-1)`` modulo a fixed monic irreducible
polynomial. Coefficient tuples compare lexicographically from the constant
term upward; that comparison is the canonical element order used by every
deterministic scan in the package.

Besides the field itself this module holds the three search procedures the
isomorphism construction depends on: a primitive cubic ``x^3 - a*x - b`` with
``a, b`` nonzero, square roots in characteristic 2, and writing an element as a
sum of two squares.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Sequence

from .errors import (
    DegreeOutOfRange,
    DivisionByZero,
    FieldMismatch,
    NoSpecialCubic,
    NotPrime,
    NotPrimePower,
    WrongCharacteristic,
)

MAX_ORDER = 2**20
MAX_EXTENSION_ORDER = 512


# ---------------------------------------------------------------------------
# integer helpers


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization, ``{prime: exponent}``."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``; raise NotPrimePower otherwise."""
    if not isinstance(q, int) or q < 2:
        raise NotPrimePower(f"q={q} is not a prime power")
    f = factorize(q)
    if len(f) != 1:
        raise NotPrimePower(f"q={q} is not a prime power")
    ((p, e),) = f.items()
    return p, e


# ---------------------------------------------------------------------------
# polynomials over Z_p, coefficient lists from the constant term upward


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], f: Sequence[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def _poly_mulmod(a: list[int], b: list[int], f: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    return _poly_mod(prod, f, p)


def _poly_powmod(a: list[int], k: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(a, f, p)
    while k:
        if k & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        k >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _is_irreducible_mod_p(f: Sequence[int], p: int) -> bool:
    # Rabin: x^(p^e) = x mod f, and gcd(x^(p^(e/r)) - x, f) = 1 for primes r | e.
    e = len(f) - 1
    if e == 1:
        return True
    x = [0, 1]
    if _poly_powmod(x, p**e, f, p) != _poly_mod(x, f, p):
        return False
    for r in factorize(e):
        h = _poly_powmod(x, p ** (e // r), f, p)
        h = h + [0] * max(0, 2 - len(h))
        h[1] = (h[1] - 1) % p
        if len(_poly_gcd(f, _trim(h), p)) != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# fields


@dataclass(frozen=True)
class FieldSpec:
    """GF(p^e) defined by a monic irreducible ``modulus`` (constant term first)."""

    p: int
    e: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def characteristic(self) -> int:
        return self.p

    def __call__(self, value: int | Sequence[int] | FieldElement) -> FieldElement:
        """Coerce an integer (image of Z) or a coefficient sequence."""
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise FieldMismatch(f"{value!r} is not in {self}")
            return value
        if isinstance(value, int):
            return FieldElement(self, (value % self.p,) + (0,) * (self.e - 1))
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) > self.e:
            raise ValueError(f"too many coefficients for GF({self.q})")
        return FieldElement(self, coeffs + (0,) * (self.e - len(coeffs)))

    @cached_property
    def zero(self) -> FieldElement:
        return self(0)

    @cached_property
    def one(self) -> FieldElement:
        return self(1)

    @cached_property
    def gen(self) -> FieldElement:
        """Residue class of ``z``; prime fields have no such element and return 1."""
        if self.e == 1:
            return self.one
        return self((0, 1))

    def elements(self) -> Iterator[FieldElement]:
        """All elements in canonical order."""
        for coeffs in itertools.product(range(self.p), repeat=self.e):
            yield FieldElement(self, coeffs)

    def nonzero(self) -> Iterator[FieldElement]:
        return (a for a in self.elements() if a)

    def __str__(self) -> str:
        return f"GF({self.q})"


@dataclass(frozen=True, slots=True)
class FieldElement:
    spec: FieldSpec
    coeffs: tuple[int, ...]

    def _check(self, other: object) -> FieldElement:
        if isinstance(other, int):
            return self.spec(other)
        if not isinstance(other, FieldElement):
            return NotImplemented  # type: ignore[return-value]
        if other.spec is not self.spec and other.spec != self.spec:
            raise FieldMismatch(f"operands in {self.spec} and {other.spec}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.spec.p
        return FieldElement(self.spec, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.spec.p
        return FieldElement(self.spec, tuple(-a % p for a in self.coeffs))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.spec.p
        return FieldElement(self.spec, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        spec = self.spec
        p, e = spec.p, spec.e
        if e == 1:
            return FieldElement(spec, (self.coeffs[0] * other.coeffs[0] % p,))
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    prod[i + j] += x * y
        mod = spec.modulus
        for k in range(2 * e - 2, e - 1, -1):
            c = prod[k] % p
            if c:
                for i in range(e):
                    prod[k - e + i] -= c * mod[i]
        return FieldElement(spec, tuple(c % p for c in prod[:e]))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.spec.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> FieldElement:
        if not self:
            raise DivisionByZero(f"0 has no inverse in {self.spec}")
        if self.spec.e == 1:
            return FieldElement(self.spec, (pow(self.coeffs[0], -1, self.spec.p),))
        return self ** (self.spec.q - 2)

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.spec(other) * self.inverse()

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.coeffs == self.spec(other).coeffs
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.coeffs == other.coeffs and self.spec == other.spec

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __lt__(self, other: FieldElement) -> bool:
        return self.coeffs < other.coeffs

    def __int__(self) -> int:
        if self.spec.e != 1:
            raise TypeError(f"{self} is not in the prime field")
        return self.coeffs[0]

    @property
    def index(self) -> int:
        """Position in canonical order (base-p digits, constant term most significant)."""
        v = 0
        for c in self.coeffs:
            v = v * self.spec.p + c
        return v

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"{self.spec}({self})"


def format_element(a: FieldElement, var: str = "ζ") -> str:
    """Print as an integer-coefficient polynomial in ``var``, highest degree first."""
    if a.spec.e == 1:
        return str(a.coeffs[0])
    terms = []
    for k in range(a.spec.e - 1, -1, -1):
        c = a.coeffs[k]
        if not c:
            continue
        if k == 0:
            terms.append(str(c))
            continue
        mono = var if k == 1 else f"{var}^{k}"
        terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) if terms else "0"


def parse_element(K: FieldSpec, text: str) -> FieldElement:
    """Inverse of :func:`format_element`; also accepts ``z`` and a superscript two."""
    s = text.strip().replace(" ", "").replace("²", "^2").replace("z", "ζ")
    if not s:
        raise ValueError("empty field element")
    total = K.zero
    for term in s.split("+"):
        if not term:
            raise ValueError(f"malformed field element {text!r}")
        if "ζ" not in term:
            total = total + K(int(term))
            continue
        coef, _, power = term.partition("ζ")
        c = int(coef) if coef else 1
        k = 1
        if power:
            if not power.startswith("^"):
                raise ValueError(f"malformed field element {text!r}")
            k = int(power[1:])
        total = total + K(c) * K.gen**k
    return total


@lru_cache(maxsize=None)
def make_field(p: int, e: int = 1) -> FieldSpec:
    """GF(p^e) whose modulus is the lexicographically first monic irreducible
    polynomial of degree ``e`` (coefficients compared from the constant term)."""
    if not is_prime(p):
        raise NotPrime(f"p={p} is not prime")
    if e < 1 or p**e > MAX_ORDER or (e > 1 and p**e > MAX_EXTENSION_ORDER):
        raise DegreeOutOfRange(f"GF({p}^{e}) is outside the supported range")
    if e == 1:
        return FieldSpec(p, 1, (0, 1))
    for low in itertools.product(range(p), repeat=e):
        f = low + (1,)
        if low[0] and _is_irreducible_mod_p(f, p):
            return FieldSpec(p, e, f)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def field_of_order(q: int) -> FieldSpec:
    p, e = prime_power(q)
    return make_field(p, e)


# functional aliases


def fe_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def fe_neg(a: FieldElement) -> FieldElement:
    return -a


def fe_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def fe_inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def fe_pow(a: FieldElement, n: int) -> FieldElement:
    return a**n


# ---------------------------------------------------------------------------
# the three searches


def sqrt_char2(a: FieldElement) -> FieldElement:
    """Unique square root in characteristic 2, computed as ``a^(2^(e-1))``."""
    K = a.spec
    if K.p != 2:
        raise WrongCharacteristic(f"{K} has characteristic {K.p}")
    return a ** (2 ** (K.e - 1))


def two_squares(b: FieldElement) -> tuple[FieldElement, FieldElement]:
    """First ``(c, d)`` in canonical order with ``c^2 + d^2 == b``."""
    K = b.spec
    roots: dict[FieldElement, FieldElement] = {}
    for x in K.elements():
        roots.setdefault(x * x, x)
    for c in K.elements():
        d = roots.get(b - c * c)
        if d is not None:
            return c, d
    raise AssertionError(f"{b} is not a sum of two squares")  # pragma: no cover


Triple = tuple[FieldElement, FieldElement, FieldElement]


def cubic_mul(x: Triple, y: Triple, rule: Triple) -> Triple:
    """Multiply ``x0 + x1 t + x2 t^2`` by ``y`` modulo ``t^3 = r2 t^2 + r1 t + r0``."""
    x0, x1, x2 = x
    y0, y1, y2 = y
    r0, r1, r2 = rule
    c0 = x0 * y0
    c1 = x0 * y1 + x1 * y0
    c2 = x0 * y2 + x1 * y1 + x2 * y0
    c3 = x1 * y2 + x2 * y1
    c4 = x2 * y2
    # t^4 = r2 t^3 + r1 t^2 + r0 t
    c3 = c3 + c4 * r2
    c2 = c2 + c4 * r1
    c1 = c1 + c4 * r0
    return (c0 + c3 * r0, c1 + c3 * r1, c2 + c3 * r2)


def cubic_pow(x: Triple, n: int, rule: Triple) -> Triple:
    K = x[0].spec
    result: Triple = (K.one, K.zero, K.zero)
    while n:
        if n & 1:
            result = cubic_mul(result, x, rule)
        x = cubic_mul(x, x, rule)
        n >>= 1
    return result


def _has_root(rule: Triple) -> bool:
    r0, r1, r2 = rule
    for t in rule[0].spec.elements():
        if t * t * t == r2 * t * t + r1 * t + r0:
            return True
    return False


def _root_is_primitive(rule: Triple) -> bool:
    K = rule[0].spec
    order = K.q**3 - 1
    xi: Triple = (K.zero, K.one, K.zero)
    one: Triple = (K.one, K.zero, K.zero)
    return all(cubic_pow(xi, order // ell, rule) != one for ell in factorize(order))


def is_primitive_cubic(rule: Triple) -> bool:
    """True when ``x^3 - (r2 x^2 + r1 x + r0)`` is irreducible with a primitive root."""
    return not _has_root(rule) and _root_is_primitive(rule)


@lru_cache(maxsize=None)
def find_primitive_cubic(K: FieldSpec) -> tuple[FieldElement, FieldElement]:
    """First nonzero ``(alpha, beta)`` making ``x^3 - alpha x - beta`` primitive over K."""
    if K.q == 4:
        raise NoSpecialCubic("GF(64) has no primitive cubic over GF(4) of the form x^3 - (ax + b)")
    for alpha in K.nonzero():
        for beta in K.nonzero():
            if is_primitive_cubic((beta, alpha, K.zero)):
                return alpha, beta
    raise NoSpecialCubic(f"scan exhausted over {K}")


@lru_cache(maxsize=None)
def find_any_primitive_cubic(K: FieldSpec) -> tuple[FieldElement, FieldElement, FieldElement]:
    """First ``(a2, a1, a0)`` making ``x^3 - (a2 x^2 + a1 x + a0)`` primitive over K."""
    for a2 in K.elements():
        for a1 in K.elements():
            for a0 in K.nonzero():
                if is_primitive_cubic((a0, a1, a2)):
                    return a2, a1, a0
    raise AssertionError(f"no primitive cubic over {K}")  # pragma: no cover
