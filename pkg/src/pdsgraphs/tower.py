"""The cubic extension F = GF(q^3) over K = GF(q) and the cyclic group F*/K*.

Elements of F are coordinate triples ``(x0, x1, x2)`` in the basis
``{1, xi, xi^2}`` where ``xi`` is a root of a primitive cubic
``x^3 - (a2 x^2 + a1 x + a0)``. The cosets ``xi^i K*`` for ``0 <= i < n`` with
``n = q^2 + q + 1`` exhaust F*/K*; :meth:`CubicTower.coset_log` recovers ``i``
from any nonzero triple via a precomputed table of normalized powers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .errors import IndexOutOfRange, TowerMismatch, ZeroElement
from .fields import (
    FieldElement,
    FieldSpec,
    cubic_mul,
    field_of_order,
    find_any_primitive_cubic,
    find_primitive_cubic,
    is_primitive_cubic,
)

TowerElement = tuple[FieldElement, FieldElement, FieldElement]


def normalize(x: TowerElement) -> TowerElement:
    """Scale so the leftmost nonzero coordinate is 1."""
    for c in x:
        if c:
            inv = c.inverse()
            return tuple(v * inv for v in x)  # type: ignore[return-value]
    raise ZeroElement("the zero vector has no projective class")


@dataclass(frozen=True, eq=False)
class CubicTower:
    """GF(q^3) as ``K[xi]`` with ``xi^3 = a2 xi^2 + a1 xi + a0``."""

    K: FieldSpec
    a2: FieldElement
    a1: FieldElement
    a0: FieldElement

    def __post_init__(self) -> None:
        if not is_primitive_cubic(self.rule):
            raise ValueError(f"x^3 - ({self.a2}x^2 + {self.a1}x + {self.a0}) is not primitive over {self.K}")

    @property
    def rule(self) -> TowerElement:
        return (self.a0, self.a1, self.a2)

    @property
    def special(self) -> bool:
        return not self.a2 and bool(self.a1) and bool(self.a0)

    @property
    def alpha(self) -> FieldElement:
        return self.a1

    @property
    def beta(self) -> FieldElement:
        return self.a0

    @property
    def q(self) -> int:
        return self.K.q

    @property
    def n(self) -> int:
        q = self.K.q
        return q * q + q + 1

    @property
    def one(self) -> TowerElement:
        return (self.K.one, self.K.zero, self.K.zero)

    @property
    def xi(self) -> TowerElement:
        return (self.K.zero, self.K.one, self.K.zero)

    def element(self, x0, x1, x2) -> TowerElement:
        return (self.K(x0), self.K(x1), self.K(x2))

    def _check(self, x: TowerElement) -> None:
        if len(x) != 3 or any(c.spec != self.K for c in x):
            raise TowerMismatch(f"{x!r} is not an element of this tower over {self.K}")

    def ext_mul(self, x: TowerElement, y: TowerElement) -> TowerElement:
        self._check(x)
        self._check(y)
        return cubic_mul(x, y, self.rule)

    def ext_mul_closed_form(self, x: TowerElement, y: TowerElement) -> TowerElement:
        """Product via the expanded coordinate formulas valid when ``a2 == 0``."""
        if not self.special:
            raise ValueError("closed form requires a modulus x^3 - (alpha x + beta)")
        self._check(x)
        self._check(y)
        x0, x1, x2 = x
        y0, y1, y2 = y
        alpha, beta = self.alpha, self.beta
        cross = x1 * y2 + x2 * y1
        gamma = x0 * y0 + cross * beta
        delta = x0 * y1 + x1 * y0 + cross * alpha + x2 * y2 * beta
        return (gamma, delta, x0 * y2 + x1 * y1 + x2 * y0 + alpha * x2 * y2)

    @cached_property
    def powers(self) -> tuple[TowerElement, ...]:
        """Normalized representatives of ``xi^i K*`` for ``i < n``."""
        out = []
        x = self.one
        for _ in range(self.n):
            out.append(normalize(x))
            x = cubic_mul(x, self.xi, self.rule)
        return tuple(out)

    @cached_property
    def _log(self) -> dict[TowerElement, int]:
        table = {x: i for i, x in enumerate(self.powers)}
        assert len(table) == self.n
        return table

    def coset_log(self, x: TowerElement) -> int:
        self._check(x)
        return self._log[normalize(x)]

    def coset_power(self, i: int) -> TowerElement:
        if not 0 <= i < self.n:
            raise IndexOutOfRange(f"coset index {i} outside [0, {self.n})")
        return self.powers[i]


@lru_cache(maxsize=None)
def special_tower(q: int) -> CubicTower:
    """Tower whose modulus is ``x^3 - (alpha x + beta)``; unavailable for q = 4."""
    K = field_of_order(q)
    alpha, beta = find_primitive_cubic(K)
    return CubicTower(K, K.zero, alpha, beta)


@lru_cache(maxsize=None)
def tower_for(q: int) -> CubicTower:
    """The special tower when it exists, otherwise the first primitive cubic."""
    if q == 4:
        K = field_of_order(q)
        return CubicTower(K, *find_any_primitive_cubic(K))
    return special_tower(q)
