"""Perfect and relative difference sets.

A perfect difference set mod ``n`` hits every nonzero residue exactly once as
a difference ``s - t``. Singer's construction reads one off the cubic tower:
the coset indices of ``xi`` and of ``1 + t*xi`` for ``t`` in K.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import ModulusMismatch, NotCoprime, NotOddPrime
from .fields import (
    field_of_order,
    is_prime,
    is_primitive_cubic,
    prime_power,
)
from .reports import VerificationReport
from .tower import CubicTower, tower_for


@dataclass(frozen=True)
class DifferenceSet:
    n: int
    residues: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"modulus must be positive, got {self.n}")
        reduced = tuple(sorted({r % self.n for r in self.residues}))
        if len(reduced) != len(self.residues):
            raise ValueError(f"residues {self.residues} are not distinct mod {self.n}")
        object.__setattr__(self, "residues", reduced)

    @classmethod
    def of(cls, residues: Iterable[int], n: int) -> DifferenceSet:
        return cls(n, tuple(residues))

    @property
    def k(self) -> int:
        return len(self.residues)

    def __contains__(self, x: int) -> bool:
        return x % self.n in self._members

    @cached_property
    def _members(self) -> frozenset[int]:
        return frozenset(self.residues)

    def __iter__(self):
        return iter(self.residues)

    def __str__(self) -> str:
        return format_set(self)


def format_set(D: DifferenceSet) -> str:
    return ",".join(map(str, D.residues)) + f" mod {D.n}"


def parse_set(text: str, n: int | None = None) -> DifferenceSet:
    """Parse ``"0,1,4,14,16 mod 21"`` or ``"0,1,4,14,16"`` with ``n`` given."""
    body, sep, mod = text.partition("mod")
    if sep:
        parsed_n = int(mod)
        if n is not None and n != parsed_n:
            raise ModulusMismatch(f"modulus {parsed_n} in {text!r} disagrees with {n}")
        n = parsed_n
    if n is None:
        raise ValueError(f"no modulus given for {text!r}")
    items = [t for t in body.replace(" ", "").split(",") if t]
    if not items:
        raise ValueError(f"empty residue list in {text!r}")
    return DifferenceSet.of((int(t) for t in items), n)


def verify_perfect(D: DifferenceSet) -> VerificationReport:
    counts = Counter((s - t) % D.n for s in D.residues for t in D.residues if s != t)
    failures = [
        {"residue": r, "multiplicity": counts.get(r, 0)}
        for r in range(1, D.n)
        if counts.get(r, 0) != 1
    ]
    return VerificationReport(
        kind="perfect-difference-set",
        valid=not failures,
        failures=failures,
        details={
            "set": format_set(D),
            "n": D.n,
            "k": D.k,
            "k^2-k+1": D.k * D.k - D.k + 1,
            "multiplicities": {r: counts.get(r, 0) for r in range(1, D.n)},
        },
    )


def translate(D: DifferenceSet, m: int) -> DifferenceSet:
    return DifferenceSet.of((s + m for s in D.residues), D.n)


def dilate(D: DifferenceSet, r: int) -> DifferenceSet:
    if math.gcd(r, D.n) != 1:
        raise NotCoprime(f"gcd({r}, {D.n}) != 1")
    return DifferenceSet.of((r * s for s in D.residues), D.n)


def find_equivalence(D1: DifferenceSet, D2: DifferenceSet) -> tuple[int, int] | None:
    """Lexicographically first ``(r, m)`` with ``D2 == r*D1 + m``, or None."""
    if D1.n != D2.n:
        raise ModulusMismatch(f"moduli {D1.n} and {D2.n} differ")
    n = D1.n
    if D1.k != D2.k:
        return None
    target = D2._members
    s0 = D1.residues[0]
    for r in range(1, n):
        if math.gcd(r, n) != 1:
            continue
        # r*s0 + m must land in D2
        for m in sorted((t - r * s0) % n for t in D2.residues):
            if all((r * s + m) % n in target for s in D1.residues):
                return r, m
    return None


def singer_set(q: int, tower: CubicTower | None = None) -> DifferenceSet:
    """``{log(xi)} U {log(1 + t xi) : t in K}`` as residues mod ``q^2+q+1``."""
    prime_power(q)
    T = tower if tower is not None else tower_for(q)
    if T.q != q:
        raise ValueError(f"tower is over GF({T.q}), not GF({q})")
    K = T.K
    residues = [T.coset_log(T.xi)]
    residues += [T.coset_log((K.one, t, K.zero)) for t in K.elements()]
    return DifferenceSet.of(residues, T.n)


def primitive_towers(q: int, limit: int | None = None) -> list[CubicTower]:
    """Towers for the first ``limit`` primitive cubics over GF(q), in scan order."""
    K = field_of_order(q)
    out = []
    for a2, a1, a0 in itertools.product(K.elements(), K.elements(), K.nonzero()):
        if is_primitive_cubic((a0, a1, a2)):
            out.append(CubicTower(K, a2, a1, a0))
            if limit is not None and len(out) >= limit:
                break
    return out


def check_singer_equivalence(q: int, limit: int = 6) -> VerificationReport:
    """Empirically confirm Singer sets from different primitive cubics are equivalent."""
    sets = [singer_set(q, T) for T in primitive_towers(q, limit)]
    failures = []
    witnesses = {}
    for i, j in itertools.combinations(range(len(sets)), 2):
        w = find_equivalence(sets[i], sets[j])
        if w is None:
            failures.append({"pair": (i, j), "sets": (str(sets[i]), str(sets[j]))})
        else:
            witnesses[f"{i}-{j}"] = w
    return VerificationReport(
        kind="singer-equivalence",
        valid=not failures,
        failures=failures,
        details={"q": q, "sets": [str(s) for s in sets], "witnesses": witnesses},
    )


# ---------------------------------------------------------------------------
# relative difference sets in Z_p x Z_p


@dataclass(frozen=True)
class RelativeDifferenceSet:
    """Subset of ``Z_p x Z_p`` relative to ``N = {(0, a)}``, parameters ``(m, n, k, lam)``."""

    p: int
    elements: tuple[tuple[int, int], ...]
    m: int
    n: int
    k: int
    lam: int

    def __post_init__(self) -> None:
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("relative difference set elements must be distinct")
        if self.n != self.p or self.m * self.n != self.p * self.p or self.k != len(self.elements):
            raise ValueError(f"parameters ({self.m},{self.n},{self.k},{self.lam}) inconsistent with p={self.p}")

    @property
    def params(self) -> tuple[int, int, int, int]:
        return (self.m, self.n, self.k, self.lam)

    def __contains__(self, g: tuple[int, int]) -> bool:
        return (g[0] % self.p, g[1] % self.p) in self._members

    @cached_property
    def _members(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.elements)


def quadratic_rds(p: int) -> RelativeDifferenceSet:
    """``{(a, a^2)}`` in ``Z_p x Z_p``, a ``(p, p, p, 1)`` set relative to ``{(0, a)}``."""
    if p == 2 or not is_prime(p):
        raise NotOddPrime(f"p={p} is not an odd prime")
    return RelativeDifferenceSet(p, tuple((a, a * a % p) for a in range(p)), p, p, p, 1)


def verify_rds(R: RelativeDifferenceSet) -> VerificationReport:
    p = R.p
    counts = Counter(
        ((a - c) % p, (b - d) % p) for (a, b), (c, d) in itertools.permutations(R.elements, 2)
    )
    failures = []
    for g in itertools.product(range(p), repeat=2):
        if g == (0, 0):
            continue
        want = 0 if g[0] == 0 else R.lam
        got = counts.get(g, 0)
        if got != want:
            failures.append({"element": g, "multiplicity": got, "expected": want})
    return VerificationReport(
        kind="relative-difference-set",
        valid=not failures,
        failures=failures,
        details={"p": p, "params": R.params, "size": len(R.elements)},
    )
