"""Builders for the diameter-2 graph families.

Vertex orderings are fixed so exports are byte-stable: residues ascending for
difference graphs, normalized projective points in canonical lexicographic
order for the polarity-type graphs, and row-major pairs ``(a, b) -> a*p + b``
for the hybrid graph.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Hashable, Iterable, Sequence

from .diffsets import DifferenceSet, quadratic_rds, singer_set, verify_perfect
from .errors import InvalidPDS, NotPrime, OddQ, ZeroAlpha
from .fields import FieldElement, FieldSpec, field_of_order, format_element, is_prime, prime_power

ProjectivePoint = tuple[FieldElement, FieldElement, FieldElement]


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected loop-free graph on ``0..n-1``."""

    n: int
    adj: tuple[frozenset[int], ...]
    labels: tuple[Hashable, ...] | None = None
    name: str = ""
    _check: bool = field(default=True, repr=False)

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("label count does not match vertex count")
        if self._check:
            for u, nbrs in enumerate(self.adj):
                if u in nbrs:
                    raise ValueError(f"loop at vertex {u}")
                for v in nbrs:
                    if u not in self.adj[v]:
                        raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[Hashable] | None = None,
        name: str = "",
    ) -> Graph:
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                continue
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            sets[u].add(v)
            sets[v].add(u)
        return cls(n, tuple(frozenset(s) for s in sets), tuple(labels) if labels is not None else None, name)

    @classmethod
    def from_rule(
        cls,
        n: int,
        adjacent: Callable[[int, int], bool],
        labels: Sequence[Hashable] | None = None,
        name: str = "",
    ) -> Graph:
        """Graph with ``u ~ v`` for ``u < v`` whenever ``adjacent(u, v)``."""
        edges = ((u, v) for u, v in itertools.combinations(range(n), 2) if adjacent(u, v))
        return cls.from_edges(n, edges, labels, name)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, u: int) -> frozenset[int]:
        return self.adj[u]

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    @property
    def order(self) -> int:
        return self.n

    @cached_property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, ascending."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @cached_property
    def bits(self) -> tuple[int, ...]:
        """Neighborhoods as integer bitsets."""
        out = []
        for nbrs in self.adj:
            b = 0
            for v in nbrs:
                b |= 1 << v
            out.append(b)
        return tuple(out)

    def label(self, u: int) -> str:
        if self.labels is None:
            return str(u)
        return format_label(self.labels[u])

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Isomorphic copy where vertex ``u`` becomes ``perm[u]``."""
        edges = [(perm[u], perm[v]) for u, v in self.edges()]
        return Graph.from_edges(self.n, edges, name=self.name)

    def subgraph_without(self, vertex: int) -> Graph:
        keep = [u for u in range(self.n) if u != vertex]
        index = {u: i for i, u in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges() if vertex not in (u, v)]
        labels = [self.labels[u] for u in keep] if self.labels is not None else None
        return Graph.from_edges(len(keep), edges, labels, self.name)

    def __repr__(self) -> str:
        return f"Graph({self.name or '?'}, n={self.n}, m={self.num_edges})"


def format_label(label: Hashable) -> str:
    if isinstance(label, tuple):
        return "(" + ",".join(format_label(x) for x in label) + ")"
    if isinstance(label, FieldElement):
        return format_element(label)
    return str(label)


# ---------------------------------------------------------------------------
# difference graphs


def diff_graph(D: DifferenceSet) -> Graph:
    """``x ~ y`` iff ``x + y`` lies in D; loops at ``2x in D`` dropped."""
    n = D.n
    edges = [(x, (s - x) % n) for x in range(n) for s in D.residues if (s - x) % n > x]
    return Graph.from_edges(n, edges, labels=tuple(range(n)), name=f"Diff({D})")


# ---------------------------------------------------------------------------
# polarity-type graphs


def projective_points(K: FieldSpec) -> list[ProjectivePoint]:
    """Points of PG(2, K), leftmost nonzero coordinate 1, in canonical order."""
    zero, one = K.zero, K.one
    pts: list[ProjectivePoint] = [(zero, zero, one)]
    pts += [(zero, one, c) for c in K.elements()]
    pts += [(one, b, c) for b in K.elements() for c in K.elements()]
    return sorted(pts, key=lambda x: tuple(c.coeffs for c in x))


def dot(x: ProjectivePoint, y: ProjectivePoint) -> FieldElement:
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]


def bilinear_value(alpha: FieldElement, x: ProjectivePoint, y: ProjectivePoint) -> FieldElement:
    """``x0 y2 + x1 y1 + x2 y0 + alpha x2 y2``."""
    return x[0] * y[2] + x[1] * y[1] + x[2] * y[0] + alpha * x[2] * y[2]


def _polarity_graph(K: FieldSpec, form, name: str) -> Graph:
    pts = projective_points(K)
    return Graph.from_rule(len(pts), lambda u, v: not form(pts[u], pts[v]), labels=pts, name=name)


def brown_graph(q: int) -> Graph:
    """Points of PG(2, q), adjacent when orthogonal under the dot product."""
    K = field_of_order(q)
    return _polarity_graph(K, dot, f"B({q})")


def brown_augmented(q: int) -> Graph:
    """B(q) plus one vertex joined to every self-orthogonal point (q even)."""
    p, _ = prime_power(q)
    if p != 2:
        raise OddQ(f"q={q} is odd; augmentation needs q a power of 2")
    B = brown_graph(q)
    extra = B.n
    edges = B.edges() + [(u, extra) for u in range(B.n) if B.degree(u) == q]
    labels = tuple(B.labels) + ("*",)
    return Graph.from_edges(B.n + 1, edges, labels, name=f"B+({q})")


def bilinear_graph(K: FieldSpec, alpha: FieldElement) -> Graph:
    """Points of PG(2, K), adjacent when ``x0 y2 + x1 y1 + x2 y0 + alpha x2 y2 = 0``."""
    alpha = K(alpha)
    if not alpha:
        raise ZeroAlpha("alpha must be nonzero")
    return _polarity_graph(K, lambda x, y: bilinear_value(alpha, x, y), f"P(GF({K.q})^3, alpha={alpha})")


# ---------------------------------------------------------------------------
# hybrid graphs on Z_p x Z_p


def _hybrid_edges(p: int, S: DifferenceSet | None) -> list[tuple[int, int]]:
    R = quadratic_rds(p)
    edges = []
    for a, b in itertools.product(range(p), repeat=2):
        u = a * p + b
        # (a, b) + (c, d) = r for each r in R
        for x, y in R.elements:
            v = ((x - a) % p) * p + (y - b) % p
            if u < v:
                edges.append((u, v))
        if S is not None:
            for s in S.residues:
                v = a * p + (s - b) % p
                if u < v:
                    edges.append((u, v))
    return edges


def intermediate_graph(p: int) -> Graph:
    """The graph on ``Z_p x Z_p`` using only the relative-difference-set edges."""
    quadratic_rds(p)
    labels = tuple(itertools.product(range(p), repeat=2))
    return Graph.from_edges(p * p, _hybrid_edges(p, None), labels, name=f"Gamma0({p})")


def hybrid_graph(q: int, S: DifferenceSet | None = None) -> Graph:
    """Order ``p^2`` graph, ``p = q^2 + q + 1`` prime, of maximum degree ``p + q + 1``.

    ``(a, b) ~ (c, d)`` when ``(a + c, b + d)`` lies in ``{(x, x^2)}``, or when
    ``a == c`` and ``b + d`` lies in the perfect difference set ``S`` mod p
    (the Singer set by default).
    """
    prime_power(q)
    p = q * q + q + 1
    if not is_prime(p):
        raise NotPrime(f"p={p} is not prime")
    if S is None:
        S = singer_set(q)
    if S.n != p or S.k != q + 1 or not verify_perfect(S).valid:
        raise InvalidPDS(f"{S} is not a perfect difference set of size {q + 1} mod {p}")
    labels = tuple(itertools.product(range(p), repeat=2))
    return Graph.from_edges(p * p, _hybrid_edges(p, S), labels, name=f"Gamma({q})")
