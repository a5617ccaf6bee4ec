"""Explicit isomorphisms between difference graphs and polarity graphs.

The constructive route identifies the coset ``xi^i K*`` with its coordinate
vector in the basis ``{1, xi, xi^2}``. Adjacency in the difference graph then
becomes vanishing of the symmetric form with matrix ``[[0,0,1],[0,1,0],[1,0,alpha]]``,
and a basis change ``A`` with ``A^T B A = gamma I`` turns that form into the dot
product. Coordinates move by ``A^-1``.

:func:`general_isomorphism` is an independent color-refinement plus
backtracking search used to cross-check the construction.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .diffsets import DifferenceSet, singer_set
from .errors import BudgetExceeded, DegenerateA, VerificationFailed, ZeroAlpha
from .fields import FieldElement, FieldSpec, field_of_order, parse_element, sqrt_char2, two_squares
from .graphs import Graph, ProjectivePoint, brown_graph, diff_graph
from .reports import VerificationReport
from .tower import normalize, special_tower

Rows = tuple[tuple[FieldElement, ...], ...]


@dataclass(frozen=True)
class Matrix3:
    rows: Rows
    role: str = ""

    @property
    def K(self) -> FieldSpec:
        return self.rows[0][0].spec

    def __getitem__(self, ij: tuple[int, int]) -> FieldElement:
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: Matrix3) -> Matrix3:
        rows = tuple(
            tuple(sum((self.rows[i][k] * other.rows[k][j] for k in range(3)), self.K.zero) for j in range(3))
            for i in range(3)
        )
        return Matrix3(rows)

    @property
    def T(self) -> Matrix3:
        return Matrix3(tuple(tuple(self.rows[j][i] for j in range(3)) for i in range(3)), self.role)

    def det(self) -> FieldElement:
        (a, b, c), (d, e, f), (g, h, i) = self.rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def inverse(self) -> Matrix3:
        (a, b, c), (d, e, f), (g, h, i) = self.rows
        det = self.det()
        if not det:
            raise DegenerateA("singular matrix")
        inv = det.inverse()
        adj = (
            (e * i - f * h, c * h - b * i, b * f - c * e),
            (f * g - d * i, a * i - c * g, c * d - a * f),
            (d * h - e * g, b * g - a * h, a * e - b * d),
        )
        return Matrix3(tuple(tuple(x * inv for x in row) for row in adj), "inverse")

    def apply(self, x: Sequence[FieldElement]) -> ProjectivePoint:
        """Matrix times column vector."""
        return tuple(row[0] * x[0] + row[1] * x[1] + row[2] * x[2] for row in self.rows)  # type: ignore[return-value]

    def is_scalar(self, gamma: FieldElement) -> bool:
        return all(self.rows[i][j] == (gamma if i == j else self.K.zero) for i in range(3) for j in range(3))

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(x) for x in row) for row in self.rows) + "]"


def form_matrix(alpha: FieldElement) -> Matrix3:
    K = alpha.spec
    if not alpha:
        raise ZeroAlpha("alpha must be nonzero")
    z, o = K.zero, K.one
    return Matrix3(((z, z, o), (z, o, z), (o, z, alpha)), "form")


def form_value(B: Matrix3, x: Sequence[FieldElement], y: Sequence[FieldElement]) -> FieldElement:
    """``x B y^T``."""
    By = B.apply(y)
    return x[0] * By[0] + x[1] * By[1] + x[2] * By[2]


def diagonalizing_matrix(alpha: FieldElement) -> tuple[Matrix3, FieldElement]:
    """Basis change ``A`` and scalar ``gamma`` with ``A^T B A = gamma I``.

    Odd q uses ``c^2 + d^2 = -1`` and gives ``gamma = -1``; even q uses square
    roots of ``alpha`` and ``1/alpha`` and gives ``gamma = 1``.
    """
    B = form_matrix(alpha)
    K = alpha.spec
    z, o = K.zero, K.one
    if K.p == 2:
        s = sqrt_char2(alpha)
        t = sqrt_char2(alpha.inverse())
        A = Matrix3(((s, z, z), (z, o, z), (t, z, t)), "basis-change")
        gamma = o
    else:
        c, d = two_squares(-o)
        half = K(2).inverse()
        A = Matrix3(
            (
                (d - c * alpha * half, -(c + d * alpha * half), -(o + alpha * half)),
                (c - d, c + d, o),
                (c, d, o),
            ),
            "basis-change",
        )
        gamma = -o
    if not A.det() or not (A.T @ B @ A).is_scalar(gamma):
        raise DegenerateA(f"A^T B A != {gamma} I for alpha={alpha} over {K}")
    return A, gamma


@dataclass(frozen=True)
class VertexBijection:
    source: str
    target: str
    mapping: tuple[int, ...]
    verified: bool = False

    def __len__(self) -> int:
        return len(self.mapping)

    def __getitem__(self, u: int) -> int:
        return self.mapping[u]


def verify_bijection(G: Graph, H: Graph, f: VertexBijection | Sequence[int], max_failures: int = 50) -> VerificationReport:
    mapping = tuple(f.mapping if isinstance(f, VertexBijection) else f)
    failures: list[dict] = []
    if G.n != H.n or len(mapping) != G.n:
        failures.append({"reason": "size mismatch", "source": G.n, "target": H.n, "mapping": len(mapping)})
    elif any(not 0 <= v < H.n for v in mapping) or len(set(mapping)) != G.n:
        failures.append({"reason": "not a bijection"})
    if failures:
        return VerificationReport("bijection", False, failures, {"counterexamples": 0})
    bad = 0
    for u in range(G.n):
        fu = mapping[u]
        for v in range(u + 1, G.n):
            e1 = G.has_edge(u, v)
            if e1 != H.has_edge(fu, mapping[v]):
                bad += 1
                if len(failures) < max_failures:
                    failures.append({"pair": (u, v), "source_edge": e1, "image": (fu, mapping[v])})
    return VerificationReport("bijection", bad == 0, failures, {"counterexamples": bad, "n": G.n})


# ---------------------------------------------------------------------------
# q = 4: fixed certificate between Diff(Z_21, {0,1,4,14,16}) and B(4)

Q4_REFERENCE_SET = DifferenceSet.of((0, 1, 4, 14, 16), 21)

_TABLE_Q4 = (
    "1,0,1", "1,ζ²,1", "1,1,0", "1,ζ²,ζ²", "0,1,0", "1,ζ,ζ", "0,1,ζ",
    "1,ζ,ζ²", "1,ζ²,ζ", "1,ζ²,0", "1,0,0", "0,1,1", "0,0,1", "1,ζ,0",
    "1,1,1", "0,1,ζ²", "1,ζ,1", "1,0,ζ²", "1,0,ζ", "1,1,ζ²", "1,1,ζ",
)


def table_q4() -> list[ProjectivePoint]:
    """Images of residues 0..20 as points of PG(2, 4), with ``ζ² = ζ + 1``."""
    K = field_of_order(4)
    return [tuple(parse_element(K, c) for c in row.split(",")) for row in _TABLE_Q4]  # type: ignore[misc]


def _point_index(B: Graph) -> dict[ProjectivePoint, int]:
    return {p: i for i, p in enumerate(B.labels)}


@lru_cache(maxsize=None)
def singer_brown_graphs(q: int) -> tuple[Graph, Graph]:
    """``(Diff(q), B(q))``; for q = 4 the difference graph uses ``Q4_REFERENCE_SET``."""
    D = Q4_REFERENCE_SET if q == 4 else singer_set(q, special_tower(q))
    return diff_graph(D), brown_graph(q)


def singer_to_brown(q: int) -> VertexBijection:
    G, B = singer_brown_graphs(q)
    index = _point_index(B)
    if q == 4:
        mapping = tuple(index[p] for p in table_q4())
    else:
        T = special_tower(q)
        A, _ = diagonalizing_matrix(T.alpha)
        A_inv = A.inverse()
        mapping = tuple(index[normalize(A_inv.apply(T.coset_power(i)))] for i in range(T.n))
    report = verify_bijection(G, B, mapping)
    if not report.valid:
        raise VerificationFailed(f"q={q}: {report.details['counterexamples']} pairs not preserved")
    return VertexBijection(G.name, B.name, mapping, verified=True)


def equivalence_bijection(D: DifferenceSet, r: int, m: int) -> tuple[int, ...]:
    """Vertex map ``x -> r x + m/2`` from Diff(D) onto Diff(rD + m) (n odd)."""
    if D.n % 2 == 0:
        raise ValueError("the translation half-step needs an odd modulus")
    half = m * pow(2, -1, D.n)
    return tuple((r * x + half) % D.n for x in range(D.n))


# ---------------------------------------------------------------------------
# general search


def _refine(G: Graph, H: Graph, cg: list[int], ch: list[int]) -> tuple[list[int], list[int]] | None:
    """Joint color refinement; None when the two colorings stop matching."""
    classes = len(set(cg) | set(ch))
    while True:
        sg = [(cg[u], tuple(sorted(cg[v] for v in G.adj[u]))) for u in range(G.n)]
        sh = [(ch[u], tuple(sorted(ch[v] for v in H.adj[u]))) for u in range(H.n)]
        palette = {s: i for i, s in enumerate(sorted(set(sg) | set(sh)))}
        ng = [palette[s] for s in sg]
        nh = [palette[s] for s in sh]
        if Counter(ng) != Counter(nh):
            return None
        if len(palette) == classes:
            return ng, nh
        classes = len(palette)
        cg, ch = ng, nh


def general_isomorphism(G: Graph, H: Graph, budget: int = 10**7) -> VertexBijection | None:
    """Find an isomorphism by degree-seeded refinement and individualization.

    Returns None when the search space is exhausted without success and raises
    BudgetExceeded after ``budget`` search nodes.
    """
    if G.n != H.n or G.num_edges != H.num_edges:
        return None
    if G.n > 500:
        raise BudgetExceeded(f"n={G.n} exceeds the search size limit of 500")
    start = _refine(G, H, [G.degree(u) for u in range(G.n)], [H.degree(u) for u in range(H.n)])
    if start is None:
        return None
    nodes = 0

    def search(cg: list[int], ch: list[int]) -> tuple[int, ...] | None:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"search exceeded {budget} nodes")
        sizes = Counter(cg)
        if len(sizes) == G.n:
            where = {c: v for v, c in enumerate(ch)}
            mapping = tuple(where[c] for c in cg)
            return mapping if verify_bijection(G, H, mapping, max_failures=0).valid else None
        color = min((s, c) for c, s in sizes.items() if s > 1)[1]
        u = cg.index(color)
        fresh = max(sizes) + 1
        for v in (w for w in range(H.n) if ch[w] == color):
            g2, h2 = list(cg), list(ch)
            g2[u] = h2[v] = fresh
            refined = _refine(G, H, g2, h2)
            if refined is None:
                continue
            found = search(*refined)
            if found is not None:
                return found
        return None

    mapping = search(*start)
    if mapping is None:
        return None
    return VertexBijection(G.name, H.name, mapping, verified=True)
