"""Equitable partitions, quotient matrices, and the named polynomial family.

The quotient of an equitable partition shares its spectral radius with the
full weighted matrix, which turns eigenvalue claims about the named graph
families into statements about fixed-degree polynomials.  Those polynomials
(phi1/phi2/phi3 for the second-rank analysis, h_n/h_n1/h_n2/h_n3 for the
extended index) are written out here with exact coefficients, and every sign
condition used by the verification campaigns is certified with exact
quadratic-surd arithmetic: each test point has the shape r*sqrt(s) with
rational r, s.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .graphs import Graph, graph_g1, graph_g2, graph_g3, graph_g4
from .polynomials import Polynomial, sign_at_sqrt
from .spectral import build_matrix, build_matrix_exact
from .weights import WeightFunction, evaluate, evaluate_exact

Partition = list[list[int]]


class PartitionError(ValueError):
    pass


def validate_partition(p: Partition, n: int) -> None:
    seen: set[int] = set()
    for block in p:
        if not block:
            raise PartitionError("empty block")
        for v in block:
            if not 0 <= v < n:
                raise PartitionError(f"vertex {v} out of range")
            if v in seen:
                raise PartitionError(f"vertex {v} appears in two blocks")
            seen.add(v)
    if len(seen) != n:
        raise PartitionError("partition does not cover all vertices")


def degree_partition(g: Graph) -> Partition:
    """Seed partition grouping vertices by degree, largest degree first."""
    deg = g.degrees()
    blocks: dict[int, list[int]] = {}
    for v in range(g.n):
        blocks.setdefault(deg[v], []).append(v)
    return [blocks[d] for d in sorted(blocks, reverse=True)]


def _weight_rows(g: Graph, f: WeightFunction):
    """(rows, exact): weighted adjacency rows, Fractions when available."""
    exact = build_matrix_exact(g, f)
    if exact is not None:
        return exact, True
    return build_matrix(g, f).entries.tolist(), False


def equitable_refine(g: Graph, f: WeightFunction, seed: Optional[Partition] = None) -> Partition:
    """Coarsest refinement of the seed that is equitable for A_f(G).

    Blocks are split by their row-sum signature into the current blocks until
    a fixed point; block order is signature-sorted, hence label-invariant.
    """
    rows, exact = _weight_rows(g, f)
    blocks = [list(b) for b in (seed if seed is not None else degree_partition(g))]
    validate_partition(blocks, g.n)

    def rowsum(v: int, block: list[int]):
        total = sum(rows[v][u] for u in block)
        return total if exact else round(total, 9)

    while True:
        new_blocks: list[list[int]] = []
        changed = False
        for block in blocks:
            sigs: dict[tuple, list[int]] = {}
            for v in block:
                sigs.setdefault(tuple(rowsum(v, b) for b in blocks), []).append(v)
            if len(sigs) > 1:
                changed = True
            for key in sorted(sigs):
                new_blocks.append(sigs[key])
        blocks = new_blocks
        if not changed:
            return blocks


@dataclass
class QuotientMatrix:
    """Block-average row sums of A_f(G) under a partition."""

    b: list[list]  # k x k, Fraction entries when the weight is rational
    blocks: Partition
    equitable: bool
    exact: bool

    def as_array(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.b])


def quotient_matrix(g: Graph, f: WeightFunction, p: Partition) -> QuotientMatrix:
    validate_partition(p, g.n)
    rows, exact = _weight_rows(g, f)
    k = len(p)
    b = []
    equitable = True
    for bi in p:
        row = []
        for bj in p:
            sums = [sum(rows[v][u] for u in bj) for v in bi]
            if exact:
                if any(s != sums[0] for s in sums):
                    equitable = False
                avg = Fraction(sum(sums), len(sums))
            else:
                spread = max(sums) - min(sums)
                if spread > 1e-12 * max(1.0, max(abs(s) for s in sums)):
                    equitable = False
                avg = sum(sums) / len(sums)
            row.append(avg)
        b.append(row)
    assert len(b) == k
    return QuotientMatrix(b, [list(x) for x in p], equitable, exact)


# ---------------------------------------------------------------------------
# Canonical partitions for the named families (block order fixed for tests)
# ---------------------------------------------------------------------------


def partition_g1(n: int) -> Partition:
    # hub (deg n-1), other hub (deg 3), two deg-2 vertices, pendants
    return [[0], [1], [2, 3], list(range(4, n))]


def partition_g2(n: int) -> Partition:
    # center (deg n-1), four cycle vertices (deg 2), pendants
    return [[0], [1, 2, 3, 4], list(range(5, n))]


def partition_g3(n: int) -> Partition:
    # pendant-loaded deg-2 vertex, the two adjacent deg-3 hubs, the other
    # deg-2 vertex, pendants
    return [[2], [0, 1], [3], list(range(4, n))]


def partition_g4(n: int) -> Partition:
    # big hub, two deg-2 vertices, deg-4 hub, its single pendant, hub pendants
    return [[0], [2, 3], [1], [n - 1], list(range(4, n - 1))]


FAMILY_PARTITIONS = {
    "G1": (graph_g1, partition_g1),
    "G2": (graph_g2, partition_g2),
    "G3": (graph_g3, partition_g3),
    "G4": (graph_g4, partition_g4),
}


def family_quotient(tag: str, n: int, f: WeightFunction) -> QuotientMatrix:
    builder, part = FAMILY_PARTITIONS[tag]
    return quotient_matrix(builder(n), f, part(n))


# ---------------------------------------------------------------------------
# Named polynomials
# ---------------------------------------------------------------------------

NAMED_POLYNOMIALS = ("phi1", "phi2", "phi2_prime", "phi3", "h_n", "h_n1", "h_n2", "h_n3")

_MIN_N = {"phi1": 6, "phi2": 6, "phi2_prime": 6, "phi3": 5,
          "h_n": 12, "h_n1": 12, "h_n2": 12, "h_n3": 12}


def _fval(f: WeightFunction, x: int, y: int):
    v = evaluate_exact(f, x, y)
    return v if v is not None else evaluate(f, x, y)


def named_polynomial(name: str, n: int, f: Optional[WeightFunction] = None) -> Polynomial:
    """The named quotient / factor polynomials at a concrete order n.

    phi1, phi2 (and its x-multiple phi2_prime), phi3 describe the quotient
    matrices of G2, G4, G3 for a weight f; the h-family describes the
    extended-index analysis and takes no f.  Coefficients are exact whenever
    f is rational on integer degrees.
    """
    if name not in NAMED_POLYNOMIALS:
        raise ValueError(f"unknown polynomial name {name!r}")
    if n < _MIN_N[name]:
        raise ValueError(f"{name} requires n >= {_MIN_N[name]}, got {n}")
    if name.startswith("phi"):
        if f is None:
            raise ValueError(f"{name} requires a weight function")
        return _phi(name, n, f)
    return _h(name, n)


def _phi(name: str, n: int, f: WeightFunction) -> Polynomial:
    if name == "phi1":
        c22 = _fval(f, 2, 2)
        a = _fval(f, n - 1, 2)
        c = _fval(f, n - 1, 1)
        return Polynomial([
            (n - 5) * c * c * c22,
            -(4 * a * a + (n - 5) * c * c),
            -c22,
            1,
        ])
    if name in ("phi2", "phi2_prime"):
        x1 = _fval(f, n - 2, 2)
        x2 = _fval(f, n - 2, 4)
        x3 = _fval(f, n - 2, 1)
        x4 = _fval(f, 4, 2)
        x5 = _fval(f, 4, 1)
        quartic = Polynomial([
            2 * x1 * x1 * x5 * x5 + (2 * n - 10) * x3 * x3 * x4 * x4
            + (n - 5) * x3 * x3 * x5 * x5,
            -4 * x1 * x2 * x4,
            -(2 * x1 * x1 + x2 * x2 + (n - 5) * x3 * x3 + 2 * x4 * x4 + x5 * x5),
            0,
            1,
        ])
        return quartic if name == "phi2" else quartic.shift_up(1)
    # phi3
    y1 = _fval(f, n - 2, 3)
    y2 = _fval(f, n - 2, 1)
    y3 = _fval(f, 3, 3)
    y4 = _fval(f, 3, 2)
    return Polynomial([
        (2 * n - 8) * y2 * y2 * y4 * y4,
        (n - 4) * y2 * y2 * y3,
        -((n - 4) * y2 * y2 + 2 * y1 * y1 + 2 * y4 * y4),
        -y3,
        1,
    ])


def _h(name: str, n: int) -> Polynomial:
    if name == "h_n":
        return Polynomial([4 * (n - 5), -4, -(n + 1), 0, 1])
    if name == "h_n1":
        s = (n - 1) ** 2
        return Polynomial([
            169 * (n - 4) * (1 + s) ** 2,
            -52 * (4 + s) * (9 + s),
            -(36 * (4 + s) ** 2 + 8 * (9 + s) ** 2 + 72 * (n - 4) * (1 + s) ** 2 + 676 * s),
            0,
            288 * s,
        ])
    if name == "h_n2":
        s = (n - 1) ** 2
        return Polynomial([
            (n - 5) * (1 + s) ** 2,
            -((4 + s) ** 2 + (n - 5) * (1 + s) ** 2),
            -4 * s,
            4 * s,
        ])
    # h_n3
    s = (n - 2) ** 2
    return Polynomial([
        2028 * (n - 5) * (1 + s) ** 2,
        0,
        -(432 * (4 + s) ** 2 + 576 * (n - 5) * (1 + s) ** 2 + 8112 * s),
        0,
        2304 * s,
    ])


# ---------------------------------------------------------------------------
# Sign-condition ledger
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SignCondition:
    """p(r*sqrt(s)) has `expected` sign for every integer n >= n_min."""

    condition_id: str
    poly_name: str
    weight: Optional[WeightFunction]
    n_min: int
    expected: int  # +1 or -1

    def point(self, n: int) -> tuple[Fraction, Fraction]:
        return _LEDGER_POINTS[self.condition_id](n)

    def holds_at(self, n: int) -> bool:
        p = named_polynomial(self.poly_name, n, self.weight)
        if not p.is_exact():
            raise PartitionError("sign ledger requires rational weights")
        r, s = self.point(n)
        return sign_at_sqrt(p, r, s) == self.expected


_Z1 = WeightFunction("zagreb1")

def _half_bound(n: int) -> Fraction:
    # the recurring factor (n - 0.9)/2
    return (Fraction(n) - Fraction(9, 10)) / 2


_LEDGER_POINTS = {
    "phi2_pos_at_n_sqrt": lambda n: (Fraction(n), Fraction(n - 1)),
    "phi2_neg_at_n5_sqrt": lambda n: (Fraction(n - 5), Fraction(n - 1)),
    "phi3_pos_at_n_sqrt": lambda n: (Fraction(n), Fraction(n - 1)),
    "phi3_neg_at_n5_sqrt": lambda n: (Fraction(n - 5), Fraction(n - 1)),
    "h_n_neg_at_sqrt_n_minus_3": lambda n: (Fraction(1), Fraction(n - 3)),
    "h_n_pos_at_sqrt_n": lambda n: (Fraction(1), Fraction(n)),
    "h_n_pos_at_sqrt_n_minus_1p2": lambda n: (Fraction(1), n - Fraction(6, 5)),
    "h_n1_neg_at_upper": lambda n: (_half_bound(n), n - Fraction(19, 5)),
    "h_n2_pos_at_upper": lambda n: (_half_bound(n), n - Fraction(19, 5)),
    "h_n2_neg_at_lower": lambda n: (_half_bound(n), Fraction(n - 5)),
    "h_n3_pos_at_lower": lambda n: (_half_bound(n), Fraction(n - 5)),
    "h_n3_neg_at_deeper": lambda n: (_half_bound(n), Fraction(n - 7)),
}

SIGN_LEDGER: list[SignCondition] = [
    SignCondition("phi2_pos_at_n_sqrt", "phi2", _Z1, 10, +1),
    SignCondition("phi2_neg_at_n5_sqrt", "phi2", _Z1, 7, -1),
    SignCondition("phi3_pos_at_n_sqrt", "phi3", _Z1, 9, +1),
    SignCondition("phi3_neg_at_n5_sqrt", "phi3", _Z1, 8, -1),
    SignCondition("h_n_neg_at_sqrt_n_minus_3", "h_n", None, 12, -1),
    SignCondition("h_n_pos_at_sqrt_n", "h_n", None, 12, +1),
    SignCondition("h_n_pos_at_sqrt_n_minus_1p2", "h_n", None, 20, +1),
    SignCondition("h_n1_neg_at_upper", "h_n1", None, 12, -1),
    SignCondition("h_n2_pos_at_upper", "h_n2", None, 12, +1),
    SignCondition("h_n2_neg_at_lower", "h_n2", None, 12, -1),
    SignCondition("h_n3_pos_at_lower", "h_n3", None, 12, +1),
    SignCondition("h_n3_neg_at_deeper", "h_n3", None, 12, -1),
]


def phi1_sign_holds(f: WeightFunction, n: int) -> bool:
    """Exact check that phi1(sqrt(n-1) * f(n-1,1)) < 0."""
    c = evaluate_exact(f, n - 1, 1)
    if c is None:
        raise PartitionError("phi1 sign check requires a rational weight")
    p = named_polynomial("phi1", n, f)
    return sign_at_sqrt(p, c, Fraction(n - 1)) == -1


def evaluate_sign_ledger(fs: Sequence[WeightFunction], n_max: int = 60) -> list[dict]:
    """Evaluate every ledger condition at each integer n in its range.

    phi1's condition is checked for each supplied rational weight; the
    remaining conditions are weight-specific as recorded.  Returns one record
    per (condition, weight, n) with an exact boolean verdict.
    """
    records = []
    for f in fs:
        for n in range(6, n_max + 1):
            records.append({
                "condition": "phi1_neg_at_perron_bound",
                "weight": f.label(),
                "n": n,
                "holds": phi1_sign_holds(f, n),
            })
    for cond in SIGN_LEDGER:
        for n in range(cond.n_min, n_max + 1):
            records.append({
                "condition": cond.condition_id,
                "weight": cond.weight.label() if cond.weight else None,
                "n": n,
                "holds": cond.holds_at(n),
            })
    return records
