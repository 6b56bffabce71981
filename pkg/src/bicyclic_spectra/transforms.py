"""Edge-rerouting transforms with spectral-monotonicity contracts.

The rerouting operation on (u, v) moves every edge uw with w in N(u)-N[v]
to vw; for weights with property P* it strictly increases the spectral
radius whenever it changes the isomorphism class.  The pendant-shift move
relocates one pendant from the smaller of two pendant bundles to the larger
and carries the same contract.
"""

from __future__ import annotations

from dataclasses import dataclass

from .enumeration import canonical_form
from .graphs import Graph
from .spectral import build_matrix, full_spectrum
from .weights import WeightFunction

ISO_CHECK_BOUND = 12
_ONE = WeightFunction("constant_one")


class TransformError(ValueError):
    pass


@dataclass(frozen=True)
class TransformOutcome:
    """changed means the result is not isomorphic to the input; when the
    isomorphism check fell back to invariants (n > 12), probable is set."""

    result: Graph
    changed: bool
    moved_edges: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    probable: bool = False
    disconnects: bool = False


def _changed_flag(before: Graph, after: Graph) -> tuple[bool, bool]:
    """(changed, probable): certain via certificates when small enough."""
    if before.edges == after.edges:
        return False, False
    if before.n <= ISO_CHECK_BOUND:
        return canonical_form(before) != canonical_form(after), False
    # fast path: degree sequence plus rounded spectrum
    if before.degree_sequence() != after.degree_sequence():
        return True, False
    sa = [round(x, 8) for x in full_spectrum(build_matrix(before, _ONE))]
    sb = [round(x, 8) for x in full_spectrum(build_matrix(after, _ONE))]
    return (True, False) if sa != sb else (False, True)


def kelmans(g: Graph, u: int, v: int) -> TransformOutcome:
    """Move the edges from u's private neighborhood over to v.

    Exactly the edges {uw : w in N(u)-N[v]} become {vw}; vertex and edge
    counts are preserved.  The operation may disconnect the graph (flagged,
    not forbidden).  The u->v and v->u variants give isomorphic results.
    """
    if u == v:
        raise TransformError("kelmans requires distinct vertices")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise TransformError(f"vertex out of range: ({u},{v})")
    nbr = g.neighbors()
    private = nbr[u] - nbr[v] - {v}
    edges = set(g.edges)
    moved = []
    for w in sorted(private):
        old = (u, w) if u < w else (w, u)
        new = (v, w) if v < w else (w, v)
        edges.discard(old)
        edges.add(new)
        moved.append((old, new))
    result = Graph(g.n, frozenset(edges))
    changed, probable = _changed_flag(g, result) if moved else (False, False)
    disconnects = bool(moved) and g.is_connected() and not result.is_connected()
    return TransformOutcome(result, changed, tuple(moved), probable, disconnects)


def pendant_shift(g: Graph, v: int, u: int, w: int) -> Graph:
    """Move pendant w from v's bundle to u's: delete vw, add uw.

    Preconditions (each reported on its own): w lies in N(v)-N[u]; every
    vertex of N(v)-N[u] and of N(u)-N[v] is pendant; the bundle at v is no
    larger than the bundle at u.
    """
    if len({u, v, w}) != 3:
        raise TransformError("pendant_shift requires three distinct vertices")
    for x in (u, v, w):
        if not 0 <= x < g.n:
            raise TransformError(f"vertex {x} out of range")
    nbr = g.neighbors()
    deg = g.degrees()
    n1 = nbr[v] - nbr[u] - {u}
    n2 = nbr[u] - nbr[v] - {v}
    if w not in n1:
        raise TransformError(f"vertex {w} is not in N(v)-N[u]")
    bad = [x for x in sorted(n1 | n2) if deg[x] != 1]
    if bad:
        raise TransformError(f"non-pendant vertices in the private neighborhoods: {bad}")
    if not 1 <= len(n1) <= len(n2):
        raise TransformError(
            f"bundle sizes violate |N1| <= |N2|: |N1|={len(n1)}, |N2|={len(n2)}"
        )
    return g.remove_edge(v, w).add_edge(u, w)
