"""Simple undirected graphs, the named bicyclic families, and graph6 I/O.

Vertices are 0-indexed contiguous integers.  Constructors put base vertices
first and attachment vertices last, so tests can address e.g. "the hub" by a
fixed index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional


class GraphError(ValueError):
    """Invalid graph construction or operation."""


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph: vertex count + set of sorted pairs."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be nonnegative")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge ({u},{v}) out of range for n={self.n}")

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return Graph(n, frozenset(_norm_edge(u, v) for u, v in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees(), reverse=True))

    def neighbors(self) -> list[set[int]]:
        nbr: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbr[u].add(v)
            nbr[v].add(u)
        return nbr

    def neighbor_masks(self) -> list[int]:
        """Adjacency rows as bitmasks (n <= 62 fits comfortably in ints)."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def add_edge(self, u: int, v: int) -> "Graph":
        e = _norm_edge(u, v)
        if e in self.edges:
            raise GraphError(f"edge {e} already present")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"edge ({u},{v}) out of range")
        return Graph(self.n, self.edges | {e})

    def remove_edge(self, u: int, v: int) -> "Graph":
        e = _norm_edge(u, v)
        if e not in self.edges:
            raise GraphError(f"edge {e} not present")
        return Graph(self.n, self.edges - {e})

    def relabel(self, perm: list[int]) -> "Graph":
        """Image graph under `perm`: vertex v goes to position perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabel: not a permutation")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        nbr = self.neighbors()
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in nbr[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def cyclomatic_number(self) -> int:
        """m - n + 1; meaningful for connected graphs."""
        return self.m - self.n + 1

    def is_bicyclic(self) -> bool:
        return self.is_connected() and self.cyclomatic_number() == 2


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------


def make_infinity(p: int, l: int, q: int) -> Graph:
    """The infinity-graph B(p,l,q): cycles C_p and C_q joined by a path.

    The connecting path has length l-1; l=1 means the cycles share a single
    vertex, l=2 means they are joined by one edge.  Labeling: C_p is
    0..p-1 (vertex 0 is the junction), then the l-2 interior path vertices,
    then C_q.
    """
    if p < 3 or q < 3:
        raise GraphError(f"B(p,l,q) needs cycle lengths >= 3, got p={p}, q={q}")
    if l < 1:
        raise GraphError(f"B(p,l,q) needs l >= 1, got l={l}")
    edges = []
    # C_p on 0..p-1
    for i in range(p):
        edges.append((i, (i + 1) % p))
    if l == 1:
        u = 0  # shared vertex
        nxt = p
    else:
        # path 0 = w_1, w_2, ..., w_l = u
        prev = 0
        nxt = p
        for _ in range(l - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        u = prev
    # C_q on u plus nxt..nxt+q-2
    cyc = [u] + list(range(nxt, nxt + q - 1))
    for i in range(q):
        edges.append((cyc[i], cyc[(i + 1) % q]))
    n = p + q + l - 2
    return Graph.from_edges(n, edges)


def make_theta(p: int, l: int, q: int) -> Graph:
    """The theta-graph P(p,l,q): three internally disjoint x-y paths.

    Path lengths are p, l and q with l = min and at most one of them 1.
    Labeling: x=0, y=1, then interior vertices of the p-path, the l-path,
    the q-path in that order.
    """
    if p < 2 or q < 2:
        raise GraphError(f"P(p,l,q) needs p,q >= 2, got p={p}, q={q}")
    if l < 1:
        raise GraphError(f"P(p,l,q) needs l >= 1, got l={l}")
    if l > min(p, q):
        raise GraphError(f"P(p,l,q) expects l = min, got ({p},{l},{q})")
    edges = []
    nxt = 2
    for length in (p, l, q):
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    n = p + q + l - 1
    return Graph.from_edges(n, edges)


def attach_pendants(g: Graph, v: int, k: int) -> Graph:
    """Attach k new pendant vertices to v (new indices n..n+k-1)."""
    if not (0 <= v < g.n):
        raise GraphError(f"vertex {v} out of range")
    if k < 0:
        raise GraphError("pendant count must be >= 0")
    edges = set(g.edges)
    for i in range(k):
        edges.add((v, g.n + i))
    return Graph.from_edges(g.n + k, edges)


def graph_g1(n: int) -> Graph:
    """P(2,1,2) with n-4 pendants on hub 0 (degree n-1)."""
    if n < 4:
        raise GraphError("G1 requires n >= 4")
    return attach_pendants(make_theta(2, 1, 2), 0, n - 4)


def graph_g2(n: int) -> Graph:
    """B(3,1,3) with n-5 pendants on the degree-4 center (vertex 0)."""
    if n < 5:
        raise GraphError("G2 requires n >= 5")
    return attach_pendants(make_infinity(3, 1, 3), 0, n - 5)


def graph_g3(n: int) -> Graph:
    """P(2,1,2) with n-4 pendants on a degree-2 vertex (vertex 2)."""
    if n < 5:
        raise GraphError("G3 requires n >= 5")
    return attach_pendants(make_theta(2, 1, 2), 2, n - 4)


def graph_g4(n: int) -> Graph:
    """P(2,1,2) with n-5 pendants on hub 0 and one pendant on hub 1."""
    if n < 6:
        raise GraphError("G4 requires n >= 6")
    return attach_pendants(attach_pendants(make_theta(2, 1, 2), 0, n - 5), 1, 1)


def graph_h_n3_2(n: int) -> Graph:
    """P(2,1,2) with n-6 pendants on hub 0 and two pendants on hub 1.

    Candidate realization of the maximum-degree n-3 bicyclic extremal graph;
    its adjacency characteristic polynomial is pinned by tests.
    """
    if n < 7:
        raise GraphError("H(n,n-3,2) requires n >= 7")
    return attach_pendants(attach_pendants(make_theta(2, 1, 2), 0, n - 6), 1, 2)


@dataclass(frozen=True)
class NamedFamily:
    """A named graph family: tag plus order and/or (p,l,q) parameters."""

    tag: str  # G1 | G2 | G3 | G4 | infinity | theta
    n: Optional[int] = None
    params: Optional[tuple[int, int, int]] = None


_FAMILY_BUILDERS = {
    "G1": graph_g1,
    "G2": graph_g2,
    "G3": graph_g3,
    "G4": graph_g4,
}


def make_named(family: NamedFamily) -> Graph:
    if family.tag in _FAMILY_BUILDERS:
        if family.n is None:
            raise GraphError(f"{family.tag} requires a target order n")
        return _FAMILY_BUILDERS[family.tag](family.n)
    if family.tag == "infinity":
        if family.params is None:
            raise GraphError("infinity base requires (p,l,q)")
        p, l, q = family.params
        return make_infinity(p, l, q)
    if family.tag == "theta":
        if family.params is None:
            raise GraphError("theta base requires (p,l,q)")
        p, l, q = family.params
        return make_theta(p, l, q)
    raise GraphError(f"unknown family tag {family.tag!r}")


# ---------------------------------------------------------------------------
# Base graph extraction and classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BaseGraph:
    """Pendant-free core of a bicyclic graph plus its classification.

    kind is "infinity" for B(p,l,q) and "theta" for P(p,l,q); params holds
    (p,l,q) normalized so that in the infinity case p <= q and in the theta
    case l is the minimum path length and p <= q.
    """

    graph: Graph
    kind: str
    params: tuple[int, int, int]
    kept_vertices: tuple[int, ...] = field(compare=False, default=())


def base_graph(g: Graph) -> BaseGraph:
    """Strip pendant vertices repeatedly and classify the remaining core."""
    if not g.is_bicyclic():
        raise GraphError("base_graph requires a connected bicyclic graph")
    alive = set(range(g.n))
    nbr = g.neighbors()
    deg = {v: len(nbr[v]) for v in alive}
    pend = [v for v in alive if deg[v] == 1]
    while pend:
        v = pend.pop()
        alive.discard(v)
        for w in nbr[v]:
            if w in alive:
                nbr[w].discard(v)
                deg[w] -= 1
                if deg[w] == 1:
                    pend.append(w)
    kept = sorted(alive)
    idx = {v: i for i, v in enumerate(kept)}
    core = Graph.from_edges(
        len(kept), ((idx[u], idx[v]) for u, v in g.edges if u in alive and v in alive)
    )
    kind, params = _classify_base(core)
    return BaseGraph(core, kind, params, tuple(kept))


def _classify_base(core: Graph) -> tuple[str, tuple[int, int, int]]:
    """Classify a pendant-free bicyclic graph as B(p,l,q) or P(p,l,q)."""
    deg = core.degrees()
    branch = [v for v in range(core.n) if deg[v] >= 3]
    nbr = core.neighbors()
    if len(branch) == 1:
        # single degree-4 junction: B(p,1,q)
        z = branch[0]
        if deg[z] != 4:
            raise GraphError("unrecognized bicyclic base")
        comps = _path_components(core, {z})
        lens = sorted(len(c) + 1 for c in comps)
        if len(lens) != 2:
            raise GraphError("unrecognized bicyclic base")
        return "infinity", (lens[0], 1, lens[1])
    if len(branch) != 2 or any(deg[v] != 3 for v in branch):
        raise GraphError("unrecognized bicyclic base")
    u, v = branch
    comps = _path_components(core, {u, v})
    # classify each leftover path by which branch vertices its ends touch
    uu, vv, uv = [], [], []
    for comp in comps:
        ends = []
        for x in comp:
            for b in (u, v):
                if b in nbr[x]:
                    ends.append(b)
        if sorted(set(ends)) == [u, v] and len(ends) == 2:
            uv.append(len(comp) + 1)  # x-y path length in edges
        elif ends.count(u) == 2:
            uu.append(len(comp) + 1)  # cycle length through u
        elif ends.count(v) == 2:
            vv.append(len(comp) + 1)
        else:
            raise GraphError("unrecognized bicyclic base")
    if core.has_edge(u, v):
        uv.append(1)
    if len(uv) == 3:
        a, b, c = sorted(uv)
        return "theta", (b, a, c)
    if len(uv) == 1 and len(uu) == 1 and len(vv) == 1:
        p, q = sorted((uu[0], vv[0]))
        return "infinity", (p, uv[0] + 1, q)
    raise GraphError("unrecognized bicyclic base")


def _path_components(g: Graph, removed: set[int]) -> list[list[int]]:
    """Connected components of g minus `removed` (all degree <= 2 paths here)."""
    nbr = g.neighbors()
    seen: set[int] = set()
    comps = []
    for s in range(g.n):
        if s in removed or s in seen:
            continue
        comp = [s]
        seen.add(s)
        stack = [s]
        while stack:
            x = stack.pop()
            for w in nbr[x]:
                if w not in removed and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(comp)
    return comps


# ---------------------------------------------------------------------------
# graph6 and edge-list text interchange
# ---------------------------------------------------------------------------


def graph6_encode(g: Graph) -> str:
    """Header-free graph6 string; supports n <= 62."""
    if g.n > 62:
        raise GraphError("graph6 encoder limited to n <= 62")
    masks = g.neighbor_masks()
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append((masks[j] >> i) & 1)
    chars = [chr(63 + g.n)]
    for k in range(0, len(bits), 6):
        group = bits[k : k + 6]
        group += [0] * (6 - len(group))
        val = 0
        for b in group:
            val = (val << 1) | b
        chars.append(chr(63 + val))
    return "".join(chars)


def graph6_decode(s: str) -> Graph:
    """Inverse of graph6_encode (vertex order preserved)."""
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise GraphError("empty graph6 string")
    n = ord(s[0]) - 63
    if not (0 <= n <= 62):
        raise GraphError("graph6 decoder limited to n <= 62")
    need = (n * (n - 1) // 2 + 5) // 6
    data = s[1 : 1 + need]
    if len(data) != need:
        raise GraphError("truncated graph6 string")
    bits = []
    for ch in data:
        val = ord(ch) - 63
        if not (0 <= val < 64):
            raise GraphError(f"invalid graph6 character {ch!r}")
        bits.extend((val >> (5 - t)) & 1 for t in range(6))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def to_edge_text(g: Graph) -> str:
    """Debug format: one "u v" line per edge, preceded by the vertex count."""
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def from_edge_text(text: str) -> Graph:
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise GraphError("empty edge text")
    n = int(lines[0])
    edges = []
    for ln in lines[1:]:
        u, v = ln.split()
        edges.append((int(u), int(v)))
    return Graph.from_edges(n, edges)
