"""Simple undirected graphs on dense 0-based vertices, stored as bitset rows.

Adjacency is a tuple of Python ints, one bitmask per vertex.  Arbitrary-size
ints mean the same code path works for any order; the algorithms in this
package are exact and exponential, so anything much past a few dozen vertices
is out of scope anyway.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class ParseError(ValueError):
    """Malformed graph input; carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ValidationError(ValueError):
    """Structurally invalid argument (self-loop, bad index, non-clique seed, ...)."""


def _mask_bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class Graph:
    """Immutable simple graph; vertices are 0..n-1."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: tuple[int, ...]):
        self.n = n
        self.adj = adj

    # -- constructors -------------------------------------------------------

    @staticmethod
    def empty(n: int) -> "Graph":
        if n < 0:
            raise ValidationError("vertex count must be nonnegative")
        return Graph(n, (0,) * n)

    @staticmethod
    def from_edges(n: int, edges) -> "Graph":
        """Build from an iterable of (u, v) pairs; duplicates collapse.

        Self-loops and out-of-range endpoints raise ValidationError.
        """
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(n, tuple(adj))

    @staticmethod
    def from_edge_mask(n: int, mask: int) -> "Graph":
        """Graph from a bitmask over the lexicographic pair order of edge_pairs(n)."""
        adj = [0] * n
        i = 0
        for u in range(n):
            for v in range(u + 1, n):
                if mask >> i & 1:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
                i += 1
        return Graph(n, tuple(adj))

    # -- basic queries ------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return _mask_bits(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1) << (u + 1)
            for v in _mask_bits(rest):
                out.append((u, v))
        return out

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def edge_mask(self) -> int:
        mask = 0
        i = 0
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if self.adj[u] >> v & 1:
                    mask |= 1 << i
                i += 1
        return mask

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if self.adj[v] == 0]

    def add_edge(self, u: int, v: int) -> "Graph":
        """New graph with one extra edge (no-op if present)."""
        if u == v:
            raise ValidationError(f"self-loop at vertex {u}")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def to_numpy(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.float64)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1.0
        return a

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def edge_pairs(n: int) -> list[tuple[int, int]]:
    """Lexicographic (u, v) pair order used by edge masks and the sweep kernels."""
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    adj = tuple((full ^ a) & ~(1 << v) for v, a in enumerate(g.adj))
    return Graph(g.n, adj)


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, list[int]]:
    """Induced subgraph plus the sorted old-vertex list (new index i maps to list[i])."""
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise ValidationError(f"vertex {v} out of range")
    pos = {v: i for i, v in enumerate(keep)}
    adj = [0] * len(keep)
    for i, v in enumerate(keep):
        for w in _mask_bits(g.adj[v]):
            if w in pos:
                adj[i] |= 1 << pos[w]
    return Graph(len(keep), tuple(adj)), keep


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    seen = 0
    comps = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = 1 << start
        while frontier:
            nxt = 0
            for v in _mask_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(_mask_bits(comp))
    return comps


# -- generators -------------------------------------------------------------


def complete_multipartite(sizes) -> Graph:
    """Complete multipartite graph; part i occupies a consecutive vertex range."""
    sizes = list(sizes)
    if any(s < 1 for s in sizes):
        raise ValidationError("part sizes must be positive")
    n = sum(sizes)
    bounds = []
    start = 0
    for s in sizes:
        bounds.append((start, start + s))
        start += s
    full = (1 << n) - 1
    adj = []
    for lo, hi in bounds:
        part_mask = ((1 << (hi - lo)) - 1) << lo
        for v in range(lo, hi):
            adj.append(full & ~part_mask)
    return Graph(n, tuple(adj))


def turan_graph(n: int, r: int) -> Graph:
    """Complete r-partite graph on n vertices with part sizes as equal as possible."""
    if r < 1 or n < 0:
        raise ValidationError("need r >= 1 and n >= 0")
    if n == 0:
        return Graph.empty(0)
    q, rem = divmod(n, r)
    sizes = [q + 1] * rem + [q] * (r - rem)
    sizes = [s for s in sizes if s > 0]
    return complete_multipartite(sizes)


def gnp_random(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) from a seeded generator; same seed, same graph."""
    if not 0.0 <= p <= 1.0:
        raise ValidationError(f"edge probability {p} outside [0, 1]")
    rng = np.random.default_rng(seed)
    draws = rng.random(n * (n - 1) // 2)
    mask = 0
    for i, d in enumerate(draws):
        if d < p:
            mask |= 1 << i
    return Graph.from_edge_mask(n, mask)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValidationError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


# -- parsing / serialization ------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse 'u v' lines; '#' starts a comment, blank lines are skipped.

    An optional header line 'n <count>' fixes the vertex count (needed to
    round-trip trailing isolated vertices); otherwise n = max index + 1.
    Duplicate edges collapse silently.
    """
    n_declared: int | None = None
    edges: list[tuple[int, int]] = []
    max_seen = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if len(tokens) != 2 or edges or n_declared is not None:
                raise ParseError("header must be a single leading 'n <count>' line", lineno)
            try:
                n_declared = int(tokens[1])
            except ValueError:
                raise ParseError(f"bad vertex count {tokens[1]!r}", lineno) from None
            if n_declared < 0:
                raise ParseError("vertex count must be nonnegative", lineno)
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"non-integer endpoint in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError(f"negative vertex in {line!r}", lineno)
        if u == v:
            raise ValidationError(f"line {lineno}: self-loop at vertex {u}")
        if n_declared is not None and (u >= n_declared or v >= n_declared):
            raise ParseError(f"vertex beyond declared count {n_declared}", lineno)
        edges.append((u, v))
        max_seen = max(max_seen, u, v)
    n = n_declared if n_declared is not None else max_seen + 1
    return Graph.from_edges(n, edges)


def serialize_edge_list(g: Graph) -> str:
    """Canonical form: 'n <count>' header then sorted 'u v' lines with u < v."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> Graph:
    """DIMACS: one 'p edge <n> <m>' line then 'e <u> <v>' lines, 1-indexed."""
    n: int | None = None
    m_declared = 0
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(tokens) != 4 or tokens[1] != "edge":
                raise ParseError(f"expected 'p edge n m', got {line!r}", lineno)
            try:
                n, m_declared = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise ParseError("non-integer counts in problem line", lineno) from None
            if n < 0:
                raise ParseError("vertex count must be nonnegative", lineno)
        elif tokens[0] == "e":
            if n is None:
                raise ParseError("edge line before problem line", lineno)
            if len(tokens) != 3:
                raise ParseError(f"expected 'e u v', got {line!r}", lineno)
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ParseError(f"non-integer endpoint in {line!r}", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"edge index outside 1..{n}", lineno)
            if u == v:
                raise ValidationError(f"line {lineno}: self-loop at vertex {u}")
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unrecognized line {line!r}", lineno)
    if n is None:
        raise ParseError("missing problem line", len(text.splitlines()) or 1)
    g = Graph.from_edges(n, edges)
    if g.edge_count != m_declared:
        import logging

        logging.getLogger(__name__).warning(
            "DIMACS header declares %d edges, found %d distinct", m_declared, g.edge_count
        )
    return g


def serialize_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.edge_count}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# -- complete multipartite recognition -------------------------------------


@dataclass(frozen=True)
class Partition:
    """Vertex partition of the non-isolated support of a complete multipartite graph.

    parts cover exactly the non-isolated vertices; isolated vertices are kept
    aside so callers can decide whether they matter for a given predicate.
    """

    parts: tuple[tuple[int, ...], ...]
    isolated: tuple[int, ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)

    @property
    def is_regular(self) -> bool:
        return len(set(self.sizes)) <= 1


def complete_multipartite_partition(g: Graph) -> Partition | None:
    """Recognize complete multipartite structure on the non-isolated vertices.

    Candidate parts are the connected components of the complement restricted
    to the support; the graph qualifies iff every vertex is adjacent to exactly
    the rest of the support outside its own part.  Returns None otherwise.
    """
    support = 0
    for v in range(g.n):
        if g.adj[v]:
            support |= 1 << v
    isolated = tuple(v for v in range(g.n) if not g.adj[v])
    if not support:
        # edgeless: vacuous structure, zero parts
        return Partition(parts=(), isolated=isolated)
    # complement components within the support
    part_of = {}
    parts: list[list[int]] = []
    seen = 0
    for start in _mask_bits(support):
        if seen >> start & 1:
            continue
        comp = 1 << start
        frontier = 1 << start
        while frontier:
            nxt = 0
            for v in _mask_bits(frontier):
                non_nbrs = support & ~g.adj[v] & ~(1 << v)
                nxt |= non_nbrs
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        members = _mask_bits(comp)
        idx = len(parts)
        parts.append(members)
        for v in members:
            part_of[v] = idx
    # single exact check: each vertex sees precisely support minus its own part
    for idx, members in enumerate(parts):
        part_mask = 0
        for v in members:
            part_mask |= 1 << v
        want = support & ~part_mask
        for v in members:
            if g.adj[v] != want:
                return None
    return Partition(parts=tuple(tuple(p) for p in parts), isolated=isolated)
