"""Clique machinery: enumeration, exact maximum clique, extension orders, catalogs.

Everything here is exact; the maximum-clique search is branch-and-bound with a
greedy coloring bound over bitset candidate sets, so there is no heuristic mode
to fall back to.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph, ValidationError, _mask_bits


def cliques_of_order(g: Graph, t: int) -> list[tuple[int, ...]]:
    """All t-cliques in lexicographic order.  t = 1 yields vertex singletons.

    Enumeration is depth-t extension: each partial clique keeps the bitset of
    common neighbors above its largest vertex, so dead branches are pruned by
    construction.
    """
    if t < 1:
        raise ValidationError(f"clique order must be >= 1, got {t}")
    if t == 1:
        return [(v,) for v in range(g.n)]
    out: list[tuple[int, ...]] = []
    adj = g.adj

    def extend(prefix: list[int], cand: int) -> None:
        if len(prefix) == t - 1:
            for v in _mask_bits(cand):
                out.append(tuple(prefix) + (v,))
            return
        # cand needs t - 1 - len(prefix) more vertices
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if len(prefix) + 1 + cand.bit_count() < t:
                break
            prefix.append(v)
            extend(prefix, cand & adj[v])
            prefix.pop()

    above = [a >> (v + 1) << (v + 1) for v, a in enumerate(g.adj)]
    for u in range(g.n):
        extend([u], above[u])
    return out


def _greedy_color_bound(adj: tuple[int, ...], cand: int) -> list[tuple[int, int]]:
    """Order candidates by greedy color class; returns (vertex, colors_used_so_far).

    Vertices come out in nondecreasing color number.  A clique inside cand can
    use at most one vertex per color class, so color number is a sound bound.
    """
    order: list[tuple[int, int]] = []
    color = 0
    rest = cand
    while rest:
        color += 1
        avail = rest
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~low & ~adj[v]
            rest ^= low
            order.append((v, color))
    return order


def _max_clique_mask(adj: tuple[int, ...], cand: int, size: int, best: list[int]) -> None:
    if size + cand.bit_count() <= best[0]:
        return
    order = _greedy_color_bound(adj, cand)
    # branch in reverse: highest color first keeps the bound tight
    for v, colors in reversed(order):
        if size + colors <= best[0]:
            return
        if size + 1 > best[0]:
            best[0] = size + 1
        _max_clique_mask(adj, cand & adj[v], size + 1, best)
        cand &= ~(1 << v)


def clique_number(g: Graph) -> int:
    """Exact maximum clique order (0 for the empty graph, 1 for edgeless)."""
    if g.n == 0:
        return 0
    best = [1]
    _max_clique_mask(g.adj, (1 << g.n) - 1, 0, best)
    return best[0]


def extension_order(g: Graph, clique) -> int:
    """Order of the largest clique of g containing the given clique.

    :raises ValidationError: if the seed is not a clique of g.
    """
    seed = list(clique)
    if len(set(seed)) != len(seed):
        raise ValidationError("seed vertices must be distinct")
    for v in seed:
        if not 0 <= v < g.n:
            raise ValidationError(f"vertex {v} out of range")
    for i, u in enumerate(seed):
        for v in seed[i + 1 :]:
            if not g.has_edge(u, v):
                raise ValidationError(f"seed is not a clique: missing edge ({u}, {v})")
    if not seed:
        return clique_number(g)
    common = (1 << g.n) - 1
    for v in seed:
        common &= g.adj[v]
    if common == 0:
        return len(seed)
    best = [0]
    _max_clique_mask(g.adj, common, 0, best)
    return len(seed) + best[0]


def vertex_extension_order(g: Graph, v: int) -> int:
    return extension_order(g, (v,))


@dataclass(frozen=True, eq=False)
class CliqueCatalog:
    """All order-t cliques of a graph plus the per-vertex / per-clique statistics
    the bound formulas consume."""

    n: int
    t: int
    cliques: tuple[tuple[int, ...], ...]
    counts: np.ndarray  # cliques through each vertex
    vertex_orders: np.ndarray  # largest clique order through each vertex
    clique_orders: np.ndarray  # largest clique order containing each t-clique
    omega: int

    @property
    def count_total(self) -> int:
        return len(self.cliques)

    def to_json_dict(self) -> dict:
        return {
            "t": self.t,
            "omega": self.omega,
            "cliques": [list(c) for c in self.cliques],
            "c_t": [int(c) for c in self.counts],
            "alpha_v": [int(a) for a in self.vertex_orders],
            "alpha_I": [int(a) for a in self.clique_orders],
        }

    @staticmethod
    def from_json_dict(n: int, data: dict) -> "CliqueCatalog":
        return CliqueCatalog(
            n=n,
            t=int(data["t"]),
            cliques=tuple(tuple(c) for c in data["cliques"]),
            counts=np.asarray(data["c_t"], dtype=np.int64),
            vertex_orders=np.asarray(data["alpha_v"], dtype=np.int64),
            clique_orders=np.asarray(data["alpha_I"], dtype=np.int64),
            omega=int(data["omega"]),
        )


def build_catalog(g: Graph, t: int) -> CliqueCatalog:
    """Enumerate t-cliques and compute counts and extension orders in one pass."""
    if t < 2:
        raise ValidationError(f"catalog order must be >= 2, got {t}")
    cliques = cliques_of_order(g, t)
    counts = np.zeros(g.n, dtype=np.int64)
    for c in cliques:
        for v in c:
            counts[v] += 1
    vertex_orders = np.array(
        [vertex_extension_order(g, v) for v in range(g.n)], dtype=np.int64
    )
    clique_orders = np.array(
        [extension_order(g, c) for c in cliques], dtype=np.int64
    )
    omega = int(vertex_orders.max()) if g.n else 0
    return CliqueCatalog(
        n=g.n,
        t=t,
        cliques=tuple(cliques),
        counts=counts,
        vertex_orders=vertex_orders,
        clique_orders=clique_orders,
        omega=omega,
    )


def clique_core(g: Graph, t: int) -> Graph:
    """Spanning subgraph keeping exactly the edges that lie in at least one t-clique."""
    if t < 2:
        raise ValidationError(f"core order must be >= 2, got {t}")
    if t == 2:
        return g
    adj = [0] * g.n
    for c in cliques_of_order(g, t):
        for i, u in enumerate(c):
            for v in c[i + 1 :]:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def clique_components(catalog: CliqueCatalog) -> tuple[list[list[int]], list[int]]:
    """Connected components of the t-clique hypergraph, plus clique-free vertices.

    Two vertices are linked when some t-clique contains both; vertices in no
    t-clique come back in the free list.
    """
    parent = list(range(catalog.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for c in catalog.cliques:
        r = find(c[0])
        for v in c[1:]:
            rv = find(v)
            if rv != r:
                parent[rv] = r
    groups: dict[int, list[int]] = {}
    free: list[int] = []
    covered = catalog.counts > 0
    for v in range(catalog.n):
        if covered[v]:
            groups.setdefault(find(v), []).append(v)
        else:
            free.append(v)
    comps = sorted(groups.values(), key=lambda c: c[0])
    return comps, free
