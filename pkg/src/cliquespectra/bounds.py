"""Clique-count and spectral-radius bounds with equality-case detection.

Every evaluator returns a BoundReport.  The common ingredient is the weight
attached to a clique order a at level t:

    weight(a, t) = (C(a, t) / a^t) ^ (1 / (t - 1))

with the convention weight(a, t) = 0 when a < t.  Bounds whose left side is a
tensor spectral radius consume a certified enclosure; `holds` then uses the
interval's favorable end, so a reported violation is never a rounding artifact,
and `equality_numeric` requires the whole interval to sit within eq_tol of the
other side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .cliques import (
    CliqueCatalog,
    build_catalog,
    clique_core,
    cliques_of_order,
)
from .graphs import Graph, complete_multipartite_partition, induced_subgraph
from .spectral import SpectralResult, spectral_radius

DEFAULT_EQ_TOL = 1e-6
DEFAULT_SLACK_COEF = 1e-9

KIND_OMEGA_EQ_T = "multipartite-omega-eq-t"
KIND_REGULAR = "regular-multipartite"
KIND_NONE = "none"


def order_weight(a: int, t: int) -> float:
    """(C(a,t)/a^t)^(1/(t-1)), the localized weight of clique order a; 0 if a < t.

    Evaluated in the log domain so larger t stays accurate.
    """
    if a < t:
        return 0.0
    return math.exp((math.log(math.comb(a, t)) - t * math.log(a)) / (t - 1))


def inverse_order_weight(a: int, t: int) -> float:
    """a^t / C(a,t), the weight in the unit-sum lemmas; requires a >= t."""
    if a < t:
        raise ValueError(f"clique order {a} below level {t}")
    return math.exp(t * math.log(a) - math.log(math.comb(a, t)))


@dataclass(frozen=True)
class BoundReport:
    name: str
    anchor: str
    lhs: float
    rhs: float
    holds: bool
    gap: float
    equality_numeric: bool
    equality_structural: bool | None
    applicable: bool = True

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "anchor": self.anchor,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
            "gap": self.gap,
            "equality_numeric": self.equality_numeric,
            "equality_structural": self.equality_structural,
            "applicable": self.applicable,
        }


def _report(
    name: str,
    anchor: str,
    lhs_interval: tuple[float, float],
    lhs_point: float,
    rhs: float,
    structural: bool | None,
    eq_tol: float,
    slack_coef: float,
) -> BoundReport:
    """Assemble a report for lhs <= rhs where lhs may carry a certified interval."""
    lo, hi = lhs_interval
    slack = slack_coef * max(1.0, abs(rhs))
    holds = lo <= rhs + slack
    scale = max(1.0, abs(rhs))
    eq_num = abs(rhs - lo) <= eq_tol * scale and abs(rhs - hi) <= eq_tol * scale
    return BoundReport(
        name=name,
        anchor=anchor,
        lhs=lhs_point,
        rhs=rhs,
        holds=holds,
        gap=rhs - lhs_point,
        equality_numeric=eq_num,
        equality_structural=structural,
    )


# -- structural equality machinery -----------------------------------------


@dataclass(frozen=True)
class EqualityCase:
    """Shape of the t-clique core, classified for the equality predicates.

    kind is 'regular-multipartite' when the core minus clique-free vertices is
    complete multipartite with equal part sizes (part count then necessarily
    equals the clique number), 'multipartite-omega-eq-t' when it is complete
    multipartite with unequal parts but the clique number equals t, else 'none'.
    """

    kind: str
    parts: tuple[tuple[int, ...], ...] | None
    uncovered: tuple[int, ...]

    @property
    def spanning(self) -> bool:
        return not self.uncovered


def equality_case_predicate(
    g: Graph, t: int, catalog: CliqueCatalog | None = None
) -> EqualityCase:
    if catalog is None:
        catalog = build_catalog(g, t)
    uncovered = tuple(int(v) for v in np.flatnonzero(catalog.counts == 0))
    if len(catalog.cliques) == 0:
        return EqualityCase(kind=KIND_NONE, parts=None, uncovered=uncovered)
    core = clique_core(g, t)
    part = complete_multipartite_partition(core)
    if part is None or not part.parts:
        return EqualityCase(kind=KIND_NONE, parts=None, uncovered=uncovered)
    # a clique-covered vertex keeps a core edge, so the partition support is
    # exactly the covered set and its part count equals the clique number
    if len(part.parts) != catalog.omega:
        return EqualityCase(kind=KIND_NONE, parts=None, uncovered=uncovered)
    if part.is_regular:
        kind = KIND_REGULAR
    elif catalog.omega == t:
        kind = KIND_OMEGA_EQ_T
    else:
        kind = KIND_NONE
    parts = part.parts if kind != KIND_NONE else None
    return EqualityCase(kind=kind, parts=parts, uncovered=uncovered)


def witness_vector(g: Graph, t: int, case: EqualityCase | None = None) -> np.ndarray | None:
    """Unit-sum vector spreading mass 1/omega uniformly inside each core part;
    the equality witness for the weighted-sum lemmas.  None if no structure."""
    if case is None:
        case = equality_case_predicate(g, t)
    if case.kind == KIND_NONE or not case.parts:
        return None
    x = np.zeros(g.n, dtype=np.float64)
    k = len(case.parts)
    for p in case.parts:
        for v in p:
            x[v] = 1.0 / (k * len(p))
    return x


def _classical_structural(g: Graph, omega: int) -> bool:
    """Complete bipartite (omega 2) or complete regular multipartite (omega >= 3),
    ignoring isolated vertices; vacuously true for edgeless graphs."""
    if g.edge_count == 0:
        return True
    part = complete_multipartite_partition(g)
    if part is None or len(part.parts) != omega:
        return False
    return omega == 2 or part.is_regular


def _spanning_regular_structural(g: Graph, omega: int, require_isolated_free: bool) -> bool:
    if g.edge_count == 0:
        return g.n == 0
    part = complete_multipartite_partition(g)
    if part is None or len(part.parts) != omega:
        return False
    if require_isolated_free and part.isolated:
        return False
    return part.is_regular


# -- classical bounds (left sides at the edge level) ------------------------


def nikiforov_bound(
    g: Graph,
    omega: int,
    sp2: SpectralResult | None,
    eq_tol: float = DEFAULT_EQ_TOL,
    slack_coef: float = DEFAULT_SLACK_COEF,
) -> BoundReport:
    """Adjacency radius vs sqrt(2 m (1 - 1/omega))."""
    m = g.edge_count
    name, anchor = "nikiforov", "Nikiforov edge-count spectral bound"
    if m == 0:
        return _report(name, anchor, (0.0, 0.0), 0.0, 0.0, True, eq_tol, slack_coef)
    if sp2 is None:
        raise ValueError("needs the adjacency (t=2) spectral result")
    rhs = math.sqrt(2.0 * m * (1.0 - 1.0 / omega))
    structural = _classical_structural(g, omega)
    return _report(name, anchor, (sp2.lower, sp2.upper), sp2.rho, rhs, structural, eq_tol, slack_coef)


def turan_edge_bound(
    g: Graph,
    omega: int,
    eq_tol: float = DEFAULT_EQ_TOL,
    slack_coef: float = DEFAULT_SLACK_COEF,
) -> BoundReport:
    """Edge count vs (1 - 1/omega) n^2 / 2."""
    m = float(g.edge_count)
    r = max(omega, 1)
    rhs = (1.0 - 1.0 / r) * g.n * g.n / 2.0
    if g.edge_count == 0:
        structural = True
    else:
        part = complete_multipartite_partition(g)
        structural = (
            part is not None
            and not part.isolated
            and len(part.parts) == omega
            and part.is_regular
        )
    return _report(
        "turan_edges", "Turan edge-count bound", (m, m), m, rhs, structural, eq_tol, slack_coef
    )


def localized_turan_bound(
    g: Graph,
    edge_orders: np.ndarray,
    eq_tol: float = DEFAULT_EQ_TOL,
    slack_coef: float = DEFAULT_SLACK_COEF,
) -> BoundReport:
    """Sum over edges of a/(a-1) vs n^2/2, a = largest clique order through the edge."""
    lhs = float(sum(a / (a - 1.0) for a in edge_orders))
    rhs = g.n * g.n / 2.0
    if g.edge_count == 0:
        structural = g.n == 0
    else:
        part = complete_multipartite_partition(g)
        structural = (
            part is not None
            and not part.isolated
            and part.is_regular
        )
    return _report(
        "turan_local_edges",
        "edge-localized Turan bound",
        (lhs, lhs),
        lhs,
        rhs,
        structural,
        eq_tol,
        slack_coef,
    )


def liu_ning_bound(
    g: Graph,
    omega: int,
    edge_orders: np.ndarray,
    sp2: SpectralResult | None,
    eq_tol: float = DEFAULT_EQ_TOL,
    slack_coef: float = DEFAULT_SLACK_COEF,
) -> BoundReport:
    """Adjacency radius vs sqrt(2 sum over edges of (a-1)/a)."""
    name, anchor = "liu_ning", "Liu-Ning edge-localized spectral bound"
    if g.edge_count == 0:
        return _report(name, anchor, (0.0, 0.0), 0.0, 0.0, True, eq_tol, slack_coef)
    if sp2 is None:
        raise ValueError("needs the adjacency (t=2) spectral result")
    rhs = math.sqrt(2.0 * float(sum((a - 1.0) / a for a in edge_orders)))
    structural = _classical_structural(g, omega)
    return _report(name, anchor, (sp2.lower, sp2.upper), sp2.rho, rhs, structural, eq_tol, slack_coef)


# -- clique-tensor bounds ---------------------------------------------------


def zykov_spectral_bound(
    g: Graph,
    catalog: CliqueCatalog,
    sp: SpectralResult,
    eq_tol: float = DEFAULT_EQ_TOL,
    slack_coef: float = DEFAULT_SLACK_COEF,
) -> BoundReport:
    """Tensor radius vs (t/omega) C(omega,t)^(1/t) |C_t|^((t-1)/t)."""
    t, omega = catalog.t, catalog.omega
    if not 2 <= t <= omega:
        raise ValueError(f"needs 2 <= t <= clique number, got t={t}, omega={omega}")
    m = catalog.count_total
    rhs = (t / omega) * math.comb(omega, t) ** (1.0 / t) * m ** ((t - 1.0) / t)
    case = equality_case_predicate(g, t, catalog)
    return _report(
        "zykov_spectral",
        "clique-tensor Zykov-type bound",
        (sp.lower, sp.upper),
        sp.rho,
        rhs,
        case.kind != KIND_NONE,
        eq_tol,
        slack_coef,
    )


def count_vs_radius_bound(
    catalog: CliqueCatalog,
    sp: SpectralResult,
    eq_tol: float = DEFAULT_EQ_TOL,
    slack_coef: float = DEFAULT_SLACK_COEF,
) -> BoundReport:
    """|C_t| <= (n/t) rho; equality iff every vertex meets the same number of t-cliques.

    The radius sits on the right here, so `holds` uses the enclosure's upper
    end and the equality test needs the whole interval near |C_t|.
    """
    n, t = catalog.n, catalog.t
    lhs = float(catalog.count_total)
    rhs_lo, rhs_hi = n * sp.lower / t, n * sp.upper / t
    rhs_point = n * sp.rho / t
    slack = slack_coef * max(1.0, abs(rhs_point))
    scale = max(1.0, abs(lhs))
    structural = bool(len(set(int(c) for c in catalog.counts)) <= 1) if n else True
    return BoundReport(
        name="count_vs_radius",
        anchor="clique count vs tensor radius",
        lhs=lhs,
        rhs=rhs_point,
        holds=lhs <= rhs_hi + slack,
        gap=rhs_point - lhs,
        equality_numeric=abs(rhs_lo - lhs) <= eq_tol * scale
        and abs(rhs_hi - lhs) <= eq_tol * scale,
        equality_structural=structural,
    )


def _clique_weight_sum(catalog: CliqueCatalog) -> float:
    return float(sum(order_weight(int(a), catalog.t) for a in catalog.clique_orders))


def _vertex_weights(catalog: CliqueCatalog) -> np.ndarray:
    return np.array(
        [order_weight(int(a), catalog.t) for a in catalog.vertex_orders], dtype=np.float64
    )


def radius_bound_from_clique_orders(
    g: Graph,
    catalog: CliqueCatalog,
    sp: SpectralResult,
    case: EqualityCase | None = None,
    eq_tol: float = DEFAULT_EQ_TOL,
    slack_coef: float = DEFAULT_SLACK_COEF,
) -> BoundReport:
    """(rho/t)^t vs (sum of per-clique weights)^(t-1); equality iff the core is
    complete multipartite with clique number t, or complete regular multipartite."""
    t = catalog.t
    rhs = _clique_weight_sum(catalog) ** (t - 1.0)
    if case is None:
        case = equality_case_predicate(g, t, catalog)
    interval = ((sp.lower / t) ** t, (sp.upper / t) ** t)
    return _report(
        "radius_clique_local",
        "clique-localized tensor radius bound",
        interval,
        (sp.rho / t) ** t,
        rhs,
        case.kind != KIND_NONE,
        eq_tol,
        slack_coef,
    )


def radius_bound_from_vertex_counts(
    g: Graph,
    catalog: CliqueCatalog,
    sp: SpectralResult,
    case: EqualityCase | None = None,
    eq_tol: float = DEFAULT_EQ_TOL,
    slack_coef: float = DEFAULT_SLACK_COEF,
) -> BoundReport:
    """rho^t vs t (sum of count-weighted vertex weights)^(t-1); same equality
    cases as the clique-order form."""
    t = catalog.t
    s = float(catalog.counts @ _vertex_weights(catalog))
    rhs = t * s ** (t - 1.0)
    if case is None:
        case = equality_case_predicate(g, t, catalog)
    return _report(
        "radius_vertex_counts",
        "count-weighted vertex radius bound",
        (sp.lower**t, sp.upper**t),
        sp.rho**t,
        rhs,
        case.kind != KIND_NONE,
        eq_tol,
        slack_coef,
    )


def weight_count_balance_check(
    g: Graph,
    catalog: CliqueCatalog,
    case: EqualityCase | None = None,
    eq_tol: float = DEFAULT_EQ_TOL,
    slack_coef: float = DEFAULT_SLACK_COEF,
) -> BoundReport:
    """sum of (count/t)-weighted vertex weights vs (sum of vertex weights)^t;
    equality needs the regular multipartite core even when the clique number
    equals t."""
    t = catalog.t
    w = _vertex_weights(catalog)
    lhs = float((catalog.counts / t) @ w)
    rhs = float(w.sum()) ** t
    if case is None:
        case = equality_case_predicate(g, t, catalog)
    return _report(
        "weight_count_balance",
        "count-weight balance inequality",
        (lhs, lhs),
        lhs,
        rhs,
        case.kind == KIND_REGULAR,
        eq_tol,
        slack_coef,
    )


def radius_bound_from_vertex_orders(
    g: Graph,
    catalog: CliqueCatalog,
    sp: SpectralResult,
    case: EqualityCase | None = None,
    eq_tol: float = DEFAULT_EQ_TOL,
    slack_coef: float = DEFAULT_SLACK_COEF,
) -> BoundReport:
    """rho vs t (sum of vertex weights)^(t-1); equality iff the core is complete
    regular multipartite (clique-free vertices allowed)."""
    t = catalog.t
    rhs = t * float(_vertex_weights(catalog).sum()) ** (t - 1.0)
    if case is None:
        case = equality_case_predicate(g, t, catalog)
    return _report(
        "radius_vertex_local",
        "vertex-localized tensor radius bound",
        (sp.lower, sp.upper),
        sp.rho,
        rhs,
        case.kind == KIND_REGULAR,
        eq_tol,
        slack_coef,
    )


def count_bound_from_vertex_counts(
    g: Graph,
    catalog: CliqueCatalog,
    case: EqualityCase | None = None,
    eq_tol: float = DEFAULT_EQ_TOL,
    slack_coef: float = DEFAULT_SLACK_COEF,
) -> BoundReport:
    """|C_t| vs n ((1/t) sum of count-weighted vertex weights)^((t-1)/t).

    Equality additionally needs every vertex clique-covered: the right side
    scales with n, so leftover vertices always leave slack.
    """
    t, n = catalog.t, catalog.n
    w = _vertex_weights(catalog)
    s = float(catalog.counts @ w) / t
    rhs = n * s ** ((t - 1.0) / t)
    lhs = float(catalog.count_total)
    if case is None:
        case = equality_case_predicate(g, t, catalog)
    structural = case.kind == KIND_REGULAR and case.spanning
    return _report(
        "count_vertex_weighted",
        "count-weighted clique-count bound",
        (lhs, lhs),
        lhs,
        rhs,
        structural,
        eq_tol,
        slack_coef,
    )


def count_bound_from_vertex_orders(
    g: Graph,
    catalog: CliqueCatalog,
    case: EqualityCase | None = None,
    eq_tol: float = DEFAULT_EQ_TOL,
    slack_coef: float = DEFAULT_SLACK_COEF,
) -> BoundReport:
    """|C_t| vs n (sum of vertex weights)^(t-1); equality as in the
    count-weighted form (regular multipartite core covering every vertex)."""
    t, n = catalog.t, catalog.n
    rhs = n * float(_vertex_weights(catalog).sum()) ** (t - 1.0)
    lhs = float(catalog.count_total)
    if case is None:
        case = equality_case_predicate(g, t, catalog)
    structural = case.kind == KIND_REGULAR and case.spanning
    return _report(
        "count_vertex_orders",
        "order-weighted clique-count bound",
        (lhs, lhs),
        lhs,
        rhs,
        structural,
        eq_tol,
        slack_coef,
    )


def order_uniformity_comparison(
    g: Graph,
    catalog: CliqueCatalog,
    eq_tol: float = DEFAULT_EQ_TOL,
    slack_coef: float = DEFAULT_SLACK_COEF,
) -> BoundReport:
    """Order-weighted clique-count bound vs its order-free relaxation
    n^(t-1) * sum of C(a,t)/a^t over vertices.

    Needs t >= 3 (the intermediate Hoelder exponent degenerates at t = 2, so a
    not-applicable report comes back).  Equality holds exactly when the weight
    profile is constant over all vertices, i.e. every vertex lies in a largest
    clique of the same order; one clique-free vertex next to a clique-covered
    one already forces strict inequality.
    """
    t, n = catalog.t, catalog.n
    name, anchor = "count_order_uniform", "order-uniformity comparison"
    if t < 3:
        return BoundReport(
            name=name,
            anchor=anchor,
            lhs=0.0,
            rhs=0.0,
            holds=True,
            gap=0.0,
            equality_numeric=False,
            equality_structural=None,
            applicable=False,
        )
    w = _vertex_weights(catalog)
    lhs = n * float(w.sum()) ** (t - 1.0)
    rhs = n ** (t - 1.0) * float(
        sum(math.comb(int(a), t) / int(a) ** t if a >= t else 0.0 for a in catalog.vertex_orders)
    )
    profile = {order_weight(int(a), t) for a in catalog.vertex_orders}
    structural = len(profile) <= 1
    return _report(name, anchor, (lhs, lhs), lhs, rhs, structural, eq_tol, slack_coef)


# -- weighted-sum lemmas ----------------------------------------------------


def _unit_sum_support_structural(
    g: Graph, omega: int, x: np.ndarray, sum_tol: float = 1e-9
) -> bool:
    """Support induces a complete multipartite graph with part count omega and
    per-part mass 1/omega."""
    supp = [int(v) for v in np.flatnonzero(x > 0)]
    if not supp:
        return False
    sub, keep = induced_subgraph(g, supp)
    part = complete_multipartite_partition(sub)
    if part is None or part.isolated or len(part.parts) != omega:
        return False
    target = 1.0 / omega
    for p in part.parts:
        mass = float(sum(x[keep[v]] for v in p))
        if abs(mass - target) > sum_tol:
            return False
    return True


def _check_unit_sum(x, n: int) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (n,):
        raise ValueError(f"expected vector of length {n}")
    if np.any(x < 0) or not np.all(np.isfinite(x)):
        raise ValueError("vector must be nonnegative and finite")
    if abs(float(x.sum()) - 1.0) > 1e-9:
        raise ValueError(f"vector must sum to 1, got {float(x.sum())}")
    return x


def weighted_clique_sum_check(
    g: Graph,
    catalog: CliqueCatalog,
    x,
    eq_tol: float = DEFAULT_EQ_TOL,
    slack_coef: float = DEFAULT_SLACK_COEF,
) -> BoundReport:
    """For unit-sum nonnegative x: sum over t-cliques of
    (a^t / C(a,t)) * prod(x over clique) <= 1, a = clique extension order."""
    x = _check_unit_sum(x, catalog.n)
    t = catalog.t
    lhs = 0.0
    for c, a in zip(catalog.cliques, catalog.clique_orders):
        prod = 1.0
        for v in c:
            prod *= x[v]
        if prod:
            lhs += inverse_order_weight(int(a), t) * prod
    structural = _unit_sum_support_structural(g, catalog.omega, x)
    return _report(
        "weighted_clique_sum",
        "clique-order weighted unit sum",
        (lhs, lhs),
        lhs,
        1.0,
        structural,
        eq_tol,
        slack_coef,
    )


def weighted_vertex_sum_check(
    g: Graph,
    catalog: CliqueCatalog,
    x,
    eq_tol: float = DEFAULT_EQ_TOL,
    slack_coef: float = DEFAULT_SLACK_COEF,
) -> BoundReport:
    """Like the clique-order weighted sum but averaging the members' own
    extension-order weights over each clique."""
    x = _check_unit_sum(x, catalog.n)
    t = catalog.t
    vw = np.array(
        [
            inverse_order_weight(int(a), t) if a >= t else 0.0
            for a in catalog.vertex_orders
        ],
        dtype=np.float64,
    )
    lhs = 0.0
    for c in catalog.cliques:
        prod = 1.0
        wsum = 0.0
        for v in c:
            prod *= x[v]
            wsum += vw[v]
        if prod:
            lhs += wsum / t * prod
    structural = _unit_sum_support_structural(g, catalog.omega, x)
    return _report(
        "weighted_vertex_sum",
        "vertex-order weighted unit sum",
        (lhs, lhs),
        lhs,
        1.0,
        structural,
        eq_tol,
        slack_coef,
    )


def maclaurin_product_check(
    g: Graph,
    s: int,
    q: int,
    x,
    catalog_q: CliqueCatalog | None = None,
    eq_tol: float = DEFAULT_EQ_TOL,
    slack_coef: float = DEFAULT_SLACK_COEF,
) -> BoundReport:
    """Power-mean comparison between clique levels s <= q for nonnegative x:

        sum over q-cliques of C(a,s)^(q/s) C(a,q)^-1 prod(x)  <=  (sum over
        s-cliques of prod(x)) ^ (q/s)

    The s = 1 equality case (support induces complete multipartite with at
    least q parts and equal part masses) is reported; for s >= 2 only the
    inequality is checked and equality_structural stays None.
    """
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (g.n,):
        raise ValueError(f"expected vector of length {g.n}")
    if np.any(x < 0) or not np.all(np.isfinite(x)):
        raise ValueError("vector must be nonnegative and finite")
    if catalog_q is None:
        catalog_q = build_catalog(g, q) if q >= 2 else None
    omega = catalog_q.omega if catalog_q is not None else None
    if omega is None:
        from .cliques import clique_number

        omega = clique_number(g)
    if not 1 <= s <= q <= omega:
        raise ValueError(f"needs 1 <= s <= q <= clique number, got s={s} q={q} omega={omega}")
    if q == 1:
        lhs = float(x.sum())
        rhs = float(x.sum())
    else:
        assert catalog_q is not None
        lhs = 0.0
        for c, a in zip(catalog_q.cliques, catalog_q.clique_orders):
            prod = 1.0
            for v in c:
                prod *= x[v]
            if prod:
                a = int(a)
                lhs += math.comb(a, s) ** (q / s) / math.comb(a, q) * prod
        h_s = 0.0
        for c in cliques_of_order(g, s):
            prod = 1.0
            for v in c:
                prod *= x[v]
            h_s += prod
        rhs = h_s ** (q / s)
    structural: bool | None = None
    if s == 1 and q >= 2:
        supp = [int(v) for v in np.flatnonzero(x > 0)]
        structural = False
        if supp:
            sub, keep = induced_subgraph(g, supp)
            part = complete_multipartite_partition(sub)
            if part is not None and not part.isolated and len(part.parts) >= q:
                masses = [float(sum(x[keep[v]] for v in p)) for p in part.parts]
                structural = max(masses) - min(masses) <= 1e-9
    return _report(
        f"maclaurin_s{s}_q{q}",
        "clique-level power-mean comparison",
        (lhs, lhs),
        lhs,
        rhs,
        structural,
        eq_tol,
        slack_coef,
    )


# -- closed form ------------------------------------------------------------


def multipartite_radius_formula(sizes) -> float:
    """Radius of the order-t tensor of the complete multipartite graph with the
    given part sizes, t = number of parts: (prod sizes)^((t-1)/t)."""
    sizes = [int(s) for s in sizes]
    if len(sizes) < 2 or any(s < 1 for s in sizes):
        raise ValueError("need at least two parts with positive sizes")
    t = len(sizes)
    log_prod = sum(math.log(s) for s in sizes)
    return math.exp(log_prod * (t - 1.0) / t)


# -- orchestration ----------------------------------------------------------

STRUCTURAL_RULES = {
    "nikiforov": "classical",
    "liu_ning": "classical",
    "turan_edges": "spanning-regular",
    "turan_local_edges": "spanning-regular",
    "zykov_spectral": "any-kind",
    "radius_clique_local": "any-kind",
    "radius_vertex_counts": "any-kind",
    "weight_count_balance": "regular",
    "radius_vertex_local": "regular",
    "count_vertex_weighted": "regular-spanning",
    "count_vertex_orders": "regular-spanning",
    "count_vs_radius": "uniform-counts",
    "count_order_uniform": "uniform-orders",
}


@dataclass
class BoundSuite:
    """Everything evaluated for one (graph, t) pair."""

    g: Graph
    t: int
    catalog: CliqueCatalog
    case: EqualityCase
    reports: list[BoundReport] = field(default_factory=list)

    def by_name(self, name: str) -> BoundReport:
        for r in self.reports:
            if r.name == name:
                return r
        raise KeyError(name)


def evaluate_bounds(
    g: Graph,
    t: int,
    spectral: bool = True,
    tol: float = 1e-10,
    eq_tol: float = DEFAULT_EQ_TOL,
    slack_coef: float = DEFAULT_SLACK_COEF,
) -> BoundSuite:
    """Evaluate every applicable bound for the graph at clique level t.

    The classical edge-level bounds are always present; the t-level family
    appears when t is at most the clique number.  spectral=False skips every
    bound whose left side needs a tensor radius.
    """
    catalog = build_catalog(g, t)
    catalog2 = catalog if t == 2 else build_catalog(g, 2)
    omega = catalog.omega
    case = equality_case_predicate(g, t, catalog)
    sp2 = spectral_radius(g, 2, tol=tol, catalog=catalog2) if spectral else None
    spt: SpectralResult | None = None
    if spectral:
        spt = sp2 if t == 2 else spectral_radius(g, t, tol=tol, catalog=catalog)
    reports: list[BoundReport] = []
    kw = dict(eq_tol=eq_tol, slack_coef=slack_coef)
    reports.append(turan_edge_bound(g, omega, **kw))
    reports.append(localized_turan_bound(g, catalog2.clique_orders, **kw))
    if spectral:
        reports.append(nikiforov_bound(g, omega, sp2, **kw))
        reports.append(liu_ning_bound(g, omega, catalog2.clique_orders, sp2, **kw))
    if 2 <= t <= omega:
        if spectral:
            assert spt is not None
            reports.append(zykov_spectral_bound(g, catalog, spt, **kw))
            reports.append(count_vs_radius_bound(catalog, spt, **kw))
            reports.append(radius_bound_from_clique_orders(g, catalog, spt, case, **kw))
            reports.append(radius_bound_from_vertex_counts(g, catalog, spt, case, **kw))
            reports.append(radius_bound_from_vertex_orders(g, catalog, spt, case, **kw))
        reports.append(weight_count_balance_check(g, catalog, case, **kw))
        reports.append(count_bound_from_vertex_counts(g, catalog, case, **kw))
        reports.append(count_bound_from_vertex_orders(g, catalog, case, **kw))
        reports.append(order_uniformity_comparison(g, catalog, **kw))
    return BoundSuite(g=g, t=t, catalog=catalog, case=case, reports=reports)


def suite_json_dict(suite: BoundSuite, graph_id: str) -> dict:
    return {
        "graph_id": graph_id,
        "n": suite.g.n,
        "m": suite.g.edge_count,
        "omega": suite.catalog.omega,
        "t": suite.t,
        "equality_case": suite.case.kind,
        "bounds": [r.to_json_dict() for r in suite.reports],
    }
