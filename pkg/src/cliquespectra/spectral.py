"""Spectral radius of the order-t clique tensor, with certified enclosures.

The tensor of a graph has a symmetric entry block for every t-clique (value
1/(t-1)! on all index permutations of the clique) and is never materialized:
both contractions reduce to sums of leave-one-out products over the clique
list.  For t = 2 this is exactly the adjacency matrix.

The radius is computed per clique component by a shifted normalized power
iteration.  At every iterate the Collatz-Wielandt ratios give two-sided bounds
on the component radius; the running intersection of those intervals is the
certificate the rest of the package consumes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cliques import CliqueCatalog, build_catalog, clique_components
from .graphs import Graph

# covers floating-point noise in the ratio computations; keeps the reported
# interval a true enclosure even at exact-arithmetic equality cases
_FP_GUARD = float(64.0 * np.finfo(np.float64).eps)


@dataclass(frozen=True, eq=False)
class CliqueTensor:
    """Implicit symmetric order-t tensor over the t-cliques of a graph."""

    n: int
    t: int
    cliques: np.ndarray  # shape (m, t), int64 vertex indices

    @staticmethod
    def from_catalog(catalog: CliqueCatalog) -> "CliqueTensor":
        m = len(catalog.cliques)
        arr = np.asarray(catalog.cliques, dtype=np.int64).reshape(m, catalog.t)
        return CliqueTensor(n=catalog.n, t=catalog.t, cliques=arr)

    @staticmethod
    def from_graph(g: Graph, t: int) -> "CliqueTensor":
        return CliqueTensor.from_catalog(build_catalog(g, t))


def _check_vector(tensor: CliqueTensor, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (tensor.n,):
        raise ValueError(f"expected vector of length {tensor.n}, got shape {x.shape}")
    if not np.all(np.isfinite(x)):
        raise ValueError("vector entries must be finite")
    if np.any(x < 0):
        raise ValueError("vector entries must be nonnegative")
    return x


def _leave_one_out(members: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Per clique and position, the product of the other members' entries.

    Prefix/suffix products rather than division, so zeros are safe.
    """
    vals = x[members]  # (m, t)
    m, t = vals.shape
    prefix = np.ones((m, t), dtype=np.float64)
    suffix = np.ones((m, t), dtype=np.float64)
    for j in range(1, t):
        prefix[:, j] = prefix[:, j - 1] * vals[:, j - 1]
        suffix[:, t - 1 - j] = suffix[:, t - j] * vals[:, t - j]
    return prefix * suffix


def _apply_raw(tensor: CliqueTensor, x: np.ndarray) -> np.ndarray:
    out = np.zeros(tensor.n, dtype=np.float64)
    if len(tensor.cliques) == 0:
        return out
    loo = _leave_one_out(tensor.cliques, x)
    np.add.at(out, tensor.cliques.ravel(), loo.ravel())
    return out


def apply(tensor: CliqueTensor, x) -> np.ndarray:
    """Contract against x in all slots but one: entry i sums, over the cliques
    through i, the product of x over the other clique members."""
    return _apply_raw(tensor, _check_vector(tensor, x))


def product_sum(tensor: CliqueTensor, x) -> float:
    """Sum over t-cliques of the product of x over the clique (homogeneous of degree t)."""
    x = _check_vector(tensor, x)
    if len(tensor.cliques) == 0:
        return 0.0
    return float(np.prod(x[tensor.cliques], axis=1).sum())


def rayleigh_value(tensor: CliqueTensor, x) -> float:
    """Full contraction t * sum of clique products; a lower bound on the radius
    for any nonnegative x with unit t-norm."""
    x = _check_vector(tensor, x)
    norm = float((x**tensor.t).sum())
    if abs(norm - 1.0) > 1e-9:
        raise ValueError(f"vector must have unit {tensor.t}-norm, got sum(x^t) = {norm}")
    return tensor.t * product_sum(tensor, x)


@dataclass(frozen=True, eq=False)
class SpectralResult:
    """Radius estimate plus the certified interval that contains the true value."""

    t: int
    rho: float
    lower: float
    upper: float
    vector: np.ndarray
    iterations: int
    converged: bool
    component: tuple[int, ...]

    def to_json_dict(self) -> dict:
        return {
            "t": self.t,
            "rho": self.rho,
            "lower": self.lower,
            "upper": self.upper,
            "iterations": self.iterations,
            "converged": self.converged,
            "component": list(self.component),
            "vector": [float(v) for v in self.vector],
        }


def power_iteration(
    tensor: CliqueTensor,
    component,
    tol: float = 1e-10,
    max_iter: int = 100000,
) -> SpectralResult:
    """Shifted normalized power iteration restricted to one clique component.

    The shift (adding x^[t-1] before re-normalizing) keeps iterates strictly
    positive on the component, which is what makes the Collatz-Wielandt ratios
    two-sided bounds at every step.  Stops when the running enclosure is
    narrower than tol; a max_iter exit reports converged=False with the last
    honest interval rather than a fabricated point value.
    """
    comp = sorted(component)
    if not comp:
        raise ValueError("component must be nonempty")
    comp_set = set(comp)
    local = {v: i for i, v in enumerate(comp)}
    rows = [c for c in tensor.cliques.tolist() if c[0] in comp_set]
    if not rows:
        raise ValueError("component contains no clique")
    for c in rows:
        if not all(v in comp_set for v in c):
            raise ValueError("component is not closed under its cliques")
    t = tensor.t
    members = np.array([[local[v] for v in c] for c in rows], dtype=np.int64)
    k = len(comp)
    sub = CliqueTensor(n=k, t=t, cliques=members)

    x = np.full(k, k ** (-1.0 / t))
    lower, upper = 0.0, math.inf
    iterations = 0
    converged = False
    inv = 1.0 / (t - 1)
    for iterations in range(1, max_iter + 1):
        ax = _apply_raw(sub, x)
        ratios = ax / x ** (t - 1)
        guard = _FP_GUARD * max(1.0, float(np.max(ratios)))
        lower = max(lower, float(np.min(ratios)) - guard)
        upper = min(upper, float(np.max(ratios)) + guard)
        if upper - lower <= tol:
            converged = True
            break
        y = ax + x ** (t - 1)
        x = y**inv
        x /= (x**t).sum() ** (1.0 / t)

    rho = t * product_sum(sub, x)
    rho = min(max(rho, lower), upper)
    full = np.zeros(tensor.n, dtype=np.float64)
    full[np.array(comp, dtype=np.int64)] = x
    return SpectralResult(
        t=t,
        rho=rho,
        lower=lower,
        upper=upper,
        vector=full,
        iterations=iterations,
        converged=converged,
        component=tuple(comp),
    )


def spectral_radius(
    g: Graph,
    t: int,
    tol: float = 1e-10,
    max_iter: int = 100000,
    catalog: CliqueCatalog | None = None,
) -> SpectralResult:
    """Radius of the order-t clique tensor of g.

    Decomposes into clique components (the tensor is reducible across them),
    iterates each one, and returns the maximum with honest interval merging:
    the enclosure is [max of lowers, max of uppers] across components.  A graph
    with no t-clique has radius exactly 0.
    """
    if t < 2:
        raise ValueError(f"tensor order must be >= 2, got {t}")
    if catalog is None:
        catalog = build_catalog(g, t)
    elif catalog.t != t or catalog.n != g.n:
        raise ValueError("catalog does not match graph/order")
    tensor = CliqueTensor.from_catalog(catalog)
    comps, _free = clique_components(catalog)
    if not comps:
        return SpectralResult(
            t=t,
            rho=0.0,
            lower=0.0,
            upper=0.0,
            vector=np.zeros(g.n),
            iterations=0,
            converged=True,
            component=(),
        )
    results = [power_iteration(tensor, c, tol=tol, max_iter=max_iter) for c in comps]
    best = max(results, key=lambda r: r.rho)
    lower = max(r.lower for r in results)
    upper = max(r.upper for r in results)
    return SpectralResult(
        t=t,
        rho=min(max(best.rho, lower), upper),
        lower=lower,
        upper=upper,
        vector=best.vector,
        iterations=sum(r.iterations for r in results),
        converged=all(r.converged for r in results),
        component=best.component,
    )


def multistart_spectral_radius(
    g: Graph,
    t: int,
    restarts: int = 8,
    seed: int = 0,
    max_iter: int = 25000,
    catalog: CliqueCatalog | None = None,
) -> float:
    """Independent check value: best full contraction found by normalized map
    iteration from seeded random positive starts on the whole graph.

    Every iterate is feasible for the variational characterization, so the
    returned value never exceeds the true radius; with enough iterations it
    converges to it from below.
    """
    if t < 2:
        raise ValueError(f"tensor order must be >= 2, got {t}")
    if catalog is None:
        catalog = build_catalog(g, t)
    tensor = CliqueTensor.from_catalog(catalog)
    if len(catalog.cliques) == 0 or g.n == 0:
        return 0.0
    rng = np.random.default_rng(seed)
    inv = 1.0 / (t - 1)
    best = 0.0
    for _ in range(restarts):
        x = rng.random(g.n) + 0.05
        x /= (x**t).sum() ** (1.0 / t)
        prev = -1.0
        stable = 0
        for _ in range(max_iter):
            val = t * product_sum(tensor, x)
            if val > best:
                best = val
            if abs(val - prev) <= 1e-14 * max(1.0, abs(val)):
                stable += 1
                if stable >= 3:
                    break
            else:
                stable = 0
            prev = val
            y = _apply_raw(tensor, x) + x ** (t - 1)
            x = y**inv
            x /= (x**t).sum() ** (1.0 / t)
    return best
