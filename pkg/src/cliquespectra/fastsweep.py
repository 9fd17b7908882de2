"""Compiled exhaustive sweeps over all labeled graphs on up to 7 vertices.

Two kernels walk a contiguous range of edge-set masks for a fixed n, so a
sweep chunks and merges deterministically:

* sweep_combinatorial: counting/weight inequalities only, feasible to n = 7.
* sweep_spectral: adds certified tensor radii per clique component, the
  equality census (numeric vs structural), and the weighted-sum lemma battery
  with seeded random vectors; used to n = 6.

Weight tables are passed in precomputed from the bounds module so the kernels
never restate a formula.  Random unit values come from a splitmix64-style
per-index hash; rand_unit below is the pure-Python twin used by the slow
verification path, and the two produce bit-identical doubles.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit

# bound slots; t-independent bounds live in the t=2 column
BOUND_NAMES = (
    "turan_edges",
    "turan_local_edges",
    "nikiforov",
    "liu_ning",
    "zykov_spectral",
    "count_vs_radius",
    "radius_clique_local",
    "radius_vertex_counts",
    "weight_count_balance",
    "radius_vertex_local",
    "count_vertex_weighted",
    "count_vertex_orders",
    "count_order_uniform",
    "weighted_clique_sum",
    "weighted_vertex_sum",
    "maclaurin_s2_q3",
)
N_BOUNDS = len(BOUND_NAMES)
N_SLOTS = 2 * N_BOUNDS  # x (t=2, t=3)
T_INDEPENDENT = frozenset({"turan_edges", "turan_local_edges", "nikiforov", "liu_ning"})
CENSUSED = frozenset(BOUND_NAMES[:15])  # all but the power-mean comparison

MAX_VIOL_EXAMPLES = 8
MAX_MISMATCH_EXAMPLES = 20

_EPS64 = 64.0 * 2.220446049250313e-16


def rand_unit(seed: int, n: int, mask: int, t: int, trial: int, i: int) -> float:
    """Deterministic uniform in [0,1) from the (seed, n, mask, t, trial, i) key."""
    M = (1 << 64) - 1
    h = (
        ((seed * 0x9E3779B97F4A7C15) & M)
        ^ ((n * 0xC2B2AE3D27D4EB4F) & M)
        ^ ((mask * 0x165667B19E3779F9) & M)
        ^ ((t * 0x27D4EB2F165667C5) & M)
        ^ ((trial * 0x85EBCA77C2B2AE63) & M)
        ^ ((i * 0xFF51AFD7ED558CCD) & M)
    )
    z = h
    z ^= z >> 30
    z = (z * 0xBF58476D1CE4E5B9) & M
    z ^= z >> 27
    z = (z * 0x94D049BB133111EB) & M
    z ^= z >> 31
    return (z >> 11) * 2.0**-53


@njit(cache=True)
def _mix64(z):
    z = z ^ (z >> np.uint64(30))
    z = z * np.uint64(0xBF58476D1CE4E5B9)
    z = z ^ (z >> np.uint64(27))
    z = z * np.uint64(0x94D049BB133111EB)
    z = z ^ (z >> np.uint64(31))
    return z


@njit(cache=True)
def _randu(seed, n, mask, t, trial, i):
    h = (
        (np.uint64(seed) * np.uint64(0x9E3779B97F4A7C15))
        ^ (np.uint64(n) * np.uint64(0xC2B2AE3D27D4EB4F))
        ^ (np.uint64(mask) * np.uint64(0x165667B19E3779F9))
        ^ (np.uint64(t) * np.uint64(0x27D4EB2F165667C5))
        ^ (np.uint64(trial) * np.uint64(0x85EBCA77C2B2AE63))
        ^ (np.uint64(i) * np.uint64(0xFF51AFD7ED558CCD))
    )
    return float(_mix64(h) >> np.uint64(11)) * 1.1102230246251565e-16


@njit(cache=True)
def _ctz(x):
    c = 0
    while ((x >> c) & 1) == 0:
        c += 1
    return c


@njit(cache=True)
def _pc(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _omega_tab(adj, n, tab):
    # tab[s] = clique number of the subgraph induced on subset s
    tab[0] = 0
    for s in range(1, 1 << n):
        v = _ctz(s)
        rest = s & (s - 1)
        a = tab[rest]
        b = 1 + tab[rest & adj[v]]
        tab[s] = a if a > b else b


@njit(cache=True)
def _find(parent, v):
    r = v
    while parent[r] != r:
        r = parent[r]
    while parent[v] != r:
        nxt = parent[v]
        parent[v] = r
        v = nxt
    return r


@njit(cache=True)
def _eqn(lo, hi, other, tol):
    s = abs(other)
    if s < 1.0:
        s = 1.0
    return abs(other - lo) <= tol * s and abs(other - hi) <= tol * s


@njit(cache=True)
def _acc(idx, mask, vlo, vhi, gap, eqn, eqs, censused, slack, rows, mg, viol, vm, eqc, mism, mmm):
    """One evaluated row: violation iff the certified low side exceeds the
    certified high side beyond slack; census tracks eqn vs eqs disagreement."""
    rows[idx] += 1
    if gap < mg[idx]:
        mg[idx] = gap
    s = abs(vhi)
    if s < 1.0:
        s = 1.0
    if vlo > vhi + slack * s:
        if viol[idx] < MAX_VIOL_EXAMPLES:
            vm[idx, viol[idx]] = mask
        viol[idx] += 1
    if censused:
        if eqn:
            eqc[idx] += 1
        if eqn != eqs:
            if mism[idx] < MAX_MISMATCH_EXAMPLES:
                mmm[idx, mism[idx]] = mask
            mism[idx] += 1


@njit(cache=True)
def _detect_partition(core_adj, support, n, pid, psz, pmask):
    """Complete-multipartite test of the graph (core_adj, support).

    Parts are the complement components inside support; validity means every
    support vertex sees exactly the other parts.  Returns (ok, nparts, regular)
    and fills pid/psz/pmask for witness construction.
    """
    for v in range(n):
        pid[v] = -1
    nparts = 0
    unvis = support
    while unvis != 0:
        v = _ctz(unvis)
        comp = 1 << v
        changed = True
        while changed:
            changed = False
            grow = 0
            mm = comp
            while mm != 0:
                u = _ctz(mm)
                mm &= mm - 1
                grow |= support & ~core_adj[u] & ~(1 << u)
            grow &= ~comp
            if grow != 0:
                comp |= grow
                changed = True
        mm = comp
        while mm != 0:
            u = _ctz(mm)
            mm &= mm - 1
            pid[u] = nparts
        psz[nparts] = _pc(comp)
        pmask[nparts] = comp
        nparts += 1
        unvis &= ~comp
    ok = True
    mm = support
    while mm != 0:
        v = _ctz(mm)
        mm &= mm - 1
        if core_adj[v] & support != support & ~pmask[pid[v]]:
            ok = False
            break
    regular = True
    for p in range(1, nparts):
        if psz[p] != psz[0]:
            regular = False
            break
    return ok, nparts, regular


@njit(cache=True)
def _unit_sum_struct(adj, n, omega, x, sub_adj, pid, psz, pmask, xmass):
    """Equality shape of the weighted-sum lemmas: the support of x induces a
    complete multipartite graph with omega parts of mass 1/omega each."""
    supp = 0
    for v in range(n):
        if x[v] > 0.0:
            supp |= 1 << v
    if supp == 0:
        return False
    mm = supp
    while mm != 0:
        v = _ctz(mm)
        mm &= mm - 1
        if adj[v] & supp == 0:
            return False
        sub_adj[v] = adj[v] & supp
    ok, nparts, _ = _detect_partition(sub_adj, supp, n, pid, psz, pmask)
    if not ok or nparts != omega:
        return False
    for p in range(nparts):
        xmass[p] = 0.0
    mm = supp
    while mm != 0:
        v = _ctz(mm)
        mm &= mm - 1
        xmass[pid[v]] += x[v]
    target = 1.0 / nparts
    for p in range(nparts):
        if abs(xmass[p] - target) > 1e-9:
            return False
    return True


@njit(cache=True)
def _nqz2(e_u, e_v, me, eroot, root, comp, n, x, ax, tol, max_iter):
    """Shifted power iteration on one edge component of the adjacency matrix,
    with a running intersected ratio enclosure."""
    k = _pc(comp)
    x0 = k ** (-0.5)
    for v in range(n):
        x[v] = x0 if ((comp >> v) & 1) == 1 else 0.0
    lo = 0.0
    hi = 1.0e308
    conv = False
    ps = 0.0
    it = 0
    while it < max_iter:
        it += 1
        for v in range(n):
            if (comp >> v) & 1:
                ax[v] = 0.0
        ps = 0.0
        for i in range(me):
            if eroot[i] == root:
                u = e_u[i]
                v = e_v[i]
                xu = x[u]
                xv = x[v]
                ax[u] += xv
                ax[v] += xu
                ps += xu * xv
        rmin = 1.0e308
        rmax = 0.0
        for v in range(n):
            if (comp >> v) & 1:
                r = ax[v] / x[v]
                if r < rmin:
                    rmin = r
                if r > rmax:
                    rmax = r
        guard = _EPS64 * (rmax if rmax > 1.0 else 1.0)
        if rmin - guard > lo:
            lo = rmin - guard
        if rmax + guard < hi:
            hi = rmax + guard
        if hi - lo <= tol:
            conv = True
            break
        s = 0.0
        for v in range(n):
            if (comp >> v) & 1:
                y = ax[v] + x[v]
                x[v] = y
                s += y * y
        sc = s**-0.5
        for v in range(n):
            if (comp >> v) & 1:
                x[v] *= sc
    if not conv:
        ps = 0.0
        for i in range(me):
            if eroot[i] == root:
                ps += x[e_u[i]] * x[e_v[i]]
    rho = 2.0 * ps
    if rho < lo:
        rho = lo
    if rho > hi:
        rho = hi
    return rho, lo, hi, conv


@njit(cache=True)
def _nqz3(tr, mt, troot, root, comp, n, x, ax, tol, max_iter):
    """Same scheme at order 3: the triangle tensor of one clique component."""
    k = _pc(comp)
    x0 = k ** (-1.0 / 3.0)
    for v in range(n):
        x[v] = x0 if ((comp >> v) & 1) == 1 else 0.0
    lo = 0.0
    hi = 1.0e308
    conv = False
    ps = 0.0
    it = 0
    while it < max_iter:
        it += 1
        for v in range(n):
            if (comp >> v) & 1:
                ax[v] = 0.0
        ps = 0.0
        for i in range(mt):
            if troot[i] == root:
                u = tr[i, 0]
                v = tr[i, 1]
                w = tr[i, 2]
                xu = x[u]
                xv = x[v]
                xw = x[w]
                ax[u] += xv * xw
                ax[v] += xu * xw
                ax[w] += xu * xv
                ps += xu * xv * xw
        rmin = 1.0e308
        rmax = 0.0
        for v in range(n):
            if (comp >> v) & 1:
                r = ax[v] / (x[v] * x[v])
                if r < rmin:
                    rmin = r
                if r > rmax:
                    rmax = r
        guard = _EPS64 * (rmax if rmax > 1.0 else 1.0)
        if rmin - guard > lo:
            lo = rmin - guard
        if rmax + guard < hi:
            hi = rmax + guard
        if hi - lo <= tol:
            conv = True
            break
        s = 0.0
        for v in range(n):
            if (comp >> v) & 1:
                y = math.sqrt(ax[v] + x[v] * x[v])
                x[v] = y
                s += y * y * y
        sc = s ** (-1.0 / 3.0)
        for v in range(n):
            if (comp >> v) & 1:
                x[v] *= sc
    if not conv:
        ps = 0.0
        for i in range(mt):
            if troot[i] == root:
                ps += x[tr[i, 0]] * x[tr[i, 1]] * x[tr[i, 2]]
    rho = 3.0 * ps
    if rho < lo:
        rho = lo
    if rho > hi:
        rho = hi
    return rho, lo, hi, conv


@njit(cache=True)
def _battery_rows(
    tidx, t, mask, n, adj, omega, e_u, e_v, ae, me, tr, at3, mt, iwt, av, x,
    eq_tol, slack, sub_adj, pid, psz, pmask, xmass,
    rows, mg, viol, vm, eqc, mism, mmm,
):
    """Both weighted-sum lemma rows for one unit-sum vector."""
    L26 = 0.0
    L27 = 0.0
    if t == 2:
        for i in range(me):
            u = e_u[i]
            v = e_v[i]
            pr = x[u] * x[v]
            if pr != 0.0:
                L26 += iwt[ae[i]] * pr
                L27 += 0.5 * (iwt[av[u]] + iwt[av[v]]) * pr
    else:
        for i in range(mt):
            u = tr[i, 0]
            v = tr[i, 1]
            w = tr[i, 2]
            pr = x[u] * x[v] * x[w]
            if pr != 0.0:
                L26 += iwt[at3[i]] * pr
                L27 += (iwt[av[u]] + iwt[av[v]] + iwt[av[w]]) / 3.0 * pr
    st = _unit_sum_struct(adj, n, omega, x, sub_adj, pid, psz, pmask, xmass)
    _acc(13 * 2 + tidx, mask, L26, 1.0, 1.0 - L26, _eqn(L26, L26, 1.0, eq_tol), st,
         True, slack, rows, mg, viol, vm, eqc, mism, mmm)
    _acc(14 * 2 + tidx, mask, L27, 1.0, 1.0 - L27, _eqn(L27, L27, 1.0, eq_tol), st,
         True, slack, rows, mg, viol, vm, eqc, mism, mmm)


@njit(cache=True)
def sweep_spectral(
    n, lo_mask, hi_mask, eu, ev,
    w2, w3, iw2, iw3, u3, mac2,
    t2_on, t3_on, tol, eq_tol, slack, seed, max_iter,
):
    npairs = n * (n - 1) // 2
    full = (1 << n) - 1
    rows = np.zeros(N_SLOTS, np.int64)
    eqc = np.zeros(N_SLOTS, np.int64)
    mism = np.zeros(N_SLOTS, np.int64)
    mmm = np.full((N_SLOTS, MAX_MISMATCH_EXAMPLES), -1, np.int64)
    viol = np.zeros(N_SLOTS, np.int64)
    vm = np.full((N_SLOTS, MAX_VIOL_EXAMPLES), -1, np.int64)
    mg = np.full(N_SLOTS, np.inf, np.float64)
    graphs = 0
    max_width = 0.0
    nonconv = 0
    t2dev = 0.0
    witdev = 0.0

    adj = np.zeros(n, np.int64)
    tab = np.zeros(1 << n, np.int8)
    sz_e = npairs if npairs > 0 else 1
    e_u = np.zeros(sz_e, np.int64)
    e_v = np.zeros(sz_e, np.int64)
    ae = np.zeros(sz_e, np.int64)
    eroot = np.zeros(sz_e, np.int64)
    sz_t = n * (n - 1) * (n - 2) // 6 if n >= 3 else 1
    tr = np.zeros((sz_t, 3), np.int64)
    at3 = np.zeros(sz_t, np.int64)
    troot = np.zeros(sz_t, np.int64)
    c3 = np.zeros(n, np.int64)
    av = np.zeros(n, np.int64)
    core3 = np.zeros(n, np.int64)
    parent = np.zeros(n, np.int64)
    x = np.zeros(n, np.float64)
    axv = np.zeros(n, np.float64)
    xr = np.zeros(n, np.float64)
    xw = np.zeros(n, np.float64)
    pid = np.zeros(n, np.int64)
    psz = np.zeros(n, np.int64)
    pmask = np.zeros(n, np.int64)
    sub_adj = np.zeros(n, np.int64)
    xmass = np.zeros(n, np.float64)

    for mask in range(lo_mask, hi_mask):
        graphs += 1
        for v in range(n):
            adj[v] = 0
        m = 0
        for e in range(npairs):
            if (mask >> e) & 1:
                u = eu[e]
                v = ev[e]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                m += 1
        _omega_tab(adj, n, tab)
        omega = int(tab[full])
        for v in range(n):
            av[v] = 1 + int(tab[adj[v]])

        partok2 = False
        reg2 = False
        span2 = False
        np2 = 0
        support2 = 0
        me = 0
        S_tl = 0.0
        S_ln = 0.0
        S_w2 = 0.0
        if m > 0:
            for e in range(npairs):
                if (mask >> e) & 1:
                    u = eu[e]
                    v = ev[e]
                    a = 2 + int(tab[adj[u] & adj[v]])
                    e_u[me] = u
                    e_v[me] = v
                    ae[me] = a
                    S_tl += a / (a - 1.0)
                    S_ln += (a - 1.0) / a
                    S_w2 += w2[a]
                    me += 1
            for v in range(n):
                if adj[v] != 0:
                    support2 |= 1 << v
            ok, np2, rg = _detect_partition(adj, support2, n, pid, psz, pmask)
            partok2 = ok and np2 == omega
            reg2 = rg
            span2 = support2 == full

        # Turan rows (always present, once per graph)
        r = omega if omega >= 1 else 1
        rhs = (1.0 - 1.0 / r) * n * n / 2.0
        fm = float(m)
        eqs = (m == 0) or (partok2 and span2 and reg2)
        _acc(0, mask, fm, rhs, rhs - fm, _eqn(fm, fm, rhs, eq_tol), eqs, True,
             slack, rows, mg, viol, vm, eqc, mism, mmm)
        rhs = n * n / 2.0
        eqs = partok2 and span2 and reg2 if m > 0 else False
        _acc(2, mask, S_tl, rhs, rhs - S_tl, _eqn(S_tl, S_tl, rhs, eq_tol), eqs, True,
             slack, rows, mg, viol, vm, eqc, mism, mmm)

        # adjacency spectral radius + classical spectral bounds
        glo2 = 0.0
        ghi2 = 0.0
        grho2 = 0.0
        if m > 0:
            for v in range(n):
                parent[v] = v
            for i in range(me):
                ru = _find(parent, e_u[i])
                rv = _find(parent, e_v[i])
                if ru != rv:
                    parent[ru] = rv
            for i in range(me):
                eroot[i] = _find(parent, e_u[i])
            done = 0
            for v in range(n):
                if adj[v] == 0:
                    continue
                rt = _find(parent, v)
                if (done >> rt) & 1:
                    continue
                done |= 1 << rt
                comp = 0
                for u in range(n):
                    if adj[u] != 0 and _find(parent, u) == rt:
                        comp |= 1 << u
                rho_c, lo_c, hi_c, cv = _nqz2(e_u, e_v, me, eroot, rt, comp, n, x, axv, tol, max_iter)
                if rho_c > grho2:
                    grho2 = rho_c
                if lo_c > glo2:
                    glo2 = lo_c
                if hi_c > ghi2:
                    ghi2 = hi_c
                wd = hi_c - lo_c
                if wd > max_width:
                    max_width = wd
                if not cv:
                    nonconv += 1
            if grho2 < glo2:
                grho2 = glo2
            if grho2 > ghi2:
                grho2 = ghi2
            cls = partok2 and (omega == 2 or reg2)
            rhs = math.sqrt(2.0 * m * (1.0 - 1.0 / omega))
            _acc(4, mask, glo2, rhs, rhs - grho2, _eqn(glo2, ghi2, rhs, eq_tol), cls, True,
                 slack, rows, mg, viol, vm, eqc, mism, mmm)
            rhs_ln = math.sqrt(2.0 * S_ln)
            _acc(6, mask, glo2, rhs_ln, rhs_ln - grho2, _eqn(glo2, ghi2, rhs_ln, eq_tol), cls, True,
                 slack, rows, mg, viol, vm, eqc, mism, mmm)
            # order-2 reduction of the clique-localized radius bound must be Liu-Ning
            dv = abs(2.0 * math.sqrt(S_w2) - rhs_ln)
            if dv > t2dev:
                t2dev = dv
        else:
            _acc(4, mask, 0.0, 0.0, 0.0, True, True, True,
                 slack, rows, mg, viol, vm, eqc, mism, mmm)
            _acc(6, mask, 0.0, 0.0, 0.0, True, True, True,
                 slack, rows, mg, viol, vm, eqc, mism, mmm)

        # ---- t = 2 family ----
        if t2_on != 0 and m > 0:
            cmin = 1 << 30
            cmax = 0
            Swv = 0.0
            Scw = 0.0
            for v in range(n):
                d = _pc(adj[v])
                if d < cmin:
                    cmin = d
                if d > cmax:
                    cmax = d
                Swv += w2[av[v]]
                Scw += d * w2[av[v]]
            count2 = float(m)
            kind_any = partok2 and (reg2 or omega == 2)
            kind_reg = partok2 and reg2
            cb2 = omega * (omega - 1) / 2.0
            rhs = 2.0 / omega * math.sqrt(cb2) * math.sqrt(count2)
            _acc(8, mask, glo2, rhs, rhs - grho2, _eqn(glo2, ghi2, rhs, eq_tol), kind_any, True,
                 slack, rows, mg, viol, vm, eqc, mism, mmm)
            rlo = n * glo2 / 2.0
            rhi = n * ghi2 / 2.0
            rpt = n * grho2 / 2.0
            _acc(10, mask, count2, rhi, rpt - count2, _eqn(rlo, rhi, count2, eq_tol), cmin == cmax,
                 True, slack, rows, mg, viol, vm, eqc, mism, mmm)
            llo = (glo2 / 2.0) ** 2
            lhi = (ghi2 / 2.0) ** 2
            lpt = (grho2 / 2.0) ** 2
            _acc(12, mask, llo, S_w2, S_w2 - lpt, _eqn(llo, lhi, S_w2, eq_tol), kind_any, True,
                 slack, rows, mg, viol, vm, eqc, mism, mmm)
            rhs = 2.0 * Scw
            _acc(14, mask, glo2 * glo2, rhs, rhs - grho2 * grho2,
                 _eqn(glo2 * glo2, ghi2 * ghi2, rhs, eq_tol), kind_any, True,
                 slack, rows, mg, viol, vm, eqc, mism, mmm)
            L = Scw / 2.0
            R = Swv * Swv
            _acc(16, mask, L, R, R - L, _eqn(L, L, R, eq_tol), kind_reg, True,
                 slack, rows, mg, viol, vm, eqc, mism, mmm)
            rhs = 2.0 * Swv
            _acc(18, mask, glo2, rhs, rhs - grho2, _eqn(glo2, ghi2, rhs, eq_tol), kind_reg, True,
                 slack, rows, mg, viol, vm, eqc, mism, mmm)
            R = n * math.sqrt(Scw / 2.0)
            _acc(20, mask, count2, R, R - count2, _eqn(count2, count2, R, eq_tol),
                 kind_reg and span2, True, slack, rows, mg, viol, vm, eqc, mism, mmm)
            R = n * Swv
            _acc(22, mask, count2, R, R - count2, _eqn(count2, count2, R, eq_tol),
                 kind_reg and span2, True, slack, rows, mg, viol, vm, eqc, mism, mmm)
            # battery: uniform, one-hots, three random simplex points, witness
            hasw = kind_any
            if hasw:
                for v in range(n):
                    xw[v] = 0.0
                s = 0.0
                mm = support2
                while mm != 0:
                    v = _ctz(mm)
                    mm &= mm - 1
                    xw[v] = 1.0 / (np2 * psz[pid[v]])
                    s += xw[v]
                dv = abs(s - 1.0)
                if dv > witdev:
                    witdev = dv
            for v in range(n):
                xr[v] = 1.0 / n
            _battery_rows(0, 2, mask, n, adj, omega, e_u, e_v, ae, me, tr, at3, 0, iw2, av, xr,
                          eq_tol, slack, sub_adj, pid, psz, pmask, xmass,
                          rows, mg, viol, vm, eqc, mism, mmm)
            for j in range(n):
                for v in range(n):
                    xr[v] = 0.0
                xr[j] = 1.0
                _battery_rows(0, 2, mask, n, adj, omega, e_u, e_v, ae, me, tr, at3, 0, iw2, av, xr,
                              eq_tol, slack, sub_adj, pid, psz, pmask, xmass,
                              rows, mg, viol, vm, eqc, mism, mmm)
            for trial in range(3):
                s = 0.0
                for i in range(n):
                    gv = _randu(seed, n, mask, 2, trial, i) + 1.0e-3
                    xr[i] = gv
                    s += gv
                for i in range(n):
                    xr[i] /= s
                _battery_rows(0, 2, mask, n, adj, omega, e_u, e_v, ae, me, tr, at3, 0, iw2, av, xr,
                              eq_tol, slack, sub_adj, pid, psz, pmask, xmass,
                              rows, mg, viol, vm, eqc, mism, mmm)
            if hasw:
                _battery_rows(0, 2, mask, n, adj, omega, e_u, e_v, ae, me, tr, at3, 0, iw2, av, xw,
                              eq_tol, slack, sub_adj, pid, psz, pmask, xmass,
                              rows, mg, viol, vm, eqc, mism, mmm)

        # ---- t = 3 family ----
        if t3_on != 0 and omega >= 3:
            mt = 0
            for v in range(n):
                c3[v] = 0
                core3[v] = 0
            for u in range(n - 2):
                au = adj[u]
                for v in range(u + 1, n - 1):
                    if ((au >> v) & 1) == 0:
                        continue
                    common = au & adj[v]
                    for w in range(v + 1, n):
                        if (common >> w) & 1:
                            tr[mt, 0] = u
                            tr[mt, 1] = v
                            tr[mt, 2] = w
                            at3[mt] = 3 + int(tab[common & adj[w]])
                            c3[u] += 1
                            c3[v] += 1
                            c3[w] += 1
                            core3[u] |= (1 << v) | (1 << w)
                            core3[v] |= (1 << u) | (1 << w)
                            core3[w] |= (1 << u) | (1 << v)
                            mt += 1
            support3 = 0
            for v in range(n):
                if c3[v] > 0:
                    support3 |= 1 << v
            ok3, np3, reg3 = _detect_partition(core3, support3, n, pid, psz, pmask)
            partok3 = ok3 and np3 == omega
            span3 = support3 == full
            kind_any = partok3 and (reg3 or omega == 3)
            kind_reg = partok3 and reg3
            for v in range(n):
                parent[v] = v
            for i in range(mt):
                ra = _find(parent, tr[i, 0])
                rb = _find(parent, tr[i, 1])
                if ra != rb:
                    parent[ra] = rb
                rb = _find(parent, tr[i, 1])
                rc = _find(parent, tr[i, 2])
                if rb != rc:
                    parent[rb] = rc
            for i in range(mt):
                troot[i] = _find(parent, tr[i, 0])
            glo3 = 0.0
            ghi3 = 0.0
            grho3 = 0.0
            done = 0
            for v in range(n):
                if c3[v] == 0:
                    continue
                rt = _find(parent, v)
                if (done >> rt) & 1:
                    continue
                done |= 1 << rt
                comp = 0
                for u in range(n):
                    if c3[u] > 0 and _find(parent, u) == rt:
                        comp |= 1 << u
                rho_c, lo_c, hi_c, cv = _nqz3(tr, mt, troot, rt, comp, n, x, axv, tol, max_iter)
                if rho_c > grho3:
                    grho3 = rho_c
                if lo_c > glo3:
                    glo3 = lo_c
                if hi_c > ghi3:
                    ghi3 = hi_c
                wd = hi_c - lo_c
                if wd > max_width:
                    max_width = wd
                if not cv:
                    nonconv += 1
            if grho3 < glo3:
                grho3 = glo3
            if grho3 > ghi3:
                grho3 = ghi3
            cmin = 1 << 30
            cmax = 0
            Swv = 0.0
            Scw = 0.0
            Su = 0.0
            wmin = 1.0e308
            wmax = -1.0
            for v in range(n):
                c = c3[v]
                if c < cmin:
                    cmin = c
                if c > cmax:
                    cmax = c
                wv = w3[av[v]]
                Swv += wv
                Scw += c * wv
                Su += u3[av[v]]
                if wv < wmin:
                    wmin = wv
                if wv > wmax:
                    wmax = wv
            SwI = 0.0
            for i in range(mt):
                SwI += w3[at3[i]]
            count3 = float(mt)
            cb3 = omega * (omega - 1) * (omega - 2) / 6.0
            rhs = 3.0 / omega * cb3 ** (1.0 / 3.0) * count3 ** (2.0 / 3.0)
            _acc(9, mask, glo3, rhs, rhs - grho3, _eqn(glo3, ghi3, rhs, eq_tol), kind_any, True,
                 slack, rows, mg, viol, vm, eqc, mism, mmm)
            rlo = n * glo3 / 3.0
            rhi = n * ghi3 / 3.0
            rpt = n * grho3 / 3.0
            _acc(11, mask, count3, rhi, rpt - count3, _eqn(rlo, rhi, count3, eq_tol), cmin == cmax,
                 True, slack, rows, mg, viol, vm, eqc, mism, mmm)
            llo = (glo3 / 3.0) ** 3
            lhi = (ghi3 / 3.0) ** 3
            lpt = (grho3 / 3.0) ** 3
            R = SwI * SwI
            _acc(13, mask, llo, R, R - lpt, _eqn(llo, lhi, R, eq_tol), kind_any, True,
                 slack, rows, mg, viol, vm, eqc, mism, mmm)
            R = 3.0 * Scw * Scw
            _acc(15, mask, glo3**3, R, R - grho3**3, _eqn(glo3**3, ghi3**3, R, eq_tol),
                 kind_any, True, slack, rows, mg, viol, vm, eqc, mism, mmm)
            L = Scw / 3.0
            R = Swv**3
            _acc(17, mask, L, R, R - L, _eqn(L, L, R, eq_tol), kind_reg, True,
                 slack, rows, mg, viol, vm, eqc, mism, mmm)
            R = 3.0 * Swv * Swv
            _acc(19, mask, glo3, R, R - grho3, _eqn(glo3, ghi3, R, eq_tol), kind_reg, True,
                 slack, rows, mg, viol, vm, eqc, mism, mmm)
            R = n * (Scw / 3.0) ** (2.0 / 3.0)
            _acc(21, mask, count3, R, R - count3, _eqn(count3, count3, R, eq_tol),
                 kind_reg and span3, True, slack, rows, mg, viol, vm, eqc, mism, mmm)
            R = n * Swv * Swv
            _acc(23, mask, count3, R, R - count3, _eqn(count3, count3, R, eq_tol),
                 kind_reg and span3, True, slack, rows, mg, viol, vm, eqc, mism, mmm)
            L = n * Swv * Swv
            R = float(n) ** 2 * Su
            _acc(25, mask, L, R, R - L, _eqn(L, L, R, eq_tol), wmax == wmin, True,
                 slack, rows, mg, viol, vm, eqc, mism, mmm)
            hasw = kind_any
            if hasw:
                for v in range(n):
                    xw[v] = 0.0
                s = 0.0
                mm = support3
                while mm != 0:
                    v = _ctz(mm)
                    mm &= mm - 1
                    xw[v] = 1.0 / (np3 * psz[pid[v]])
                    s += xw[v]
                dv = abs(s - 1.0)
                if dv > witdev:
                    witdev = dv
            for v in range(n):
                xr[v] = 1.0 / n
            _battery_rows(1, 3, mask, n, adj, omega, e_u, e_v, ae, me, tr, at3, mt, iw3, av, xr,
                          eq_tol, slack, sub_adj, pid, psz, pmask, xmass,
                          rows, mg, viol, vm, eqc, mism, mmm)
            Lm = 0.0
            for i in range(mt):
                Lm += mac2[at3[i]] * xr[tr[i, 0]] * xr[tr[i, 1]] * xr[tr[i, 2]]
            h2 = 0.0
            for i in range(me):
                h2 += xr[e_u[i]] * xr[e_v[i]]
            R = h2**1.5
            _acc(31, mask, Lm, R, R - Lm, False, False, False,
                 slack, rows, mg, viol, vm, eqc, mism, mmm)
            for j in range(n):
                for v in range(n):
                    xr[v] = 0.0
                xr[j] = 1.0
                _battery_rows(1, 3, mask, n, adj, omega, e_u, e_v, ae, me, tr, at3, mt, iw3, av, xr,
                              eq_tol, slack, sub_adj, pid, psz, pmask, xmass,
                              rows, mg, viol, vm, eqc, mism, mmm)
            for trial in range(3):
                s = 0.0
                for i in range(n):
                    gv = _randu(seed, n, mask, 3, trial, i) + 1.0e-3
                    xr[i] = gv
                    s += gv
                for i in range(n):
                    xr[i] /= s
                _battery_rows(1, 3, mask, n, adj, omega, e_u, e_v, ae, me, tr, at3, mt, iw3, av, xr,
                              eq_tol, slack, sub_adj, pid, psz, pmask, xmass,
                              rows, mg, viol, vm, eqc, mism, mmm)
                Lm = 0.0
                for i in range(mt):
                    Lm += mac2[at3[i]] * xr[tr[i, 0]] * xr[tr[i, 1]] * xr[tr[i, 2]]
                h2 = 0.0
                for i in range(me):
                    h2 += xr[e_u[i]] * xr[e_v[i]]
                R = h2**1.5
                _acc(31, mask, Lm, R, R - Lm, False, False, False,
                     slack, rows, mg, viol, vm, eqc, mism, mmm)
            if hasw:
                _battery_rows(1, 3, mask, n, adj, omega, e_u, e_v, ae, me, tr, at3, mt, iw3, av, xw,
                              eq_tol, slack, sub_adj, pid, psz, pmask, xmass,
                              rows, mg, viol, vm, eqc, mism, mmm)

    return graphs, rows, eqc, mism, mmm, viol, vm, mg, max_width, nonconv, t2dev, witdev


@njit(cache=True)
def sweep_combinatorial(n, lo_mask, hi_mask, eu, ev, w2, w3, u3, t2_on, t3_on, eq_tol, slack):
    """Radius-free sweep: Turan rows plus the counting/weight inequalities,
    cheap enough for all 2^21 graphs on 7 vertices."""
    npairs = n * (n - 1) // 2
    full = (1 << n) - 1
    rows = np.zeros(N_SLOTS, np.int64)
    eqc = np.zeros(N_SLOTS, np.int64)
    mism = np.zeros(N_SLOTS, np.int64)
    mmm = np.full((N_SLOTS, MAX_MISMATCH_EXAMPLES), -1, np.int64)
    viol = np.zeros(N_SLOTS, np.int64)
    vm = np.full((N_SLOTS, MAX_VIOL_EXAMPLES), -1, np.int64)
    mg = np.full(N_SLOTS, np.inf, np.float64)
    graphs = 0

    adj = np.zeros(n, np.int64)
    tab = np.zeros(1 << n, np.int8)
    av = np.zeros(n, np.int64)
    c3 = np.zeros(n, np.int64)

    for mask in range(lo_mask, hi_mask):
        graphs += 1
        for v in range(n):
            adj[v] = 0
        m = 0
        for e in range(npairs):
            if (mask >> e) & 1:
                u = eu[e]
                v = ev[e]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                m += 1
        _omega_tab(adj, n, tab)
        omega = int(tab[full])
        for v in range(n):
            av[v] = 1 + int(tab[adj[v]])

        S_tl = 0.0
        if m > 0:
            for e in range(npairs):
                if (mask >> e) & 1:
                    a = 2 + int(tab[adj[eu[e]] & adj[ev[e]]])
                    S_tl += a / (a - 1.0)
        r = omega if omega >= 1 else 1
        rhs = (1.0 - 1.0 / r) * n * n / 2.0
        fm = float(m)
        _acc(0, mask, fm, rhs, rhs - fm, False, False, False,
             slack, rows, mg, viol, vm, eqc, mism, mmm)
        rhs = n * n / 2.0
        _acc(2, mask, S_tl, rhs, rhs - S_tl, False, False, False,
             slack, rows, mg, viol, vm, eqc, mism, mmm)

        if t2_on != 0 and m > 0:
            Swv = 0.0
            Scw = 0.0
            for v in range(n):
                d = _pc(adj[v])
                Swv += w2[av[v]]
                Scw += d * w2[av[v]]
            count2 = float(m)
            L = Scw / 2.0
            R = Swv * Swv
            _acc(16, mask, L, R, R - L, False, False, False,
                 slack, rows, mg, viol, vm, eqc, mism, mmm)
            R = n * math.sqrt(Scw / 2.0)
            _acc(20, mask, count2, R, R - count2, False, False, False,
                 slack, rows, mg, viol, vm, eqc, mism, mmm)
            R = n * Swv
            _acc(22, mask, count2, R, R - count2, False, False, False,
                 slack, rows, mg, viol, vm, eqc, mism, mmm)

        if t3_on != 0 and omega >= 3:
            for v in range(n):
                c3[v] = 0
            mt = 0
            for u in range(n - 2):
                au = adj[u]
                for v in range(u + 1, n - 1):
                    if ((au >> v) & 1) == 0:
                        continue
                    common = au & adj[v]
                    for w in range(v + 1, n):
                        if (common >> w) & 1:
                            c3[u] += 1
                            c3[v] += 1
                            c3[w] += 1
                            mt += 1
            Swv = 0.0
            Scw = 0.0
            Su = 0.0
            for v in range(n):
                wv = w3[av[v]]
                Swv += wv
                Scw += c3[v] * wv
                Su += u3[av[v]]
            count3 = float(mt)
            L = Scw / 3.0
            R = Swv**3
            _acc(17, mask, L, R, R - L, False, False, False,
                 slack, rows, mg, viol, vm, eqc, mism, mmm)
            R = n * (Scw / 3.0) ** (2.0 / 3.0)
            _acc(21, mask, count3, R, R - count3, False, False, False,
                 slack, rows, mg, viol, vm, eqc, mism, mmm)
            R = n * Swv * Swv
            _acc(23, mask, count3, R, R - count3, False, False, False,
                 slack, rows, mg, viol, vm, eqc, mism, mmm)
            L = n * Swv * Swv
            R = float(n) ** 2 * Su
            _acc(25, mask, L, R, R - L, False, False, False,
                 slack, rows, mg, viol, vm, eqc, mism, mmm)

    return graphs, rows, eqc, mism, mmm, viol, vm, mg, 0.0, 0, 0.0, 0.0
