"""Pure-Python (numpy-vectorized) kernels for float metric spaces.

Fallback twin of the compiled `_kernels` extension; both expose the same
block API over a dense float64 distance matrix D and CSR adjacency:

- hsp_source_block(D, lo, hi): per-source half-space-proximal out-neighbors
  in selection order.
- pn_first_violation(D, indptr, indices, lo, hi): first ordered pair (u, v)
  with no out-neighbor of u strictly closer to v, or None.
- lune_first_violation(D, indptr, indices, lo, hi): first non-adjacent
  ordered pair without a witness z (edge u->z, d(u,z) < d(u,v) and
  d(z,v) < d(u,v)), or None.
- greedy_block(D, indptr, indices, lo, hi, reached, hops, totals): run
  greedy routing from sources lo..hi to every target, filling the output
  rows; returns the count of monotonicity/containment violations observed.

Preconditions: D symmetric, zero diagonal, strictly positive off-diagonal;
CSR neighbor lists sorted ascending (ties break to the smallest id).
"""

import numpy as np


def hsp_source_block(D, lo, hi):
    n = D.shape[0]
    out = []
    for u in range(lo, hi):
        du = D[u]
        allowed = np.ones(n, dtype=bool)
        allowed[u] = False
        nbrs = []
        while True:
            cand = np.nonzero(allowed)[0]
            if cand.size == 0:
                break
            w = int(cand[np.argmin(du[cand])])
            nbrs.append(w)
            # drop everything strictly closer to w than to u (w drops itself)
            allowed &= ~(D[w] < du)
        out.append(np.asarray(nbrs, dtype=np.int64))
    return out


def pn_first_violation(D, indptr, indices, lo, hi):
    n = D.shape[0]
    for u in range(lo, hi):
        nb = indices[indptr[u] : indptr[u + 1]]
        du = D[u]
        if nb.size == 0:
            fail = np.ones(n, dtype=bool)
        else:
            fail = D[nb].min(axis=0) >= du
        fail[u] = False
        hit = np.nonzero(fail)[0]
        if hit.size:
            return u, int(hit[0])
    return None


def lune_first_violation(D, indptr, indices, lo, hi):
    n = D.shape[0]
    for u in range(lo, hi):
        nb = indices[indptr[u] : indptr[u + 1]]
        du = D[u]
        adjacent = np.zeros(n, dtype=bool)
        adjacent[nb] = True
        if nb.size == 0:
            witnessed = np.zeros(n, dtype=bool)
        else:
            close_to_u = du[nb][:, None] < du[None, :]
            close_to_v = D[nb] < du[None, :]
            witnessed = (close_to_u & close_to_v).any(axis=0)
        fail = ~witnessed & ~adjacent
        fail[u] = False
        hit = np.nonzero(fail)[0]
        if hit.size:
            return u, int(hit[0])
    return None


def greedy_block(D, indptr, indices, lo, hi, reached, hops, totals):
    n = D.shape[0]
    deg = np.diff(indptr)
    maxdeg = int(deg.max()) if n else 0
    violations = 0
    if maxdeg == 0:
        for u in range(lo, hi):
            reached[u] = 0
            reached[u, u] = 1
            hops[u] = 0
            totals[u] = 0.0
        return violations
    nbr = np.full((n, maxdeg), -1, dtype=np.int64)
    for u in range(n):
        s, e = indptr[u], indptr[u + 1]
        nbr[u, : e - s] = indices[s:e]

    for u in range(lo, hi):
        bound = D[u]
        active = np.ones(n, dtype=bool)
        active[u] = False
        cur = np.full(n, u, dtype=np.int64)
        dcur = D[u].copy()
        h = np.zeros(n, dtype=np.int64)
        tot = np.zeros(n, dtype=np.float64)
        reach = np.zeros(n, dtype=bool)
        while True:
            act = np.nonzero(active)[0]
            if act.size == 0:
                break
            cand = nbr[cur[act]]
            dd = np.where(cand >= 0, D[cand, act[:, None]], np.inf)
            j = np.argmin(dd, axis=1)
            rows = np.arange(act.size)
            dbest = dd[rows, j]
            wbest = cand[rows, j]
            move = dbest < dcur[act]
            active[act[~move]] = False  # local minima
            mv = act[move]
            if mv.size:
                w = wbest[move]
                d_new = dbest[move]
                violations += int(np.count_nonzero(d_new > bound[mv]))
                tot[mv] += D[cur[mv], w]
                cur[mv] = w
                dcur[mv] = d_new
                h[mv] += 1
                arrived = mv[w == mv]
                reach[arrived] = True
                active[arrived] = False
        reach[u] = True
        reached[u] = reach
        hops[u] = h
        totals[u] = tot
    return violations
