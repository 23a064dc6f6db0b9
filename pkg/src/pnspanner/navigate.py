"""Greedy proximity routing, the proximal-navigation (PN) check, and the
length-inside-ball diagnostic.

A graph is proximal navigable when from every vertex u, toward every other
vertex v, some out-neighbor of u is strictly closer to v. On such graphs
the greedy walk (always step to the neighbor nearest the target, ties to
the smallest id, move only on strict improvement) must reach the target,
with the distance to the target strictly decreasing, which also keeps the
walk inside the closed ball of radius d(u, v) around v.
"""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _backend
from .errors import NotPnGraphError
from .spanner import StretchReport

REACHED = "reached"
LOCAL_MINIMUM = "local_minimum"


@dataclass(frozen=True)
class PnVerdict:
    """is_pn plus, when false, the first ordered pair with no closer neighbor."""

    is_pn: bool
    witness: tuple = None


@dataclass(frozen=True)
class RouteResult:
    """A greedy route: vertices, per-hop lengths, total, and how it ended."""

    path: tuple
    hop_lengths: tuple
    total_length: object
    status: str
    local_minimum_at: int = None

    @property
    def reached(self):
        return self.status == REACHED

    def to_json(self):
        def enc(x):
            return f"{x.numerator}/{x.denominator}" if isinstance(x, Fraction) else float(x)

        out = {
            "path": list(self.path),
            "hop_lengths": [enc(h) for h in self.hop_lengths],
            "total_length": enc(self.total_length),
            "status": self.status,
        }
        if self.status == LOCAL_MINIMUM:
            out["local_minimum_at"] = self.local_minimum_at
        return out


def _check_universe(graph, space):
    if graph.n != space.n:
        raise ValueError("graph and space disagree on the universe size")


def _pn_witness_exact(graph, rows):
    n = graph.n
    for u in range(n):
        du = rows[u]
        nbrs = graph.neighbors(u)
        for v in range(n):
            if v == u:
                continue
            if not any(rows[z][v] < du[v] for z, _ in nbrs):
                return u, v
    return None


def is_pn_graph(graph, space, threads=None):
    """Check the PN property over all ordered pairs; first failure wins."""
    _check_universe(graph, space)
    mat = space.distance_matrix()
    if space.is_exact:
        witness = _pn_witness_exact(graph, mat)
    else:
        witness = _backend.pn_witness(mat, graph, threads=threads)
    return PnVerdict(witness is None, witness)


def proximity_path(graph, space, u, v):
    """Greedy route from u toward v; ends Reached or LocalMinimum.

    Terminates unconditionally: each move strictly decreases the distance
    to v, so no vertex repeats.
    """
    _check_universe(graph, space)
    if u == v:
        raise ValueError("route endpoints must differ")
    space._check_id(u)
    space._check_id(v)
    path = [u]
    hops = []
    cur = u
    d_cur = space.dist(u, v)
    while cur != v:
        best = None
        best_d = None
        best_w = None
        for z, w in graph.neighbors(cur):
            dz = space.dist(z, v)
            if best is None or dz < best_d:
                best, best_d, best_w = z, dz, w
        if best is None or not best_d < d_cur:
            total = sum(hops, Fraction(0)) if space.is_exact else float(sum(hops))
            return RouteResult(tuple(path), tuple(hops), total, LOCAL_MINIMUM, cur)
        path.append(best)
        hops.append(best_w)
        cur, d_cur = best, best_d
    total = sum(hops, Fraction(0)) if space.is_exact else float(sum(hops))
    return RouteResult(tuple(path), tuple(hops), total, REACHED)


def route_invariant_violations(route, graph, space, target):
    """Re-check a Reached route against its contract; returns messages.

    Verifies adjacency and hop weights, strictly decreasing distance to the
    target, and containment in the closed ball B_{d(u,v)}(v).
    """
    msgs = []
    path = route.path
    if route.status != REACHED or path[-1] != target:
        msgs.append("route did not reach the target")
        return msgs
    for k in range(len(path) - 1):
        if graph.weight(path[k], path[k + 1], default=None) != route.hop_lengths[k]:
            msgs.append(f"hop {k} is not a graph edge with the stated weight")
    dists = [space.dist(p, target) for p in path]
    if any(a <= b for a, b in zip(dists, dists[1:])):
        msgs.append("distance to target is not strictly decreasing")
    bound = space.dist(path[0], target)
    if max(dists) > bound:
        msgs.append("route leaves the closed ball around the target")
    if sum(route.hop_lengths, 0) != route.total_length:
        msgs.append("total_length is not the sum of hops")
    return msgs


def length_inside_ball(route, space, x, r, v):
    """Path length between the ball's farthest-from-v and closest-to-v vertices.

    Restricts the route's vertices to the closed ball B_r(x), locates the
    farthest and the closest member with respect to v (first occurrence
    wins ties), and sums the hops between those two positions. Fewer than
    two members give 0.
    """
    if route.status != REACHED or route.path[-1] != v:
        raise ValueError("route must have reached v")
    if r < 0:
        raise ValueError("ball radius must be nonnegative")
    members = [k for k, p in enumerate(route.path) if space.dist(p, x) <= r]
    zero = Fraction(0) if space.is_exact else 0.0
    if len(members) < 2:
        return zero
    far = max(members, key=lambda k: (space.dist(route.path[k], v), -k))
    near = min(members, key=lambda k: (space.dist(route.path[k], v), k))
    lo, hi = min(far, near), max(far, near)
    return sum(route.hop_lengths[lo:hi], zero)


@dataclass(frozen=True)
class GreedyRouteStats:
    """All-pairs greedy routing summary (arrays indexed [source, target])."""

    reached: np.ndarray
    hops: np.ndarray
    totals: object  # float ndarray, or nested Fraction lists when exact
    containment_violations: int

    @property
    def all_reached(self):
        return bool(self.reached.all())


def greedy_route_stats(graph, space, threads=None):
    """Run the greedy walk for every ordered pair and collect the outcomes."""
    _check_universe(graph, space)
    n = space.n
    if not space.is_exact:
        mat = space.distance_matrix()
        reached, hops, totals, violations = _backend.greedy_batch(
            mat, graph, threads=threads
        )
        return GreedyRouteStats(reached, hops, totals, violations)

    reached = np.zeros((n, n), dtype=bool)
    np.fill_diagonal(reached, True)
    hops = np.zeros((n, n), dtype=np.int64)
    totals = [[Fraction(0)] * n for _ in range(n)]
    violations = 0
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            route = proximity_path(graph, space, u, v)
            reached[u, v] = route.reached
            hops[u, v] = len(route.hop_lengths)
            totals[u][v] = route.total_length
            if route.reached:
                bound = space.dist(u, v)
                if any(space.dist(p, v) > bound for p in route.path):
                    violations += 1
    return GreedyRouteStats(reached, hops, totals, violations)


def greedy_stretch(graph, space, include_ratios=False, threads=None):
    """Worst-case greedy-route length over metric distance, across all pairs.

    Requires the PN property (else the greedy walk may strand); a failed
    check raises NotPnGraphError carrying the witness pair.
    """
    verdict = is_pn_graph(graph, space, threads=threads)
    if not verdict.is_pn:
        raise NotPnGraphError(verdict.witness)
    n = space.n
    if n < 2:
        one = Fraction(1) if space.is_exact else 1.0
        return StretchReport(one, None, 0, None)
    stats = greedy_route_stats(graph, space, threads=threads)
    if not space.is_exact:
        mat = space.distance_matrix()
        with np.errstate(invalid="ignore", divide="ignore"):
            ratios = np.where(np.eye(n, dtype=bool), -np.inf, stats.totals / mat)
        flat = int(np.argmax(ratios))
        pair = divmod(flat, n)
        best = float(ratios[pair])
        return StretchReport(
            stretch=best,
            argmax_pair=pair,
            pair_count=n * (n - 1),
            ratios=np.where(np.eye(n, dtype=bool), np.nan, stats.totals / mat)
            if include_ratios
            else None,
        )
    best = None
    pair = None
    ratios = [[None] * n for _ in range(n)] if include_ratios else None
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            r = stats.totals[u][v] / space.dist(u, v)
            if include_ratios:
                ratios[u][v] = r
            if best is None or r > best:
                best, pair = r, (u, v)
    return StretchReport(best, pair, n * (n - 1), ratios)
