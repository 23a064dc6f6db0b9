"""Exact all-pairs shortest paths, stretch factor, and spanner verdicts.

Float-weighted graphs go through scipy's Dijkstra (repeated single-source
relaxation with a priority queue); rational-weighted graphs use an in-repo
heapq Dijkstra over Fractions so the harmonic-family results stay exact.
"""

import csv
import heapq
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import dijkstra

from .errors import DisconnectedGraphError, ParameterError


@dataclass(frozen=True)
class StretchReport:
    """Worst ratio of graph distance to metric distance over ordered pairs."""

    stretch: object
    argmax_pair: tuple
    pair_count: int
    ratios: object = None  # full matrix when requested

    def to_json(self):
        out = {
            "pair_count": self.pair_count,
            "argmax_pair": list(self.argmax_pair) if self.argmax_pair else None,
            "stretch_decimal": float(self.stretch),
        }
        if isinstance(self.stretch, Fraction):
            out["stretch"] = f"{self.stretch.numerator}/{self.stretch.denominator}"
        else:
            out["stretch"] = float(self.stretch)
        return out

    def write_ratios_csv(self, fh):
        """One row per ordered pair: u, v, ratio (exact and decimal)."""
        if self.ratios is None:
            raise ValueError("report was built without per-pair ratios")
        writer = csv.writer(fh)
        writer.writerow(["u", "v", "ratio", "ratio_decimal"])
        n = len(self.ratios)
        for u in range(n):
            for v in range(n):
                if u == v:
                    continue
                r = self.ratios[u][v]
                exact = (
                    f"{r.numerator}/{r.denominator}" if isinstance(r, Fraction) else repr(float(r))
                )
                writer.writerow([u, v, exact, float(r)])


def _is_exact_graph(graph):
    for _, _, w in graph.edges():
        return isinstance(w, Fraction)
    return False


def _dijkstra_exact(graph, source):
    dist = [math.inf] * graph.n
    dist[source] = Fraction(0)
    heap = [(Fraction(0), source)]
    done = [False] * graph.n
    while heap:
        d, u = heapq.heappop(heap)
        if done[u]:
            continue
        done[u] = True
        for v, w in graph.neighbors(u):
            nd = d + w
            if nd < dist[v]:
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return dist


def shortest_path_lengths(graph):
    """All-pairs shortest-path matrix; unreachable pairs are math.inf.

    Exact rational graphs return nested Fraction lists, float graphs a
    float64 ndarray.
    """
    if _is_exact_graph(graph):
        return [_dijkstra_exact(graph, s) for s in range(graph.n)]
    indptr, indices, weights = graph.to_csr()
    mat = csr_matrix((weights, indices, indptr), shape=(graph.n, graph.n))
    return dijkstra(mat, directed=True)


def _first_unreachable(d_graph, n):
    for u in range(n):
        for v in range(n):
            if u != v and d_graph[u][v] == math.inf:
                return u, v
    return None


def stretch(graph, space, include_ratios=False):
    """Max over ordered pairs u != v of d_G(u,v) / d(u,v), with the arg max.

    Raises DisconnectedGraphError naming an unreachable pair when the graph
    is not (strongly) connected.
    """
    if graph.n != space.n:
        raise ValueError("graph and space disagree on the universe size")
    n = graph.n
    if n < 2:
        one = Fraction(1) if space.is_exact else 1.0
        return StretchReport(one, None, 0, None)
    d_graph = shortest_path_lengths(graph)

    if isinstance(d_graph, np.ndarray):
        bad = np.argwhere(np.isinf(d_graph))
        if bad.size:
            raise DisconnectedGraphError((int(bad[0][0]), int(bad[0][1])))
        mat = space.distance_matrix()
        eye = np.eye(n, dtype=bool)
        with np.errstate(invalid="ignore", divide="ignore"):
            ratios = np.where(eye, -np.inf, d_graph / mat)
        flat = int(np.argmax(ratios))
        pair = divmod(flat, n)
        full = np.where(eye, np.nan, d_graph / mat) if include_ratios else None
        return StretchReport(float(ratios[pair]), pair, n * (n - 1), full)

    missing = _first_unreachable(d_graph, n)
    if missing:
        raise DisconnectedGraphError(missing)
    best = None
    pair = None
    full = [[None] * n for _ in range(n)] if include_ratios else None
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            r = d_graph[u][v] / space.dist(u, v)
            if include_ratios:
                full[u][v] = r
            if best is None or r > best:
                best, pair = r, (u, v)
    return StretchReport(best, pair, n * (n - 1), full)


def is_t_spanner(graph, space, t):
    """(verdict, worst pair): verdict true iff stretch <= t. Requires t >= 1."""
    if isinstance(t, str):
        t = Fraction(t)
    if t < 1:
        raise ParameterError(f"spanner target t must be >= 1, got {t}")
    report = stretch(graph, space)
    return report.stretch <= t, report.argmax_pair


def min_counterexample_index(t):
    """Smallest family index i whose harmonic witness ratio H_{i+1} exceeds t.

    Exact harmonic accumulation; always terminates since the series
    diverges.
    """
    t = Fraction(t) if not isinstance(t, Fraction) else t
    if t < 1:
        raise ParameterError(f"stretch target must be >= 1, got {t}")
    h = Fraction(1)  # H_1
    k = 1
    while h <= t:
        k += 1
        h += Fraction(1, k)
    return k - 1
