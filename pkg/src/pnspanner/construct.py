"""Graph builders: complete, half-space proximal (HSP), Delaunay, and the
harmonic counterexample chain, plus the lune-witness checker for HSP output.

The HSP rule, per source u: start from all other points, repeatedly take
the nearest remaining point w (ties to the smallest id), add the arc u->w,
and drop every remaining point strictly closer to w than to u; equidistant
points survive. Float spaces run on the kernel backend; exact spaces run
the same loop in rational arithmetic.
"""

from dataclasses import dataclass

import numpy as np

from . import _backend
from .counterexample import CounterexampleSpace, family_edge_set
from .delaunay import build_delaunay  # noqa: F401  (public surface lives here)
from .errors import DuplicatePointError
from .metric_core import MetricGraph


@dataclass(frozen=True)
class HspNeighborTrace:
    """Per-source record of the HSP rounds: chosen neighbor, dropped points."""

    source: int
    rounds: tuple  # of (chosen_id, tuple_of_removed_ids)

    def to_json(self):
        return {
            "source": self.source,
            "rounds": [
                {"chosen": w, "removed": list(removed)} for w, removed in self.rounds
            ],
        }


@dataclass(frozen=True)
class LuneVerdict:
    """Outcome of the lune-witness check; witness is a failing (u, v) pair."""

    ok: bool
    witness: tuple = None


def build_complete(space):
    """Undirected graph with all n(n-1)/2 edges, weights from the oracle."""
    pairs = [(u, v) for u in range(space.n) for v in range(u + 1, space.n)]
    return MetricGraph.from_edge_list(space, pairs, directed=False)


def _reject_duplicates(rows, n):
    for u in range(n):
        row = rows[u]
        for v in range(u + 1, n):
            if row[v] == 0:
                raise DuplicatePointError(u, v)


def _hsp_rounds(row_of, n, u):
    """One source's HSP rounds over any ordered weight type."""
    du = row_of(u)
    allowed = [v for v in range(n) if v != u]
    rounds = []
    while allowed:
        w = min(allowed, key=lambda z: (du[z], z))
        dw = row_of(w)
        removed = tuple(z for z in allowed if z != w and dw[z] < du[z])
        allowed = [z for z in allowed if z != w and dw[z] >= du[z]]
        rounds.append((w, removed))
    return rounds


def build_hsp(space, return_trace=False, threads=None):
    """Directed HSP graph; optionally also the per-source round traces.

    Deterministic: nearest-neighbor ties break to the smallest id and the
    forbidden-region test is strict, so equidistant points stay. Raises
    DuplicatePointError when two points coincide (the loop cannot make
    progress past a zero distance).
    """
    if space.n < 1:
        raise ValueError("universe must contain at least one point")
    mat = space.distance_matrix()
    n = space.n
    _reject_duplicates(mat, n)

    if space.is_exact:
        weight_of = lambda u, w: mat[u][w]
    else:
        weight_of = lambda u, w: float(mat[u, w])

    if space.is_exact or return_trace:
        row_of = lambda u: mat[u]
        traces = [HspNeighborTrace(u, tuple(_hsp_rounds(row_of, n, u))) for u in range(n)]
        adj = [
            [(w, weight_of(u, w)) for w, _ in trace.rounds]
            for u, trace in enumerate(traces)
        ]
        graph = MetricGraph(n, True, adj)
        return (graph, traces) if return_trace else graph

    neighbor_lists = _backend.hsp_adjacency(mat, threads=threads)
    adj = [
        [(int(w), weight_of(u, w)) for w in nbrs]
        for u, nbrs in enumerate(neighbor_lists)
    ]
    return MetricGraph(n, True, adj)


def symmetrize(graph):
    """Undirected view of a directed graph: union of u->v and v->u arcs."""
    if not graph.directed:
        raise ValueError("graph is already undirected")
    adj = [dict() for _ in range(graph.n)]
    for u, v, w in graph.edges():
        adj[u][v] = w
        adj[v][u] = w
    return MetricGraph(graph.n, False, [list(d.items()) for d in adj])


def _lune_witness_exact(graph, rows):
    n = graph.n
    for u in range(n):
        du = rows[u]
        nbrs = graph.neighbors(u)
        adjacent = {v for v, _ in nbrs}
        for v in range(n):
            if v == u or v in adjacent:
                continue
            duv = du[v]
            if not any(du[z] < duv and rows[z][v] < duv for z, _ in nbrs):
                return u, v
    return None


def check_lune_property(graph, space, threads=None):
    """Witness check behind HSP navigability: for every non-adjacent ordered
    pair (u, v) there must be an out-neighbor z of u with d(u,z) < d(u,v)
    and d(z,v) < d(u,v), i.e. z lies in the lune of u and v."""
    if graph.n != space.n:
        raise ValueError("graph and space disagree on the universe size")
    mat = space.distance_matrix()
    if space.is_exact:
        witness = _lune_witness_exact(graph, mat)
    else:
        witness = _backend.lune_witness(mat, graph, threads=threads)
    return LuneVerdict(witness is None, witness)


def build_counterexample_graph(i, eps=None):
    """Chain graph G_i over {f_0..f_i, f_inf} with exact rational weights.

    Returns (graph, space). eps defaults to the family's safe bound
    1/(10*(i+1)*(i+2)) and is validated against it.
    """
    space = CounterexampleSpace(i, eps)
    graph = MetricGraph.from_edge_list(space, sorted(family_edge_set(i)), directed=False)
    return graph, space
