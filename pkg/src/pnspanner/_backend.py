"""Kernel backend selection and thread-chunked dispatch.

The compiled extension is preferred; the numpy fallback keeps the package
fully functional without it. Both produce identical results, which
tests/test_kernels.py asserts.
"""

import numpy as np

from ._threads import run_chunks

try:
    from . import _kernels as _impl

    BACKEND = "compiled"
except ImportError:  # extension not built
    from . import _kernels_py as _impl

    BACKEND = "python"


def _dense(D):
    return np.ascontiguousarray(D, dtype=np.float64)


def hsp_adjacency(D, threads=None):
    """Per-source half-space-proximal out-neighbors (selection order)."""
    D = _dense(D)
    blocks = run_chunks(D.shape[0], threads, lambda lo, hi: _impl.hsp_source_block(D, lo, hi))
    out = []
    for block in blocks:
        out.extend(block)
    return out


def pn_witness(D, graph, threads=None):
    """First ordered pair violating proximal navigability, or None."""
    D = _dense(D)
    indptr, indices, _ = graph.to_csr()
    hits = run_chunks(
        D.shape[0], threads, lambda lo, hi: _impl.pn_first_violation(D, indptr, indices, lo, hi)
    )
    hits = [h for h in hits if h is not None]
    return min(hits) if hits else None


def lune_witness(D, graph, threads=None):
    """First non-adjacent ordered pair without a lune witness, or None."""
    D = _dense(D)
    indptr, indices, _ = graph.to_csr()
    hits = run_chunks(
        D.shape[0], threads, lambda lo, hi: _impl.lune_first_violation(D, indptr, indices, lo, hi)
    )
    hits = [h for h in hits if h is not None]
    return min(hits) if hits else None


def greedy_batch(D, graph, threads=None):
    """All-pairs greedy routing.

    Returns (reached, hops, totals, violations): boolean/int64/float64
    (n, n) arrays plus the count of ball-containment violations seen while
    walking (0 for any correct input).
    """
    D = _dense(D)
    n = D.shape[0]
    indptr, indices, _ = graph.to_csr()
    reached = np.zeros((n, n), dtype=np.uint8)
    hops = np.zeros((n, n), dtype=np.int64)
    totals = np.zeros((n, n), dtype=np.float64)
    counts = run_chunks(
        n,
        threads,
        lambda lo, hi: _impl.greedy_block(D, indptr, indices, lo, hi, reached, hops, totals),
    )
    return reached.astype(bool), hops, totals, int(sum(counts))
