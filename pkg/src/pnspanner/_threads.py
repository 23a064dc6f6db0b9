"""Worker-count resolution and chunked dispatch for the batch kernels.

The number of workers is capped by the PN_SPANNER_THREADS environment
variable. Results are merged in source order, so the outcome is identical
to a sequential run regardless of scheduling.
"""

import os
from concurrent.futures import ThreadPoolExecutor

ENV_THREADS = "PN_SPANNER_THREADS"


def resolve_threads(threads=None):
    """Return the worker count to use: explicit arg, env cap, else cpu count."""
    if threads is None:
        threads = os.cpu_count() or 1
    cap = os.environ.get(ENV_THREADS)
    if cap:
        try:
            threads = min(threads, int(cap))
        except ValueError:
            raise ValueError(f"{ENV_THREADS} must be an integer, got {cap!r}")
    return max(1, threads)


def chunk_ranges(n, threads):
    """Split range(n) into at most `threads` contiguous (lo, hi) chunks."""
    threads = min(threads, n) if n else 1
    step = -(-n // threads) if n else 0
    return [(lo, min(lo + step, n)) for lo in range(0, n, step)] if n else []


def run_chunks(n, threads, fn):
    """Run fn(lo, hi) over contiguous chunks of range(n); return results in order."""
    threads = resolve_threads(threads)
    ranges = chunk_ranges(n, threads)
    if len(ranges) <= 1:
        return [fn(lo, hi) for lo, hi in ranges]
    with ThreadPoolExecutor(max_workers=len(ranges)) as pool:
        futures = [pool.submit(fn, lo, hi) for lo, hi in ranges]
        return [f.result() for f in futures]
