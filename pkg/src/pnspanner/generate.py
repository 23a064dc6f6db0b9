"""Seeded random point-set generators (always duplicate-free)."""

import numpy as np

from .errors import ParameterError
from .metric_core import EuclideanSpace, HammingSpace


def generate_euclidean(n, dim, seed):
    """n distinct uniform points in the unit cube [0,1)^dim."""
    if n < 1:
        raise ParameterError(f"point count must be at least 1, got {n}")
    if dim < 1:
        raise ParameterError(f"dimension must be at least 1, got {dim}")
    rng = np.random.default_rng(seed)
    rows, seen = [], set()
    while len(rows) < n:
        p = tuple(rng.random(dim))
        if p not in seen:
            seen.add(p)
            rows.append(p)
    return EuclideanSpace(np.array(rows, dtype=np.float64))


def generate_hamming(n, bits, seed):
    """n distinct uniform bit strings of the given length."""
    if n < 1:
        raise ParameterError(f"point count must be at least 1, got {n}")
    if bits < 1:
        raise ParameterError(f"bit count must be at least 1, got {bits}")
    if n > 2 ** bits:
        raise ParameterError(f"cannot draw {n} distinct strings of {bits} bits")
    rng = np.random.default_rng(seed)
    rows, seen = [], set()
    while len(rows) < n:
        p = tuple(int(b) for b in rng.integers(0, 2, bits))
        if p not in seen:
            seen.add(p)
            rows.append(p)
    return HammingSpace(np.array(rows, dtype=np.uint8))
