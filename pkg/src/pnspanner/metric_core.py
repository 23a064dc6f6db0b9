"""Metric spaces, the distance oracle, graphs over them, and file formats.

A metric space here is a finite point universe (ids 0..n-1) plus a distance
oracle. Euclidean, Hamming and Table spaces compute in 64-bit floats; the
harmonic counterexample family (see `counterexample`) is exact rational.
A MetricGraph stores, per vertex, the out-neighbors with edge weights that
equal the oracle distance of the endpoints.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    DimensionMismatchError,
    DuplicatePointError,
    GraphFileError,
    PointFileError,
)

AXIOM_TOL = 1e-9


class MetricSpace:
    """Finite point universe with a distance oracle.

    Subclasses set `kind`, `n`, `is_exact` and implement `_dist` plus
    `distance_matrix`. Instances are immutable after construction and safe
    to share across workers.
    """

    kind = "abstract"
    is_exact = False

    def __init__(self, n):
        self.n = n

    def _check_id(self, u):
        if not (isinstance(u, (int, np.integer)) and 0 <= u < self.n):
            raise IndexError(f"point id {u} out of range for universe of size {self.n}")

    def dist(self, u, v):
        """Distance between points u and v."""
        self._check_id(u)
        self._check_id(v)
        return self._dist(int(u), int(v))

    def _dist(self, u, v):
        raise NotImplementedError

    def distance_matrix(self):
        """Full pairwise matrix: float64 ndarray, or nested Fraction lists when exact."""
        raise NotImplementedError

    def payload(self, u):
        """The raw point behind id u (coordinates, bit string, index)."""
        raise NotImplementedError


class EuclideanSpace(MetricSpace):
    """Points in R^dim under the L2 distance."""

    kind = "euclidean"

    def __init__(self, points):
        points = np.asarray(points, dtype=np.float64)
        if points.ndim != 2 or points.shape[1] < 1:
            raise ValueError("points must be a (n, dim) array with dim >= 1")
        if not np.isfinite(points).all():
            raise ValueError("coordinates must be finite")
        super().__init__(points.shape[0])
        self.dim = points.shape[1]
        self.points = points
        self.points.setflags(write=False)

    def _dist(self, u, v):
        d = self.points[u] - self.points[v]
        return float(np.sqrt((d * d).sum()))

    def distance_matrix(self):
        d = self.points[:, None, :] - self.points[None, :, :]
        return np.sqrt((d * d).sum(axis=-1))

    def payload(self, u):
        self._check_id(u)
        return self.points[u]


class HammingSpace(MetricSpace):
    """Fixed-length bit strings under the bit-disagreement count."""

    kind = "hamming"

    def __init__(self, codes):
        codes = np.asarray(codes, dtype=np.uint8)
        if codes.ndim != 2 or codes.shape[1] < 1:
            raise ValueError("codes must be a (n, bits) array with bits >= 1")
        if not np.isin(codes, (0, 1)).all():
            raise ValueError("codes must contain only 0/1")
        super().__init__(codes.shape[0])
        self.bits = codes.shape[1]
        self.codes = codes
        self.codes.setflags(write=False)

    def _dist(self, u, v):
        return float((self.codes[u] != self.codes[v]).sum())

    def distance_matrix(self):
        neq = self.codes[:, None, :] != self.codes[None, :, :]
        return neq.sum(axis=-1).astype(np.float64)

    def payload(self, u):
        self._check_id(u)
        return self.codes[u]


class TableSpace(MetricSpace):
    """Distances given explicitly as an n x n matrix.

    Construction only checks shape and finiteness; whether the table is a
    genuine metric is the job of `check_metric_axioms`.
    """

    kind = "table"

    def __init__(self, matrix):
        matrix = np.asarray(matrix, dtype=np.float64)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValueError("distance table must be square")
        if not np.isfinite(matrix).all():
            raise ValueError("distance table must be finite")
        super().__init__(matrix.shape[0])
        self.matrix = matrix
        self.matrix.setflags(write=False)

    def _dist(self, u, v):
        return float(self.matrix[u, v])

    def distance_matrix(self):
        return self.matrix.copy()

    def payload(self, u):
        self._check_id(u)
        return u


def dist(space, u, v):
    """Distance oracle: d(u, v) in the given space."""
    return space.dist(u, v)


@dataclass(frozen=True)
class Violation:
    """One failed metric axiom with the offending ids and both sides' values."""

    axiom: str  # "symmetry" | "zero_diagonal" | "positivity" | "triangle"
    ids: tuple
    lhs: object
    rhs: object

    def describe(self):
        if self.axiom == "triangle":
            x, y, z = self.ids
            return f"d({x},{z}) = {self.lhs} > d({x},{y}) + d({y},{z}) = {self.rhs}"
        if self.axiom == "symmetry":
            u, v = self.ids
            return f"d({u},{v}) = {self.lhs} != d({v},{u}) = {self.rhs}"
        if self.axiom == "zero_diagonal":
            return f"d({self.ids[0]},{self.ids[0]}) = {self.lhs} != 0"
        u, v = self.ids
        return f"d({u},{v}) = {self.lhs} is not positive"


def _scaled_int_matrix(rows):
    """Convert a nested Fraction matrix to integers on a common denominator."""
    denom = 1
    for row in rows:
        for x in row:
            denom = denom * x.denominator // math.gcd(denom, x.denominator)
    return [[int(x * denom) for x in row] for row in rows], denom


def _check_axioms_exact(rows):
    n = len(rows)
    out = []
    for u in range(n):
        if rows[u][u] != 0:
            out.append(Violation("zero_diagonal", (u,), rows[u][u], 0))
    for u in range(n):
        for v in range(u + 1, n):
            if rows[u][v] != rows[v][u]:
                out.append(Violation("symmetry", (u, v), rows[u][v], rows[v][u]))
            if rows[u][v] <= 0:
                out.append(Violation("positivity", (u, v), rows[u][v], None))
    # Exact integer arithmetic on a common denominator keeps the n^3 sweep fast.
    scaled, denom = _scaled_int_matrix(rows)
    for x in range(n):
        sx = scaled[x]
        for y in range(n):
            sxy = sx[y]
            sy = scaled[y]
            for z in range(n):
                if sx[z] > sxy + sy[z]:
                    out.append(
                        Violation(
                            "triangle",
                            (x, y, z),
                            Fraction(sx[z], denom),
                            Fraction(sxy + sy[z], denom),
                        )
                    )
    return out


def _check_axioms_float(mat, tol):
    n = mat.shape[0]
    out = []
    if np.isnan(mat).any():
        for u, v in np.argwhere(np.isnan(mat)):
            out.append(Violation("positivity", (int(u), int(v)), math.nan, None))
        return out
    for u in np.nonzero(np.diag(mat) != 0.0)[0]:
        out.append(Violation("zero_diagonal", (int(u),), float(mat[u, u]), 0.0))
    asym = np.abs(mat - mat.T) > tol
    for u, v in np.argwhere(np.triu(asym, 1)):
        out.append(Violation("symmetry", (int(u), int(v)), float(mat[u, v]), float(mat[v, u])))
    offdiag = ~np.eye(n, dtype=bool)
    for u, v in np.argwhere((mat <= 0.0) & offdiag):
        if u < v:
            out.append(Violation("positivity", (int(u), int(v)), float(mat[u, v]), None))
    for x in range(n):
        bad = mat[x, None, :] > mat[x, :, None] + mat + tol
        for y, z in np.argwhere(bad):
            out.append(
                Violation(
                    "triangle",
                    (x, int(y), int(z)),
                    float(mat[x, z]),
                    float(mat[x, y] + mat[y, z]),
                )
            )
    return out


def check_metric_axioms(space, tol=AXIOM_TOL):
    """Exhaustively test the metric axioms over the finite universe.

    Checks symmetry, zero diagonal, off-diagonal positivity, and all n^3
    ordered triangle inequalities d(x,z) <= d(x,y) + d(y,z). Exact spaces
    compare exactly; float spaces allow `tol` absolute slack on symmetry
    and triangle checks. Returns the list of violations (empty = pass).
    """
    if space.n < 1:
        raise ValueError("universe must contain at least one point")
    if space.is_exact:
        return _check_axioms_exact(space.distance_matrix())
    return _check_axioms_float(space.distance_matrix(), tol)


# ---------------------------------------------------------------------------
# Point-set files: one point per line, `#` starts a comment. Euclidean rows
# are whitespace-separated decimals; Hamming rows are single 0/1 strings.


def load_points(path, kind=None, dim=None, bits=None):
    """Read a point-set file into a MetricSpace.

    `kind` is "euclidean" or "hamming"; if omitted it is taken from a
    `# kind=...` header comment, else inferred from the first data row.
    Duplicate points are rejected.
    """
    with open(path, "r", encoding="utf-8") as fh:
        raw = fh.readlines()

    rows = []
    for lineno, line in enumerate(raw, start=1):
        text = line.strip()
        if text.startswith("#"):
            if kind is None and "kind=" in text:
                kind = text.split("kind=")[1].split()[0]
            continue
        if text:
            rows.append((lineno, text))
    if not rows:
        raise PointFileError(f"no points in {path}")

    if kind is None:
        first = rows[0][1].split()
        if len(first) == 1 and len(first[0]) > 1 and set(first[0]) <= {"0", "1"}:
            kind = "hamming"
        else:
            kind = "euclidean"
    if kind not in ("euclidean", "hamming"):
        raise PointFileError(f"unknown point kind {kind!r}")

    if kind == "hamming":
        codes = []
        for lineno, text in rows:
            tokens = text.split()
            if len(tokens) != 1 or set(tokens[0]) - {"0", "1"}:
                raise PointFileError("expected a single 0/1 string", line=lineno)
            if bits is None:
                bits = len(tokens[0])
            elif len(tokens[0]) != bits:
                raise DimensionMismatchError(
                    f"expected {bits} bits, got {len(tokens[0])}", line=lineno
                )
            codes.append([int(c) for c in tokens[0]])
        space = HammingSpace(np.array(codes, dtype=np.uint8))
        seen = {}
        for i, code in enumerate(map(tuple, codes)):
            if code in seen:
                raise DuplicatePointError(seen[code], i)
            seen[code] = i
        return space

    pts = []
    for lineno, text in rows:
        tokens = text.split()
        if dim is None:
            dim = len(tokens)
        elif len(tokens) != dim:
            raise DimensionMismatchError(
                f"expected {dim} coordinates, got {len(tokens)}", line=lineno
            )
        try:
            pts.append([float(t) for t in tokens])
        except ValueError as exc:
            raise PointFileError(f"bad coordinate: {exc}", line=lineno) from None
    seen = {}
    for i, p in enumerate(map(tuple, pts)):
        if p in seen:
            raise DuplicatePointError(seen[p], i)
        seen[p] = i
    return EuclideanSpace(np.array(pts, dtype=np.float64))


def write_points(path, space, header=None):
    """Write a point-set file round-trippable by load_points."""
    with open(path, "w", encoding="utf-8") as fh:
        if space.kind == "euclidean":
            fh.write(f"# kind=euclidean dim={space.dim} n={space.n}\n")
        elif space.kind == "hamming":
            fh.write(f"# kind=hamming bits={space.bits} n={space.n}\n")
        else:
            raise ValueError(f"cannot serialize a {space.kind} space as points")
        if header:
            fh.write(f"# {header}\n")
        if space.kind == "euclidean":
            for row in space.points:
                fh.write(" ".join(repr(float(x)) for x in row) + "\n")
        else:
            for row in space.codes:
                fh.write("".join(str(int(b)) for b in row) + "\n")


# ---------------------------------------------------------------------------
# Metric graphs.


class MetricGraph:
    """Weighted graph over point ids; weights equal the metric distances.

    Adjacency is stored per vertex, sorted by neighbor id. Undirected
    graphs keep symmetric adjacency (each edge appears in both lists).
    No self-loops are stored. Instances are immutable.
    """

    def __init__(self, n, directed, adjacency):
        self.n = n
        self.directed = directed
        self._adj = tuple(
            tuple(sorted(((int(v), w) for v, w in nbrs))) for nbrs in adjacency
        )
        if len(self._adj) != n:
            raise ValueError("adjacency length must equal n")
        for u, nbrs in enumerate(self._adj):
            for v, w in nbrs:
                if v == u:
                    raise ValueError(f"self-loop stored at vertex {u}")
                if not (0 <= v < n):
                    raise ValueError(f"neighbor id {v} out of range")
        if not directed:
            for u in range(n):
                for v, w in self._adj[u]:
                    if self.weight(v, u, default=None) != w:
                        raise ValueError(f"undirected adjacency not symmetric at ({u},{v})")

    @classmethod
    def from_edge_list(cls, space, pairs, directed):
        """Build a graph whose weights come from the space's oracle."""
        adj = [[] for _ in range(space.n)]
        seen = set()
        for u, v in pairs:
            u, v = int(u), int(v)
            if (u, v) in seen:
                continue
            seen.add((u, v))
            w = space.dist(u, v)
            adj[u].append((v, w))
            if not directed and (v, u) not in seen:
                seen.add((v, u))
                adj[v].append((u, w))
        return cls(space.n, directed, adj)

    def neighbors(self, u):
        """Out-neighbors of u as (id, weight) pairs sorted by id."""
        return self._adj[u]

    def weight(self, u, v, default=KeyError):
        for x, w in self._adj[u]:
            if x == v:
                return w
        if default is KeyError:
            raise KeyError(f"no edge {u} -> {v}")
        return default

    def has_edge(self, u, v):
        return self.weight(u, v, default=None) is not None

    def out_degree(self, u):
        return len(self._adj[u])

    @property
    def edge_count(self):
        total = sum(len(nbrs) for nbrs in self._adj)
        return total if self.directed else total // 2

    def edges(self):
        """Directed: every stored arc. Undirected: each edge once, u < v."""
        for u, nbrs in enumerate(self._adj):
            for v, w in nbrs:
                if self.directed or u < v:
                    yield u, v, w

    def undirected_edge_set(self):
        return {(min(u, v), max(u, v)) for u, nbrs in enumerate(self._adj) for v, _ in nbrs}

    def to_csr(self):
        """(indptr, indices, weights) arrays for the float kernels."""
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        for u in range(self.n):
            indptr[u + 1] = indptr[u] + len(self._adj[u])
        indices = np.empty(indptr[-1], dtype=np.int64)
        weights = np.empty(indptr[-1], dtype=np.float64)
        k = 0
        for nbrs in self._adj:
            for v, w in nbrs:
                indices[k] = v
                weights[k] = w
                k += 1
        return indptr, indices, weights

    def validate_weights(self, space, tol=0.0):
        """Check every stored weight against the oracle; returns mismatches."""
        bad = []
        for u, v, w in self.edges():
            d = space.dist(u, v)
            if abs(d - w) > tol:
                bad.append((u, v, w, d))
        return bad

    def __eq__(self, other):
        if not isinstance(other, MetricGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.directed == other.directed
            and self._adj == other._adj
        )

    def __hash__(self):
        return hash((self.n, self.directed, self._adj))

    def __repr__(self):
        mode = "directed" if self.directed else "undirected"
        return f"MetricGraph({mode}, n={self.n}, edges={self.edge_count})"


def _format_weight(w):
    if isinstance(w, Fraction):
        return f"{w.numerator}/{w.denominator}"
    return repr(float(w))


def _parse_weight(token):
    if "/" in token:
        num, den = token.split("/")
        return Fraction(int(num), int(den))
    return float(token)


def write_graph(path, graph):
    """Graph file: header `directed|undirected <n>`, then `u v weight` lines.

    Rational weights are printed as `p/q`, floats at full precision, so a
    round trip through read_graph compares equal.
    """
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{'directed' if graph.directed else 'undirected'} {graph.n}\n")
        for u, v, w in graph.edges():
            fh.write(f"{u} {v} {_format_weight(w)}\n")


def read_graph(path):
    """Parse a graph file written by write_graph."""
    with open(path, "r", encoding="utf-8") as fh:
        raw = fh.readlines()
    header = None
    edges = []
    for lineno, line in enumerate(raw, start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        if header is None:
            parts = text.split()
            if len(parts) != 2 or parts[0] not in ("directed", "undirected"):
                raise GraphFileError("expected header 'directed|undirected <n>'", line=lineno)
            try:
                header = (parts[0] == "directed", int(parts[1]))
            except ValueError:
                raise GraphFileError("bad vertex count in header", line=lineno) from None
            continue
        parts = text.split()
        if len(parts) != 3:
            raise GraphFileError("expected 'u v weight'", line=lineno)
        try:
            edges.append((int(parts[0]), int(parts[1]), _parse_weight(parts[2])))
        except (ValueError, ZeroDivisionError):
            raise GraphFileError(f"bad edge line {text!r}", line=lineno) from None
    if header is None:
        raise GraphFileError(f"empty graph file {path}")
    directed, n = header
    adj = [[] for _ in range(n)]
    for u, v, w in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFileError(f"edge ({u},{v}) out of range for n={n}")
        adj[u].append((v, w))
        if not directed:
            adj[v].append((u, w))
    return MetricGraph(n, directed, adj)
