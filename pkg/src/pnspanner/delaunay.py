"""Planar Delaunay triangulation by incremental insertion.

Points are inserted in id order into a triangulation kept consistent with
ghost triangles past the hull (vertex -1), so hull updates need no giant
super-triangle. Orientation and circumcircle predicates run a float filter
with a Shewchuk-style error bound and fall back to exact rational
arithmetic, which also settles cocircular and collinear ties
deterministically. The conflict scan is quadratic; fine at desk scale.
"""

from fractions import Fraction

from .errors import DegenerateInputError, DuplicatePointError, UnsupportedDimensionError
from .metric_core import MetricGraph

GHOST = -1

_EPS = 2.0 ** -53
_CCW_BOUND = (3.0 + 16.0 * _EPS) * _EPS
_ICC_BOUND = (10.0 + 96.0 * _EPS) * _EPS


def _sign(x):
    return (x > 0) - (x < 0)


def orient2d(ax, ay, bx, by, cx, cy):
    """Sign of the signed area of (a, b, c): +1 counterclockwise, -1 clockwise."""
    detleft = (ax - cx) * (by - cy)
    detright = (ay - cy) * (bx - cx)
    det = detleft - detright
    if detleft > 0.0:
        if detright <= 0.0:
            return _sign(det)
        detsum = detleft + detright
    elif detleft < 0.0:
        if detright >= 0.0:
            return _sign(det)
        detsum = -detleft - detright
    else:
        return _sign(det)
    if det >= _CCW_BOUND * detsum or -det >= _CCW_BOUND * detsum:
        return _sign(det)
    ax, ay, bx, by, cx, cy = map(Fraction, (ax, ay, bx, by, cx, cy))
    exact = (ax - cx) * (by - cy) - (ay - cy) * (bx - cx)
    return _sign(exact)


def incircle(ax, ay, bx, by, cx, cy, dx, dy):
    """Sign test: +1 iff d is strictly inside the circumcircle of ccw (a, b, c)."""
    adx = ax - dx
    bdx = bx - dx
    cdx = cx - dx
    ady = ay - dy
    bdy = by - dy
    cdy = cy - dy

    bdxcdy = bdx * cdy
    cdxbdy = cdx * bdy
    alift = adx * adx + ady * ady
    cdxady = cdx * ady
    adxcdy = adx * cdy
    blift = bdx * bdx + bdy * bdy
    adxbdy = adx * bdy
    bdxady = bdx * ady
    clift = cdx * cdx + cdy * cdy

    det = (
        alift * (bdxcdy - cdxbdy)
        + blift * (cdxady - adxcdy)
        + clift * (adxbdy - bdxady)
    )
    permanent = (
        (abs(bdxcdy) + abs(cdxbdy)) * alift
        + (abs(cdxady) + abs(adxcdy)) * blift
        + (abs(adxbdy) + abs(bdxady)) * clift
    )
    if det > _ICC_BOUND * permanent or -det > _ICC_BOUND * permanent:
        return _sign(det)

    ax, ay, bx, by, cx, cy, dx, dy = map(Fraction, (ax, ay, bx, by, cx, cy, dx, dy))
    adx, ady = ax - dx, ay - dy
    bdx, bdy = bx - dx, by - dy
    cdx, cdy = cx - dx, cy - dy
    exact = (
        (adx * adx + ady * ady) * (bdx * cdy - cdx * bdy)
        + (bdx * bdx + bdy * bdy) * (cdx * ady - adx * cdy)
        + (cdx * cdx + cdy * cdy) * (adx * bdy - bdx * ady)
    )
    return _sign(exact)


def _strictly_between(a, b, p):
    """p is collinear with segment ab; is it strictly inside the open segment?"""
    ax, ay = map(Fraction, a)
    bx, by = map(Fraction, b)
    px, py = map(Fraction, p)
    if (px - ax) * (bx - ax) + (py - ay) * (by - ay) <= 0:
        return False
    return (px - bx) * (ax - bx) + (py - by) * (ay - by) > 0


class _Mesh:
    """Triangle soup plus a directed-edge ownership map (twins always exist)."""

    def __init__(self):
        self.triangles = set()
        self.owner = {}

    def add(self, tri):
        self.triangles.add(tri)
        a, b, c = tri
        self.owner[(a, b)] = tri
        self.owner[(b, c)] = tri
        self.owner[(c, a)] = tri

    def remove(self, tri):
        self.triangles.remove(tri)
        a, b, c = tri
        del self.owner[(a, b)]
        del self.owner[(b, c)]
        del self.owner[(c, a)]


def _ghost_edge(tri):
    """Real vertices (t0, t1) of a ghost triangle; outside is left of t0->t1."""
    a, b, c = tri
    if a == GHOST:
        return b, c
    if b == GHOST:
        return c, a
    return a, b


def _conflicts(mesh, pts, tri, p):
    px, py = pts[p]
    if GHOST in tri:
        t0, t1 = _ghost_edge(tri)
        o = orient2d(pts[t0][0], pts[t0][1], pts[t1][0], pts[t1][1], px, py)
        if o != 0:
            return o > 0
        # collinear tie: only a point on the open hull segment joins the cavity
        return _strictly_between(pts[t0], pts[t1], pts[p])
    a, b, c = tri
    return (
        incircle(
            pts[a][0], pts[a][1], pts[b][0], pts[b][1], pts[c][0], pts[c][1], px, py
        )
        > 0
    )


def _insert(mesh, pts, p):
    cavity = {t for t in mesh.triangles if _conflicts(mesh, pts, t, p)}
    if not cavity:
        raise AssertionError(f"point {p} conflicts with no triangle (duplicate input?)")
    boundary = []
    for tri in cavity:
        a, b, c = tri
        for x, y in ((a, b), (b, c), (c, a)):
            if mesh.owner.get((y, x)) not in cavity:
                boundary.append((x, y))
    for tri in cavity:
        mesh.remove(tri)
    for x, y in boundary:
        mesh.add((p, x, y))


def triangulate(points):
    """Delaunay triangles of a sequence of (x, y) floats, as sorted id triples.

    Raises DegenerateInputError for n < 3 or fully collinear input and
    DuplicatePointError for coincident points.
    """
    pts = [(float(x), float(y)) for x, y in points]
    n = len(pts)
    if n < 3:
        raise DegenerateInputError(f"triangulation needs at least 3 points, got {n}")
    seen = {}
    for i, p in enumerate(pts):
        if p in seen:
            raise DuplicatePointError(seen[p], i)
        seen[p] = i

    apex = None
    for k in range(2, n):
        if orient2d(pts[0][0], pts[0][1], pts[1][0], pts[1][1], pts[k][0], pts[k][1]) != 0:
            apex = k
            break
    if apex is None:
        raise DegenerateInputError("all points are collinear")

    o = orient2d(pts[0][0], pts[0][1], pts[1][0], pts[1][1], pts[apex][0], pts[apex][1])
    first = (0, 1, apex) if o > 0 else (0, apex, 1)
    mesh = _Mesh()
    mesh.add(first)
    a, b, c = first
    mesh.add((b, a, GHOST))
    mesh.add((c, b, GHOST))
    mesh.add((a, c, GHOST))

    for p in range(2, n):
        if p != apex:
            _insert(mesh, pts, p)

    return sorted(
        tuple(sorted(tri)) for tri in mesh.triangles if GHOST not in tri
    )


def build_delaunay(space):
    """Delaunay triangulation of a 2-D Euclidean space as an undirected graph."""
    if space.kind != "euclidean":
        raise UnsupportedDimensionError(
            f"triangulation requires a Euclidean space, got {space.kind}"
        )
    if space.dim != 2:
        raise UnsupportedDimensionError(f"triangulation requires dim 2, got {space.dim}")
    tris = triangulate(space.points)
    edges = set()
    for a, b, c in tris:
        edges.add((a, b))
        edges.add((a, c))
        edges.add((b, c))
    return MetricGraph.from_edge_list(space, sorted(edges), directed=False)
