"""Harmonic counterexample family: step functions whose disagreement measure
forms a metric, chain graphs over them, and the exact verifier.

The universe for index i is {f_0, ..., f_i, f_inf} (ids 0..i, with id i+1
for f_inf). Every quantity is an exact Fraction; no floats anywhere.
The closed-form distance and the Lebesgue-measure oracle are implemented
independently so each validates the other.
"""

import csv
import math
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParameterError
from .metric_core import MetricSpace

#: Distinguished index of the constant-one function f_inf.
INFINITY = math.inf


def harmonic_number(k):
    """H_k = 1 + 1/2 + ... + 1/k as an exact Fraction (H_0 = 0)."""
    return sum((Fraction(1, j) for j in range(1, k + 1)), Fraction(0))


def max_safe_eps(i):
    """Largest eps accepted for family index i: 1/(10*(i+1)*(i+2))."""
    return Fraction(1, 10 * (i + 1) * (i + 2))


def default_eps(i):
    """Default perturbation for index i (the safe bound itself)."""
    return max_safe_eps(i)


def validate_eps(i, eps):
    """Check 0 < eps <= 1/(10*(i+1)*(i+2)); returns eps as a Fraction."""
    eps = Fraction(eps)
    bound = max_safe_eps(i)
    if not 0 < eps <= bound:
        raise ParameterError(
            f"eps must satisfy 0 < eps <= 1/(10*(i+1)*(i+2)) = {bound} for i={i}, got {eps}"
        )
    return eps


@dataclass(frozen=True)
class PiecewiseConstFn:
    """Step function on [0,1]: pieces (b_{j-1}, b_j] with constant values.

    The first piece also contains 0. Construction canonicalizes by merging
    adjacent pieces of equal value; breakpoints must start at 0, end at 1,
    and increase strictly.
    """

    breakpoints: tuple
    values: tuple

    def __post_init__(self):
        bps = tuple(Fraction(b) for b in self.breakpoints)
        vals = tuple(Fraction(v) for v in self.values)
        if len(bps) != len(vals) + 1:
            raise ValueError("need exactly one value per piece")
        if bps[0] != 0 or bps[-1] != 1:
            raise ValueError("breakpoints must span [0, 1]")
        if any(a >= b for a, b in zip(bps, bps[1:])):
            raise ValueError("breakpoints must increase strictly")
        merged_b, merged_v = [bps[0]], []
        for b, v in zip(bps[1:], vals):
            if merged_v and v == merged_v[-1]:
                merged_b[-1] = b
            else:
                merged_b.append(b)
                merged_v.append(v)
        merged_b[-1] = bps[-1]
        object.__setattr__(self, "breakpoints", tuple(merged_b))
        object.__setattr__(self, "values", tuple(merged_v))

    def value_at(self, x):
        x = Fraction(x)
        if not 0 <= x <= 1:
            raise ValueError(f"argument {x} outside [0, 1]")
        if x == 0:
            return self.values[0]
        return self.values[bisect_left(self.breakpoints, x) - 1]


def family_function(k, i_context, eps):
    """Materialize family member f_k for a universe capped at index i_context.

    f_0 is constant 0 and f_inf constant 1. For finite k >= 1 the function
    is 0 up to 1/2 - k*eps, then 1 up to 1/2, then steps down through
    1/2, 1/3, ..., 1/(k+1) at the breakpoints j/(j+1).
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise ParameterError(f"eps must be positive, got {eps}")
    if k == INFINITY:
        return PiecewiseConstFn((0, 1), (1,))
    k = int(k)
    if k < 0 or k > i_context:
        raise ParameterError(f"index {k} outside the universe 0..{i_context}")
    if k == 0:
        return PiecewiseConstFn((0, 1), (0,))
    if Fraction(1, 2) - k * eps <= 0:
        raise ParameterError(
            f"eps={eps} too large: piece bound 1/2 - {k}*eps is not positive"
        )
    bps = [Fraction(0), Fraction(1, 2) - k * eps, Fraction(1, 2)]
    bps += [Fraction(j, j + 1) for j in range(2, k + 1)]
    bps.append(Fraction(1))
    vals = [Fraction(0), Fraction(1)] + [Fraction(1, j + 1) for j in range(1, k + 1)]
    return PiecewiseConstFn(tuple(bps), tuple(vals))


def dx_closed_form(a, b, eps):
    """Family distance between indices a and b (ints or INFINITY), exactly.

    For finite x < y: 1/(x+2) + (y-x)*eps. Against f_inf: 1 - x*eps.
    """
    eps = Fraction(eps)
    if a == b:
        return Fraction(0)
    x, y = sorted((a, b), key=lambda t: (t == INFINITY, t))
    x = int(x)
    if y == INFINITY:
        return 1 - x * eps
    return Fraction(1, x + 2) + (int(y) - x) * eps


def dx_measure_oracle(f, g):
    """Measure of {x in [0,1] : f(x) != g(x)} by merging breakpoint lists.

    Independent of dx_closed_form; used to validate it.
    """
    pts = sorted(set(f.breakpoints) | set(g.breakpoints))
    total = Fraction(0)
    for lo, hi in zip(pts, pts[1:]):
        if f.value_at(hi) != g.value_at(hi):
            total += hi - lo
    return total


def family_edge_set(i):
    """Edges of the i-th family graph: the chain f_0..f_i plus {f_i, f_inf}."""
    edges = {(k, k + 1) for k in range(i)}
    edges.add((i, i + 1))
    return edges


class CounterexampleSpace(MetricSpace):
    """Exact-rational metric space over {f_0, ..., f_i, f_inf}."""

    kind = "counterexample"
    is_exact = True

    def __init__(self, i, eps=None):
        i = int(i)
        if i < 0:
            raise ParameterError(f"family index must be nonnegative, got {i}")
        eps = default_eps(i) if eps is None else validate_eps(i, eps)
        super().__init__(i + 2)
        self.i = i
        self.eps = eps

    @property
    def infinity_id(self):
        return self.i + 1

    def index_of(self, u):
        """Family index behind a point id (id i+1 maps to INFINITY)."""
        self._check_id(u)
        return INFINITY if u == self.infinity_id else int(u)

    def label(self, u):
        idx = self.index_of(u)
        return "f_inf" if idx == INFINITY else f"f_{idx}"

    def _dist(self, u, v):
        return dx_closed_form(self.index_of(u), self.index_of(v), self.eps)

    def distance_matrix(self):
        idx = [self.index_of(u) for u in range(self.n)]
        return [[dx_closed_form(a, b, self.eps) for b in idx] for a in idx]

    def payload(self, u):
        return family_function(self.index_of(u), self.i, self.eps)


def _frac_str(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def write_distance_table_csv(path, i, eps=None):
    """Dump the family's pairwise distances as a labeled CSV matrix."""
    space = CounterexampleSpace(i, eps)
    labels = [space.label(u) for u in range(space.n)]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow([""] + labels)
        for u in range(space.n):
            writer.writerow([labels[u]] + [_frac_str(space.dist(u, v)) for v in range(space.n)])


@dataclass(frozen=True)
class FamilyCheck:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class FamilyInstanceReport:
    i: int
    eps: Fraction
    checks: tuple

    @property
    def ok(self):
        return all(c.ok for c in self.checks)


@dataclass(frozen=True)
class FamilyReport:
    i_max: int
    instances: tuple

    @property
    def ok(self):
        return all(inst.ok for inst in self.instances)

    def to_json(self):
        return {
            "i_max": self.i_max,
            "all_pass": self.ok,
            "instances": [
                {
                    "i": inst.i,
                    "eps": _frac_str(inst.eps),
                    "pass": inst.ok,
                    "checks": {
                        c.name: {"ok": c.ok, "detail": c.detail} for c in inst.checks
                    },
                }
                for inst in self.instances
            ],
        }


def _check_oracle_agreement(space):
    fns = {u: space.payload(u) for u in range(space.n)}
    for u in range(space.n):
        for v in range(u + 1, space.n):
            closed = space.dist(u, v)
            measured = dx_measure_oracle(fns[u], fns[v])
            if closed != measured:
                return FamilyCheck(
                    "closed_form_vs_measure",
                    False,
                    f"pair ({space.label(u)},{space.label(v)}): "
                    f"closed form {closed} != measured {measured}",
                )
    return FamilyCheck("closed_form_vs_measure", True)


def verify_family(i_max, eps=None):
    """Run the five exactness checks for every instance i <= i_max.

    Per instance: (a) closed-form distance equals the measure oracle on all
    pairs; (b) metric axioms hold exactly; (c) the chain graph is proximal
    navigable; (d) the symmetrized half-space-proximal construction over the
    universe returns exactly the chain edges; (e) the f_0 -> f_inf shortest
    path ratio equals H_{i+1} exactly and the overall stretch is at least
    that (the harmonic divergence witness).

    A single eps applies to every instance when given (it must be inside the
    safe range of i_max); otherwise each instance uses its default.
    """
    i_max = int(i_max)
    if i_max < 0:
        raise ParameterError(f"i_max must be nonnegative, got {i_max}")
    if eps is not None:
        eps = validate_eps(i_max, eps)

    from .construct import build_counterexample_graph, build_hsp, symmetrize
    from .metric_core import check_metric_axioms
    from .navigate import is_pn_graph
    from .spanner import shortest_path_lengths, stretch

    instances = []
    for i in range(i_max + 1):
        eps_i = default_eps(i) if eps is None else eps
        graph, space = build_counterexample_graph(i, eps_i)
        checks = [_check_oracle_agreement(space)]

        violations = check_metric_axioms(space)
        checks.append(
            FamilyCheck(
                "metric_axioms",
                not violations,
                violations[0].describe() if violations else "",
            )
        )

        verdict = is_pn_graph(graph, space)
        checks.append(
            FamilyCheck(
                "proximal_navigation",
                verdict.is_pn,
                "" if verdict.is_pn else f"witness pair {verdict.witness}",
            )
        )

        hsp_edges = symmetrize(build_hsp(space)).undirected_edge_set()
        expected = family_edge_set(i)
        checks.append(
            FamilyCheck(
                "hsp_matches_family_edges",
                hsp_edges == expected,
                "" if hsp_edges == expected else f"got {sorted(hsp_edges)}",
            )
        )

        report = stretch(graph, space)
        h = harmonic_number(i + 1)
        d_graph = shortest_path_lengths(graph)
        witness_ratio = d_graph[0][space.infinity_id] / space.dist(0, space.infinity_id)
        ok = witness_ratio == h and report.stretch >= h
        checks.append(
            FamilyCheck(
                "harmonic_divergence_witness",
                ok,
                f"f_0->f_inf ratio {witness_ratio}, H_{i + 1} = {h}, "
                f"stretch {report.stretch}",
            )
        )

        instances.append(FamilyInstanceReport(i, eps_i, tuple(checks)))
    return FamilyReport(i_max, tuple(instances))
