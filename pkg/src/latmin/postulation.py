"""Suffix-sum box combinatorics and the linear-flag section count.

The box with parameters (t_1, ..., t_d) is the set of nonnegative vectors
whose suffix sums x_i + ... + x_d stay below t_i.  Its lattice point count
equals the dimension of the space of degree-q forms with prescribed
vanishing along a full flag of linear subspaces, which is what flag_h0
computes.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations

from .core import rank_rational, rat_str, solve_linear, vdot
from .errors import NegativeParameter
from .polytope import convex_hull, volume
from .report import TheoremReport, verdict


def _as_params(t) -> tuple:
    params = tuple(Fraction(x) for x in t)
    if not params:
        raise NegativeParameter("need at least one parameter")
    if any(x < 0 for x in params):
        raise NegativeParameter(f"negative box parameter in {params}")
    return params


def box_count(t) -> int:
    """Number of lattice points of the suffix-sum box.

    Exhaustive enumeration; each coordinate is capped by the running prefix
    minimum of the parameters minus the suffix sum chosen so far, which is
    exactly the feasible range.
    """
    params = _as_params(t)
    d = len(params)
    prefix_min = []
    m = None
    for x in params:
        m = x if m is None else min(m, x)
        prefix_min.append(m)

    def count(i: int, s: int) -> int:
        # coordinates x_{i+1}..x_d already chosen with sum s
        hi = math.floor(prefix_min[i] - s)
        if hi < 0:
            return 0
        if i == 0:
            return hi + 1
        return sum(count(i - 1, s + x) for x in range(hi + 1))

    return count(d - 1, 0)


def _box_vertices(params) -> list:
    """Vertex enumeration of the box from its 2d halfspaces."""
    d = len(params)
    ineqs = []
    for i in range(d):
        ineqs.append((tuple(-1 if j == i else 0 for j in range(d)), Fraction(0)))
    for i in range(d):
        ineqs.append((tuple(1 if j >= i else 0 for j in range(d)), params[i]))
    candidates = set()
    for subset in combinations(range(len(ineqs)), d):
        rows = [ineqs[i][0] for i in subset]
        if rank_rational(rows) < d:
            continue
        rhs = [ineqs[i][1] for i in subset]
        x = solve_linear(rows, rhs)
        if x is None:
            continue
        if all(vdot(a, x) <= b for a, b in ineqs):
            candidates.add(tuple(x))
    return sorted(candidates)


def box_volume(t) -> Fraction:
    """Exact volume of the suffix-sum box via hull triangulation.

    When the parameters are sorted nonincreasing and d <= 3, the closed form
    is evaluated as well and must agree.
    """
    params = _as_params(t)
    d = len(params)
    verts = _box_vertices(params)
    vol = volume(convex_hull(verts, d))
    if d <= 3 and all(a >= b for a, b in zip(params, params[1:])):
        closed = box_volume_closed_form(params)
        assert closed == vol, f"closed form {closed} != triangulated {vol}"
    return vol


def box_volume_closed_form(t) -> Fraction:
    """Closed-form volume for sorted parameters, d <= 3."""
    params = _as_params(t)
    if any(a < b for a, b in zip(params, params[1:])):
        raise ValueError("closed form requires nonincreasing parameters")
    if len(params) == 1:
        return params[0]
    if len(params) == 2:
        t1, t2 = params
        return (2 * t1 * t2 - t2 ** 2) / 2
    if len(params) == 3:
        t1, t2, t3 = params
        return (6 * t1 * t2 * t3 - 3 * t3 ** 2 * t1 - 3 * t3 * t2 ** 2 + t3 ** 3) / 6
    raise ValueError("closed form only available for d <= 3")


def check_vol_bound(t) -> TheoremReport:
    """Check vol(box) <= prod(t_i) exactly."""
    params = _as_params(t)
    vol = box_volume(params)
    bound = Fraction(1)
    for x in params:
        bound *= x
    ok = vol <= bound
    return TheoremReport(
        theorem="box_volume_bound",
        instance={"t": [rat_str(x) for x in params]},
        quantities={"vol": rat_str(vol), "bound": rat_str(bound)},
        verdict=verdict(ok),
        witnesses={},
    )


def flag_h0(d: int, p, q: int) -> int:
    """Sections of degree q on projective d-space vanishing to order p_i
    along the i-th member of a full linear flag.

    Counts exponent vectors alpha in N^{d+1} of total degree q with suffix
    sums alpha_i + ... + alpha_d <= q - p_i; zero as soon as some q - p_i is
    negative.
    """
    p = tuple(int(x) for x in p)
    if len(p) != d:
        raise ValueError(f"expected {d} multiplicities, got {len(p)}")
    if d < 1 or q < 0 or any(x < 0 for x in p):
        raise ValueError("d >= 1, q >= 0 and nonnegative multiplicities required")
    caps = [q - pi for pi in p]
    if any(c < 0 for c in caps):
        return 0
    return box_count(caps)
