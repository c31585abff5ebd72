"""Truncated value semigroups and volumes of their limit bodies.

For a graded family of monomial ideals, level i of the beta-truncated
value semigroup collects the exponent vectors of monomials in the i-th
ideal whose coordinate sum is at most beta*i.  Counting those levels and
normalizing by n^d estimates the volume of the limit body; the epsilon
multiplicity appears as d! times the volume difference between the
saturated and plain power families.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import DimensionMismatchError, InconclusiveError, ZeroIdealError
from .families import GradedFamilySpec
from .ideals import MonomialIdeal
from .semigroups import Semigroup
from .valuation import WeightVector, default_weights


def count_staircase_in_simplex(ideal: MonomialIdeal, cap: int) -> int:
    """Number of staircase points of the ideal with coordinate sum <= cap."""
    if cap < 0 or ideal.is_zero:
        return 0
    d = ideal.dim
    gens = sorted(ideal.generators)
    if d == 1:
        a = gens[0][0]
        return max(0, cap - a + 1)
    if d == 2:
        return _count_2d_in_simplex(gens, cap)

    def rec(j: int, budget: int, alive: list[tuple[int, ...]]) -> int:
        if not alive:
            return 0
        if j == d - 1:
            h = min(g[j] for g in alive)
            return max(0, budget - h + 1)
        total = 0
        for c in range(budget + 1):
            nxt = [g for g in alive if g[j] <= c]
            if nxt:
                total += rec(j + 1, budget - c, nxt)
        return total

    return rec(0, cap, gens)


def _count_2d_in_simplex(gens: list[tuple[int, ...]], cap: int) -> int:
    # height over column x is min{g_y : g_x <= x}; it only drops at
    # generator x-values, so sum the triangular columns segment by segment
    xs = sorted({0} | {g[0] for g in gens})
    total = 0
    for idx, x0 in enumerate(xs):
        if x0 > cap:
            break
        h = min((g[1] for g in gens if g[0] <= x0), default=None)
        if h is None:
            continue
        x1 = xs[idx + 1] - 1 if idx + 1 < len(xs) else cap
        right = min(x1, cap - h)
        if right < x0:
            continue
        width = right - x0 + 1
        # sum over x in [x0, right] of (cap - h + 1 - x)
        total += width * (cap - h + 1) - (x0 + right) * width // 2
    return total


def enumerate_staircase_in_simplex(
    ideal: MonomialIdeal, cap: int
) -> frozenset[tuple[int, ...]]:
    """The staircase points themselves, for materialized levels."""
    if cap < 0 or ideal.is_zero:
        return frozenset()
    d = ideal.dim
    gens = sorted(ideal.generators)
    out: set[tuple[int, ...]] = set()

    def rec(j: int, prefix: tuple[int, ...], budget: int, alive) -> None:
        if not alive:
            return
        if j == d - 1:
            h = min(g[j] for g in alive)
            for c in range(h, budget + 1):
                out.add(prefix + (c,))
            return
        for c in range(budget + 1):
            nxt = [g for g in alive if g[j] <= c]
            if nxt:
                rec(j + 1, prefix + (c,), budget - c, nxt)

    rec(0, (), cap, gens)
    return frozenset(out)


def gamma_beta(
    fam: GradedFamilySpec,
    beta: int,
    i_max: int,
    w: WeightVector | None = None,
) -> Semigroup:
    """The beta-truncated value semigroup of a graded monomial family.

    Level i holds the exponent vectors of monomials in fam(i) with
    coordinate sum at most beta*i.  Levels up to i_max are materialized;
    counts at any level stay available through a closed-form rule.  The
    weight vector fixes the value order; for monomial ideals the level
    sets do not depend on it (each monomial is its own value class).
    """
    if beta < 1:
        raise ValueError("beta must be a positive integer")
    if i_max < 1:
        raise ValueError("i_max must be a positive integer")
    if w is None:
        w = default_weights(fam.dim)
    if w.dim != fam.dim:
        raise DimensionMismatchError(
            f"weight vector has dimension {w.dim}, family has {fam.dim}"
        )
    if fam(1).is_zero:
        raise ZeroIdealError("the family is zero at level 1")
    levels = {
        i: enumerate_staircase_in_simplex(fam(i), beta * i)
        for i in range(1, i_max + 1)
    }
    return Semigroup(
        fam.dim,
        levels=levels,
        count_rule=lambda i: count_staircase_in_simplex(fam(i), beta * i),
        level_rule=lambda i: enumerate_staircase_in_simplex(fam(i), beta * i),
    )


# -- exact hull volumes in dimensions 1..3 ---------------------------------


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull_2d(points):
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _polygon_area(hull) -> Fraction:
    if len(hull) < 3:
        return Fraction(0)
    twice = Fraction(0)
    for (x0, y0), (x1, y1) in zip(hull, hull[1:] + hull[:1]):
        twice += x0 * y1 - x1 * y0
    return abs(twice) / 2


def _slice_area(points, z) -> Fraction:
    cut = [(Fraction(p[0]), Fraction(p[1])) for p in points if p[2] == z]
    for p, q in combinations(points, 2):
        if (p[2] - z) * (q[2] - z) < 0:
            t = Fraction(z - p[2], q[2] - p[2])
            cut.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return _polygon_area(_hull_2d(cut))


def _volume_3d(points) -> Fraction:
    zs = sorted({p[2] for p in points})
    if len(zs) < 2:
        return Fraction(0)
    total = Fraction(0)
    for z0, z1 in zip(zs, zs[1:]):
        mid = Fraction(z0 + z1, 2)
        a0 = _slice_area(points, z0)
        am = _slice_area(points, mid)
        a1 = _slice_area(points, z1)
        # the slice area is quadratic between consecutive vertex heights,
        # so Simpson's rule integrates the slab exactly
        total += Fraction(z1 - z0) * (a0 + 4 * am + a1) / 6
    return total


def hull_volume(points, dim: int) -> Fraction | None:
    """Exact volume of the convex hull for dim <= 3; None beyond that."""
    pts = [tuple(p) for p in points]
    if not pts:
        return Fraction(0)
    if any(len(p) != dim for p in pts):
        raise DimensionMismatchError("hull points disagree with the stated dimension")
    if dim == 1:
        vals = [p[0] for p in pts]
        return Fraction(max(vals) - min(vals))
    if dim == 2:
        return _polygon_area(_hull_2d(pts))
    if dim == 3:
        return _volume_3d(pts)
    return None


@dataclass(frozen=True)
class VolumeResult:
    """Volume data for the limit body of a graded semigroup."""

    exact: Fraction | None
    estimate: Fraction
    n_used: int
    count: int


def delta_volume(sg: Semigroup, n_probe: int) -> VolumeResult:
    """Count-based volume estimate, with the exact value when reachable.

    The exact volume is computed only when the semigroup is generated
    entirely in level 1 (the limit body is then the plain convex hull of
    the level-1 points) and the dimension is at most 3.
    """
    if n_probe < 1:
        raise ValueError("n_probe must be positive")
    count = sg.count(n_probe)
    estimate = Fraction(count, n_probe**sg.dim)
    exact = None
    if sg.generators is not None and all(g[-1] == 1 for g in sg.generators):
        exact = hull_volume([g[:-1] for g in sg.generators], sg.dim)
    return VolumeResult(exact, estimate, n_probe, count)


@dataclass(frozen=True)
class EpsilonViaVolumes:
    """d! times the truncated-semigroup volume difference at a probe level."""

    value: Fraction
    count_saturated: int
    count_powers: int
    beta: int
    n_probe: int


def epsilon_via_volumes(
    ideal: MonomialIdeal,
    beta: int,
    n_probe: int,
    w: WeightVector | None = None,
) -> EpsilonViaVolumes:
    """Volume-difference estimate of the epsilon multiplicity.

    Counts the beta-truncated value semigroups of the saturated-power and
    plain-power families at level n_probe and normalizes the difference
    by n_probe^d / d!.  Beta must already be in the stable regime for the
    number to mean anything; beta_stability probes for that.
    """
    if ideal.is_zero or ideal.is_unit:
        raise ZeroIdealError(
            "the volume comparison needs an ideal that is neither zero nor the ring"
        )
    if n_probe < 1:
        raise ValueError("n_probe must be positive")
    d = ideal.dim
    sat_semigroup = gamma_beta(
        GradedFamilySpec.saturated_powers(ideal), beta, i_max=1, w=w
    )
    pow_semigroup = gamma_beta(GradedFamilySpec.powers(ideal), beta, i_max=1, w=w)
    count_sat = sat_semigroup.count(n_probe)
    count_pow = pow_semigroup.count(n_probe)
    value = Fraction(math.factorial(d) * (count_sat - count_pow), n_probe**d)
    return EpsilonViaVolumes(value, count_sat, count_pow, beta, n_probe)


@dataclass(frozen=True)
class BetaStability:
    """Trace of the beta-doubling diagnostic."""

    history: tuple[tuple[int, Fraction], ...]  # (beta, value) pairs
    stabilized_beta: int
    value: Fraction


def beta_stability(
    ideal: MonomialIdeal,
    beta0: int,
    n_probe: int,
    tolerance: Fraction,
    w: WeightVector | None = None,
    max_doublings: int = 8,
) -> BetaStability:
    """Double beta until two successive volume differences agree.

    Stops at the first beta whose value is within the tolerance of the
    previous one; raises InconclusiveError when max_doublings betas never
    settle.  Agreement is evidence the truncation stopped biting, not a
    proof that beta dominates the theoretical threshold.
    """
    if beta0 < 1:
        raise ValueError("beta0 must be positive")
    tol = Fraction(tolerance)
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    beta = beta0
    prev = epsilon_via_volumes(ideal, beta, n_probe, w)
    history = [(beta, prev.value)]
    for _ in range(max_doublings):
        beta *= 2
        cur = epsilon_via_volumes(ideal, beta, n_probe, w)
        history.append((beta, cur.value))
        if abs(cur.value - prev.value) <= tol:
            return BetaStability(tuple(history), beta, cur.value)
        prev = cur
    raise InconclusiveError(
        f"volume difference did not stabilize within {max_doublings} doublings of beta",
        k_max=beta,
    )
