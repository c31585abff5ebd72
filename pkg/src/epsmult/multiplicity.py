"""Multiplicities from stabilized finite differences of length sequences.

Two normalized leading coefficients are computed exactly: the relative
multiplicity of a pair of ideals (inner inside outer, read off the
lengths of outer^k/inner^k) and the epsilon sequence of a single ideal
(lengths of saturation(I^n)/I^n).  A convergence table ties the two
together, and two checkers probe the containment and truncation lemmas
the theory rests on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .colength import colength, difference_max_degree, length_sequence
from .errors import EpsmultError, InconclusiveError, InsufficientDataError, ZeroIdealError
from .families import GradedFamilySpec
from .ideals import MonomialIdeal, maximal_ideal


@dataclass(frozen=True)
class AmaoResult:
    """A stabilized d-th forward difference of a length sequence."""

    value: int
    stabilized_at: int  # 1-based index where the constant tail begins
    window: int  # number of consecutive equal values observed

    def __post_init__(self):
        if self.value < 0:
            raise EpsmultError(
                "stabilized leading difference is negative; "
                "the input is not a length sequence of nested ideal powers"
            )


@dataclass(frozen=True)
class EpsilonEstimate:
    """Exact rationals e_n = d! * length_n / n^d for n = 1..n_max."""

    sequence: tuple[Fraction, ...]
    lengths: tuple[int, ...]
    n_max: int

    def last(self) -> Fraction:
        return self.sequence[-1]


@dataclass(frozen=True)
class TheoremARow:
    m: int
    a_value: int | None
    ratio: Fraction | None
    stabilized_at: int | None
    status: str  # "ok" or "inconclusive"


@dataclass(frozen=True)
class ContainmentCheck:
    ok: bool
    first_failure: int | None = None


@dataclass(frozen=True)
class SwansonResult:
    """Least truncation constant passing on a finite (m, k) grid."""

    c: int | None  # None when nothing passes up to c_max
    c_max: int
    mk_bound: int
    per_pair: tuple[tuple[int, int, int], ...]  # (m, k, least c for that pair)
    note: str = "verified on grid only"


def leading_difference(seq: list[int], d: int, window: int = 3) -> AmaoResult:
    """Stabilized d-th forward difference of an integer sequence.

    For a sequence that eventually agrees with a degree-<=d polynomial
    this is d! times the leading coefficient.  Raises InconclusiveError
    unless the final `window` differences agree exactly.
    """
    if d < 1:
        raise ValueError("difference order must be positive")
    if window < 1:
        raise ValueError("stabilization window must be positive")
    if len(seq) < d + window:
        raise InsufficientDataError(
            f"need at least {d + window} terms to take {d} differences "
            f"with a window of {window}; got {len(seq)}"
        )
    diffs = [int(v) for v in seq]
    for _ in range(d):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    value = diffs[-1]
    start = len(diffs)
    while start > 0 and diffs[start - 1] == value:
        start -= 1
    observed = len(diffs) - start
    if observed < window:
        raise InconclusiveError(
            f"d-th differences did not stabilize: last {observed} equal, "
            f"window of {window} required",
            k_max=len(seq),
        )
    return AmaoResult(value=value, stabilized_at=start + 1, window=observed)


def amao(
    inner: MonomialIdeal,
    outer: MonomialIdeal,
    k_max: int = 20,
    window: int = 3,
) -> AmaoResult:
    """Normalized leading coefficient of k -> length(outer^k / inner^k).

    Requires inner inside outer with finite colength; the result is a
    nonnegative integer once the d-th differences stabilize.
    """
    inner._check_same_dim(outer)
    if not inner.is_subideal_of(outer):
        raise EpsmultError("inner not contained in outer")
    fam_in = GradedFamilySpec.powers(inner)
    fam_out = GradedFamilySpec.powers(outer)
    seq = length_sequence(fam_in, fam_out, k_max)
    return leading_difference(seq, inner.dim, window=window)


def epsilon_sequence(ideal: MonomialIdeal, n_max: int) -> EpsilonEstimate:
    """e_n = d! * length(saturation(I^n)/I^n) / n^d for n = 1..n_max."""
    if ideal.is_zero or ideal.is_unit:
        raise ZeroIdealError("epsilon sequence needs an ideal that is neither zero nor the ring")
    if n_max < 1:
        raise ValueError("n_max must be positive")
    d = ideal.dim
    fact = math.factorial(d)
    powers = GradedFamilySpec.powers(ideal)
    lengths: list[int] = []
    values: list[Fraction] = []
    for n in range(1, n_max + 1):
        p = powers(n)
        ln = colength(p, p.saturate())
        lengths.append(ln)
        values.append(Fraction(fact * ln, n**d))
    return EpsilonEstimate(tuple(values), tuple(lengths), n_max)


def theorem_a_table(
    ideal: MonomialIdeal,
    m_max: int = 6,
    k_max: int = 20,
    window: int = 3,
) -> list[TheoremARow]:
    """Rows (m, a_m, a_m/m^d) for the multiplicity convergence table.

    a_m is the relative multiplicity of I^m inside its saturation.  Rows
    whose difference sequence fails to stabilize are marked inconclusive
    rather than dropped, so the table shape is always m_max rows.
    """
    if ideal.is_zero or ideal.is_unit:
        raise ZeroIdealError("the convergence table needs an ideal that is neither zero nor the ring")
    d = ideal.dim
    powers = GradedFamilySpec.powers(ideal)
    rows: list[TheoremARow] = []
    for m in range(1, m_max + 1):
        base = powers(m)
        try:
            res = amao(base, base.saturate(), k_max=k_max, window=window)
        except InconclusiveError:
            rows.append(TheoremARow(m, None, None, None, "inconclusive"))
            continue
        rows.append(
            TheoremARow(m, res.value, Fraction(res.value, m**d), res.stabilized_at, "ok")
        )
    return rows


def check_sat_power_containment(ideal: MonomialIdeal, i_max: int) -> ContainmentCheck:
    """Verify saturate(I)^i lies inside saturate(I^i) for i = 1..i_max."""
    sat_powers = GradedFamilySpec.powers(ideal.saturate())
    powers = GradedFamilySpec.powers(ideal)
    for i in range(1, int(i_max) + 1):
        if not sat_powers(i).is_subideal_of(powers(i).saturate()):
            return ContainmentCheck(False, i)
    return ContainmentCheck(True, None)


def swanson_truncation_agrees(ideal: MonomialIdeal, m: int, k: int, c: int) -> bool:
    """Literal truncation test at a single (m, k, c).

    Compares I^(mk) and (saturation(I^m))^k after intersecting both with
    the (c*m*k)-th power of the maximal ideal.  Exponentially more work
    than the degree-bound route in swanson_c_search; kept as the direct
    transcription of the statement being tested.
    """
    lhs = ideal.power(m * k)
    rhs = ideal.power(m).saturate().power(k)
    cutoff = maximal_ideal(ideal.dim).power(c * m * k)
    return lhs.intersect(cutoff) == rhs.intersect(cutoff)


def swanson_c_search(
    ideal: MonomialIdeal,
    c_max: int = 8,
    mk_bound: int = 12,
) -> SwansonResult:
    """Least c with I^(mk) and (saturation(I^m))^k agreeing past degree c*m*k.

    Checks every pair (m, k) with m*k <= mk_bound.  For each pair the two
    ideals differ in finitely many monomials, so the least passing c is
    floor(D/(m*k)) + 1 with D the largest degree in the difference; the
    grid answer is the max over pairs, or None if it exceeds c_max.  This
    falsifies or corroborates on a grid --- it proves nothing beyond it.
    """
    if ideal.is_zero or ideal.is_unit:
        raise ZeroIdealError("the truncation search needs an ideal that is neither zero nor the ring")
    powers = GradedFamilySpec.powers(ideal)
    per_pair: list[tuple[int, int, int]] = []
    worst = 1
    for m in range(1, mk_bound + 1):
        sat_fam = GradedFamilySpec.power_then_saturate_power(ideal, m)
        for k in range(1, mk_bound // m + 1):
            small = powers(m * k)
            big = sat_fam(k)
            deepest = difference_max_degree(small, big)
            c_pair = 1 if deepest is None else deepest // (m * k) + 1
            per_pair.append((m, k, c_pair))
            worst = max(worst, c_pair)
    return SwansonResult(
        c=worst if worst <= c_max else None,
        c_max=c_max,
        mk_bound=mk_bound,
        per_pair=tuple(per_pair),
    )
