"""Graded subsemigroups of N^(d+1) and their level counts.

Points carry their grading in the last coordinate.  A semigroup is
known either by finitely many generators (levels are then computed by
dynamic programming over generator sums, rasterized into big-integer
bitmasks so million-point levels stay cheap), by explicitly materialized
levels, or by a counting rule supplied by the construction that built it.
"""

from __future__ import annotations

import math
from typing import Callable, Iterable, Mapping

import numpy as np

from .errors import EpsmultError, InsufficientDataError

# Refuse to rasterize level grids beyond this many cells (bits).
_RASTER_CELL_CAP = 200_000_000


def _as_point(p, length: int, what: str) -> tuple[int, ...]:
    t = tuple(int(x) for x in p)
    if len(t) != length:
        raise ValueError(f"{what} must have {length} coordinates, got {len(t)}")
    if any(x < 0 for x in t):
        raise ValueError(f"{what} coordinates must be nonnegative")
    return t


class Semigroup:
    """A graded subsemigroup of N^(d+1), queried level by level.

    S_n is the set of N^d points appearing at level n; S_0 is always the
    origin alone.  Instances are immutable apart from internal caches.
    """

    def __init__(
        self,
        dim: int,
        *,
        generators: Iterable[Iterable[int]] | None = None,
        levels: Mapping[int, Iterable[Iterable[int]]] | None = None,
        count_rule: Callable[[int], int] | None = None,
        level_rule: Callable[[int], Iterable[tuple[int, ...]]] | None = None,
    ):
        if dim < 1:
            raise ValueError("dimension must be positive")
        self.dim = int(dim)
        self.generators: tuple[tuple[int, ...], ...] | None = None
        self._levels: dict[int, frozenset[tuple[int, ...]]] = {}
        self._counts: dict[int, int] = {}
        self._count_rule = count_rule
        self._level_rule = level_rule
        if generators is not None:
            pts = sorted({_as_point(p, dim + 1, "generator") for p in generators})
            for p in pts:
                if p[-1] < 1:
                    raise ValueError(
                        f"generator {p} has level {p[-1]}; levels must be >= 1"
                    )
            self.generators = tuple(pts)
        if levels is not None:
            for i, pts in levels.items():
                i = int(i)
                if i < 0:
                    raise ValueError("levels must be indexed by nonnegative integers")
                frozen = frozenset(_as_point(p, dim, f"level-{i} point") for p in pts)
                if i == 0 and frozen != {(0,) * dim}:
                    raise ValueError("level 0 must be exactly the origin")
                self._levels[i] = frozen
        if generators is None and not self._levels and count_rule is None:
            raise ValueError("a semigroup needs generators, levels, or a rule")

    # -- constructors ------------------------------------------------------

    @classmethod
    def generated(cls, dim: int, points: Iterable[Iterable[int]]) -> "Semigroup":
        return cls(dim, generators=points)

    @classmethod
    def from_levels(
        cls, dim: int, levels: Mapping[int, Iterable[Iterable[int]]]
    ) -> "Semigroup":
        return cls(dim, levels=levels)

    # -- queries -----------------------------------------------------------

    @property
    def is_generated(self) -> bool:
        return self.generators is not None

    def materialized_levels(self) -> list[int]:
        return sorted(self._levels)

    def known_points(self) -> list[tuple[int, ...]]:
        """All points (v, i) this semigroup is known to contain, level >= 1."""
        if self.generators is not None:
            return list(self.generators)
        return [
            (*v, i)
            for i in self.materialized_levels()
            if i >= 1
            for v in sorted(self._levels[i])
        ]

    def count(self, n: int) -> int:
        n = int(n)
        if n < 0:
            raise ValueError("level must be nonnegative")
        if n == 0:
            return 1
        got = self._counts.get(n)
        if got is not None:
            return got
        if n in self._levels:
            value = len(self._levels[n])
        elif self.generators is not None:
            value = self._count_generated(n)
        elif self._count_rule is not None:
            value = int(self._count_rule(n))
        else:
            raise InsufficientDataError(
                f"level {n} is not materialized and no generating set or rule is known"
            )
        self._counts[n] = value
        return value

    def level(self, n: int) -> frozenset[tuple[int, ...]]:
        n = int(n)
        if n < 0:
            raise ValueError("level must be nonnegative")
        if n == 0:
            return frozenset({(0,) * self.dim})
        got = self._levels.get(n)
        if got is not None:
            return got
        if self.generators is not None:
            value = self._materialize_generated(n)
        elif self._level_rule is not None:
            value = frozenset(tuple(map(int, p)) for p in self._level_rule(n))
        else:
            raise InsufficientDataError(
                f"level {n} is not materialized and no generating set or rule is known"
            )
        self._levels[n] = value
        self._counts[n] = len(value)
        return value

    # -- generated-case machinery -------------------------------------

    def _gen_pairs(self) -> list[tuple[tuple[int, ...], int]]:
        assert self.generators is not None
        return [(g[:-1], g[-1]) for g in self.generators]

    def _count_generated(self, n: int) -> int:
        """Counts of every level up to n by rasterized subset sums.

        Level sets are encoded as bitmasks over a fixed grid big enough
        for level n; adding a generator vector is a single shift, and a
        level is the union over generators of shifted earlier levels.
        Only a window of max generator level masks is kept alive.
        """
        gens = self._gen_pairs()
        if not gens:
            return 0
        maxes = [max(v[a] for v, _ in gens) for a in range(self.dim)]
        dims = [n * m + 1 for m in maxes]
        cells = math.prod(dims)
        if cells > _RASTER_CELL_CAP:
            raise EpsmultError(
                f"level grid needs {cells} cells; raise the cap or count smaller levels"
            )
        strides = [0] * self.dim
        acc = 1
        for a in range(self.dim - 1, -1, -1):
            strides[a] = acc
            acc *= dims[a]
        shifts = [
            (sum(v[a] * strides[a] for a in range(self.dim)), lvl) for v, lvl in gens
        ]
        window = max(lvl for _, lvl in shifts)
        masks: dict[int, int] = {0: 1}  # level 0: origin bit
        for j in range(1, n + 1):
            m = 0
            for shift, lvl in shifts:
                prev = masks.get(j - lvl)
                if prev:
                    m |= prev << shift
            masks[j] = m
            self._counts.setdefault(j, m.bit_count())
            stale = j - window
            if stale >= 1:
                masks.pop(stale, None)
        return self._counts[n]

    def _materialize_generated(self, n: int) -> frozenset[tuple[int, ...]]:
        gens = self._gen_pairs()
        levels: list[set[tuple[int, ...]]] = [set() for _ in range(n + 1)]
        levels[0].add((0,) * self.dim)
        for j in range(1, n + 1):
            bucket = levels[j]
            for v, lvl in gens:
                if lvl > j:
                    continue
                for p in levels[j - lvl]:
                    bucket.add(tuple(a + b for a, b in zip(p, v)))
        for j in range(1, n + 1):
            self._levels.setdefault(j, frozenset(levels[j]))
            self._counts.setdefault(j, len(levels[j]))
        return self._levels[n]


def semigroup_count(sg: Semigroup, n: int) -> int:
    """#S_n, exactly."""
    return sg.count(n)


def k_fold_sum_count(sg: Semigroup, p: int, k: int) -> int:
    """Size of the k-fold sumset of level p, by iterated sums with dedup."""
    if p < 1:
        raise ValueError("p must be positive")
    if k < 1:
        raise ValueError("k must be positive")
    base = sorted(sg.level(p))
    if not base:
        return 0
    arr = np.asarray(base, dtype=np.int64)
    acc = arr
    for _ in range(k - 1):
        sums = (acc[:, None, :] + arr[None, :, :]).reshape(-1, sg.dim)
        acc = np.unique(sums, axis=0)
    return int(acc.shape[0])


def _lattice_spans_everything(points: list[tuple[int, ...]], width: int) -> bool:
    """Whether the integer row span of the points is all of Z^width.

    Triangularizes the point list with exact extended-gcd row operations;
    the span is full exactly when every column has a pivot and the pivot
    product is a unit.
    """
    basis: list[list[int] | None] = [None] * width
    for point in points:
        v = list(point)
        for col in range(width):
            if v[col] == 0:
                continue
            b = basis[col]
            if b is None:
                basis[col] = v
                break
            g = math.gcd(b[col], v[col])
            # unimodular 2x2 move: replace (b, v) keeping the row lattice
            s, t = _bezout(b[col], v[col])
            q_b, q_v = b[col] // g, v[col] // g
            combined = [s * b[i] + t * v[i] for i in range(width)]
            v = [q_b * v[i] - q_v * b[i] for i in range(width)]
            basis[col] = combined
        # fully reduced rows vanish: nothing to record
    if any(b is None for b in basis):
        return False
    det = 1
    for col, b in enumerate(basis):
        det *= b[col]  # type: ignore[index]
    return abs(det) == 1


def _bezout(a: int, b: int) -> tuple[int, int]:
    """(s, t) with s*a + t*b = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t


def check_cone_conditions(sg: Semigroup, beta: int) -> dict[str, bool]:
    """The two cone hypotheses on the known points of a semigroup.

    cone2: every known point (v, i) has coordinate sum of v at most
    beta*i, so the semigroup sits inside the beta-slope cone.  cone3: the
    known points generate all of Z^(d+1) as a group.  It is an error to
    ask with no points at all.
    """
    if beta < 1:
        raise ValueError("beta must be positive")
    points = sg.known_points()
    if not points:
        raise InsufficientDataError(
            "cone conditions need at least one known point"
        )
    d = sg.dim
    cone2 = all(sum(p[:-1]) <= beta * p[-1] for p in points)
    cone3 = _lattice_spans_everything(points, d + 1)
    return {"cone2": cone2, "cone3": cone3}


def semigroup_to_json_dict(sg: Semigroup) -> dict:
    """JSON form: generators when known, else the materialized levels."""
    if sg.generators is not None:
        return {"dim": sg.dim, "generators": [list(g) for g in sg.generators]}
    return {
        "dim": sg.dim,
        "levels": {
            str(i): sorted(list(v) for v in sg.level(i))
            for i in sg.materialized_levels()
            if i >= 1
        },
    }


def semigroup_from_json_dict(data: dict) -> Semigroup:
    if not isinstance(data, dict) or "dim" not in data:
        raise ValueError("semigroup JSON needs a 'dim' key")
    dim = int(data["dim"])
    if "generators" in data:
        return Semigroup.generated(dim, data["generators"])
    if "levels" in data:
        levels = {int(k): v for k, v in dict(data["levels"]).items()}
        return Semigroup.from_levels(dim, levels)
    raise ValueError("semigroup JSON needs 'generators' or 'levels'")
