"""Graded families of monomial ideals, indexed by a nonnegative integer.

A family is a rule n -> I_n with I_0 the unit ideal and I_a * I_b inside
I_(a+b).  The five rules used throughout the package are provided as
named constructors; instances are immutable, hashable, and cache the
ideals they have produced.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ZeroIdealError
from .ideals import MonomialIdeal, unit_ideal

_KINDS = (
    "powers",
    "saturated_powers",
    "power_then_saturate_power",
    "fixed_power_family",
    "constant_unit",
)


@dataclass(frozen=True)
class GradedFamilySpec:
    """A named graded family rule over a base monomial ideal."""

    kind: str
    dim: int
    base: MonomialIdeal | None = None
    m: int | None = None
    _cache: dict = field(
        default_factory=dict, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind != "constant_unit" and self.base is None:
            raise ValueError(f"family kind {self.kind!r} needs a base ideal")
        if self.kind in ("power_then_saturate_power", "fixed_power_family"):
            if self.m is None or self.m < 1:
                raise ValueError(f"family kind {self.kind!r} needs a positive m")

    # -- constructors -----------------------------------------------------

    @classmethod
    def powers(cls, base: MonomialIdeal) -> "GradedFamilySpec":
        """n -> I^n."""
        return cls("powers", base.dim, base)

    @classmethod
    def saturated_powers(cls, base: MonomialIdeal) -> "GradedFamilySpec":
        """n -> saturation of I^n."""
        return cls("saturated_powers", base.dim, base)

    @classmethod
    def power_then_saturate_power(
        cls, base: MonomialIdeal, m: int
    ) -> "GradedFamilySpec":
        """k -> (saturation of I^m)^k, for a fixed m."""
        return cls("power_then_saturate_power", base.dim, base, int(m))

    @classmethod
    def fixed_power_family(cls, base: MonomialIdeal, m: int) -> "GradedFamilySpec":
        """k -> I^(m*k), for a fixed m."""
        return cls("fixed_power_family", base.dim, base, int(m))

    @classmethod
    def constant_unit(cls, dim: int) -> "GradedFamilySpec":
        """n -> unit ideal (the whole ring)."""
        return cls("constant_unit", dim)

    # -- evaluation --------------------------------------------------------

    def __call__(self, n: int) -> MonomialIdeal:
        n = int(n)
        if n < 0:
            raise ValueError("family index must be nonnegative")
        if n == 0:
            return unit_ideal(self.dim)
        got = self._cache.get(n)
        if got is None:
            got = self._compute(n)
            self._cache[n] = got
        return got

    def _compute(self, n: int) -> MonomialIdeal:
        if self.kind == "constant_unit":
            return unit_ideal(self.dim)
        base = self.base
        assert base is not None
        if self.kind == "powers":
            # incremental product reuses the cached previous power
            return self(n - 1).product(base) if n > 1 else base
        if self.kind == "saturated_powers":
            return self._powers_family()(n).saturate()
        if self.kind == "power_then_saturate_power":
            sat_m = self._saturated_base()
            return self(n - 1).product(sat_m) if n > 1 else sat_m
        if self.kind == "fixed_power_family":
            return self._powers_family()(self.m * n)
        raise AssertionError(self.kind)

    def _powers_family(self) -> "GradedFamilySpec":
        got = self._cache.get("powers")
        if got is None:
            assert self.base is not None
            got = GradedFamilySpec.powers(self.base)
            self._cache["powers"] = got
        return got

    def _saturated_base(self) -> MonomialIdeal:
        got = self._cache.get("sat_base")
        if got is None:
            assert self.base is not None and self.m is not None
            got = self.base.power(self.m).saturate()
            self._cache["sat_base"] = got
        return got

    def require_proper_base(self) -> MonomialIdeal:
        """The base ideal, which must be neither zero nor the unit ideal."""
        if self.base is None or self.base.is_zero or self.base.is_unit:
            raise ZeroIdealError(
                "this computation needs a base ideal that is neither zero nor the ring"
            )
        return self.base
