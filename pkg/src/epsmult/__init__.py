"""Exact epsilon and Amao multiplicities of monomial ideals.

Everything is integer or rational arithmetic: staircase ideal algebra,
exact quotient lengths, stabilized finite differences, truncated value
semigroups, and convex-hull volumes, with a CLI for deterministic
reports.
"""

from .colength import (
    colength,
    difference_max_degree,
    is_finite_colength,
    length_sequence,
)
from .corpus import corpus, random_ideal
from .errors import (
    DimensionMismatchError,
    EpsmultError,
    IdealSyntaxError,
    InconclusiveError,
    InfiniteColengthError,
    InsufficientDataError,
    ZeroIdealError,
)
from .families import GradedFamilySpec
from .ideals import (
    MonomialIdeal,
    from_json_dict,
    maximal_ideal,
    minimalize,
    to_json_dict,
    unit_ideal,
    zero_ideal,
)
from .multiplicity import (
    AmaoResult,
    ContainmentCheck,
    EpsilonEstimate,
    SwansonResult,
    TheoremARow,
    amao,
    check_sat_power_containment,
    epsilon_sequence,
    leading_difference,
    swanson_c_search,
    swanson_truncation_agrees,
    theorem_a_table,
)
from .okounkov import (
    BetaStability,
    EpsilonViaVolumes,
    VolumeResult,
    beta_stability,
    count_staircase_in_simplex,
    delta_volume,
    enumerate_staircase_in_simplex,
    epsilon_via_volumes,
    gamma_beta,
    hull_volume,
)
from .semigroups import (
    Semigroup,
    check_cone_conditions,
    k_fold_sum_count,
    semigroup_count,
    semigroup_from_json_dict,
    semigroup_to_json_dict,
)
from .valuation import (
    ValuationCut,
    Value,
    WeightVector,
    default_weights,
    nu_value,
    nu_value_of_support,
    phi,
    psi,
)

__version__ = "0.1.0"

__all__ = [
    "AmaoResult",
    "BetaStability",
    "ContainmentCheck",
    "DimensionMismatchError",
    "EpsilonEstimate",
    "EpsilonViaVolumes",
    "EpsmultError",
    "GradedFamilySpec",
    "IdealSyntaxError",
    "InconclusiveError",
    "InfiniteColengthError",
    "InsufficientDataError",
    "MonomialIdeal",
    "Semigroup",
    "SwansonResult",
    "TheoremARow",
    "ValuationCut",
    "Value",
    "VolumeResult",
    "WeightVector",
    "ZeroIdealError",
    "amao",
    "beta_stability",
    "check_cone_conditions",
    "check_sat_power_containment",
    "colength",
    "corpus",
    "count_staircase_in_simplex",
    "delta_volume",
    "default_weights",
    "difference_max_degree",
    "enumerate_staircase_in_simplex",
    "epsilon_sequence",
    "epsilon_via_volumes",
    "from_json_dict",
    "gamma_beta",
    "hull_volume",
    "is_finite_colength",
    "k_fold_sum_count",
    "leading_difference",
    "length_sequence",
    "maximal_ideal",
    "minimalize",
    "nu_value",
    "nu_value_of_support",
    "phi",
    "psi",
    "random_ideal",
    "semigroup_count",
    "semigroup_from_json_dict",
    "semigroup_to_json_dict",
    "swanson_c_search",
    "swanson_truncation_agrees",
    "theorem_a_table",
    "to_json_dict",
    "unit_ideal",
    "zero_ideal",
]
