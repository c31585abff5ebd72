import pytest

from epsmult import GradedFamilySpec, MonomialIdeal, ZeroIdealError, corpus, unit_ideal

X2_XY = MonomialIdeal(2, [(2, 0), (1, 1)])


def test_level_zero_is_the_ring():
    for fam in (
        GradedFamilySpec.powers(X2_XY),
        GradedFamilySpec.saturated_powers(X2_XY),
        GradedFamilySpec.power_then_saturate_power(X2_XY, 2),
        GradedFamilySpec.fixed_power_family(X2_XY, 3),
        GradedFamilySpec.constant_unit(2),
    ):
        assert fam(0) == unit_ideal(2)


def test_powers_family():
    fam = GradedFamilySpec.powers(X2_XY)
    assert fam(1) == X2_XY
    assert fam(4) == X2_XY.power(4)


def test_saturated_powers_family():
    fam = GradedFamilySpec.saturated_powers(X2_XY)
    assert fam(1).generators == ((1, 0),)
    assert fam(3).generators == ((3, 0),)


def test_power_then_saturate_power():
    fam = GradedFamilySpec.power_then_saturate_power(X2_XY, 2)
    assert fam(1) == X2_XY.power(2).saturate()
    assert fam(3) == X2_XY.power(2).saturate().power(3)


def test_fixed_power_family():
    fam = GradedFamilySpec.fixed_power_family(X2_XY, 3)
    assert fam(2) == X2_XY.power(6)


def test_graded_law_on_corpus():
    # I_a * I_b is contained in I_(a+b)
    for base in corpus(41, 12):
        for fam in (
            GradedFamilySpec.powers(base),
            GradedFamilySpec.saturated_powers(base),
            GradedFamilySpec.power_then_saturate_power(base, 2),
        ):
            for a, b in ((1, 1), (1, 2), (2, 3)):
                assert fam(a).product(fam(b)).is_subideal_of(fam(a + b))


def test_results_are_cached():
    fam = GradedFamilySpec.powers(X2_XY)
    assert fam(5) is fam(5)


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        GradedFamilySpec.powers(X2_XY)(-1)


def test_unknown_kind_rejected():
    with pytest.raises(ValueError):
        GradedFamilySpec("cubes", 2, X2_XY)


def test_base_required():
    with pytest.raises(ValueError):
        GradedFamilySpec("powers", 2)
    with pytest.raises(ValueError):
        GradedFamilySpec("fixed_power_family", 2, X2_XY)


def test_require_proper_base():
    assert GradedFamilySpec.powers(X2_XY).require_proper_base() == X2_XY
    with pytest.raises(ZeroIdealError):
        GradedFamilySpec.powers(unit_ideal(2)).require_proper_base()
    with pytest.raises(ZeroIdealError):
        GradedFamilySpec.constant_unit(2).require_proper_base()
