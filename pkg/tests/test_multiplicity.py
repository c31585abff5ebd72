from fractions import Fraction

import pytest

from epsmult import (
    AmaoResult,
    EpsmultError,
    InconclusiveError,
    InsufficientDataError,
    MonomialIdeal,
    TheoremARow,
    ZeroIdealError,
    amao,
    check_sat_power_containment,
    corpus,
    epsilon_sequence,
    leading_difference,
    swanson_c_search,
    swanson_truncation_agrees,
    theorem_a_table,
    unit_ideal,
)
from epsmult import multiplicity as mult_mod

X2_XY = MonomialIdeal(2, [(2, 0), (1, 1)])
M2_SQUARED = MonomialIdeal(2, [(1, 0), (0, 1)]).power(2)
PRIME_3D = MonomialIdeal(3, [(1, 0, 0), (0, 1, 0)])


class TestLeadingDifference:
    def test_triangular_numbers(self):
        seq = [n * (n + 1) // 2 for n in range(1, 9)]
        res = leading_difference(seq, 2)
        assert res.value == 1
        assert res.stabilized_at == 1
        assert res.window == 6

    def test_quadratic_with_linear_term(self):
        seq = [2 * n * n + n for n in range(1, 9)]
        assert leading_difference(seq, 2).value == 4

    def test_lower_degree_vanishes(self):
        seq = [3 + 5 * n for n in range(1, 8)]
        assert leading_difference(seq, 2).value == 0

    def test_late_stabilization_is_reported(self):
        # quadratic only from the third term on
        seq = [7, 1, 6, 10, 14, 18, 22]
        res = leading_difference(seq, 1)
        assert res.value == 4
        assert res.stabilized_at == 3

    def test_insufficient_data(self):
        with pytest.raises(InsufficientDataError):
            leading_difference([1, 2, 3, 4], 2, window=3)

    def test_inconclusive_carries_k_max(self):
        seq = [2**n for n in range(8)]
        with pytest.raises(InconclusiveError) as info:
            leading_difference(seq, 1)
        assert info.value.k_max == 8

    def test_degenerate_parameters(self):
        with pytest.raises(ValueError):
            leading_difference([1, 2, 3], 0)
        with pytest.raises(ValueError):
            leading_difference([1, 2, 3], 1, window=0)

    def test_negative_leading_value_rejected(self):
        with pytest.raises(EpsmultError, match="negative"):
            leading_difference([20, 15, 10, 5, 0], 1)


class TestAmao:
    def test_equal_ideals_give_zero(self):
        assert amao(X2_XY, X2_XY, 8).value == 0

    def test_worked_example(self):
        res = amao(X2_XY, X2_XY.saturate(), 8)
        assert res.value == 1
        assert res.stabilized_at == 1

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_hilbert_samuel_degeneration(self, m):
        assert amao(M2_SQUARED.power(m), unit_ideal(2), 8).value == 4 * m * m

    def test_containment_required(self):
        with pytest.raises(EpsmultError, match="inner not contained in outer"):
            amao(MonomialIdeal(2, [(1, 0)]), MonomialIdeal(2, [(0, 1)]), 8)

    def test_result_is_nonnegative_on_corpus(self):
        for I in corpus(51, 10):
            res = amao(I, I.saturate(), 8)
            assert res.value >= 0


class TestEpsilonSequence:
    def test_worked_example(self):
        est = epsilon_sequence(X2_XY, 8)
        assert est.lengths == tuple(n * (n + 1) // 2 for n in range(1, 9))
        assert est.sequence == tuple(Fraction(n + 1, n) for n in range(1, 9))
        assert est.last() == Fraction(9, 8)

    def test_saturated_prime_is_identically_zero(self):
        est = epsilon_sequence(PRIME_3D, 6)
        assert set(est.sequence) == {Fraction(0)}

    def test_hilbert_samuel_degeneration(self):
        est = epsilon_sequence(M2_SQUARED, 8)
        assert est.sequence == tuple(4 + Fraction(2, n) for n in range(1, 9))

    def test_zero_and_unit_rejected(self):
        with pytest.raises(ZeroIdealError):
            epsilon_sequence(unit_ideal(2), 4)
        with pytest.raises(ZeroIdealError):
            epsilon_sequence(MonomialIdeal(2, []), 4)

    def test_bad_n_max(self):
        with pytest.raises(ValueError):
            epsilon_sequence(X2_XY, 0)


class TestTheoremATable:
    def test_worked_example(self):
        rows = theorem_a_table(X2_XY, m_max=6, k_max=12)
        assert [(r.m, r.a_value, r.ratio) for r in rows] == [
            (m, m * m, Fraction(1)) for m in range(1, 7)
        ]
        assert all(r.status == "ok" for r in rows)

    def test_saturated_prime_rows_vanish(self):
        rows = theorem_a_table(PRIME_3D, m_max=4, k_max=10)
        assert [(r.a_value, r.ratio) for r in rows] == [(0, Fraction(0))] * 4

    def test_hilbert_samuel_rows(self):
        rows = theorem_a_table(M2_SQUARED, m_max=3, k_max=10)
        assert [(r.m, r.a_value, r.ratio) for r in rows] == [
            (m, 4 * m * m, Fraction(4)) for m in range(1, 4)
        ]

    def test_inconclusive_rows_are_marked_not_dropped(self, monkeypatch):
        real_amao = mult_mod.amao

        def flaky(inner, outer, k_max=20, window=3):
            if inner == X2_XY.power(2):
                raise InconclusiveError("synthetic", k_max=k_max)
            return real_amao(inner, outer, k_max=k_max, window=window)

        monkeypatch.setattr(mult_mod, "amao", flaky)
        rows = theorem_a_table(X2_XY, m_max=3, k_max=10)
        assert [r.status for r in rows] == ["ok", "inconclusive", "ok"]
        assert rows[1] == TheoremARow(2, None, None, None, "inconclusive")

    def test_zero_and_unit_rejected(self):
        with pytest.raises(ZeroIdealError):
            theorem_a_table(unit_ideal(2))


class TestContainmentLemma:
    def test_worked_example(self):
        res = check_sat_power_containment(X2_XY, 4)
        assert res.ok and res.first_failure is None

    def test_corpus_never_fails(self):
        for I in corpus(52, 25):
            assert check_sat_power_containment(I, 4).ok


class TestSwanson:
    def test_literal_truncation_worked_example(self):
        assert swanson_truncation_agrees(X2_XY, 1, 1, 2)
        assert not swanson_truncation_agrees(X2_XY, 1, 1, 1)
        assert swanson_truncation_agrees(X2_XY, 2, 3, 2)

    def test_grid_search_golden(self):
        res = swanson_c_search(X2_XY, c_max=8, mk_bound=12)
        assert res.c == 2
        assert res.note == "verified on grid only"
        assert dict(((m, k), c) for m, k, c in res.per_pair)[(1, 1)] == 2

    def test_grid_pairs_cover_the_bound(self):
        res = swanson_c_search(X2_XY, c_max=8, mk_bound=6)
        assert sorted((m, k) for m, k, _ in res.per_pair) == sorted(
            (m, k)
            for m in range(1, 7)
            for k in range(1, 7)
            if m * k <= 6
        )

    def test_saturation_stable_ideal_gives_one(self):
        assert swanson_c_search(PRIME_3D, c_max=4, mk_bound=6).c == 1

    def test_none_when_bound_too_small(self):
        res = swanson_c_search(X2_XY, c_max=1, mk_bound=12)
        assert res.c is None

    def test_fast_path_matches_literal_test(self):
        for I in [X2_XY, MonomialIdeal(2, [(3, 0), (1, 1)]), MonomialIdeal(3, [(1, 1, 0), (0, 0, 2)])]:
            res = swanson_c_search(I, c_max=12, mk_bound=4)
            for m, k, c in res.per_pair:
                assert swanson_truncation_agrees(I, m, k, c)
                if c > 1:
                    assert not swanson_truncation_agrees(I, m, k, c - 1)

    def test_zero_and_unit_rejected(self):
        with pytest.raises(ZeroIdealError):
            swanson_c_search(unit_ideal(2))


def test_amao_result_guard():
    with pytest.raises(EpsmultError):
        AmaoResult(value=-1, stabilized_at=1, window=3)
