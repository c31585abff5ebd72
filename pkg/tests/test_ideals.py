import json

import pytest

from epsmult import (
    DimensionMismatchError,
    MonomialIdeal,
    ZeroIdealError,
    corpus,
    from_json_dict,
    maximal_ideal,
    minimalize,
    to_json_dict,
    unit_ideal,
    zero_ideal,
)
from epsmult.ideals import minimal_vectors, saturate_by_colon_iteration

from oracle_utils import (
    brute_colon,
    brute_intersect,
    brute_product,
    brute_saturate,
    staircase_in_box,
)


def box_for(*ideals, pad=1):
    d = ideals[0].dim
    return tuple(
        sum(max((g[j] for g in I.generators), default=0) for I in ideals) + pad
        for j in range(d)
    )


class TestConstruction:
    def test_minimalizes_and_sorts(self):
        ideal = MonomialIdeal(2, [(3, 0), (2, 0), (1, 1), (2, 2)])
        assert ideal.generators == ((1, 1), (2, 0))

    def test_duplicates_collapse(self):
        ideal = MonomialIdeal(2, [(1, 1), (1, 1)])
        assert ideal.generators == ((1, 1),)

    def test_zero_and_unit(self):
        assert zero_ideal(3).is_zero
        assert unit_ideal(3).is_unit
        assert not unit_ideal(3).is_zero
        assert MonomialIdeal(2, [(0, 0), (1, 0)]).is_unit

    def test_dim_must_be_positive(self):
        with pytest.raises(ValueError):
            MonomialIdeal(0, [])

    def test_vector_length_checked(self):
        with pytest.raises(DimensionMismatchError):
            MonomialIdeal(2, [(1, 2, 3)])

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            MonomialIdeal(2, [(1, -1)])

    def test_equality_is_canonical(self):
        a = MonomialIdeal(2, [(2, 0), (1, 1)])
        b = MonomialIdeal(2, [(1, 1), (2, 0), (3, 0), (2, 5)])
        assert a == b
        assert hash(a) == hash(b)

    def test_minimalize_helper(self):
        assert minimalize([(2, 0), (4, 0)], 2) == MonomialIdeal(2, [(2, 0)])

    def test_minimal_vectors_antichain(self):
        vecs = minimal_vectors({(1, 2), (2, 2), (0, 5), (1, 3)})
        assert vecs == ((0, 5), (1, 2))


class TestQueries:
    def test_contains(self):
        ideal = MonomialIdeal(2, [(2, 0), (1, 1)])
        assert ideal.contains((2, 5))
        assert ideal.contains((1, 1))
        assert not ideal.contains((1, 0))
        assert not ideal.contains((0, 9))

    def test_contains_many_matches_scalar(self):
        ideal = MonomialIdeal(3, [(2, 0, 1), (0, 3, 0)])
        pts = [(i, j, k) for i in range(4) for j in range(4) for k in range(3)]
        flags = ideal.contains_many(pts)
        assert [bool(f) for f in flags] == [ideal.contains(p) for p in pts]

    def test_max_exponents(self):
        assert MonomialIdeal(2, [(2, 1), (0, 3)]).max_exponents() == (2, 3)
        assert zero_ideal(2).max_exponents() == (0, 0)

    def test_subideal(self):
        small = MonomialIdeal(2, [(2, 0), (1, 1)])
        big = MonomialIdeal(2, [(1, 0)])
        assert small.is_subideal_of(big)
        assert not big.is_subideal_of(small)
        assert zero_ideal(2).is_subideal_of(small)


class TestArithmetic:
    def test_product_example(self):
        I = MonomialIdeal(2, [(2, 0), (1, 1)])
        assert (I * I).generators == ((2, 2), (3, 1), (4, 0))

    def test_power_binary_vs_repeated(self):
        I = MonomialIdeal(2, [(2, 0), (1, 1)])
        by_products = unit_ideal(2)
        for _ in range(5):
            by_products = by_products * I
        assert I.power(5) == by_products
        assert I.power(0) == unit_ideal(2)
        assert I.power(1) == I

    def test_power_negative_rejected(self):
        with pytest.raises(ValueError):
            MonomialIdeal(1, [(1,)]).power(-1)

    def test_intersect_example(self):
        a = MonomialIdeal(2, [(2, 0)])
        b = MonomialIdeal(2, [(0, 3)])
        assert a.intersect(b).generators == ((2, 3),)

    def test_colon_example(self):
        I = MonomialIdeal(2, [(2, 0), (1, 1)])
        x = MonomialIdeal(2, [(1, 0)])
        assert I.colon(x).generators == ((0, 1), (1, 0))

    def test_colon_by_zero_rejected(self):
        with pytest.raises(ZeroIdealError):
            MonomialIdeal(2, [(1, 0)]).colon(zero_ideal(2))

    def test_dim_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            MonomialIdeal(2, [(1, 0)]).product(MonomialIdeal(3, [(1, 0, 0)]))

    def test_zero_absorbs(self):
        I = MonomialIdeal(2, [(1, 1)])
        assert (I * zero_ideal(2)).is_zero
        assert I.intersect(zero_ideal(2)).is_zero
        assert (I + zero_ideal(2)) == I

    def test_operator_sugar(self):
        I = MonomialIdeal(2, [(2, 0), (1, 1)])
        J = MonomialIdeal(2, [(0, 2)])
        assert I * J == I.product(J)
        assert I + J == I.sum(J)
        assert (I & J) == I.intersect(J)
        assert I**3 == I.power(3)


class TestSaturation:
    def test_worked_example(self):
        I = MonomialIdeal(2, [(2, 0), (1, 1)])
        assert I.saturate().generators == ((1, 0),)

    def test_m_primary_saturates_to_unit(self):
        I = MonomialIdeal(2, [(3, 0), (0, 2)])
        assert I.saturate().is_unit

    def test_already_saturated(self):
        # a prime that misses one variable, and a principal ideal
        P = MonomialIdeal(3, [(1, 0, 0), (0, 1, 0)])
        assert P.saturate() == P
        Q = MonomialIdeal(2, [(2, 0)])
        assert Q.saturate() == Q

    def test_zero_and_unit_fixed(self):
        assert zero_ideal(2).saturate().is_zero
        assert unit_ideal(2).saturate().is_unit

    def test_idempotent_on_corpus(self):
        for I in corpus(11, 30):
            S = I.saturate()
            assert S.saturate() == S
            assert I.is_subideal_of(S)

    def test_matches_colon_iteration_on_corpus(self):
        for I in corpus(12, 30):
            assert I.saturate() == saturate_by_colon_iteration(I)


@pytest.fixture(scope="module")
def pairs():
    pool = corpus(13, 60)
    return [(a, b) for a, b in zip(pool[::2], pool[1::2]) if a.dim == b.dim]


class TestAgainstBruteForce:
    """The fast generator arithmetic against pointwise definitions."""

    def test_product(self, pairs):
        for a, b in pairs:
            box = box_for(a, b)
            got = staircase_in_box(a.product(b).generators, box)
            assert got == brute_product(a.generators, b.generators, a.dim)

    def test_intersect(self, pairs):
        for a, b in pairs:
            bounds = tuple(
                max(
                    max((g[j] for g in a.generators), default=0),
                    max((g[j] for g in b.generators), default=0),
                )
                + 1
                for j in range(a.dim)
            )
            got = staircase_in_box(a.intersect(b).generators, bounds)
            assert got == brute_intersect(a.generators, b.generators, a.dim)

    def test_colon(self, pairs):
        for a, b in pairs:
            bounds = tuple(
                max((g[j] for g in a.generators), default=0) + 1
                for j in range(a.dim)
            )
            got = staircase_in_box(a.colon(b).generators, bounds)
            assert got == brute_colon(a.generators, b.generators, a.dim)

    def test_saturate(self, pairs):
        for a, _ in pairs:
            bounds = tuple(
                max((g[j] for g in a.generators), default=0) + 1
                for j in range(a.dim)
            )
            got = staircase_in_box(a.saturate().generators, bounds)
            assert got == brute_saturate(a.generators, a.dim)


class TestSerialization:
    def test_round_trip(self):
        I = MonomialIdeal(3, [(1, 2, 0), (0, 0, 4)])
        blob = json.dumps(to_json_dict(I))
        assert from_json_dict(json.loads(blob)) == I

    def test_emitted_form_is_minimal(self):
        I = MonomialIdeal(2, [(1, 0), (2, 0), (1, 3)])
        assert to_json_dict(I) == {"dim": 2, "generators": [[1, 0]]}

    def test_bad_payloads(self):
        with pytest.raises(ValueError):
            from_json_dict([1, 2])
        with pytest.raises(ValueError):
            from_json_dict({"dim": 2})
        with pytest.raises(ValueError):
            from_json_dict({"dim": 2, "generators": "xy"})

    def test_maximal_ideal_shape(self):
        assert maximal_ideal(3).generators == (
            (0, 0, 1),
            (0, 1, 0),
            (1, 0, 0),
        )
