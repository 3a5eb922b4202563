import pytest

from friedzeta import (
    ValidationError,
    condition_enumerate,
    resonance_multiplicity_ledger,
    selberg_order_ledger,
)


class TestConditionEnumerate:
    def test_k0(self):
        assert condition_enumerate(0) == [(0, 0, 0)]

    def test_k1(self):
        assert condition_enumerate(1) == [(1, 0, 0), (1, 0, 1)]

    def test_k2(self):
        cases = condition_enumerate(2)
        l2 = sorted((p, q) for l, q, p in cases if l == 2)
        assert l2 == [(0, 0), (0, 1), (1, 0), (2, 0)]
        assert [(l, q, p) for l, q, p in cases if l == 1] == [(1, 0, 0)]
        assert not [c for c in cases if c[0] == 0]

    def test_all_satisfy_condition(self):
        for k in range(4):
            for l, q, p in condition_enumerate(k, n0=4):
                assert 2 * (q - l) + p + k <= 0
                assert 0 <= l <= k

    def test_exhaustive_against_brute_force(self):
        for k in (0, 1, 2):
            brute = sorted(
                (l, q, p)
                for l in range(0, min(k, 2) + 1)
                for q in range(0, 10)
                for p in range(0, 10)
                if 2 * (q - l) + p + k <= 0
            )
            assert condition_enumerate(k) == brute


class TestMultiplicities:
    def test_acyclic_all_zero(self):
        assert resonance_multiplicity_ledger(0, 0) == {k: 0 for k in range(5)}

    def test_one_zero(self):
        assert resonance_multiplicity_ledger(1, 0) == {0: 1, 1: 0, 2: 2, 3: 0, 4: 1}

    def test_trivial_rep_betti(self):
        for b1 in range(6):
            m = resonance_multiplicity_ledger(1, b1)
            assert m[2] == 2 * (b1 + 1)

    def test_symmetry_full_grid(self):
        for h0 in range(11):
            for h1 in range(11):
                m = resonance_multiplicity_ledger(h0, h1)
                assert m[4] == m[0] and m[3] == m[1]
                assert m[0] == h0 and m[1] == 2 * h1 and m[2] == 2 * (h0 + h1)

    def test_negative_rejected(self):
        with pytest.raises(ValidationError):
            resonance_multiplicity_ledger(-1, 0)


class TestSelbergOrders:
    def test_bochner_empty_kernel(self):
        assert selberg_order_ledger(2, 2, 1, 0) == 0

    def test_symmetric_point_doubles(self):
        assert selberg_order_ledger(2, 3, 1.0, 5) == 10
        assert selberg_order_ledger(4, 2, 2, 3) == 6

    def test_generic_point(self):
        assert selberg_order_ledger(2, 2, 0.25, 3) == 3
        assert selberg_order_ledger(2, 1, 0, 0) == 0

    def test_odd_n_rejected(self):
        with pytest.raises(ValidationError):
            selberg_order_ledger(3, 2, 1.5, 1)

    def test_bad_inputs(self):
        with pytest.raises(ValidationError):
            selberg_order_ledger(2, 0, 1, 1)
        with pytest.raises(ValidationError):
            selberg_order_ledger(2, 2, 1, -1)
