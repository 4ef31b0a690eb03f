import random

import pytest

from conftest import random_plane_chain
from tamedeg.maps import PolyMap, compose_all, elementary, identity
from tamedeg.plane import (InconsistentLengthError, NotKellerError, inverse,
                           inverse_mdeg_prediction, length_bound, length_of,
                           omega, peel)
from tamedeg.poly import Polynomial, parse_poly


def p2(text):
    return parse_poly(text, n=2)


class TestPeel:
    def test_single_triangular_factor(self):
        f = PolyMap((p2("x"), p2("y + x^3")))
        dec = peel(f)
        assert dec.length == 1
        assert dec.factor_degrees == [3]
        assert dec.compose() == f

    def test_two_factor_chain(self):
        t1 = elementary(2, 0, p2("y^3")).map   # (x + y^3, y)
        t2 = elementary(2, 1, p2("x^2")).map   # (x, y + x^2)
        f = t2.compose(t1)
        dec = peel(f)
        assert dec.length == 2
        assert sorted(dec.factor_degrees) == [2, 3]
        assert dec.compose() == f

    def test_affine_map_has_length_zero(self):
        f = PolyMap((p2("y + 1"), p2("x - y")))
        dec = peel(f)
        assert dec.length == 0
        assert dec.compose() == f

    def test_normalized_orientations_alternate(self):
        rng = random.Random(99)
        f, length, _ = random_plane_chain(rng)
        dec = peel(f)
        for i, factor in enumerate(dec.factors, start=1):
            comp = factor.map.components
            if i % 2 == 1:  # odd factors: (x + f(y), y)
                assert comp[1] == p2("y")
            else:           # even factors: (x, y + f(x))
                assert comp[0] == p2("x")

    def test_non_keller_rejected(self):
        with pytest.raises(NotKellerError):
            peel(PolyMap((p2("x + y^2"), p2("y + x"))))

    def test_wrong_dimension(self):
        with pytest.raises(ValueError):
            peel(identity(3))


class TestInverse:
    def test_simple_inverse(self):
        f = PolyMap((p2("x"), p2("y + x^3")))
        assert inverse(f) == PolyMap((p2("x"), p2("y - x^3")))

    def test_inverse_degree_equals_degree(self):
        rng = random.Random(3)
        for _ in range(30):
            f, _, _ = random_plane_chain(rng)
            inv = inverse(f)
            assert inv.deg() == f.deg()
            # point check F(F^{-1}(pt)) = pt -- the full symbolic composition
            # is prohibitively large, the decomposition is already certified
            for _ in range(3):
                pt = [Polynomial.constant(2, rng.randrange(-50, 50))
                      for _ in range(2)]
                mid = [c.substitute(pt) for c in inv.components]
                assert [c.substitute(mid) for c in f.components] == pt


class TestRandomChains:
    def test_roundtrip_suite(self):
        rng = random.Random(7)
        for _ in range(120):
            f, length, degs = random_plane_chain(rng)
            dec = peel(f)
            assert dec.length == length
            assert sorted(dec.factor_degrees) == degs
            d1, d2 = sorted(f.mdeg())
            assert d2 % d1 == 0
            inv = dec.inverse_map()
            assert tuple(inv.mdeg()) in inverse_mdeg_prediction(d1, d2, length)
            assert length <= length_bound(d1, d2)

    def test_length_of(self):
        rng = random.Random(13)
        f, length, _ = random_plane_chain(rng)
        assert length_of(f) == length


class TestOmegaAndBounds:
    def test_omega_values(self):
        assert omega(60) == 4
        assert omega(7) == 1
        assert omega(1) == 0
        with pytest.raises(ValueError):
            omega(0)

    def test_length_bound_values(self):
        assert length_bound(60, 120) == 5
        assert length_bound(2, 2) == 1
        assert length_bound(1, 8) == 1


class TestPredictions:
    def test_affine_case(self):
        assert inverse_mdeg_prediction(1, 1, 0) == {(1, 1)}
        with pytest.raises(InconsistentLengthError):
            inverse_mdeg_prediction(2, 4, 0)

    def test_length_one(self):
        assert inverse_mdeg_prediction(1, 5, 1) == {(1, 5), (5, 1), (5, 5)}
        assert inverse_mdeg_prediction(3, 3, 1) == {(1, 3), (3, 1), (3, 3)}
        with pytest.raises(InconsistentLengthError):
            inverse_mdeg_prediction(2, 4, 1)

    def test_length_two(self):
        assert inverse_mdeg_prediction(2, 6, 2) == {(6, 3), (3, 6), (6, 6)}
        with pytest.raises(InconsistentLengthError):
            inverse_mdeg_prediction(2, 5, 2)

    def test_sixty_onetwenty_length_five(self):
        expected = {(120, 120),
                    (120, 60), (60, 120),
                    (120, 40), (40, 120),
                    (120, 24), (24, 120)}
        assert inverse_mdeg_prediction(60, 120, 5) == expected

    def test_sixty_onetwenty_length_three(self):
        got = inverse_mdeg_prediction(60, 120, 3)
        quotients = {2, 3, 4, 5, 6, 10, 12, 15, 20, 30}
        expected = {(120, 120)}
        for a in quotients:
            expected.add((120, 120 // a))
            expected.add((120 // a, 120))
        assert got == expected

    def test_length_exceeding_prime_budget(self):
        with pytest.raises(InconsistentLengthError):
            inverse_mdeg_prediction(4, 4, 3)
        with pytest.raises(InconsistentLengthError):
            inverse_mdeg_prediction(8, 16, 5)

    def test_equal_degrees_general(self):
        # (12,12) at length 2: divisors a with at least one prime left in 12/a
        assert inverse_mdeg_prediction(12, 12, 2) == {
            (12, 12), (12, 6), (6, 12), (12, 4), (4, 12),
            (12, 3), (3, 12), (12, 2), (2, 12)}
