"""Interval coordinates: location, reconstruction, distance correspondence."""

from math import gcd

import pytest

from fractree import (
    FULL_INTERVAL,
    INF,
    ONE,
    ZERO,
    Coordinates,
    Frac,
    Interval,
    coordinate_distance,
    coordinates_of,
    distance,
    fraction_at,
    is_adjacent,
    mediant,
)

HALF_TO_THREE_FIFTHS = Interval(Frac(1, 2), Frac(3, 5))


def coprime_pairs_up_to_total(max_total):
    return [
        (m, n)
        for m in range(max_total + 1)
        for n in range(max_total + 1 - m)
        if gcd(m, n) == 1
    ]


class TestCoordinatesOf:
    def test_examples(self):
        assert coordinates_of(Frac(4, 7), HALF_TO_THREE_FIFTHS) == Coordinates(1, 1)
        assert coordinates_of(ONE, FULL_INTERVAL) == Coordinates(1, 1)

    def test_endpoints(self):
        iv = Interval(Frac(1, 3), Frac(3, 4))
        d = distance(iv.lo, iv.hi)
        assert coordinates_of(iv.lo, iv) == Coordinates(0, d)
        assert coordinates_of(iv.hi, iv) == Coordinates(d, 0)

    def test_full_interval_coordinates_are_the_fraction_itself(self):
        for f in [Frac(4, 7), Frac(22, 5), ZERO, INF]:
            assert coordinates_of(f, FULL_INTERVAL) == (f.num, f.den)

    def test_rejects_outside(self):
        with pytest.raises(ValueError):
            coordinates_of(Frac(1, 3), HALF_TO_THREE_FIFTHS)
        with pytest.raises(ValueError):
            coordinates_of(Frac(2, 3), HALF_TO_THREE_FIFTHS)


class TestFractionAt:
    def test_examples(self):
        assert fraction_at(Coordinates(1, 1), FULL_INTERVAL) == ONE
        assert fraction_at(Coordinates(1, 1), HALF_TO_THREE_FIFTHS) == Frac(4, 7)
        assert fraction_at(Coordinates(3, 2), Interval(ZERO, ONE)) == Frac(3, 5)

    def test_endpoint_coordinates(self):
        assert fraction_at(Coordinates(0, 1), HALF_TO_THREE_FIFTHS) == Frac(1, 2)
        assert fraction_at(Coordinates(1, 0), HALF_TO_THREE_FIFTHS) == Frac(3, 5)

    def test_rejects_non_coprime_and_invalid(self):
        with pytest.raises(ValueError):
            fraction_at(Coordinates(2, 4), FULL_INTERVAL)
        with pytest.raises(ValueError):
            fraction_at(Coordinates(0, 0), FULL_INTERVAL)
        with pytest.raises(ValueError):
            fraction_at(Coordinates(-1, 2), FULL_INTERVAL)

    def test_rejects_non_adjacent_interval(self):
        with pytest.raises(ValueError):
            fraction_at(Coordinates(1, 1), Interval(Frac(1, 3), Frac(3, 4)))


class TestRoundTrip:
    @pytest.mark.parametrize(
        "interval",
        [FULL_INTERVAL, HALF_TO_THREE_FIFTHS, Interval(Frac(2, 1), INF)],
        ids=str,
    )
    def test_coordinates_round_trip_and_stay_coprime(self, interval):
        for m, n in coprime_pairs_up_to_total(60):
            f = fraction_at(Coordinates(m, n), interval)
            assert gcd(f.num, f.den) == 1
            coords = coordinates_of(f, interval)
            assert coords == (m, n)
            assert gcd(coords.m, coords.n) == 1

    def test_reconstruction_identity_on_general_intervals(self):
        # d*num and d*den of an interior fraction recover the coordinate mix
        iv = Interval(Frac(1, 3), Frac(3, 4))
        d = distance(iv.lo, iv.hi)
        for f in [Frac(1, 2), Frac(2, 5), Frac(3, 5), Frac(5, 7), Frac(12, 17)]:
            m, n = coordinates_of(f, iv)
            assert d * f.num == n * iv.lo.num + m * iv.hi.num
            assert d * f.den == n * iv.lo.den + m * iv.hi.den


class TestCoordinateDistance:
    def test_examples(self):
        assert coordinate_distance(Frac(1, 2), Frac(3, 5), Interval(ZERO, ONE)) == 1
        assert coordinate_distance(Frac(1, 3), Frac(3, 4), FULL_INTERVAL) == 5

    def test_endpoints(self):
        iv = HALF_TO_THREE_FIFTHS
        assert coordinate_distance(iv.lo, iv.hi, iv) == 1

    def test_rejects_outside(self):
        with pytest.raises(ValueError):
            coordinate_distance(Frac(1, 3), Frac(4, 7), HALF_TO_THREE_FIFTHS)


class TestMediantCorrespondence:
    def test_mediant_coordinates_are_reduced_coordinate_sums(self):
        iv = HALF_TO_THREE_FIFTHS
        pairs = coprime_pairs_up_to_total(25)
        for m1, n1 in pairs:
            for m2, n2 in pairs:
                f1 = fraction_at(Coordinates(m1, n1), iv)
                f2 = fraction_at(Coordinates(m2, n2), iv)
                if f1 == f2:
                    continue
                g = gcd(m1 + m2, n1 + n2)
                expected = Coordinates((m1 + m2) // g, (n1 + n2) // g)
                assert coordinates_of(mediant(f1, f2), iv) == expected


class TestDistanceMultiplicativity:
    # intervals at distances 1, 2, 3 and 5
    INTERVALS = [
        HALF_TO_THREE_FIFTHS,
        Interval(Frac(1, 3), ONE),
        Interval(Frac(1, 4), ONE),
        Interval(Frac(1, 3), Frac(3, 4)),
    ]

    def test_raw_mix_identity(self):
        # mixing coordinate pairs into (n*p + m*r, n*q + m*s) scales cross
        # products by the interval distance, before any reduction
        for iv in self.INTERVALS:
            p, q, r, s = iv.lo.num, iv.lo.den, iv.hi.num, iv.hi.den
            d = distance(iv.lo, iv.hi)
            pairs = [
                (m, n) for m in range(21) for n in range(21) if (m, n) != (0, 0)
            ]
            for m1, n1 in pairs:
                a, b = n1 * p + m1 * r, n1 * q + m1 * s
                for m2, n2 in pairs:
                    c, e = n2 * p + m2 * r, n2 * q + m2 * s
                    assert b * c - a * e == d * (n1 * m2 - m1 * n2)

    def test_reduced_fraction_version(self):
        # for actual in-interval fractions the coordinate cross product is
        # the distance scaled by the interval distance
        for iv in self.INTERVALS:
            d = distance(iv.lo, iv.hi)
            sample = []
            for m, n in coprime_pairs_up_to_total(20):
                raw_num = n * iv.lo.num + m * iv.hi.num
                raw_den = n * iv.lo.den + m * iv.hi.den
                if raw_num and raw_den and gcd(raw_num, raw_den) == d:
                    sample.append(Frac(raw_num, raw_den))
            assert len(sample) > 10
            for f1 in sample:
                for f2 in sample:
                    if not f1 < f2:
                        continue
                    m1, n1 = coordinates_of(f1, iv)
                    m2, n2 = coordinates_of(f2, iv)
                    assert n1 * m2 - m1 * n2 == d * distance(f1, f2)


class TestDuality:
    def test_reconstruction_preserves_adjacency_both_ways(self):
        # coordinate pairs relate exactly like the fractions they name
        iv = HALF_TO_THREE_FIFTHS
        pairs = [
            (m, n)
            for m in range(31)
            for n in range(31)
            if gcd(m, n) == 1
        ]
        images = {c: fraction_at(Coordinates(*c), iv) for c in pairs}
        assert len(set(images.values())) == len(pairs)  # injective
        for i, c1 in enumerate(pairs):
            f1 = images[c1]
            for c2 in pairs[i + 1 :]:
                f2 = images[c2]
                coord_adjacent = abs(c1[1] * c2[0] - c1[0] * c2[1]) == 1
                assert coord_adjacent == is_adjacent(f1, f2)
