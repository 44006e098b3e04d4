import numpy as np
import pytest
from hypothesis import given, strategies as st

from aeroshield import (
    AltitudeDepthTable,
    ConfigError,
    DEFAULT_TABLE,
    DomainError,
    altitude_at_depth,
    depth_at_altitude,
    fuel_multiplier,
)


class TestDepthAtAltitude:
    @pytest.mark.parametrize(
        "altitude_km, depth",
        [(12.0, 234.0), (9.5, 365.0), (7.0, 484.0), (0.0, 1037.0)],
    )
    def test_exact_at_anchors(self, altitude_km, depth):
        assert depth_at_altitude(DEFAULT_TABLE, altitude_km) == depth

    def test_segment_midpoint(self):
        # Midpoint of the (9.5, 365)-(7, 484) segment: (365 + 484) / 2.
        assert depth_at_altitude(DEFAULT_TABLE, 8.25) == 424.5

    @pytest.mark.parametrize("altitude_km", [12.001, 15.0, -0.5, -1e-9])
    def test_out_of_domain(self, altitude_km):
        with pytest.raises(DomainError):
            depth_at_altitude(DEFAULT_TABLE, altitude_km)

    def test_strictly_decreasing_on_fine_grid(self):
        grid = np.linspace(0.0, 12.0, 12001)
        depths = [depth_at_altitude(DEFAULT_TABLE, a) for a in grid]
        assert all(d1 > d2 for d1, d2 in zip(depths, depths[1:]))


class TestAltitudeAtDepth:
    @pytest.mark.parametrize(
        "depth, altitude_km",
        [(365.0, 9.5), (234.0, 12.0), (484.0, 7.0), (1037.0, 0.0), (424.5, 8.25)],
    )
    def test_inverse(self, depth, altitude_km):
        assert altitude_at_depth(DEFAULT_TABLE, depth) == altitude_km

    @pytest.mark.parametrize("depth", [233.9, 100.0, 1037.1, 0.0])
    def test_out_of_range(self, depth):
        with pytest.raises(DomainError):
            altitude_at_depth(DEFAULT_TABLE, depth)

    @given(st.floats(min_value=0.0, max_value=12.0, allow_nan=False))
    def test_round_trip(self, altitude_km):
        depth = depth_at_altitude(DEFAULT_TABLE, altitude_km)
        assert altitude_at_depth(DEFAULT_TABLE, depth) == pytest.approx(
            altitude_km, abs=1e-9
        )


class TestFuelMultiplier:
    def test_published_values(self):
        assert fuel_multiplier(DEFAULT_TABLE, 9.5, "published") == 1.56
        assert fuel_multiplier(DEFAULT_TABLE, 7.0, "published") == 2.07

    def test_reference_is_exactly_one(self):
        assert fuel_multiplier(DEFAULT_TABLE, 12.0, "exact") == 1.0

    def test_exact_at_7km(self):
        assert fuel_multiplier(DEFAULT_TABLE, 7.0, "exact") == pytest.approx(484.0 / 234.0)

    def test_strictly_increasing_as_altitude_drops(self):
        grid = np.linspace(12.0, 0.0, 200)
        values = [fuel_multiplier(DEFAULT_TABLE, a, "exact") for a in grid]
        assert all(m2 > m1 for m1, m2 in zip(values, values[1:]))

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            fuel_multiplier(DEFAULT_TABLE, 9.5, "nope")

    def test_alternate_cruise_depth_table(self):
        # A table with the 243 g/cm2 cruise reading changes the ratios.
        table = AltitudeDepthTable(anchors=((12.0, 243.0), (9.5, 365.0), (7.0, 484.0), (0.0, 1037.0)))
        assert fuel_multiplier(table, 9.5, "published") == round(365.0 / 243.0, 2)


class TestTableValidation:
    def test_needs_two_anchors(self):
        with pytest.raises(ConfigError):
            AltitudeDepthTable(anchors=((12.0, 234.0),))

    def test_altitude_must_decrease(self):
        with pytest.raises(ConfigError):
            AltitudeDepthTable(anchors=((7.0, 484.0), (12.0, 234.0)))

    def test_depth_must_increase(self):
        with pytest.raises(ConfigError):
            AltitudeDepthTable(anchors=((12.0, 400.0), (9.5, 365.0)))

    def test_reference_inside_domain(self):
        with pytest.raises(ConfigError):
            AltitudeDepthTable(
                anchors=((10.0, 300.0), (0.0, 1037.0)), reference_altitude_km=12.0
            )
