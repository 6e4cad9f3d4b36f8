"""
Tests for the Cournot oligopsony closed forms.
"""

import numpy as np

from monopsono.common_tests.base_cases import MonopsonoTestCase
from monopsono.common_tests.factories import OligopsonyEconomyFactory
from monopsono.core.enums import Regime
from monopsono.core.exceptions import DomainError
from monopsono.oligopsony_sim import (
    OligopsonyEconomy,
    competitive_equilibrium,
    cournot_equilibrium,
    firm_supply_elasticity,
    markdown,
    minwage_response,
    monopsony_equilibrium,
    response_curve,
    response_table,
)


class EconomyValidationTests(MonopsonoTestCase):
    """Test OligopsonyEconomy invariants."""

    def test_rejects_invalid_curves(self):
        for fields in (
            dict(a=5.0, c=4.0),
            dict(b=-1.0),
            dict(b=0.0, d=0.0),
            dict(j=0),
            dict(j=1.5),
        ):
            with self.subTest(fields=fields):
                with self.assertRaises(DomainError):
                    OligopsonyEconomyFactory(**fields)

    def test_flat_supply_needs_sloped_demand(self):
        econ = OligopsonyEconomyFactory(b=0.0, d=1.0)
        self.assertEqual(cournot_equilibrium(econ).wage, 0.0)


class EquilibriumTests(MonopsonoTestCase):
    """Test equilibrium closed forms."""

    def setUp(self):
        super().setUp()
        self.econ = OligopsonyEconomyFactory()

    def test_monopsony(self):
        point = monopsony_equilibrium(self.econ.with_firms(3))
        self.assertEqual((point.employment_total, point.wage), (5.0, 5.0))
        self.assertIs(point.regime, Regime.FREE)

    def test_competitive(self):
        point = competitive_equilibrium(self.econ)
        self.assertEqual((point.employment_total, point.wage), (10.0, 10.0))

    def test_duopoly(self):
        point = cournot_equilibrium(self.econ.with_firms(2))
        self.assertAlmostEqual(point.employment_total, 20 / 3, places=12)
        self.assertAlmostEqual(point.wage, 20 / 3, places=12)
        self.assertAlmostEqual(point.employment_per_firm, 10 / 3, places=12)

    def test_wage_rises_towards_competitive_level(self):
        wages = [cournot_equilibrium(self.econ.with_firms(j)).wage for j in range(1, 30)]
        self.assertTrue(np.all(np.diff(wages) > 0))
        self.assertLess(wages[-1], competitive_equilibrium(self.econ).wage)

    def test_equal_intercepts_give_no_employment(self):
        point = competitive_equilibrium(OligopsonyEconomyFactory(a=10.0))
        self.assertEqual(point.employment_total, 0.0)

    def test_wage_ordering_with_sloped_demand(self):
        econ = OligopsonyEconomy(a=1.0, b=0.5, c=12.0, d=0.8, j=4)
        monopsony = monopsony_equilibrium(econ).wage
        cournot = cournot_equilibrium(econ).wage
        competitive = competitive_equilibrium(econ).wage
        self.assertLessEqual(monopsony, cournot)
        self.assertLessEqual(cournot, competitive)


class MarkdownTests(MonopsonoTestCase):
    """Test markdowns and the supply elasticity they mirror."""

    def test_monopsony_markdown_is_one(self):
        econ = OligopsonyEconomyFactory()
        self.assertEqual(markdown(econ), 1.0)
        self.assertEqual(firm_supply_elasticity(econ), 1.0)

    def test_markdown_times_elasticity_is_one(self):
        for j in (1, 2, 5, 20):
            econ = OligopsonyEconomy(a=2.0, b=0.3, c=15.0, d=0.4, j=j)
            with self.subTest(j=j):
                self.assertLess(abs(markdown(econ) * firm_supply_elasticity(econ) - 1.0), 1e-10)

    def test_markdown_falls_with_firm_count(self):
        markdowns = [markdown(OligopsonyEconomyFactory(j=j)) for j in range(1, 10)]
        self.assertTrue(np.all(np.diff(markdowns) < 0))

    def test_markdown_vanishes_with_elastic_supply(self):
        econ = OligopsonyEconomy(a=1.0, b=1e-9, c=10.0, d=1.0, j=1)
        self.assertLess(markdown(econ), 1e-6)


class MinimumWageResponseTests(MonopsonoTestCase):
    """Test the three minimum-wage regimes."""

    def setUp(self):
        super().setUp()
        self.econ = OligopsonyEconomyFactory()

    def test_floor_below_cournot_wage(self):
        point = minwage_response(self.econ, 3.0)
        self.assertIs(point.regime, Regime.UNCONSTRAINED)
        self.assertEqual(point.employment_total, 5.0)

    def test_boundary_is_unconstrained(self):
        self.assertIs(minwage_response(self.econ, 5.0).regime, Regime.UNCONSTRAINED)
        self.assertIs(minwage_response(self.econ, 10.0).regime, Regime.SUPPLY_DETERMINED)

    def test_supply_determined(self):
        point = minwage_response(self.econ, 7.0)
        self.assertIs(point.regime, Regime.SUPPLY_DETERMINED)
        self.assertEqual(point.employment_total, 7.0)
        self.assertEqual(point.wage, 7.0)

    def test_demand_determined_with_flat_mrpl(self):
        point = minwage_response(self.econ, 12.0)
        self.assertIs(point.regime, Regime.DEMAND_DETERMINED)
        self.assertEqual(point.employment_total, 0.0)

    def test_demand_determined_with_sloped_mrpl(self):
        econ = OligopsonyEconomy(a=0.0, b=1.0, c=10.0, d=1.0, j=2)
        competitive = competitive_equilibrium(econ)
        point = minwage_response(econ, competitive.wage + 1.0)
        self.assertIs(point.regime, Regime.DEMAND_DETERMINED)
        self.assertAlmostEqual(point.employment_total, 2 * (10.0 - point.wage), places=12)

    def test_negative_floor(self):
        with self.assertRaises(DomainError):
            minwage_response(self.econ, -1.0)


class ResponseCurveTests(MonopsonoTestCase):
    """Test the shape of employment responses to a floor."""

    def setUp(self):
        super().setUp()
        self.grid = np.round(np.arange(0.0, 12.01, 0.25), 2)

    def test_zero_below_cournot_wage_and_peak_at_competitive_wage(self):
        curve = response_curve(OligopsonyEconomyFactory(), self.grid)
        below = curve[curve["wmin"] <= 5.0]
        self.assertTrue((below["d_employment"] == 0).all())
        self.assertTrue((below["d_wage"] == 0).all())
        peak = curve.loc[curve["d_employment"].idxmax(), "wmin"]
        self.assertEqual(peak, 10.0)

    def test_continuous_with_sloped_mrpl(self):
        econ = OligopsonyEconomy(a=0.0, b=1.0, c=10.0, d=1.0, j=3)
        fine = np.linspace(0.0, 12.0, 2401)
        curve = response_curve(econ, fine)
        jumps = np.abs(np.diff(curve["d_employment"].to_numpy()))
        self.assertLess(jumps.max(), 0.05)

    def test_increasing_then_decreasing(self):
        econ = OligopsonyEconomy(a=0.0, b=1.0, c=10.0, d=1.0, j=2)
        curve = response_curve(econ, np.linspace(0.0, 10.0, 201))
        employment = curve["d_employment"].to_numpy()
        peak = int(np.argmax(employment))
        self.assertTrue(np.all(np.diff(employment[: peak + 1]) >= -1e-12))
        self.assertTrue(np.all(np.diff(employment[peak:]) <= 1e-12))
        self.assertAlmostEqual(
            curve["wmin"].iloc[peak], competitive_equilibrium(econ).wage, delta=0.05
        )

    def test_firm_and_market_deltas_share_signs(self):
        curve = response_curve(OligopsonyEconomyFactory(j=3), self.grid)
        self.assertTrue(
            (np.sign(curve["d_employment"]) == np.sign(curve["d_employment_per_firm"])).all()
        )

    def test_fewer_firms_gain_more_on_supply_segment(self):
        econ = OligopsonyEconomyFactory()
        monopsony = response_curve(econ, self.grid)
        five = response_curve(econ.with_firms(5), self.grid)
        segment = self.grid <= 10.0
        self.assertTrue(
            (monopsony["d_employment"][segment] >= five["d_employment"][segment]).all()
        )

    def test_unsorted_grid(self):
        with self.assertRaises(DomainError):
            response_curve(OligopsonyEconomyFactory(), [2.0, 1.0])

    def test_table_is_stacked_by_firm_count(self):
        econ = OligopsonyEconomyFactory()
        table = response_table([econ.with_firms(5), econ], [0.0, 9.0])
        self.assertEqual(list(table.columns), ["j", "wmin", "d_wage", "d_employment", "regime"])
        self.assertEqual(list(table["j"]), [1, 1, 5, 5])
        self.assertEqual(list(table["regime"]), ["unconstrained", "supply_determined"] * 2)
