"""
Tests for exception classes.
"""

from monopsono.common_tests.base_cases import MonopsonoTestCase
from monopsono.core.exceptions import (
    BootstrapError,
    CollinearityError,
    ConvergenceError,
    DomainError,
    EmptySampleError,
    EstimationError,
    MonopsonoError,
    ParseError,
    SchemaError,
)


class ParseErrorTests(MonopsonoTestCase):
    def test_location_in_message(self):
        error = ParseError("Missing value", row_number=3, field_name="year")
        self.assertEqual(str(error), "Missing value (row 3, column year)")
        self.assertEqual(str(ParseError("Bad file")), "Bad file")
        self.assertEqual(error.label, "parse error")

    def test_schema_error_is_a_parse_error(self):
        self.assertIsInstance(SchemaError("x", 0, "region"), ParseError)


class EstimationErrorTests(MonopsonoTestCase):
    def test_attributes(self):
        convergence = ConvergenceError(0.5, 100)
        self.assertEqual((convergence.residual_change, convergence.iterations), (0.5, 100))
        self.assertIn("100 iterations", str(convergence))
        self.assertEqual(CollinearityError("log_mw").column, "log_mw")
        bootstrap = BootstrapError(3, 10)
        self.assertEqual(str(bootstrap), "3 of 10 bootstrap replicates failed")

    def test_empty_sample_trace(self):
        error = EmptySampleError("No rows", [("all", 10), ("year<2010", 0)])
        self.assertEqual(error.trace, [("all", 10), ("year<2010", 0)])
        self.assertEqual(str(error), "No rows [all: 10, year<2010: 0]")
        self.assertEqual(str(EmptySampleError("No rows")), "No rows")

    def test_hierarchy(self):
        for error in (ConvergenceError(1.0, 1), BootstrapError(1, 2), EmptySampleError("x")):
            with self.subTest(error=type(error).__name__):
                self.assertIsInstance(error, EstimationError)
                self.assertIsInstance(error, MonopsonoError)
        self.assertIsInstance(DomainError("x"), ValueError)
