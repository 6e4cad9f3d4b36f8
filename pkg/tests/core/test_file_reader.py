"""
Tests for FileReader and column converters.
"""

import pandas as pd

from monopsono.common_tests.base_cases import FileTestCase, MonopsonoTestCase
from monopsono.common_tests.utils import create_csv_file
from monopsono.core.exceptions import ParseError, SchemaError
from monopsono.core.file_reader import (
    FileReader,
    enum_column,
    integer_column,
    numeric_column,
)


class FileReaderTests(FileTestCase):
    def setUp(self):
        super().setUp()
        self.reader = FileReader(["a", "b"], optional_columns=["c"])

    def test_reads_strings_and_strips_headers(self):
        path = create_csv_file(self.tmp, "in.csv", [" a", "b "], [["007", ""]])
        frame = self.reader.read_file(path)
        self.assertEqual(list(frame.columns), ["a", "b"])
        self.assertEqual(frame.loc[0, "a"], "007")
        self.assertEqual(frame.loc[0, "b"], "")

    def test_optional_column_is_accepted(self):
        path = create_csv_file(self.tmp, "in.csv", ["a", "b", "c"], [["1", "2", "3"]])
        self.assertEqual(len(self.reader.read_file(path)), 1)

    def test_missing_and_extra_columns(self):
        with self.assertRaises(SchemaError) as ctx:
            self.reader.validate_headers(["a"])
        self.assertEqual((ctx.exception.row_number, ctx.exception.field_name), (0, "b"))
        with self.assertRaises(SchemaError) as ctx:
            self.reader.validate_headers(["a", "b", "z"])
        self.assertEqual(ctx.exception.field_name, "z")

    def test_empty_and_missing_files(self):
        empty = self.tmp / "empty.csv"
        empty.write_text("")
        with self.assertRaises(SchemaError):
            self.reader.read_file(empty)
        with self.assertRaises(ParseError):
            self.reader.read_file(self.tmp / "absent.csv")


class ColumnConverterTests(MonopsonoTestCase):
    def test_numeric_column(self):
        frame = pd.DataFrame({"x": ["1.5", " 2", ""]})
        allow = pd.Series([False, False, True])
        values = numeric_column(frame, "x", allow_empty=allow)
        self.assertEqual(values.iloc[0], 1.5)
        self.assertTrue(pd.isna(values.iloc[2]))
        with self.assertRaises(ParseError) as ctx:
            numeric_column(frame, "x")
        self.assertEqual(ctx.exception.row_number, 3)

    def test_non_numeric_row_number(self):
        frame = pd.DataFrame({"x": ["1", "2", "abc"]})
        with self.assertRaises(ParseError) as ctx:
            numeric_column(frame, "x")
        self.assertEqual((ctx.exception.row_number, ctx.exception.field_name), (3, "x"))

    def test_integer_column(self):
        frame = pd.DataFrame({"year": ["2010", "2011.0"]})
        self.assertEqual(list(integer_column(frame, "year")), [2010, 2011])
        with self.assertRaises(ParseError):
            integer_column(pd.DataFrame({"year": ["2010.5"]}), "year")

    def test_enum_column(self):
        frame = pd.DataFrame({"kind": ["a ", "b"]})
        self.assertEqual(list(enum_column(frame, "kind", {"a", "b"})), ["a", "b"])
        with self.assertRaises(ParseError) as ctx:
            enum_column(frame, "kind", {"a"})
        self.assertEqual(ctx.exception.row_number, 2)
