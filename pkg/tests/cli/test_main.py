"""
Tests for the command-line driver: exit codes, diagnostics and manifests.
"""

import pandas as pd

from monopsono.cli.main import build_parser, load_commands
from monopsono.cli.commands import COMMAND_MODULES
from monopsono.common_tests.base_cases import FileTestCase

from .base import invoke, read_manifest, restore_root_logger


class CliTestCase(FileTestCase):
    def setUp(self):
        super().setUp()
        self.addCleanup(restore_root_logger())
        self.out = self.tmp / "out"


class ParserTests(CliTestCase):
    def test_every_subcommand_is_registered(self):
        commands = load_commands()
        self.assertEqual(sorted(commands), sorted(COMMAND_MODULES))
        options = build_parser(commands).parse_args(
            ["regress", "--spec", "eq2_iv", "--digits", "3", "--threads", "2"]
        )
        self.assertEqual((options.spec, options.digits, options.threads), ("eq2_iv", 3, 2))

    def test_unknown_subcommand_is_a_usage_error(self):
        status, stderr = invoke("tabulate")
        self.assertEqual(status, 2)
        self.assertIn("usage: monopsono", stderr)

    def test_invalid_flag_value_is_a_usage_error(self):
        status, _ = invoke("concentration", "--digits", "6")
        self.assertEqual(status, 2)


class FailureTests(CliTestCase):
    def test_missing_input_file(self):
        status, stderr = invoke("ingest", "--out", self.out)
        self.assertEqual(status, 1)
        last = stderr.strip().splitlines()[-1]
        self.assertTrue(last.startswith("parse error: Input file not found"), last)
        self.assertFalse((self.out / "manifest_ingest.json").exists())

    def test_parse_error_names_row_and_column(self):
        self.out.mkdir()
        (self.out / "market_panel.csv").write_text(
            "industry,zone,year,estab_id,count,share\n1234,z,20x0,E1,1,1\n"
        )
        status, stderr = invoke("concentration", "--out", self.out)
        self.assertEqual(status, 1)
        self.assertIn("(row 1, column year)", stderr.strip().splitlines()[-1])

    def test_configuration_errors(self):
        status, stderr = invoke("regress", "--out", self.out, "--spec", "eq9")
        self.assertEqual(status, 1)
        self.assertTrue(stderr.strip().splitlines()[-1].startswith("configuration error:"))

        status, _ = invoke("report", "--out", self.out)
        self.assertEqual(status, 1)

    def test_domain_error_from_simulate(self):
        status, stderr = invoke("simulate", "--out", self.out, "--firms", "0")
        self.assertEqual(status, 1)
        self.assertTrue(stderr.strip().splitlines()[-1].startswith("domain error:"))


class SimulateCommandTests(CliTestCase):
    def test_outputs_and_manifest(self):
        status, _ = invoke("simulate", "--out", self.out, "--firms", "1,2", "--wmin-grid", "0:12:1")
        self.assertEqual(status, 0)

        curve = pd.read_csv(self.out / "response_curve.csv")
        self.assertEqual(list(curve.columns), ["j", "wmin", "d_wage", "d_employment", "regime"])
        self.assertEqual(len(curve), 26)
        equilibria = pd.read_csv(self.out / "equilibria.csv")
        self.assertEqual(equilibria["employment"].iloc[0], 5.0)
        self.assertAlmostEqual(equilibria["employment"].iloc[1], 20 / 3, places=8)

        manifest = read_manifest(self.out, "simulate")
        self.assertEqual(manifest["subcommand"], "simulate")
        self.assertEqual(manifest["parameters"]["firms"], [1, 2])
        self.assertEqual(manifest["inputs"], [])
        self.assertEqual(
            [entry["path"] for entry in manifest["outputs"]],
            [str(self.out / "equilibria.csv"), str(self.out / "response_curve.csv")],
        )
        self.assertEqual(len(manifest["outputs"][0]["sha256"]), 64)
        self.assertIn("numpy", manifest["versions"])

    def test_rerun_is_byte_identical(self):
        argv = ("simulate", "--out", self.out, "--firms", "1,3,5")
        invoke(*argv)
        first = {p.name: p.read_bytes() for p in self.out.iterdir()}
        invoke(*argv)
        second = {p.name: p.read_bytes() for p in self.out.iterdir()}
        self.assertEqual(first, second)

    def test_config_section(self):
        config = self.tmp / "pipeline.ini"
        config.write_text("[simulate]\nc = 20\nfirms = 1\nwmin_grid = 0,5\n")
        status, _ = invoke("simulate", "--config", config, "--out", self.out)
        self.assertEqual(status, 0)
        equilibria = pd.read_csv(self.out / "equilibria.csv")
        self.assertEqual(equilibria["wage"].iloc[0], 10.0)

        config.write_text("[simulate]\ncolour = red\n")
        status, stderr = invoke("simulate", "--config", config, "--out", self.out)
        self.assertEqual(status, 1)
