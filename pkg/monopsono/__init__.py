"""
monopsono - labor market concentration and minimum wage analysis.

Measures employer concentration in industry-by-zone labor markets,
delineates commuting zones from commuting flows, estimates
fixed-effects and instrumental-variable panel regressions with
cluster-robust inference, and simulates the Cournot oligopsony model
that links concentration to minimum wage effects.

Run the batch pipeline from the command line:

    monopsono synth --out data/
    monopsono ingest --config pipeline.ini
"""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("monopsono")
except PackageNotFoundError:  # pragma: no cover - source checkout without install
    __version__ = "0.0.0"
