"""
Pipeline subcommands, one module per subcommand, each exposing ``Command``.
"""

COMMAND_MODULES = (
    "synth",
    "ingest",
    "delineate",
    "concentration",
    "instrument",
    "regress",
    "elasticity",
    "bounds",
    "simulate",
    "report",
)
