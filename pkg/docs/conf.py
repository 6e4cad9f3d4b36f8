# Configuration file for the Sphinx documentation builder.
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import os
import sys
from importlib.metadata import PackageNotFoundError
from importlib.metadata import version as pkg_version

# -- Path setup ---------------------------------------------------------------

sys.path.insert(0, os.path.abspath(".."))

# -- Project information ------------------------------------------------------

project = "monopsono"
copyright = "2026, monopsono contributors"
author = "monopsono contributors"
try:
    release = pkg_version("monopsono")
except PackageNotFoundError:
    release = "0.1.0"
version = ".".join(release.split(".")[:2])

# -- General configuration ----------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.napoleon",
    "sphinx.ext.viewcode",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "myst_parser",
]

templates_path = ["_templates"]
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

# -- Autodoc configuration ----------------------------------------------------

autodoc_default_options = {
    "members": True,
    "member-order": "bysource",
    "undoc-members": True,
    "exclude-members": "__weakref__",
    "show-inheritance": True,
}

autosummary_generate = True
autodoc_typehints = "description"
autodoc_typehints_format = "short"

# -- Napoleon configuration (Google/NumPy docstring support) ------------------

napoleon_google_docstring = True
napoleon_numpy_docstring = False
napoleon_use_param = True
napoleon_use_rtype = True
napoleon_attr_annotations = True

# -- Intersphinx configuration ------------------------------------------------

intersphinx_mapping = {
    "python": ("https://docs.python.org/3/", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "pandas": ("https://pandas.pydata.org/docs/", None),
    "networkx": ("https://networkx.org/documentation/stable/", None),
}

# -- Options for HTML output --------------------------------------------------

html_theme = "furo"
html_static_path = ["_static"]
html_title = f"monopsono {release}"
html_short_title = "monopsono"

# -- MyST parser configuration ------------------------------------------------

myst_enable_extensions = ["colon_fence", "deflist", "dollarmath"]
