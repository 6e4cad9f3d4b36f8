# Minimal shim required for editable installs (pip install -e .).
# All package metadata and configuration is defined in pyproject.toml.
# Version is derived automatically from Git tags via setuptools-scm.
from setuptools import setup

setup()
