"""Exact finite-group toolkit for split extension classifiers of internal groupoids."""

__version__ = "0.1.0"
