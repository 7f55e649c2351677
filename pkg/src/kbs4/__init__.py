"""Exact computations in representation rings of symmetric groups and in
truncated K-rings of their classifying spaces."""

__version__ = "0.1.0"
