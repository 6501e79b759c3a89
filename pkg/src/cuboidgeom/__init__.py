"""Exact algebra for the cuboid and face-cuboid surfaces."""

__version__ = "0.1.0"
