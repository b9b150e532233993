"""Certify that Shimura curves have no points over abelian number fields."""

__version__ = "0.1.0"
