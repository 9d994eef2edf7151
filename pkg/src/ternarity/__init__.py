"""Executable ternary algebra: hypergraphs, cubix algebras, relations,
trisomorphisms and 3-Lie brackets."""

__version__ = "0.1.0"
