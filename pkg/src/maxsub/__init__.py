"""Exact structure theory and maximal subalgebras of finite-dimensional algebras."""

__version__ = "0.1.0"
