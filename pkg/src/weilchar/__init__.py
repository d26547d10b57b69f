"""Exact computation of the Weil character of Sp(2n, q) on G = <-I> x B."""

__version__ = "0.1.0"
