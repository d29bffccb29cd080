"""concord: an exact-arithmetic concordance calculator for low crossing knots."""

__version__ = "0.1.0"
