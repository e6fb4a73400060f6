"""bayesarith - Bayesian arithmetic as exact linear programming."""

from bayesarith.version import __version__

__all__ = ["__version__"]
