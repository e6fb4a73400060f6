"""bayesarith test suite."""
