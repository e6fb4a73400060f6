"""Global test fixtures."""

import logging

import pytest

from bayesarith.config import logging as bayesarith_logging
from bayesarith.config.settings import Settings
from bayesarith.encoder.addition import AdditionSpec, build_addition
from bayesarith.encoder.multiplication import FactoringSpec, build_factoring


@pytest.fixture(autouse=True)
def _isolated_home(tmp_path, monkeypatch):
    """Point the data directory at a temp dir so logs and reports never touch ~/.bayesarith."""
    home = tmp_path / "home"
    monkeypatch.setenv("BAYESARITH_HOME", str(home))
    monkeypatch.delenv("BAYESARITH_JOBS", raising=False)
    return home


@pytest.fixture(autouse=True)
def _fresh_logger(monkeypatch):
    """Drop handlers bound to a previous test's temp dir and captured streams."""
    monkeypatch.setattr(bayesarith_logging, "_logger", None)
    yield
    logger = logging.getLogger(bayesarith_logging.LOGGER_NAME)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()


@pytest.fixture
def exact_settings():
    return Settings(jobs=1)


@pytest.fixture
def float_settings():
    return Settings(mode="float", jobs=1)


@pytest.fixture
def add_0_plus_1():
    """n=1 addition with U=0, V=1."""
    return build_addition(AdditionSpec.from_values(1, u=0, v=1))


@pytest.fixture
def add_2_plus_3():
    """n=2 addition with U=2, V=3: 40 unknowns, 44 equations."""
    return build_addition(AdditionSpec.from_values(2, u=2, v=3))


@pytest.fixture
def subtraction_1_from_0():
    """n=1 with S=0 and U=1, which has no nonnegative solution."""
    return build_addition(AdditionSpec.from_values(1, u=1, s=0))


@pytest.fixture
def factoring_6():
    return build_factoring(FactoringSpec(6))
