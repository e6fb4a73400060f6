"""Filesystem locations for logs, reports and exports."""

import os
from pathlib import Path

HOME_ENV = "BAYESARITH_HOME"


def get_data_dir() -> Path:
    """
    Get the data directory for logs, reports and exported systems.

    Uses $BAYESARITH_HOME when set, else ~/.bayesarith.

    Returns:
        Path to data directory (created if needed)
    """
    override = os.environ.get(HOME_ENV, "")
    data_dir = Path(override) if override else Path.home() / ".bayesarith"
    data_dir.mkdir(parents=True, exist_ok=True)
    return data_dir


def get_reports_dir() -> Path:
    reports = get_data_dir() / "reports"
    reports.mkdir(parents=True, exist_ok=True)
    return reports


def get_exports_dir() -> Path:
    exports = get_data_dir() / "exports"
    exports.mkdir(parents=True, exist_ok=True)
    return exports
