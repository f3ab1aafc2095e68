"""Shared fixtures for powersum tests."""
import io
import json
import os

import pytest

from powersum.cli import run


@pytest.fixture(scope="session")
def project_root():
    """Return the project root directory."""
    return os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


@pytest.fixture
def run_cli():
    """Run the CLI in-process; returns (exit_status, parsed JSON lines)."""

    def _run(*argv):
        out = io.StringIO()
        report = run(list(argv), out=out)
        lines = [json.loads(line) for line in out.getvalue().splitlines() if line.strip()]
        return report.exit_status, lines

    return _run
