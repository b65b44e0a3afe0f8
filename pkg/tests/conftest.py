import io
import sys

import pytest

from surgery.config import Config
from surgery.framing import wirtinger
from surgery.knots import catalog, parse_gauss
from surgery.main import run


@pytest.fixture(autouse=True)
def restore_config():
    """Config is class state; keep overrides from leaking between tests"""
    saved = Config.snapshot()
    yield
    for attribute, value in saved.items():
        setattr(Config, attribute, value)


@pytest.fixture
def trefoil():
    return catalog('trefoil')


@pytest.fixture
def unknot():
    return parse_gauss("")


@pytest.fixture
def trefoil_group(trefoil):
    return wirtinger(trefoil)


@pytest.fixture
def cli(monkeypatch, capsys):
    """Run the command line with optional stdin; returns (exit code, stdout, stderr)"""
    def invoke(*argv, stdin=""):
        monkeypatch.setattr(sys, 'stdin', io.StringIO(stdin))
        code = run(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return invoke
