"""
Test Configuration and Shared Fixtures
"""
import json
from unittest.mock import MagicMock

import pytest

from src.config.app_config import AppConfig
from src.model.class_spec import ClassSpec
from src.model.gallery import complete, cycle, path, transitive_tournament
from src.model.structure import Signature, Structure
from src.view.view_interfaces import ReportViewInterface


@pytest.fixture(autouse=True)
def fresh_config():
    """Every test starts from default settings."""
    config = AppConfig()
    config.reset()
    yield config
    config.reset()


@pytest.fixture
def binary():
    return Signature.binary()


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def k3():
    return complete(3)


@pytest.fixture
def p4():
    return path(4)


@pytest.fixture
def linear3():
    """The strict linear order 0 < 1 < 2."""
    return transitive_tournament(3)


@pytest.fixture
def antichain3():
    return Structure.binary(3, [])


@pytest.fixture
def poset():
    return ClassSpec.from_catalog("poset")


@pytest.fixture
def triangle_free():
    return ClassSpec.from_catalog("triangle_free")


@pytest.fixture
def catalog():
    """Fixture providing catalog classes by name."""
    return ClassSpec.from_catalog


@pytest.fixture
def write_json(tmp_path):
    """Fixture writing a JSON payload (or anything with to_dict) to a temp file."""

    def write(name, payload):
        if hasattr(payload, "to_dict"):
            payload = payload.to_dict()
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)

    return write


@pytest.fixture
def mock_report_view():
    """Fixture providing a mocked report view."""
    view = MagicMock(spec=ReportViewInterface)
    return view
