"""Test configuration and fixtures."""

import logging
import os
import sys

import pytest

# Add project root and src directories to Python path
root_path = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
src_path = os.path.join(root_path, 'src')

sys.path.insert(0, root_path)  # For tests package
sys.path.insert(0, src_path)   # For src packages

from core.config_manager import LIMIT_ENV_VAR, ConfigManager
from pqtree.codec import parse_tree
from tests.helpers.samples import SAMPLE_TREE_TEXT, ham_instance


@pytest.fixture(autouse=True)
def configure_logging():
    """Configure logging for all tests and restore the root logger afterwards."""
    root_logger = logging.getLogger()
    handlers, level = root_logger.handlers[:], root_logger.level
    logging.basicConfig(
        level=logging.INFO,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr
    )
    yield
    root_logger.handlers[:] = handlers
    root_logger.setLevel(level)


@pytest.fixture(autouse=True)
def isolated_config(monkeypatch):
    """Start every test from the repository config file with no environment override."""
    monkeypatch.delenv(LIMIT_ENV_VAR, raising=False)
    ConfigManager.reset_cache()
    yield
    ConfigManager.reset_cache()


@pytest.fixture
def mock_config_file(tmp_path):
    """Point ConfigManager at a temporary config file."""
    original_config = ConfigManager.CONFIG_FILE
    ConfigManager.CONFIG_FILE = str(tmp_path / "config.yaml")
    ConfigManager.reset_cache()
    yield tmp_path / "config.yaml"
    ConfigManager.CONFIG_FILE = original_config
    ConfigManager.reset_cache()


@pytest.fixture
def sample_tree():
    """The five-leaf tree with twelve frontiers."""
    return parse_tree(SAMPLE_TREE_TEXT)


@pytest.fixture
def single_edge():
    return ham_instance(2, [(1, 2)], 1, 2)


@pytest.fixture
def path_graph():
    """Path 1 - 3 - 2 with w=1, s=2."""
    return ham_instance(3, [(1, 3), (3, 2)], 1, 2)


@pytest.fixture
def four_cycle():
    """4-cycle with w and s opposite each other: no Hamiltonian path."""
    return ham_instance(4, [(1, 2), (2, 3), (3, 4), (4, 1)], 1, 3)


@pytest.fixture
def diamond():
    return ham_instance(4, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)], 1, 4)


@pytest.fixture
def k4_with_tail():
    """K4 on 1..4 plus the pendant edge {4,5}; w=1, s=5."""
    return ham_instance(5, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (4, 5)], 1, 5)


@pytest.fixture
def graph_file(tmp_path):
    """Write graph file text to a temporary path."""
    def write(text, name="graph.txt"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write
