import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from chroma.graphs import WeightedGraph  # noqa: E402


@pytest.fixture
def p3():
    """Path v1 - v2 - v3 with weights (2, 1, 1)."""
    return WeightedGraph.from_edges(3, [(0, 1), (1, 2)], [2, 1, 1])


@pytest.fixture
def k2():
    return WeightedGraph.from_edges(2, [(0, 1)])


@pytest.fixture
def tmp_json(tmp_path):
    import json

    def write(name, data):
        path = tmp_path / name
        path.write_text(data if isinstance(data, str) else json.dumps(data))
        return str(path)

    return write
