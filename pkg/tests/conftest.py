import pytest

from invgraph.graph_engine import build_graph
from invgraph.permutations import GroupKind


@pytest.fixture(scope="session")
def cache_dir(tmp_path_factory):
    return str(tmp_path_factory.mktemp("fingerprint-cache"))


@pytest.fixture(scope="session")
def graph(cache_dir):
    """Memoized access to exact graphs; heavy degrees build once per session."""

    def get(n: int, group: GroupKind):
        return build_graph(n, group, cache_dir)

    return get
