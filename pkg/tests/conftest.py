# built-in
import shutil
from pathlib import Path

# external
import pytest

# project
from deltahull.models import Graph


@pytest.fixture()
def temp_path(tmp_path: Path):
    for path in tmp_path.iterdir():
        if path.is_file():
            path.unlink()
        else:
            shutil.rmtree(str(path))
    yield tmp_path


@pytest.fixture
def tests_path() -> Path:
    """ Return the absolute Path to 'tests' directory """
    return Path(__file__).parent


@pytest.fixture
def fixtures_path(tests_path) -> Path:
    return tests_path / Path('fixtures')


@pytest.fixture
def k3() -> Graph:
    return Graph(n=3, edges=[(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def bowtie() -> Graph:
    """Two triangles sharing vertex 2.
    """
    return Graph(n=5, edges=[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


@pytest.fixture
def c5() -> Graph:
    return Graph(n=5, edges=[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])


@pytest.fixture
def p4() -> Graph:
    return Graph(n=4, edges=[(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def diamond() -> Graph:
    """K4 without the edge 0-3.
    """
    return Graph(n=4, edges=[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
