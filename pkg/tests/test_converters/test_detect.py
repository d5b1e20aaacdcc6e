# external
import pytest

# project
from deltahull.converters import EdgeListConverter, Graph6Converter, detect_converter, get_converter
from deltahull.exceptions import GraphFormatError


@pytest.mark.parametrize('content, name', [
    ('Bw\n',                    'graph6'),
    ('>>graph6<<Bw\n',          'graph6'),
    ('3 3\n0 1\n0 2\n1 2\n',    'edgelist'),
    ('# comment\n2 1\n0 1\n',   'edgelist'),
])
def test_detect(content, name):
    assert detect_converter(content).name == name


def test_detect_unknown():
    with pytest.raises(GraphFormatError):
        detect_converter('hello world\n')


@pytest.mark.parametrize('fmt, cls', [
    ('g6',          Graph6Converter),
    ('graph6',      Graph6Converter),
    ('el',          EdgeListConverter),
    ('edgelist',    EdgeListConverter),
])
def test_get_converter(fmt, cls):
    assert isinstance(get_converter(fmt), cls)
