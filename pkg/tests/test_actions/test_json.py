# built-in
import json

# external
import pytest

# project
from deltahull.actions import make_json
from deltahull.actions._json import _flatdict


@pytest.mark.parametrize('given, expected', [
    (1, 1),
    ({1: 2}, {'1': 2}),
    ({1: {2: 3}}, {'1.2': 3}),
    ({1: {2: 3, 4: 5}, 6: 7}, {'1.2': 3, '1.4': 5, '6': 7}),
    ([{1: {2: 3}}, {4: {5: 6}}], [{'1.2': 3}, {'4.5': 6}]),
])
def test_flatdict(given, expected):
    assert _flatdict(given) == expected


DATA = dict(
    name='h',
    value=3,
    witness=[0, 1, 3],
    checks=[dict(name='levi', result='pass'), dict(name='conjecture', result='fail')],
)


def test_plain():
    output = make_json(DATA, colors=False)
    assert json.loads(output) == DATA
    assert output.index('"checks"') < output.index('"name"')


@pytest.mark.parametrize('key, expected', [
    ('value',               '3'),
    ('witness.len()',       '3'),
    ('witness-last()',      '3'),
    ('witness.0',           '0'),
    ('checks.1.result',     'fail'),
])
def test_filter_scalar(key, expected):
    assert make_json(DATA, key=key, colors=False) == expected


def test_filter_collections():
    assert json.loads(make_json(DATA, key='checks.name', colors=False)) == ['levi', 'conjecture']
    assert json.loads(make_json(DATA, key='name+value', colors=False)) == dict(name='h', value=3)
