# built-in
import json

# project
from deltahull.commands import GenChainCommand, GenFanCommand
from deltahull.config import Config
from deltahull.converters import EdgeListConverter, Graph6Converter


def _config(**extra) -> Config:
    config = Config()
    config.attach(dict(nocolors=True, **extra))
    return config


def test_fan(capsys):
    command = GenFanCommand(argv=['--n', '4'], config=_config())
    assert command() is True
    output = capsys.readouterr().out
    assert len(output.splitlines()) == 1
    graph = Graph6Converter().parse_line(output.strip())
    assert graph.n == 7
    assert graph.edge_count == 9


def test_fan_roles(capsys):
    command = GenFanCommand(argv=['--n', '3'], config=_config(roles=True))
    assert command() is True
    lines = capsys.readouterr().out.splitlines()
    assert lines[1:] == ['0 a1', '1 a2', '2 a3', '3 b1', '4 b']


def test_chain_edgelist(capsys):
    command = GenChainCommand(argv=['--k', '2', '--paths', '1'], config=_config(format='el'))
    assert command() is True
    graph = EdgeListConverter().loads(capsys.readouterr().out)
    assert graph.n == 7
    assert graph.edge_count == 8


def test_chain_json(capsys):
    command = GenChainCommand(argv=['--k', '3', '--paths', '1,1'], config=_config(json=True))
    assert command() is True
    output = json.loads(capsys.readouterr().out)
    assert output['value'] == 8
    assert output['n'] == 11
    assert output['roles']['d2'] == 7
