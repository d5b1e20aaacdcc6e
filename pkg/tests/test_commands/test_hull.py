# built-in
import json
from pathlib import Path

# project
from deltahull.commands import ConvexCommand, HullCommand, IntervalCommand
from deltahull.config import Config


def _config(path: Path, vertices: str, **extra) -> Config:
    config = Config()
    config.attach(dict(graph=str(path), set=vertices, nocolors=True, **extra))
    return config


def test_hull(fixtures_path: Path, capsys):
    command = HullCommand(argv=[], config=_config(fixtures_path / 'k3.el', '0,1'))
    result = command()
    assert result is True
    captured = capsys.readouterr()
    assert captured.out == '0 1 2\n'


def test_hull_trace(fixtures_path: Path, capsys):
    config = _config(fixtures_path / 'bowtie.el', '1,2,3', trace=True)
    command = HullCommand(argv=[], config=config)
    assert command() is True
    captured = capsys.readouterr()
    assert captured.out == '1 2 3\n0 1 2 3 4\n'


def test_hull_json(fixtures_path: Path, capsys):
    config = _config(fixtures_path / 'bowtie.el', '0,1', json=True)
    command = HullCommand(argv=[], config=config)
    assert command() is True
    output = json.loads(capsys.readouterr().out)
    assert output == {'rounds': [[0, 1], [0, 1, 2]], 'final': [0, 1, 2]}


def test_interval(fixtures_path: Path, capsys):
    command = IntervalCommand(argv=[], config=_config(fixtures_path / 'bowtie.el', '1,2,3'))
    assert command() is True
    assert capsys.readouterr().out == '0 1 2 3 4\n'


def test_convex(fixtures_path: Path, capsys):
    command = ConvexCommand(argv=[], config=_config(fixtures_path / 'k3.el', '0,1'))
    assert command() is True
    assert capsys.readouterr().out == 'false\n'

    command = ConvexCommand(argv=[], config=_config(fixtures_path / 'k3.el', '0,1,2'))
    assert command() is True
    assert capsys.readouterr().out == 'true\n'
