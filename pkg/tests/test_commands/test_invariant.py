# built-in
import json
from pathlib import Path

# external
import pytest

# project
from deltahull.commands import (
    InvariantAlphaCommand, InvariantCaraCommand, InvariantHellyCommand, InvariantRadonCommand,
    InvariantRankCommand,
)
from deltahull.config import Config
from deltahull.exceptions import CapExceededError


def _config(path: Path, **extra) -> Config:
    config = Config()
    config.attach(dict(graph=str(path), nocolors=True, **extra))
    return config


@pytest.mark.parametrize('command_class', [
    InvariantHellyCommand,
    InvariantRadonCommand,
    InvariantRankCommand,
    InvariantCaraCommand,
])
def test_bowtie(command_class, fixtures_path: Path, capsys):
    command = command_class(argv=[], config=_config(fixtures_path / 'bowtie.el'))
    assert command() is True
    assert capsys.readouterr().out == '3\n0 1 3\n'


def test_alpha(fixtures_path: Path, capsys):
    command = InvariantAlphaCommand(argv=[], config=_config(fixtures_path / 'bowtie.el'))
    assert command() is True
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == '2'
    assert len(lines[1].split()) == 2


def test_json(fixtures_path: Path, capsys):
    config = _config(fixtures_path / 'k3.g6', json=True)
    command = InvariantHellyCommand(argv=[], config=config)
    assert command() is True
    output = json.loads(capsys.readouterr().out)
    assert output == {'name': 'h', 'value': 2, 'witness': [0, 1]}


def test_cap(fixtures_path: Path):
    config = _config(fixtures_path / 'bowtie.el', cap=4)
    command = InvariantHellyCommand(argv=[], config=config)
    with pytest.raises(CapExceededError):
        command()
