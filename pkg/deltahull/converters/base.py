# built-in
from pathlib import Path
from typing import Iterator, Tuple, Union

# external
import attr

# app
from ..models import Graph


@attr.s()
class BaseConverter:
    name = None     # type: str

    # inspection

    def can_parse(self, content: str) -> bool:
        return False

    # graph load and dump

    def loads(self, content: str) -> Graph:
        """read graph from text
        """
        raise NotImplementedError

    def load(self, path: Union[Path, str]) -> Graph:
        """read graph from file
        """
        if isinstance(path, str):
            path = Path(path)
        with path.open('r', encoding='utf8') as stream:
            return self.loads(content=stream.read())

    def dumps(self, graph: Graph) -> str:
        raise NotImplementedError

    def dump(self, graph: Graph, *, path: Union[Path, str]) -> None:
        if isinstance(path, str):
            path = Path(path)
        with path.open('w', encoding='utf8') as stream:
            stream.write(self.dumps(graph))

    # helpers

    @staticmethod
    def _lines(content: str, comment: str = None) -> Iterator[Tuple[int, str]]:
        """Yield `(line number, stripped line)` for non-blank lines.
        """
        for number, line in enumerate(content.splitlines(), start=1):
            if comment is not None:
                line = line.split(comment, maxsplit=1)[0]
            line = line.strip()
            if line:
                yield number, line
