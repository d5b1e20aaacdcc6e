# built-in
from typing import List, Set, Tuple

# external
import attr

# app
from ..exceptions import GraphFormatError
from ..models import Graph
from .base import BaseConverter


def _ints(line: str, number: int) -> List[int]:
    parts = line.split()
    if len(parts) != 2 or not all(part.isdigit() for part in parts):
        raise GraphFormatError('expected two nonnegative integers', line=number, content=line)
    return [int(part) for part in parts]


@attr.s()
class EdgeListConverter(BaseConverter):
    """Plain edge list.

    First non-comment line is `n m`, then `m` lines `u v` with 0-based ids.
    `#` starts a comment.
    """
    name = 'edgelist'

    def can_parse(self, content: str) -> bool:
        for number, line in self._lines(content, comment='#'):
            try:
                _ints(line, number)
            except GraphFormatError:
                return False
            return True
        return False

    def loads(self, content: str) -> Graph:
        lines = self._lines(content, comment='#')
        header = next(lines, None)
        if header is None:
            raise GraphFormatError('missing header')
        number, line = header
        try:
            n, m = _ints(line, number)
        except GraphFormatError as exc:
            raise GraphFormatError('malformed header', **exc.extra)

        edges = []              # type: List[Tuple[int, int]]
        seen = set()            # type: Set[Tuple[int, int]]
        for number, line in lines:
            u, v = _ints(line, number)
            if u >= n or v >= n:
                raise GraphFormatError('endpoint out of range', line=number, edge=(u, v), n=n)
            if u == v:
                raise GraphFormatError('self-loop', line=number, edge=(u, v))
            edge = (min(u, v), max(u, v))
            if edge in seen:
                raise GraphFormatError('duplicate edge', line=number, edge=edge)
            seen.add(edge)
            edges.append(edge)

        if len(edges) != m:
            raise GraphFormatError('edge count mismatch', expected=m, found=len(edges))
        return Graph(n=n, edges=edges)

    def dumps(self, graph: Graph) -> str:
        lines = ['{} {}'.format(graph.n, graph.edge_count)]
        lines.extend('{} {}'.format(u, v) for u, v in graph.edges)
        return '\n'.join(lines) + '\n'
