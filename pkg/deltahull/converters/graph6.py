# external
import attr
import networkx as nx

# app
from ..constants import GRAPH6_HEADER, GRAPH6_MAX_N
from ..exceptions import GraphFormatError
from ..models import Graph
from .base import BaseConverter


# https://users.cecs.anu.edu.au/~bdm/data/formats.txt
@attr.s()
class Graph6Converter(BaseConverter):
    """graph6, short form only (n <= 62). One graph per line.
    """
    name = 'graph6'

    def can_parse(self, content: str) -> bool:
        for _number, line in self._lines(content):
            if line == GRAPH6_HEADER:
                continue
            try:
                self.parse_line(line)
            except GraphFormatError:
                return False
            return True
        return False

    def loads(self, content: str) -> Graph:
        """Decode the first graph of the text.
        """
        for _number, line in self._lines(content):
            if line != GRAPH6_HEADER:
                return self.parse_line(line)
        raise GraphFormatError('no graph6 line found')

    def parse_line(self, line: str) -> Graph:
        line = line.strip()
        if line.startswith(GRAPH6_HEADER):
            line = line[len(GRAPH6_HEADER):]
        if not line:
            raise GraphFormatError('empty graph6 string')
        for char in line:
            if not 63 <= ord(char) <= 126:
                raise GraphFormatError('character outside 63..126', char=char, graph6=line)

        n = ord(line[0]) - 63
        if n > GRAPH6_MAX_N:
            raise GraphFormatError('long form (n > 62) is not supported', graph6=line)
        expected = 1 + (n * (n - 1) // 2 + 5) // 6
        if len(line) != expected:
            raise GraphFormatError('bad length', graph6=line, expected=expected, found=len(line))

        graph = nx.from_graph6_bytes(line.encode('ascii'))
        return Graph(n=n, edges=graph.edges())

    def dumps(self, graph: Graph) -> str:
        if graph.n > GRAPH6_MAX_N:
            raise GraphFormatError('long form (n > 62) is not supported', n=graph.n)
        encoded = nx.to_graph6_bytes(graph.to_networkx(), header=False)
        return encoded.decode('ascii').strip()
