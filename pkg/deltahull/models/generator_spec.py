# built-in
from typing import Optional, Tuple

# external
import attr

# app
from ..constants import FAMILIES
from ..exceptions import GeneratorSpecError
from .graph import Graph


def _to_tuple(value) -> tuple:
    return tuple(value or ())


@attr.s(frozen=True)
class GeneratorSpec:
    """Parameters of a triangle family member.

    + `triangle_chain`: `k` triangles, consecutive apexes joined by paths
      with `path_lengths[i]` internal vertices.
    + `triangle_fan`: `n - 1` triangles glued in a fan, target value `n`.
    """
    family = attr.ib(type=str)
    k = attr.ib(type=Optional[int], default=None)
    path_lengths = attr.ib(type=tuple, converter=_to_tuple, factory=tuple)
    n = attr.ib(type=Optional[int], default=None)

    def __attrs_post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise GeneratorSpecError('unknown family', family=self.family)
        if self.family == 'triangle_chain':
            if self.k is None or self.k < 1:
                raise GeneratorSpecError('chain needs at least one triangle', k=self.k)
            if len(self.path_lengths) != self.k - 1:
                raise GeneratorSpecError(
                    'chain needs k-1 path lengths',
                    k=self.k,
                    paths=list(self.path_lengths),
                )
            if any(length < 0 for length in self.path_lengths):
                raise GeneratorSpecError('negative path length', paths=list(self.path_lengths))
            return
        if self.n is None or self.n < 3:
            raise GeneratorSpecError('fan needs n >= 3', n=self.n)

    @classmethod
    def chain(cls, k: int, path_lengths=()) -> 'GeneratorSpec':
        return cls(family='triangle_chain', k=k, path_lengths=path_lengths)

    @classmethod
    def fan(cls, n: int) -> 'GeneratorSpec':
        return cls(family='triangle_fan', n=n)

    @property
    def m(self) -> int:
        """Internal path vertices. They lie on no triangle.
        """
        return sum(self.path_lengths)

    def __str__(self) -> str:
        if self.family == 'triangle_chain':
            return 'triangle_chain(k={}, paths={})'.format(self.k, list(self.path_lengths))
        return 'triangle_fan(n={})'.format(self.n)


@attr.s(frozen=True)
class GeneratedGraph:
    spec = attr.ib(type=GeneratorSpec)
    graph = attr.ib(type=Graph)
    roles = attr.ib(type=tuple)     # label per vertex id: a1, b1, c1, d1, ..., b

    def vertex(self, label: str) -> int:
        return self.roles.index(label)

    def vertices(self, *labels: str) -> Tuple[int, ...]:
        return tuple(self.vertex(label) for label in labels)
