# built-in
from typing import Iterable, Iterator

# external
import attr

# app
from ..exceptions import VertexSetError


def iter_bits(mask: int) -> Iterator[int]:
    """Yield positions of set bits in ascending order.
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count('1')


def _check_mask(instance, attribute, value: int) -> None:
    if value < 0 or value >> instance.n:
        raise VertexSetError('vertex out of range', n=instance.n, mask=value)


@attr.s(frozen=True, eq=True, hash=True, order=False)
class VertexSet:
    """Subset of vertex ids `0..n-1` stored as an int bitmask.

    Bit `v` is set iff vertex `v` belongs to the set.
    """
    mask = attr.ib(type=int, validator=_check_mask)
    n = attr.ib(type=int)

    @classmethod
    def empty(cls, n: int) -> 'VertexSet':
        return cls(mask=0, n=n)

    @classmethod
    def full(cls, n: int) -> 'VertexSet':
        return cls(mask=(1 << n) - 1, n=n)

    @classmethod
    def from_ids(cls, ids: Iterable[int], n: int) -> 'VertexSet':
        mask = 0
        for vertex in ids:
            if not 0 <= vertex < n:
                raise VertexSetError('vertex out of range', vertex=vertex, n=n)
            mask |= 1 << vertex
        return cls(mask=mask, n=n)

    @classmethod
    def parse(cls, text: str, n: int) -> 'VertexSet':
        """Parse comma-separated ids like `0,1,4`. Empty text is the empty set.
        """
        ids = []
        for part in text.split(','):
            part = part.strip()
            if not part:
                continue
            if not part.isdigit():
                raise VertexSetError('malformed vertex set', text=text)
            ids.append(int(part))
        if len(ids) != len(set(ids)):
            raise VertexSetError('duplicate vertex in set', text=text)
        return cls.from_ids(ids, n=n)

    # set operations

    def with_vertex(self, vertex: int) -> 'VertexSet':
        return type(self)(mask=self.mask | (1 << vertex), n=self.n)

    def without(self, vertex: int) -> 'VertexSet':
        return type(self)(mask=self.mask & ~(1 << vertex), n=self.n)

    def issubset(self, other: 'VertexSet') -> bool:
        return self.mask & ~other.mask == 0

    def __or__(self, other: 'VertexSet') -> 'VertexSet':
        return type(self)(mask=self.mask | other.mask, n=self.n)

    def __and__(self, other: 'VertexSet') -> 'VertexSet':
        return type(self)(mask=self.mask & other.mask, n=self.n)

    def __sub__(self, other: 'VertexSet') -> 'VertexSet':
        return type(self)(mask=self.mask & ~other.mask, n=self.n)

    # container protocol

    def __contains__(self, vertex: int) -> bool:
        return vertex >= 0 and bool(self.mask >> vertex & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return popcount(self.mask)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __str__(self) -> str:
        return ' '.join(map(str, self))

    def as_list(self) -> list:
        return list(self)
