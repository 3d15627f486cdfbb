"""Integer partitions, the labels of every basis in the library.

A partition is stored as a plain tuple of positive ints in weakly decreasing
order; the zero partition is ``()``.  Use :func:`partition` to canonicalise
arbitrary input (it strips zeros and checks ordering).
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Tuple

Partition = Tuple[int, ...]

EMPTY: Partition = ()


def partition(parts: Iterable[int] = ()) -> Partition:
    """Return the canonical tuple for ``parts``, dropping trailing zeros."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(x <= 0 for x in p):
        raise ValueError(f"partition parts must be positive: {list(parts)}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {list(p)}")
    return p


def weight(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


@lru_cache(maxsize=None)
def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram: the i-th part counts rows longer than i."""
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > i) for i in range(lam[0]))


def contains(lam: Partition, mu: Partition) -> bool:
    """True iff the diagram of ``mu`` fits inside the diagram of ``lam``."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def _parts_bounded(n: int, largest: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _parts_bounded(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions_of(n: int) -> Tuple[Partition, ...]:
    """All partitions of ``n`` in reverse-lexicographic order.

    >>> partitions_of(4)
    ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return tuple(_parts_bounded(n, n))


def partitions_upto(n: int) -> Tuple[Partition, ...]:
    """Partitions of weight 0..n, grouped by weight, each group reverse-lex."""
    out: list = []
    for k in range(n + 1):
        out.extend(partitions_of(k))
    return tuple(out)


def sort_key(lam: Partition) -> tuple:
    """Key giving (weight, reverse-lex) order, the canonical output order."""
    return (sum(lam), tuple(-x for x in lam))


def multiplicities(lam: Partition) -> dict:
    m: dict = {}
    for x in lam:
        m[x] = m.get(x, 0) + 1
    return m


def hook_lengths(lam: Partition) -> list:
    lc = conjugate(lam)
    return [lam[i] - j + lc[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]
