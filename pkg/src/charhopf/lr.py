"""Littlewood-Richardson coefficients by LR-tableau enumeration.

A single counting routine, :func:`lr_count`, serves products, skews and
coproducts.  It fills the skew shape ``outer/inner`` row by row, each row
weakly increasing, columns strictly increasing, and keeps the reverse reading
word (rows top to bottom, each row right to left) a lattice word.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Tuple

from .partitions import Partition, contains, partitions_of


def _row_fillings(length: int, lo_bounds: Tuple[int, ...], top: int):
    """Weakly increasing rows of ``length`` entries in 1..top.

    ``lo_bounds[j]`` is a strict lower bound for the entry in column j (the
    entry above it, or 0 when there is none).
    """
    row = [0] * length

    def rec(j: int, prev: int):
        if j == length:
            yield tuple(row)
            return
        start = max(prev, lo_bounds[j] + 1)
        for v in range(start, top + 1):
            row[j] = v
            yield from rec(j + 1, v)

    yield from rec(0, 1)


@lru_cache(maxsize=None)
def lr_count(outer: Partition, inner: Partition, content: Partition) -> int:
    """Number of LR tableaux of shape ``outer/inner`` and content ``content``.

    This is the coefficient c^outer_{inner, content}.
    """
    if sum(outer) != sum(inner) + sum(content):
        return 0
    if not contains(outer, inner) or not contains(outer, content):
        return 0
    if not content:
        return 1
    nrows = len(outer)
    inner_p = inner + (0,) * (nrows - len(inner))
    k = len(content)

    def rec(r: int, above: Dict[int, int], counts: Tuple[int, ...]) -> int:
        if r == nrows:
            return 1 if counts == content else 0
        start, stop = inner_p[r], outer[r]
        width = stop - start
        if width == 0:
            return rec(r + 1, {}, counts)
        lo = tuple(above.get(c, 0) for c in range(start, stop))
        total = 0
        for row in _row_fillings(width, lo, min(k, r + 1)):
            m = [0] * (k + 1)
            for v in row:
                m[v] += 1
            new = list(counts)
            ok = True
            for v in range(1, k + 1):
                new[v - 1] += m[v]
                if new[v - 1] > content[v - 1]:
                    ok = False
                    break
            if not ok:
                continue
            # reading right to left inside the row meets the larger letters first
            for v in range(2, k + 1):
                if m[v] and counts[v - 1] + m[v] > counts[v - 2]:
                    ok = False
                    break
            if not ok:
                continue
            total += rec(r + 1, {start + j: row[j] for j in range(width)}, tuple(new))
        return total

    return rec(0, {}, (0,) * k)


@lru_cache(maxsize=None)
def lr_product(lam: Partition, mu: Partition) -> Tuple[Tuple[Partition, int], ...]:
    """Expansion of s_lam * s_mu as ((nu, c), ...), nu in reverse-lex order."""
    if not lam:
        return ((mu, 1),)
    if not mu:
        return ((lam, 1),)
    if lam < mu:
        return lr_product(mu, lam)
    # put the larger shape inside: fewer cells to fill
    inner, content = (lam, mu) if sum(lam) >= sum(mu) else (mu, lam)
    out = []
    for nu in partitions_of(sum(lam) + sum(mu)):
        c = lr_count(nu, inner, content)
        if c:
            out.append((nu, c))
    return tuple(out)


@lru_cache(maxsize=None)
def lr_skew(nu: Partition, lam: Partition) -> Tuple[Tuple[Partition, int], ...]:
    """Expansion of s_nu / s_lam (skew) as ((mu, c), ...)."""
    if not lam:
        return ((nu, 1),)
    if not contains(nu, lam):
        return ()
    out = []
    for mu in partitions_of(sum(nu) - sum(lam)):
        if contains(nu, mu):
            c = lr_count(nu, lam, mu)
            if c:
                out.append((mu, c))
    return tuple(out)
