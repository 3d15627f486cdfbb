"""Sparse integer combinations of Schur functions."""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, Mapping, Tuple

from .lr import lr_product
from .partitions import Partition, partition, sort_key


class SymFunc:
    """An element of the ring of symmetric functions in the Schur basis.

    Immutable; zero coefficients are never stored.  ``*`` between two
    SymFuncs is the outer (Littlewood-Richardson) product, ``*`` with an
    int is scalar multiplication.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Partition, int] | Iterable[Tuple[Partition, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[Partition, int] = {}
        for lam, c in items:
            if c:
                acc[lam] = acc.get(lam, 0) + int(c)
        self._terms = {k: v for k, v in acc.items() if v}
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Partition, int]) -> "SymFunc":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def schur(cls, lam: Iterable[int] = ()) -> "SymFunc":
        return cls._raw({partition(lam): 1})

    @classmethod
    def zero(cls) -> "SymFunc":
        return cls._raw({})

    @classmethod
    def one(cls) -> "SymFunc":
        return cls._raw({(): 1})

    # -- mapping-ish access -------------------------------------------------
    def items(self) -> Iterator[Tuple[Partition, int]]:
        """Terms in canonical (weight, reverse-lex) order."""
        for lam in sorted(self._terms, key=sort_key):
            yield lam, self._terms[lam]

    def coeff(self, lam: Iterable[int]) -> int:
        return self._terms.get(tuple(lam), 0)

    def support(self) -> Tuple[Partition, ...]:
        return tuple(lam for lam, _ in self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = SymFunc({(): other})
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- grading ------------------------------------------------------------
    def degree(self) -> int:
        """Largest weight present; -1 for zero."""
        return max((sum(lam) for lam in self._terms), default=-1)

    def grade(self, n: int) -> "SymFunc":
        return SymFunc._raw({lam: c for lam, c in self._terms.items() if sum(lam) == n})

    def truncate(self, degree: int) -> "SymFunc":
        return SymFunc._raw({lam: c for lam, c in self._terms.items() if sum(lam) <= degree})

    def is_homogeneous(self) -> bool:
        return len({sum(lam) for lam in self._terms}) <= 1

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other: "SymFunc | int") -> "SymFunc":
        if isinstance(other, int):
            other = SymFunc({(): other})
        out = dict(self._terms)
        for lam, c in other._terms.items():
            v = out.get(lam, 0) + c
            if v:
                out[lam] = v
            else:
                out.pop(lam, None)
        return SymFunc._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "SymFunc":
        return SymFunc._raw({lam: -c for lam, c in self._terms.items()})

    def __sub__(self, other: "SymFunc | int") -> "SymFunc":
        if isinstance(other, int):
            other = SymFunc({(): other})
        return self + (-other)

    def __rsub__(self, other: int) -> "SymFunc":
        return SymFunc({(): other}) - self

    def __mul__(self, other: "SymFunc | int") -> "SymFunc":
        if isinstance(other, int):
            if other == 0:
                return SymFunc.zero()
            return SymFunc._raw({lam: c * other for lam, c in self._terms.items()})
        if isinstance(other, SymFunc):
            return outer_product(self, other)
        return NotImplemented

    def __rmul__(self, other: int) -> "SymFunc":
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> "SymFunc":
        if n < 0:
            raise ValueError("use series inversion for negative powers")
        out = SymFunc.one()
        for _ in range(n):
            out = out * self
        return out

    def __repr__(self) -> str:
        return f"SymFunc({self})"

    def __str__(self) -> str:
        from .textio import format_symfunc

        return format_symfunc(self)


def s(*parts: int) -> SymFunc:
    """Shorthand: ``s(2, 1)`` is the Schur function s_{2,1}; ``s()`` is 1."""
    return SymFunc.schur(parts)


def outer_product(f: SymFunc, g: SymFunc, degree: int | None = None) -> SymFunc:
    """Bilinear extension of s_lam * s_mu = sum_nu c^nu_{lam,mu} s_nu.

    With ``degree`` given, pairs whose product exceeds it are skipped.
    """
    out: Dict[Partition, int] = {}
    for lam, a in f._terms.items():
        wl = sum(lam)
        for mu, b in g._terms.items():
            if degree is not None and wl + sum(mu) > degree:
                continue
            ab = a * b
            for nu, c in lr_product(lam, mu):
                out[nu] = out.get(nu, 0) + ab * c
    return SymFunc._raw({k: v for k, v in out.items() if v})


def product_all(factors: Iterable[SymFunc], degree: int | None = None) -> SymFunc:
    out = SymFunc.one()
    for f in factors:
        out = outer_product(out, f, degree)
    return out


def graded_inverse(f: SymFunc, degree: int) -> SymFunc:
    """Inverse of f through grade ``degree``; f must have constant term 1."""
    if f.coeff(()) != 1:
        raise ValueError("graded inversion needs constant term 1")
    grades = [f.grade(k) for k in range(degree + 1)]
    inv = [SymFunc.one()]
    for n in range(1, degree + 1):
        acc = SymFunc.zero()
        for k in range(1, n + 1):
            if grades[k] and inv[n - k]:
                acc = acc + outer_product(grades[k], inv[n - k])
        inv.append(-acc)
    out = SymFunc.zero()
    for g in inv:
        out = out + g
    return out


def truncated_power(f: SymFunc, n: int, degree: int) -> SymFunc:
    """f**n through grade ``degree``; negative n uses graded inversion."""
    base = f.truncate(degree) if n >= 0 else graded_inverse(f, degree)
    out = SymFunc.one()
    for _ in range(abs(n)):
        out = outer_product(out, base, degree)
    return out
