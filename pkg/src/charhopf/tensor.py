"""Elements of tensor powers of the symmetric-function ring."""

from __future__ import annotations

from itertools import product as cartesian
from typing import Callable, Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from .lr import lr_product
from .partitions import Partition, sort_key
from .symfunc import SymFunc, outer_product

PRIMAL = "primal"
DUAL = "dual"

Key = Tuple[Partition, ...]


class OrientationError(ValueError):
    """A slot operation was applied to a slot of the wrong orientation."""


class TensorSF:
    """Sparse map from k-tuples of partitions to integers.

    ``orientation[i]`` says whether slot i lives in the ring (``"primal"``)
    or in its dual (``"dual"``).  Primal slots are acted on by outer
    multiplication and dual slots by skewing.
    """

    __slots__ = ("rank", "orientation", "_terms")

    def __init__(
        self,
        rank: int,
        terms: Mapping[Key, int] | Iterable[Tuple[Key, int]] = (),
        orientation: Sequence[str] | None = None,
    ):
        if rank < 1:
            raise ValueError("rank must be at least 1")
        self.rank = rank
        orientation = tuple(orientation) if orientation is not None else (PRIMAL,) * rank
        if len(orientation) != rank or any(o not in (PRIMAL, DUAL) for o in orientation):
            raise ValueError(f"bad orientation {orientation!r} for rank {rank}")
        self.orientation = orientation
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[Key, int] = {}
        for key, c in items:
            if len(key) != rank:
                raise ValueError(f"key {key!r} does not have rank {rank}")
            if c:
                acc[key] = acc.get(key, 0) + int(c)
        self._terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def _raw(cls, rank: int, terms: Dict[Key, int], orientation: Tuple[str, ...]) -> "TensorSF":
        obj = cls.__new__(cls)
        obj.rank = rank
        obj.orientation = orientation
        obj._terms = terms
        return obj

    @classmethod
    def unit(cls, rank: int, orientation: Sequence[str] | None = None) -> "TensorSF":
        return cls(rank, {((),) * rank: 1}, orientation)

    @classmethod
    def basis(cls, *parts: Partition, orientation: Sequence[str] | None = None) -> "TensorSF":
        return cls(len(parts), {tuple(parts): 1}, orientation)

    @classmethod
    def tensor(cls, *factors: SymFunc, orientation: Sequence[str] | None = None) -> "TensorSF":
        """f_1 ⊗ f_2 ⊗ ... as a rank-len(factors) tensor."""
        terms: Dict[Key, int] = {}
        for combo in cartesian(*(list(f.items()) for f in factors)):
            c = 1
            for _, a in combo:
                c *= a
            key = tuple(lam for lam, _ in combo)
            terms[key] = terms.get(key, 0) + c
        return cls(len(factors), terms, orientation)

    # -- access ---------------------------------------------------------------
    def items(self) -> Iterator[Tuple[Key, int]]:
        for key in sorted(self._terms, key=lambda k: tuple(sort_key(p) for p in k)):
            yield key, self._terms[key]

    def coeff(self, *parts: Partition) -> int:
        return self._terms.get(tuple(tuple(p) for p in parts), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorSF):
            return NotImplemented
        return (
            self.rank == other.rank
            and self.orientation == other.orientation
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.rank, self.orientation, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"TensorSF({self})"

    def __str__(self) -> str:
        from .textio import format_tensor

        return format_tensor(self)

    def slot_degrees(self) -> set:
        return {tuple(sum(p) for p in key) for key in self._terms}

    # -- linear structure -----------------------------------------------------
    def _check_compatible(self, other: "TensorSF") -> None:
        if self.rank != other.rank or self.orientation != other.orientation:
            raise OrientationError(
                f"incompatible tensors: rank {self.rank}/{other.rank}, "
                f"orientation {self.orientation}/{other.orientation}"
            )

    def __add__(self, other: "TensorSF") -> "TensorSF":
        self._check_compatible(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return TensorSF._raw(self.rank, out, self.orientation)

    def __neg__(self) -> "TensorSF":
        return TensorSF._raw(self.rank, {k: -c for k, c in self._terms.items()}, self.orientation)

    def __sub__(self, other: "TensorSF") -> "TensorSF":
        return self + (-other)

    def scale(self, a: int) -> "TensorSF":
        if a == 0:
            return TensorSF._raw(self.rank, {}, self.orientation)
        return TensorSF._raw(self.rank, {k: c * a for k, c in self._terms.items()}, self.orientation)

    def truncate(self, degree: int) -> "TensorSF":
        """Keep a term iff every slot degree is at most ``degree``."""
        return TensorSF._raw(
            self.rank,
            {k: c for k, c in self._terms.items() if all(sum(p) <= degree for p in k)},
            self.orientation,
        )

    def truncate_total(self, degree: int) -> "TensorSF":
        """Keep a term iff the sum of its slot degrees is at most ``degree``."""
        return TensorSF._raw(
            self.rank,
            {k: c for k, c in self._terms.items() if sum(sum(p) for p in k) <= degree},
            self.orientation,
        )

    def with_orientation(self, orientation: Sequence[str]) -> "TensorSF":
        return TensorSF(self.rank, self._terms, orientation)

    # -- slot manipulations ---------------------------------------------------
    def map_slot(self, slot: int, fn: Callable[[Partition], SymFunc]) -> "TensorSF":
        """Apply a linear map, given on basis elements, to one slot."""
        out: Dict[Key, int] = {}
        cache: Dict[Partition, SymFunc] = {}
        for key, c in self._terms.items():
            lam = key[slot]
            if lam not in cache:
                cache[lam] = fn(lam)
            for mu, a in cache[lam]._terms.items():
                nk = key[:slot] + (mu,) + key[slot + 1:]
                out[nk] = out.get(nk, 0) + c * a
        return TensorSF._raw(self.rank, {k: v for k, v in out.items() if v}, self.orientation)

    def permute(self, order: Sequence[int]) -> "TensorSF":
        """New tensor whose slot i is old slot ``order[i]``."""
        return TensorSF._raw(
            self.rank,
            {tuple(k[i] for i in order): c for k, c in self._terms.items()},
            tuple(self.orientation[i] for i in order),
        )

    def swap(self) -> "TensorSF":
        if self.rank != 2:
            raise ValueError("swap is defined on rank-2 tensors")
        return self.permute((1, 0))

    def embed(self, slots: Sequence[int], rank: int) -> "TensorSF":
        """Place this tensor in the given slots of a larger tensor, 1 elsewhere.

        ``r.embed((0, 2), 3)`` is the leg notation r^{13}.
        """
        if len(slots) != self.rank:
            raise ValueError("need one target slot per slot")
        out: Dict[Key, int] = {}
        for key, c in self._terms.items():
            nk: list = [()] * rank
            for s_, p in zip(slots, key):
                nk[s_] = p
            out[tuple(nk)] = c
        orient = [PRIMAL] * rank
        for s_, o in zip(slots, self.orientation):
            orient[s_] = o
        return TensorSF._raw(rank, out, tuple(orient))

    def contract_slot(self, slot: int, fn: Callable[[Partition], int]) -> "TensorSF":
        """Apply a linear functional to one slot, lowering the rank by one."""
        if self.rank == 1:
            raise ValueError("cannot contract a rank-1 tensor; use to_symfunc")
        out: Dict[Key, int] = {}
        for key, c in self._terms.items():
            a = fn(key[slot])
            if a:
                nk = key[:slot] + key[slot + 1:]
                out[nk] = out.get(nk, 0) + c * a
        orient = self.orientation[:slot] + self.orientation[slot + 1:]
        return TensorSF._raw(self.rank - 1, {k: v for k, v in out.items() if v}, orient)

    def to_symfunc(self) -> SymFunc:
        if self.rank != 1:
            raise ValueError("only rank-1 tensors convert to SymFunc")
        return SymFunc({k[0]: c for k, c in self._terms.items()})

    def multiply(self, other: "TensorSF", degree: int | None = None) -> "TensorSF":
        """Componentwise outer product (a⊗b)(c⊗d) = ac⊗bd, per-slot truncated."""
        self._check_compatible(other)
        return _componentwise(self, other, degree)


def _group_by_prefix(t: TensorSF) -> Dict[Key, Dict[Partition, int]]:
    groups: Dict[Key, Dict[Partition, int]] = {}
    for key, c in t._terms.items():
        groups.setdefault(key[:-1], {})[key[-1]] = c
    return groups


def _componentwise(a: TensorSF, b: TensorSF, degree: int | None) -> TensorSF:
    ga, gb = _group_by_prefix(a), _group_by_prefix(b)
    out: Dict[Key, int] = {}
    for pa, fa in ga.items():
        for pb, fb in gb.items():
            if degree is not None and any(sum(x) + sum(y) > degree for x, y in zip(pa, pb)):
                continue
            prefix_terms = [((), 1)]
            for x, y in zip(pa, pb):
                nxt = []
                for pre, c in prefix_terms:
                    for nu, d in lr_product(x, y):
                        nxt.append((pre + (nu,), c * d))
                prefix_terms = nxt
            last = outer_product(SymFunc._raw(fa), SymFunc._raw(fb), degree)
            if not last:
                continue
            for pre, c in prefix_terms:
                for nu, d in last._terms.items():
                    k = pre + (nu,)
                    out[k] = out.get(k, 0) + c * d
    return TensorSF._raw(a.rank, {k: v for k, v in out.items() if v}, a.orientation)


def tensor_power(t: TensorSF, n: int, degree: int) -> TensorSF:
    out = TensorSF.unit(t.rank, t.orientation)
    for _ in range(n):
        out = out.multiply(t, degree)
    return out
