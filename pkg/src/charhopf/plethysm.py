"""Schur-function plethysm through the power-sum basis.

Basis transitions use symmetric-group characters from the
Murnaghan-Nakayama rule:  s_λ = Σ_μ χ^λ(μ)/z_μ p_μ  and
p_μ = Σ_λ χ^λ(μ) s_λ.  Rationals appear only inside this module.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, Iterable, Iterator, Mapping, Tuple

from .partitions import Partition, multiplicities, partition, partitions_of, sort_key
from .symfunc import SymFunc


class IntegralityError(ArithmeticError):
    """A power-sum combination has a non-integral Schur expansion."""


@lru_cache(maxsize=None)
def z(mu: Partition) -> int:
    """Centraliser order Π i^{m_i} m_i! of a permutation of cycle type μ."""
    out = 1
    for i, m in multiplicities(mu).items():
        out *= i**m * factorial(m)
    return out


def _beta(lam: Partition, n: int) -> Tuple[int, ...]:
    lam = lam + (0,) * (n - len(lam))
    return tuple(lam[i] + n - 1 - i for i in range(n))


def _from_beta(beta: Iterable[int]) -> Partition:
    b = sorted(beta, reverse=True)
    n = len(b)
    return tuple(x for x in (b[i] - (n - 1 - i) for i in range(n)) if x > 0)


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not lam else 0
    k, rest = mu[0], mu[1:]
    n = len(lam)
    beta = _beta(lam, n)
    bset = set(beta)
    total = 0
    for b in beta:
        t = b - k
        if t < 0 or t in bset:
            continue
        height = sum(1 for x in beta if t < x < b)
        new = _from_beta((bset - {b}) | {t})
        total += (-1) ** height * _mn(new, rest)
    return total


def mn_character(lam: Iterable[int], mu: Iterable[int]) -> int:
    """χ^λ(μ) by ribbon (rim-hook) removal on beta-numbers."""
    lam = partition(lam)
    mu = tuple(sorted((int(x) for x in mu if x), reverse=True))
    if sum(lam) != sum(mu):
        raise ValueError(f"weight mismatch: |{list(lam)}| != |{list(mu)}|")
    return _mn(lam, mu)


class PowerSumFunc:
    """Sparse rational combination of power-sum products p_μ."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Partition, Fraction] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: Dict[Partition, Fraction] = {}
        for mu, c in items:
            acc[mu] = acc.get(mu, Fraction(0)) + Fraction(c)
        self._terms = {k: v for k, v in acc.items() if v}

    @classmethod
    def p(cls, *parts: int) -> "PowerSumFunc":
        return cls({tuple(sorted(parts, reverse=True)): Fraction(1)})

    def items(self) -> Iterator[Tuple[Partition, Fraction]]:
        for mu in sorted(self._terms, key=sort_key):
            yield mu, self._terms[mu]

    def coeff(self, mu: Iterable[int]) -> Fraction:
        return self._terms.get(tuple(mu), Fraction(0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PowerSumFunc):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "PowerSumFunc") -> "PowerSumFunc":
        out = dict(self._terms)
        for mu, c in other._terms.items():
            out[mu] = out.get(mu, Fraction(0)) + c
        return PowerSumFunc(out)

    def __mul__(self, other: "PowerSumFunc | int | Fraction") -> "PowerSumFunc":
        if isinstance(other, (int, Fraction)):
            return PowerSumFunc({mu: c * other for mu, c in self._terms.items()})
        out: Dict[Partition, Fraction] = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                mu = tuple(sorted(a + b, reverse=True))
                out[mu] = out.get(mu, Fraction(0)) + ca * cb
        return PowerSumFunc(out)

    def __repr__(self) -> str:
        return "PowerSumFunc(" + " + ".join(f"{c}*p{list(mu)}" for mu, c in self.items()) + ")"

    def adams(self, k: int) -> "PowerSumFunc":
        """p_k[self]: replace every p_j by p_{kj}."""
        return PowerSumFunc({tuple(k * x for x in mu): c for mu, c in self._terms.items()})


@lru_cache(maxsize=None)
def _schur_to_p(lam: Partition) -> Tuple[Tuple[Partition, Fraction], ...]:
    out = []
    for mu in partitions_of(sum(lam)):
        chi = _mn(lam, mu)
        if chi:
            out.append((mu, Fraction(chi, z(mu))))
    return tuple(out)


def to_powersum(f: SymFunc) -> PowerSumFunc:
    acc: Dict[Partition, Fraction] = {}
    for lam, c in f.items():
        for mu, q in _schur_to_p(lam):
            acc[mu] = acc.get(mu, Fraction(0)) + c * q
    return PowerSumFunc(acc)


def from_powersum(q: PowerSumFunc) -> SymFunc:
    """Schur expansion of q; raises IntegralityError if it is not integral."""
    by_weight: Dict[int, Dict[Partition, Fraction]] = {}
    for mu, c in q.items():
        by_weight.setdefault(sum(mu), {})[mu] = c
    out: Dict[Partition, int] = {}
    for n, terms in by_weight.items():
        for lam in partitions_of(n):
            v = sum((c * _mn(lam, mu) for mu, c in terms.items()), Fraction(0))
            if v.denominator != 1:
                raise IntegralityError(f"coefficient of s{list(lam)} is {v}, not an integer")
            if v:
                out[lam] = int(v)
    return SymFunc(out)


def _plethysm_p(fp: PowerSumFunc, gp: PowerSumFunc) -> PowerSumFunc:
    adams: Dict[int, PowerSumFunc] = {}
    out = PowerSumFunc()
    for mu, c in fp.items():
        term = PowerSumFunc({(): c})
        for k in mu:
            if k not in adams:
                adams[k] = gp.adams(k)
            term = term * adams[k]
        out = out + term
    return out


@lru_cache(maxsize=None)
def _plethysm_basis(alpha: Partition, rho: Partition) -> SymFunc:
    return from_powersum(_plethysm_p(to_powersum(SymFunc.schur(alpha)), to_powersum(SymFunc.schur(rho))))


def plethysm(f: SymFunc, g: SymFunc) -> SymFunc:
    """f[g], computed with p_n[p_m] = p_{nm} and p_n[g] a ring map in g."""
    if len(g) == 1:
        ((rho, c),) = g.items()
        if c == 1:
            out = SymFunc.zero()
            for alpha, a in f.items():
                out = out + _plethysm_basis(alpha, rho) * a
            return out
    return from_powersum(_plethysm_p(to_powersum(f), to_powersum(g)))
