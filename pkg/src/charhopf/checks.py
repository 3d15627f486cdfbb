"""Exhaustive identity checks: Hopf axioms and the coquasitriangular structure."""

from __future__ import annotations

from typing import Dict

from .partitions import partitions_upto
from .pideform import PiContext, Report, r_kernel, r_kernel_inverse
from .schur import antipode, coproduct, counit, multiply_slots, slot_antipode
from .symfunc import SymFunc, outer_product
from .tensor import TensorSF


def _slot_coproduct(t: TensorSF, slot: int) -> TensorSF:
    """Apply Δ to one slot, raising the rank by one."""
    out: Dict[tuple, int] = {}
    for key, c in t.items():
        for (a, b), d in coproduct(SymFunc.schur(key[slot])).items():
            nk = key[:slot] + (a, b) + key[slot + 1:]
            out[nk] = out.get(nk, 0) + c * d
    return TensorSF(t.rank + 1, out)


def _slot_counit(t: TensorSF, slot: int) -> TensorSF:
    return t.contract_slot(slot, lambda lam: 1 if not lam else 0)


def check_hopf(weight: int, pair_weight: int | None = None) -> Report:
    """Hopf algebra axioms on Schur functions of weight ≤ ``weight``.

    Bialgebra compatibility and commutativity use pairs of weight
    ≤ ``pair_weight`` each (default min(weight, 3)).
    """
    if pair_weight is None:
        pair_weight = min(weight, 3)
    report = Report("Hopf axioms")
    one = SymFunc.one()
    for lam in partitions_upto(weight):
        f = SymFunc.schur(lam)
        d = coproduct(f)
        tag = f"s{list(lam)}"
        report.record(_slot_counit(d, 0).to_symfunc() == f, lambda: f"(ε⊗Id)Δ {tag} ≠ {tag}")
        report.record(_slot_counit(d, 1).to_symfunc() == f, lambda: f"(Id⊗ε)Δ {tag} ≠ {tag}")
        report.record(_slot_coproduct(d, 0) == _slot_coproduct(d, 1), lambda: f"coassociativity fails at {tag}")
        report.record(d.swap() == d, lambda: f"cocommutativity fails at {tag}")
        unit = one * counit(f)
        left = multiply_slots(slot_antipode(d, 0))
        right = multiply_slots(slot_antipode(d, 1))
        report.record(left == unit, lambda: f"m(S⊗Id)Δ {tag} = {left}")
        report.record(right == unit, lambda: f"m(Id⊗S)Δ {tag} = {right}")
        report.record(antipode(antipode(f)) == f, lambda: f"S² {tag} ≠ {tag}")
    report.record(coproduct(one) == TensorSF.unit(2), lambda: "Δ(1) ≠ 1⊗1")
    small = partitions_upto(pair_weight)
    for lam in small:
        for mu in small:
            f, g = SymFunc.schur(lam), SymFunc.schur(mu)
            fg = outer_product(f, g)
            tag = f"(s{list(lam)}, s{list(mu)})"
            report.record(fg == outer_product(g, f), lambda: f"commutativity fails at {tag}")
            report.record(
                coproduct(fg) == coproduct(f).multiply(coproduct(g)),
                lambda: f"Δ(fg) ≠ Δ(f)Δ(g) at {tag}",
            )
            report.record(
                antipode(fg) == outer_product(antipode(f), antipode(g)),
                lambda: f"S not multiplicative at {tag}",
            )
            report.record(counit(fg) == counit(f) * counit(g), lambda: f"ε not multiplicative at {tag}")
    return report


def _counterexample(diff: TensorSF) -> str:
    items = list(diff.items())[:3]
    return ", ".join(f"{c:+d} at {tuple(list(p) for p in k)}" for k, c in items)


def check_normalization(ctx: PiContext, degree: int) -> Report:
    """(ε⊗Id) r_π = 1 = (Id⊗ε) r_π through ``degree``."""
    report = Report("normalization")
    r = r_kernel(ctx, degree)
    for slot in (0, 1):
        got = _slot_counit(r, slot).to_symfunc()
        report.record(got == SymFunc.one(), lambda: f"counit on slot {slot + 1} gives {got}")
    return report


def check_hexagons(ctx: PiContext, degree: int) -> Report:
    """(Id⊗Δ) r = r^12 r^13 and (Δ⊗Id) r = r^13 r^23, up to combined degree."""
    report = Report("hexagons")
    r = r_kernel(ctx, degree)
    r12, r13, r23 = r.embed((0, 1), 3), r.embed((0, 2), 3), r.embed((1, 2), 3)
    cases = (
        ("(Id⊗Δ)r = r12 r13", _slot_coproduct(r, 1), r12.multiply(r13, degree)),
        ("(Δ⊗Id)r = r13 r23", _slot_coproduct(r, 0), r13.multiply(r23, degree)),
    )
    for name, lhs, rhs in cases:
        for n in range(degree + 1):
            diff = _grade(lhs, n) - _grade(rhs, n)
            report.record(not diff, lambda: f"{name} at combined degree {n}: {_counterexample(diff)}")
    return report


def _grade(t: TensorSF, n: int) -> TensorSF:
    return TensorSF(t.rank, {k: c for k, c in t.items() if sum(map(sum, k)) == n}, t.orientation)


def check_antipode_relations(ctx: PiContext, degree: int) -> Report:
    """(S⊗S) r = r and (Id⊗S) r^-1 = r, per slot through ``degree``."""
    report = Report("antipode relations")
    r, ri = r_kernel(ctx, degree), r_kernel_inverse(ctx, degree)
    cases = (
        ("(S⊗S)r = r", slot_antipode(slot_antipode(r, 0), 1)),
        ("(Id⊗S)r^-1 = r", slot_antipode(ri, 1)),
    )
    for name, lhs in cases:
        diff = lhs - r
        report.record(not diff, lambda: f"{name}: {_counterexample(diff)}")
    return report


def check_slot_antipode_inverse(ctx: PiContext, degree: int) -> Report:
    """(S⊗Id) r = r^-1: the slot antipode as the convolutive inverse."""
    report = Report("slot antipode inverse")
    diff = slot_antipode(r_kernel(ctx, degree), 0) - r_kernel_inverse(ctx, degree)
    report.record(not diff, lambda: f"(S⊗Id)r - r^-1: {_counterexample(diff)}")
    return report


def check_kernel_inverse(ctx: PiContext, degree: int) -> Report:
    """r^-1 · r = 1⊗1 componentwise, through ``degree`` per slot."""
    report = Report("kernel inverse")
    got = r_kernel_inverse(ctx, degree).multiply(r_kernel(ctx, degree), degree)
    diff = got - TensorSF.unit(2)
    report.record(not diff, lambda: f"r^-1 r - 1⊗1: {_counterexample(diff)}")
    return report


def check_coquasitriangular(ctx: PiContext, degree: int = 6, hexagon_degree: int = 4) -> Report:
    report = Report("coquasitriangularity")
    report.merge(check_normalization(ctx, degree))
    report.merge(check_hexagons(ctx, hexagon_degree))
    report.merge(check_antipode_relations(ctx, degree))
    report.merge(check_kernel_inverse(ctx, degree))
    return report


__all__ = [
    "check_hopf",
    "check_normalization",
    "check_hexagons",
    "check_antipode_relations",
    "check_slot_antipode_inverse",
    "check_kernel_inverse",
    "check_coquasitriangular",
]
