from __future__ import annotations

import pytest

from charhopf import pideform
from charhopf.checks import check_hexagons, check_slot_antipode_inverse
from charhopf.knots import CrossingKind, crossing_action
from charhopf.partitions import partitions_upto
from charhopf.pideform import (
    InconsistencyError,
    PiContext,
    alpha_tuples,
    braid,
    check_cocycle,
    check_yang_baxter,
    cochain_product,
    context,
    deformed_coproduct,
    pi_product,
    q_scalar,
    q_scalar_inverse,
    r_kernel,
    r_kernel_inverse,
    r_matrix,
)
from charhopf.schur import counit, multiply_slots, slot_antipode
from charhopf.symfunc import SymFunc, outer_product, s
from charhopf.tensor import PRIMAL, TensorSF

PIS = [(2,), (1, 1), (3,), (2, 1)]


def T(*terms):
    """TensorSF from (lam, mu, coeff) triples."""
    return TensorSF(2, {(a, b): c for a, b, c in terms})


def test_context_pairs():
    assert context((1,)).p == 0
    assert context((2,)).pairs == (((1,), (1,)),)
    assert context((3,)).p == 2
    assert context((2, 1)).p == 4
    assert context((2,)) is context([2])
    with pytest.raises(ValueError):
        PiContext.of(())


def test_alpha_tuple_order():
    ctx = context((3,))
    assert list(alpha_tuples(ctx, 2, 2)) == [((), ()), ((), (1,)), ((1,), ())]
    weights = [tuple(map(sum, a)) for a in alpha_tuples(ctx, 6, 6)]
    assert weights == sorted(weights)
    assert list(alpha_tuples(context((2,)), 2, 2)) == [((),), ((1,),), ((2,),), ((1, 1),)]


def test_r_kernel_examples():
    assert r_kernel(context((2,)), 1) == T(((), (), 1), ((1,), (1,), 1))
    assert r_kernel(context((3,)), 2) == T(((), (), 1), ((1,), (2,), 1), ((2,), (1,), 1))
    for pi in PIS:
        assert r_kernel(context(pi), 0) == TensorSF.unit(2)
    # (α, β) = ((1), (1)) for π = (3): s_2 s_1 ⊗ s_1 s_2
    r3 = r_kernel(context((3,)), 3)
    assert r3.coeff((2, 1), (2, 1)) == 1 and r3.coeff((3,), (3,)) == 1


@pytest.mark.parametrize("pi", PIS)
def test_r_kernel_grading_and_symmetry(pi):
    ctx = context(pi)
    r = r_kernel(ctx, 5)
    for a, b in r.slot_degrees():
        assert (a + b) % sum(pi) == 0
    assert r.swap() == r
    # truncation is exact: widening the window leaves retained terms alone
    assert r_kernel(ctx, 6).truncate(5) == r


def test_undeformed_case():
    ctx = context((1,))
    assert r_kernel(ctx, 4) == TensorSF.unit(2)
    assert q_scalar(ctx, 4) == s()
    assert pi_product(ctx, s(2), s(1)) == outer_product(s(2), s(1))


def test_r_kernel_inverse_examples():
    assert r_kernel_inverse(context((2,)), 1) == T(((), (), 1), ((1,), (1,), -1))
    assert r_kernel_inverse(context((3,)), 0) == TensorSF.unit(2)
    ctx = context((2,))
    assert r_kernel_inverse(ctx, 2).multiply(r_kernel(ctx, 2), 2) == TensorSF.unit(2)


@pytest.mark.parametrize("pi", [(2,), (1, 1)])
def test_inverse_is_slot_antipode_for_weight_two(pi):
    ctx = context(pi)
    assert r_kernel_inverse(ctx, 6) == slot_antipode(r_kernel(ctx, 6), 0)


def test_slot_antipode_is_not_inverse_for_pi3():
    # legs of weight ≥ 2 are not primitive, so (S⊗Id) r ≠ r^-1
    ctx = context((3,))
    report = check_slot_antipode_inverse(ctx, 3)
    assert not report.passed
    product = slot_antipode(r_kernel(ctx, 3), 0).multiply(r_kernel(ctx, 3), 3)
    # the defect starts at slot degrees (2, 1) with s_1 s_1 ⊗ s_1
    assert product.coeff((2,), (1,)) == 1 and product.coeff((1, 1), (1,)) == 1
    # and the Q^-1 built from it is wrong at degree 3
    via_slot = multiply_slots(slot_antipode(r_kernel(ctx, 3), 0), 3).grade(3)
    assert via_slot == -s(3) + s(1, 1, 1)
    assert q_scalar_inverse(ctx, 3).grade(3) == -2 * s(3) - 2 * s(2, 1)


def test_hexagon_defect_for_pi3():
    report = check_hexagons(context((3,)), 4)
    assert report.failure_count == 2
    assert all("combined degree 3" in line and "([1], [1], [1])" in line for line in report.failures)
    assert check_hexagons(context((2,)), 4).passed


def test_q_scalar_examples():
    assert q_scalar(context((2,)), 2) == s() + s(2) + s(1, 1)
    assert q_scalar(context((3,)), 3) == s() + 2 * s(3) + 2 * s(2, 1)
    for pi in PIS:
        assert q_scalar(context(pi), 0) == s()


def test_q_scalar_inverse():
    ctx = context((2,))
    assert q_scalar_inverse(ctx, 2) == s() - s(2) - s(1, 1)
    assert outer_product(q_scalar(ctx, 6), q_scalar_inverse(ctx, 6), 6) == s()
    assert q_scalar_inverse(context((3,)), 0) == s()


def test_q_inverse_disagreement_is_fatal(monkeypatch):
    ctx = PiContext.of((2,))
    monkeypatch.setattr(pideform, "graded_inverse", lambda f, d: s())
    with pytest.raises(InconsistencyError):
        q_scalar_inverse(ctx, 2)


def test_pi_product_examples():
    assert pi_product(context((2,)), s(1), s(1)) == s(2) + s(1, 1) + s()
    assert pi_product(context((3,)), s(2), s(2)) == s(4) + s(3, 1) + s(2, 2) + 2 * s(1)
    for pi in PIS:
        assert pi_product(context(pi), s(), s(2, 1)) == s(2, 1)
        assert pi_product(context(pi), SymFunc.zero(), s(1)) == SymFunc.zero()


@pytest.mark.parametrize("pi", [(3,), (2, 1)])
def test_pi_product_matches_cochain_route(pi):
    ctx = context(pi)
    for lam in partitions_upto(3):
        for mu in partitions_upto(3):
            f, g = SymFunc.schur(lam), SymFunc.schur(mu)
            assert pi_product(ctx, f, g) == cochain_product(ctx, f, g)


@pytest.mark.parametrize("pi", PIS)
def test_weight_filtration(pi):
    ctx = context(pi)
    w = sum(pi)
    for lam in partitions_upto(3):
        for mu in partitions_upto(3):
            prod = pi_product(ctx, SymFunc.schur(lam), SymFunc.schur(mu))
            top = sum(lam) + sum(mu)
            for nu in prod.support():
                assert (top - sum(nu)) % w == 0 and sum(nu) <= top


def test_deformed_coproduct():
    ctx = context((2,))
    assert deformed_coproduct(ctx, s(), 1) == r_kernel(ctx, 1)
    assert deformed_coproduct(ctx, s(1), 1) == T(((1,), (), 1), ((), (1,), 1))
    for pi in PIS:
        c = context(pi)
        for lam in partitions_upto(3):
            d = deformed_coproduct(c, SymFunc.schur(lam), 4)
            left = SymFunc({b: k for (a, b), k in d.items() if a == ()})
            assert left.truncate(sum(lam)) == SymFunc.schur(lam)
    with pytest.raises(ValueError):
        deformed_coproduct(ctx, s(3), 2)


def test_r_matrix():
    ctx = context((2,))
    assert r_matrix(ctx, TensorSF.unit(2), 1) == r_kernel(ctx, 1)
    assert r_matrix(ctx, TensorSF.unit(2), 0) == TensorSF.unit(2)
    got = r_matrix(ctx, TensorSF.basis((1,), ()), 2)
    assert got == T(((1,), (), 1), ((2,), (1,), 1), ((1, 1), (1,), 1))


def test_braid_examples():
    ctx = context((2,))
    assert braid(ctx, TensorSF.unit(2), False, 1) == r_kernel(ctx, 1)
    assert braid(ctx, TensorSF.basis((1,), ()), False, 1) == TensorSF.basis((), (1,))
    x = braid(ctx, TensorSF.basis((1,), (2,)), False, 4)
    assert braid(ctx, x, True, 4) == TensorSF.basis((1,), (2,))


@pytest.mark.parametrize("pi", [(2,), (3,), (2, 1)])
def test_braid_inverse_on_window(pi):
    ctx = context(pi)
    D = 4
    for lam in partitions_upto(3):
        for mu in partitions_upto(3):
            t = TensorSF.basis(lam, mu)
            assert braid(ctx, braid(ctx, t, False, D), True, D) == t
            assert braid(ctx, braid(ctx, t, True, D), False, D) == t


@pytest.mark.parametrize("pi", [(2,), (3,)])
def test_braid_agrees_with_table_crossing(pi):
    ctx = context(pi)
    for inverse in (False, True):
        kind = CrossingKind(not inverse, (PRIMAL, PRIMAL))
        for lam in partitions_upto(2):
            for mu in partitions_upto(2):
                t = TensorSF.basis(lam, mu)
                assert braid(ctx, t, inverse, 4) == crossing_action(ctx, kind, t, 4)


def test_braid_rejects_dual_slots():
    with pytest.raises(ValueError):
        braid(context((2,)), TensorSF.basis((), (), orientation=("dual", "primal")), False, 1)


@pytest.mark.parametrize("pi,degree", [((2,), 0), ((2,), 3), ((3,), 3), ((2, 1), 3), ((1, 1), 3)])
def test_yang_baxter(pi, degree):
    report = check_yang_baxter(context(pi), degree)
    assert report.passed, report.failures
    assert report.checked > 0


@pytest.mark.parametrize("pi,weight", [((2,), 3), ((2, 1), 2), ((3,), 2)])
def test_cocycle(pi, weight):
    report = check_cocycle(context(pi), weight)
    assert report.passed, report.failures


def test_report_formatting():
    r = pideform.Report("demo")
    r.record(True, lambda: "never")
    r.record(False, lambda: "broken at s[1]")
    assert not r.passed and r.checked == 2
    assert r.summary() == "FAILED 1 of 2 identities (demo)"
    assert r.to_json()["counterexamples"] == ["broken at s[1]"]


def test_counit_of_kernel():
    for pi in PIS:
        r = r_kernel(context(pi), 4)
        assert sum(c * counit(SymFunc.schur(a)) for (a, b), c in r.items() if b == ()) == 1
