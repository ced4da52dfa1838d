"""Prenuclei, nuclei, quotients, congruences and factorization."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tensalg.errors import GDoesNotRespectX, NotACongruence, NotAPrenucleus
from tensalg.generators import draw_instance
from tensalg.nucleus import (Congruence, EndoOperator, closure_of,
                             congruence_from_nucleus, congruence_violation,
                             factor_through, is_nucleus, is_prenucleus,
                             nucleus_from_congruence, prenucleus_from_pairs,
                             prenucleus_violation, quotient)
from tensalg.reference_example import (base_quantale, diamond_module,
                                       tense_operator)
from tensalg.vmodule import enumerate_module_homs


def example_host():
    q = base_quantale()
    A = diamond_module(q)
    return tense_operator(A)


def test_identity_is_a_nucleus():
    host = example_host()
    op = EndoOperator(host, tuple(range(host.n)))
    assert is_prenucleus(op) and is_nucleus(op)


def test_constant_top_is_a_nucleus():
    host = example_host()
    top = host.module.carrier.top
    op = EndoOperator(host, (top,) * host.n)
    assert is_nucleus(op)


def test_deflationary_operator_rejected():
    host = example_host()
    op = EndoOperator(host, (0,) * host.n)
    assert prenucleus_violation(op) is not None
    with pytest.raises(NotAPrenucleus):
        closure_of(op)


def test_pair_collapse_on_example():
    """Collapsing b with 1 closes b upward and leaves 0, a, c, 1 fixed;
    the scalar and operator saturations of the pair are all trivial here."""
    host = example_host()
    op, sat = prenucleus_from_pairs(host, [(2, 4)])
    assert (2, 4) in sat
    closed = closure_of(op)
    assert is_nucleus(closed)
    assert closed.values[2] == 4
    # fixed points form the quotient carrier
    result = quotient(host, closed)
    assert result.fixed == tuple(a for a in range(5)
                                 if closed.values[a] == a)
    assert result.fsl.n == len(result.fixed)
    # the projection is surjective and collapses the generating pair
    surj = result.surjection
    assert set(surj.values) == set(range(result.fsl.n))
    assert surj.values[2] == surj.values[4]


def test_closure_dual_oracle_explicit():
    """Iterating j and meeting fixed points must coincide; recompute both
    routes here rather than trusting the library's own cross-check."""
    host = example_host()
    lat = host.module.carrier
    for pairs in ([(1, 2)], [(2, 3)], [(1, 4)], [(2, 4), (3, 1)]):
        op, _ = prenucleus_from_pairs(host, pairs)
        closed = closure_of(op)
        by_iter = []
        for a in range(host.n):
            x = a
            while op.values[x] != x:
                x = op.values[x]
            by_iter.append(x)
        fixed = [a for a in range(host.n) if by_iter[a] == a]
        by_meet = [lat.meet([x for x in fixed if lat.leq(a, x)])
                   for a in range(host.n)]
        assert list(closed.values) == by_iter == by_meet


def test_congruence_roundtrip():
    host = example_host()
    op, _ = prenucleus_from_pairs(host, [(1, 3)])
    closed = closure_of(op)
    theta = congruence_from_nucleus(closed)
    assert congruence_violation(theta) is None
    back = nucleus_from_congruence(theta)
    assert back.values == closed.values


def test_congruence_classes_have_greatest_elements():
    host = example_host()
    op, _ = prenucleus_from_pairs(host, [(2, 4)])
    closed = closure_of(op)
    theta = congruence_from_nucleus(closed)
    for cls in theta.classes():
        tops = [a for a in cls if all(host.module.carrier.leq(b, a)
                                      for b in cls)]
        assert len(tops) == 1
        assert closed.values[cls[0]] == tops[0]


def test_invalid_congruence_rejected():
    host = example_host()
    # a ~ b forces a v b = 1 into the same class as b, which it is not
    theta = Congruence(host, (0, 1, 1, 3, 4))
    assert congruence_violation(theta) is not None
    with pytest.raises(NotACongruence):
        nucleus_from_congruence(theta)


def test_factor_through_example():
    q = base_quantale()
    A = diamond_module(q)
    host = tense_operator(A)
    from tensalg.fsemilattice import validate_fsemilattice
    from tensalg.reference_example import target_module
    L = target_module(q)
    # the constant-bottom operator makes every module hom into L lax
    target = validate_fsemilattice(L, (0, 0), name="L0")
    f1, f7, f8 = enumerate_module_homs(A, L)
    # f7 sends b and c to the same value, so it factors through b ~ c
    result = factor_through(f7, host, target, [(2, 3)])
    assert result.gbar.values == tuple(
        f7.values[a] for a in result.quotient.fixed)
    # f8 separates a from 0, so it cannot factor through 0 ~ a
    with pytest.raises(GDoesNotRespectX):
        factor_through(f8, host, target, [(0, 1)])


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10_000), npairs=st.integers(1, 3))
def test_random_pair_closures_are_nuclei(seed, npairs):
    inst = draw_instance(seed % 997, seed // 997)
    host = inst.fsl
    rng = random.Random(seed)
    pairs = [(rng.randrange(host.n), rng.randrange(host.n))
             for _ in range(npairs)]
    op, sat = prenucleus_from_pairs(host, pairs)
    assert is_prenucleus(op)
    closed = closure_of(op)
    assert is_nucleus(closed)
    # the closure collapses every saturated pair
    assert all(closed.values[c] == closed.values[d] for c, d in sat)
    # and is the least such: every fixed point above both pair members
    # stays fixed, so the quotient identifies exactly the forced elements
    result = quotient(host, closed)
    surj = result.surjection
    assert all(surj.values[c] == surj.values[d] for c, d in sat)
