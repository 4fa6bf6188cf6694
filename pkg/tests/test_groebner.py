import random
from math import comb

import pytest

from tcsurf.errors import AlgebraError, CertificateError, UnsupportedModelError
from tcsurf.exterior import FreeAlgebra
from tcsurf.fields import QQ
from tcsurf.groebner import (TermOrder, buchberger_check, gb_hilbert,
                             reduce_element, s_polynomial, torus_ideal,
                             torus_ideal_check)
from tcsurf.models import totaro_algebra
from tcsurf.presentation import hilbert_series


def test_torus_relations_are_a_groebner_basis_up_to_n6():
    for n in range(2, 7):
        rep = torus_ideal_check(n)
        assert rep.is_groebner, n
        assert all(rem == "0" for _, rem in rep.spair_log)


def test_gb_hilbert_matches_quotient_series_bit_exact():
    for n in range(1, 7):
        rep = torus_ideal_check(n)
        assert gb_hilbert(rep) == hilbert_series(totaro_algebra(1, n)), n


def test_n2_counts_frozen():
    assert gb_hilbert(torus_ideal_check(2)) == [1, 4, 5, 2]


def test_default_order_is_the_reduced_generator_priority():
    _, _, order = torus_ideal(3)
    assert order.describe() == "x2 < y2 < x3 < y3 < x1 < y1"


def test_single_mixed_relation_is_not_a_basis():
    free, _, order = torus_ideal(3)
    f = free.gen("x2") * free.gen("y2") + free.gen("x3") * free.gen("y3")
    rep = buchberger_check([f], order, try_reversal=False)
    assert not rep.is_groebner
    bad = {rem for _, rem in rep.spair_log if rem != "0"}
    assert bad == {"x2*y2*x3", "x2*y2*y3"}  # the two self-pair remainders
    with pytest.raises(CertificateError):
        gb_hilbert(rep)


def test_reversal_fallback_records_both_orders():
    F = FreeAlgebra(QQ, [("a", 1), ("b", 1), ("c", 1), ("d", 1)])
    f = F.gen("a") * F.gen("b") + F.gen("c") * F.gen("d")
    rep = buchberger_check([f])  # not a basis under either orientation
    assert not rep.is_groebner
    assert len(rep.orders_tried) == 2
    assert rep.orders_tried[1].priority == list(reversed(
        rep.orders_tried[0].priority))


def test_no_fallback_when_an_order_is_given():
    F = FreeAlgebra(QQ, [("a", 1), ("b", 1), ("c", 1), ("d", 1)])
    f = F.gen("a") * F.gen("b") + F.gen("c") * F.gen("d")
    rep = buchberger_check([f], TermOrder(F, list(F.names)))
    assert len(rep.orders_tried) == 1


def test_empty_relations_give_binomials():
    F = FreeAlgebra(QQ, [(f"u{i}", 1) for i in range(4)])
    rep = buchberger_check([], TermOrder(F, list(F.names)))
    assert rep.is_groebner
    assert gb_hilbert(rep) == [comb(4, d) for d in range(5)]


def test_n1_is_the_full_exterior_algebra():
    rep = torus_ideal_check(1)
    assert gb_hilbert(rep) == [1, 2, 1]


def test_even_generators_rejected():
    F = FreeAlgebra(QQ, [("x", 1), ("w", 2)])
    with pytest.raises(UnsupportedModelError):
        buchberger_check([F.gen("x") * F.gen("w")])


def test_term_order_requires_a_permutation():
    F = FreeAlgebra(QQ, [("x", 1), ("y", 1)])
    with pytest.raises(AlgebraError):
        TermOrder(F, ["x", "x"])


def test_term_order_is_multiplicative_on_disjoint_monomials():
    rng = random.Random(3)
    F = FreeAlgebra(QQ, [(f"g{i}", 1) for i in range(7)])
    order = TermOrder(F, [f"g{i}" for i in (3, 0, 5, 1, 6, 2, 4)])
    gids = list(range(7))
    for _ in range(200):
        rng.shuffle(gids)
        m1 = tuple(sorted(gids[:2]))
        m2 = tuple(sorted(gids[2:4]))
        u = tuple(sorted(gids[4:6]))
        if order.key(m1) < order.key(m2):
            assert order.key(tuple(sorted(m1 + u))) < order.key(
                tuple(sorted(m2 + u)))


def test_s_polynomial_cancels_the_lcm():
    free, rels, order = torus_ideal(4)
    for i in range(len(rels)):
        for j in range(i + 1, len(rels)):
            s = s_polynomial(rels[i], rels[j], order)
            lcm = tuple(sorted(set(order.lead(rels[i]))
                               | set(order.lead(rels[j]))))
            assert lcm not in s.terms


def test_reduction_confluence_on_random_elements():
    free, rels, order = torus_ideal(3)
    rep = buchberger_check(rels, order, try_reversal=False)
    assert rep.is_groebner
    rng = random.Random(2024)
    mons = [m for d in range(5) for m in free.monomials_of_degree(d)]
    for _ in range(40):
        e = free.zero()
        for _ in range(4):
            e = e + free.element({rng.choice(mons): rng.randint(-3, 3)})
        lead_nf = reduce_element(e, rels, order, strategy="lead")
        low_nf = reduce_element(e, rels, order, strategy="low")
        assert lead_nf == low_nf


def test_normal_form_is_a_fixed_point():
    free, rels, order = torus_ideal(3)
    x2, y2 = free.gen("x2"), free.gen("y2")
    nf = reduce_element(x2 * y2 + x2 * free.gen("x1"), rels, order)
    assert nf == x2 * free.gen("x1")
    assert reduce_element(nf, rels, order) == nf
