import random

import pytest

from tcsurf.errors import CertificateError, TruncationError
from tcsurf.fields import GF2, QQ
from tcsurf.models import (arnold_algebra, genus2_B_algebra,
                           punctured_plane_algebra, reduced_generators,
                           so3_mod2_algebra, sphere_mod2_model,
                           surface_cohomology, totaro_algebra)
from tcsurf.presentation import (AlgebraPresentation, quotient, tensor_square)
from tcsurf.zcl import (bar_generators, bar_product_certificate,
                        case_certificate, certificate_product, cup_length,
                        e2_kernel_dim, e2_probe, mod_ideal_quotient,
                        zcl_exact, zero_divisor_elements,
                        zero_divisor_subspace)


def torus_ring():
    return quotient(surface_cohomology(1))


# ---------------------------------------------------------------- exact zcl

def test_zcl_exact_frozen_values():
    assert zcl_exact(torus_ring()).value == 2
    assert zcl_exact(so3_mod2_algebra()).value == 3
    assert zcl_exact(totaro_algebra(0, 1)).value == 2
    assert zcl_exact(totaro_algebra(0, 2)).value == 2
    assert zcl_exact(totaro_algebra(1, 2)).value == 4


def test_zcl_exact_reports_exactness_and_method():
    rep = zcl_exact(totaro_algebra(1, 2))
    assert rep.exact and rep.quantity == "zcl"
    assert rep.method == "power-iteration"
    capped = zcl_exact(totaro_algebra(1, 2), cap=2)
    assert capped.value == 2 and not capped.exact


def test_zcl_variants_agree():
    for A in (torus_ring(), so3_mod2_algebra(), totaro_algebra(1, 2),
              quotient(arnold_algebra(3)),
              quotient(punctured_plane_algebra(2, 1))):
        a = zcl_exact(A, via="generators")
        b = zcl_exact(A, via="kernel-basis")
        assert a.value == b.value, A.label
        assert a.exact and b.exact


def test_zcl_rejects_truncated_algebras():
    Aq = mod_ideal_quotient(2)
    with pytest.raises(TruncationError):
        zcl_exact(Aq)


def test_zero_divisor_dimensions_of_the_torus():
    A = torus_ring()
    Z = zero_divisor_subspace(A)
    dims = {d: Z[d].rank for d in range(5)}
    assert dims == {0: 0, 1: 2, 2: 5, 3: 4, 4: 1}


def test_kernel_elements_are_killed_by_mu_and_form_an_ideal():
    rng = random.Random(99)
    A = totaro_algebra(1, 2)
    T = tensor_square(A)
    flat = zero_divisor_elements(A, T)
    for z in flat:
        assert T.mu(z).is_zero()
    # multiply a few kernel elements by random tensors: still in the kernel
    pool = []
    for d1 in range(3):
        for i in range(len(A.basis_monomials(d1))):
            pool.append(T.tensor(
                A.element_from_vec({i: QQ.one}, d1), A.one()))
            pool.append(T.tensor(
                A.one(), A.element_from_vec({i: QQ.one}, d1)))
    for _ in range(30):
        z = rng.choice(flat)
        t = rng.choice(pool)
        assert T.mu(T.multiply(z, t)).is_zero()
        assert T.mu(T.multiply(t, z)).is_zero()


def test_zcl_at_least_cup_length():
    for A, cl_want in ((torus_ring(), 2), (so3_mod2_algebra(), 3),
                       (totaro_algebra(1, 2), 3), (totaro_algebra(0, 2), 1)):
        c = cup_length(A)
        z = zcl_exact(A)
        assert c.value == cl_want
        assert z.value >= c.value


# ------------------------------------------------------------- certificates

def test_torus_certificates_through_n5():
    coeffs = {1: 1, 2: -1, 3: -1, 4: 1, 5: 1}
    for n in range(1, 6):
        cert = case_certificate("torus", n)
        assert cert.certified_length == 2 * n
        assert cert.coefficient == QQ.coerce(coeffs[n])
        A = totaro_algebra(1, n)
        names = tuple(A.free.mon_str(m) for m in cert.witness)
        assert names == ("*".join(f"b{i}" for i in range(1, n + 1)),
                         "*".join(f"a{i}" for i in range(1, n + 1)))


def test_certificate_never_exceeds_exact():
    cert = case_certificate("torus", 2)
    assert cert.certified_length <= zcl_exact(totaro_algebra(1, 2)).value


def test_genus2_certificates_through_n3():
    coeffs = {1: 2, 2: 2, 3: -2}
    for n in range(1, 4):
        cert = case_certificate("genus2", n)
        assert cert.certified_length == 2 * n + 2
        assert cert.coefficient == QQ.coerce(coeffs[n])


def test_genus2_seed_identity_bit_exact():
    H = quotient(surface_cohomology(2))
    T = tensor_square(H)
    seed = T.bar(H.gen("a"))
    for s in ("b", "c", "d"):
        seed = T.multiply(seed, T.bar(H.gen(s)))
    w = H.gen("c") * H.gen("d")  # normal form of the orientation class
    assert seed == T.tensor(w, w).scale(QQ.coerce(2))


def test_genus3_certificate_generalizes():
    cert = case_certificate("genus2", 2, genus=3)
    assert cert.certified_length == 6
    assert cert.coefficient == QQ.coerce(2)


def test_sphere_certificates_through_n5():
    for n in range(3, 6):
        cert = case_certificate("sphere", n)
        assert cert.certified_length == 2 * n - 3
        assert cert.coefficient == 1  # GF(2)


def test_sphere_certificate_matches_exact_value():
    for n in (3, 4, 5):
        assert zcl_exact(sphere_mod2_model(n)).value == 2 * n - 3


def test_mod_ideal_certificates_all_k():
    coeffs = {1: 1, 2: -1, 3: -1, 4: 1}
    for n in range(1, 5):
        cert = case_certificate("punctured-mod-ideal", n)
        assert cert.certified_length == 2 * n
        assert cert.coefficient == QQ.coerce(coeffs[n])


def test_mod_ideal_monomial_membership_example():
    # x1 y2 y3 must survive the quotient by (x1 y1, x_i y1 + x1 y_i)
    Aq = mod_ideal_quotient(3)
    a = [Aq.gen(f"a{i}") for i in (1, 2, 3)]
    b = [Aq.gen(f"b{i}") for i in (1, 2, 3)]
    x1 = a[0]
    y2 = b[1] - b[0]
    y3 = b[2] - b[0]
    assert not (x1 * y2 * y3).is_zero()
    assert (x1 * (b[0])).is_zero()  # x1 y1 is in the ideal


def test_certificate_rejects_non_zero_divisor():
    A = torus_ring()
    T = tensor_square(A)
    good = T.bar(A.gen("a"))
    bad = T.tensor(A.gen("a"), A.one())  # mu(bad) = a != 0
    with pytest.raises(CertificateError):
        certificate_product(T, [good, bad], (next(iter((A.gen("b") * A.gen("a")).terms)),) * 2)


def test_certificate_rejects_vanished_witness():
    A = torus_ring()
    T = tensor_square(A)
    ab = A.gen("a") * A.gen("b")
    mon = next(iter(ab.terms))
    bar_a = T.bar(A.gen("a"))
    with pytest.raises(CertificateError) as err:
        # abar*abar = -2 a(x)a, so the (ab, ab) coefficient is zero
        certificate_product(T, [bar_a, bar_a], (mon, mon))
    assert hasattr(err.value, "support")


def test_bar_product_certificate_lengths():
    for n, want in ((1, 0), (2, 1), (3, 3), (4, 5)):
        cert = bar_product_certificate(quotient(arnold_algebra(n)), want)
        assert cert.certified_length == want
    for n, k, want in ((1, 1, 1), (2, 1, 3), (3, 1, 5), (2, 2, 4)):
        cert = bar_product_certificate(
            quotient(punctured_plane_algebra(n, k)), want)
        assert cert.certified_length == want


def test_bar_product_certificate_fails_past_the_truth():
    with pytest.raises(CertificateError):
        bar_product_certificate(torus_ring(), 3)  # zcl of the torus is 2


def test_bar_generators_drop_zero_bars():
    A = torus_ring()
    bars = bar_generators(A)
    assert len(bars) == 2


# --------------------------------------------------- monotonicity instances

def test_lemma_subalgebra_instance():
    # slot-one H*(T) embeds in the n=2 torus model
    assert zcl_exact(torus_ring()).value <= zcl_exact(totaro_algebra(1, 2)).value


def test_lemma_epimorphism_instance():
    # the pair-ideal quotient B is an image of the genus-2 model at n=2
    zB = zcl_exact(genus2_B_algebra(2)).value
    zA = zcl_exact(totaro_algebra(2, 2)).value
    assert zB == 6
    assert zA == 6
    assert zA >= zB


def test_lemma_tensor_instance():
    # sphere model = so3 factor (x) planar factor; zcl is superadditive
    z_left = zcl_exact(so3_mod2_algebra()).value
    z_right = zcl_exact(quotient(punctured_plane_algebra(1, 2))).value
    z_total = zcl_exact(sphere_mod2_model(4)).value
    assert (z_left, z_right, z_total) == (3, 2, 5)
    assert z_total >= z_left + z_right


# ------------------------------------------------------- order independence

def test_zcl_is_declaration_order_independent():
    pres = totaro_algebra(1, 2).presentation
    data = pres.to_json()
    data["generators"] = list(reversed(data["generators"]))
    flipped = quotient(AlgebraPresentation.from_json(data))
    assert sorted(flipped.hilbert()) == sorted(totaro_algebra(1, 2).hilbert())
    assert zcl_exact(flipped).value == 4


# ----------------------------------------------------------------- E2 probe

def test_e2_probe_frozen_and_consistent():
    frozen = {2: (2, 2, 0), 3: (12, 10, 2), 4: (36, 28, 8)}
    for n, (dim, rank, ker) in frozen.items():
        rep = e2_probe(n)
        assert (rep.dim_source, rep.rank, rep.kernel_dim) == (dim, rank, ker)
        assert rep.kernel_dim == rep.dim_source - rep.rank
        assert e2_kernel_dim(n) == ker
