import pytest

from tcsurf.errors import (AlgebraError, ModelInconsistencyError,
                           UnsupportedModelError)
from tcsurf.fields import GF2, QQ
from tcsurf.models import (arnold_algebra, eqA_basis_count, genus2_B_algebra,
                           punctured_plane_algebra, reduced_generators,
                           resolve_model, resolve_presentation,
                           so3_mod2_algebra, sphere_mod2_model,
                           surface_cohomology, surface_diagonal,
                           totaro_algebra, xJyK_pairs)
from tcsurf.presentation import (convolve, hilbert_series, quotient,
                                 tensor_square)

from .oracles import eqA_dimension, poly_mul, punctured_hilbert


def test_surface_hilbert_series():
    for g in range(4):
        assert quotient(surface_cohomology(g)).hilbert() == [1, 2 * g, 1]


def test_surface_char2_variant():
    A = quotient(surface_cohomology(1, GF2))
    assert A.hilbert() == [1, 2, 1]


def test_arnold_matches_rising_product():
    for n in range(1, 6):
        want = [[1]] + [poly_mul([1], [1, k]) for k in range(1, n)]
        acc = [1]
        for k in range(1, n):
            acc = poly_mul(acc, [1, k])
        assert quotient(arnold_algebra(n)).hilbert() == acc


def test_punctured_plane_matches_product_formula():
    for n in range(0, 5):
        for k in (1, 2):
            got = quotient(punctured_plane_algebra(n, k)).hilbert()
            assert got == punctured_hilbert(n, k), (n, k)


def test_punctured_plane_one_puncture_is_arnold_shifted():
    for n in range(1, 4):
        got = quotient(punctured_plane_algebra(n, 1)).hilbert()
        assert got == quotient(arnold_algebra(n + 1)).hilbert()


def test_punctured_plane_rejects_unsupported_punctures():
    with pytest.raises(UnsupportedModelError):
        punctured_plane_algebra(2, 3)


def test_totaro_torus_matches_closed_form():
    for n in range(1, 6):
        h = totaro_algebra(1, n).hilbert()
        want = []
        d = 0
        while True:
            v = eqA_dimension(n, d)
            if v == 0:
                break
            want.append(v)
            d += 1
        assert h == want, n


def test_eqA_enumeration_agrees_with_closed_form():
    for n in range(2, 7):
        enum = eqA_basis_count(n)
        form = [eqA_dimension(n, d) for d in range(len(enum))]
        assert enum == form


def test_xJyK_pair_count():
    # (s+1) C(n-1, s) pairs of total size s
    from math import comb
    for n in range(2, 7):
        pairs = xJyK_pairs(n)
        by_size = {}
        for J, K in pairs:
            by_size[len(J) + len(K)] = by_size.get(len(J) + len(K), 0) + 1
        for s, c in by_size.items():
            assert c == (s + 1) * comb(n - 1, s)


def test_diagonal_annihilation_up_to_genus_three():
    for g in range(4):
        delta, H = surface_diagonal(g)
        T = tensor_square(H)
        for name in H.free.names:
            assert T.multiply(T.bar(H.gen(name)), delta).is_zero(), (g, name)


def test_genus2_diagonal_normal_form():
    delta, H = surface_diagonal(2)
    T = tensor_square(H)
    a, b, c, d = (H.gen(s) for s in "abcd")
    w = c * d  # the degree-2 basis monomial: ab reduces to cd
    assert (a * b) == w
    want = (T.tensor(H.one(), w) + T.tensor(w, H.one())
            - T.tensor(a, b) + T.tensor(b, a)
            - T.tensor(c, d) + T.tensor(d, c))
    assert delta == want


def test_totaro_torus_relation_span_postcondition():
    # constructor would raise if the degree-2 ideal were not the xy span
    totaro_algebra(1, 3)


def test_totaro_sphere_small():
    assert totaro_algebra(0, 1).hilbert() == [1, 0, 1]
    assert totaro_algebra(0, 2).hilbert() == [1, 0, 1, 0, 0]


def test_reduced_generator_identities_on_the_torus_model():
    A = totaro_algebra(1, 3)
    red = reduced_generators(A, 1)
    for j in range(1, 3):
        assert (red.xs[j] * red.ys[j]).is_zero()
        for i in range(1, j):
            assert (red.xs[j] * red.ys[i] + red.xs[i] * red.ys[j]).is_zero()


def test_b_sigma_hilbert_frozen():
    assert genus2_B_algebra(1).hilbert() == [1, 4, 1]
    assert genus2_B_algebra(2).hilbert() == [1, 8, 13, 2]
    assert genus2_B_algebra(3).hilbert() == [1, 12, 36, 28, 3]


def test_b_sigma_needs_genus_two():
    with pytest.raises(AlgebraError):
        genus2_B_algebra(2, genus=1)


def test_sphere_model_is_a_twisted_tensor_product():
    for n in range(3, 6):
        got = sphere_mod2_model(n).hilbert()
        want = poly_mul([1, 1, 1, 1], punctured_hilbert(n - 3, 2))
        assert got == want, n


def test_sphere_model_needs_three_points():
    with pytest.raises(UnsupportedModelError):
        sphere_mod2_model(2)


def test_so3_model():
    A = so3_mod2_algebra()
    assert A.hilbert() == [1, 1, 1, 1, 0]
    a = A.gen("a")
    assert not (a * a * a).is_zero()
    assert (a * a * a * a).is_zero()


def test_surface_genus_beyond_letter_pairs_rejected():
    with pytest.raises(UnsupportedModelError):
        surface_cohomology(14)


def test_resolvers_cover_all_tokens():
    assert resolve_model("totaro", g=1, n=2).hilbert() == [1, 4, 5, 2]
    assert resolve_model("b-sigma", n=2).hilbert() == [1, 8, 13, 2]
    assert resolve_model("sphere-mod2", n=3).hilbert() == [1, 1, 1, 1]
    assert resolve_model("so3-mod2").hilbert() == [1, 1, 1, 1, 0]
    assert resolve_model("surface", g=2).hilbert() == [1, 4, 1]
    assert resolve_model("arnold", n=3).hilbert() == [1, 3, 2]
    assert resolve_model("punctured-plane", n=2, punctures=1).hilbert() == [1, 3, 2]
    pres = resolve_presentation("surface", g=1)
    assert pres.free.names == ("a", "b")
    with pytest.raises(UnsupportedModelError):
        resolve_presentation("mystery")


def test_model_label_metadata():
    A = totaro_algebra(1, 2)
    assert A.genus == 1
    assert A.points == 2
    assert (1, 2) in A.diagonals
