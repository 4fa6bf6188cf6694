"""Builders for the specific algebras the toolkit works with.

Surface cohomology rings, Arnold algebras, arrangement algebras of a plane
with one or two points removed, the diagonal-ideal quotients modeling
configuration spaces of surfaces, the genus-2 auxiliary quotient, and the
mod-2 model for configuration spaces of the sphere.
"""

from __future__ import annotations

import string
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .errors import (
    AlgebraError,
    ModelInconsistencyError,
    UnsupportedModelError,
)
from .exterior import Element, FreeAlgebra
from .fields import GF2, QQ, Field
from .linalg import echelonize
from .presentation import (
    AlgebraPresentation,
    DEFAULT_BUDGET,
    QuotientAlgebra,
    diagonal_class,
    duality_data,
    quotient,
)


@dataclass(frozen=True)
class SurfaceSpec:
    """Configuration-space parameters: genus g, points n, punctures m."""

    g: int
    n: int
    m: int = 0
    field: Field = dc_field(default=QQ)

    def __post_init__(self):
        if self.g < 0 or self.n < 1 or self.m < 0:
            raise AlgebraError(f"invalid surface spec g={self.g}, n={self.n}, m={self.m}")


def _handle_letters(g: int):
    # letter pairs (a,b), (c,d), (e,f), ... one pair per handle
    if 2 * g > len(string.ascii_lowercase) - 3:
        raise UnsupportedModelError(f"genus {g} exceeds the letter-pair naming scheme")
    return [(string.ascii_lowercase[2 * p], string.ascii_lowercase[2 * p + 1])
            for p in range(g)]


def surface_cohomology(g: int, field: Field = QQ) -> AlgebraPresentation:
    """Cohomology ring of the closed orientable surface of genus g.

    g=0: one generator w of degree 2 with w^2 = 0.  g >= 1: odd generators
    a,b (one pair per handle), all degree-2 products zero except the handle
    products, which are all identified.
    """
    if g < 0:
        raise AlgebraError("genus must be nonnegative")
    if g == 0:
        free = FreeAlgebra(field, [("w", 2)])
        w = free.gen("w")
        return AlgebraPresentation(free, [w * w], top_degree=2, label="surface(g=0)")
    pairs = _handle_letters(g)
    gens = []
    for a, b in pairs:
        gens.append((a, 1))
        gens.append((b, 1))
    free = FreeAlgebra(field, gens)
    rels = []
    for p in range(g):
        ap, bp = (free.gen(x) for x in pairs[p])
        for q in range(p + 1, g):
            aq, bq = (free.gen(x) for x in pairs[q])
            rels.extend([ap * aq, bp * bq, ap * bq, aq * bp])
        if p > 0:
            a1, b1 = (free.gen(x) for x in pairs[0])
            rels.append(ap * bp - a1 * b1)
    if field.char == 2:
        for name in free.names:
            x = free.gen(name)
            rels.append(x * x)
    return AlgebraPresentation(free, rels, top_degree=2, label=f"surface(g={g})")


def arnold_algebra(n: int, field: Field = QQ) -> AlgebraPresentation:
    """Cohomology of the configuration space of n points in the plane.

    Generators a{i}{j} for i<j in degree 1; triple relations
    a_ij a_ik - a_ij a_jk + a_ik a_jk for i<j<k.
    """
    if n < 1:
        raise AlgebraError("need at least one point")
    gens = [(f"a{i}{j}", 1) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    free = FreeAlgebra(field, gens)
    rels = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                gij = free.gen(f"a{i}{j}")
                gik = free.gen(f"a{i}{k}")
                gjk = free.gen(f"a{j}{k}")
                rels.append(gij * gik - gij * gjk + gik * gjk)
    if field.char == 2:
        for name in free.names:
            x = free.gen(name)
            rels.append(x * x)
    return AlgebraPresentation(free, rels, top_degree=n - 1, label=f"arnold(n={n})")


def punctured_plane_algebra(points: int, punctures: int,
                            field: Field = GF2) -> AlgebraPresentation:
    """Arrangement algebra for n points moving in a plane with punctures removed.

    Generators: e{i}_q (point i around puncture q, degree 1) and e{i}_{j}
    (points i<j, degree 1).  Relations: squares (char 2), the parallel pair
    e{i}_0 e{i}_1, triples among points, and the circuit relations tying a
    puncture generator pair to the point-pair generator.  Hilbert series is
    the product of (1 + (q_count + j) t) over j = 0..points-1, which the
    tests verify; the parallel-pair relation is required for that count.
    """
    if punctures not in (1, 2):
        raise UnsupportedModelError(f"punctures={punctures}: only 1 or 2 supported")
    if points < 0:
        raise AlgebraError("points must be nonnegative")
    gens = []
    for i in range(1, points + 1):
        for q in range(punctures):
            gens.append((f"e{i}_{q}", 1))
    for i in range(1, points + 1):
        for j in range(i + 1, points + 1):
            gens.append((f"e{i}{j}", 1))
    free = FreeAlgebra(field, gens)
    rels = []
    if field.char == 2:
        for name in free.names:
            x = free.gen(name)
            rels.append(x * x)
    if punctures == 2:
        for i in range(1, points + 1):
            rels.append(free.gen(f"e{i}_0") * free.gen(f"e{i}_1"))
    for i in range(1, points + 1):
        for j in range(i + 1, points + 1):
            for k in range(j + 1, points + 1):
                gij = free.gen(f"e{i}{j}")
                gik = free.gen(f"e{i}{k}")
                gjk = free.gen(f"e{j}{k}")
                rels.append(gij * gik - gij * gjk + gik * gjk)
    for q in range(punctures):
        for i in range(1, points + 1):
            for j in range(i + 1, points + 1):
                ei = free.gen(f"e{i}_{q}")
                ej = free.gen(f"e{j}_{q}")
                eij = free.gen(f"e{i}{j}")
                rels.append(ei * ej - ei * eij + ej * eij)
    return AlgebraPresentation(
        free, rels, top_degree=points,
        label=f"punctured-plane(n={points},k={punctures})")


# --------------------------------------------------------------------------
# diagonal-ideal models


def _rename(mon, offset):
    return tuple(g + offset for g in mon)


def _slot_offsets(base_ngens, n):
    return [i * base_ngens for i in range(n)]


def _lift_relations(pres: AlgebraPresentation, free: FreeAlgebra, offsets):
    """Copy each relation into every slot of the tensor power."""
    out = []
    for off in offsets:
        for r in pres.relations:
            out.append(Element(free, {_rename(m, off): c for m, c in r.terms.items()}))
    return out


def _tensor_power_free(pres: AlgebraPresentation, n: int) -> FreeAlgebra:
    gens = []
    for i in range(1, n + 1):
        for g in pres.free.generators:
            gens.append((f"{g.name}{i}", g.degree))
    return FreeAlgebra(pres.field, gens)


def place_diagonal(delta, free: FreeAlgebra, base_ngens: int, i: int, j: int) -> Element:
    """Place the two legs of a diagonal tensor at slots i < j of the power.

    Slot blocks are declared in increasing order, so the two renamed legs
    interleave without sign.
    """
    if not 1 <= i < j:
        raise AlgebraError("slots must satisfy 1 <= i < j")
    off_i = (i - 1) * base_ngens
    off_j = (j - 1) * base_ngens
    terms = {}
    for (m1, m2), c in delta.terms.items():
        terms[_rename(m1, off_i) + _rename(m2, off_j)] = c
    return Element(free, terms)


def surface_diagonal(g: int, field: Field = QQ):
    """Diagonal tensor of the genus-g surface, with its duality data."""
    H = quotient(surface_cohomology(g, field))
    D = duality_data(H)
    return diagonal_class(D), H


def _xy_span_matches(A: QuotientAlgebra, n: int) -> bool:
    """Degree-2 ideal of the torus model == span of the reduced-pair relations."""
    free = A.free
    a = [free.gen(f"a{i}") for i in range(1, n + 1)]
    b = [free.gen(f"b{i}") for i in range(1, n + 1)]
    x = [a[0]] + [a[j] - a[0] for j in range(1, n)]
    y = [b[0]] + [b[j] - b[0] for j in range(1, n)]
    rels = []
    for j in range(1, n):
        rels.append(x[j] * y[j])
        for i in range(1, j):
            rels.append(x[j] * y[i] + x[i] * y[j])
    idx = A.index[2]
    vecs = [{idx[m]: c for m, c in r.terms.items()} for r in rels]
    span = echelonize(A.field, len(idx), vecs)
    return span == A.ideal[2]


def _attach_model_info(A, g, n, diagonals):
    A.genus = g
    A.points = n
    A.diagonals = diagonals
    return A


def _build_diagonal_model(g: int, n: int, extra_rels=None, label=None,
                          max_degree=None, budget=DEFAULT_BUDGET) -> QuotientAlgebra:
    pres0 = surface_cohomology(g, QQ)
    delta, _H = surface_diagonal(g, QQ)
    free = _tensor_power_free(pres0, n)
    base = pres0.free.ngens
    offsets = _slot_offsets(base, n)
    rels = _lift_relations(pres0, free, offsets)
    diagonals = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            d = place_diagonal(delta, free, base, i, j)
            diagonals[(i, j)] = d
            rels.append(d)
    if extra_rels:
        rels.extend(extra_rels(free))
    top = 2 * n if g == 0 else None
    pres = AlgebraPresentation(free, rels, top_degree=top, label=label)
    A = quotient(pres, max_degree=max_degree, budget=budget)
    return _attach_model_info(A, g, n, diagonals)


@lru_cache(maxsize=None)
def totaro_algebra(g: int, n: int) -> QuotientAlgebra:
    """The diagonal-ideal model: [H*(surface)]^(x n) / (diagonal classes).

    A subalgebra of the configuration-space cohomology; over the rationals.
    For g=1 the degree-2 ideal is checked against the reduced-generator
    relation span.
    """
    if n < 1:
        raise AlgebraError("need at least one point")
    if g < 0:
        raise AlgebraError("genus must be nonnegative")
    A = _build_diagonal_model(g, n, label=f"totaro(g={g},n={n})")
    if g == 1 and not _xy_span_matches(A, n):
        raise ModelInconsistencyError(
            "torus model: degree-2 ideal differs from the reduced-pair span")
    return A


def totaro_for(spec: SurfaceSpec) -> QuotientAlgebra:
    if spec.m != 0:
        raise UnsupportedModelError("diagonal-ideal model exists only for m=0")
    return totaro_algebra(spec.g, spec.n)


@dataclass
class ReducedGenerators:
    """x_1 = a_1, y_1 = b_1, x_j = a_j - a_1, y_j = b_j - b_1 (j >= 2)."""

    xs: list
    ys: list
    extra: dict

    def __iter__(self):
        return iter(self.xs + self.ys)


def reduced_generators(A: QuotientAlgebra, g: int) -> ReducedGenerators:
    """Reduced generators of a diagonal-ideal model; torus identities checked."""
    if g < 1:
        raise AlgebraError("reduced generators need genus >= 1")
    n = A.points
    a = [A.gen(f"a{i}") for i in range(1, n + 1)]
    b = [A.gen(f"b{i}") for i in range(1, n + 1)]
    xs = [a[0]] + [a[j] - a[0] for j in range(1, n)]
    ys = [b[0]] + [b[j] - b[0] for j in range(1, n)]
    extra = {}
    for name in A.free.names:
        if name[0] not in ("a", "b"):
            extra[name] = A.gen(name)
    if g == 1:
        for j in range(1, n):
            if not (xs[j] * ys[j]).is_zero():
                raise ModelInconsistencyError(f"x_{j+1} y_{j+1} nonzero in {A.label}")
            for i in range(1, j):
                if not (xs[j] * ys[i] + xs[i] * ys[j]).is_zero():
                    raise ModelInconsistencyError(
                        f"x_{j+1} y_{i+1} + x_{i+1} y_{j+1} nonzero in {A.label}")
    return ReducedGenerators(xs, ys, extra)


def _pair_ideal_relations(free: FreeAlgebra, n: int):
    """c_i c_j, d_i d_j (i<j) and c_i d_j (i != j), as single monomials."""
    rels = []
    one = free.field.one
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            ci, cj = free.by_name[f"c{i}"], free.by_name[f"c{j}"]
            di, dj = free.by_name[f"d{i}"], free.by_name[f"d{j}"]
            rels.append(Element(free, {tuple(sorted((ci, cj))): one}))
            rels.append(Element(free, {tuple(sorted((di, dj))): one}))
            rels.append(Element(free, {tuple(sorted((ci, dj))): one}))
            rels.append(Element(free, {tuple(sorted((cj, di))): one}))
    return rels


@lru_cache(maxsize=None)
def genus2_B_algebra(n: int, genus: int = 2) -> QuotientAlgebra:
    """Quotient of the genus-2 diagonal model by the second-handle pair ideal.

    Kills c_i c_j, c_i d_j, d_i d_j across distinct slots.  Postcondition:
    the reduced monomials x_J y_K with max J < min K stay independent.
    """
    if n < 1:
        raise AlgebraError("need at least one point")
    if genus < 2:
        raise AlgebraError("the pair ideal needs genus >= 2")
    B = _build_diagonal_model(
        genus, n, extra_rels=lambda free: _pair_ideal_relations(free, n),
        label=f"b-sigma(g={genus},n={n})")
    _check_xJyK_independent(B, n)
    return B


def xJyK_pairs(n: int):
    """All (J, K) with J, K inside [2, n] and max J < min K (empty sets allowed)."""
    idx = list(range(2, n + 1))
    subsets = [[]]
    for i in idx:
        subsets += [s + [i] for s in subsets]
    out = []
    for J in subsets:
        for K in subsets:
            if not J or not K or max(J) < min(K):
                out.append((tuple(J), tuple(K)))
    return out


def eqA_basis_count(n: int):
    """Degreewise count of x1^e1 y1^e2 x_J y_K with max J < min K."""
    counts = {}
    for J, K in xJyK_pairs(n):
        d = len(J) + len(K)
        counts[d] = counts.get(d, 0) + 1
    top = max(counts) + 2
    out = [0] * (top + 1)
    for d, c in counts.items():
        for e1 in (0, 1):
            for e2 in (0, 1):
                out[d + e1 + e2] += c
    while out and out[-1] == 0:
        out.pop()
    return out


def _check_xJyK_independent(B: QuotientAlgebra, n: int):
    red = reduced_generators(B, 2)
    by_degree = {}
    for J, K in xJyK_pairs(n):
        m = B.one()
        for j in J:
            m = m * red.xs[j - 1]
        for k in K:
            m = m * red.ys[k - 1]
        by_degree.setdefault(len(J) + len(K), []).append(m)
    for d, elems in by_degree.items():
        vecs = [B.vectorize(e, d) for e in elems]
        span = echelonize(B.field, B.dim(d), vecs)
        if span.rank != len(elems):
            raise ModelInconsistencyError(
                f"{B.label}: x_J y_K monomials dependent in degree {d} "
                f"(rank {span.rank} of {len(elems)})")


@lru_cache(maxsize=None)
def so3_mod2_algebra() -> QuotientAlgebra:
    """The mod-2 algebra on one degree-1 generator truncated above a^3."""
    free = FreeAlgebra(GF2, [("a", 1)])
    a = free.gen("a")
    pres = AlgebraPresentation(free, [a * a * a * a], top_degree=4,
                               label="Z2[a]/(a^4)")
    return quotient(pres)


@lru_cache(maxsize=None)
def sphere_mod2_model(n: int) -> QuotientAlgebra:
    """Mod-2 model for n points on the sphere, n >= 3.

    Tensor product of the truncated algebra on a (a^4 = 0) with the
    two-puncture plane algebra on n-3 points.
    """
    if n < 3:
        raise UnsupportedModelError(
            f"n={n}: the mod-2 sphere model needs n >= 3")
    pp = punctured_plane_algebra(n - 3, 2, GF2)
    gens = [("a", 1)] + [(g.name, g.degree) for g in pp.free.generators]
    free = FreeAlgebra(GF2, gens)
    a = free.gen("a")
    rels = [a * a * a * a]
    for r in pp.relations:
        rels.append(Element(free, {_rename(m, 1): c for m, c in r.terms.items()}))
    pres = AlgebraPresentation(free, rels, top_degree=n,
                               label=f"sphere-mod2(n={n})")
    A = quotient(pres)
    A.points = n
    return A


# --------------------------------------------------------------------------
# model lookup for the CLI and reports


def resolve_presentation(model: str, *, g=None, n=None, punctures=None,
                         field: Field = None) -> AlgebraPresentation:
    """Presentation-level lookup by model token."""
    if model == "surface":
        return surface_cohomology(g if g is not None else 1, field or QQ)
    if model == "arnold":
        return arnold_algebra(n if n is not None else 2, field or QQ)
    if model == "punctured-plane":
        return punctured_plane_algebra(
            n if n is not None else 1,
            punctures if punctures is not None else 2,
            field or GF2)
    if model == "totaro":
        return totaro_algebra(g if g is not None else 1, n or 1).presentation
    if model == "b-sigma":
        return genus2_B_algebra(n or 1, g if g is not None else 2).presentation
    if model == "sphere-mod2":
        return sphere_mod2_model(n if n is not None else 3).presentation
    if model == "so3-mod2":
        return so3_mod2_algebra().presentation
    raise UnsupportedModelError(f"unknown model: {model}")


def resolve_model(model: str, *, g=None, n=None, punctures=None,
                  field: Field = None) -> QuotientAlgebra:
    """Quotient-level lookup by model token."""
    if model == "totaro":
        return totaro_algebra(g if g is not None else 1, n or 1)
    if model == "b-sigma":
        return genus2_B_algebra(n or 1, g if g is not None else 2)
    if model == "sphere-mod2":
        return sphere_mod2_model(n if n is not None else 3)
    if model == "so3-mod2":
        return so3_mod2_algebra()
    return quotient(resolve_presentation(model, g=g, n=n, punctures=punctures,
                                         field=field))
