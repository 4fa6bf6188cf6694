"""Finitely presented graded algebras and their degreewise quotients.

A presentation is a free supercommutative algebra plus a list of homogeneous
relations.  The quotient is built degree by degree: in each degree the ideal
span is the echelonized set of products (free monomial) * (relation), the
quotient basis is the set of non-pivot monomials, and elements are kept in
normal form with respect to that echelon.  Construction runs one window of
degrees past the formal top so that vanishing is verified, never assumed:
once every degree in a window of length max(generator degree) is zero, all
higher degrees are provably zero (each monomial has a generator factor).

Also here: JSON serialization of presentations, tensor squares with the
Koszul sign rule, Poincare duality data, and the diagonal class.
"""

from __future__ import annotations

import json

from .errors import (
    AlgebraError,
    HomogeneityError,
    MismatchError,
    ModelInconsistencyError,
    NotPoincareDualityError,
    ResourceBudgetError,
    TruncationError,
)
from .exterior import Element, FreeAlgebra
from .fields import field_from_name
from .linalg import echelonize, invert_matrix

DEFAULT_BUDGET = 2_000_000  # max free monomials in any single degree


class AlgebraPresentation:
    """A free algebra together with homogeneous relations."""

    def __init__(self, free: FreeAlgebra, relations, top_degree=None, label=None):
        self.free = free
        self.field = free.field
        self.relations = []
        for r in relations:
            if not isinstance(r, Element) or r.algebra is not free:
                raise MismatchError("relation is not an element of the free algebra")
            if r.is_zero():
                continue
            if r.degree() is None:
                raise HomogeneityError(f"relation is not homogeneous: {r}")
            self.relations.append(r)
        if top_degree is not None and (not isinstance(top_degree, int) or top_degree < 0):
            raise AlgebraError("top_degree must be a nonnegative integer")
        self.top_degree = top_degree
        self.label = label or "presentation"

    def natural_bound(self):
        """Degree above which the free algebra itself vanishes, if any."""
        if self.field.char != 2 and all(self.free.odd):
            return sum(self.free.degrees)
        return None

    def to_json(self) -> dict:
        free = self.free
        rels = []
        for r in self.relations:
            terms = []
            for mon in sorted(r.terms):
                terms.append({
                    "coeff": self.field.fmt(r.terms[mon]),
                    "monomial": [free.names[g] for g in mon],
                })
            rels.append(terms)
        data = {
            "field": self.field.name,
            "generators": [{"name": g.name, "degree": g.degree} for g in free.generators],
            "relations": rels,
        }
        if self.top_degree is not None:
            data["top_degree"] = self.top_degree
        if self.label != "presentation":
            data["label"] = self.label
        return data

    @classmethod
    def from_json(cls, data: dict) -> "AlgebraPresentation":
        field = field_from_name(data["field"])
        free = FreeAlgebra(field, [(g["name"], int(g["degree"])) for g in data["generators"]])
        relations = []
        for terms in data.get("relations", []):
            acc = free.zero()
            for term in terms:
                coeff = field.parse(term["coeff"])
                mon = free.one()
                for name in term["monomial"]:
                    mon = free.multiply(mon, free.gen(name))
                acc = acc + mon.scale(coeff)
            relations.append(acc)
        return cls(free, relations, top_degree=data.get("top_degree"),
                   label=data.get("label"))

    def dump(self, path):
        with open(path, "w") as fh:
            json.dump(self.to_json(), fh, indent=2)
            fh.write("\n")

    @classmethod
    def load(cls, path) -> "AlgebraPresentation":
        with open(path) as fh:
            return cls.from_json(json.load(fh))

    def __repr__(self):
        return (f"AlgebraPresentation({self.label}: {self.free.ngens} generators, "
                f"{len(self.relations)} relations over {self.field.name})")


class QuotientAlgebra:
    """Graded quotient of a free algebra, with degreewise normal forms."""

    def __init__(self, presentation: AlgebraPresentation, max_degree=None,
                 budget=DEFAULT_BUDGET):
        pres = presentation
        self.presentation = pres
        self.free = pres.free
        self.field = pres.field
        self.label = pres.label
        free = self.free

        window = max(free.degrees) if free.ngens else 1
        natural = pres.natural_bound()
        formal_top = pres.top_degree if pres.top_degree is not None else natural
        if formal_top is None:
            raise AlgebraError(
                "top_degree required: the free algebra has unbounded degrees "
                "(even generators, or characteristic 2)")
        bound = formal_top + window
        if natural is not None:
            bound = min(bound, natural)
        capped = False
        if max_degree is not None and max_degree < bound:
            bound = max_degree
            capped = True

        free_dims = free.free_hilbert(bound)
        if max(free_dims) > budget:
            raise ResourceBudgetError(
                f"{self.label}: free algebra has {max(free_dims)} monomials in one "
                f"degree, over the budget of {budget}")

        rels = [(r.degree(), r) for r in pres.relations]
        self.basis = [[()]]
        self.index = [{(): 0}]
        self.ideal = [echelonize(self.field, 1, [])]
        stopped_clean = False
        for d in range(1, bound + 1):
            mons = free.monomials_of_degree(d)
            idx = {m: i for i, m in enumerate(mons)}
            self.ideal.append(echelonize(
                self.field, len(mons), self._ideal_vectors(d, rels, idx)))
            piv = set(self.ideal[d].pivots)
            self.basis.append([m for i, m in enumerate(mons) if i not in piv])
            self.index.append(idx)
            if d >= window and all(not self.basis[d - k] for k in range(window)):
                stopped_clean = True
                break

        self.built_top = len(self.basis) - 1
        self.basis_index = [{m: i for i, m in enumerate(b)} for b in self.basis]
        self.dims = [len(b) for b in self.basis]
        self.top_nonzero = max((d for d, n in enumerate(self.dims) if n), default=0)
        if stopped_clean or (not capped and natural is not None and bound == natural):
            self.exhaustive = True
        elif not capped and all(
                not self.basis[bound - k] for k in range(min(window, bound + 1))):
            self.exhaustive = True
        else:
            self.exhaustive = False
        self._mul_cache = {}

    def _ideal_vectors(self, d, rels, idx):
        free = self.free
        field = self.field
        for e, r in rels:
            if e > d:
                continue
            rterms = list(r.terms.items())
            for m in free.monomials_of_degree(d - e):
                vec = {}
                for rmon, c in rterms:
                    hit = free.mul_mon(m, rmon)
                    if hit is None:
                        continue
                    sign, mon = hit
                    col = idx[mon]
                    val = field.neg(c) if sign < 0 else c
                    prev = vec.get(col)
                    val = val if prev is None else field.add(prev, val)
                    if val == field.zero:
                        vec.pop(col, None)
                    else:
                        vec[col] = val
                if vec:
                    yield vec

    # -- degree bookkeeping --------------------------------------------------

    def dim(self, d: int) -> int:
        if 0 <= d <= self.built_top:
            return self.dims[d]
        if d < 0 or self.exhaustive:
            return 0
        raise TruncationError(
            f"{self.label}: degree {d} beyond the constructed range {self.built_top}")

    def basis_monomials(self, d: int):
        if 0 <= d <= self.built_top:
            return self.basis[d]
        if d < 0 or self.exhaustive:
            return []
        raise TruncationError(
            f"{self.label}: degree {d} beyond the constructed range {self.built_top}")

    def hilbert(self):
        """Dimensions per degree; see hilbert_series."""
        if self.presentation.top_degree is not None:
            t = self.presentation.top_degree
            dims = self.dims[:t + 1]
            return dims + [0] * (t + 1 - len(dims))
        return self.dims[:self.top_nonzero + 1]

    # -- elements ------------------------------------------------------------

    def zero(self):
        return Element(self, {})

    def one(self):
        return Element(self, {(): self.field.one})

    def gen(self, name: str):
        return self.reduce_free(self.free.gen(name))

    def generator_elements(self):
        return [self.gen(name) for name in self.free.names]

    def element_in_free(self, e: Element) -> Element:
        return Element(self.free, dict(e.terms))

    def reduce_free(self, e: Element) -> Element:
        """Normal form of a free-algebra element (also accepts own elements)."""
        free = self.free
        field = self.field
        out = {}
        for part_deg, part in _split_degrees(free, e.terms).items():
            if part_deg > self.built_top:
                if self.exhaustive:
                    continue
                raise TruncationError(
                    f"{self.label}: cannot reduce in degree {part_deg}, "
                    f"constructed only through {self.built_top}")
            idx = self.index[part_deg]
            vec = {idx[m]: c for m, c in part.items()}
            residue = self.ideal[part_deg].reduce(vec)
            mons = self.free.monomials_of_degree(part_deg)
            for col, val in residue.items():
                out[mons[col]] = field.coerce(val)
        return Element(self, out)

    def _mul_elements(self, e1: Element, e2: Element) -> Element:
        prod = self.free.multiply(self.element_in_free(e1), self.element_in_free(e2))
        return self.reduce_free(prod)

    def mul_basis(self, m1, m2):
        """Normal form of the product of two basis monomials, as a term dict."""
        key = (m1, m2)
        hit = self._mul_cache.get(key)
        if hit is None:
            free = self.free
            pair = free.mul_mon(m1, m2)
            if pair is None:
                hit = {}
            else:
                sign, mon = pair
                coeff = self.field.one if sign > 0 else self.field.neg(self.field.one)
                hit = self.reduce_free(Element(free, {mon: coeff})).terms
            self._mul_cache[key] = hit
        return hit

    def vectorize(self, e: Element, d: int):
        """Coordinates of a normal-form element over the degree-d basis."""
        idx = self.basis_index[d]
        vec = {}
        for mon, c in e.terms.items():
            if self.free.monomial_degree(mon) != d:
                raise HomogeneityError("vectorize needs a homogeneous element")
            if mon not in idx:
                raise AlgebraError(f"{self.label}: {self.free.mon_str(mon)} is not "
                                   "a basis monomial (element not in normal form?)")
            vec[idx[mon]] = c
        return vec

    def element_from_vec(self, vec, d: int) -> Element:
        basis = self.basis[d]
        field = self.field
        return Element(self, {basis[i]: field.coerce(c) for i, c in vec.items()})

    def in_ideal(self, e: Element) -> bool:
        """Is this free-algebra element in the defining ideal?"""
        return self.reduce_free(e).is_zero()

    def __repr__(self):
        return f"QuotientAlgebra({self.label}, dims={self.hilbert()})"


def _split_degrees(free, terms):
    parts = {}
    for mon, c in terms.items():
        parts.setdefault(free.monomial_degree(mon), {})[mon] = c
    return parts


def quotient(presentation: AlgebraPresentation, max_degree=None,
             budget=DEFAULT_BUDGET) -> QuotientAlgebra:
    return QuotientAlgebra(presentation, max_degree=max_degree, budget=budget)


def hilbert_series(algebra: QuotientAlgebra):
    """Dimensions [dim A^0, dim A^1, ...].

    With an explicit top_degree in the presentation the list runs through
    that degree; otherwise trailing zero degrees are trimmed.
    """
    return algebra.hilbert()


def convolve(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


# --------------------------------------------------------------------------
# tensor square


class TensorElement:
    """Sparse element of a TensorSquareAlgebra; keys are basis-monomial pairs."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = terms

    @property
    def field(self):
        return self.algebra.field

    def is_zero(self):
        return not self.terms

    def coefficient(self, pair):
        return self.terms.get(pair, self.field.zero)

    def degree(self):
        degs = {self.algebra.pair_degree(p) for p in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def homogeneous_parts(self):
        parts = {}
        for pair, c in self.terms.items():
            parts.setdefault(self.algebra.pair_degree(pair), {})[pair] = c
        return {d: TensorElement(self.algebra, t) for d, t in sorted(parts.items())}

    def __add__(self, other):
        self._check(other)
        field = self.field
        acc = dict(self.terms)
        for k, c in other.terms.items():
            prev = acc.get(k)
            c = c if prev is None else field.add(prev, c)
            if c == field.zero:
                acc.pop(k, None)
            else:
                acc[k] = c
        return TensorElement(self.algebra, acc)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        field = self.field
        return TensorElement(self.algebra,
                             {k: field.neg(c) for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return self.algebra.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def scale(self, scalar):
        field = self.field
        c0 = field.coerce(scalar)
        if c0 == field.zero:
            return TensorElement(self.algebra, {})
        return TensorElement(self.algebra,
                             {k: field.mul(c, c0) for k, c in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, TensorElement)
                and other.algebra is self.algebra and other.terms == self.terms)

    def __hash__(self):
        return hash((id(self.algebra), tuple(sorted(self.terms.items()))))

    def _check(self, other):
        if not isinstance(other, TensorElement) or other.algebra is not self.algebra:
            raise MismatchError("tensor elements from different algebras")

    def __repr__(self):
        if not self.terms:
            return "0"
        free = self.algebra.A.free
        field = self.field
        bits = []
        for (m1, m2) in sorted(self.terms,
                               key=lambda p: (self.algebra.pair_degree(p), p)):
            c = field.fmt(self.terms[(m1, m2)])
            s = f"{free.mon_str(m1)}(x){free.mon_str(m2)}"
            bits.append(s if c == "1" else f"-{s}" if c == "-1" else f"{c}*{s}")
        return " + ".join(bits).replace("+ -", "- ")


class TensorSquareAlgebra:
    """A (x) A with the Koszul sign rule, basis = pairs of basis monomials.

    For a truncated quotient (built only through some degree cap) pass
    allow_truncated=True; products whose legs would leave the constructed
    range then raise TruncationError, so callers must prune.
    """

    def __init__(self, A: QuotientAlgebra, allow_truncated=False):
        if not A.exhaustive and not allow_truncated:
            raise TruncationError(f"tensor square needs a fully constructed algebra: {A.label}")
        self.A = A
        self.field = A.field
        leg_top = A.top_nonzero if A.exhaustive else A.built_top
        self.leg_top = leg_top
        self.top = 2 * leg_top
        self.label = f"{A.label} (x) {A.label}"
        self.basis = []
        self.index = []
        for d in range(self.top + 1):
            pairs = []
            for e in range(d + 1):
                if e > leg_top or d - e > leg_top:
                    continue
                for m1 in A.basis_monomials(e):
                    for m2 in A.basis_monomials(d - e):
                        pairs.append((m1, m2))
            self.basis.append(pairs)
            self.index.append({p: i for i, p in enumerate(pairs)})
        self.dims = [len(b) for b in self.basis]
        self._pair_cache = {}

    def pair_degree(self, pair):
        f = self.A.free
        return f.monomial_degree(pair[0]) + f.monomial_degree(pair[1])

    def zero(self):
        return TensorElement(self, {})

    def one(self):
        return TensorElement(self, {((), ()): self.field.one})

    def tensor(self, a: Element, b: Element) -> TensorElement:
        """a (x) b for normal-form elements of A."""
        field = self.field
        acc = {}
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                acc[(m1, m2)] = field.mul(c1, c2)
        return TensorElement(self, acc)

    def bar(self, a: Element) -> TensorElement:
        """a (x) 1 - 1 (x) a, the basic zero-divisor attached to a."""
        return self.tensor(a, self.A.one()) - self.tensor(self.A.one(), a)

    def _pair_product(self, u1, v1, u2, v2):
        key = (u1, v1, u2, v2)
        hit = self._pair_cache.get(key)
        if hit is not None:
            return hit
        A = self.A
        field = self.field
        left = A.mul_basis(u1, u2)
        out = {}
        if left:
            right = A.mul_basis(v1, v2)
            if right:
                neg = (field.char != 2
                       and A.free.monomial_degree(v1) % 2 == 1
                       and A.free.monomial_degree(u2) % 2 == 1)
                for ml, cl in left.items():
                    for mr, cr in right.items():
                        c = field.mul(cl, cr)
                        if neg:
                            c = field.neg(c)
                        out[(ml, mr)] = c
        self._pair_cache[key] = out
        return out

    def multiply(self, t1: TensorElement, t2: TensorElement) -> TensorElement:
        field = self.field
        acc = {}
        for (u1, v1), c1 in t1.terms.items():
            for (u2, v2), c2 in t2.terms.items():
                c12 = field.mul(c1, c2)
                for pair, c in self._pair_product(u1, v1, u2, v2).items():
                    val = field.mul(c12, c)
                    prev = acc.get(pair)
                    val = val if prev is None else field.add(prev, val)
                    if val == field.zero:
                        acc.pop(pair, None)
                    else:
                        acc[pair] = val
        return TensorElement(self, acc)

    def mu(self, t: TensorElement) -> Element:
        """Multiplication map A (x) A -> A."""
        field = self.field
        acc = {}
        for (m1, m2), c in t.terms.items():
            for mon, c2 in self.A.mul_basis(m1, m2).items():
                val = field.mul(c, c2)
                prev = acc.get(mon)
                val = val if prev is None else field.add(prev, val)
                if val == field.zero:
                    acc.pop(mon, None)
                else:
                    acc[mon] = val
        return Element(self.A, acc)

    def swap(self, t: TensorElement) -> TensorElement:
        """The graded flip u (x) v -> (-1)^(|u||v|) v (x) u."""
        field = self.field
        free = self.A.free
        acc = {}
        for (m1, m2), c in t.terms.items():
            if (field.char != 2 and free.monomial_degree(m1) % 2
                    and free.monomial_degree(m2) % 2):
                c = field.neg(c)
            acc[(m2, m1)] = c
        return TensorElement(self, acc)

    def vectorize(self, t: TensorElement, d: int):
        idx = self.index[d]
        vec = {}
        for pair, c in t.terms.items():
            if self.pair_degree(pair) != d:
                raise HomogeneityError("vectorize needs a homogeneous tensor element")
            vec[idx[pair]] = c
        return vec

    def element_from_vec(self, vec, d: int) -> TensorElement:
        basis = self.basis[d]
        field = self.field
        return TensorElement(self, {basis[i]: field.coerce(c) for i, c in vec.items()})

    def __repr__(self):
        return f"TensorSquareAlgebra({self.A.label}, dims={self.dims})"


def tensor_square(A: QuotientAlgebra, allow_truncated=False) -> TensorSquareAlgebra:
    """Memoized per algebra so repeated calls share one product cache."""
    cache = getattr(A, "_tensor_squares", None)
    if cache is None:
        cache = A._tensor_squares = {}
    key = bool(allow_truncated)
    if key not in cache:
        cache[key] = TensorSquareAlgebra(A, allow_truncated=allow_truncated)
    return cache[key]


# --------------------------------------------------------------------------
# duality and the diagonal class


class DualityData:
    """Dual bases for a Poincare duality algebra: b_i . b_j* = delta_ij omega."""

    def __init__(self, algebra, top, omega, duals):
        self.algebra = algebra
        self.top = top
        self.omega = omega
        self.duals = duals  # basis monomial -> Element in complementary degree

    def __repr__(self):
        return f"DualityData({self.algebra.label}, top={self.top})"


def duality_data(A: QuotientAlgebra, top=None, omega=None) -> DualityData:
    """Solve for the dual basis in every degree.

    omega defaults to the unique top-degree basis monomial (coefficient 1).
    Degenerate pairings raise NotPoincareDualityError.
    """
    field = A.field
    if top is None:
        top = A.top_nonzero
    if A.dim(top) != 1:
        raise NotPoincareDualityError(
            f"{A.label}: degree {top} has dimension {A.dim(top)}, expected 1")
    w0 = A.basis_monomials(top)[0]
    if omega is None:
        omega = Element(A, {w0: field.one})
    omega_coeff = omega.terms.get(w0)
    if omega_coeff is None or set(omega.terms) != {w0}:
        raise NotPoincareDualityError(f"{A.label}: omega must be supported on {w0}")

    duals = {}
    for k in range(top + 1):
        rows_basis = A.basis_monomials(k)
        cols_basis = A.basis_monomials(top - k)
        if len(rows_basis) != len(cols_basis):
            raise NotPoincareDualityError(
                f"{A.label}: dim mismatch {len(rows_basis)} vs {len(cols_basis)} "
                f"in degrees {k}, {top - k}")
        if not rows_basis:
            continue
        P = []
        for bi in rows_basis:
            row = []
            for bj in cols_basis:
                prod = A.mul_basis(bi, bj)
                row.append(field.div(prod.get(w0, field.zero), omega_coeff))
            P.append(row)
        X = invert_matrix(field, P)
        if X is None:
            raise NotPoincareDualityError(
                f"{A.label}: pairing degenerate in degree {k}")
        for j, bi in enumerate(rows_basis):
            terms = {}
            for t, bt in enumerate(cols_basis):
                if X[t][j] != field.zero:
                    terms[bt] = X[t][j]
            duals[bi] = Element(A, terms)
    return DualityData(A, top, omega, duals)


def diagonal_class(D: DualityData) -> TensorElement:
    """Sum over the basis of (-1)^|b| b (x) b*, checked to kill every bar(x)."""
    A = D.algebra
    T = tensor_square(A)
    field = A.field
    acc = {}
    for k in range(D.top + 1):
        for b in A.basis_monomials(k):
            dual = D.duals[b]
            for m2, c in dual.terms.items():
                val = field.neg(c) if (field.char != 2 and k % 2) else c
                pair = (b, m2)
                prev = acc.get(pair)
                val = val if prev is None else field.add(prev, val)
                if val == field.zero:
                    acc.pop(pair, None)
                else:
                    acc[pair] = val
    delta = TensorElement(T, acc)
    for name in A.free.names:
        probe = T.bar(A.gen(name)) * delta
        if not probe.is_zero():
            raise ModelInconsistencyError(
                f"{A.label}: diagonal class not annihilated by bar({name})")
    return delta
