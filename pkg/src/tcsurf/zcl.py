"""Cup length and zero-divisor cup length.

zcl A is the largest q with a nonzero q-fold product inside ker(mu), where
mu: A (x) A -> A is multiplication.  Exact values come from degreewise
subspace power iteration; the named certificate cases verify one explicit
nonzero product each by full expansion and witness-coefficient extraction.

Since ker(mu) is the two-sided ideal generated by the bar classes
x (x) 1 - 1 (x) x of the algebra generators (induction on monomial length
via (uv)bar = ubar (v (x) 1) + (1 (x) u) vbar), the power Z^q is nonzero
exactly when some q-fold product of bar generators is nonzero.  The default
iteration therefore multiplies by bar generators only; via="kernel-basis"
runs the same loop with a full kernel basis instead, as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AlgebraError, CertificateError, TruncationError
from .exterior import Element
from .fields import QQ
from .linalg import Gf2Subspace, RationalSubspace, echelonize, kernel_basis
from .models import (
    genus2_B_algebra,
    reduced_generators,
    sphere_mod2_model,
    totaro_algebra,
    _build_diagonal_model,
)
from .presentation import TensorElement, TensorSquareAlgebra, tensor_square


@dataclass
class BoundReport:
    """A computed cl/zcl value, or a certified lower bound for it."""

    quantity: str      # "cl" | "zcl"
    value: int
    exact: bool
    method: str        # "power-iteration" | "certificate"
    algebra: str
    variant: str = ""

    def to_json(self):
        out = {
            "quantity": self.quantity,
            "value": self.value,
            "exact": self.exact,
            "method": self.method,
            "algebra": self.algebra,
        }
        if self.variant:
            out["variant"] = self.variant
        return out


@dataclass
class ZclCertificate:
    """An explicit nonzero product of zero-divisors, fully expanded."""

    algebra: str
    factors: list
    witness: tuple
    coefficient: object
    certified_length: int
    tensor_algebra: TensorSquareAlgebra = None

    def to_json(self):
        T = self.tensor_algebra
        free = T.A.free
        return {
            "algebra": self.algebra,
            "certified_length": self.certified_length,
            "coefficient": T.field.fmt(self.coefficient),
            "witness": [free.mon_str(self.witness[0]), free.mon_str(self.witness[1])],
            "factors": [repr(f) for f in self.factors],
        }


def _new_subspace(field, ncols):
    return Gf2Subspace(ncols) if field.char == 2 else RationalSubspace(ncols)


class _GradedSpan:
    """Degreewise echelonized span of homogeneous elements of a graded space.

    The space must offer field, dims, vectorize(e, d), element_from_vec(v, d).
    """

    def __init__(self, space):
        self.space = space
        self.subs = {}

    def insert(self, elem) -> bool:
        grew = False
        for d, part in elem.homogeneous_parts().items():
            vec = self.space.vectorize(part, d)
            sub = self.subs.get(d)
            if sub is None:
                sub = _new_subspace(self.space.field, self.space.dims[d])
                self.subs[d] = sub
            if sub.insert(vec):
                grew = True
        return grew

    def is_zero(self):
        return all(sub.is_zero() for sub in self.subs.values())

    def rank(self):
        return sum(sub.rank for sub in self.subs.values())

    def basis_elements(self):
        out = []
        for d in sorted(self.subs):
            for row in self.subs[d].rows_rref():
                out.append(self.space.element_from_vec(row, d))
        return out


def zero_divisor_subspace(A, T: TensorSquareAlgebra = None):
    """Per-degree kernel of mu: (A (x) A)^d -> A^d, as echelonized subspaces."""
    if T is None:
        T = tensor_square(A)
    out = {}
    for d in range(T.top + 1):
        pairs = T.basis[d]
        ncols = A.dim(d) if d <= A.top_nonzero else 0
        images = []
        for (m1, m2) in pairs:
            prod = A.mul_basis(m1, m2)
            images.append(
                {A.basis_index[d][m]: c for m, c in prod.items()} if ncols else {})
        vecs = kernel_basis(A.field, images, ncols)
        sub = _new_subspace(A.field, len(pairs))
        for v in vecs:
            sub.insert(v)
        sub.finalize()
        out[d] = sub
    return out


def zero_divisor_elements(A, T: TensorSquareAlgebra = None):
    """Kernel bases from zero_divisor_subspace, as TensorElements."""
    if T is None:
        T = tensor_square(A)
    subs = zero_divisor_subspace(A, T)
    out = []
    for d in sorted(subs):
        for row in subs[d].rows_rref():
            out.append(T.element_from_vec(row, d))
    return out


def bar_generators(A, T: TensorSquareAlgebra = None):
    """Nonzero bar classes of the algebra generators."""
    if T is None:
        T = tensor_square(A)
    out = []
    for name in A.free.names:
        b = T.bar(A.gen(name))
        if not b.is_zero():
            out.append(b)
    return out


def _power_iterate(space, seeds, multipliers, cap):
    """Largest k <= cap with the iterated product span nonzero.

    span_1 = span(seeds), span_{k+1} = span{m * y}.  Returns (value, exact).
    """
    cur = _GradedSpan(space)
    for s in seeds:
        cur.insert(s)
    if cur.is_zero():
        return 0, True
    k = 1
    while cap is None or k < cap:
        nxt = _GradedSpan(space)
        grew = False
        for y in cur.basis_elements():
            for m in multipliers:
                p = m * y
                if not p.is_zero() and nxt.insert(p):
                    grew = True
        if not grew:
            return k, True
        k += 1
        cur = nxt
    return k, False


def zcl_exact(A, cap=None, via="generators") -> BoundReport:
    """Zero-divisor cup length by degreewise power iteration.

    via="generators" multiplies by bar classes of the algebra generators;
    via="kernel-basis" uses a full kernel basis of mu in every degree.
    Both drive the same ideal powers; the first is the fast default, the
    second the literal definition kept for cross-checks.
    """
    if not A.exhaustive:
        raise TruncationError(f"zcl_exact needs a fully constructed algebra: {A.label}")
    T = tensor_square(A)
    if via == "generators":
        mult = bar_generators(A, T)
        seeds = mult
    elif via == "kernel-basis":
        mult = zero_divisor_elements(A, T)
        seeds = mult
    else:
        raise AlgebraError(f"unknown zcl variant: {via}")
    value, exact = _power_iterate(T, seeds, mult, cap)
    return BoundReport("zcl", value, exact, "power-iteration", A.label, variant=via)


def cup_length(A, cap=None) -> BoundReport:
    """Largest q with a nonzero q-fold product of positive-degree elements."""
    if not A.exhaustive:
        raise TruncationError(f"cup_length needs a fully constructed algebra: {A.label}")
    gens = [g for g in A.generator_elements() if not g.is_zero()]
    value, exact = _power_iterate(A, gens, gens, cap)
    return BoundReport("cl", value, exact, "power-iteration", A.label)


# --------------------------------------------------------------------------
# certificates


def _bidegree_parts(T, terms):
    free = T.A.free
    return {(m1, m2): (free.monomial_degree(m1), free.monomial_degree(m2))
            for (m1, m2) in terms}


def _mul_pruned(T: TensorSquareAlgebra, acc_terms, factor: TensorElement,
                pmax, qmax):
    """Multiply a term dict by a factor, dropping terms past bidegree (pmax, qmax).

    Bidegrees only grow, so dropped terms cannot reach the witness bidegree.
    """
    field = T.field
    free = T.A.free
    out = {}
    for (u1, v1), c1 in acc_terms.items():
        du1 = free.monomial_degree(u1)
        dv1 = free.monomial_degree(v1)
        for (u2, v2), c2 in factor.terms.items():
            if du1 + free.monomial_degree(u2) > pmax:
                continue
            if dv1 + free.monomial_degree(v2) > qmax:
                continue
            c12 = field.mul(c1, c2)
            for pair, c in T._pair_product(u1, v1, u2, v2).items():
                val = field.mul(c12, c)
                prev = out.get(pair)
                val = val if prev is None else field.add(prev, val)
                if val == field.zero:
                    out.pop(pair, None)
                else:
                    out[pair] = val
    return out


def certificate_product(T: TensorSquareAlgebra, factors, witness,
                        algebra_label=None) -> ZclCertificate:
    """Expand a product of zero-divisors and extract the witness coefficient.

    Every factor must lie in ker(mu).  Expansion is pruned to the witness
    bidegree (coefficients there are unaffected since bidegrees only grow).
    A zero witness coefficient raises CertificateError carrying the basis
    tensors that were nonzero at the witness bidegree.
    """
    A = T.A
    free = A.free
    field = T.field
    for i, f in enumerate(factors):
        if f.is_zero() or not T.mu(f).is_zero():
            raise CertificateError(f"factor {i} is not a zero-divisor: {f}")
    pmax = free.monomial_degree(witness[0])
    qmax = free.monomial_degree(witness[1])
    acc = {((), ()): field.one}
    for f in factors:
        acc = _mul_pruned(T, acc, f, pmax, qmax)
        if not acc:
            break
    coeff = acc.get(witness, field.zero)
    if coeff == field.zero:
        support = sorted(acc)
        msg = (f"zero witness coefficient on {free.mon_str(witness[0])} (x) "
               f"{free.mon_str(witness[1])}; "
               f"{len(support)} nonzero basis tensors at or below that bidegree")
        err = CertificateError(msg)
        err.support = [(free.mon_str(m1), free.mon_str(m2)) for m1, m2 in support]
        raise err
    return ZclCertificate(
        algebra=algebra_label or A.label,
        factors=list(factors),
        witness=witness,
        coefficient=coeff,
        certified_length=len(factors),
        tensor_algebra=T,
    )


def _single_monomial(e: Element):
    if len(e.terms) != 1:
        raise CertificateError(f"expected a one-term element, got {e}")
    return next(iter(e.terms))


def _product(elems):
    acc = None
    for e in elems:
        acc = e if acc is None else acc * e
    return acc


def mod_ideal_quotient(n: int, genus: int = 2):
    """Genus-2 diagonal model modulo <x1 y1, x_i y1 + x1 y_i>, built through degree n.

    Only degrees <= n are needed: the monomial family x1..xk y_{k+1}..y_n
    lives in degree n, and certificate expansion is pruned leg-wise to n.
    """
    def extra(free):
        a = [free.gen(f"a{i}") for i in range(1, n + 1)]
        b = [free.gen(f"b{i}") for i in range(1, n + 1)]
        x = [a[0]] + [a[j] - a[0] for j in range(1, n)]
        y = [b[0]] + [b[j] - b[0] for j in range(1, n)]
        rels = [x[0] * y[0]]
        for i in range(1, n):
            rels.append(x[i] * y[0] + x[0] * y[i])
        return rels

    return _build_diagonal_model(
        genus, n, extra_rels=extra, max_degree=n,
        label=f"mod-ideal(g={genus},n={n})")


def case_certificate(case: str, n: int, genus: int = 2) -> ZclCertificate:
    """The named certificate families.

    torus: prod of xbar_j ybar_j on the torus model, length 2n, witness
      y1..yn (x) x1..xn.
    genus2: abar1 bbar1 cbar1 dbar1 prod_{j>=2} xbar_j ybar_j on the B
      quotient, length 2n+2, witness inside (w1 y2..yn) (x) (w1 x2..xn).
    sphere: abar^3 times 2(n-3) bar generators of the puncture factor found
      by first-success lexicographic search, length 2n-3, over GF(2).
    punctured-mod-ideal: all 2n bars on the mod-ideal quotient, length 2n,
      after checking every x1..xk y_{k+1}..y_n is nonzero there.
    """
    if n < 1:
        raise AlgebraError("n must be positive")
    if case == "torus":
        A = totaro_algebra(1, n)
        T = tensor_square(A)
        red = reduced_generators(A, 1)
        factors = []
        for j in range(n):
            factors.append(T.bar(red.xs[j]))
            factors.append(T.bar(red.ys[j]))
        wit = (_single_monomial(_product(red.ys)), _single_monomial(_product(red.xs)))
        return certificate_product(T, factors, wit)

    if case == "genus2":
        B = genus2_B_algebra(n, genus)
        T = tensor_square(B)
        red = reduced_generators(B, genus)
        factors = [T.bar(B.gen(s)) for s in ("a1", "b1", "c1", "d1")]
        for j in range(1, n):
            factors.append(T.bar(red.xs[j]))
            factors.append(T.bar(red.ys[j]))
        w1 = B.gen("a1") * B.gen("b1")
        L = _product([w1] + red.ys[1:])
        R = _product([w1] + red.xs[1:])
        if L.is_zero() or R.is_zero():
            raise CertificateError(f"{B.label}: witness legs vanish")
        # expand once against the largest witness bidegree, then pick the
        # first expected-summand pair that survived
        acc = {((), ()): T.field.one}
        for f in factors:
            if f.is_zero() or not T.mu(f).is_zero():
                raise CertificateError("factor is not a zero-divisor")
            acc = _mul_pruned(T, acc, f, n + 1, n + 1)
        witness = None
        for m1 in sorted(L.terms):
            for m2 in sorted(R.terms):
                if acc.get((m1, m2)):
                    witness = (m1, m2)
                    break
            if witness:
                break
        if witness is None:
            raise CertificateError(
                f"{B.label}: no expected witness pair survived expansion")
        return ZclCertificate(B.label, factors, witness, acc[witness],
                              len(factors), T)

    if case == "sphere":
        A = sphere_mod2_model(n)
        T = tensor_square(A)
        al = T.bar(A.gen("a"))
        seed = al * al * al
        if seed.is_zero():
            raise CertificateError(f"{A.label}: cube of the bar class vanished")
        bars = [(name, T.bar(A.gen(name))) for name in A.free.names if name != "a"]
        need = 2 * (n - 3)
        chosen = _search_bars(seed, bars, need)
        if chosen is None:
            raise CertificateError(
                f"{A.label}: no {need}-fold bar product extends abar^3")
        factors = [al, al, al] + [b for _, b in chosen]
        prod = _product(factors)
        witness = min(prod.terms)
        return certificate_product(T, factors, witness)

    if case == "punctured-mod-ideal":
        Aq = mod_ideal_quotient(n)
        a = [Aq.gen(f"a{i}") for i in range(1, n + 1)]
        b = [Aq.gen(f"b{i}") for i in range(1, n + 1)]
        xs = [a[0]] + [a[j] - a[0] for j in range(1, n)]
        ys = [b[0]] + [b[j] - b[0] for j in range(1, n)]
        for k in range(n + 1):
            m = _product(xs[:k] + ys[k:]) if (xs[:k] + ys[k:]) else Aq.one()
            if m.is_zero():
                raise CertificateError(
                    f"{Aq.label}: x1..x{k} y{k+1}..y{n} reduced to zero")
        T = tensor_square(Aq, allow_truncated=True)
        factors = []
        for j in range(n):
            factors.append(T.bar(xs[j]))
            factors.append(T.bar(ys[j]))
        xmon = _single_monomial(_product(xs))
        ymon = _single_monomial(_product(ys))
        try:
            return certificate_product(T, factors, (ymon, xmon))
        except CertificateError:
            return certificate_product(T, factors, (xmon, ymon))

    raise AlgebraError(f"unknown certificate case: {case}")


def bar_product_certificate(A, length: int) -> ZclCertificate:
    """Search for a nonzero product of `length` generator bar classes.

    First-success search over combinations in declaration order (the leading
    factor may repeat once), so success certifies zcl(A) >= length.  Much
    cheaper than zcl_exact when only a lower bound is needed.
    """
    if length < 0:
        raise AlgebraError("length must be nonnegative")
    T = tensor_square(A)
    if length == 0:
        return ZclCertificate(getattr(A, "label", None) or "algebra",
                              [], ((), ()), T.field.one, 0, T)
    bars = [(name, T.bar(A.gen(name))) for name in A.free.names]
    bars = [(s, b) for s, b in bars if not b.is_zero()]
    for start, (name, seed) in enumerate(bars):
        chosen = _search_bars(seed, bars[start:], length - 1)
        if chosen is not None:
            factors = [seed] + [b for _, b in chosen]
            prod = _product(factors)
            witness = min(prod.terms)
            return certificate_product(T, factors, witness)
    raise CertificateError(
        f"no nonzero {length}-fold bar product found over {len(bars)} generators")


def _search_bars(seed: TensorElement, bars, need: int):
    """First (lexicographic) combination of bar generators with nonzero product."""
    if need == 0:
        return []

    def rec(acc, start, chosen):
        if len(chosen) == need:
            return list(chosen)
        for i in range(start, len(bars)):
            name, b = bars[i]
            nxt = acc * b
            if nxt.is_zero():
                continue
            chosen.append(bars[i])
            hit = rec(nxt, i + 1, chosen)
            if hit is not None:
                return hit
            chosen.pop()
        return None

    return rec(seed, 0, [])


# --------------------------------------------------------------------------
# the degree-(1,1) differential probe for the torus model


@dataclass
class E2Report:
    n: int
    dim_source: int
    rank: int
    kernel_dim: int

    def to_json(self):
        return {"n": self.n, "dim_source": self.dim_source,
                "rank": self.rank, "kernel_dim": self.kernel_dim}


def e2_probe(n: int) -> E2Report:
    """Differential on degree-1 classes tensored with the pair classes.

    Source: H^1 of the torus power tensored with the span of one class per
    pair (i,j), modulo (p_i* x - p_j* x) tensor that class; the map sends
    x tensor (i,j) to x * Delta_{i,j} in degree 3 of the free tensor power.
    Reports dimensions only.
    """
    if n < 2:
        raise AlgebraError("the probe needs n >= 2")
    A = totaro_algebra(1, n)
    free = A.free
    field = A.field
    mons3 = free.monomials_of_degree(3)
    idx3 = {m: i for i, m in enumerate(mons3)}
    images = []
    dim_source = 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            delta = A.diagonals[(i, j)]
            for letter in ("a", "b"):
                gi = free.gen(f"{letter}{i}")
                gj = free.gen(f"{letter}{j}")
                probe = (gi - gj) * delta
                if not probe.is_zero():
                    raise AlgebraError(
                        f"relation class ({letter}{i}-{letter}{j}) fails to kill "
                        f"the pair class ({i},{j})")
            # basis of H^1 modulo span(a_i - a_j, b_i - b_j): drop slot-j letters
            for letter in ("a", "b"):
                for k in range(1, n + 1):
                    if k == j:
                        continue
                    dim_source += 1
                    img = free.gen(f"{letter}{k}") * delta
                    images.append({idx3[m]: c for m, c in img.terms.items()})
    span = echelonize(field, len(mons3), images)
    rank = span.rank
    kernel = kernel_basis(field, images, len(mons3))
    if len(kernel) != dim_source - rank:
        raise AlgebraError("kernel dimension inconsistent with rank")
    return E2Report(n, dim_source, rank, len(kernel))


def e2_kernel_dim(n: int) -> int:
    return e2_probe(n).kernel_dim
