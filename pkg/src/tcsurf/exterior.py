"""Free supercommutative algebras on graded generators.

A monomial is a sorted tuple of generator ids; a repeated id means a power.
Elements are sparse dicts monomial -> scalar.  Products follow the sign rule

    (u1 x v1) * (u2 x v2) = (-1)^(|v1||u2|) u1u2 x v1v2

specialised to generators: moving a generator of odd degree past another odd
one flips the sign.  Over a field of characteristic 2 there are no signs and
powers of every generator are kept; over any other field the square of an
odd-degree generator is zero.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import HomogeneityError, MismatchError
from .fields import Field


@dataclass(frozen=True)
class Generator:
    gid: int
    name: str
    degree: int


class FreeAlgebra:
    """Free supercommutative algebra over an exact field.

    generators: iterable of (name, degree) pairs, degree >= 1.
    """

    def __init__(self, field: Field, generators):
        self.field = field
        self.generators = []
        seen = set()
        for gid, (name, degree) in enumerate(generators):
            if degree < 1:
                raise ValueError(f"generator {name!r} must have degree >= 1")
            if name in seen:
                raise ValueError(f"duplicate generator name {name!r}")
            seen.add(name)
            self.generators.append(Generator(gid, name, degree))
        self.ngens = len(self.generators)
        self.degrees = tuple(g.degree for g in self.generators)
        self.odd = tuple(g.degree % 2 == 1 for g in self.generators)
        self.names = tuple(g.name for g in self.generators)
        self.by_name = {g.name: g.gid for g in self.generators}
        self._mon_cache = {}

    # -- monomials ---------------------------------------------------------

    def monomial_degree(self, mon) -> int:
        return sum(self.degrees[g] for g in mon)

    def mul_mon(self, m1, m2):
        """Multiply two monomials.  Returns (sign, monomial) or None for zero."""
        if not m1:
            return 1, m2
        if not m2:
            return 1, m1
        odd = self.odd
        if self.field.char != 2:
            # sign: one flip per pair of odd generators that passes another
            flips = 0
            for g in m2:
                if odd[g]:
                    flips += sum(1 for h in m1 if h > g and odd[h])
            merged = sorted(m1 + m2)
            prev = -1
            for g in merged:
                if g == prev and odd[g]:
                    return None
                prev = g
            return (-1 if flips % 2 else 1), tuple(merged)
        return 1, tuple(sorted(m1 + m2))

    def monomials_of_degree(self, d):
        """All monomials of total degree d, in ascending tuple order."""
        key = d
        if key in self._mon_cache:
            return self._mon_cache[key]
        out = []
        char2 = self.field.char == 2
        degrees = self.degrees
        odd = self.odd

        def rec(start, rem, prefix):
            if rem == 0:
                out.append(tuple(prefix))
                return
            for g in range(start, self.ngens):
                dg = degrees[g]
                if dg > rem:
                    continue
                cap = rem // dg
                if not char2 and odd[g]:
                    cap = min(cap, 1)
                for count in range(cap, 0, -1):
                    rec(g + 1, rem - dg * count, prefix + [g] * count)

        rec(0, d, [])
        out.sort()
        self._mon_cache[key] = out
        return out

    def free_hilbert(self, through: int):
        """Dimension of each degree 0..through of the free algebra."""
        series = [1] + [0] * through
        char2 = self.field.char == 2
        for g in range(self.ngens):
            dg = self.degrees[g]
            if not char2 and self.odd[g]:
                factor = [1 if d in (0, dg) else 0 for d in range(through + 1)]
            else:
                factor = [1 if d % dg == 0 else 0 for d in range(through + 1)]
            new = [0] * (through + 1)
            for i, a in enumerate(series):
                if a == 0:
                    continue
                for j in range(0, through + 1 - i):
                    if factor[j]:
                        new[i + j] += a
            series = new
        return series

    def mon_str(self, mon) -> str:
        if not mon:
            return "1"
        parts = []
        i = 0
        while i < len(mon):
            j = i
            while j < len(mon) and mon[j] == mon[i]:
                j += 1
            name = self.names[mon[i]]
            parts.append(name if j - i == 1 else f"{name}^{j - i}")
            i = j
        return "*".join(parts)

    # -- elements ----------------------------------------------------------

    def zero(self):
        return Element(self, {})

    def one(self):
        return Element(self, {(): self.field.one})

    def gen(self, name: str):
        return Element(self, {(self.by_name[name],): self.field.one})

    def element(self, terms: dict):
        clean = {}
        for mon, c in terms.items():
            c = self.field.coerce(c)
            if c != self.field.zero:
                clean[tuple(mon)] = c
        return Element(self, clean)

    def multiply(self, e1: "Element", e2: "Element") -> "Element":
        if e1.algebra is not self or e2.algebra is not self:
            raise MismatchError("elements from different algebras")
        field = self.field
        acc = {}
        for m1, c1 in e1.terms.items():
            for m2, c2 in e2.terms.items():
                hit = self.mul_mon(m1, m2)
                if hit is None:
                    continue
                sign, mon = hit
                c = field.mul(c1, c2)
                if sign < 0:
                    c = field.neg(c)
                prev = acc.get(mon)
                c = c if prev is None else field.add(prev, c)
                if c == field.zero:
                    acc.pop(mon, None)
                else:
                    acc[mon] = c
        return Element(self, acc)

    def __repr__(self):
        gens = ",".join(self.names)
        return f"FreeAlgebra({self.field.name}; {gens})"


class Element:
    """Sparse element of a FreeAlgebra or of a quotient bound to one.

    The binding object only needs a .field, a .free (FreeAlgebra used for
    monomials) and a ._mul_elements method; both FreeAlgebra itself and
    QuotientAlgebra qualify.
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = terms

    @property
    def field(self):
        return self.algebra.field

    def is_zero(self):
        return not self.terms

    def coefficient(self, mon):
        return self.terms.get(tuple(mon), self.field.zero)

    def support(self):
        return sorted(self.terms)

    def degree(self):
        """Degree if nonzero homogeneous, else None."""
        free = _free_of(self.algebra)
        degs = {free.monomial_degree(m) for m in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def require_homogeneous(self):
        if self.terms and self.degree() is None:
            raise HomogeneityError(f"element is not homogeneous: {self}")
        return self

    def homogeneous_parts(self):
        free = _free_of(self.algebra)
        parts = {}
        for mon, c in self.terms.items():
            parts.setdefault(free.monomial_degree(mon), {})[mon] = c
        return {d: Element(self.algebra, t) for d, t in sorted(parts.items())}

    def __add__(self, other):
        self._check(other)
        field = self.field
        acc = dict(self.terms)
        for mon, c in other.terms.items():
            prev = acc.get(mon)
            c = c if prev is None else field.add(prev, c)
            if c == field.zero:
                acc.pop(mon, None)
            else:
                acc[mon] = c
        return Element(self.algebra, acc)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        field = self.field
        return Element(self.algebra, {m: field.neg(c) for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.algebra._mul_elements(self, other)
        return self.scale(other)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def scale(self, scalar):
        field = self.field
        c0 = field.coerce(scalar)
        if c0 == field.zero:
            return Element(self.algebra, {})
        return Element(self.algebra, {m: field.mul(c, c0) for m, c in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and other.algebra is self.algebra
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((id(self.algebra), tuple(sorted(self.terms.items()))))

    def _check(self, other):
        if not isinstance(other, Element) or other.algebra is not self.algebra:
            raise MismatchError("elements from different algebras")

    def __repr__(self):
        if not self.terms:
            return "0"
        free = _free_of(self.algebra)
        field = self.field
        bits = []
        for mon in sorted(self.terms, key=lambda m: (free.monomial_degree(m), m)):
            c = self.terms[mon]
            cs = field.fmt(c)
            ms = free.mon_str(mon)
            if ms == "1":
                bits.append(cs)
            elif cs == "1":
                bits.append(ms)
            elif cs == "-1":
                bits.append(f"-{ms}")
            else:
                bits.append(f"{cs}*{ms}")
        out = " + ".join(bits)
        return out.replace("+ -", "- ")


def _free_of(algebra):
    return algebra if isinstance(algebra, FreeAlgebra) else algebra.free


# FreeAlgebra is its own multiplication context.
FreeAlgebra._mul_elements = FreeAlgebra.multiply
