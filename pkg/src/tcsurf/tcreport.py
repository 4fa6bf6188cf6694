"""Topological-complexity reports for configuration spaces of surfaces.

A report combines three independent numbers for F(Sigma_g minus m points, n):

  lower    1 + zcl of a cohomology model, certified by an explicit nonzero
           product of zero-divisors (or an exact zcl run),
  upper    the minimum over encoded fact chains: homotopy-dimension bounds
           tc <= 2 dim + 1 and fibration splittings tc <= tc(base) +
           tc(fiber) - 1 seeded with known constants,
  theorem  the closed-form value the two are expected to pinch.

Upper bounds are encoded facts, not computations; every fact carries a kind
tag ("cited" for known inputs, "dimension" or "product" for the bound rule
applied, "derived" for values this package computed).  Status is "tight"
when lower = theorem = upper, "gap" otherwise, and "unverified" when no
model algebra is wired for the input (the closed form is still shown).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import AlgebraError, ModelInconsistencyError, ResourceBudgetError
from .models import (arnold_algebra, punctured_plane_algebra, sphere_mod2_model,
                     totaro_algebra, genus2_B_algebra)
from .presentation import quotient
from .zcl import bar_product_certificate, case_certificate, zcl_exact


@dataclass(frozen=True)
class TcFact:
    """One ingredient of a bound: a constant, a rule instance, or a result."""
    description: str
    value: int
    kind: str  # cited | dimension | product | derived

    def to_json(self):
        return {"description": self.description, "value": self.value,
                "kind": self.kind}


def tc_theorem(g: int, n: int, m: int = 0) -> int:
    """Closed-form tc of F(Sigma_g minus m points, n)."""
    if g < 0 or n < 1 or m < 0:
        raise AlgebraError("need g >= 0, n >= 1, m >= 0")
    if m == 0:
        if g == 0:
            return 3 if n <= 2 else 2 * n - 2
        if g == 1:
            return 2 * n + 1
        return 2 * n + 3
    if g == 0:
        if m == 1:
            return 1 if n == 1 else 2 * n - 2
        if m == 2:
            return 2 * n
        return 2 * n + 1
    return 2 * n + 1


def product_space_tc(g: int, n: int) -> int:
    """tc of the n-fold product of the closed surface, for comparison."""
    if g < 0 or n < 1:
        raise AlgebraError("need g >= 0, n >= 1")
    return 2 * n + 1 if g <= 1 else 4 * n + 1


def _dim_facts(space: str, dim: int):
    return [
        TcFact(f"{space} carrying a complex of dimension {dim}", dim, "dimension"),
        TcFact(f"tc <= 2*{dim} + 1 on a {dim}-dimensional complex",
               2 * dim + 1, "dimension"),
    ]


def upper_bound(g: int, n: int, m: int = 0):
    """Best encoded upper bound and the fact chain that produces it."""
    if g < 0 or n < 1 or m < 0:
        raise AlgebraError("need g >= 0, n >= 1, m >= 0")
    if m == 0:
        if g == 0:
            if n <= 2:
                return 3, [TcFact(
                    "n <= 2 sphere configurations have the homotopy type of "
                    "the sphere; tc(S^2) = 3", 3, "cited")]
            facts = [
                TcFact("tc(SO(3)) = cat(SO(3)) = 4", 4, "cited"),
                TcFact(f"tc of {n - 3} points in the twice-punctured plane "
                       f"is 2({n - 3}) + 1 = {2 * n - 5}", 2 * n - 5, "cited"),
                TcFact(f"frame splitting: tc <= 4 + {2 * n - 5} - 1",
                       2 * n - 2, "product"),
            ]
            return 2 * n - 2, facts
        if g == 1:
            if n == 1:
                return 3, [TcFact("tc of the torus = 3", 3, "cited")]
            facts = [TcFact("tc of the torus = 3", 3, "cited")]
            facts += _dim_facts(
                f"configurations of {n - 1} points on the once-punctured torus",
                n - 1)
            facts.append(TcFact(
                f"bundle splitting over the torus: tc <= 3 + {2 * n - 1} - 1",
                2 * n + 1, "product"))
            return 2 * n + 1, facts
        facts = _dim_facts(
            f"configurations of {n} points on a genus-{g} surface", n + 1)
        return 2 * n + 3, facts
    if g == 0:
        if m == 1:
            if n == 1:
                return 1, _dim_facts("the plane (contractible)", 0)
            return 2 * n - 2, [TcFact(
                f"tc of {n} points in the plane is 2n - 2", 2 * n - 2, "cited")]
        if m == 2:
            return 2 * n, [TcFact(
                f"tc of {n} points in the once-punctured plane is 2n",
                2 * n, "cited")]
    facts = _dim_facts(f"configurations of {n} points on an open surface", n)
    return 2 * n + 1, facts


def _certificate_lower(g: int, n: int, m: int):
    """(zcl lower bound, facts) by the cheapest certified route, or None."""
    if m == 0:
        if g == 0 and n <= 2:
            cert = bar_product_certificate(totaro_algebra(0, n), 2)
        elif g == 0:
            cert = case_certificate("sphere", n)
        elif g == 1:
            cert = case_certificate("torus", n)
        else:
            cert = case_certificate("genus2", n, genus=g)
    elif g == 0 and m <= 3:
        Q = quotient(arnold_algebra(n)) if m == 1 \
            else quotient(punctured_plane_algebra(n, m - 1))
        cert = bar_product_certificate(Q, tc_theorem(g, n, m) - 1)
    else:
        return None
    L = cert.certified_length
    fact = TcFact(
        f"nonzero {L}-fold zero-divisor product on {cert.algebra} "
        f"(coefficient {cert.coefficient})", L, "derived")
    return L, [fact, TcFact("tc >= zcl + 1", L + 1, "derived")], cert


def _exact_lower(g: int, n: int, m: int):
    """(exact zcl, facts) on the mapped model, or None when none is wired."""
    if m == 0:
        if g == 0 and n <= 2:
            A = totaro_algebra(0, n)
        elif g == 0:
            A = sphere_mod2_model(n)
        elif g == 1:
            A = totaro_algebra(1, n)
        else:
            A = genus2_B_algebra(n, g)
    elif g == 0 and m <= 3:
        A = quotient(arnold_algebra(n)) if m == 1 \
            else quotient(punctured_plane_algebra(n, m - 1))
    else:
        return None
    rep = zcl_exact(A)
    fact = TcFact(f"zcl({A.label}) = {rep.value} by exact power iteration",
                  rep.value, "derived")
    return rep.value, [fact, TcFact("tc >= zcl + 1", rep.value + 1, "derived")]


@dataclass
class TcReport:
    g: int
    n: int
    m: int
    lower: int | None
    upper: int
    theorem: int
    status: str  # tight | gap | unverified
    method: str
    facts: list = dc_field(default_factory=list)
    product_tc: int = None

    def to_json(self):
        return {
            "g": self.g, "n": self.n, "m": self.m,
            "lower": self.lower, "upper": self.upper, "theorem": self.theorem,
            "status": self.status, "method": self.method,
            "product_space_tc": self.product_tc,
            "facts": [f.to_json() for f in self.facts],
        }

    def table_row(self):
        lo = "?" if self.lower is None else str(self.lower)
        return (f"g={self.g} n={self.n} m={self.m}  "
                f"lower={lo} upper={self.upper} theorem={self.theorem}  "
                f"product={self.product_tc}  {self.status}")


def tc_report(g: int, n: int, m: int = 0, method: str = "auto") -> TcReport:
    """Full report for one input; see the module docstring for the contract."""
    theorem = tc_theorem(g, n, m)
    upper, ufacts = upper_bound(g, n, m)
    ptc = product_space_tc(g, n)

    def partial(status, meth, lfacts=()):
        return TcReport(g, n, m, None, upper, theorem, status, meth,
                        list(lfacts) + ufacts, ptc)

    try:
        if method in ("auto", "certificate"):
            got = _certificate_lower(g, n, m)
            used = "certificate"
        elif method == "exact":
            got = _exact_lower(g, n, m)
            used = "exact"
        else:
            raise AlgebraError(f"unknown method: {method}")
    except (ResourceBudgetError, MemoryError) as e:
        e.partial_report = partial("unverified", method)
        raise
    if got is None:
        note = TcFact("no model algebra is wired for this input; "
                      "closed-form value shown unverified", theorem, "cited")
        return partial("unverified", "unverified", [note])
    zlow, lfacts = got[0], got[1]
    lower = zlow + 1
    if not (lower <= theorem <= upper):
        raise ModelInconsistencyError(
            f"bound order violated at (g={g}, n={n}, m={m}): "
            f"{lower} <= {theorem} <= {upper} fails")
    status = "tight" if lower == theorem == upper else "gap"
    return TcReport(g, n, m, lower, upper, theorem, status, used,
                    lfacts + ufacts, ptc)


def sweep(gmax: int, nmax: int, mmax: int = 0, method: str = "auto"):
    """Reports for every 0 <= g <= gmax, 1 <= n <= nmax, 0 <= m <= mmax."""
    if gmax < 0 or nmax < 1 or mmax < 0:
        raise AlgebraError("need gmax >= 0, nmax >= 1, mmax >= 0")
    out = []
    for g in range(gmax + 1):
        for n in range(1, nmax + 1):
            for m in range(mmax + 1):
                out.append(tc_report(g, n, m, method=method))
    return out


def all_tight(reports) -> bool:
    """True when no computed row shows a gap (unverified rows do not count)."""
    return all(r.status != "gap" for r in reports)
