"""Exact echelon-form subspaces.

A Subspace is the row space of a set of sparse coordinate vectors, held in
reduced row-echelon form with pivot columns recorded.  RREF is unique for a
given span and column order, so every derived quantity (rank, membership,
residues, kernel bases) is deterministic no matter what order vectors were
fed in.

Over the rationals the rows are kept as primitive integer vectors (gcd 1,
positive pivot); elimination is fraction-free so the hot loops run on plain
ints.  Over GF(2) a row is a single int bitmask and elimination is xor.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .fields import Field


def echelonize(field: Field, ncols: int, vectors) -> "Subspace":
    """Echelonize an iterable of sparse vectors (dict col -> scalar)."""
    if field.char == 2:
        sub = Gf2Subspace(ncols)
    else:
        sub = RationalSubspace(ncols)
    for v in vectors:
        sub.insert(v)
        if sub.rank == ncols:
            break
    sub.finalize()
    return sub


class Subspace:
    """Interface shared by the two implementations."""

    ncols: int
    pivots: list

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def is_zero(self) -> bool:
        return self.rank == 0

    def contains(self, vec) -> bool:
        return not self.reduce(vec)

    def contains_subspace(self, other) -> bool:
        return all(self.contains(r) for r in other.rows_rref())

    def __eq__(self, other):
        return (
            type(other) is type(self)
            and other.ncols == self.ncols
            and other.pivots == self.pivots
            and other.rows_rref() == self.rows_rref()
        )

    def __hash__(self):
        raise TypeError("subspaces are not hashable")


class RationalSubspace(Subspace):
    def __init__(self, ncols: int):
        self.ncols = ncols
        self._rows = {}  # pivot col -> dict col -> int (primitive row)
        self._final = False

    @property
    def pivots(self):
        return sorted(self._rows)

    @property
    def rank(self):
        return len(self._rows)

    def insert(self, vec):
        row = _to_int_row(vec)
        rows = self._rows
        while row:
            p = min(row)
            piv = rows.get(p)
            if piv is None:
                self._rows[p] = _primitive(row, p)
                self._final = False
                return True
            row = _int_eliminate(row, piv, p)
        return False

    def finalize(self):
        """Back-substitute to reduced echelon form (idempotent)."""
        if self._final:
            return
        pivots = sorted(self._rows)
        for i in range(len(pivots) - 1, -1, -1):
            p = pivots[i]
            prow = self._rows[p]
            for q in pivots[:i]:
                row = self._rows[q]
                if p in row:
                    self._rows[q] = _primitive(_int_eliminate(row, prow, p), q)
        self._final = True

    def reduce(self, vec):
        """Residue of a vector modulo the subspace, as dict col -> Fraction."""
        self.finalize()
        work = {c: Fraction(v) for c, v in vec.items() if v}
        for p in sorted(self._rows):
            c = work.get(p)
            if not c:
                continue
            prow = self._rows[p]
            factor = c / prow[p]
            for col, val in prow.items():
                new = work.get(col, Fraction(0)) - factor * val
                if new:
                    work[col] = new
                else:
                    work.pop(col, None)
        return work

    def rows_rref(self):
        """Canonical rows with pivot coefficient 1, sorted by pivot."""
        self.finalize()
        out = []
        for p in sorted(self._rows):
            row = self._rows[p]
            lead = row[p]
            out.append({c: Fraction(v, lead) for c, v in row.items()})
        return out

    def rows_primitive(self):
        self.finalize()
        return [dict(self._rows[p]) for p in sorted(self._rows)]


def _to_int_row(vec):
    """Clear denominators and strip content; values become ints."""
    lcm = 1
    for v in vec.values():
        if isinstance(v, Fraction):
            d = v.denominator
            lcm = lcm * d // gcd(lcm, d)
    row = {}
    for c, v in vec.items():
        n = int(v * lcm) if isinstance(v, Fraction) else int(v) * lcm
        if n:
            row[c] = n
    return _strip_content(row)


def _strip_content(row):
    if not row:
        return row
    g = 0
    for v in row.values():
        g = gcd(g, abs(v))
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def _primitive(row, pivot):
    row = _strip_content(row)
    if row[pivot] < 0:
        row = {c: -v for c, v in row.items()}
    return row


def _int_eliminate(row, piv, p):
    """Return row*piv[p] - piv*row[p], content-stripped (kills column p)."""
    a = piv[p]
    b = row[p]
    out = {}
    for c, v in row.items():
        out[c] = v * a
    for c, v in piv.items():
        n = out.get(c, 0) - v * b
        if n:
            out[c] = n
        else:
            out.pop(c, None)
    return _strip_content(out)


class Gf2Subspace(Subspace):
    def __init__(self, ncols: int):
        self.ncols = ncols
        self._rows = {}  # pivot col -> int bitmask
        self._final = False

    @property
    def pivots(self):
        return sorted(self._rows)

    @property
    def rank(self):
        return len(self._rows)

    def insert(self, vec):
        if isinstance(vec, int):
            row = vec
        else:
            row = 0
            for c, v in vec.items():
                if int(v) % 2:
                    row |= 1 << c
        rows = self._rows
        while row:
            p = (row & -row).bit_length() - 1
            piv = rows.get(p)
            if piv is None:
                rows[p] = row
                self._final = False
                return True
            row ^= piv
        return False

    def finalize(self):
        if self._final:
            return
        pivots = sorted(self._rows)
        for i in range(len(pivots) - 1, -1, -1):
            p = pivots[i]
            prow = self._rows[p]
            bit = 1 << p
            for q in pivots[:i]:
                if self._rows[q] & bit:
                    self._rows[q] ^= prow
        self._final = True

    def reduce(self, vec):
        self.finalize()
        if isinstance(vec, int):
            work = vec
        else:
            work = 0
            for c, v in vec.items():
                if int(v) % 2:
                    work |= 1 << c
        for p in sorted(self._rows):
            if (work >> p) & 1:
                work ^= self._rows[p]
        out = {}
        while work:
            c = (work & -work).bit_length() - 1
            out[c] = 1
            work &= work - 1
        return out

    def rows_rref(self):
        self.finalize()
        out = []
        for p in sorted(self._rows):
            row = self._rows[p]
            cols = {}
            while row:
                c = (row & -row).bit_length() - 1
                cols[c] = 1
                row &= row - 1
            out.append(cols)
        return out


def kernel_basis(field: Field, images, ncols_image: int):
    """Kernel of the linear map sending domain basis vector i to images[i].

    images: list of sparse vectors over the codomain coordinates.
    Returns a list of sparse vectors over the domain coordinates, in RREF.
    """
    n = len(images)
    if field.char == 2:
        sub = Gf2Subspace(ncols_image + n)
        for i, img in enumerate(images):
            row = 1 << (ncols_image + i)
            for c, v in img.items():
                if int(v) % 2:
                    row |= 1 << c
            sub.insert(row)
    else:
        sub = RationalSubspace(ncols_image + n)
        for i, img in enumerate(images):
            row = dict(img)
            row[ncols_image + i] = 1
            sub.insert(row)
    sub.finalize()
    out = []
    for p, row in zip(sub.pivots, sub.rows_rref()):
        if p >= ncols_image:
            out.append({c - ncols_image: v for c, v in row.items()})
    return out


def invert_matrix(field: Field, rows):
    """Inverse of a small dense matrix (list of lists), or None if singular."""
    n = len(rows)
    aug = [[field.coerce(v) for v in row] + [field.one if i == j else field.zero
           for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if aug[r][col] != field.zero:
                pivot = r
                break
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = field.inv(aug[col][col])
        aug[col] = [field.mul(v, inv) for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != field.zero:
                f = aug[r][col]
                aug[r] = [field.sub(a, field.mul(f, b))
                          for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]
