"""Small exact linear algebra over the rationals.

Matrices carry explicit shapes so zero-dimensional edge cases stay well
defined.  Subspaces are lists of row vectors; the reduced row echelon
basis is the canonical form throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction as Q

Vec = tuple[Q, ...]


@dataclass(frozen=True)
class RatMat:
    nrows: int
    ncols: int
    entries: tuple[Vec, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.nrows or any(len(r) != self.ncols for r in self.entries):
            raise ValueError("entry grid does not match the declared shape")

    @classmethod
    def from_rows(cls, rows, nrows: int | None = None, ncols: int | None = None) -> "RatMat":
        ent = tuple(tuple(Q(x) for x in row) for row in rows)
        r = len(ent) if nrows is None else nrows
        c = (len(ent[0]) if ent else 0) if ncols is None else ncols
        return cls(r, c, ent)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RatMat":
        return cls(nrows, ncols, tuple(tuple(Q(0) for _ in range(ncols)) for _ in range(nrows)))

    @classmethod
    def identity(cls, n: int) -> "RatMat":
        return cls(n, n, tuple(tuple(Q(1 if i == j else 0) for j in range(n)) for i in range(n)))

    def __add__(self, other: "RatMat") -> "RatMat":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch in addition")
        return RatMat(self.nrows, self.ncols,
                      tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.entries, other.entries)))

    def __neg__(self) -> "RatMat":
        return self.scale(Q(-1))

    def __sub__(self, other: "RatMat") -> "RatMat":
        return self + (-other)

    def scale(self, c) -> "RatMat":
        c = Q(c)
        return RatMat(self.nrows, self.ncols, tuple(tuple(c * a for a in r) for r in self.entries))

    def __matmul__(self, other: "RatMat") -> "RatMat":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch in product: {self.ncols} vs {other.nrows}")
        cols = list(zip(*other.entries)) if other.nrows else [()] * other.ncols
        out = tuple(
            tuple(sum((a * b for a, b in zip(row, col)), Q(0)) for col in cols)
            for row in self.entries
        )
        return RatMat(self.nrows, other.ncols, out)

    def transpose(self) -> "RatMat":
        ent = tuple(tuple(self.entries[r][c] for r in range(self.nrows)) for c in range(self.ncols))
        return RatMat(self.ncols, self.nrows, ent)

    def trace(self) -> Q:
        if self.nrows != self.ncols:
            raise ValueError("trace of a non-square matrix")
        return sum((self.entries[i][i] for i in range(self.nrows)), Q(0))

    def apply_rows(self, rows) -> list[Vec]:
        """Apply the operator to row vectors: column convention, v -> (M v^T)^T."""
        return [tuple(sum((self.entries[r][c] * v[c] for c in range(self.ncols)), Q(0))
                      for r in range(self.nrows)) for v in rows]

    def is_zero(self) -> bool:
        return all(a == 0 for r in self.entries for a in r)


def rref(rows, width: int):
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    mat = [list(map(Q, r)) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(width):
        if r == len(mat):
            break
        pivot = next((k for k in range(r, len(mat)) if mat[k][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = Q(1) / mat[r][c]
        mat[r] = [inv * a for a in mat[r]]
        for k in range(len(mat)):
            if k != r and mat[k][c] != 0:
                factor = mat[k][c]
                mat[k] = [a - factor * b for a, b in zip(mat[k], mat[r])]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in mat[:r]], pivots


def row_space(rows, width: int) -> list[Vec]:
    basis, _ = rref(rows, width)
    return basis


def rank_rows(rows, width: int) -> int:
    return len(row_space(rows, width))


def in_span(basis, v, width: int) -> bool:
    return rank_rows(list(basis) + [tuple(map(Q, v))], width) == len(basis)


def nullspace(m: RatMat) -> list[Vec]:
    """Canonical basis of {x : m @ x = 0} (column-vector kernel, returned as rows)."""
    basis, pivots = rref(m.entries, m.ncols)
    free = [c for c in range(m.ncols) if c not in pivots]
    out: list[Vec] = []
    for fc in free:
        v = [Q(0)] * m.ncols
        v[fc] = Q(1)
        for r, pc in enumerate(pivots):
            v[pc] = -basis[r][fc]
        out.append(tuple(v))
    return out


def solve_in_basis(basis, v, width: int):
    """Coefficients c with sum c_k basis_k = v, or None when v is outside the span."""
    v = tuple(map(Q, v))
    if not basis:
        return [] if all(a == 0 for a in v) else None
    aug_rows = [tuple(basis[k][c] for k in range(len(basis))) + (v[c],) for c in range(width)]
    red, pivots = rref(aug_rows, len(basis) + 1)
    if len(basis) in pivots:
        return None
    coeffs = [Q(0)] * len(basis)
    for r, pc in enumerate(pivots):
        coeffs[pc] = red[r][len(basis)]
    return coeffs


def charpoly(m: RatMat) -> list[Q]:
    """Monic characteristic polynomial, highest degree first (Faddeev-LeVerrier)."""
    n = m.nrows
    if n != m.ncols:
        raise ValueError("characteristic polynomial of a non-square matrix")
    coeffs = [Q(1)]
    mk = RatMat.identity(n)
    for k in range(1, n + 1):
        mk = m @ mk
        ck = -mk.trace() / k
        coeffs.append(ck)
        mk = mk + RatMat.identity(n).scale(ck)
    return coeffs


def poly_eval(p, x) -> Q:
    acc = Q(0)
    for c in p:
        acc = acc * x + c
    return acc


def poly_deriv(p) -> list[Q]:
    n = len(p) - 1
    return [c * (n - k) for k, c in enumerate(p[:-1])]


def _poly_norm(p) -> list[Q]:
    k = next((i for i, c in enumerate(p) if c != 0), None)
    if k is None:
        return []
    lead = p[k]
    return [c / lead for c in p[k:]]


def _poly_mod(a, b) -> list[Q]:
    # b monic and nonzero
    a = list(a)
    while len(a) >= len(b):
        factor = a[0]
        if factor != 0:
            for i in range(1, len(b)):
                a[i] -= factor * b[i]
        a = a[1:]
    return a


def poly_gcd(a, b) -> list[Q]:
    """Monic gcd, highest degree first; the zero polynomial is []."""
    a, b = _poly_norm(a), _poly_norm(b)
    while b:
        r = _poly_mod(a, b) if len(a) >= len(b) else a
        a, b = b, _poly_norm(r)
    return a


def is_squarefree(p) -> bool:
    if len(p) <= 2:
        return True
    return len(poly_gcd(p, poly_deriv(p))) <= 1


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = set()
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.add(d)
            out.add(n // d)
        d += 1
    return sorted(out)


def rational_roots(p) -> list[Q]:
    """All rational roots of a nonzero polynomial, sorted, without multiplicity."""
    p = [Q(c) for c in p]
    k = next((i for i, c in enumerate(p) if c != 0), None)
    if k is None:
        raise ValueError("zero polynomial")
    p = p[k:]
    roots: set[Q] = set()
    while len(p) > 1 and p[-1] == 0:
        roots.add(Q(0))
        p = p[:-1]
    if len(p) == 1:
        return sorted(roots)
    denom = 1
    for c in p:
        denom = denom * c.denominator // math.gcd(denom, c.denominator)
    ints = [int(c * denom) for c in p]
    for num in _divisors(ints[-1]):
        for den in _divisors(ints[0]):
            for s in (1, -1):
                cand = Q(s * num, den)
                if poly_eval(p, cand) == 0:
                    roots.add(cand)
    return sorted(roots)
