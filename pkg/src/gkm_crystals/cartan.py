"""Borcherds-Cartan data, root-lattice weights, and quivers with edge loops.

A Borcherds-Cartan matrix here is symmetric, integral, with even diagonal
entries at most 2 and nonpositive off-diagonal entries.  Indices with
diagonal 2 are called real, the rest (diagonal 0, -2, -4, ...) imaginary.
Weights live in the root lattice and are stored as integer coordinate
tuples against the simple roots alpha_1 .. alpha_n.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    BadDiagonalError,
    IndexOutOfRangeError,
    InputError,
    LengthMismatchError,
    NegativeCoordinateError,
    NotSymmetricError,
    PositiveOffDiagonalError,
)

Weight = tuple[int, ...]


def zero_weight(n: int) -> Weight:
    return (0,) * n


def simple_root(n: int, i: int) -> Weight:
    """Coordinate vector of alpha_i (1-based index)."""
    if not 1 <= i <= n:
        raise IndexOutOfRangeError(f"index {i} not in 1..{n}")
    return tuple(1 if k == i - 1 else 0 for k in range(n))


def add_weights(u: Weight, v: Weight) -> Weight:
    if len(u) != len(v):
        raise LengthMismatchError(f"weight lengths {len(u)} and {len(v)} differ")
    return tuple(a + b for a, b in zip(u, v))


def negate_weight(u: Weight) -> Weight:
    return tuple(-a for a in u)


def weight_height(u: Weight) -> int:
    return sum(u)


def in_positive_cone(u: Weight) -> bool:
    return all(a >= 0 for a in u)


@dataclass(frozen=True)
class BorcherdsCartanDatum:
    """Validated symmetric even Borcherds-Cartan matrix with its index split."""

    matrix: tuple[tuple[int, ...], ...]
    real_indices: frozenset[int]
    imaginary_indices: frozenset[int]

    @property
    def index_count(self) -> int:
        return len(self.matrix)

    def check_index(self, i: int) -> None:
        if not 1 <= i <= self.index_count:
            raise IndexOutOfRangeError(f"index {i} not in 1..{self.index_count}")

    def a(self, i: int, j: int) -> int:
        self.check_index(i)
        self.check_index(j)
        return self.matrix[i - 1][j - 1]

    def is_real(self, i: int) -> bool:
        self.check_index(i)
        return i in self.real_indices


def validate_datum(matrix) -> BorcherdsCartanDatum:
    """Validate a raw square matrix and classify its indices.

    Raises NotSymmetricError, BadDiagonalError or PositiveOffDiagonalError
    on the first violated condition.
    """
    rows = [tuple(row) for row in matrix]
    n = len(rows)
    if n == 0:
        raise InputError("empty matrix")
    for row in rows:
        if len(row) != n:
            raise NotSymmetricError("matrix is not square")
        for entry in row:
            if not isinstance(entry, int) or isinstance(entry, bool):
                raise InputError(f"matrix entry {entry!r} is not an integer")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise NotSymmetricError(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) differ")
    for i in range(n):
        d = rows[i][i]
        if d > 2 or d % 2 != 0:
            raise BadDiagonalError(f"diagonal entry a_{i + 1}{i + 1} = {d} is not in {{2, 0, -2, -4, ...}}")
    for i in range(n):
        for j in range(n):
            if i != j and rows[i][j] > 0:
                raise PositiveOffDiagonalError(f"off-diagonal entry a_{i + 1}{j + 1} = {rows[i][j]} is positive")
    real = frozenset(i + 1 for i in range(n) if rows[i][i] == 2)
    imaginary = frozenset(i + 1 for i in range(n) if rows[i][i] != 2)
    return BorcherdsCartanDatum(tuple(rows), real, imaginary)


def pairing(datum: BorcherdsCartanDatum, i: int, w: Weight) -> int:
    """<h_i, w> for w in root-lattice coordinates: sum_j w_j * a_ij."""
    datum.check_index(i)
    if len(w) != datum.index_count:
        raise LengthMismatchError(f"weight length {len(w)} != rank {datum.index_count}")
    row = datum.matrix[i - 1]
    return sum(c * a for c, a in zip(w, row))


def bilinear_form(datum: BorcherdsCartanDatum, u: Weight, v: Weight) -> int:
    """Symmetric form (u, v) = sum_ij u_i a_ij v_j on the root lattice."""
    n = datum.index_count
    if len(u) != n or len(v) != n:
        raise LengthMismatchError("weight length does not match the matrix rank")
    return sum(u[i] * datum.matrix[i][j] * v[j] for i in range(n) for j in range(n))


def dim_x(datum: BorcherdsCartanDatum, alpha: Weight) -> int:
    """Dimension ((2*Id - A)alpha, alpha) of the arrow space at dimension vector alpha.

    alpha must lie in the positive cone of the root lattice.
    """
    n = datum.index_count
    if len(alpha) != n:
        raise LengthMismatchError("dimension vector length does not match the matrix rank")
    if not in_positive_cone(alpha):
        raise NegativeCoordinateError(f"dimension vector {alpha} has a negative coordinate")
    two_id_minus_a = tuple(
        tuple((2 if i == j else 0) - datum.matrix[i][j] for j in range(n)) for i in range(n)
    )
    image = tuple(sum(two_id_minus_a[i][j] * alpha[j] for j in range(n)) for i in range(n))
    return sum(image[i] * alpha[i] for i in range(n))


@dataclass(frozen=True)
class Arrow:
    source: int
    target: int
    in_omega: bool


@dataclass(frozen=True)
class Quiver:
    """Doubled quiver: arrow set H with a fixed-point-free reversing involution.

    `involution[k]` is the position of the partner of `arrows[k]`; partners
    reverse direction and exactly one of each pair lies in the orientation
    Omega.  Vertices are 1-based.
    """

    vertex_count: int
    arrows: tuple[Arrow, ...]
    involution: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise InputError("quiver needs at least one vertex")
        for a in self.arrows:
            for v in (a.source, a.target):
                if not 1 <= v <= self.vertex_count:
                    raise IndexOutOfRangeError(f"vertex {v} not in 1..{self.vertex_count}")
        if len(self.involution) != len(self.arrows):
            raise InputError("involution length does not match the arrow count")
        for k, p in enumerate(self.involution):
            if not 0 <= p < len(self.arrows):
                raise InputError(f"involution value {p} out of range")
            if p == k:
                raise InputError(f"involution fixes arrow {k}")
            if self.involution[p] != k:
                raise InputError(f"involution is not an involution at arrow {k}")
            a, b = self.arrows[k], self.arrows[p]
            if (a.source, a.target) != (b.target, b.source):
                raise InputError(f"partner of arrow {k} does not reverse it")
            if a.in_omega == b.in_omega:
                raise InputError(f"arrows {k} and {p} are paired within one orientation")

    @classmethod
    def from_omega_arrows(cls, vertex_count: int, pairs) -> "Quiver":
        """Build H from the Omega arrows; each reversed copy lands in Omega-bar."""
        omega = [Arrow(int(s), int(t), True) for s, t in pairs]
        bar = [Arrow(a.target, a.source, False) for a in omega]
        m = len(omega)
        involution = tuple(list(range(m, 2 * m)) + list(range(m)))
        return cls(vertex_count, tuple(omega + bar), involution)

    def partner(self, k: int) -> int:
        return self.involution[k]

    def loop_positions(self) -> tuple[int, ...]:
        return tuple(k for k, a in enumerate(self.arrows) if a.source == a.target)

    def weak_positions(self) -> tuple[int, ...]:
        """Omega-bar loops: the arrows allowed to act within flag steps."""
        return tuple(k for k, a in enumerate(self.arrows) if a.source == a.target and not a.in_omega)

    def arrow_count(self, i: int, j: int) -> int:
        return sum(1 for a in self.arrows if a.source == i and a.target == j)


def quiver_to_cartan(q: Quiver) -> BorcherdsCartanDatum:
    """a_ii = 2 - (arrows i->i in H), a_ij = -(arrows i->j in H)."""
    n = q.vertex_count
    matrix = [
        [
            (2 - q.arrow_count(i, i)) if i == j else -q.arrow_count(i, j)
            for j in range(1, n + 1)
        ]
        for i in range(1, n + 1)
    ]
    return validate_datum(matrix)


def _loaded_dict(source) -> dict:
    if isinstance(source, dict):
        return source
    try:
        data = json.loads(source)
    except (TypeError, ValueError) as exc:
        raise InputError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError("top-level JSON value must be an object")
    return data


def load_cartan(source) -> BorcherdsCartanDatum:
    """Parse {"matrix": [[int, ...], ...]} from a JSON string or dict."""
    data = _loaded_dict(source)
    if "matrix" not in data:
        raise InputError('missing "matrix" key')
    matrix = data["matrix"]
    if not isinstance(matrix, list) or not all(isinstance(r, list) for r in matrix):
        raise InputError('"matrix" must be a list of rows')
    return validate_datum(matrix)


def load_quiver(source) -> Quiver:
    """Parse {"vertices": n, "omega_arrows": [[src, dst], ...]} from JSON or dict."""
    data = _loaded_dict(source)
    for key in ("vertices", "omega_arrows"):
        if key not in data:
            raise InputError(f'missing "{key}" key')
    vertices = data["vertices"]
    if not isinstance(vertices, int) or isinstance(vertices, bool) or vertices < 1:
        raise InputError('"vertices" must be a positive integer')
    pairs = data["omega_arrows"]
    if not isinstance(pairs, list):
        raise InputError('"omega_arrows" must be a list')
    cleaned = []
    for p in pairs:
        if not isinstance(p, list) or len(p) != 2 or not all(isinstance(v, int) for v in p):
            raise InputError(f"bad arrow entry {p!r}; expected [source, target]")
        cleaned.append((p[0], p[1]))
    return Quiver.from_omega_arrows(vertices, cleaned)
