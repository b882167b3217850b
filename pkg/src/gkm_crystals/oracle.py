"""Graded-dimension oracle for the negative half of the quantized algebra.

The free algebra on the lowering generators is graded by the positive
root cone; its weight spaces have the words of that weight as a basis.
The defining two-sided ideal is spanned, weight by weight, by all
products u * r * v of a defining relation r with monomials u, v.  The
graded dimension at alpha is then

    #words(alpha) - rank(relation span inside the word space)

computed exactly over Z[q, q^-1] with fraction-free (Bareiss) elimination.
Every coefficient is an integer Laurent polynomial in q and every division
performed is exact; a remainder raises InexactDivisionError instead of
rounding anything.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import BorcherdsCartanDatum, Weight, weight_height
from .errors import HeightExceededError, InexactDivisionError, NegativeCoordinateError

Word = tuple[int, ...]

DEFAULT_HEIGHT_BOUND = 7


class Laurent:
    """Integer-coefficient Laurent polynomial in q, stored sparsely by exponent."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, int] | None = None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def zero(cls) -> "Laurent":
        return cls()

    @classmethod
    def one(cls) -> "Laurent":
        return cls({0: 1})

    @classmethod
    def from_int(cls, n: int) -> "Laurent":
        return cls({0: n})

    @classmethod
    def q_power(cls, e: int) -> "Laurent":
        return cls({e: 1})

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Laurent) and self.coeffs == other.coeffs

    def __add__(self, other: "Laurent") -> "Laurent":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return Laurent(out)

    def __neg__(self) -> "Laurent":
        return Laurent({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "Laurent") -> "Laurent":
        return self + (-other)

    def __mul__(self, other: "Laurent") -> "Laurent":
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return Laurent(out)

    def scale(self, n: int) -> "Laurent":
        return Laurent({e: n * c for e, c in self.coeffs.items()})

    def exact_div(self, other: "Laurent") -> "Laurent":
        """Exact quotient self / other.  Raises InexactDivisionError on a remainder."""
        if not other:
            raise InexactDivisionError("division by the zero polynomial")
        if not self:
            return Laurent.zero()
        lo_s, hi_s = min(self.coeffs), max(self.coeffs)
        lo_o, hi_o = min(other.coeffs), max(other.coeffs)
        num = [self.coeffs.get(e, 0) for e in range(lo_s, hi_s + 1)]
        den = [other.coeffs.get(e, 0) for e in range(lo_o, hi_o + 1)]
        if len(num) < len(den):
            raise InexactDivisionError("quotient would not be polynomial")
        lead = den[-1]
        quot = [0] * (len(num) - len(den) + 1)
        for k in range(len(quot) - 1, -1, -1):
            top = num[k + len(den) - 1]
            if top % lead != 0:
                raise InexactDivisionError(f"coefficient {top} not divisible by {lead}")
            q = top // lead
            quot[k] = q
            if q:
                for j, d in enumerate(den):
                    num[k + j] -= q * d
        if any(num):
            raise InexactDivisionError("nonzero remainder in exact division")
        offset = lo_s - lo_o
        return Laurent({offset + k: c for k, c in enumerate(quot)})

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = [f"{c}*q^{e}" for e, c in sorted(self.coeffs.items())]
        return " + ".join(parts)

    def sign_key(self) -> int:
        """Sign of the highest-exponent coefficient (0 for the zero polynomial)."""
        if not self.coeffs:
            return 0
        c = self.coeffs[max(self.coeffs)]
        return 1 if c > 0 else -1


def q_int(n: int) -> Laurent:
    """Balanced q-integer [n] = q^(n-1) + q^(n-3) + ... + q^(1-n)."""
    if n == 0:
        return Laurent.zero()
    if n < 0:
        return -q_int(-n)
    return Laurent({e: 1 for e in range(n - 1, -n, -2)})


def q_factorial(n: int) -> Laurent:
    out = Laurent.one()
    for k in range(1, n + 1):
        out = out * q_int(k)
    return out


def q_binomial(m: int, k: int) -> Laurent:
    """Balanced q-binomial [m choose k]; division is exact by construction."""
    if k < 0 or k > m:
        return Laurent.zero()
    return q_factorial(m).exact_div(q_factorial(k)).exact_div(q_factorial(m - k))


@dataclass(frozen=True)
class Relation:
    """Formal linear combination of words, homogeneous of the stated weight."""

    terms: tuple[tuple[Laurent, Word], ...]
    weight: Weight


def _word_weight(word: Word, n: int) -> Weight:
    alpha = [0] * n
    for i in word:
        alpha[i - 1] += 1
    return tuple(alpha)


def _relation_sign_key(terms: list[tuple[Laurent, Word]]):
    ordered = sorted(terms, key=lambda t: t[1])
    lead_sign = next((c.sign_key() for c, _ in ordered if c), 1)
    if lead_sign < 0:
        ordered = [(-c, w) for c, w in ordered]
    return tuple((w, tuple(sorted(c.coeffs.items()))) for c, w in ordered)


def build_relations(datum: BorcherdsCartanDatum) -> list[Relation]:
    """Defining relations of the lowering half.

    Quantum Serre relations for every real index and every other index,
    plus commutators for every unordered pair with pairing zero; nothing
    else.  Relations identical up to an overall sign are emitted once.
    """
    n = datum.index_count
    out: list[Relation] = []
    seen = set()

    def push(terms: list[tuple[Laurent, Word]], weight: Weight) -> None:
        key = _relation_sign_key(terms)
        if key in seen:
            return
        seen.add(key)
        out.append(Relation(tuple(terms), weight))

    for i in sorted(datum.real_indices):
        for j in range(1, n + 1):
            if j == i:
                continue
            big_n = 1 - datum.a(i, j)
            terms = []
            for k in range(big_n + 1):
                coeff = q_binomial(big_n, k)
                if k % 2 == 1:
                    coeff = -coeff
                word = (i,) * (big_n - k) + (j,) + (i,) * k
                terms.append((coeff, word))
            push(terms, _word_weight(terms[0][1], n))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if datum.a(i, j) == 0:
                terms = [(Laurent.one(), (i, j)), (-Laurent.one(), (j, i))]
                push(terms, _word_weight((i, j), n))
    return out


def words_of_weight(alpha: Weight) -> list[Word]:
    """All words with letter multiplicities alpha, in lexicographic order."""
    if any(c < 0 for c in alpha):
        raise NegativeCoordinateError(f"weight {alpha} leaves the positive cone")
    remaining = list(alpha)
    out: list[Word] = []
    word: list[int] = []

    def rec() -> None:
        if not any(remaining):
            out.append(tuple(word))
            return
        for i, left in enumerate(remaining, start=1):
            if left:
                remaining[i - 1] -= 1
                word.append(i)
                rec()
                word.pop()
                remaining[i - 1] += 1

    rec()
    return out


def laurent_rank(rows: list[list[Laurent]], ncols: int) -> int:
    """Rank over the fraction field of Z[q, q^-1] by fraction-free elimination.

    One-step Bareiss: every division by the previous pivot is exact in the
    Laurent ring, which keeps coefficient growth polynomial and exactness
    guaranteed (a remainder would raise).
    """
    work = [list(row) for row in rows]
    prev = Laurent.one()
    r = 0
    for c in range(ncols):
        if r == len(work):
            break
        pivot = next((k for k in range(r, len(work)) if work[k][c]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        piv = work[r][c]
        for k in range(r + 1, len(work)):
            if not any(work[k][j] for j in range(c, ncols)):
                continue
            lead = work[k][c]
            for j in range(ncols):
                work[k][j] = (piv * work[k][j] - lead * work[r][j]).exact_div(prev)
        prev = piv
        r += 1
    return r


def graded_dim(datum: BorcherdsCartanDatum, alpha: Weight,
               height_bound: int = DEFAULT_HEIGHT_BOUND) -> int:
    """Dimension of the weight-(-alpha) space of the lowering half.

    alpha must lie in the positive cone with height at most `height_bound`
    (exact elimination cost grows quickly past small heights).
    """
    if any(c < 0 for c in alpha):
        raise NegativeCoordinateError(f"weight {alpha} leaves the positive cone")
    if weight_height(alpha) > height_bound:
        raise HeightExceededError(f"height {weight_height(alpha)} exceeds the bound {height_bound}")
    words = words_of_weight(alpha)
    index = {w: k for k, w in enumerate(words)}
    rows: list[list[Laurent]] = []
    for rel in build_relations(datum):
        gamma = tuple(a - b for a, b in zip(alpha, rel.weight))
        if any(c < 0 for c in gamma):
            continue
        for left_weight in _subweights(gamma):
            right_weight = tuple(a - b for a, b in zip(gamma, left_weight))
            for u in words_of_weight(left_weight):
                for v in words_of_weight(right_weight):
                    row = [Laurent.zero() for _ in words]
                    for coeff, w in rel.terms:
                        row[index[u + w + v]] = row[index[u + w + v]] + coeff
                    rows.append(row)
    return len(words) - laurent_rank(rows, len(words))


def _subweights(gamma: Weight) -> list[Weight]:
    """All beta with 0 <= beta <= gamma componentwise, lexicographic order."""
    out: list[Weight] = [()]
    for c in gamma:
        out = [beta + (k,) for beta in out for k in range(c + 1)]
    return out
