"""Tensor product of two crystals.

The statistics combine by

    wt(b (x) b')     = wt(b) + wt(b')
    eps_i(b (x) b')  = max(eps_i(b), eps_i(b') - <h_i, wt(b)>)
    phi_i(b (x) b')  = max(phi_i(b) + <h_i, wt(b')>, phi_i(b'))

and the operators route to one side by comparing phi_i of the left factor
with eps_i of the right factor.  The placement of the strict/weak
inequalities below is load bearing; the imaginary raising rule has an
annihilation gap (result zero) between its left and right branches.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import Weight, add_weights, pairing
from .crystal import Crystal


@dataclass(frozen=True)
class TensorElement:
    """Pair of member elements; neither side is the zero element."""

    left: object
    right: object


class TensorCrystal(Crystal):
    def __init__(self, left: Crystal, right: Crystal, record_gap_events: bool = False):
        if left.datum != right.datum:
            raise ValueError("tensor factors live over different data")
        self.datum = left.datum
        self.left = left
        self.right = right
        self.record_gap_events = record_gap_events
        # Diagnostic log of (element key, index) pairs where the imaginary
        # annihilation gap fired; populated only when recording is on.
        self.gap_events: list[tuple[str, int]] = []

    def pair(self, left, right) -> TensorElement:
        return TensorElement(left, right)

    def wt(self, b: TensorElement) -> Weight:
        return add_weights(self.left.wt(b.left), self.right.wt(b.right))

    def eps(self, i: int, b: TensorElement):
        return max(self.left.eps(i, b.left), self.right.eps(i, b.right) - pairing(self.datum, i, self.left.wt(b.left)))

    def phi(self, i: int, b: TensorElement):
        return max(self.left.phi(i, b.left) + pairing(self.datum, i, self.right.wt(b.right)), self.right.phi(i, b.right))

    def f(self, i: int, b: TensorElement):
        # Lowering acts left exactly when phi(left) > eps(right), for every index.
        if self.left.phi(i, b.left) > self.right.eps(i, b.right):
            nl = self.left.f(i, b.left)
            return None if nl is None else TensorElement(nl, b.right)
        nr = self.right.f(i, b.right)
        return None if nr is None else TensorElement(b.left, nr)

    def e(self, i: int, b: TensorElement):
        ph = self.left.phi(i, b.left)
        ep = self.right.eps(i, b.right)
        if self.datum.is_real(i):
            if ph >= ep:
                nl = self.left.e(i, b.left)
                return None if nl is None else TensorElement(nl, b.right)
            nr = self.right.e(i, b.right)
            return None if nr is None else TensorElement(b.left, nr)
        aii = self.datum.a(i, i)
        if ph > ep - aii:
            nl = self.left.e(i, b.left)
            return None if nl is None else TensorElement(nl, b.right)
        if ep < ph:
            # eps(right) < phi(left) <= eps(right) - a_ii: the raising
            # operator annihilates the pair outright.
            if self.record_gap_events:
                self.gap_events.append((self.key(b), i))
            return None
        nr = self.right.e(i, b.right)
        return None if nr is None else TensorElement(b.left, nr)

    def key(self, b: TensorElement) -> str:
        return f"[{self.left.key(b.left)}]x[{self.right.key(b.right)}]"
