"""Elementary one-index crystal: the chain b_i(0), b_i(-1), b_i(-2), ...

Only the operators at its own index act; every other index has both
statistics equal to -infinity and both operators zero.  The statistic
shapes differ between real and imaginary indices:

    real i:       eps_i(b_i(-n)) = n,  phi_i(b_i(-n)) = -n
    imaginary i:  eps_i(b_i(-n)) = 0,  phi_i(b_i(-n)) = -n * a_ii
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import BorcherdsCartanDatum, Weight
from .crystal import NEG_INF, Crystal


@dataclass(frozen=True)
class ElementaryElement:
    """b_index(-level) with level >= 0."""

    index: int
    level: int

    def __post_init__(self) -> None:
        if self.level < 0:
            raise ValueError(f"negative level {self.level}")


class ElementaryCrystal(Crystal):
    def __init__(self, datum: BorcherdsCartanDatum, index: int):
        datum.check_index(index)
        self.datum = datum
        self.index = index

    def element(self, level: int) -> ElementaryElement:
        return ElementaryElement(self.index, level)

    def _own(self, b: ElementaryElement) -> bool:
        if b.index != self.index:
            raise ValueError(f"element of index {b.index} fed to the index-{self.index} crystal")
        return True

    def wt(self, b: ElementaryElement) -> Weight:
        self._own(b)
        n = self.datum.index_count
        return tuple(-b.level if k == self.index - 1 else 0 for k in range(n))

    def eps(self, i: int, b: ElementaryElement):
        self._own(b)
        self.datum.check_index(i)
        if i != self.index:
            return NEG_INF
        return b.level if self.datum.is_real(i) else 0

    def phi(self, i: int, b: ElementaryElement):
        self._own(b)
        self.datum.check_index(i)
        if i != self.index:
            return NEG_INF
        if self.datum.is_real(i):
            return -b.level
        return -b.level * self.datum.a(i, i)

    def e(self, i: int, b: ElementaryElement):
        self._own(b)
        self.datum.check_index(i)
        if i != self.index or b.level == 0:
            return None
        return ElementaryElement(self.index, b.level - 1)

    def f(self, i: int, b: ElementaryElement):
        self._own(b)
        self.datum.check_index(i)
        if i != self.index:
            return None
        return ElementaryElement(self.index, b.level + 1)

    def key(self, b: ElementaryElement) -> str:
        return f"b{b.index}({-b.level})"
