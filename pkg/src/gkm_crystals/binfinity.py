"""Coordinate-string realization of the highest-weight crystal B(inf).

An element is a finite string of nonnegative coordinates (a_1, ..., a_L)
read along a fixed recurring index sequence iota = (i_1, i_2, ...); it
stands for the product

    head (x) b_{i_L}(-a_L) (x) ... (x) b_{i_2}(-a_2) (x) b_{i_1}(-a_1)

where the head is a formal highest-weight element with weight zero and
eps_i = phi_i = 0 for every index.  Strings are canonical: the last
coordinate is nonzero (the empty string is the highest-weight element).

Operators are evaluated by the binary tensor routing rule, folded across
the product from the outermost factor inward.  Before operating at index
i the string is extended by zero coordinates up to the first i-slot lying
head-side of every stored coordinate; with that extension the lowering
operator always lands on a factor, never on the head, so f_i is total
and the realization is closed under it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import BorcherdsCartanDatum, Weight, pairing
from .crystal import NEG_INF, Crystal, reachable
from .elementary import ElementaryCrystal, ElementaryElement
from .errors import InternalInconsistencyError, StrippingStuckError
from .tensor import TensorCrystal, TensorElement


@dataclass(frozen=True)
class IotaSequence:
    """Infinite index sequence realized by repeating a finite period.

    Every index of the datum must occur in the period; any window of
    `len(period)` consecutive positions then contains every index, so the
    period length doubles as the recurrence bound.
    """

    period: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.period:
            raise ValueError("empty iota period")
        if any((not isinstance(i, int)) or i < 1 for i in self.period):
            raise ValueError(f"bad iota period {self.period}")

    @classmethod
    def cyclic(cls, n: int) -> "IotaSequence":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_spec(cls, spec, n: int) -> "IotaSequence":
        """Accept "cyclic" or an explicit period list and validate coverage."""
        if spec == "cyclic" or spec is None:
            seq = cls.cyclic(n)
        elif isinstance(spec, (list, tuple)):
            seq = cls(tuple(int(v) for v in spec))
        else:
            raise ValueError(f"bad iota spec {spec!r}")
        seq.validate_for(n)
        return seq

    def validate_for(self, n: int) -> None:
        if set(self.period) != set(range(1, n + 1)):
            raise ValueError(f"iota period {self.period} does not cover indices 1..{n} exactly")

    def index_at(self, position: int) -> int:
        """Index at 1-based position."""
        return self.period[(position - 1) % len(self.period)]

    def first_slot(self, index: int, after: int) -> int:
        """Smallest position > after carrying `index`."""
        for m in range(after + 1, after + len(self.period) + 1):
            if self.index_at(m) == index:
                return m
        raise ValueError(f"index {index} does not occur in iota period {self.period}")

    def i_first(self, index: int) -> "IotaSequence":
        """A sequence starting with `index` (used to read off starred statistics)."""
        return IotaSequence((index,) + self.period)

    def shifted(self) -> "IotaSequence":
        """The sequence with its first position dropped (period rotated left)."""
        return IotaSequence(self.period[1:] + self.period[:1])


@dataclass(frozen=True)
class BInfElement:
    """Canonical coordinate string over a fixed iota sequence."""

    iota: IotaSequence
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(a < 0 for a in self.entries):
            raise ValueError(f"negative coordinate in {self.entries}")
        if self.entries and self.entries[-1] == 0:
            raise ValueError(f"trailing zero coordinate in {self.entries}; string is not canonical")


class BInfinityCrystal(Crystal):
    """B(inf) realized on coordinate strings along a fixed iota sequence."""

    def __init__(self, datum: BorcherdsCartanDatum, iota: IotaSequence | None = None,
                 record_gap_events: bool = False):
        self.datum = datum
        self.iota = iota if iota is not None else IotaSequence.cyclic(datum.index_count)
        self.iota.validate_for(datum.index_count)
        self.record_gap_events = record_gap_events
        # Diagnostic log of (element key, index) pairs where the imaginary
        # annihilation gap fired during a raising descent.
        self.gap_events: list[tuple[str, int]] = []

    # -- elements ---------------------------------------------------------

    def highest_weight(self) -> BInfElement:
        return BInfElement(self.iota, ())

    def _own(self, b: BInfElement) -> None:
        if b.iota != self.iota:
            raise ValueError("element belongs to a realization with a different iota sequence")

    def _canonical(self, entries: list[int]) -> BInfElement:
        while entries and entries[-1] == 0:
            entries.pop()
        return BInfElement(self.iota, tuple(entries))

    def key(self, b: BInfElement) -> str:
        return "-".join(map(str, b.entries)) if b.entries else "hw"

    # -- statistics -------------------------------------------------------

    def wt(self, b: BInfElement) -> Weight:
        self._own(b)
        coords = [0] * self.datum.index_count
        for pos, a in enumerate(b.entries, start=1):
            coords[self.iota.index_at(pos) - 1] -= a
        return tuple(coords)

    def _factor_stats(self, i: int, position: int, level: int):
        """(eps_i, phi_i, <h_i, wt>) of the elementary factor at one position."""
        j = self.iota.index_at(position)
        wti = -level * self.datum.a(i, j)
        if j != i:
            return NEG_INF, NEG_INF, wti
        if self.datum.is_real(i):
            return level, -level, wti
        return 0, -level * self.datum.a(i, i), wti

    def _prefix_arrays(self, i: int, entries: list[int]):
        """Tensor statistics of every head-side prefix.

        Position k of each returned array holds the statistic of the
        partial product consisting of the head together with the factors
        at positions k, k+1, ..., L; slot L+1 is the bare head.
        """
        L = len(entries)
        eps_pre = [0] * (L + 2)
        phi_pre = [0] * (L + 2)
        wti_pre = [0] * (L + 2)
        for k in range(L, 0, -1):
            ef, pf, wf = self._factor_stats(i, k, entries[k - 1])
            eps_pre[k] = max(eps_pre[k + 1], ef - wti_pre[k + 1])
            phi_pre[k] = max(phi_pre[k + 1] + wf, pf)
            wti_pre[k] = wti_pre[k + 1] + wf
        return eps_pre, phi_pre, wti_pre

    def eps(self, i: int, b: BInfElement):
        self._own(b)
        self.datum.check_index(i)
        entries = list(b.entries)
        eps_pre, phi_pre, wti_pre = self._prefix_arrays(i, entries)
        val = eps_pre[1]
        if phi_pre[1] != val + wti_pre[1]:
            raise InternalInconsistencyError(
                f"tensor statistics break phi = eps + <h_i,wt> at {self.key(b)}, index {i}"
            )
        if not self.datum.is_real(i):
            if val != 0:
                raise InternalInconsistencyError(
                    f"imaginary eps_{i} = {val} != 0 at {self.key(b)}"
                )
            return 0
        # Real index: the tensor value must equal the raising string length.
        steps = 0
        x = b
        while steps <= val:
            y = self.e(i, x)
            if y is None:
                break
            x = y
            steps += 1
        if steps != val:
            raise InternalInconsistencyError(
                f"real eps_{i} = {val} but the raising string at {self.key(b)} has length {steps}"
            )
        return val

    def phi(self, i: int, b: BInfElement):
        return self.eps(i, b) + pairing(self.datum, i, self.wt(b))

    # -- operators --------------------------------------------------------

    def _extended(self, i: int, b: BInfElement) -> list[int]:
        """Entries padded with zeros up to the first free i-slot beyond the string."""
        entries = list(b.entries)
        target = self.iota.first_slot(i, after=len(entries))
        entries.extend([0] * (target - len(entries)))
        return entries

    def f(self, i: int, b: BInfElement) -> BInfElement:
        """Lowering operator; total on this realization (never zero)."""
        self._own(b)
        self.datum.check_index(i)
        entries = self._extended(i, b)
        _, phi_pre, _ = self._prefix_arrays(i, entries)
        for m in range(1, len(entries) + 1):
            ef, _, _ = self._factor_stats(i, m, entries[m - 1])
            if phi_pre[m + 1] > ef:
                continue  # the action routes further head-side
            entries[m - 1] += 1
            return self._canonical(entries)
        raise InternalInconsistencyError("lowering descent reached the head despite slot extension")

    def e(self, i: int, b: BInfElement):
        """Raising operator; None when it annihilates."""
        self._own(b)
        self.datum.check_index(i)
        entries = self._extended(i, b)
        _, phi_pre, _ = self._prefix_arrays(i, entries)
        real = self.datum.is_real(i)
        aii = self.datum.a(i, i)
        for m in range(1, len(entries) + 1):
            ef, _, _ = self._factor_stats(i, m, entries[m - 1])
            ph = phi_pre[m + 1]
            if real:
                if ph >= ef:
                    continue
            else:
                if ph > ef - aii:
                    continue
                if ef < ph:
                    # eps < phi <= eps - a_ii: annihilation gap.
                    if self.record_gap_events:
                        self.gap_events.append((self.key(b), i))
                    return None
            if entries[m - 1] == 0:
                return None  # raising a level-0 factor vanishes
            entries[m - 1] -= 1
            return self._canonical(entries)
        return None  # descent reached the head; raising the head vanishes

    # -- transport between realizations ------------------------------------

    def realization_with(self, iota: IotaSequence) -> "BInfinityCrystal":
        other = BInfinityCrystal(self.datum, iota, record_gap_events=self.record_gap_events)
        other.gap_events = self.gap_events  # share the diagnostic log
        return other

    def strip_to_head(self, b: BInfElement) -> list[int]:
        """Raising word (first applied index first) taking b to the head."""
        self._own(b)
        word: list[int] = []
        x = b
        bound = -sum(self.wt(b)) + 1
        while x.entries:
            if len(word) > bound:
                raise InternalInconsistencyError("raising word exceeds the weight height")
            for j in range(1, self.datum.index_count + 1):
                y = self.e(j, x)
                if y is not None:
                    word.append(j)
                    x = y
                    break
            else:
                raise StrippingStuckError(f"every raising operator vanishes at {self.key(x)}")
        return word

    def transport(self, b: BInfElement, target: "BInfinityCrystal") -> BInfElement:
        """Image of b under the canonical isomorphism onto another realization.

        Strips b to the head, then replays the recorded lowering word in
        the target realization (in reverse application order).
        """
        self._own(b)
        if target.datum != self.datum:
            raise ValueError("target realization lives over a different datum")
        word = self.strip_to_head(b)
        z = target.highest_weight()
        for j in reversed(word):
            z = target.f(j, z)
        return z

    def eps_star(self, b: BInfElement, i: int) -> int:
        """Starred statistic: the outermost coordinate after moving to an i-first iota."""
        self.datum.check_index(i)
        first = self.realization_with(self.iota.i_first(i))
        t = self.transport(b, first)
        return t.entries[0] if t.entries else 0

    def psi_embed(self, b: BInfElement, i: int) -> tuple[BInfElement, ElementaryElement]:
        """Strict embedding into (this realization) (x) (elementary crystal at i).

        Returns (residual, b_i(-c)) with c = eps_star(b, i); the residual is
        b with c outermost i-lowerings unwound, expressed back over this
        realization's iota.
        """
        self.datum.check_index(i)
        first = self.realization_with(self.iota.i_first(i))
        t = self.transport(b, first)
        c = t.entries[0] if t.entries else 0
        rest = t.entries[1:]
        shifted = first.realization_with(first.iota.shifted())
        residual = BInfElement(shifted.iota, rest)
        back = shifted.transport(residual, self)
        return back, ElementaryElement(i, c)

    def psi_morphism(self, i: int):
        """(psi, target) pair for strict-morphism checking of psi_embed at index i."""
        target = TensorCrystal(self, ElementaryCrystal(self.datum, i),
                               record_gap_events=self.record_gap_events)
        target.gap_events = self.gap_events

        def psi(b: BInfElement) -> TensorElement:
            left, right = self.psi_embed(b, i)
            return TensorElement(left, right)

        return psi, target

    def enumerate_to_depth(self, depth: int, cap: int = 10000):
        """Reachable elements, edges and layer sizes below the highest weight."""
        return reachable(self, self.highest_weight(), depth, cap)


def graded_counts(crystal: BInfinityCrystal, depth: int, cap: int = 10000) -> dict[Weight, int]:
    """Number of crystal elements at each weight -alpha, keyed by alpha, ht(alpha) <= depth."""
    elements, _, _ = crystal.enumerate_to_depth(depth, cap)
    counts: dict[Weight, int] = {}
    for b in elements:
        alpha = tuple(-c for c in crystal.wt(b))
        counts[alpha] = counts.get(alpha, 0) + 1
    return counts


def transport_isomorphism_findings(src: BInfinityCrystal, dst: BInfinityCrystal,
                                   depth: int, cap: int = 10000) -> list[str]:
    """Check that transport is an isomorphism of labeled graphs up to `depth`.

    Returns human-readable findings; empty means the depth-truncated graphs
    match node for node (with statistics) and edge for edge.
    """
    findings: list[str] = []
    src_elems, src_edges, _ = src.enumerate_to_depth(depth, cap)
    dst_elems, dst_edges, _ = dst.enumerate_to_depth(depth, cap)
    mapped: dict[str, str] = {}
    images: dict[str, BInfElement] = {}
    for b in src_elems:
        t = src.transport(b, dst)
        mapped[src.key(b)] = dst.key(t)
        images[src.key(b)] = t
    if len(set(mapped.values())) != len(mapped):
        findings.append("transport is not injective on the enumerated nodes")
    dst_keys = {dst.key(b) for b in dst_elems}
    extra = sorted(set(mapped.values()) - dst_keys)
    missing = sorted(dst_keys - set(mapped.values()))
    if extra:
        findings.append(f"transport images outside the target enumeration: {extra[:3]}")
    if missing:
        findings.append(f"target nodes never hit by transport: {missing[:3]}")
    n = src.datum.index_count
    for b in src_elems:
        t = images[src.key(b)]
        if src.wt(b) != dst.wt(t):
            findings.append(f"weight changes under transport at {src.key(b)}")
        for i in range(1, n + 1):
            if src.eps(i, b) != dst.eps(i, t) or src.phi(i, b) != dst.phi(i, t):
                findings.append(f"statistics change under transport at {src.key(b)}, index {i}")
    dst_edge_set = set(dst_edges)
    for s, d, i in src_edges:
        if d not in mapped:
            continue  # edge leaves the depth window
        if (mapped[s], mapped[d], i) not in dst_edge_set:
            findings.append(f"edge ({s} -{i}-> {d}) has no transported counterpart")
    return findings
