"""Buchberger completion specialized to pure-difference binomials.

Every polynomial handled here is either a difference of two monomials with
implicit coefficients +1/-1, or a bare monomial (these arise when an ideal is
cut down by sending variables to zero; a toric ideal itself never contains
one). S-pairs and normal forms of such elements stay in the same class, so
the whole computation is monomial rewriting: no coefficient arithmetic ever
happens.

For speed the engine packs exponent vectors into single integers, sixteen
bits per variable, so the divisibility test and the rewrite step that
dominate a completion each cost a couple of big-int operations. Pair
bookkeeping uses the Gebauer-Moeller refinements of Buchberger's coprime and
chain criteria; pairs are processed in ascending lcm degree (normal
selection).
"""

from __future__ import annotations

import heapq
from bisect import insort
from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import (
    ZERO,
    AlgebraError,
    Binomial,
    Monomial,
    MonomialOrder,
    VariableSet,
    grevlex_extended,
)

__all__ = [
    "Limits",
    "DEFAULT_LIMITS",
    "ResourceGuardError",
    "EngineDiagnostic",
    "GroebnerBasis",
    "IncrementalBasis",
    "buchberger",
    "spair",
    "normal_form",
    "is_groebner",
    "homogenize",
    "contains",
    "quotient_images",
    "gb_to_json",
]


@dataclass(frozen=True)
class Limits:
    """Resource guards; completion aborts loudly instead of hanging."""

    max_basis: int = 50_000
    max_reductions: int = 10_000_000
    max_layers: int = 256
    max_standard_monomials: int = 2_000_000


DEFAULT_LIMITS = Limits()


class ResourceGuardError(RuntimeError):
    """A configured resource bound was exceeded."""


class EngineDiagnostic(RuntimeError):
    """Structurally corrupt input reached the engine."""


_FIELD = 16
_HALF = 1 << 15


def _divides_t(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


class _Packing:
    """Fixed-width packing of exponent vectors into one integer."""

    __slots__ = ("n", "shifts", "guard")

    def __init__(self, n: int):
        self.n = n
        self.shifts = tuple(_FIELD * i for i in range(n))
        self.guard = sum(1 << (s + 15) for s in self.shifts)

    def pack(self, exps) -> int:
        v = 0
        for e, s in zip(exps, self.shifts):
            v |= e << s
        return v

    def unpack(self, packed: int) -> tuple:
        return tuple((packed >> s) & (_HALF - 1) for s in self.shifts)


class _Completion:
    """Incremental Buchberger state over packed exponent vectors.

    Elements are stored as parallel arrays; a ``None`` trail marks a monomial
    member. ``scan`` keeps element indices sorted by lead degree so divisor
    searches can stop early.
    """

    def __init__(self, order: MonomialOrder, limits: Limits, track_pairs: bool = True):
        self.order = order
        self.limits = limits
        self.track_pairs = track_pairs
        self.pk = _Packing(len(order.variables))
        self.lead_p: list[int] = []
        self.lead_t: list[tuple] = []
        self.lead_deg: list[int] = []
        self.lead_mask: list[int] = []
        self.trail_p: list[int | None] = []
        self.trail_t: list[tuple | None] = []
        self.delta_deg: list[int] = []
        self.scan: list[tuple[int, int]] = []  # (lead degree, element index)
        self.pairs: set[tuple[int, int]] = set()
        self.heap: list = []
        self.reductions = 0

    # -- element bookkeeping ------------------------------------------------

    def ingest(self, gens: Iterable) -> None:
        """Add Binomial/Monomial generators, re-orienting under this order."""
        key = self.order.key_exps
        for g in gens:
            if g is ZERO:
                continue
            if isinstance(g, Monomial):
                self._add(g.exps, None)
            elif isinstance(g, Binomial):
                ku, kv = key(g.lead.exps), key(g.trail.exps)
                if ku == kv:
                    continue
                if ku > kv:
                    self._add(g.lead.exps, g.trail.exps)
                else:
                    self._add(g.trail.exps, g.lead.exps)
            else:
                raise EngineDiagnostic(f"not a binomial or monomial: {g!r}")

    def _add(self, lead: tuple, trail: tuple | None) -> None:
        if len(self.lead_p) >= self.limits.max_basis:
            raise ResourceGuardError(
                f"basis exceeded {self.limits.max_basis} elements"
            )
        k = len(self.lead_p)
        self.lead_p.append(self.pk.pack(lead))
        self.lead_t.append(lead)
        deg = sum(lead)
        self.lead_deg.append(deg)
        self.lead_mask.append(sum(1 << i for i, e in enumerate(lead) if e))
        if trail is None:
            self.trail_p.append(None)
            self.trail_t.append(None)
            self.delta_deg.append(0)
        else:
            self.trail_p.append(self.pk.pack(trail))
            self.trail_t.append(trail)
            self.delta_deg.append(sum(trail) - deg)
        insort(self.scan, (deg, k))
        if self.track_pairs:
            self._update_pairs(k)

    def _lcm(self, i: int, j: int) -> tuple:
        return tuple(map(max, self.lead_t[i], self.lead_t[j]))

    def _update_pairs(self, k: int) -> None:
        """Gebauer-Moeller pair update for the freshly added element k."""
        lk = self.lead_t[k]
        mk = self.lead_mask[k]
        kept = set()
        for i, j in self.pairs:
            lij = self._lcm(i, j)
            if (
                not _divides_t(lk, lij)
                or lij == tuple(map(max, self.lead_t[i], lk))
                or lij == tuple(map(max, self.lead_t[j], lk))
            ):
                kept.add((i, j))
        self.pairs = kept
        by_lcm: dict[tuple, list[int]] = {}
        for i in range(k):
            by_lcm.setdefault(tuple(map(max, self.lead_t[i], lk)), []).append(i)
        key = self.order.key_exps
        minimal: list[tuple] = []
        for lcm in sorted(by_lcm, key=lambda t: (sum(t), key(t))):
            if not any(_divides_t(m, lcm) for m in minimal):
                minimal.append(lcm)
        for lcm in minimal:
            members = by_lcm[lcm]
            if any(self.lead_mask[i] & mk == 0 for i in members):
                continue  # a coprime pair in the class: the whole class reduces
            i = min(members)
            if self.trail_p[i] is None and self.trail_p[k] is None:
                continue  # monomial-monomial pairs are identically zero
            self.pairs.add((i, k))
            heapq.heappush(self.heap, (sum(lcm), key(lcm), i, k))

    # -- reduction ------------------------------------------------------------

    def nf_monomial(self, m_packed: int, m_deg: int):
        """Fully rewrite a packed monomial; None when it reduces to zero."""
        guard = self.pk.guard
        limit = self.limits.max_reductions
        scan = self.scan
        lead_p = self.lead_p
        trail_p = self.trail_p
        delta = self.delta_deg
        reduced = True
        while reduced:
            reduced = False
            for deg, i in scan:
                if deg > m_deg:
                    break
                lp = lead_p[i]
                if ((m_packed | guard) - lp) & guard == guard:
                    self.reductions += 1
                    if self.reductions > limit:
                        raise ResourceGuardError(
                            f"reduction steps exceeded {limit}"
                        )
                    tp = trail_p[i]
                    if tp is None:
                        return None
                    m_packed += tp - lp
                    m_deg += delta[i]
                    reduced = True
                    break
        return m_packed, m_deg

    def _spair_side(self, lcm_p: int, lcm_deg: int, i: int):
        tp = self.trail_p[i]
        if tp is None:
            return None
        return self.nf_monomial(lcm_p - self.lead_p[i] + tp, lcm_deg + self.delta_deg[i])

    def _process_pair(self, i: int, j: int) -> None:
        lcm = self._lcm(i, j)
        lcm_p = self.pk.pack(lcm)
        lcm_deg = sum(lcm)
        u = self._spair_side(lcm_p, lcm_deg, i)
        v = self._spair_side(lcm_p, lcm_deg, j)
        if u is None and v is None:
            return
        if u is None or v is None:
            side = u if v is None else v
            self._add(self.pk.unpack(side[0]), None)
            return
        if u[0] == v[0]:
            return
        ut, vt = self.pk.unpack(u[0]), self.pk.unpack(v[0])
        if self.order.key_exps(ut) > self.order.key_exps(vt):
            self._add(ut, vt)
        else:
            self._add(vt, ut)

    def run(self) -> None:
        while self.heap:
            _, _, i, j = heapq.heappop(self.heap)
            if (i, j) not in self.pairs:
                continue
            self.pairs.discard((i, j))
            self._process_pair(i, j)

    # -- extraction -----------------------------------------------------------

    def reduced_elements(self) -> list[tuple[tuple, tuple | None]]:
        """Minimal leads, fully reduced trails, sorted ascending by lead."""
        key = self.order.key_exps
        kept: list[int] = []
        for i in sorted(range(len(self.lead_t)), key=lambda i: key(self.lead_t[i])):
            li = self.lead_t[i]
            if not any(_divides_t(self.lead_t[k], li) for k in kept):
                kept.append(i)
        out: list[tuple[tuple, tuple | None]] = []
        for i in kept:
            if self.trail_p[i] is None:
                out.append((self.lead_t[i], None))
                continue
            nf = self.nf_monomial(self.trail_p[i], self.lead_deg[i] + self.delta_deg[i])
            out.append((self.lead_t[i], None if nf is None else self.pk.unpack(nf[0])))
        return out


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced basis: minimal leads, reduced trails, canonical element order.

    ``elements`` holds Binomial entries (plus Monomial entries for quotient
    ideals). Equality of two bases is plain equality of these tuples.
    """

    order: MonomialOrder
    elements: tuple

    @property
    def variables(self) -> VariableSet:
        return self.order.variables

    @property
    def initial_generators(self) -> tuple[Monomial, ...]:
        """Minimal monomial generators of the initial ideal."""
        return tuple(
            g if isinstance(g, Monomial) else g.lead for g in self.elements
        )

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def _basis_from(pairs: Sequence[tuple[tuple, tuple | None]], order: MonomialOrder) -> GroebnerBasis:
    elements = tuple(
        Monomial(lead) if trail is None else Binomial(Monomial(lead), Monomial(trail))
        for lead, trail in pairs
    )
    return GroebnerBasis(order, elements)


class IncrementalBasis:
    """A completion that accepts new generators between normal-form queries.

    Used by the graded Nakayama count, which grows an ideal weight layer by
    weight layer while testing membership after each extension.
    """

    def __init__(self, order: MonomialOrder, limits: Limits | None = None):
        self._comp = _Completion(order, limits or DEFAULT_LIMITS)

    def extend(self, gens: Iterable) -> None:
        self._comp.ingest(gens)
        self._comp.run()

    def reduces_to_zero(self, b: Binomial) -> bool:
        return _nf_via(self._comp, b) is ZERO

    def basis(self) -> GroebnerBasis:
        return _basis_from(self._comp.reduced_elements(), self._comp.order)


def _nf_via(comp: _Completion, target):
    """Normal form of a Monomial or Binomial against a completion's elements."""
    pk = comp.pk
    if isinstance(target, Monomial):
        nf = comp.nf_monomial(pk.pack(target.exps), target.deg)
        return ZERO if nf is None else Monomial(pk.unpack(nf[0]))
    if isinstance(target, Binomial):
        u = comp.nf_monomial(pk.pack(target.lead.exps), target.lead.deg)
        v = comp.nf_monomial(pk.pack(target.trail.exps), target.trail.deg)
        if u is None and v is None:
            return ZERO
        if u is None or v is None:
            side = u if v is None else v
            return Monomial(pk.unpack(side[0]))
        if u[0] == v[0]:
            return ZERO
        ut, vt = Monomial(pk.unpack(u[0])), Monomial(pk.unpack(v[0]))
        if comp.order.key(ut) > comp.order.key(vt):
            return Binomial(ut, vt)
        return Binomial(vt, ut)
    if target is ZERO:
        return ZERO
    raise EngineDiagnostic(f"cannot reduce {target!r}")


def buchberger(gens: Iterable, order: MonomialOrder, limits: Limits | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    The result is canonical: any generating set of the same ideal, in any
    input order, produces the identical basis.
    """
    comp = _Completion(order, limits or DEFAULT_LIMITS)
    comp.ingest(gens)
    comp.run()
    return _basis_from(comp.reduced_elements(), order)


def spair(f: Binomial, g: Binomial, order: MonomialOrder):
    """S-binomial of f and g, computed from their stored orientations."""
    lcm = f.lead.lcm(g.lead)
    u = lcm.quotient(f.lead) * f.trail
    v = lcm.quotient(g.lead) * g.trail
    from .algebra import make_binomial

    return make_binomial(order, u, v)


def normal_form(target, basis: Iterable, order: MonomialOrder, limits: Limits | None = None):
    """Fully reduce a Monomial or Binomial against oriented basis elements.

    A pure-difference target over a pure-difference basis returns a Binomial
    or ZERO; monomial members in the basis may collapse one side, in which
    case a Monomial comes back.
    """
    comp = _Completion(order, limits or DEFAULT_LIMITS, track_pairs=False)
    comp.ingest(basis)
    return _nf_via(comp, target)


def is_groebner(gens: Sequence, order: MonomialOrder, limits: Limits | None = None) -> bool:
    """True iff every pairwise S-pair reduces to zero against ``gens``."""
    comp = _Completion(order, limits or DEFAULT_LIMITS, track_pairs=False)
    comp.ingest(gens)
    n = len(comp.lead_t)
    for i in range(n):
        for j in range(i + 1, n):
            if comp.trail_p[i] is None and comp.trail_p[j] is None:
                continue
            lcm = comp._lcm(i, j)
            lcm_p = comp.pk.pack(lcm)
            lcm_deg = sum(lcm)
            u = comp._spair_side(lcm_p, lcm_deg, i)
            v = comp._spair_side(lcm_p, lcm_deg, j)
            if u is None and v is None:
                continue
            if u is None or v is None or u[0] != v[0]:
                return False
    return True


def homogenize(gb: GroebnerBasis, y_label: str = "y") -> GroebnerBasis:
    """Homogenize a grevlex basis by a smallest variable of weight zero.

    Each element lead - trail becomes lead - trail*y^(deg lead - deg trail);
    the result is the reduced basis of the homogenized ideal under the
    extended order, with the same leads.
    """
    if gb.order.kind != "grevlex":
        raise AlgebraError("homogenize expects a grevlex basis")
    vs = gb.variables
    new_vs = VariableSet(vs.labels + (y_label,), vs.weights + (0,))
    new_order = grevlex_extended(new_vs)
    elements = []
    for g in gb.elements:
        if isinstance(g, Monomial):
            elements.append(Monomial(g.exps + (0,)))
            continue
        gap = g.lead.deg - g.trail.deg
        elements.append(
            Binomial(Monomial(g.lead.exps + (0,)), Monomial(g.trail.exps + (gap,)))
        )
    return GroebnerBasis(new_order, tuple(elements))


def contains(gb: GroebnerBasis, f, limits: Limits | None = None) -> bool:
    """Ideal membership by normal form against the basis."""
    return normal_form(f, gb.elements, gb.order, limits) is ZERO


def quotient_images(elements: Iterable, order: MonomialOrder, kill_labels: Sequence[str]):
    """Images of binomial/monomial generators after sending variables to zero.

    Returns the order on the surviving variables and the nonzero images:
    a binomial keeps both sides, collapses to the surviving side as a
    monomial member, or vanishes. Grevlex comparisons restrict consistently,
    so stored orientations remain valid.
    """
    vs = order.variables
    kill = {vs.index(label) for label in kill_labels}
    if len(kill) == len(vs):
        raise AlgebraError("cannot quotient away every variable")
    keep = [i for i in range(len(vs)) if i not in kill]
    new_vs = VariableSet(
        tuple(vs.labels[i] for i in keep), tuple(vs.weights[i] for i in keep)
    )
    new_order = MonomialOrder(order.kind, new_vs)

    def restrict(m: Monomial):
        if any(m.exps[i] for i in kill):
            return None
        return Monomial(tuple(m.exps[i] for i in keep))

    images = []
    for g in elements:
        if g is ZERO:
            continue
        if isinstance(g, Monomial):
            m = restrict(g)
            if m is not None:
                images.append(m)
            continue
        u, v = restrict(g.lead), restrict(g.trail)
        if u is None and v is None:
            continue
        if u is None or v is None:
            images.append(u if v is None else v)
        else:
            images.append(Binomial(u, v))
    return new_order, images


def gb_to_json(gb: GroebnerBasis) -> dict:
    """Stable JSON document: order kind, descending variables, elements."""
    from .algebra import binomial_text, monomial_text

    vs = gb.variables
    elements = []
    for g in gb.elements:
        if isinstance(g, Monomial):
            elements.append({"lead": monomial_text(vs, g), "trail": None})
        else:
            elements.append(
                {"lead": monomial_text(vs, g.lead), "trail": monomial_text(vs, g.trail)}
            )
    return {
        "order": gb.order.kind,
        "variables": list(vs.labels),
        "elements": elements,
    }
