"""Exact monomials, pure-difference binomials, and the three monomial orders.

Variables are kept in descending order: ``labels[0]`` is the largest variable.
Each variable carries a nonnegative integer weight (the semigroup element it
maps to), which grades every ideal built downstream.

Supported orders:

* ``grevlex`` -- total degree first; ties are broken by scanning exponents
  from the smallest variable upward, and the monomial with the larger
  exponent in the first differing position is the smaller one.
* ``grevlex_extended`` -- the same comparison, used on a ring whose last
  variable is a homogenizing variable adjoined below everything else.
* ``elimination`` -- total degree in the first (parameter) variable first,
  then grevlex on the remaining variables; any monomial containing the
  parameter ranks above every parameter-free monomial.

Canonical text form for fixtures and the CLI: ``x0^2*x3 - x4^2`` (variables
in descending order, ``^`` for powers, ``*`` separators, single spaces around
the minus sign). ``parse_monomial``/``parse_binomial`` round-trip it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

LT, EQ, GT = -1, 0, 1

# Packed-engine field bound; desk-scale degrees stay far below this.
MAX_EXPONENT = 1 << 15

ORDER_KINDS = ("grevlex", "grevlex_extended", "elimination")


class AlgebraError(ValueError):
    """Structurally invalid variable set, monomial, or binomial operation."""


@dataclass(frozen=True)
class VariableSet:
    """An ordered tuple of weighted variables, largest variable first."""

    labels: tuple[str, ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if not self.labels:
            raise AlgebraError("empty variable set")
        if len(self.labels) != len(set(self.labels)):
            raise AlgebraError("variable labels must be distinct")
        if len(self.labels) != len(self.weights):
            raise AlgebraError("labels and weights must have equal length")
        if any(w < 0 for w in self.weights):
            raise AlgebraError("variable weights must be nonnegative")
        object.__setattr__(self, "_pos", {s: i for i, s in enumerate(self.labels)})

    def __len__(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self._pos[label]
        except KeyError:
            raise AlgebraError(f"unknown variable {label!r}") from None

    def one(self) -> "Monomial":
        return Monomial((0,) * len(self.labels))

    def variable(self, label: str) -> "Monomial":
        exps = [0] * len(self.labels)
        exps[self.index(label)] = 1
        return Monomial(exps)

    def monomial(self, exps: Mapping[str, int]) -> "Monomial":
        vec = [0] * len(self.labels)
        for label, e in exps.items():
            vec[self.index(label)] = int(e)
        return Monomial(vec)


class Monomial:
    """Exponent vector indexed parallel to a variable set."""

    __slots__ = ("exps", "deg")

    def __init__(self, exps: Iterable[int]):
        t = tuple(int(e) for e in exps)
        for e in t:
            if e < 0:
                raise AlgebraError("negative exponent")
            if e >= MAX_EXPONENT:
                raise AlgebraError(f"exponent {e} exceeds the engine bound")
        self.exps = t
        self.deg = sum(t)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self):
        return hash(self.exps)

    def __repr__(self):
        return f"Monomial{self.exps}"

    def is_one(self) -> bool:
        return self.deg == 0

    def __mul__(self, other: "Monomial") -> "Monomial":
        _same_length(self, other)
        return Monomial(a + b for a, b in zip(self.exps, other.exps))

    def divides(self, other: "Monomial") -> bool:
        _same_length(self, other)
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def quotient(self, other: "Monomial") -> "Monomial":
        """Exact quotient self / other; raises when not divisible."""
        if not other.divides(self):
            raise AlgebraError("inexact monomial quotient")
        return Monomial(a - b for a, b in zip(self.exps, other.exps))

    def lcm(self, other: "Monomial") -> "Monomial":
        _same_length(self, other)
        return Monomial(max(a, b) for a, b in zip(self.exps, other.exps))

    def gcd(self, other: "Monomial") -> "Monomial":
        _same_length(self, other)
        return Monomial(min(a, b) for a, b in zip(self.exps, other.exps))


def _same_length(a: Monomial, b: Monomial) -> None:
    if len(a.exps) != len(b.exps):
        raise AlgebraError("monomials over mismatched variable sets")


def weight(vs: VariableSet, mono: Monomial) -> int:
    """Semigroup weight of a monomial: sum of exponent times variable weight."""
    if len(mono.exps) != len(vs):
        raise AlgebraError("monomial does not match variable set")
    return sum(e * w for e, w in zip(mono.exps, vs.weights))


@dataclass(frozen=True)
class MonomialOrder:
    """A total monomial order bound to its variable set."""

    kind: str
    variables: VariableSet

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise AlgebraError(f"unknown order kind {self.kind!r}")

    def key_exps(self, exps: tuple[int, ...]):
        """Sort key for a raw exponent tuple; ascending in the order."""
        if self.kind == "elimination":
            rest = exps[1:]
            return (exps[0], sum(rest), tuple(-e for e in reversed(rest)))
        return (sum(exps), tuple(-e for e in reversed(exps)))

    def key(self, mono: Monomial):
        if len(mono.exps) != len(self.variables):
            raise AlgebraError("monomial does not match the order's variable set")
        return self.key_exps(mono.exps)

    def compare(self, a: Monomial, b: Monomial) -> int:
        """LT (-1), EQ (0), or GT (1) for a against b."""
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


def grevlex(vs: VariableSet) -> MonomialOrder:
    return MonomialOrder("grevlex", vs)


def grevlex_extended(vs: VariableSet) -> MonomialOrder:
    """Grevlex on a ring whose last variable is the homogenizing one."""
    return MonomialOrder("grevlex_extended", vs)


def elimination_order(vs: VariableSet) -> MonomialOrder:
    """Parameter block first (the first variable), then grevlex on the rest."""
    return MonomialOrder("elimination", vs)


class _Zero:
    """Sentinel for the zero result of binomial constructions."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Zero"


ZERO = _Zero()


@dataclass(frozen=True)
class Binomial:
    """Pure difference lead - trail of two distinct monomials.

    The stored orientation is trusted; use ``make_binomial`` to orient under
    an order. Toric constructions additionally keep weight(lead) equal to
    weight(trail).
    """

    lead: Monomial
    trail: Monomial

    def __post_init__(self):
        _same_length(self.lead, self.trail)
        if self.lead == self.trail:
            raise AlgebraError("binomial sides must differ")


def make_binomial(order: MonomialOrder, u: Monomial, v: Monomial):
    """Orient u - v under the order; ZERO when the sides coincide."""
    c = order.compare(u, v)
    if c == EQ:
        return ZERO
    return Binomial(u, v) if c == GT else Binomial(v, u)


def weight_balanced(vs: VariableSet, b: Binomial) -> bool:
    return weight(vs, b.lead) == weight(vs, b.trail)


# --- canonical text form ----------------------------------------------------

_FACTOR_RE = re.compile(r"^([^\s^*]+?)(?:\^(\d+))?$")


def monomial_text(vs: VariableSet, mono: Monomial) -> str:
    if len(mono.exps) != len(vs):
        raise AlgebraError("monomial does not match variable set")
    parts = []
    for label, e in zip(vs.labels, mono.exps):
        if e == 1:
            parts.append(label)
        elif e > 1:
            parts.append(f"{label}^{e}")
    return "*".join(parts) if parts else "1"


def binomial_text(vs: VariableSet, b: Binomial) -> str:
    return f"{monomial_text(vs, b.lead)} - {monomial_text(vs, b.trail)}"


def parse_monomial(vs: VariableSet, text: str) -> Monomial:
    text = text.strip()
    if text == "1":
        return vs.one()
    exps = [0] * len(vs)
    for factor in text.split("*"):
        m = _FACTOR_RE.match(factor.strip())
        if not m:
            raise AlgebraError(f"cannot parse monomial factor {factor!r}")
        label, power = m.group(1), int(m.group(2) or 1)
        exps[vs.index(label)] += power
    return Monomial(exps)


def parse_binomial(vs: VariableSet, text: str) -> Binomial:
    """Parse canonical ``lead - trail`` text; the written orientation is kept."""
    sides = text.split(" - ")
    if len(sides) != 2:
        raise AlgebraError(f"cannot parse binomial {text!r}")
    return Binomial(parse_monomial(vs, sides[0]), parse_monomial(vs, sides[1]))
