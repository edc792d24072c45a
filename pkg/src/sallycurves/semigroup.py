"""Numerical semigroups: minimal generators, membership, Frobenius, symmetry.

Also the interval family S(e, m, n) generated by {e, ..., 2e-1} with the two
values e+m and e+n omitted; for admissible parameters it has multiplicity e,
width e-1, and embedding dimension e-2.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


class SemigroupError(ValueError):
    """Invalid generating data for a numerical semigroup."""


@dataclass(frozen=True)
class SallyParams:
    """Parameters (e, m, n) with e >= 4 and 1 <= m < n <= e-2."""

    e: int
    m: int
    n: int

    def __post_init__(self):
        if self.e < 4:
            raise SemigroupError("parameter e must be at least 4")
        if not (1 <= self.m < self.n <= self.e - 2):
            raise SemigroupError("parameters must satisfy 1 <= m < n <= e-2")

    @property
    def live_indices(self) -> tuple[int, ...]:
        """Indices {0, ..., e-1} with m and n removed, ascending."""
        return tuple(i for i in range(self.e) if i not in (self.m, self.n))

    @property
    def raw_generators(self) -> tuple[int, ...]:
        return tuple(self.e + i for i in self.live_indices)


@dataclass(frozen=True)
class NumericalSemigroup:
    """A cofinite submonoid of the nonnegative integers.

    ``membership[k]`` answers k in S for 0 <= k <= frobenius + max generator;
    everything past the table is a member.
    """

    generators: tuple[int, ...]
    membership: tuple[bool, ...]
    frobenius: int

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def width(self) -> int:
        return self.generators[-1] - self.generators[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    def contains(self, k: int) -> bool:
        if k < 0:
            return False
        if k < len(self.membership):
            return self.membership[k]
        return k > self.frobenius

    def gaps(self) -> tuple[int, ...]:
        return tuple(k for k in range(self.frobenius + 1) if not self.contains(k))


def _representable(gens, bound):
    """Sieve of nonnegative-combination representability on [0, bound]."""
    table = [False] * (bound + 1)
    table[0] = True
    for k in range(1, bound + 1):
        for g in gens:
            if g <= k and table[k - g]:
                table[k] = True
                break
    return table


def minimalize(raw_generators) -> NumericalSemigroup:
    """Build the semigroup, dropping generators representable by the others.

    The Frobenius number comes from scanning a representability sieve whose
    length multiplicity * max-generator safely exceeds it.
    """
    gens = sorted(set(int(g) for g in raw_generators))
    if not gens:
        raise SemigroupError("empty generator list")
    if gens[0] < 1:
        raise SemigroupError("generators must be positive")
    g = 0
    for a in gens:
        g = gcd(g, a)
    if g != 1:
        raise SemigroupError("not a numerical semigroup: gcd of generators is not 1")

    minimal = []
    for i, a in enumerate(gens):
        others = gens[:i] + gens[i + 1 :]
        usable = [b for b in others if b <= a]
        if usable and _representable(usable, a)[a]:
            continue
        minimal.append(a)

    if minimal == [1]:
        return NumericalSemigroup((1,), (True, True), -1)

    bound = minimal[0] * minimal[-1]
    table = _representable(minimal, bound)
    frobenius = max(k for k in range(bound + 1) if not table[k])
    table_end = frobenius + minimal[-1]
    return NumericalSemigroup(tuple(minimal), tuple(table[: table_end + 1]), frobenius)


def sally_semigroup(p: SallyParams) -> NumericalSemigroup:
    """The semigroup of S(e, m, n); generators {e..2e-1} minus {e+m, e+n}."""
    s = minimalize(p.raw_generators)
    if (
        s.multiplicity != p.e
        or s.width != p.e - 1
        or s.embedding_dimension != p.e - 2
    ):
        raise SemigroupError(f"family invariants failed for {p}")
    return s


def is_symmetric(s: NumericalSemigroup) -> bool:
    """For every 0 <= k <= F(S), exactly one of k and F(S)-k is a member."""
    f = s.frobenius
    return all(s.contains(k) != s.contains(f - k) for k in range(f + 1))


def gap_count(s: NumericalSemigroup) -> int:
    return len(s.gaps())
