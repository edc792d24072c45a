"""Ground-truth defining ideals of numerical semigroups, by elimination.

Independent of every closed-form generating set in this package: the kernel
of x_i -> t^{a_i} is computed in an extended ring with a parameter variable t
of weight one (largest under an elimination order), starting from the
relations x_i - t^{a_i}. Completing, discarding everything containing t, and
rerunning the reduction under grevlex yields the canonical reduced basis of
the defining ideal.

A second, even more elementary count of minimal generators is provided for
cross-checking: at each weight, the number of generators needed is one less
than the number of connected components of the graph on the weight fiber
whose edges join monomials sharing a variable.
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import (
    Binomial,
    Monomial,
    VariableSet,
    elimination_order,
    grevlex,
    make_binomial,
    weight,
)
from .groebner import (
    DEFAULT_LIMITS,
    EngineDiagnostic,
    GroebnerBasis,
    IncrementalBasis,
    Limits,
    buchberger,
    homogenize,
)
from .semigroup import NumericalSemigroup, SallyParams, sally_semigroup


def standard_variable_set(s: NumericalSemigroup) -> VariableSet:
    """Positional variables x0 > x1 > ... weighted by the minimal generators."""
    labels = tuple(f"x{i}" for i in range(len(s.generators)))
    return VariableSet(labels, s.generators)


def sally_variable_set(p: SallyParams, with_y: bool = False) -> VariableSet:
    """Variables x_i indexed by the surviving indices of S(e, m, n).

    Labels follow the family convention: xi has weight e+i, the indices m and
    n are absent, and y (weight 0) is appended smallest when requested.
    """
    labels = tuple(f"x{i}" for i in p.live_indices)
    weights = tuple(p.e + i for i in p.live_indices)
    if with_y:
        return VariableSet(labels + ("y",), weights + (0,))
    return VariableSet(labels, weights)


def _check_ring(s: NumericalSemigroup, vs: VariableSet) -> None:
    if len(vs) != len(s.generators) or tuple(vs.weights) != s.generators:
        raise ValueError("variable set does not match the semigroup generators")


def defining_ideal(
    s: NumericalSemigroup, vs: VariableSet, limits: Limits | None = None
) -> GroebnerBasis:
    """Reduced grevlex basis of the kernel of x_i -> t^{a_i}."""
    _check_ring(s, vs)
    limits = limits or DEFAULT_LIMITS
    tvs = VariableSet(("t",) + vs.labels, (1,) + vs.weights)
    torder = elimination_order(tvs)
    n = len(vs)
    gens = []
    for i, a in enumerate(s.generators):
        x = [0] * (n + 1)
        x[1 + i] = 1
        t = [0] * (n + 1)
        t[0] = a
        gens.append(make_binomial(torder, Monomial(x), Monomial(t)))
    tgb = buchberger(gens, torder, limits)

    survivors = []
    for g in tgb.elements:
        if isinstance(g, Monomial):
            raise EngineDiagnostic("monomial member in a toric elimination basis")
        if g.lead.exps[0] == 0:  # t-free lead forces a t-free trail
            survivors.append(
                Binomial(Monomial(g.lead.exps[1:]), Monomial(g.trail.exps[1:]))
            )
    gb = buchberger(survivors, grevlex(vs), limits)
    for g in gb.elements:
        if isinstance(g, Monomial):
            raise EngineDiagnostic("monomial member in a toric basis")
        if weight(vs, g.lead) != weight(vs, g.trail):
            raise EngineDiagnostic("weight-unbalanced element in a toric basis")
    return gb


def projective_defining_ideal(
    s: NumericalSemigroup, vs_with_y: VariableSet, limits: Limits | None = None
) -> GroebnerBasis:
    """Reduced extended-grevlex basis of the projective closure's ideal.

    Equals the homogenization of the affine basis by the last variable.
    """
    if vs_with_y.weights[-1] != 0:
        raise ValueError("expected a homogenizing last variable of weight 0")
    affine = VariableSet(vs_with_y.labels[:-1], vs_with_y.weights[:-1])
    return homogenize(defining_ideal(s, affine, limits), vs_with_y.labels[-1])


@lru_cache(maxsize=None)
def sally_defining_ideal(e: int, m: int, n: int) -> GroebnerBasis:
    """Cached oracle basis for S(e, m, n) over its family variable set."""
    p = SallyParams(e, m, n)
    return defining_ideal(sally_semigroup(p), sally_variable_set(p))


def _weight_sorted(gb: GroebnerBasis):
    vs = gb.variables
    key = gb.order.key_exps
    return sorted(
        gb.elements, key=lambda g: (weight(vs, g.lead), key(g.lead.exps))
    )


def minimal_generators(gb: GroebnerBasis, limits: Limits | None = None) -> tuple[Binomial, ...]:
    """Minimal generating set extracted by graded Nakayama over the weights.

    Elements are taken in ascending weight; one is kept exactly when it is
    not in the ideal generated by the strictly lower weight elements together
    with the same-weight elements already kept. The basis itself is usually
    larger than a minimal generating set.
    """
    for g in gb.elements:
        if isinstance(g, Monomial):
            raise EngineDiagnostic("minimal generators need a monomial-free basis")
    inc = IncrementalBasis(gb.order, limits)
    accepted = []
    for g in _weight_sorted(gb):
        if not inc.reduces_to_zero(g):
            accepted.append(g)
            inc.extend([g])
    return tuple(accepted)


def minimal_generator_count(gb: GroebnerBasis, limits: Limits | None = None) -> int:
    return len(minimal_generators(gb, limits))


def _fibers_by_weight(vs: VariableSet, up_to: int):
    """All monomials of each weight <= up_to, as exponent tuples per weight."""
    fibers: list[list[tuple]] = [[] for _ in range(up_to + 1)]

    def fill(idx, used, exps):
        if idx == len(vs):
            fibers[used].append(tuple(exps))
            return
        w = vs.weights[idx]
        e = 0
        while used + e * w <= up_to:
            fill(idx + 1, used + e * w, exps + [e])
            e += 1

    fill(0, 0, [])
    return fibers


def fiber_generator_count(s: NumericalSemigroup, vs: VariableSet, up_to_weight: int) -> int:
    """Independent minimal-generator count via fiber connectivity.

    For each weight w, the monomials of weight w form a graph whose edges
    join monomials sharing a variable; the defining ideal needs exactly
    (number of connected components - 1) new generators there. Any
    generating set bounds the relevant weights, so pass the maximum element
    weight of a known basis.
    """
    _check_ring(s, vs)
    total = 0
    for fiber in _fibers_by_weight(vs, up_to_weight):
        if len(fiber) < 2:
            continue
        parent = list(range(len(fiber)))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for v in range(len(vs)):
            prev = -1
            for idx, mono in enumerate(fiber):
                if mono[v]:
                    if prev >= 0:
                        parent[find(idx)] = find(prev)
                    prev = idx
        components = len({find(i) for i in range(len(fiber))})
        total += components - 1
    return total
