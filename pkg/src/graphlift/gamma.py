"""The transitivity formula over pair components, and the mu2/nu3 invariants.

Each component of the arity-2 configuration graph gets a literal: the
component holding the canonically least pair of its swap orbit carries
``x_i``, its swapped partner carries ``-x_i``. Every ordered triple of
distinct same-image vertices ``(a, b, c)`` whose pair components
``C ∋ (a, b)``, ``D ∋ (b, c)``, ``E ∋ (a, c)`` satisfy ``C != E`` and
``D != E`` contributes the clause ``-lit(C) v -lit(D) v lit(E)``.
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations

from . import sat
from .config import act, build_config, components, p_trivial
from .errors import GammaUndefinedError
from .graphs import fibers


@dataclass
class PairComponents:
    """Arity-2 configuration graph with components and the swap on them."""

    config: object
    comps: object
    swap: list

    @classmethod
    def of(cls, m, **caps):
        c = build_config(m, 2, **caps)
        comps = components(c)
        _, swap = act(c, (1, 0), comps)
        return cls(c, comps, swap)

    def comp(self, a, b):
        return self.comps.component[self.config.index[(a, b)]]


def _fiber_indices(m):
    dom = m.domain
    return [
        [dom.vertex_index(v) for v in vs]
        for vs in fibers(m).vertex_fibers.values()
        if len(vs) >= 3
    ]


@dataclass
class GammaFormula:
    num_vars: int
    representatives: list  # variable i (1-based) -> component id at index i - 1
    literal: list  # component id -> signed variable
    clauses: list  # ordered literal triples
    provenance: list  # one witnessing vertex triple (domain ids) per clause
    pairs: PairComponents = field(repr=False)

    def pair_literal(self, a, b):
        """Literal of the component holding the index pair ``(a, b)``."""
        return self.pair_literals[(a, b)]

    @cached_property
    def pair_literals(self):
        comp = self.pairs.comps.component
        return {t: self.literal[comp[i]] for t, i in self.pairs.config.index.items()}

    def lines(self, status=None):
        yield f"gamma_vars: {self.num_vars}"
        yield f"gamma_clauses: {len(self.clauses)}"
        for cl in self.clauses:
            yield "clause " + " ".join(str(l) for l in cl)
        if status is not None:
            yield f"gamma_status: {status}"


def clause_key(clause):
    """Clauses are compared as literal multisets."""
    return tuple(sorted(clause))


def build_gamma(m, pairs=None, **caps):
    pairs = pairs or PairComponents.of(m, **caps)
    ncomp = len(pairs.comps)
    if any(pairs.swap[k] == k for k in range(ncomp)):
        raise GammaUndefinedError("the pair covering is nontrivial; the formula is undefined")
    literal = [0] * ncomp
    reps = []
    for k in range(ncomp):
        if literal[k]:
            continue
        reps.append(k)
        literal[k] = len(reps)
        literal[pairs.swap[k]] = -len(reps)

    clauses, provenance, seen = [], [], set()
    names = m.domain.vertices
    for fib in _fiber_indices(m):
        for a, b, c in permutations(fib, 3):
            C, D, E = pairs.comp(a, b), pairs.comp(b, c), pairs.comp(a, c)
            if C == E or D == E:
                continue
            clause = (-literal[C], -literal[D], literal[E])
            key = clause_key(clause)
            if key in seen:
                continue
            seen.add(key)
            clauses.append(clause)
            provenance.append((names[a], names[b], names[c]))
    return GammaFormula(len(reps), reps, literal, clauses, provenance, pairs)


def is_closed(g):
    """Every clause has its fully negated twin."""
    keys = {clause_key(c) for c in g.clauses}
    return all(clause_key(tuple(-l for l in c)) in keys for c in g.clauses)


def solve(g):
    return sat.solve(g.clauses, g.num_vars)


def enumerate_models(g, cap=10_000):
    """All models in branch order, at most ``cap``. Returns ``(models, truncated)``."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    models = []
    for model in sat.iter_models(g.clauses, g.num_vars):
        if len(models) == cap:
            return models, True
        models.append(model)
    return models, False


def status(m, **caps):
    """``(formula or None, 'sat' | 'unsat' | 'undefined', model or None)``."""
    try:
        g = build_gamma(m, **caps)
    except GammaUndefinedError:
        return None, "undefined", None
    model = solve(g)
    return g, ("sat" if model is not None else "unsat"), model


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if y < x:
            x, y = y, x
        self.parent[y] = x  # least component id stays the class label
        return True


@dataclass
class NuPartition:
    classes: list  # component id -> least component id of its class
    merges: list  # (cause triple of domain ids, (kept component, absorbed component))
    vanishes: bool
    pairs: PairComponents = field(repr=False)

    def same(self, c1, c2):
        return self.classes[c1] == self.classes[c2]


def nu3_closure(m, pairs=None, **caps):
    """Smallest swap-compatible coarsening of the component partition closed
    under: ``(a, b) ~ (b, c)`` implies ``(a, c)`` joins their class."""
    pairs = pairs or PairComponents.of(m, **caps)
    uf = _UnionFind(len(pairs.comps))
    names = m.domain.vertices
    merges = []
    triples = [t for fib in _fiber_indices(m) for t in permutations(fib, 3)]
    changed = True
    while changed:
        changed = False
        for a, b, c in triples:
            ab, bc = uf.find(pairs.comp(a, b)), uf.find(pairs.comp(b, c))
            if ab != bc:
                continue
            ac = uf.find(pairs.comp(a, c))
            if ac == ab:
                continue
            uf.union(ab, ac)
            uf.union(pairs.swap[pairs.comp(a, b)], pairs.swap[pairs.comp(a, c)])
            merges.append(((names[a], names[b], names[c]), (ab, ac)))
            changed = True
    classes = [uf.find(k) for k in range(len(pairs.comps))]
    vanishes = not any(
        classes[pairs.comp(a, b)] == classes[pairs.comp(b, c)] == classes[pairs.comp(c, a)]
        for a, b, c in triples
    )
    return NuPartition(classes, merges, vanishes, pairs)


def mu2_vanishes(m, **caps):
    return p_trivial(m, 2, **caps)
