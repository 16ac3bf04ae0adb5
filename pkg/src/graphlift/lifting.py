"""Admissible order collections, integer-height liftings and their checks.

An order collection maps each codomain vertex to the tuple of its fiber
in ascending order. A lifting assigns each domain vertex its rank in
that order (1-based); extending linearly over edges gives ``|f| x h``.
"""

from dataclasses import dataclass
from itertools import combinations, permutations
from math import factorial, prod

from .errors import InadmissibleError, InternalConsistencyError, ResourceCapError
from .graphs import fibers

DEFAULT_ORACLE_BOUND = 1_000_000


@dataclass(frozen=True)
class Lifting:
    map: object
    heights: dict

    def lines(self):
        for v in self.map.domain.vertices:
            yield f"height {v} {self.heights[v]}"


def order_lines(orders):
    for w, vs in orders.items():
        yield "order " + " ".join((w, *vs))


def same_image_pairs(m):
    """Unordered pairs of distinct domain edges with a common image."""
    for es in fibers(m).edge_fibers.values():
        yield from combinations(es, 2)


def _sign(a, b):
    return (a > b) - (a < b)


def assignment_to_orders(m, g, model):
    """Order each fiber by: ``x < y`` iff the literal of ``(x, y)`` is true."""
    dom = m.domain
    lits = g.pair_literals
    orders = {}
    for w, vs in fibers(m).vertex_fibers.items():
        idx = [dom.vertex_index(v) for v in vs]
        less = {}
        for x, y in permutations(idx, 2):
            lit = lits[(x, y)]
            less[x, y] = (model[abs(lit) - 1] == 1) == (lit > 0)
        for x, y in permutations(idx, 2):
            if less[x, y] == less[y, x]:
                raise InternalConsistencyError(f"relation on fiber {w!r} is not antisymmetric and total")
        below = {x: sum(less[y, x] for y in idx if y != x) for x in idx}
        if sorted(below.values()) != list(range(len(idx))):
            # a strict total order has exactly one element with each rank
            raise InternalConsistencyError(f"relation on fiber {w!r} is not transitive")
        ranked = sorted(idx, key=below.get)
        orders[w] = tuple(dom.vertices[i] for i in ranked)
    return orders


def is_admissible(m, orders):
    """Return ``(flag, witness)``; the witness is the first failing edge pair."""
    rank = {v: r for vs in orders.values() for r, v in enumerate(vs)}
    for e, g in same_image_pairs(m):
        signs = {_sign(rank[x], rank[y]) for x, y in m.paired_endpoints(e, g)}
        if signs == {0} or {-1, 1} <= signs:
            return False, (e, g)
    return True, None


def orders_to_lifting(m, orders):
    ok, witness = is_admissible(m, orders)
    if not ok:
        raise InadmissibleError(f"order collection is not admissible at edges {witness}")
    heights = {v: r for vs in orders.values() for r, v in enumerate(vs, start=1)}
    lift = Lifting(m, heights)
    ok, witness = verify_embedding(m, lift)
    if not ok:
        raise InternalConsistencyError(f"rank lifting is not an embedding at {witness}")
    return lift


def lifting_to_orders(lift):
    m = lift.map
    return {
        w: tuple(sorted(vs, key=lambda v: lift.heights[v]))
        for w, vs in fibers(m).vertex_fibers.items()
    }


def verify_embedding(m, lift):
    """Check that ``|f| x h`` is injective, independently of how ``h`` was built.

    Over each fiber the heights must be distinct. Two same-image edges
    with endpoint height differences ``d1`` and ``d2`` meet in their
    interiors iff ``d1 * d2 < 0``, and coincide iff both are zero.
    """
    h = lift.heights
    for w, vs in fibers(m).vertex_fibers.items():
        if len({h[v] for v in vs}) != len(vs):
            return False, ("vertex", w)
    for e, g in same_image_pairs(m):
        (x1, y1), (x2, y2) = m.paired_endpoints(e, g)
        d1, d2 = h[x1] - h[y1], h[x2] - h[y2]
        if d1 * d2 < 0 or d1 == d2 == 0:
            return False, (e, g)
    return True, None


def brute_force_liftings(m, cap=10_000, bound=DEFAULT_ORACLE_BOUND):
    """Enumerate admissible order collections without using the formula.

    Walks all per-fiber permutations, fiber by fiber and position by
    position, abandoning a partial choice as soon as some same-image edge
    pair is already forced into conflict. Smaller fibers are fixed first;
    results are reported in lexicographic order over per-fiber
    permutations in canonical fiber order. Returns ``(count, collections)``
    with at most ``cap`` collections listed.
    """
    fib = fibers(m).vertex_fibers
    space = prod(factorial(len(vs)) for vs in fib.values())
    if space > bound:
        raise ResourceCapError(f"{space} order collections exceed the oracle bound {bound}")

    hverts = list(fib)
    fiber_of = {v: w for w, vs in fib.items() for v in vs}
    constraints = []
    for e, g in same_image_pairs(m):
        pairs = [(x, y) for x, y in m.paired_endpoints(e, g) if x != y]
        if not pairs:
            return 0, []  # coincident segments: nothing is admissible
        constraints.append(pairs)
    by_fiber = {w: [] for w in hverts}
    for k, pairs in enumerate(constraints):
        for w in {fiber_of[x] for x, _ in pairs}:
            by_fiber[w].append(k)

    schedule = sorted(hverts, key=lambda w: (len(fib[w]), hverts.index(w)))
    rank = {}
    pending = set()

    def relation(x, y):
        rx, ry = rank.get(x), rank.get(y)
        if rx is not None and ry is not None:
            return _sign(rx, ry)
        if rx is not None and y in pending:
            return -1
        if ry is not None and x in pending:
            return 1
        return None

    def consistent(w):
        for k in by_fiber[w]:
            seen = 0
            for x, y in constraints[k]:
                s = relation(x, y)
                if s is None:
                    continue
                if seen and s != seen:
                    return False
                seen = s
        return True

    found = []

    def place(fi):
        if fi == len(schedule):
            found.append(tuple(tuple(sorted(fib[w], key=rank.get)) for w in hverts))
            return
        w = schedule[fi]
        vs = fib[w]
        pending.update(vs)
        _extend(w, vs, 0, fi)
        pending.difference_update(vs)

    def _extend(w, vs, pos, fi):
        if pos == len(vs):
            place(fi + 1)
            return
        for v in vs:
            if v in rank:
                continue
            rank[v] = pos
            pending.discard(v)
            if consistent(w):
                _extend(w, vs, pos + 1, fi)
            pending.add(v)
            del rank[v]

    place(0)
    key = {w: {v: i for i, v in enumerate(fib[w])} for w in hverts}
    found.sort(key=lambda coll: [[key[w][v] for v in vs] for w, vs in zip(hverts, coll)])
    listed = [dict(zip(hverts, coll)) for coll in found[:cap]]
    return len(found), listed


def naive_liftings(m):
    """Plain product-and-filter enumeration; used to check the pruned oracle."""
    from itertools import product

    fib = fibers(m).vertex_fibers
    hverts = list(fib)
    out = []
    for combo in product(*(permutations(fib[w]) for w in hverts)):
        orders = dict(zip(hverts, combo))
        if is_admissible(m, orders)[0]:
            out.append(orders)
    return out
