"""Instance corpora and independent oracles shared by the test modules.

The oracles here deliberately avoid the package's own graph machinery:
configuration graphs are rebuilt from raw edge lists with networkx, and
formulas are checked by truth tables.
"""

import random
from itertools import permutations, product
from math import factorial, prod

import networkx as nx

from graphlift.corpus import CORPUS
from graphlift.generate import random_cnf_spec, random_map, winding_map
from graphlift.graphs import Edge, GraphMap, MultiGraph, fibers
from graphlift.realize import realize


def truth_table_models(clauses, num_vars):
    out = []
    for bits in product((0, 1), repeat=num_vars):
        if all(any((bits[abs(l) - 1] == 1) == (l > 0) for l in c) for c in clauses):
            out.append(bits)
    return out


def oracle_space(m):
    return prod(factorial(len(vs)) for vs in fibers(m).vertex_fibers.values())


def _orient(m, e):
    """Start and end of a domain edge, read against its image edge."""
    c = next(h for h in m.codomain.edges if h.id == m.emap[e.id])
    if c.first == c.second or m.vmap[e.first] == c.first:
        return e.first, e.second
    return e.second, e.first


def nx_config(m, n):
    """Arity-``n`` configuration graph rebuilt from scratch on vertex names."""
    g = nx.MultiGraph()
    groups = {}
    for v in m.domain.vertices:
        groups.setdefault(m.vmap[v], []).append(v)
    for vs in groups.values():
        g.add_nodes_from(permutations(vs, n))
    by_image = {}
    for e in m.domain.edges:
        by_image.setdefault(m.emap[e.id], []).append(_orient(m, e))
    for segs in by_image.values():
        for combo in permutations(range(len(segs)), n):
            a = tuple(segs[i][0] for i in combo)
            b = tuple(segs[i][1] for i in combo)
            if len(set(a)) == n and len(set(b)) == n:
                g.add_edge(a, b)
    return g


def nx_has_obstructor(m, n):
    g = nx_config(m, n)
    comp = {}
    for k, cc in enumerate(nx.connected_components(g)):
        for t in cc:
            comp[t] = k
    return any(comp[t] == comp[t[-1:] + t[:-1]] for t in g.nodes)


def small_cnf_map(rng):
    c = random_cnf_spec(rng, max_vars=4, max_pairs=5)
    return realize(c, close_cycles=rng.random() < 0.5)


def mixed_instance(rng):
    """One random map from a mix of families, with a cheap brute-force oracle."""
    kind = rng.randrange(10)
    if kind < 7:
        return random_map(
            rng,
            max_hverts=rng.choice((4, 8, 12)),
            max_space=2000,
            max_edge_fiber=rng.choice((3, 6, 10)),
            loop_prob=rng.choice((0.0, 0.1, 0.25)),
        )
    if kind < 9:
        return small_cnf_map(rng)
    return winding_map(rng.randint(2, 4), rng.choice((1, 2, 3)))


def mixed_corpus(seed, count, predicate=None):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        m = mixed_instance(rng)
        if predicate is None or predicate(m):
            out.append(m)
    return out


def _single(cod_vertices, cod_edges, dom_vertices, dom_edges, vmap, emap):
    return GraphMap(
        MultiGraph(tuple(dom_vertices), tuple(Edge(*e) for e in dom_edges)),
        MultiGraph(tuple(cod_vertices), tuple(Edge(*e) for e in cod_edges)),
        vmap,
        emap,
    )


def loop_swap():
    """Two points on one vertex joined by two edges over a loop, swapping them."""
    return _single(
        ["w"], [("c", "w", "w")],
        ["x", "y"], [("g1", "x", "y"), ("g2", "y", "x")],
        {"x": "w", "y": "w"}, {"g1": "c", "g2": "c"},
    )


def three_cycle_on_loop():
    """Three points cyclically permuted by three edges over a loop."""
    return _single(
        ["w"], [("c", "w", "w")],
        ["x", "y", "z"], [("g1", "x", "y"), ("g2", "y", "z"), ("g3", "z", "x")],
        {v: "w" for v in "xyz"}, {"g1": "c", "g2": "c", "g3": "c"},
    )


def crossing_pair():
    """Two disjoint segments over one edge; liftable in two ways."""
    return _single(
        ["u", "v"], [("c", "u", "v")],
        ["u1", "u2", "v1", "v2"], [("g1", "u1", "v1"), ("g2", "u2", "v2")],
        {"u1": "u", "u2": "u", "v1": "v", "v2": "v"}, {"g1": "c", "g2": "c"},
    )


def adversarial():
    """Hand-picked maps exercising loops, windings and the literature examples."""
    maps = [f() for f in CORPUS.values()]
    maps += [winding_map(a, b) for a in (2, 3, 4) for b in (1, 2, 3)]
    maps += [loop_swap(), three_cycle_on_loop(), crossing_pair()]
    maps += OBSTRUCTED_STABLE_TREES
    return maps


def nx_gamma(m, rng=None):
    """Transitivity formula rebuilt from networkx components.

    Orbit representatives are picked at random when ``rng`` is given,
    otherwise the first component met. Returns ``(num_vars, clause set)``
    with clauses as sorted literal tuples, or None if some component is
    fixed by the swap.
    """
    g = nx_config(m, 2)
    comp = {}
    for k, cc in enumerate(nx.connected_components(g)):
        for t in cc:
            comp[t] = k
    swap = {comp[t]: comp[t[::-1]] for t in g.nodes}
    if any(k == s for k, s in swap.items()):
        return None
    literal = {}
    ks = sorted(swap)
    if rng is not None:
        rng.shuffle(ks)
    for k in ks:
        if k in literal:
            continue
        v = len(literal) // 2 + 1
        literal[k], literal[swap[k]] = v, -v
    groups = {}
    for v in m.domain.vertices:
        groups.setdefault(m.vmap[v], []).append(v)
    clauses = set()
    for vs in groups.values():
        for a, b, c in permutations(vs, 3):
            C, D, E = comp[(a, b)], comp[(b, c)], comp[(a, c)]
            if C != E and D != E:
                clauses.add(tuple(sorted((-literal[C], -literal[D], literal[E]))))
    return len(literal) // 2, clauses


def level_tree(levels, edges):
    """Tree on vertices ``t0, t1, ...`` mapped to the path ``p0 - p1 - ...`` by level."""
    top = max(levels)
    return _single(
        [f"p{i}" for i in range(top + 1)],
        [(f"s{i}", f"p{i}", f"p{i + 1}") for i in range(top)],
        [f"t{v}" for v in range(len(levels))],
        [(f"t{a}t{b}", f"t{a}", f"t{b}") for a, b in edges],
        {f"t{v}": f"p{l}" for v, l in enumerate(levels)},
        {f"t{a}t{b}": f"s{min(levels[a], levels[b])}" for a, b in edges},
    )


# stable trees over a path that carry a 2-obstructor; the smallest found
# by seeded search over the stable-tree generator (none exist below 18 vertices
# in several hundred thousand samples)
OBSTRUCTED_STABLE_TREES = [
    level_tree(
        [3, 1, 4, 2, 2, 2, 3, 4, 5, 3, 2, 1, 0, 1, 0, 3, 4, 5],
        [(1, 4), (4, 0), (2, 0), (3, 0), (1, 5), (5, 6), (6, 7), (7, 8), (2, 9), (9, 10),
         (10, 11), (11, 12), (3, 13), (13, 14), (3, 15), (15, 16), (16, 17)],
    ),
    level_tree(
        [3, 2, 4, 1, 3, 2, 1, 0, 4, 5, 3, 2, 1, 0, 2, 3, 4, 5],
        [(1, 0), (2, 4), (4, 1), (3, 1), (0, 5), (5, 6), (6, 7), (0, 8), (8, 9), (2, 10),
         (10, 11), (11, 12), (12, 13), (3, 14), (14, 15), (15, 16), (16, 17)],
    ),
    level_tree(
        [3, 4, 1, 2, 2, 3, 2, 1, 0, 2, 3, 4, 5, 3, 4, 5, 1, 0],
        [(1, 0), (2, 4), (4, 0), (3, 0), (1, 5), (5, 6), (6, 7), (7, 8), (2, 9), (9, 10),
         (10, 11), (11, 12), (3, 13), (13, 14), (14, 15), (3, 16), (16, 17)],
    ),
]
