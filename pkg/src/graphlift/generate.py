"""Random and parametric instance generators for fuzzing and examples.

All generators take a :class:`random.Random` so runs are reproducible.
"""

from math import factorial, prod

from .graphs import Edge, GraphMap, MultiGraph, is_stable, is_tree
from .realize import CnfSpec


def winding_map(length, folds):
    """A cycle of ``length * folds`` vertices wound ``folds`` times round a ``length``-cycle.

    With ``length=3, folds=3`` the pair components split into two circles
    and the transitivity formula is the unsatisfiable ``x & -x`` pattern.
    """
    n = length * folds
    cod = MultiGraph(
        tuple(f"w{i}" for i in range(length)),
        tuple(Edge(f"c{i}", f"w{i}", f"w{(i + 1) % length}") for i in range(length)),
    )
    dom = MultiGraph(
        tuple(f"k{i}" for i in range(n)),
        tuple(Edge(f"g{i}", f"k{i}", f"k{(i + 1) % n}") for i in range(n)),
    )
    return GraphMap(
        dom, cod,
        {f"k{i}": f"w{i % length}" for i in range(n)},
        {f"g{i}": f"c{i % length}" for i in range(n)},
    )


def random_map(rng, max_hverts=12, max_fiber=4, max_space=20_000, loop_prob=0.1, max_edge_fiber=4):
    """A random map with small fibers and no coincident same-image edges.

    ``max_space`` bounds the product of fiber-size factorials so that the
    brute-force oracle stays cheap.
    """
    k = rng.randint(1, max_hverts)
    while True:
        sizes = [rng.randint(1, max_fiber) for _ in range(k)]
        if prod(factorial(s) for s in sizes) <= max_space:
            break
    hverts = [f"w{i}" for i in range(k)]
    fiber = {w: [f"{w}_{j}" for j in range(s)] for w, s in zip(hverts, sizes)}
    hedges = []
    n_edges = rng.randint(0, 2 * k)
    for t in range(n_edges):
        a = rng.choice(hverts)
        b = a if rng.random() < loop_prob else rng.choice(hverts)
        hedges.append(Edge(f"c{t}", a, b))
    gedges, emap, used = [], {}, set()
    for c in hedges:
        for _ in range(rng.randint(1, max_edge_fiber)):
            x, y = rng.choice(fiber[c.first]), rng.choice(fiber[c.second])
            if (c.id, x, y) in used:
                continue
            used.add((c.id, x, y))
            if not c.is_loop:
                used.add((c.id, y, x))
            gid = f"g{len(gedges)}"
            gedges.append(Edge(gid, x, y))
            emap[gid] = c.id
    gverts = [v for w in hverts for v in fiber[w]]
    rng.shuffle(gverts)
    return GraphMap(
        MultiGraph(tuple(gverts), tuple(gedges)),
        MultiGraph(tuple(hverts), tuple(hedges)),
        {v: v.split("_")[0] for v in gverts},
        emap,
    )


def random_tree_to_path(rng, max_vertices=14):
    """A random tree with a map to the path spanned by its image."""
    n = rng.randint(1, max_vertices)
    level = [0]
    parent = [None]
    for v in range(1, n):
        p = rng.randrange(v)
        parent.append(p)
        level.append(level[p] + rng.choice((-1, 1)))
    lo = min(level)
    level = [x - lo for x in level]
    top = max(level)
    hverts = tuple(f"p{i}" for i in range(top + 1))
    hedges = tuple(Edge(f"s{i}", f"p{i}", f"p{i + 1}") for i in range(top))
    gverts = tuple(f"t{v}" for v in range(n))
    gedges, emap = [], {}
    for v in range(1, n):
        gid = f"t{parent[v]}t{v}"
        gedges.append(Edge(gid, f"t{parent[v]}", f"t{v}"))
        emap[gid] = f"s{min(level[v], level[parent[v]])}"
    return GraphMap(
        MultiGraph(gverts, tuple(gedges)),
        MultiGraph(hverts, hedges),
        {f"t{v}": f"p{level[v]}" for v in range(n)},
        emap,
    )


def random_stable_tree_to_path(rng, max_vertices=14, tries=10_000):
    """A random stable map from a tree onto a path.

    The tree is assembled from a few "special" vertices, at most one per
    interior level, joined by monotone arcs; arcs may also run out to a
    fresh leaf over either end of the path. Every other vertex is then
    regular. The result is checked with :func:`is_stable`.
    """
    for _ in range(tries):
        m = _stable_tree_attempt(rng, max_vertices)
        if m is not None and is_tree(m.domain) and is_stable(m)[0]:
            return m
    raise RuntimeError("no stable map found")


def _stable_tree_attempt(rng, max_vertices):
    top = rng.randint(1, 6)
    interior = list(range(1, top))
    k = min(len(interior), rng.choice((0, 1, 2, 3, 3, 4, 4, 5)))
    special = rng.sample(interior, k)
    level, edges = [], []

    def vertex(l):
        level.append(l)
        return len(level) - 1

    def arc(u, l):
        """Monotone arc from vertex ``u`` to a new or given endpoint at level ``l``."""
        step = 1 if l > level[u] else -1
        prev = u
        for x in range(level[u] + step, l, step):
            cur = vertex(x)
            edges.append((prev, cur))
            prev = cur
        return prev

    if not special:
        u = vertex(0)
        end = arc(u, top)
        edges.append((end, vertex(top)))
    else:
        nodes = [vertex(l) for l in special]
        for i in range(1, k):
            parent = nodes[rng.randrange(i)]
            last = arc(nodes[i], level[parent])
            edges.append((last, parent))
        for u in nodes:
            for _ in range(rng.choice((0, 1, 1, 2, 2, 3))):
                l = rng.choice((0, top))
                edges.append((arc(u, l), vertex(l)))
    if len(level) > max_vertices:
        return None
    hverts = tuple(f"p{i}" for i in range(top + 1))
    hedges = tuple(Edge(f"s{i}", f"p{i}", f"p{i + 1}") for i in range(top))
    gverts = tuple(f"t{v}" for v in range(len(level)))
    gedges = tuple(Edge(f"t{a}t{b}", f"t{a}", f"t{b}") for a, b in edges)
    return GraphMap(
        MultiGraph(gverts, gedges),
        MultiGraph(hverts, hedges),
        {f"t{v}": f"p{level[v]}" for v in range(len(level))},
        {f"t{a}t{b}": f"s{min(level[a], level[b])}" for a, b in edges},
    )


def random_cnf_spec(rng, max_vars=8, max_pairs=24):
    """A shape-valid spec: distinct variables per implication, twins included."""
    n = rng.randint(3, max_vars)
    triples = []
    for _ in range(rng.randint(0, max_pairs)):
        vs = rng.sample(range(1, n + 1), 3)
        t = tuple(v if rng.random() < 0.5 else -v for v in vs)
        triples.append(t)
        triples.append(tuple(-l for l in t))
    return CnfSpec(n, tuple(triples))
