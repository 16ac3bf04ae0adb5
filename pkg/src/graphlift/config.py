"""Ordered configuration graphs of a map and their symmetric-group action.

The configuration graph of arity ``n`` has one vertex per ordered
``n``-tuple of distinct domain vertices with a common image. An ordered
``n``-tuple of distinct domain edges with a common image edge joins the
tuple of their start points to the tuple of their end points, provided
both tuples have distinct entries. For loop-free codomains this is the
same as asking the edges to be pairwise vertex-disjoint; over a loop it
is the exact condition that the ``n`` moving points never collide.

Internally tuples hold canonical vertex indices, so lexicographic order
on tuples is the canonical order.
"""

from collections import deque
from dataclasses import dataclass, field
from itertools import permutations
from math import perm

from .errors import InputError, ResourceCapError
from .graphs import fibers

DEFAULT_MAX_ARITY = 3
HARD_MAX_ARITY = 5
DEFAULT_MAX_VERTICES = 2_000_000


def falling_factorial_count(m, n):
    return sum(perm(len(vs), n) for vs in fibers(m).vertex_fibers.values())


def right_shift(n):
    """The permutation sending position ``i`` to ``i + 1 mod n``."""
    return tuple((i + 1) % n for i in range(n))


def apply_perm(sigma, t):
    """Move the entry at position ``i`` of ``t`` to position ``sigma[i]``."""
    out = [None] * len(t)
    for i, x in enumerate(t):
        out[sigma[i]] = x
    return tuple(out)


def _distinct(t):
    return len(set(t)) == len(t)


@dataclass
class ConfigGraph:
    map: object
    arity: int
    vertices: list
    edges: list  # (edge id tuple, u index, w index)
    index: dict = field(repr=False)
    adjacency: list = field(repr=False)

    def label(self, t):
        """Translate an index tuple (or vertex number) into domain vertex ids."""
        if isinstance(t, int):
            t = self.vertices[t]
        names = self.map.domain.vertices
        return tuple(names[i] for i in t)

    def tuple_of(self, labels):
        dom = self.map.domain
        return tuple(dom.vertex_index(v) for v in labels)

    def degree(self, i):
        """Degree of vertex number ``i`` with self-loops counted twice."""
        return len(self.adjacency[i])


def build_config(m, n, max_vertices=DEFAULT_MAX_VERTICES, max_arity=DEFAULT_MAX_ARITY):
    if not 2 <= n <= min(max_arity, HARD_MAX_ARITY):
        raise InputError(f"arity {n} outside 2..{min(max_arity, HARD_MAX_ARITY)}")
    estimate = falling_factorial_count(m, n)
    if estimate > max_vertices:
        raise ResourceCapError(
            f"configuration graph of arity {n} would have {estimate} vertices (limit {max_vertices})"
        )
    dom = m.domain
    fib = fibers(m)
    verts = []
    for vs in fib.vertex_fibers.values():
        idx = [dom.vertex_index(v) for v in vs]
        verts.extend(permutations(idx, n))
    verts.sort()
    index = {t: i for i, t in enumerate(verts)}
    if len(verts) != estimate:
        raise AssertionError("vertex count differs from the falling-factorial sum")

    oriented = {
        e.id: tuple(dom.vertex_index(x) for x in m.oriented(e.id)) for e in dom.edges
    }
    edges = []
    adjacency = [[] for _ in verts]
    for es in fib.edge_fibers.values():
        for combo in permutations(es, n):
            starts = tuple(oriented[e][0] for e in combo)
            ends = tuple(oriented[e][1] for e in combo)
            if not (_distinct(starts) and _distinct(ends)):
                continue
            u, w = index[starts], index[ends]
            k = len(edges)
            edges.append((combo, u, w))
            adjacency[u].append((w, k))
            adjacency[w].append((u, k))
    return ConfigGraph(m, n, verts, edges, index, adjacency)


@dataclass
class ComponentMap:
    config: ConfigGraph
    component: list  # vertex number -> component id
    sizes: list
    least: list  # component id -> least vertex number

    def __len__(self):
        return len(self.sizes)

    def of(self, t):
        """Component id of an index tuple."""
        return self.component[self.config.index[t]]


def components(c):
    """Connected components; ids follow the order of each component's least tuple."""
    comp = [-1] * len(c.vertices)
    sizes, least = [], []
    for s in range(len(c.vertices)):
        if comp[s] != -1:
            continue
        cid = len(sizes)
        comp[s] = cid
        count = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            count += 1
            for w, _ in c.adjacency[u]:
                if comp[w] == -1:
                    comp[w] = cid
                    queue.append(w)
        sizes.append(count)
        least.append(s)
    return ComponentMap(c, comp, sizes, least)


def act(c, sigma, comps=None):
    """Action of ``sigma`` on vertex numbers and (if given) on component ids.

    Returns ``(vertex_perm, component_perm)``; ``component_perm`` is None
    when ``comps`` is not supplied.
    """
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(c.arity)):
        raise InputError(f"{sigma!r} is not a permutation of 0..{c.arity - 1}")
    vperm = [c.index[apply_perm(sigma, t)] for t in c.vertices]
    if comps is None:
        return vperm, None
    cperm = [comps.component[vperm[comps.least[k]]] for k in range(len(comps))]
    return vperm, cperm


@dataclass(frozen=True)
class ObstructorWitness:
    arity: int
    path: tuple  # tuples of domain vertex ids

    def lines(self):
        yield f"obstructor {self.arity}"
        for t in self.path:
            yield "step (" + ",".join(t) + ")"


def _bfs_path(c, src, dst, limit):
    parent = {src: None}
    queue = deque([(src, 0)])
    while queue:
        u, d = queue.popleft()
        if u == dst:
            path = []
            while u is not None:
                path.append(u)
                u = parent[u]
            return path[::-1]
        if d >= limit:
            continue
        for w, _ in c.adjacency[u]:
            if w not in parent:
                parent[w] = u
                queue.append((w, d + 1))
    return None


def find_obstructor(m, n, config=None, **caps):
    """Shortest path from some tuple to its right cyclic shift, or None.

    Among all tuples whose shift lies in their own component, the one
    with the shortest path wins; ties go to the canonically least tuple.
    """
    c = config or build_config(m, n, **caps)
    comps = components(c)
    shift = right_shift(n)
    best = None
    for s, t in enumerate(c.vertices):
        target = c.index[apply_perm(shift, t)]
        if comps.component[s] != comps.component[target]:
            continue
        limit = len(c.vertices) if best is None else len(best) - 2
        path = _bfs_path(c, s, target, limit)
        if path is not None and (best is None or len(path) < len(best)):
            best = path
            if len(best) == 2:
                break
    if best is None:
        return None
    return ObstructorWitness(n, tuple(c.label(i) for i in best))


def p_trivial(m, n, config=None, **caps):
    """True iff no non-identity permutation of the coordinates fixes a component."""
    c = config or build_config(m, n, **caps)
    comps = components(c)
    ident = tuple(range(n))
    for sigma in permutations(range(n)):
        if sigma == ident:
            continue
        _, cperm = act(c, sigma, comps)
        if any(cperm[k] == k for k in range(len(comps))):
            return False
    return True


def replay_witness(m, w):
    """Check a witness directly against the domain graph.

    Every step must be realised by ``n`` distinct same-image domain edges
    running coordinatewise between consecutive tuples, and the last tuple
    must be the right cyclic shift of the first.
    """
    n = w.arity
    path = [tuple(t) for t in w.path]
    if len(path) < 2 or any(len(t) != n for t in path):
        return False
    first, last = path[0], path[-1]
    if last != apply_perm(right_shift(n), first) or first == last:
        return False
    for t in path:
        if len(set(t)) != n or len({m.vmap[x] for x in t}) != 1:
            return False
    for a, b in zip(path, path[1:]):
        if not _step_realised(m, a, b):
            return False
    return True


def _step_realised(m, a, b):
    by_image = {}
    for e in m.domain.edges:
        by_image.setdefault(m.emap[e.id], []).append(e.id)
    for es in by_image.values():
        for reverse in (False, True):
            choices = []
            for x, y in zip(a, b):
                want = (y, x) if reverse else (x, y)
                choices.append([e for e in es if m.oriented(e) == want])
            if _distinct_choice(choices, set()):
                return True
    return False


def _distinct_choice(choices, used):
    if not choices:
        return True
    return any(
        _distinct_choice(choices[1:], used | {e}) for e in choices[0] if e not in used
    )
