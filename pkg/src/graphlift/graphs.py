"""Multigraphs and multigraph homomorphisms.

Identifiers are strings. Every collection keeps the order in which items
were declared; that order is the canonical order used for tie-breaking
everywhere downstream (component representatives, variable numbering,
SAT branching, oracle enumeration).

Edges carry an *ordered* endpoint pair ``(first, second)``. The order is
irrelevant for incidence, but it fixes the parametrisation of a domain
edge whose image is a loop: such an edge runs from ``first`` to
``second`` along the loop. For non-loop images the parametrisation is
forced by the vertex map.
"""

from collections import deque
from dataclasses import dataclass, field

from .errors import EndpointMismatchError, InputError


@dataclass(frozen=True)
class Edge:
    id: str
    first: str
    second: str

    @property
    def is_loop(self):
        return self.first == self.second

    def ends(self):
        return (self.first, self.second)


@dataclass(frozen=True)
class MultiGraph:
    vertices: tuple = ()
    edges: tuple = ()
    _vindex: dict = field(init=False, repr=False, compare=False)
    _eindex: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        vertices = tuple(self.vertices)
        edges = tuple(e if isinstance(e, Edge) else Edge(*e) for e in self.edges)
        vindex = {}
        for v in vertices:
            if v in vindex:
                raise InputError(f"duplicate identifier {v!r}")
            vindex[v] = len(vindex)
        eindex = {}
        for e in edges:
            if e.id in eindex:
                raise InputError(f"duplicate identifier {e.id!r}")
            for end in e.ends():
                if end not in vindex:
                    raise InputError(f"unknown identifier {end!r} in edge {e.id!r}")
            eindex[e.id] = len(eindex)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_vindex", vindex)
        object.__setattr__(self, "_eindex", eindex)

    def vertex_index(self, v):
        return self._vindex[v]

    def edge_index(self, e):
        return self._eindex[e]

    def has_vertex(self, v):
        return v in self._vindex

    def has_edge(self, e):
        return e in self._eindex

    def edge(self, eid):
        return self.edges[self._eindex[eid]]

    def degree(self, v):
        """Degree with loops counted twice."""
        return sum((e.first == v) + (e.second == v) for e in self.edges)

    def degrees(self):
        deg = dict.fromkeys(self.vertices, 0)
        for e in self.edges:
            deg[e.first] += 1
            deg[e.second] += 1
        return deg

    def incident(self):
        """Map each vertex to the list of incident edge ids (a loop appears twice)."""
        inc = {v: [] for v in self.vertices}
        for e in self.edges:
            inc[e.first].append(e.id)
            inc[e.second].append(e.id)
        return inc


@dataclass(frozen=True)
class GraphMap:
    """A multigraph homomorphism ``domain -> codomain``.

    Edges always map to edges, so degenerate maps cannot be written down.
    Construction checks totality and that images exist; the homomorphism
    condition itself is checked by :func:`validate`.
    """

    domain: MultiGraph
    codomain: MultiGraph
    vmap: dict
    emap: dict

    def __post_init__(self):
        for v in self.domain.vertices:
            if v not in self.vmap:
                raise InputError(f"unmapped domain vertex {v!r}")
            if not self.codomain.has_vertex(self.vmap[v]):
                raise InputError(f"unknown identifier {self.vmap[v]!r}")
        for e in self.domain.edges:
            if e.id not in self.emap:
                raise InputError(f"unmapped domain edge {e.id!r}")
            if not self.codomain.has_edge(self.emap[e.id]):
                raise InputError(f"unknown identifier {self.emap[e.id]!r}")
        extra = set(self.vmap) - set(self.domain.vertices)
        extra |= set(self.emap) - {e.id for e in self.domain.edges}
        if extra:
            raise InputError(f"unknown identifier {sorted(extra)[0]!r}")

    def oriented(self, eid):
        """Endpoints of a domain edge ordered along its image edge.

        Returns ``(start, end)`` with ``vmap(start)`` the first endpoint of
        the image edge. For loop images the declared order is used.
        """
        e = self.domain.edge(eid)
        c = self.codomain.edge(self.emap[eid])
        if c.is_loop or self.vmap[e.first] == c.first:
            return e.first, e.second
        return e.second, e.first

    def paired_endpoints(self, eid, gid):
        """Pairs ``(x, y)`` of endpoints of two same-image edges lying over the same point."""
        (x1, x2), (y1, y2) = self.oriented(eid), self.oriented(gid)
        return ((x1, y1), (x2, y2))


@dataclass(frozen=True)
class FiberIndex:
    vertex_fibers: dict
    edge_fibers: dict

    def vertex_fiber(self, w):
        return self.vertex_fibers[w]

    def edge_fiber(self, c):
        return self.edge_fibers[c]


def identity_map(g):
    return GraphMap(g, g, {v: v for v in g.vertices}, {e.id: e.id for e in g.edges})


def validate(m):
    """Raise :class:`EndpointMismatchError` unless ``m`` is a homomorphism."""
    for e in m.domain.edges:
        c = m.codomain.edge(m.emap[e.id])
        got = sorted((m.vmap[e.first], m.vmap[e.second]))
        want = sorted((c.first, c.second))
        if got != want:
            raise EndpointMismatchError(
                e.id, f"endpoints map to {got} but image edge {c.id!r} joins {want}"
            )


def fibers(m):
    vf = {w: [] for w in m.codomain.vertices}
    for v in m.domain.vertices:
        vf[m.vmap[v]].append(v)
    ef = {c.id: [] for c in m.codomain.edges}
    for e in m.domain.edges:
        ef[m.emap[e.id]].append(e.id)
    return FiberIndex(
        {w: tuple(vs) for w, vs in vf.items()},
        {c: tuple(es) for c, es in ef.items()},
    )


def restrict_multiple(m):
    """Restrict ``m`` to the preimage of its multiple points.

    Keeps the edges whose image has at least two preimages, their
    endpoints, and every vertex whose image has at least two preimages.
    The codomain shrinks to the image. Liftability is unchanged.
    """
    fib = fibers(m)
    keep_e = [e for e in m.domain.edges if len(fib.edge_fibers[m.emap[e.id]]) >= 2]
    keep_v = {v for v in m.domain.vertices if len(fib.vertex_fibers[m.vmap[v]]) >= 2}
    for e in keep_e:
        keep_v.update(e.ends())
    dom = MultiGraph(
        tuple(v for v in m.domain.vertices if v in keep_v),
        tuple(keep_e),
    )
    image_v = {m.vmap[v] for v in keep_v}
    image_e = {m.emap[e.id] for e in keep_e}
    cod = MultiGraph(
        tuple(w for w in m.codomain.vertices if w in image_v),
        tuple(c for c in m.codomain.edges if c.id in image_e),
    )
    return GraphMap(
        dom,
        cod,
        {v: m.vmap[v] for v in dom.vertices},
        {e.id: m.emap[e.id] for e in dom.edges},
    )


def is_regular(m, v, degrees=None, incident=None):
    """``m`` is bijective on the star of ``v``: same degree and distinct edge images."""
    degrees = degrees or m.domain.degrees()
    incident = incident or m.domain.incident()
    w = m.vmap[v]
    if degrees[v] != m.codomain.degree(w):
        return False
    images = [m.emap[e] for e in incident[v]]
    return len(images) == len(set(images))


def is_stable(m):
    """Return ``(flag, witness)``; the witness is a violating codomain vertex or None."""
    degrees = m.domain.degrees()
    incident = m.domain.incident()
    hdeg = m.codomain.degrees()
    fib = fibers(m)
    for w in m.codomain.vertices:
        bad = sum(not is_regular(m, v, degrees, incident) for v in fib.vertex_fibers[w])
        allowed = 1 if hdeg[w] == 2 else 0
        if bad > allowed:
            return False, w
    return True, None


def _connected(g):
    if not g.vertices:
        return True
    adj = {v: [] for v in g.vertices}
    for e in g.edges:
        adj[e.first].append(e.second)
        adj[e.second].append(e.first)
    seen = {g.vertices[0]}
    queue = deque(seen)
    while queue:
        for u in adj[queue.popleft()]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == len(g.vertices)


def is_tree(g):
    if not g.vertices:
        return False
    if any(e.is_loop for e in g.edges):
        return False
    return len(g.edges) == len(g.vertices) - 1 and _connected(g)


def is_path(g):
    return is_tree(g) and all(d <= 2 for d in g.degrees().values())


def coincident_edges(m):
    """Find two distinct same-image edges running over identical endpoints.

    Such a pair has all endpoint comparisons tied, so no height function
    separates the two segments. Returns the pair of ids or None.
    """
    seen = {}
    for e in m.domain.edges:
        key = (m.emap[e.id], m.oriented(e.id))
        if key in seen:
            return seen[key], e.id
        seen[key] = e.id
    return None
