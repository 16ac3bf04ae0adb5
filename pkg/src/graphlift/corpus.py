"""Built-in instances from the literature, emitted as GMAP text."""

from .errors import InputError
from .gmap import serialize_gmap
from .graphs import Edge, GraphMap, MultiGraph
from .realize import CnfSpec, realize

# (x1 & x2) -> x3 and friends: four twin pairs, unsatisfiable as a whole
NONTRIVIAL_GAMMA_CNF = CnfSpec(
    3,
    (
        (1, 2, 3), (-1, -2, -3),
        (1, 2, -3), (-1, -2, 3),
        (1, -3, 2), (-1, 3, -2),
        (1, -2, -3), (-1, 2, 3),
    ),
)


def _letter_map(dom_vertices, dom_edges, cod_vertices, cod_edges):
    """Domain vertex ``b3`` maps to ``b``; each domain edge to the codomain edge on its image."""
    vmap = {v: v.rstrip("0123456789") for v in dom_vertices}
    by_ends = {frozenset((a, b)): eid for eid, a, b in cod_edges}
    emap = {eid: by_ends[frozenset((vmap[a], vmap[b]))] for eid, a, b in dom_edges}
    return GraphMap(
        MultiGraph(tuple(dom_vertices), tuple(Edge(*e) for e in dom_edges)),
        MultiGraph(tuple(cod_vertices), tuple(Edge(*e) for e in cod_edges)),
        vmap,
        emap,
    )


def sieklucki():
    chains = [
        ["a3", "b4", "c4", "d3", "c3", "b3", "a1", "b1", "c1", "d1"],
        ["c3", "b2", "a2"],
        ["b2", "c2", "d2"],
    ]
    verts = ["a1", "a2", "a3", "b1", "b2", "b3", "b4", "c1", "c2", "c3", "c4", "d1", "d2", "d3"]
    edges = []
    for chain in chains:
        for a, b in zip(chain, chain[1:]):
            edges.append((f"{a}-{b}", a, b))
    return _letter_map(verts, edges, ["a", "b", "c", "d"], [("ab", "a", "b"), ("bc", "b", "c"), ("cd", "c", "d")])


def tripod18():
    """An 18-gon wound three times around a hexagon that walks around a tripod."""
    hexagon = ["a", "O", "b", "O", "c", "O"]
    verts = [f"k{i}" for i in range(18)]
    vmap = {f"k{i}": hexagon[i % 6] for i in range(18)}
    edges, emap = [], {}
    for i in range(18):
        a, b = f"k{i}", f"k{(i + 1) % 18}"
        leg = vmap[a] if vmap[a] != "O" else vmap[b]
        eid = f"k{i}k{(i + 1) % 18}"
        edges.append(Edge(eid, a, b))
        emap[eid] = f"O{leg}"
    cod = MultiGraph(("O", "a", "b", "c"), (Edge("Oa", "O", "a"), Edge("Ob", "O", "b"), Edge("Oc", "O", "c")))
    return GraphMap(MultiGraph(tuple(verts), tuple(edges)), cod, vmap, emap)


def double_cover():
    return _letter_map(
        ["u1", "v1", "u2", "v2"],
        [("e1", "u1", "v1"), ("e2", "u2", "v2")],
        ["u", "v"],
        [("c", "u", "v")],
    )


def nontrivial_gamma():
    """Realisation of the four-twin-pair formula with segment components."""
    return realize(NONTRIVIAL_GAMMA_CNF, close_cycles=False)


def counterexample_cycles():
    """The same map with every segment closed into a circle."""
    return realize(NONTRIVIAL_GAMMA_CNF)


CORPUS = {
    "sieklucki": sieklucki,
    "tripod18": tripod18,
    "double-cover": double_cover,
    "nontrivial-gamma": nontrivial_gamma,
    "counterexample-cycles": counterexample_cycles,
}


def corpus_map(name):
    try:
        return CORPUS[name]()
    except KeyError:
        raise InputError(f"unknown corpus instance {name!r}; try 'list'") from None


def corpus_text(name):
    if name == "list":
        return "".join(f"{n}\n" for n in CORPUS)
    return serialize_gmap(corpus_map(name))
