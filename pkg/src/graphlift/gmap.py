"""Reader and writer for the GMAP v1 text format.

::

    gmap 1
    codomain
    vertex a
    edge ab a b
    domain
    vertex a1
    ...
    map
    v a1 a
    e x ab
    end

``#`` starts a comment. Sections appear exactly once, in the order shown.
"""

import re

from .errors import ParseError
from .graphs import Edge, GraphMap, MultiGraph

IDENT = re.compile(r"[A-Za-z0-9_.+-]{1,64}\Z")
_SECTIONS = ("codomain", "domain", "map")


def _tokens(text):
    """Yield ``(lineno, [(column, token), ...])`` for every non-blank line."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = [(mo.start() + 1, mo.group()) for mo in re.finditer(r"[^ \t\r\n\f\v]+", line)]
        if toks:
            yield lineno, toks


def _ident(tok, lineno):
    col, s = tok
    if not IDENT.match(s):
        raise ParseError(f"invalid identifier {s!r}", lineno, col)
    return s


def _expect_arity(toks, n, lineno):
    if len(toks) != n:
        col = toks[min(len(toks), n) - 1][0] if toks else None
        raise ParseError(
            f"{toks[0][1]!r} takes {n - 1} argument(s), got {len(toks) - 1}", lineno, col
        )


class _GraphBuilder:
    def __init__(self, name):
        self.name = name
        self.vertices = []
        self.vset = set()
        self.edges = []
        self.eset = set()

    def add(self, toks, lineno):
        kw = toks[0][1]
        if kw == "vertex":
            _expect_arity(toks, 2, lineno)
            v = _ident(toks[1], lineno)
            if v in self.vset:
                raise ParseError(f"duplicate identifier {v!r} in {self.name}", lineno, toks[1][0])
            self.vset.add(v)
            self.vertices.append(v)
        elif kw == "edge":
            _expect_arity(toks, 4, lineno)
            eid, a, b = (_ident(t, lineno) for t in toks[1:])
            if eid in self.eset:
                raise ParseError(f"duplicate identifier {eid!r} in {self.name}", lineno, toks[1][0])
            for tok, v in zip(toks[2:], (a, b)):
                if v not in self.vset:
                    raise ParseError(f"unknown identifier {v!r}", lineno, tok[0])
            self.eset.add(eid)
            self.edges.append(Edge(eid, a, b))
        else:
            raise ParseError(f"unexpected keyword {kw!r} in {self.name} section", lineno, toks[0][0])

    def build(self):
        return MultiGraph(tuple(self.vertices), tuple(self.edges))


def parse_gmap(text):
    """Parse GMAP v1 text (``str`` or UTF-8 ``bytes``) into a validated map."""
    from .graphs import validate

    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from None

    lines = iter(_tokens(text))
    first = next(lines, None)
    if first is None:
        raise ParseError("empty input; expected header 'gmap 1'")
    lineno, toks = first
    if [t for _, t in toks] != ["gmap", "1"]:
        raise ParseError("expected header 'gmap 1'", lineno, toks[0][0])

    section = None
    cod = _GraphBuilder("codomain")
    dom = _GraphBuilder("domain")
    vmap, emap = {}, {}
    done = False
    codomain = domain = None
    for lineno, toks in lines:
        kw = toks[0][1]
        if done:
            raise ParseError("content after 'end'", lineno, toks[0][0])
        if kw in _SECTIONS or kw == "end":
            _expect_arity(toks, 1, lineno)
            order = (None, *_SECTIONS, "end")
            expected = order[order.index(section) + 1]
            if kw != expected:
                raise ParseError(f"section {kw!r} out of order; expected {expected!r}", lineno, toks[0][0])
            if kw == "domain":
                codomain = cod.build()
            elif kw == "map":
                domain = dom.build()
            elif kw == "end":
                done = True
            section = kw
            continue
        if section is None:
            raise ParseError(f"{kw!r} before the first section", lineno, toks[0][0])
        if section == "codomain":
            cod.add(toks, lineno)
        elif section == "domain":
            dom.add(toks, lineno)
        else:
            _map_line(toks, lineno, domain, codomain, vmap, emap)
    if not done:
        order = (None, *_SECTIONS, "end")
        raise ParseError(f"missing section {order[order.index(section) + 1]!r}")

    for v in domain.vertices:
        if v not in vmap:
            raise ParseError(f"unmapped domain vertex {v!r}")
    for e in domain.edges:
        if e.id not in emap:
            raise ParseError(f"unmapped domain edge {e.id!r}")
    m = GraphMap(domain, codomain, vmap, emap)
    validate(m)
    return m


def _map_line(toks, lineno, domain, codomain, vmap, emap):
    kw = toks[0][1]
    if kw not in ("v", "e"):
        raise ParseError(f"unexpected keyword {kw!r} in map section", lineno, toks[0][0])
    _expect_arity(toks, 3, lineno)
    src, dst = _ident(toks[1], lineno), _ident(toks[2], lineno)
    if kw == "v":
        known_src, known_dst, table = domain.has_vertex, codomain.has_vertex, vmap
    else:
        known_src, known_dst, table = domain.has_edge, codomain.has_edge, emap
    if not known_src(src):
        raise ParseError(f"unknown identifier {src!r}", lineno, toks[1][0])
    if not known_dst(dst):
        raise ParseError(f"unknown identifier {dst!r}", lineno, toks[2][0])
    if src in table:
        raise ParseError(f"duplicate identifier {src!r}: mapped twice", lineno, toks[1][0])
    table[src] = dst


def _graph_lines(g):
    for v in g.vertices:
        yield f"vertex {v}"
    for e in g.edges:
        yield f"edge {e.id} {e.first} {e.second}"


def serialize_gmap(m):
    """Canonical GMAP v1 text: declaration order preserved, one item per line."""
    out = ["gmap 1", "codomain", *_graph_lines(m.codomain), "domain", *_graph_lines(m.domain), "map"]
    out += [f"v {v} {m.vmap[v]}" for v in m.domain.vertices]
    out += [f"e {e.id} {m.emap[e.id]}" for e in m.domain.edges]
    out.append("end")
    return "\n".join(out) + "\n"
