"""Compile implication-shaped 3-CNF formulas into graph maps.

A spec is a list of implications ``(a and b) -> c`` over signed variable
indices. :func:`realize` builds a map whose transitivity formula is the
input formula up to renaming and duplicate clauses; each twin pair of
implications becomes one codomain vertex with a three-point fiber, and
each variable becomes a cycle of doubled edges through the vertices
whose pairs it labels.
"""

import re
from dataclasses import dataclass, field

from .errors import GammaUndefinedError, ParseError, ShapeError
from .gamma import PairComponents, build_gamma, clause_key
from .graphs import Edge, GraphMap, MultiGraph, fibers

# position pairs of the three literals within a twin-reduced triple
_SLOTS = ((1, 2), (2, 3), (1, 3))


@dataclass(frozen=True)
class CnfSpec:
    num_vars: int
    triples: tuple
    warnings: tuple = ()

    def clauses(self):
        """Disjunctive form ``-a v -b v c`` of every implication."""
        return [(-a, -b, c) for a, b, c in self.triples]

    def lines(self):
        yield "gcnf 1"
        yield f"vars {self.num_vars}"
        for t in self.triples:
            yield "imp " + " ".join(map(str, t))
        yield "end"


def parse_cnf(text):
    if isinstance(text, (bytes, bytearray)):
        text = bytes(text).decode("utf-8")
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split("#", 1)[0].split()
        if toks:
            rows.append((lineno, toks))
    if not rows or rows[0][1] != ["gcnf", "1"]:
        raise ParseError("expected header 'gcnf 1'", rows[0][0] if rows else None)
    if len(rows) < 2 or rows[1][1][0] != "vars" or len(rows[1][1]) != 2:
        raise ParseError("expected 'vars <n>'", rows[1][0] if len(rows) > 1 else None)
    lineno, toks = rows[1]
    if not re.fullmatch(r"\d+", toks[1]):
        raise ParseError(f"invalid variable count {toks[1]!r}", lineno)
    n = int(toks[1])
    triples = []
    ended = False
    for lineno, toks in rows[2:]:
        if ended:
            raise ParseError("content after 'end'", lineno)
        if toks == ["end"]:
            ended = True
            continue
        if toks[0] != "imp" or len(toks) != 4:
            raise ParseError(f"expected 'imp <l1> <l2> <l3>', got {' '.join(toks)!r}", lineno)
        lits = []
        for tok in toks[1:]:
            if not re.fullmatch(r"[+-]?\d+", tok):
                raise ParseError(f"invalid literal {tok!r}", lineno)
            lit = int(tok)
            if lit == 0:
                raise ParseError("zero literal", lineno)
            if abs(lit) > n:
                raise ParseError(f"variable index {abs(lit)} out of range 1..{n}", lineno)
            lits.append(lit)
        triples.append(tuple(lits))
    if not ended:
        raise ParseError("missing final 'end'")
    return CnfSpec(n, tuple(triples))


def _twin(t):
    return tuple(-l for l in t)


def validate_shape(c, strict=False):
    """Enforce distinct variables per implication and closure under negation.

    In permissive mode a missing negated twin is appended with a warning.
    """
    for t in c.triples:
        if len({abs(l) for l in t}) != 3:
            raise ShapeError(f"implication {t} repeats a variable")
    present = set(c.triples)
    triples = list(c.triples)
    warnings = list(c.warnings)
    for t in c.triples:
        tw = _twin(t)
        if tw in present:
            continue
        if strict:
            raise ShapeError(f"implication {t} has no negated twin {tw}")
        present.add(tw)
        triples.append(tw)
        warnings.append(f"added missing twin {tw} of {t}")
    return CnfSpec(c.num_vars, tuple(triples), tuple(warnings))


def twin_reduce(c):
    """One representative per twin pair, in order of first appearance."""
    kept, seen = [], set()
    for t in c.triples:
        if t in seen:
            continue
        kept.append(t)
        seen.add(t)
        seen.add(_twin(t))
    return kept


def _lit_sets(reduced):
    """Literal sets: variable -> ordered list of (pair index j, i, k)."""
    sets = {}
    for j, triple in enumerate(reduced, start=1):
        for lit, (i, k) in zip(triple, _SLOTS):
            if lit < 0:
                i, k = k, i
            sets.setdefault(abs(lit), []).append((j, i, k))
    return dict(sorted(sets.items()))


def gvertex(j, i):
    return f"v{j}_{i}"


def hvertex(j):
    return f"v{j}"


def realize(c, close_cycles=True):
    """Build the realising map for a shape-valid spec.

    With ``close_cycles=False`` the closing edge of every cycle is left
    out, so the pair components are segments instead of circles; the
    formula is unchanged whenever every variable labels at least two pairs.
    """
    reduced = twin_reduce(c)
    hv = [hvertex(j) for j in range(1, len(reduced) + 1)]
    gv = [gvertex(j, i) for j in range(1, len(reduced) + 1) for i in (1, 2, 3)]
    vmap = {gvertex(j, i): hvertex(j) for j in range(1, len(reduced) + 1) for i in (1, 2, 3)}
    hedges, gedges, emap = [], [], {}
    for l, members in _lit_sets(reduced).items():
        s = len(members)
        steps = range(1, s + 1) if close_cycles else range(1, s)
        for r in steps:
            (j1, i1, k1), (j2, i2, k2) = members[r - 1], members[r % s]
            eid = f"e{l}_{r}"
            hedges.append(Edge(eid, hvertex(j1), hvertex(j2)))
            for tag, a, b in (("1", i1, i2), ("2", k1, k2)):
                gid = f"{eid}_{tag}"
                gedges.append(Edge(gid, gvertex(j1, a), gvertex(j2, b)))
                emap[gid] = eid
    return GraphMap(MultiGraph(tuple(gv), tuple(gedges)), MultiGraph(tuple(hv), tuple(hedges)), vmap, emap)


def correspondence(c):
    """Variable -> first pair ``(x, y)`` (domain ids) of its literal set."""
    out = {}
    for l, members in _lit_sets(twin_reduce(c)).items():
        j, i, k = members[0]
        out[l] = (gvertex(j, i), gvertex(j, k))
    return out


PROPERTIES = (
    "p2_trivial",
    "gamma_equivalent",
    "edge_preimages_2",
    "vertex_preimages_3",
    "domain_degree_4",
    "codomain_degree_6",
    "pairs_2_regular",
)


@dataclass
class RealizationReport:
    properties: dict
    correspondence: dict = field(default_factory=dict)
    dropped_vars: list = field(default_factory=list)
    details: list = field(default_factory=list)

    @property
    def gamma_equivalent(self):
        return self.properties["gamma_equivalent"]

    @property
    def ok(self):
        return all(self.properties.values())

    def lines(self):
        for name in PROPERTIES:
            yield f"{name}: {'pass' if self.properties[name] else 'fail'}"
        for l, pair in self.correspondence.items():
            yield f"var {l} ({pair[0]},{pair[1]})"
        for l in self.dropped_vars:
            yield f"dropped_var {l}"
        for d in self.details:
            yield f"detail: {d}"


def verify_realization(m, c):
    props = dict.fromkeys(PROPERTIES, False)
    details = []
    fib = fibers(m)
    corr = correspondence(c)
    dropped = [l for l in range(1, c.num_vars + 1) if l not in corr]

    pairs = PairComponents.of(m)
    try:
        g = build_gamma(m, pairs=pairs)
        props["p2_trivial"] = True
    except GammaUndefinedError:
        g = None
        details.append("pair covering is nontrivial")

    if g is not None:
        props["gamma_equivalent"] = _gamma_matches(m, c, g, corr, details)

    props["edge_preimages_2"] = all(len(es) == 2 for es in fib.edge_fibers.values())
    props["vertex_preimages_3"] = all(len(vs) == 3 for vs in fib.vertex_fibers.values())
    props["domain_degree_4"] = all(d == 4 for d in m.domain.degrees().values())
    props["codomain_degree_6"] = all(d == 6 for d in m.codomain.degrees().values())
    cfg = pairs.config
    props["pairs_2_regular"] = all(cfg.degree(i) == 2 for i in range(len(cfg.vertices)))
    for name in PROPERTIES[2:]:
        if not props[name]:
            details.append(f"{name} violated")
    return RealizationReport(props, corr, dropped, details)


def _gamma_matches(m, c, g, corr, details):
    dom = m.domain
    rename = {}
    for l, (x, y) in corr.items():
        if not (dom.has_vertex(x) and dom.has_vertex(y)):
            details.append(f"variable {l}: pair ({x},{y}) missing from domain")
            return False
        lit = g.pair_literal(dom.vertex_index(x), dom.vertex_index(y))
        if abs(lit) in rename:
            details.append(f"variables {rename[abs(lit)]} and {l} share a component orbit")
            return False
        rename[abs(lit)] = l if lit > 0 else -l
    if len(rename) != g.num_vars:
        details.append(f"formula has {g.num_vars} variables, correspondence covers {len(rename)}")
        return False

    def translate(cl):
        return clause_key(tuple((1 if l > 0 else -1) * rename[abs(l)] for l in cl))

    got = {translate(cl) for cl in g.clauses}
    want = {clause_key(cl) for cl in c.clauses()}
    if got != want:
        details.append(f"clause sets differ: {len(got - want)} extra, {len(want - got)} missing")
        return False
    return True
