"""Command-line interface.

Exit codes: 0 liftable (or success), 1 unliftable (or a failed check),
2 input error, 3 resource cap exceeded.
"""

import argparse
import sys
import time
from dataclasses import dataclass, field

from . import config as cfg
from .corpus import corpus_text
from .errors import InputError, InternalConsistencyError, ResourceCapError
from .gamma import enumerate_models, nu3_closure, status
from .gmap import parse_gmap, serialize_gmap
from .graphs import coincident_edges, is_path, is_stable, is_tree, restrict_multiple
from .lifting import assignment_to_orders, order_lines, orders_to_lifting, verify_embedding
from .realize import parse_cnf, realize, validate_shape, verify_realization

EXIT_LIFTABLE, EXIT_UNLIFTABLE, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


@dataclass
class AnalysisReport:
    verdict: str = "unliftable"
    reason: str = "none"
    p2_trivial: bool = False
    restricted: bool = True
    gamma_vars: int = None
    gamma_clauses: int = None
    gamma_status: str = None
    model_count: int = None
    count_truncated: bool = False
    orders: dict = None
    lifting: object = None
    witnesses: list = field(default_factory=list)
    coincident: tuple = None
    shortcut: str = None
    shortcut_agrees: bool = None
    elapsed: float = 0.0

    def lines(self):
        yield f"verdict: {self.verdict}"
        yield f"reason: {self.reason}"
        yield f"restricted: {int(self.restricted)}"
        yield f"p2_trivial: {int(self.p2_trivial)}"
        if self.gamma_status is not None:
            if self.gamma_vars is not None:
                yield f"gamma_vars: {self.gamma_vars}"
                yield f"gamma_clauses: {self.gamma_clauses}"
            yield f"gamma_status: {self.gamma_status}"
        if self.model_count is not None:
            yield f"model_count: {self.model_count}{'+' if self.count_truncated else ''}"
        if self.shortcut is not None:
            yield f"shortcut: {self.shortcut}"
            if self.shortcut_agrees is not None:
                yield f"shortcut_agrees: {int(self.shortcut_agrees)}"
        if self.coincident:
            yield f"coincident_edges: {self.coincident[0]} {self.coincident[1]}"
        for w in self.witnesses:
            yield from w.lines()
        if self.orders is not None:
            yield from order_lines(self.orders)
        if self.lifting is not None:
            yield from self.lifting.lines()


def analyze(m, restrict=True, obstructors=2, count=None, stable_shortcut=False, fast=False,
            max_config_vertices=cfg.DEFAULT_MAX_VERTICES):
    """Decide liftability of ``m`` and collect the certificate."""
    start = time.perf_counter()
    caps = dict(max_vertices=max_config_vertices, max_arity=max(obstructors, cfg.DEFAULT_MAX_ARITY))
    rep = AnalysisReport(restricted=restrict)
    work = restrict_multiple(m) if restrict else m

    shortcut = False
    if stable_shortcut:
        shortcut = is_stable(m)[0] and is_tree(m.domain) and is_path(m.codomain)
        rep.shortcut = "applied" if shortcut else "not-applicable"

    witness2 = cfg.find_obstructor(work, 2, **caps)
    rep.p2_trivial = witness2 is None
    for n in range(3, obstructors + 1):
        w = cfg.find_obstructor(work, n, **caps)
        if w is not None:
            rep.witnesses.append(w)
    if witness2 is not None:
        rep.witnesses.insert(0, witness2)
        rep.reason = "two-obstructor"
        rep.gamma_status = "undefined"
        if shortcut and not fast:
            rep.shortcut_agrees = True
        rep.elapsed = time.perf_counter() - start
        return rep

    pair = coincident_edges(work)
    if pair is not None:
        # two segments over the same edge with tied endpoints cannot be separated by ranks
        rep.reason = "coincident-edges"
        rep.coincident = pair
        rep.elapsed = time.perf_counter() - start
        return rep

    g, st, model = status(work, **caps)
    rep.gamma_vars, rep.gamma_clauses, rep.gamma_status = g.num_vars, len(g.clauses), st
    if count is not None:
        models, truncated = enumerate_models(g, count)
        rep.model_count, rep.count_truncated = len(models), truncated
    if shortcut and not fast:
        rep.shortcut_agrees = st == "sat"
    if model is None:
        if shortcut and fast:
            raise InternalConsistencyError("no 2-obstructor on a stable tree-to-path map, yet no lifting")
        rep.reason = "gamma-unsat"
        rep.elapsed = time.perf_counter() - start
        return rep

    orders = assignment_to_orders(work, g, model)
    full_orders = {}
    for w in m.codomain.vertices:
        fiber = [v for v in m.domain.vertices if m.vmap[v] == w]
        full_orders[w] = orders.get(w, tuple(fiber))
    lift = orders_to_lifting(m, full_orders)
    ok, bad = verify_embedding(m, lift)
    if not ok:
        raise InternalConsistencyError(f"emitted lifting fails verification at {bad}")
    rep.verdict = "liftable"
    rep.orders = full_orders
    rep.lifting = lift
    rep.elapsed = time.perf_counter() - start
    return rep


def _read(path):
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _emit(lines, out):
    for line in lines:
        out.write(line + "\n")


def cmd_analyze(args, out):
    m = parse_gmap(_read(args.file))
    rep = analyze(
        m,
        restrict=not args.no_restrict,
        obstructors=args.obstructors,
        count=args.count,
        stable_shortcut=args.stable_shortcut,
        fast=args.fast,
        max_config_vertices=args.max_config_vertices,
    )
    _emit(rep.lines(), out)
    return EXIT_LIFTABLE if rep.verdict == "liftable" else EXIT_UNLIFTABLE


def cmd_obstruct(args, out):
    m = parse_gmap(_read(args.file))
    caps = dict(max_vertices=args.max_config_vertices, max_arity=max(args.n, cfg.DEFAULT_MAX_ARITY))
    w = cfg.find_obstructor(m, args.n, **caps)
    trivial = cfg.p_trivial(m, args.n, **caps)
    out.write(f"p{args.n}_trivial: {int(trivial)}\n")
    if w is None:
        out.write("obstructor: none\n")
        return EXIT_LIFTABLE
    _emit(w.lines(), out)
    return EXIT_UNLIFTABLE


def cmd_gamma(args, out):
    m = parse_gmap(_read(args.file))
    g, st, _ = status(m, max_vertices=args.max_config_vertices)
    if g is None:
        out.write("gamma_status: undefined\n")
        return EXIT_UNLIFTABLE
    _emit(g.lines(st), out)
    return EXIT_LIFTABLE if st == "sat" else EXIT_UNLIFTABLE


def cmd_nu3(args, out):
    m = parse_gmap(_read(args.file))
    mu2_zero = cfg.p_trivial(m, 2, max_vertices=args.max_config_vertices)
    nu = nu3_closure(m, max_vertices=args.max_config_vertices)
    out.write(f"mu2: {0 if mu2_zero else 1}\n")
    out.write(f"nu3: {0 if nu.vanishes else 1}\n")
    out.write(f"merges: {len(nu.merges)}\n")
    for (a, b, c), (kept, absorbed) in nu.merges:
        out.write(f"merge ({a},{b},{c}) {kept} {absorbed}\n")
    return 0


def cmd_realize(args, out):
    spec = validate_shape(parse_cnf(_read(args.file)), strict=args.strict)
    for w in spec.warnings:
        sys.stderr.write(f"warning: {w}\n")
    m = realize(spec)
    out.write(serialize_gmap(m))
    report = verify_realization(m, spec)
    _emit(report.lines(), sys.stderr)
    return 0 if report.ok else 1


def cmd_corpus(args, out):
    out.write(corpus_text(args.name))
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="graphlift", description="Decide liftability of graph maps to embeddings.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_cap(sp):
        sp.add_argument("--max-config-vertices", type=int, default=cfg.DEFAULT_MAX_VERTICES, metavar="N")

    for name in ("analyze", "lift"):
        sp = sub.add_parser(name, help="full liftability analysis" if name == "analyze" else "alias of analyze")
        sp.add_argument("file", help="GMAP file, or - for stdin")
        sp.add_argument("--no-restrict", action="store_true", help="skip restriction to multiple points")
        sp.add_argument("--obstructors", type=int, default=2, metavar="N", help="also search 3..N obstructors (N <= 5)")
        sp.add_argument("--count", type=int, nargs="?", const=10_000, default=None, metavar="CAP",
                        help="count liftings up to isotopy (capped)")
        sp.add_argument("--stable-shortcut", action="store_true")
        sp.add_argument("--fast", action="store_true", help="skip the cross-check of --stable-shortcut")
        add_cap(sp)
        sp.set_defaults(func=cmd_analyze)
    sp = sub.add_parser("obstruct", help="search an n-obstructor")
    sp.add_argument("file")
    sp.add_argument("n", type=int)
    add_cap(sp)
    sp.set_defaults(func=cmd_obstruct)
    sp = sub.add_parser("gamma", help="print the transitivity formula")
    sp.add_argument("file")
    add_cap(sp)
    sp.set_defaults(func=cmd_gamma)
    sp = sub.add_parser("nu3", help="mu2 and nu3 invariants")
    sp.add_argument("file")
    add_cap(sp)
    sp.set_defaults(func=cmd_nu3)
    sp = sub.add_parser("realize", help="realise a GCNF formula as a GMAP map")
    sp.add_argument("file")
    sp.add_argument("--strict", action="store_true", help="reject missing negated twins")
    sp.set_defaults(func=cmd_realize)
    sp = sub.add_parser("corpus", help="emit a built-in instance ('list' for names)")
    sp.add_argument("name")
    sp.set_defaults(func=cmd_corpus)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else 0
    if getattr(args, "obstructors", 2) > cfg.HARD_MAX_ARITY:
        sys.stderr.write(f"error: --obstructors is limited to {cfg.HARD_MAX_ARITY}\n")
        return EXIT_INPUT
    try:
        return args.func(args, out)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except ResourceCapError as exc:
        sys.stderr.write(f"resource cap: {exc}\n")
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
