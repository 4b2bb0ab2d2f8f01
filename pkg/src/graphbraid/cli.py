"""Command-line interface: parse graphs, run analyses, emit JSON/text/DOT.

Exit codes: 0 success, 1 malformed input, 2 search budget exhausted
(partial results are still emitted and flagged).  JSON output is
byte-deterministic for identical requests.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import classify, families
from .coloring import canonical_coloring, coloring_table_dict, verify_axioms
from .complexes import build_uc, complex_to_dot, crossing_graph, summary_dict, \
    verify_npc
from .graphs import GraphError, Subgraph, graph_to_dot, load_dot, \
    load_graph_text, subdivide_for
from .oracle import ball_growth, group_trivial, homology, pi1_presentation, \
    surface_check
from .relhyp import PeripheralCollection, check_collection, generate_collection
from .words import Diagram, LegalityError, check_config, check_legal, \
    cyclic_reduce, has_cyclic_centralizer_witness, parse_word, split_factors, \
    support_and_particles, word_to_text

SCHEMA = "graphbraid-report/1"
EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_BUDGET = 2


class CliInputError(Exception):
    """Malformed command line, graph, word, or file input (exit code 1)."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliInputError(message)


# -- input plumbing ---------------------------------------------------------

def load_graph(source):
    """A graph from a file path, an `@family(args)` spec, or an alias."""
    path = Path(source)
    if path.is_file():
        text = path.read_text()
        head = next((ln for ln in text.splitlines() if ln.strip()), "")
        if "{" in head:
            return load_dot(text)
        return load_graph_text(text)
    return families.build_family(source)


def parse_base(text, g, n):
    """A basepoint configuration from comma-separated vertex names."""
    verts = [t for t in re.split(r"[,\s]+", text) if t]
    config = tuple(sorted(verts))
    check_config(g, config, n)
    return config


def _resolve_base(args, gg, n):
    if getattr(args, "base", None):
        return parse_base(args.base, gg, n)
    return classify.default_config(gg, n)


def parse_range(text):
    """Integers from `a..b`, `a,b,c`, or a single number."""
    text = text.strip()
    m = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", text)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        if hi < lo:
            raise CliInputError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise CliInputError(f"bad range {text!r}; use forms like 3, 1..5, 2,4,6")


def _json_safe(obj):
    if isinstance(obj, dict):
        return {str(k): _json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_safe(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted((_json_safe(v) for v in obj), key=repr)
    if isinstance(obj, (bool, int, float, str)) or obj is None:
        return obj
    return str(obj)


def _emit(args, payload, text, code):
    fmt = getattr(args, "format", "json")
    if fmt == "text":
        rendered = text if text.endswith("\n") else text + "\n"
    elif fmt == "json":
        rendered = json.dumps(_json_safe(payload), indent=2,
                              sort_keys=True) + "\n"
    else:
        raise CliInputError(
            f"format {fmt!r} is not available for this command")
    out = getattr(args, "out", None)
    if out:
        Path(out).write_text(rendered)
    else:
        sys.stdout.write(rendered)
    return code


def _input_section(g, gg, n):
    section = {
        "graph": g.name or "(unnamed)",
        "vertices": g.num_vertices(),
        "edges": g.num_edges(),
        "n": n,
    }
    if gg is not g:
        section["subdivided_vertices"] = gg.num_vertices()
        section["subdivided_edges"] = gg.num_edges()
    return section


# -- subcommands ------------------------------------------------------------

def cmd_complex(args):
    g = load_graph(args.graph)
    gg = subdivide_for(g, args.n)
    c = build_uc(gg, args.n)
    ok, witness = verify_npc(c)
    payload = {
        "schema": SCHEMA,
        "command": "complex",
        "input": _input_section(g, gg, args.n),
        "complex": summary_dict(c),
        "nonpositively_curved": ok,
    }
    if not ok:
        payload["npc_witness"] = witness
    if c.dimension() == 2:
        payload["surface"] = surface_check(c)
    counts = c.counts()
    lines = [f"UC_{args.n}({g.name}): "
             + ", ".join(f"{counts.get(k, 0)} cells of dim {k}"
                         for k in sorted(counts)),
             f"euler characteristic: {c.euler_characteristic()}",
             f"components: {len(c.components())}",
             f"hyperplanes: {len(payload['complex']['hyperplanes'])}",
             f"nonpositively curved: {'yes' if ok else 'NO'}"]
    surf = payload.get("surface")
    if surf:
        lines.append(f"surface: closed={surf['closed_surface']} "
                     f"orientable={surf.get('orientable')}")
        if surf.get("genus_note"):
            lines.append(f"note: {surf['genus_note']}")
    return payload, "\n".join(lines), EXIT_OK


def cmd_coloring(args):
    g = load_graph(args.graph)
    gg = subdivide_for(g, args.n)
    c = build_uc(gg, args.n)
    col = canonical_coloring(c)
    ok, witness = verify_axioms(col, c)
    payload = {
        "schema": SCHEMA,
        "command": "coloring",
        "input": _input_section(g, gg, args.n),
        "axioms_ok": ok,
        "coloring": coloring_table_dict(col),
    }
    if not ok:
        payload["axiom_witness"] = witness
    lines = [f"special coloring of UC_{args.n}({g.name}): "
             f"{len(payload['coloring']['colors'])} colors, "
             f"{len(payload['coloring']['assignment'])} oriented hyperplanes",
             f"axioms verified: {'yes' if ok else 'NO'}"]
    return payload, "\n".join(lines), EXIT_OK


def cmd_word(args):
    g = load_graph(args.graph)
    gg = subdivide_for(g, args.n)
    base = _resolve_base(args, gg, args.n)
    if not args.check and not args.compare:
        raise CliInputError("word requires --check WORD or --compare W1 W2")

    payload = {
        "schema": SCHEMA,
        "command": "word",
        "input": _input_section(g, gg, args.n),
        "base": list(base),
    }
    if args.compare:
        d1 = Diagram.make(gg, base, parse_word(gg, args.compare[0]))
        d2 = Diagram.make(gg, base, parse_word(gg, args.compare[1]))
        equal = d1.letters == d2.letters
        payload["compare"] = {
            "words": list(args.compare),
            "normal_forms": [word_to_text(gg, d1.letters),
                             word_to_text(gg, d2.letters)],
            "equal": equal,
        }
        text = (f"equal: {'yes' if equal else 'no'}\n"
                f"normal forms: {payload['compare']['normal_forms'][0]!r} "
                f"vs {payload['compare']['normal_forms'][1]!r}")
        return payload, text, EXIT_OK

    letters = parse_word(gg, args.check)
    report = {"word": args.check}
    try:
        check_legal(gg, base, letters)
    except LegalityError as exc:
        report.update({"legal": False, "reason": str(exc)})
        payload["check"] = report
        return payload, f"legal: no ({exc})", EXIT_OK
    d = Diagram.make(gg, base, letters)
    report.update({
        "legal": True,
        "terminus": list(d.terminus),
        "normal_form": word_to_text(gg, d.letters),
        "length": len(d.letters),
        "spherical": d.is_spherical,
    })
    lines = ["legal: yes", f"terminus: {','.join(d.terminus)}",
             f"normal form: {report['normal_form']!r}"]
    if d.is_spherical:
        conj, core = cyclic_reduce(d)
        supp, part = support_and_particles(core)
        ccw, ccw_detail = has_cyclic_centralizer_witness(core)
        report.update({
            "trivial": d.is_identity,
            "cyclically_reduced_core": word_to_text(gg, core.letters),
            "conjugator": word_to_text(gg, conj.letters),
            "support_edges": sorted(gg.id_for(*k) for k in supp.edges),
            "particles": sorted(part),
            "independent_factors": len(split_factors(core).factors),
            "cyclic_centralizer_witness": ccw,
            "cyclic_centralizer_detail": ccw_detail,
        })
        lines.append(f"trivial: {'yes' if d.is_identity else 'no'}")
        lines.append(f"support: {','.join(report['support_edges'])} "
                     f"particles: {','.join(report['particles'])}")
    payload["check"] = report
    return payload, "\n".join(lines), EXIT_OK


def cmd_classify(args):
    g = load_graph(args.graph)
    base = None
    if args.base:
        gg = subdivide_for(g, args.n)
        base = parse_base(args.base, gg, args.n)
    report = classify.classification_report(g, args.n, base)
    payload = {"schema": SCHEMA, "command": "classify"}
    payload.update(report)
    lines = [f"classification of the {args.n}-particle braid group "
             f"of {g.name}:"]
    for prop in classify.PROPERTIES:
        v = report["verdicts"][prop]
        lines.append(f"  {prop}: {v['answer']}  [{v['clause']}]")
    for note in report.get("discrepancy_notes", ()):
        lines.append(f"note: {note}")
    return payload, "\n".join(lines), EXIT_OK


def _parse_collection_file(g, path):
    members = []
    for ln, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        verts = [t for t in re.split(r"[,\s]+", line) if t]
        try:
            members.append(Subgraph.induced_on(g, verts))
        except GraphError as exc:
            raise CliInputError(f"{path}:{ln}: {exc}")
    if not members:
        raise CliInputError(f"{path}: no members found")
    return PeripheralCollection.of(g, members)


def cmd_relhyp(args):
    g = load_graph(args.graph)
    budget = args.budget_paths
    if args.collection:
        coll = _parse_collection_file(g, args.collection)
        status = None
    else:
        coll, status = generate_collection(g, budget=budget)
    verdict = check_collection(g, coll, budget=budget)
    payload = {
        "schema": SCHEMA,
        "command": "relhyp",
        "input": {"graph": g.name or "(unnamed)",
                  "vertices": g.num_vertices(), "edges": g.num_edges()},
        "collection": {
            "generated": args.collection is None,
            "members": [sorted(m.vertices) for m in coll.members],
            "member_edge_counts": [len(m.edges) for m in coll.members],
        },
        "verdict": verdict.to_dict(),
    }
    if status is not None:
        payload["collection"]["status"] = status
    code = EXIT_OK
    if any(c.ok is None for c in verdict.conditions):
        payload["partial"] = True
        code = EXIT_BUDGET
    lines = [f"collection on {g.name}: {len(coll.members)} members"
             + (f" ({status})" if status else ""),
             f"applies: {verdict.applies}",
             verdict.summary]
    for i, cond in enumerate(verdict.conditions, 1):
        lines.append(f"  condition {i}: {cond.ok} — {cond.detail}")
    return payload, "\n".join(lines), code


def cmd_oracle(args):
    g = load_graph(args.graph)
    gg = subdivide_for(g, args.n)
    c = build_uc(gg, args.n)
    base = _resolve_base(args, gg, args.n)
    pres = pi1_presentation(c, basepoint=base, collapse_first=True)
    hom = homology(c, component=c.component_of(base))
    payload = {
        "schema": SCHEMA,
        "command": "oracle",
        "input": _input_section(g, gg, args.n),
        "base": list(base),
        "presentation": {
            "generators": len(pres.generators),
            "relators": len(pres.relators),
            "relator_lengths": sorted(len(r) for r in pres.relators),
        },
        "homology": {
            "betti0": hom.betti0,
            "betti1": hom.betti1,
            "torsion": list(hom.torsion),
            "betti2": hom.betti2,
            "euler": hom.euler,
        },
        "group_trivial": group_trivial(gg, args.n, base),
    }
    if c.dimension() == 2:
        payload["surface"] = surface_check(c)
    code = EXIT_OK
    if args.radius:
        sizes, complete = ball_growth(gg, args.n, base, args.radius,
                                      budget=args.budget_paths)
        payload["growth"] = {"radius": args.radius, "ball_sizes": sizes,
                             "complete": complete}
        if not complete:
            payload["partial"] = True
            code = EXIT_BUDGET
    tor = payload["homology"]["torsion"]
    lines = [f"presentation at {','.join(base)}: "
             f"{payload['presentation']['generators']} generators, "
             f"{payload['presentation']['relators']} relators",
             "homology of the basepoint component: "
             f"betti1={hom.betti1}"
             + (f", torsion={tor}" if tor else ", torsion-free"),
             f"group trivial: {payload['group_trivial']}"]
    surf = payload.get("surface")
    if surf and surf.get("genus_note"):
        lines.append(f"note: {surf['genus_note']}")
    if "growth" in payload:
        lines.append(f"ball sizes: {payload['growth']['ball_sizes']}"
                     + ("" if payload["growth"]["complete"]
                        else " (budget exhausted, partial)"))
    return payload, "\n".join(lines), code


def cmd_export(args):
    g = load_graph(args.graph)
    if args.what == "graph":
        dot = graph_to_dot(g)
    else:
        if args.n is None:
            raise CliInputError(f"export --what {args.what} requires --n")
        gg = subdivide_for(g, args.n)
        c = build_uc(gg, args.n, max_dim=2)
        if args.what == "skeleton":
            dot = complex_to_dot(c)
        else:
            cg, _ = crossing_graph(c)
            dot = graph_to_dot(cg, highlight_essential=False)
    out = getattr(args, "out", None)
    if out:
        Path(out).write_text(dot)
    else:
        sys.stdout.write(dot)
    return None, None, EXIT_OK


_PROPERTY_FUNCS = {
    "trivial": classify.is_trivial,
    "infinite_cyclic": classify.is_infinite_cyclic,
    "free": classify.is_free,
    "hyperbolic": classify.is_hyperbolic,
    "contains_free2": classify.contains_free2,
    "contains_f2_x_z": classify.contains_f2_x_z,
    "relhyp_abelian": classify.is_relhyp_abelian,
    "acyl_hyperbolic": classify.is_acyl_hyperbolic,
}


def _table_columns(args):
    """(column label, graph) pairs for the requested family sweep."""
    fam = args.family
    if fam == "complete":
        ms = parse_range(args.m or "3..8")
        return [(f"m={m}", families.complete(m)) for m in ms]
    if fam == "complete-bipartite":
        ps = parse_range(args.p or "1..5")
        qs = parse_range(args.q or "1..5")
        return [(f"{p},{q}", families.complete_bipartite(p, q))
                for p in ps for q in qs if p <= q]
    if fam == "rose":
        petals = parse_range(args.petals or "1..3")
        arms = parse_range(args.arms or "0..2")
        return [(f"petals={p},arms={a}", families.rose(p, a))
                for p in petals for a in arms]
    if fam == "sun":
        cycles = parse_range(args.cycle or "3..6")
        arms = parse_range(args.arms or "1..2")
        return [(f"cycle={c},arms={a}", families.sun(c, arms=a))
                for c in cycles for a in arms]
    if fam == "pulsar":
        conns = parse_range(args.connectors or "2..4")
        au = int(args.arms_u)
        aw = int(args.arms_w)
        return [(f"connectors={c}", families.pulsar(c, arms_u=au, arms_w=aw))
                for c in conns]
    if fam == "path":
        ks = parse_range(args.k or "2..6")
        return [(f"k={k}", families.path_graph(k)) for k in ks]
    if fam == "cycle":
        ks = parse_range(args.k or "3..8")
        return [(f"k={k}", families.cycle_graph(k)) for k in ks]
    raise CliInputError(f"unknown family {fam!r}")


def cmd_table(args):
    func = _PROPERTY_FUNCS[args.property]
    ns = parse_range(args.n or "1..4")
    if any(n < 1 for n in ns):
        raise CliInputError("--n values must be at least 1")
    columns = _table_columns(args)
    if not columns:
        raise CliInputError("the requested sweep is empty")
    grid = []
    for n in ns:
        grid.append([func(g, n).answer for _, g in columns])
    payload = {
        "schema": SCHEMA,
        "command": "table",
        "family": args.family,
        "property": args.property,
        "rows_n": ns,
        "columns": [label for label, _ in columns],
        "grid": grid,
    }
    mark = {"yes": "yes", "no": "no", "inconclusive": "?"}
    width = max(len(label) for label, _ in columns)
    width = max(width, 3)
    header = "  n | " + " ".join(f"{label:>{width}}" for label, _ in columns)
    lines = [f"property {args.property!r} for family {args.family!r}",
             header, "-" * len(header)]
    for n, row in zip(ns, grid):
        lines.append(f"{n:>3} | "
                     + " ".join(f"{mark.get(v, v):>{width}}" for v in row))
    return payload, "\n".join(lines), EXIT_OK


# -- argument parsing --------------------------------------------------------

_HANDLERS = {
    "complex": cmd_complex,
    "coloring": cmd_coloring,
    "word": cmd_word,
    "classify": cmd_classify,
    "relhyp": cmd_relhyp,
    "oracle": cmd_oracle,
    "export": cmd_export,
    "table": cmd_table,
}


def _add_common(sp, graph=True, n=True, base=False, budget=False,
                radius=False):
    if graph:
        sp.add_argument("--graph", required=True,
                        help="graph file (text or DOT), @family(args) spec, "
                             "or alias such as K5, K3,3, P4, C6, star3")
    if n:
        sp.add_argument("--n", type=int, required=True,
                        help="number of particles (at least 1)")
    if base:
        sp.add_argument("--base", default=None,
                        help="comma-separated basepoint vertices "
                             "(after subdivision); default: least "
                             "configuration in the largest component")
    if budget:
        sp.add_argument("--budget-paths", type=int, default=500_000,
                        help="node budget for path/state searches")
    if radius:
        sp.add_argument("--radius", type=int, default=0,
                        help="ball radius for the growth table (0 = skip)")
    sp.add_argument("--format", choices=("json", "text"), default="json",
                    help="output format (default json)")
    sp.add_argument("--out", default=None,
                    help="write output to this file instead of stdout")


def build_parser():
    p = _Parser(prog="graphbraid",
                description="Configuration complexes of graphs and decision "
                            "procedures for their braid groups.")
    sub = p.add_subparsers(dest="command", metavar="COMMAND")

    sp = sub.add_parser("complex", help="build the configuration complex")
    _add_common(sp)

    sp = sub.add_parser("coloring",
                        help="derive and verify the special coloring")
    _add_common(sp)

    sp = sub.add_parser("word", help="check, normalize, or compare words")
    _add_common(sp, base=True)
    sp.add_argument("--check", default=None, metavar="WORD",
                    help="word to check, tokens like \"c a' b\"")
    sp.add_argument("--compare", nargs=2, default=None,
                    metavar=("W1", "W2"), help="two words to compare")

    sp = sub.add_parser("classify", help="decide group-theoretic properties")
    _add_common(sp, base=True)

    sp = sub.add_parser("relhyp",
                        help="check or generate a peripheral collection "
                             "(two-particle criterion)")
    _add_common(sp, n=False, budget=True)
    sp.add_argument("--collection", default=None, metavar="FILE",
                    help="file with one member vertex set per line "
                         "(comma or space separated); omit to generate")

    sp = sub.add_parser("oracle",
                        help="presentation, homology, surface, and growth "
                             "by direct computation")
    _add_common(sp, base=True, budget=True, radius=True)

    sp = sub.add_parser("export", help="emit DOT")
    _add_common(sp, n=False)
    sp.add_argument("--n", type=int, default=None,
                    help="particles (needed for skeleton/crossing)")
    sp.add_argument("--what", choices=("graph", "skeleton", "crossing"),
                    default="graph",
                    help="graph with essential vertices highlighted, "
                         "complex 1-skeleton, or hyperplane crossing graph")

    sp = sub.add_parser("table", help="sweep a property over a family grid")
    sp.add_argument("--family", required=True,
                    choices=("complete", "complete-bipartite", "rose",
                             "sun", "pulsar", "path", "cycle"))
    sp.add_argument("--property", required=True,
                    choices=tuple(sorted(_PROPERTY_FUNCS)))
    sp.add_argument("--n", default=None, help="row range, e.g. 1..5")
    sp.add_argument("--m", default=None, help="complete: size range")
    sp.add_argument("--p", default=None, help="bipartite: first size range")
    sp.add_argument("--q", default=None, help="bipartite: second size range")
    sp.add_argument("--petals", default=None, help="rose: petal range")
    sp.add_argument("--arms", default=None, help="rose/sun: arm range")
    sp.add_argument("--cycle", default=None, help="sun: cycle length range")
    sp.add_argument("--connectors", default=None,
                    help="pulsar: connector range")
    sp.add_argument("--arms-u", default=0, help="pulsar: arms at one hub")
    sp.add_argument("--arms-w", default=0, help="pulsar: arms at the other")
    sp.add_argument("--k", default=None, help="path/cycle: length range")
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.add_argument("--out", default=None)

    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise CliInputError("a subcommand is required; see --help")
        n = getattr(args, "n", None)
        if isinstance(n, int) and n < 1:
            raise CliInputError("--n must be at least 1")
        payload, text, code = _HANDLERS[args.command](args)
        if payload is None:
            return code
        return _emit(args, payload, text, code)
    except CliInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (GraphError, LegalityError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
