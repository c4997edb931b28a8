"""Command-line interface.

Subcommands: normalize, successors, graph, homology, table, construct,
verify.  Output on the data stream is deterministic for a fixed command,
configuration and seed; progress goes to stderr.  Exit codes: 0 success,
1 failed verification, 2 bad input, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from . import constructions
from .cells import build_complex
from .digraph import Digraph, cartesian_product, is_isomorphic, to_dot, to_json_obj
from .dow import (
    Dow,
    NotDoubleOccurrenceError,
    concat,
    format_word,
    insert_between,
    is_squarefree,
    maximal_factors,
    parse_word,
    successors,
    tangled_cord,
)
from .homology import homology_summary, rational_rank, snf
from .matrices import IntMatrix
from .wordgraph import are_coprime, global_word_graph, rooted_word_graph


class BudgetExceeded(RuntimeError):
    pass


class _Budget:
    def __init__(self, seconds):
        self.seconds = seconds
        self.start = time.monotonic()

    def check(self, label):
        if self.seconds is not None and time.monotonic() - self.start > self.seconds:
            raise BudgetExceeded(label)


def _parse_dow(text: str) -> Dow:
    return Dow(parse_word(text))


def _graph_from_source(args) -> Digraph:
    kind = args.source[0]
    rest = args.source[1:]
    if kind == "rooted":
        if len(rest) != 1:
            raise ValueError("usage: rooted WORD")
        return rooted_word_graph(_parse_dow(rest[0])).graph
    if kind == "global":
        if len(rest) != 1:
            raise ValueError("usage: global SIZE")
        return global_word_graph(int(rest[0])).graph
    if kind == "construct":
        if not rest:
            raise ValueError("usage: construct NAME [ARGS...]")
        return constructions.construct(rest[0], rest[1:])
    raise ValueError(f"unknown graph source {kind!r} (use rooted/global/construct)")


def _emit(args, text: str):
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_normalize(args) -> int:
    word = _parse_dow(args.word)
    _emit(args, format_word(word.symbols) + "\n")
    return 0


def cmd_successors(args) -> int:
    word = _parse_dow(args.word)
    lines = [f"word {format_word(word.symbols)}"]
    if word:
        for f in maximal_factors(word):
            lines.append(f"factor {format_word(f.letters)} {f.kind}")
    for v in successors(word):
        lines.append(f"successor {format_word(v.symbols)}")
    _emit(args, "\n".join(lines) + "\n")
    return 0


def _render_graph(g: Digraph, fmt: str) -> str:
    if fmt == "dot":
        return to_dot(g)
    if fmt == "json":
        return json.dumps(to_json_obj(g), indent=2, sort_keys=True) + "\n"
    raise ValueError(f"graph output format must be dot or json, got {fmt!r}")


def cmd_graph(args) -> int:
    fmt = args.format or "dot"
    _emit(args, _render_graph(_graph_from_source(args), fmt))
    return 0


def cmd_construct(args) -> int:
    g = constructions.construct(args.name, args.args)
    _emit(args, _render_graph(g, args.format or "dot"))
    return 0


def cmd_homology(args) -> int:
    g = _graph_from_source(args)
    budget = _Budget(args.budget)
    try:
        budget.check("before complex construction")
        cx = build_complex(g, args.max_dim)
        budget.check("after complex construction")
        summary = homology_summary(cx)
        budget.check("after homology")
    except BudgetExceeded as exc:
        _emit(args, f"# budget exceeded ({exc}); no results\n")
        return 3
    if args.format == "json":
        _emit(args, json.dumps(summary.to_json_obj(), indent=2, sort_keys=True) + "\n")
        return 0
    lines = ["degree\tbetti\ttorsion"]
    for n in sorted(summary.betti):
        tor = ",".join(str(t) for t in summary.torsion.get(n, [])) or "-"
        flag = " (truncated complex)" if n in summary.truncated else ""
        lines.append(f"{n}\t{summary.betti[n]}\t{tor}{flag}")
    lines.append(f"euler\t{summary.euler}")
    cells = " ".join(f"{d}:{c}" for d, c in sorted(summary.cell_counts.items()))
    lines.append(f"cells\t{cells}")
    _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_table(args) -> int:
    if args.n_max < 2:
        raise ValueError("table needs n_max >= 2")
    budget = _Budget(args.budget)
    lines = ["n\tword\tbeta1\tbeta2\tvertices"]
    code = 0
    for n in range(2, args.n_max + 1):
        if n >= 9:
            print(f"table: computing tangled cord n={n}", file=sys.stderr)
        word = tangled_cord(n)
        try:
            budget.check(f"before row n={n}")
            wg = rooted_word_graph(word)
            cx = build_complex(wg.graph, args.max_dim)
            summary = homology_summary(cx)
            budget.check(f"after row n={n}")
        except BudgetExceeded:
            lines.append(f"# budget exceeded; rows n>={n} omitted")
            code = 3
            break
        lines.append("\t".join([str(n), format_word(word.symbols, commas=True),
                                str(summary.betti.get(1, 0)), str(summary.betti.get(2, 0)),
                                str(len(wg.graph.vertices))]))
    _emit(args, "\n".join(lines) + "\n")
    return code


def _random_dow(rng, size: int) -> Dow:
    word = [s for s in range(1, size + 1) for _ in range(2)]
    rng.shuffle(word)
    return Dow(word)


def _random_consistent_digraph(rng, n: int) -> Digraph:
    vs = [f"v{i}" for i in range(n)]
    edges = set()
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.4:
                edges.add((vs[i], vs[j]))
    indeg = {v: 0 for v in vs}
    outdeg = {v: 0 for v in vs}
    for u, v in edges:
        outdeg[u] += 1
        indeg[v] += 1
    for i in range(1, n):
        if indeg[vs[i]] == 0:
            edges.add((vs[0], vs[i]))
            outdeg[vs[0]] += 1
    for i in range(n - 1):
        if outdeg[vs[i]] == 0:
            edges.add((vs[i], vs[n - 1]))
    return Digraph(vs, edges)


def _random_matrix(rng, nrows, ncols, bound=10) -> IntMatrix:
    entries = {}
    for r in range(nrows):
        for c in range(ncols):
            if rng.random() < 0.6:
                v = rng.randint(-bound, bound)
                if v:
                    entries[(r, c)] = v
    return IntMatrix(nrows, ncols, entries)


def _suite_boundary(rng, cases):
    checked = 0
    for _ in range(cases):
        if rng.random() < 0.5:
            g = rooted_word_graph(_random_dow(rng, rng.randint(1, 5))).graph
        else:
            g = _random_consistent_digraph(rng, rng.randint(2, 8))
        cx = build_complex(g, min(4, max(1, len(g.vertices) - 1)))
        cx.check_boundary_squares_to_zero()
        summary = homology_summary(cx, max_deg=cx.max_dim)
        if cx.complete and sum((-1) ** d * b for d, b in summary.betti.items()) != summary.euler:
            return False, f"euler mismatch on {g!r}"
        checked += 1
    return True, f"{checked} complexes, all with d.d=0 and consistent euler"


def _suite_reverse(rng, cases):
    for _ in range(cases):
        w = _random_dow(rng, rng.randint(1, 5))
        if not is_isomorphic(rooted_word_graph(w).graph,
                             rooted_word_graph(w.reverse()).graph):
            return False, f"reverse graph not isomorphic for {w!r}"
    return True, f"{cases} words, reverse graphs all isomorphic"


def _suite_product(rng, cases):
    done = 0
    attempts = 0
    while done < cases and attempts < 50 * cases:
        attempts += 1
        w1 = _random_dow(rng, rng.randint(1, 3))
        w2 = _random_dow(rng, rng.randint(1, 3))
        if not are_coprime(w1, w2):
            continue
        gcat = rooted_word_graph(concat(w1, w2)).graph
        gprod = cartesian_product(rooted_word_graph(w1).graph,
                                  rooted_word_graph(w2).graph)
        if not is_isomorphic(gcat, gprod):
            return False, f"concatenation graph is not the product graph for {w1!r}, {w2!r}"
        done += 1
    return True, f"{done} coprime pairs, concatenation graph = product graph"


def _suite_snf(rng, cases):
    for _ in range(cases):
        m = _random_matrix(rng, rng.randint(1, 12), rng.randint(1, 12))
        res = snf(m)
        if res.rank != rational_rank(m):
            return False, f"snf rank disagrees with rational rank on {m!r}"
        for a, b in zip(res.invariant_factors, res.invariant_factors[1:]):
            if b % a:
                return False, f"divisibility chain broken: {res.invariant_factors}"
    return True, f"{cases} matrices, ranks agree and chains divide"


def _suite_corrupted(rng, cases):
    cx = build_complex(constructions.three_square_sphere(), 2)
    d1 = cx.boundary_matrix(1)
    d2 = cx.boundary_matrix(2)
    entries = dict(d2.entries)
    key = sorted(entries)[0]
    entries[key] = -entries[key]  # injected fault
    bad = IntMatrix(d2.nrows, d2.ncols, entries)
    if d1.matmul(bad).is_zero():
        return True, "fault injection not detected (unexpected)"
    return False, "d.d != 0 detected on corrupted boundary fixture"


def _suite_substitution(rng, cases):
    # experiment: look for repeat<->return substitution pairs with isomorphic
    # word graphs where squarefreeness or coprimality fails
    counterexamples = []
    done = 0
    attempts = 0
    while done < cases and attempts < 50 * cases:
        attempts += 1
        base = _random_dow(rng, rng.randint(1, 3))
        cut1 = rng.randint(0, len(base.symbols))
        cut2 = rng.randint(cut1, len(base.symbols))
        x = base.symbols[:cut1]
        y = base.symbols[cut1:cut2]
        z = base.symbols[cut2:]
        v = tuple(range(base.size + 1, base.size + 1 + rng.randint(1, 3)))
        try:
            w_rep = insert_between(x, y, z, (), (), v, "repeat")
            w_ret = insert_between(x, y, z, (), (), v, "return")
        except NotDoubleOccurrenceError:
            continue
        done += 1
        iso = is_isomorphic(rooted_word_graph(w_rep).graph,
                            rooted_word_graph(w_ret).graph)
        conditions = (is_squarefree(w_rep) and is_squarefree(w_ret)
                      and are_coprime(base, Dow(v + v)))
        if iso and not conditions:
            counterexamples.append((w_rep, w_ret))
    note = f"{done} substitution pairs, {len(counterexamples)} with isomorphism despite failed conditions"
    return True, note


SUITES = {
    "boundary": _suite_boundary,
    "reverse": _suite_reverse,
    "product": _suite_product,
    "snf": _suite_snf,
    "corrupted": _suite_corrupted,
    "substitution": _suite_substitution,
}

DEFAULT_SUITES = ("boundary", "reverse", "product", "snf")


def cmd_verify(args) -> int:
    names = args.suite or list(DEFAULT_SUITES)
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r} (known: {', '.join(sorted(SUITES))})")
    budget = _Budget(args.budget)
    lines = []
    failed = False
    for name in names:
        rng = random.Random((args.seed, name).__repr__())
        try:
            budget.check(f"suite {name}")
            ok, detail = SUITES[name](rng, args.cases)
        except BudgetExceeded:
            lines.append(f"suite {name}: SKIPPED (budget exceeded)")
            failed = True
            break
        lines.append(f"suite {name}: {'PASS' if ok else 'FAIL'} ({detail})")
        failed = failed or not ok
    _emit(args, "\n".join(lines) + "\n")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prodsim",
        description="Prodsimplicial homology of directed graphs and word graphs "
                    "of double occurrence words.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, fmt_choices=None, fmt_default=None):
        p.add_argument("--output", metavar="FILE", help="write results to FILE")
        if fmt_choices:
            p.add_argument("--format", choices=fmt_choices, default=fmt_default)

    p = sub.add_parser("normalize", help="canonical ascending form of a word")
    p.add_argument("word")
    add_common(p)
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("successors", help="maximal factors and deletions of a word")
    p.add_argument("word")
    add_common(p)
    p.set_defaults(func=cmd_successors)

    p = sub.add_parser("graph", help="export a word graph or generator graph")
    p.add_argument("source", nargs="+",
                   help="rooted WORD | global SIZE | construct NAME [ARGS...]")
    add_common(p, ("dot", "json"), "dot")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("construct", help="export a named generator graph")
    p.add_argument("name")
    p.add_argument("args", nargs="*")
    add_common(p, ("dot", "json"), "dot")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("homology", help="Betti numbers and torsion of a graph's complex")
    p.add_argument("source", nargs="+",
                   help="rooted WORD | global SIZE | construct NAME [ARGS...]")
    p.add_argument("--max-dim", type=int, default=3)
    p.add_argument("--budget", type=float, default=None, metavar="SECONDS")
    add_common(p, ("table", "json"), "table")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("table", help="tangled cord invariants for n = 2..N")
    p.add_argument("n_max", type=int)
    p.add_argument("--max-dim", type=int, default=3)
    p.add_argument("--budget", type=float, default=None, metavar="SECONDS")
    add_common(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run randomized invariant suites")
    p.add_argument("--suite", action="append",
                   help="suite name (repeatable); default: boundary reverse product snf")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=200)
    p.add_argument("--budget", type=float, default=None, metavar="SECONDS")
    add_common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        return 0
    except (ValueError, KeyError) as exc:
        kind = type(exc).__name__
        print(f"error: {kind}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
