"""Command-line front end for batch solving, analysis and generation.

Documents are plain structured text: one "key: value" line per field,
keys sorted, rationals printed exactly as "a/b".  Explanatory output
lives in '#' comment lines so every document stays machine-parseable.
Identical command lines with identical seeds produce byte-identical
output.

Exit codes: 0 success, 2 parse/usage error, 3 enumeration budget
exceeded, 4 internal verification failure.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .copies import DEFAULT_MAX_COPIES, EnumerationBudget, build_copy_hypergraph
from .errors import (
    BudgetExceededError,
    InvalidColoringError,
    ParseError,
    VerificationError,
)
from .generators import (
    GLParams,
    gadget_edge_glue,
    gadget_vertex_glue,
    gl_random_instance,
    parse_hypergraph_text,
    random_graph,
    serialize_tagged_graph,
)
from .graphs import WeightedGraph, parse_graph, serialize_graph, unit_weights
from .lp import solve_cover_lp
from .oracle import DEFAULT_CAP, exact_min_hitting_set, exact_min_vertex_cover
from .patterns import (
    Pattern,
    classify_pattern,
    construct_good_graph,
)
from .pipeline import Solution, solve, solve_baseline, verify_solution


def _read_text(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _read_weighted_graph(path: str):
    return parse_graph(_read_text(path))


def _read_pattern(path: str) -> Pattern:
    return Pattern(parse_graph(_read_text(path)).graph)


def solution_document(sol: Solution, explain: bool = False) -> str:
    rows = {
        "classification": sol.classification,
        "guaranteed_factor": str(sol.guaranteed_factor),
        "lower_bound": str(sol.lower_bound),
        "vertices": " ".join(map(str, sol.hitting_set)),
        "weight": str(sol.weight),
    }
    if sol.observed_ratio is not None:
        rows["observed_ratio"] = str(sol.observed_ratio)
    if sol.warning is not None:
        rows["warning"] = sol.warning
    lines = [f"{key}: {rows[key]}" for key in sorted(rows)]
    if explain and sol.detail is not None:
        d = sol.detail
        if d.trace is not None:
            for num, st in enumerate(d.trace.steps, start=1):
                image = " ".join(
                    f"{x}->{st.embedding.mapping[x]}" for x in range(len(st.embedding.mapping))
                )
                lines.append(
                    f"# subtraction step {num}: gadget {st.good_index} scale {st.scale} image {image}"
                )
            lines.append(
                "# zero set: " + " ".join(map(str, sorted(d.trace.zero_set)))
            )
        if d.residual_vertices:
            lines.append("# residual vertices: " + " ".join(map(str, d.residual_vertices)))
        if d.coloring is not None:
            pairs = " ".join(f"{v}:{c}" for v, c in enumerate(d.coloring.colors))
            lines.append(f"# colouring (palette {d.coloring.t}): {pairs}")
        if d.conflict_arcs:
            lines.append(
                "# conflict arcs: " + " ".join(f"{u}->{w}" for u, w in d.conflict_arcs)
            )
        for num, step in enumerate(d.cover_steps, start=1):
            lines.append(f"# cover step {num}: {step}")
    return "\n".join(lines) + "\n"


def parse_solution_document(text: str) -> tuple[int, ...]:
    """Extract the hitting set from a solution document."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.startswith("vertices:"):
            body = raw.split(":", 1)[1].strip()
            if not body:
                return ()
            try:
                return tuple(int(x) for x in body.split())
            except ValueError:
                raise ParseError(lineno, "malformed", "vertices must be integers") from None
    raise ParseError(1, "malformed", "no 'vertices:' line in solution document")


def _cmd_solve(args) -> int:
    g = _read_weighted_graph(args.graph)
    h = _read_pattern(args.pattern)
    sol = solve(g, h, EnumerationBudget(args.budget))
    sys.stdout.write(solution_document(sol, explain=args.explain))
    return 0


def _cmd_exact(args) -> int:
    g = _read_weighted_graph(args.graph)
    if args.vertex_cover:
        size = exact_min_vertex_cover(g.graph, cap=args.cap)
        sys.stdout.write(f"vertex_cover_size: {size}\n")
        return 0
    if args.pattern is None:
        print("error: exact needs a pattern file (or --vertex-cover)", file=sys.stderr)
        return 2
    h = _read_pattern(args.pattern)
    vertices, weight = exact_min_hitting_set(
        g, h, cap=args.cap, budget=EnumerationBudget(args.budget)
    )
    sys.stdout.write(f"vertices: {' '.join(map(str, vertices))}\nweight: {weight}\n")
    return 0


def _cmd_analyze(args) -> int:
    h = _read_pattern(args.pattern)
    cls = classify_pattern(h)
    lines = [f"classification: {cls.kind}", f"k: {h.k}"]
    if cls.decomposition is None:
        trivial = Fraction(h.k)
        lines.append(f"guaranteed_factor: {trivial}")
        sys.stdout.write("\n".join(sorted(lines)) + "\n")
        return 0
    d = cls.decomposition
    good = construct_good_graph(h, d)
    lines.append(f"guaranteed_factor: {Fraction(2 * h.k - 1, 2)}")
    lines.append(f"root: {d.root}")
    out = "\n".join(sorted(lines)) + "\n"
    for i, branch in enumerate(d.branches):
        out += f"# branch {i}: {' '.join(map(str, branch))}\n"
    witness = " ".join(f"{a}->{b}" for a, b in d.embedding)
    out += f"# witness: branch {d.small_index} into branch {d.big_index} via {witness}\n"
    out += f"# gadget factor: {good.factor}\n"
    out += f"# gadget total weight: {good.total_weight}\n"
    out += "# gadget graph:\n"
    for line in serialize_graph(WeightedGraph(good.graph, good.weights)).splitlines():
        out += f"# {line}\n"
    sys.stdout.write(out)
    return 0


def _cmd_gen(args) -> int:
    if args.kind == "random":
        g = random_graph(args.n, args.p, args.seed)
        sys.stdout.write(serialize_graph(unit_weights(g)))
        return 0
    if args.kind in ("vc-edge-gadget", "vc-vertex-gadget"):
        base = _read_weighted_graph(args.base).graph
        h = _read_pattern(args.pattern)
        if args.kind == "vc-edge-gadget":
            out, provenance = gadget_edge_glue(base, h)
            text = serialize_graph(unit_weights(out))
            text += "# provenance\n"
            for new_id in sorted(provenance):
                (a, b), hv = provenance[new_id]
                text += f"# v {new_id} {a} {b} {hv}\n"
        else:
            out, provenance = gadget_vertex_glue(base, h)
            text = serialize_graph(unit_weights(out))
            text += "# provenance\n"
            for new_id in sorted(provenance):
                u, hv = provenance[new_id]
                text += f"# v {new_id} {u} {hv}\n"
        sys.stdout.write(text)
        return 0
    if args.kind == "gl":
        base_n, base_edges = parse_hypergraph_text(_read_text(args.base))
        h = _read_pattern(args.pattern)
        params = GLParams(base_n, base_edges, args.cloud_size, args.multiplier, args.seed)
        tg = gl_random_instance(h, params)
        sys.stdout.write(serialize_tagged_graph(tg))
        return 0
    print(f"error: unknown generator {args.kind!r}", file=sys.stderr)
    return 2


def _cmd_verify(args) -> int:
    g = _read_weighted_graph(args.graph)
    h = _read_pattern(args.pattern)
    vertices = parse_solution_document(_read_text(args.solution))
    if any(not 0 <= v < g.n for v in vertices):
        print("error: solution vertex out of range", file=sys.stderr)
        return 2
    ok = verify_solution(g.graph, h, vertices)
    sys.stdout.write("VALID\n" if ok else "INVALID\n")
    return 0 if ok else 1


def _cmd_bench(args) -> int:
    h = _read_pattern(args.pattern)
    header = (
        "instance\tk\tn\tbaseline_weight\tpipeline_weight\texact_opt"
        "\ttau_star\tbaseline_ratio\tpipeline_ratio"
    )
    rows = []
    for i in range(args.count):
        g = unit_weights(random_graph(args.n, args.p, args.seed + i))
        base_sol = solve_baseline(g, h, EnumerationBudget(args.budget))
        pipe_sol = solve(g, h, EnumerationBudget(args.budget))
        hg = build_copy_hypergraph(g, h, EnumerationBudget(args.budget))
        tau = solve_cover_lp(hg, g.weights)[0].value if hg.hyperedges else Fraction(0)
        opt = None
        if g.n <= args.cap:
            _, opt = exact_min_hitting_set(g, h, cap=args.cap)
        def ratio(weight):
            if opt is None or opt == 0:
                return "-"
            return str(weight / opt)
        rows.append(
            f"r{i:04d}\t{h.k}\t{g.n}\t{base_sol.weight}\t{pipe_sol.weight}"
            f"\t{opt if opt is not None else '-'}\t{tau}"
            f"\t{ratio(base_sol.weight)}\t{ratio(pipe_sol.weight)}"
        )
    sys.stdout.write(header + "\n" + "\n".join(sorted(rows)) + "\n")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hitset",
        description="Approximate and exact minimum-weight pattern hitting sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="approximate a minimum hitting set")
    p_solve.add_argument("graph")
    p_solve.add_argument("pattern")
    p_solve.add_argument("--budget", type=int, default=DEFAULT_MAX_COPIES)
    p_solve.add_argument("--explain", action="store_true")
    p_solve.set_defaults(func=_cmd_solve)

    p_exact = sub.add_parser("exact", help="exact optimum by branch and bound")
    p_exact.add_argument("graph")
    p_exact.add_argument("pattern", nargs="?")
    p_exact.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p_exact.add_argument("--budget", type=int, default=DEFAULT_MAX_COPIES)
    p_exact.add_argument("--vertex-cover", action="store_true")
    p_exact.set_defaults(func=_cmd_exact)

    p_analyze = sub.add_parser("analyze", help="classify a pattern and build its gadget")
    p_analyze.add_argument("pattern")
    p_analyze.set_defaults(func=_cmd_analyze)

    p_gen = sub.add_parser("gen", help="generate instances")
    gen_sub = p_gen.add_subparsers(dest="kind", required=True)
    for kind in ("vc-edge-gadget", "vc-vertex-gadget"):
        pg = gen_sub.add_parser(kind)
        pg.add_argument("--base", required=True)
        pg.add_argument("--pattern", required=True)
        pg.set_defaults(func=_cmd_gen, kind=kind)
    pg = gen_sub.add_parser("gl")
    pg.add_argument("--base", required=True, help="base hypergraph file")
    pg.add_argument("--pattern", required=True)
    pg.add_argument("--cloud-size", type=int, required=True)
    pg.add_argument("--multiplier", type=int, default=1)
    pg.add_argument("--seed", type=int, default=0)
    pg.set_defaults(func=_cmd_gen, kind="gl")
    pg = gen_sub.add_parser("random")
    pg.add_argument("--n", type=int, required=True)
    pg.add_argument("--p", type=float, required=True)
    pg.add_argument("--seed", type=int, default=0)
    pg.set_defaults(func=_cmd_gen, kind="random")

    p_verify = sub.add_parser("verify", help="check a solution document")
    p_verify.add_argument("graph")
    p_verify.add_argument("pattern")
    p_verify.add_argument("solution")
    p_verify.set_defaults(func=_cmd_verify)

    p_bench = sub.add_parser("bench", help="baseline vs pipeline over a seeded corpus")
    p_bench.add_argument("--pattern", required=True)
    p_bench.add_argument("--count", type=int, default=10)
    p_bench.add_argument("--n", type=int, default=10)
    p_bench.add_argument("--p", type=float, default=0.4)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p_bench.add_argument("--budget", type=int, default=DEFAULT_MAX_COPIES)
    p_bench.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (VerificationError, InvalidColoringError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
