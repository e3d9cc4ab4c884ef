"""Command-line harness.

Subcommands: gen (write random DIMACS instances), solve (one exact solve as a
JSON line), bench (CSV campaign over edge probabilities and strategies),
learn-order (optimize an ordering, dump the permutation and the reordered
adjacency grid), verify-lemma (exhaustive + sampled prefix-forcing checks).

Exit codes: 0 success, 1 usage/input error, 2 counterexample or assertion
failure.  When --seed is omitted, the CLIQUE_ORDER_SEED environment variable
is consulted before falling back to 0.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .bench import STRATEGIES, rows_to_csv, run_bench
from .engine import OptimizerConfig, optimize_ordering
from .graph import er_generate, from_dimacs, relabel, to_dimacs
from .oracle import enumerate_labeled_graphs, lemma_verify
from .solver import solve_with_ordering

__all__ = ["main", "console_main", "build_parser"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_COUNTEREXAMPLE = 2


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("CLIQUE_ORDER_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"CLIQUE_ORDER_SEED must be an integer, got {env!r}")
    return 0


def _add_engine_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tau", type=float, default=2.0, help="sinkhorn temperature")
    p.add_argument("--gamma", type=float, default=0.02, help="gumbel noise scale")
    p.add_argument("--sinkhorn-iters", type=int, default=None,
                   help="sinkhorn iterations (default: 20 for n<=100, else 10)")
    p.add_argument("--alpha", type=float, default=40.0, help="tanh logit scale")
    p.add_argument("--epsilon", type=float, default=None,
                   help="cost-matrix base parameter (default: 0.2 for n<=100, else 0.06)")
    p.add_argument("--lr", type=float, default=0.5, help="gradient step size")
    p.add_argument("--outer-iters", type=int, default=300, help="gradient steps per chain")
    p.add_argument("--restarts", type=int, default=8, help="independent optimizer chains")


def _cfg_from_args(args, seed: int) -> OptimizerConfig:
    return OptimizerConfig(
        tau=args.tau,
        gamma=args.gamma,
        sinkhorn_iters=args.sinkhorn_iters,
        alpha=args.alpha,
        epsilon=args.epsilon,
        learning_rate=args.lr,
        outer_iters=args.outer_iters,
        restarts=args.restarts,
        seed=seed,
    )


def _read_graph(path: str):
    return from_dimacs(Path(path).read_text())


def _parse_float_list(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"expected comma-separated numbers, got {text!r}")


# -- subcommands ----------------------------------------------------------------

def _cmd_gen(args) -> int:
    seed = _resolve_seed(args)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for i in range(args.instances):
        g = er_generate(args.n, args.p, seed + i)
        path = out_dir / f"er_n{args.n}_p{args.p:g}_s{seed + i}.clq"
        path.write_text(to_dimacs(g))
        print(path)
    return EXIT_OK


def _cmd_solve(args) -> int:
    seed = _resolve_seed(args)
    g = _read_graph(args.graph)
    cfg = _cfg_from_args(args, seed)
    rep = solve_with_ordering(
        g, args.ordering, seed=seed, cfg=cfg, t_limit=args.tlimit
    )
    payload: dict = {
        "n": g.n,
        "seed": seed,
        "ordering": rep.ordering,
        "omega": rep.result.omega,
        "steps": int(rep.result.steps),
        "search_seconds": rep.result.wall_time,
    }
    if rep.inference_seconds is not None:
        payload["inference_seconds"] = rep.inference_seconds
    payload["clique"] = [int(v) for v in rep.result.clique]
    print(json.dumps(payload))
    return EXIT_OK


def _cmd_bench(args) -> int:
    seed = _resolve_seed(args)
    cfg = _cfg_from_args(args, seed)
    strategies = [s.strip() for s in args.ordering.split(",") if s.strip()]
    rows = run_bench(
        n=args.n,
        p_list=_parse_float_list(args.p),
        instances=args.instances,
        strategies=strategies,
        seed=seed,
        pad_to=args.pad_to,
        cfg=cfg,
        t_limit=args.tlimit,
    )
    csv_text = rows_to_csv(rows)
    if args.out:
        Path(args.out).write_text(csv_text)
    else:
        sys.stdout.write(csv_text)
    return EXIT_OK


def _cmd_learn_order(args) -> int:
    seed = _resolve_seed(args)
    g = _read_graph(args.graph)
    cfg = _cfg_from_args(args, seed)
    perm = optimize_ordering(g, cfg)
    perm_line = " ".join(str(int(x)) for x in perm)
    grid = relabel(g, perm).adjacency_matrix()
    grid_text = "\n".join(" ".join(str(int(x)) for x in row) for row in grid)
    if args.out:
        Path(f"{args.out}.perm.txt").write_text(perm_line + "\n")
        Path(f"{args.out}.adj.txt").write_text(grid_text + "\n")
        print(f"{args.out}.perm.txt")
        print(f"{args.out}.adj.txt")
    else:
        print(perm_line)
        print(grid_text)
    return EXIT_OK


def _cmd_verify_lemma(args) -> int:
    seed = _resolve_seed(args)
    if not 1 <= args.max_exhaustive_n <= 8:
        raise ValueError(f"--max-exhaustive-n must be in 1..8, got {args.max_exhaustive_n}")
    if not 1 <= args.sampled_n <= 8:
        raise ValueError(f"--sampled-n must be in 1..8, got {args.sampled_n}")
    if args.samples < 0:
        raise ValueError(f"--samples must be >= 0, got {args.samples}")
    sink = open(args.out, "w") if args.out else sys.stdout
    checked = failures = 0
    try:
        for n in range(1, args.max_exhaustive_n + 1):
            for idx, g in enumerate(enumerate_labeled_graphs(n)):
                report = lemma_verify(g, graph_id=f"exhaustive_n{n}_{idx}")
                sink.write(report.to_json() + "\n")
                checked += 1
                failures += 0 if report.ok else 1
        for i in range(args.samples):
            g = er_generate(args.sampled_n, 0.5, seed + i)
            report = lemma_verify(g, graph_id=f"er_n{args.sampled_n}_p0.5_s{seed + i}")
            sink.write(report.to_json() + "\n")
            checked += 1
            failures += 0 if report.ok else 1
    finally:
        if sink is not sys.stdout:
            sink.close()
    print(f"checked {checked} graphs, {failures} counterexamples", file=sys.stderr)
    return EXIT_COUNTEREXAMPLE if failures else EXIT_OK


# -- wiring ----------------------------------------------------------------------

def build_parser() -> _Parser:
    parser = _Parser(prog="cliqueorder", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_gen = sub.add_parser("gen", help="write random DIMACS instances")
    p_gen.add_argument("--n", type=int, required=True, help="vertex count")
    p_gen.add_argument("--p", type=float, required=True, help="edge probability")
    p_gen.add_argument("--instances", type=int, default=1, help="number of files")
    p_gen.add_argument("--seed", type=int, default=None)
    p_gen.add_argument("--out", default=".", help="output directory")
    p_gen.set_defaults(func=_cmd_gen)

    p_solve = sub.add_parser("solve", help="solve one DIMACS instance exactly")
    p_solve.add_argument("graph", help="DIMACS file")
    p_solve.add_argument("--ordering", choices=STRATEGIES, default="degree")
    p_solve.add_argument("--tlimit", type=float, default=0.025,
                         help="near-root re-sort threshold")
    p_solve.add_argument("--seed", type=int, default=None)
    _add_engine_flags(p_solve)
    p_solve.set_defaults(func=_cmd_solve)

    p_bench = sub.add_parser("bench", help="CSV campaign over p values and strategies")
    p_bench.add_argument("--n", type=int, required=True)
    p_bench.add_argument("--p", required=True, help="comma-separated edge probabilities")
    p_bench.add_argument("--instances", type=int, default=100)
    p_bench.add_argument("--ordering", default=",".join(STRATEGIES),
                         help="comma-separated strategies to run")
    p_bench.add_argument("--seed", type=int, default=None)
    p_bench.add_argument("--pad-to", type=int, default=None,
                         help="zero-pad every instance to this vertex count")
    p_bench.add_argument("--tlimit", type=float, default=0.025)
    p_bench.add_argument("--out", default=None, help="CSV output path (default stdout)")
    _add_engine_flags(p_bench)
    p_bench.set_defaults(func=_cmd_bench)

    p_order = sub.add_parser("learn-order",
                             help="optimize an ordering; dump permutation and reordered adjacency")
    p_order.add_argument("graph", help="DIMACS file")
    p_order.add_argument("--seed", type=int, default=None)
    p_order.add_argument("--out", default=None,
                         help="output prefix (writes PREFIX.perm.txt and PREFIX.adj.txt)")
    _add_engine_flags(p_order)
    p_order.set_defaults(func=_cmd_learn_order)

    p_lemma = sub.add_parser("verify-lemma",
                             help="verify the prefix-forcing property exhaustively and on samples")
    p_lemma.add_argument("--max-exhaustive-n", type=int, default=5,
                         help="check every labeled graph up to this size")
    p_lemma.add_argument("--sampled-n", type=int, default=7,
                         help="size of sampled random instances")
    p_lemma.add_argument("--samples", type=int, default=100)
    p_lemma.add_argument("--seed", type=int, default=None)
    p_lemma.add_argument("--out", default=None, help="JSON-lines output path (default stdout)")
    p_lemma.set_defaults(func=_cmd_verify_lemma)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
