"""Command-line interface: generate / simulate / experiment / serve."""

import argparse
import json
import sys
from pathlib import Path

from .dynamics import SimConfig, run_to_saturation
from .graphs import GraphSpec, generate, giant_component, read_edge_list, write_edge_list
from .presets import EXPERIMENTS, PROFILES, run_experiment, summary_json_bytes


def _add_graph_args(parser: argparse.ArgumentParser, require_model: bool) -> None:
    parser.add_argument("--model", choices=("er", "ba"), required=require_model,
                        help="graph model")
    parser.add_argument("--nodes", type=int, default=1000, help="node count")
    parser.add_argument("--avg-degree", type=float, default=6.0, help="target average degree")


def _add_sim_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--walkers", type=float, default=400.0, help="total walker mass")
    parser.add_argument("--seed-nodes", type=int, default=8,
                        help="number of initially seeded nodes")
    parser.add_argument("--diffusion-rate", type=float, default=0.4,
                        help="fraction of mass leaving a node per tick, in (0,1)")
    parser.add_argument("--r2-threshold", type=float, default=0.99,
                        help="saturation threshold on the mass-vs-degree R^2")
    parser.add_argument("--max-steps", type=int, default=100_000,
                        help="step cap for unconverged runs")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diffwalk",
        description="Deterministic random-walk diffusion on ER/BA graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="generate a graph and write its edge list")
    _add_graph_args(gen, require_model=True)
    gen.add_argument("--seed", type=int, default=0, help="graph RNG seed")
    gen.add_argument("--out", type=Path, default=None, help="output path (default stdout)")

    sim = sub.add_parser("simulate", help="run one simulation to saturation")
    _add_graph_args(sim, require_model=False)
    sim.add_argument("--graph", type=Path, default=None,
                     help="edge-list file to simulate on (instead of generating)")
    _add_sim_args(sim)
    sim.add_argument("--seed", type=int, default=0,
                     help="seed for graph generation and seed-node choice")
    sim.add_argument("--out", type=Path, default=None, help="output path (default stdout)")

    exp = sub.add_parser("experiment", help="run a named ensemble experiment")
    exp.add_argument("name", choices=sorted(EXPERIMENTS), help="experiment preset")
    exp.add_argument("--profile", choices=sorted(PROFILES), default="paper",
                     help="ensemble sizing profile")
    exp.add_argument("--seed", type=int, default=0, help="master seed")
    exp.add_argument("--jobs", type=int, default=1, help="worker processes")
    exp.add_argument("--out", type=Path, default=Path("."),
                     help="output directory for CSV records and the JSON summary")

    srv = sub.add_parser("serve", help="start the interactive session server")
    srv.add_argument("--port", type=int, default=8000)
    srv.add_argument("--host", default="127.0.0.1")
    srv.add_argument("--static", type=Path, default=None,
                     help="front-end asset directory (default: bundled frontend/dist if present)")
    return parser


def _cmd_generate(args) -> int:
    spec = GraphSpec(model=args.model, node_count=args.nodes,
                     avg_degree=args.avg_degree, rng_seed=args.seed)
    g = generate(spec)
    if args.out is None:
        write_edge_list(g, sys.stdout)
    else:
        with open(args.out, "w") as f:
            write_edge_list(g, f)
    return 0


def _cmd_simulate(args) -> int:
    if args.graph is not None:
        with open(args.graph) as f:
            g = read_edge_list(f)
    else:
        if args.model is None:
            raise ValueError("simulate needs either --graph or --model")
        spec = GraphSpec(model=args.model, node_count=args.nodes,
                         avg_degree=args.avg_degree, rng_seed=args.seed)
        g = generate(spec)
    giant, _ = giant_component(g)
    if giant.node_count < g.node_count:
        print(f"running on giant component: {giant.node_count} of {g.node_count} nodes "
              f"({g.node_count - giant.node_count} discarded)", file=sys.stderr)
    cfg = SimConfig(
        diffusion_rate=args.diffusion_rate,
        total_walkers=args.walkers,
        seed_node_count=args.seed_nodes,
        r2_threshold=args.r2_threshold,
        max_steps=args.max_steps,
        rng_seed=args.seed,
    )
    result = run_to_saturation(giant, cfg)
    text = json.dumps(result.to_json_dict(), sort_keys=True, separators=(",", ":")) + "\n"
    if args.out is None:
        sys.stdout.write(text)
    else:
        args.out.write_text(text)
    return 0


def _cmd_experiment(args) -> int:
    out_dir: Path = args.out
    out_dir.mkdir(parents=True, exist_ok=True)

    def sink(name: str, text: str) -> None:
        (out_dir / name).write_text(text)

    summary = run_experiment(args.name, args.profile, args.seed,
                             jobs=args.jobs, sink=sink)
    (out_dir / f"{args.name}_summary.json").write_bytes(summary_json_bytes(summary))
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    uvicorn.run(create_app(static_dir=args.static), host=args.host, port=args.port,
                log_level="info")
    return 0


_COMMANDS = {
    "generate": _cmd_generate,
    "simulate": _cmd_simulate,
    "experiment": _cmd_experiment,
    "serve": _cmd_serve,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
