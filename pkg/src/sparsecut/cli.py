"""Command-line front end: decompose, approx, exact, validate, bench.

Disconnected inputs to ``approx`` and ``exact`` are split into connected
components, solved per component and recombined (no edge crosses
components, so sizes and certificates simply add).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .decompose import tree_bipartite_decompose, validate_decomposition
from .drivers import auto_approx, thm2_approx, thm3_approx
from .edgelist import ParseError, parse_edge_list
from .generators import generate, instance_seed
from .graph import Graph, GraphError, connected_components, induced_subgraph
from .maxcut import ApproxResult, thm1_approx
from .oracle import OracleCapError, exact_max_cut

_ALGOS = {
    "thm1": thm1_approx,
    "thm2": thm2_approx,
    "thm3": thm3_approx,
    "auto": auto_approx,
}


def _read_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def _frac(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _split(g: Graph) -> list[tuple[Graph, tuple[int, ...]]]:
    comps = connected_components(g)
    if len(comps) == 1:
        return [(g, tuple(range(g.n)))]
    return [induced_subgraph(g, comp) for comp in comps]


def _cmd_decompose(args) -> int:
    g = _read_graph(args.file)
    out = {"n": g.n, "m": g.m, "decompositions": []}
    for sub, ids in _split(g):
        d = tree_bipartite_decompose(sub)
        entry = d.to_json_dict()
        for comp in entry["components"]:
            comp["vertices"] = [ids[v] for v in comp["vertices"]]
            comp["roots"] = [ids[v] for v in comp["roots"]]
            comp["root_edges"] = [[ids[u], ids[v]] for u, v in comp["root_edges"]]
        out["decompositions"].append(entry)
    json.dump(out, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def _combine_results(g: Graph, parts: list[tuple[ApproxResult, tuple[int, ...]]]) -> dict:
    sides = [0] * g.n
    cut_total = 0
    x_total = 0
    witness_count = 0
    lower = Fraction(0)
    upper = 0
    algos = set()
    for res, ids in parts:
        cut_total += res.cut.size
        x_total += res.x
        witness_count += len(res.witnesses)
        lower += res.lower_bound
        upper += res.mc_upper_bound
        algos.add(res.algorithm)
        for v in range(res.n):
            sides[ids[v]] = res.cut.side[v]
    ratio = Fraction(1) if upper == 0 else lower / upper
    return {
        "algorithm": parts[0][0].algorithm if len(algos) == 1 else sorted(algos),
        "driver": parts[0][0].driver,
        "n": g.n,
        "m": g.m,
        "components": len(parts),
        "cut_size": cut_total,
        "sides": sides,
        "x": x_total,
        "witness_count": witness_count,
        "lower_bound": _frac(lower),
        "mc_upper_bound": upper,
        "certified_ratio": _frac(ratio),
    }


def _cmd_approx(args) -> int:
    g = _read_graph(args.file)
    fn = _ALGOS[args.algo]
    parts = []
    for sub, ids in _split(g):
        if args.algo == "auto":
            parts.append((fn(sub, effort=args.effort), ids))
        else:
            parts.append((fn(sub), ids))
    if len(parts) == 1:
        out = parts[0][0].to_json_dict()
    else:
        out = _combine_results(g, parts)
    json.dump(out, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def _cmd_exact(args) -> int:
    g = _read_graph(args.file)
    sides = [0] * g.n
    total = 0
    for sub, ids in _split(g):
        cut = exact_max_cut(sub)
        total += cut.size
        for v in range(sub.n):
            sides[ids[v]] = cut.side[v]
    json.dump({"n": g.n, "m": g.m, "mc": total, "sides": sides}, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def _cmd_validate(args) -> int:
    g = _read_graph(args.file)
    reports = []
    ok = True
    for sub, ids in _split(g):
        d = tree_bipartite_decompose(sub)
        rep = validate_decomposition(sub, d)
        ok = ok and rep.ok
        reports.append(rep.to_json_dict())
    json.dump({"ok": ok, "reports": reports}, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0 if ok else 1


@dataclass
class BenchConfig:
    """Benchmark run description, normally loaded from a JSON file."""

    model: str
    params: dict
    count: int
    seed: int
    algorithms: list[str] = field(default_factory=lambda: ["thm1", "thm2"])
    oracle: bool = False
    output: Optional[str] = None

    @classmethod
    def from_json(cls, text: str) -> "BenchConfig":
        data = json.loads(text)
        known = {"model", "params", "count", "seed", "algorithms", "oracle", "output"}
        unknown = set(data) - known
        if unknown:
            raise GraphError(f"unknown bench config keys: {sorted(unknown)}")
        return cls(**data)


BENCH_COLUMNS = [
    "instance",
    "seed",
    "n",
    "m",
    "algo",
    "cut",
    "exact_mc",
    "achieved_ratio",
    "certified_ratio",
    "time_ns",
]


def run_bench(cfg: BenchConfig, stream) -> None:
    writer = csv.writer(stream)
    writer.writerow(BENCH_COLUMNS)
    for idx in range(cfg.count):
        sub_seed = instance_seed(cfg.seed, idx)
        g = generate(cfg.model, cfg.params, sub_seed)
        mc: Optional[int] = None
        if cfg.oracle:
            mc = exact_max_cut(g).size
        for algo in cfg.algorithms:
            fn = _ALGOS[algo]
            t0 = time.perf_counter_ns()
            res = fn(g)
            elapsed = time.perf_counter_ns() - t0
            achieved = ""
            if mc is not None:
                af = Fraction(1) if mc == 0 else Fraction(res.cut.size, mc)
                achieved = _frac(af)
                if af < res.guaranteed_ratio:
                    raise AssertionError(
                        f"instance {idx} ({algo}): achieved {af} below certified "
                        f"{res.guaranteed_ratio}"
                    )
            writer.writerow(
                [
                    idx,
                    sub_seed,
                    g.n,
                    g.m,
                    algo,
                    res.cut.size,
                    "" if mc is None else mc,
                    achieved,
                    _frac(res.guaranteed_ratio),
                    elapsed,
                ]
            )


def _cmd_bench(args) -> int:
    with open(args.config, "r", encoding="utf-8") as fh:
        cfg = BenchConfig.from_json(fh.read())
    if args.output:
        cfg.output = args.output
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8", newline="") as fh:
            run_bench(cfg, fh)
    else:
        run_bench(cfg, sys.stdout)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sparsecut",
        description="Max-cut approximation with machine-checkable certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="emit the tree/bipartite decomposition as JSON")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_decompose)

    p = sub.add_parser("approx", help="run an approximation algorithm")
    p.add_argument("file")
    p.add_argument("--algo", choices=sorted(_ALGOS), default="auto")
    p.add_argument("--effort", choices=["fast", "best"], default="best")
    p.set_defaults(fn=_cmd_approx)

    p = sub.add_parser("exact", help="exhaustive maximum cut (small graphs only)")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_exact)

    p = sub.add_parser("validate", help="check the decomposition invariants")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("bench", help="run a seeded benchmark sweep to CSV")
    p.add_argument("--config", required=True)
    p.add_argument("--output", default=None)
    p.set_defaults(fn=_cmd_bench)

    return parser


def run_cli(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (ParseError, GraphError, OracleCapError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
