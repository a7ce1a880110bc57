"""Command-line front end.

Exit codes, stable across all subcommands:
  0 positive decision / success
  1 usage or parse error
  2 resource limit (budget, cap, retry cap)
  3 negative decision
  4 verification mismatch

Identical invocations produce byte-identical artifacts; wall-clock timings
appear only on stdout, never inside output files.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import deciders, generate, reductions
from .cnf import CnfFormula, emit_dimacs, find_bad_pairs, is_23sat_instance, parse_dimacs
from .errors import ContractViolation, ParseError, ResourceLimitExceeded
from .graphs import Graph, contains_cycle_of_length, emit_dimacs_graph, is_well_covered, parse_dimacs_graph
from .solver import DEFAULT_NODE_BUDGET, solve

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RESOURCE = 2
EXIT_NEGATIVE = 3
EXIT_MISMATCH = 4

DEFAULT_SET_CAP = deciders.DEFAULT_SET_CAP


class UsageError(Exception):
    pass


class VerificationMismatch(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    """One invocation, fully determined: same config + same inputs means
    byte-identical outputs."""

    subcommand: str
    seed: int = 0
    cap_nodes: int = DEFAULT_NODE_BUDGET
    cap_sets: int = DEFAULT_SET_CAP
    verify: bool = False
    paths: dict = field(default_factory=dict)

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        paths = {}
        for key in ("cnf", "input", "inputs", "graph", "out", "map", "trace",
                    "witness", "out_dir"):
            value = getattr(args, key, None)
            if value:
                paths[key] = value
        return cls(
            subcommand=args.command,
            seed=getattr(args, "seed", 0),
            cap_nodes=getattr(args, "cap_nodes", DEFAULT_NODE_BUDGET),
            cap_sets=getattr(args, "cap_sets", DEFAULT_SET_CAP),
            verify=getattr(args, "verify", False),
            paths=paths,
        )


def _read_formula(path) -> CnfFormula:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e}") from None
    return parse_dimacs(text)


def _read_graph(path) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e}") from None
    return parse_dimacs_graph(text)


def _write(path, text):
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    tmp = Path(str(path) + ".tmp")
    tmp.write_text(text)
    tmp.replace(path)


def _model_line(model, num_vars):
    lits = [v if model[v] else -v for v in range(1, num_vars + 1)]
    return "v " + " ".join(str(l) for l in lits) + " 0"


def cmd_solve(args) -> int:
    cfg = RunConfig.from_args(args)
    f = _read_formula(args.cnf)
    result = solve(f, cfg.cap_nodes)
    if result.satisfiable:
        print("SAT")
        print(_model_line(result.model, f.num_vars))
        return EXIT_OK
    print("UNSAT")
    return EXIT_NEGATIVE


def cmd_reduce(args) -> int:
    cfg = RunConfig.from_args(args)
    f = _read_formula(args.input)
    if args.kind == "to23sat":
        out, trace = reductions.sat_to_23sat(f)
    else:
        out, trace = reductions.eliminate_bad_pairs(f)
    _write(args.out, emit_dimacs(out))
    if args.trace:
        _write(args.trace, reductions.trace_to_json(trace))
    if cfg.verify:
        before = solve(f, cfg.cap_nodes).satisfiable
        after = solve(out, cfg.cap_nodes).satisfiable
        if before != after:
            raise VerificationMismatch(
                f"satisfiability changed across {args.kind}: {before} -> {after}")
        if args.kind == "debadpair" and find_bad_pairs(out):
            raise VerificationMismatch("bad pairs survive the elimination")
        ok, why = is_23sat_instance(out)
        if not ok:
            raise VerificationMismatch(f"output is not a valid 2/3 instance: {why}")
    return EXIT_OK


def cmd_build_graph(args) -> int:
    f = _read_formula(args.input)
    g, gmap = reductions.build_sat_graph(f)
    _write(args.out, emit_dimacs_graph(g))
    if args.map:
        _write(args.map, reductions.map_to_json(gmap))
    if args.check_c6:
        cycle = contains_cycle_of_length(g, 6)
        if cycle is not None:
            raise VerificationMismatch(f"graph contains a 6-cycle: {cycle}")
    return EXIT_OK


def _emit_witness(args, kind, witness_set, *, edge=None, vertex=None):
    doc = deciders.witness_to_json(kind, witness_set, graph_ref=str(args.graph),
                                   edge=edge, vertex=vertex)
    if args.witness:
        _write(args.witness, doc)
    else:
        sys.stdout.write(doc)


def cmd_check(args) -> int:
    cfg = RunConfig.from_args(args)
    g = _read_graph(args.graph)
    kind = args.kind
    params = args.args
    if kind == "shed":
        if len(params) != 1:
            raise UsageError("check shed needs one vertex argument")
        shedding, witness = deciders.is_shedding(g, params[0], cfg.cap_sets)
        if shedding:
            print("shedding")
            return EXIT_OK
        print("not-shedding")
        _emit_witness(args, "not-shedding", witness.set_s, vertex=params[0])
        return EXIT_NEGATIVE
    if kind == "relate":
        if len(params) != 2:
            raise UsageError("check relate needs two vertex arguments")
        relating, witness = deciders.is_relating(g, params[0], params[1], cfg.cap_sets)
        if relating:
            print("relating")
            _emit_witness(args, "relating", witness.set_s, edge=(params[0], params[1]))
            return EXIT_OK
        print("not-relating")
        return EXIT_NEGATIVE
    if kind == "cycle":
        if len(params) != 1:
            raise UsageError("check cycle needs the cycle length")
        cycle = contains_cycle_of_length(g, params[0])
        if cycle is not None:
            print("cycle " + " ".join(str(v) for v in cycle))
            return EXIT_OK
        print("no-cycle")
        return EXIT_NEGATIVE
    if kind == "well-covered":
        if is_well_covered(g, cfg.cap_sets):
            print("well-covered")
            return EXIT_OK
        print("not-well-covered")
        return EXIT_NEGATIVE
    if kind == "w2":
        if deciders.is_w2(g, mis_cap=cfg.cap_sets, set_cap=cfg.cap_sets):
            print("w2")
            return EXIT_OK
        print("not-w2")
        return EXIT_NEGATIVE
    if kind == "witness":
        if not args.witness:
            raise UsageError("check witness needs --witness pointing at a witness file")
        doc = deciders.witness_from_json(Path(args.witness).read_text())
        if doc["kind"] == "relating":
            u, v = doc["edge"]
            ok = deciders.validate_relating_witness(
                g, u, v, deciders.RelatingWitness(doc["set"]))
        else:
            ok = deciders.validate_shed_witness(
                g, doc["vertex"], deciders.ShedComplementWitness(doc["set"]))
        if not ok:
            raise VerificationMismatch(f"witness file {args.witness} fails validation")
        print("witness-valid")
        return EXIT_OK
    raise UsageError(f"unknown check kind {kind!r}")


def _verify_pipeline(art, cap_nodes, cap_sets):
    """DPLL on the source versus exact relating decision on the final graph;
    on satisfiable inputs also walks the witness chain forward."""
    result = solve(art.source, cap_nodes)
    x, y = art.re_edge
    relating, _ = deciders.is_relating(art.re_graph, x, y, cap_sets)
    if result.satisfiable != relating:
        raise VerificationMismatch(
            f"solver says {result.satisfiable}, relating decision says {relating}")
    if contains_cycle_of_length(art.re_graph, 6) is not None:
        raise VerificationMismatch("final graph contains a 6-cycle")
    if not result.satisfiable:
        return None
    model = result.model
    lifted = reductions.lift_assignment(art.split_trace, model)
    shed_w = reductions.assignment_to_witness(art.sat_graph, art.graph_map, lifted)
    rel_w = reductions.shed_witness_to_relating_witness(art.sat_graph, art.graph_map.hub, shed_w)
    if not deciders.validate_relating_witness(art.re_graph, x, y, rel_w):
        raise VerificationMismatch("composed witness fails relating validation")
    return {
        "model": {str(v): model[v] for v in sorted(model)},
        "lifted": {str(v): lifted[v] for v in sorted(lifted)},
        "shed_witness": sorted(shed_w.set_s),
        "relating_witness": sorted(rel_w.set_s),
    }


def _run_one_pipeline(cfg, path, out_dir):
    f = _read_formula(path)
    art = reductions.full_pipeline(f)
    _write(out_dir / "input.cnf", emit_dimacs(art.source))
    _write(out_dir / "to23sat.cnf", emit_dimacs(art.split))
    _write(out_dir / "to23sat.trace.json", reductions.trace_to_json(art.split_trace))
    _write(out_dir / "debadpair.cnf", emit_dimacs(art.nobad))
    _write(out_dir / "debadpair.trace.json", reductions.trace_to_json(art.nobad_trace))
    _write(out_dir / "sat-graph.col", emit_dimacs_graph(art.sat_graph))
    _write(out_dir / "sat-graph.map.json", reductions.map_to_json(art.graph_map))
    _write(out_dir / "re-graph.col", emit_dimacs_graph(art.re_graph))
    _write(out_dir / "pendant.trace.json", reductions.trace_to_json(art.pendant_trace))
    summary = {"re_edge": list(art.re_edge),
               "stages": ["to23sat", "debadpair", "build-graph", "pendant"]}
    _write(out_dir / "pipeline.json", json.dumps(summary, indent=2) + "\n")
    _write(out_dir / "composite-trace.json", reductions.composite_trace_json(art))
    verdict = "done"
    if cfg.verify:
        chain = _verify_pipeline(art, cfg.cap_nodes, cfg.cap_sets)
        verdict = "sat" if chain is not None else "unsat"
        if chain is not None:
            _write(out_dir / "chain.json", json.dumps(chain, indent=2) + "\n")
    return verdict


def cmd_pipeline(args) -> int:
    cfg = RunConfig.from_args(args)
    base = Path(args.out_dir)
    stems = [Path(p).stem for p in args.inputs]
    if len(set(stems)) != len(stems):
        stems = [f"{i:03d}-{s}" for i, s in enumerate(stems)]
    for idx, path in enumerate(args.inputs):
        out_dir = base / stems[idx] if len(args.inputs) > 1 else base
        started = time.perf_counter()
        verdict = _run_one_pipeline(cfg, path, out_dir)
        ms = int((time.perf_counter() - started) * 1000)
        print(f"{idx}\tpipeline\t{verdict}\t{ms}")
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.kind == "sat":
        if args.vars is None or args.clauses is None:
            raise UsageError("gen sat needs --vars and --clauses")
        f = generate.random_formula(args.vars, args.clauses, args.seed,
                                    args.size_min, args.size_max)
        text = f"c seed {args.seed}\n" + emit_dimacs(f)
    else:
        if args.vertices is None or args.edges is None:
            raise UsageError("gen graph needs --vertices and --edges")
        if args.forbid:
            g = generate.random_graph_avoiding(args.vertices, args.edges,
                                               args.forbid, args.seed)
        else:
            g = generate.random_graph(args.vertices, args.edges, args.seed)
        text = f"c seed {args.seed}\n" + emit_dimacs_graph(g)
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> _Parser:
    p = _Parser(prog="reledge", description=__doc__,
                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="decide satisfiability of a DIMACS CNF file")
    sp.add_argument("cnf")
    sp.add_argument("--cap-nodes", type=int, default=DEFAULT_NODE_BUDGET)
    sp.set_defaults(func=cmd_solve)

    rp = sub.add_parser("reduce", help="run one reduction stage")
    rp.add_argument("kind", choices=("to23sat", "debadpair"))
    rp.add_argument("input")
    rp.add_argument("--out", required=True)
    rp.add_argument("--trace")
    rp.add_argument("--verify", action="store_true")
    rp.add_argument("--cap-nodes", type=int, default=DEFAULT_NODE_BUDGET)
    rp.set_defaults(func=cmd_reduce)

    bp = sub.add_parser("build-graph", aliases=["build-gi"],
                        help="build the hub/clause/variable gadget graph of a CNF")
    bp.add_argument("input")
    bp.add_argument("--out", required=True)
    bp.add_argument("--map")
    bp.add_argument("--check-c6", action="store_true")
    bp.set_defaults(func=cmd_build_graph)

    cp = sub.add_parser("check", help="decide a graph property")
    cp.add_argument("kind", choices=("shed", "relate", "cycle", "well-covered", "w2", "witness"))
    cp.add_argument("graph")
    cp.add_argument("args", nargs="*", type=int)
    cp.add_argument("--witness")
    cp.add_argument("--cap-sets", type=int, default=DEFAULT_SET_CAP)
    cp.set_defaults(func=cmd_check)

    pp = sub.add_parser("pipeline", help="run the full reduction chain")
    pp.add_argument("inputs", nargs="+")
    pp.add_argument("--out-dir", required=True)
    pp.add_argument("--verify", action="store_true")
    pp.add_argument("--cap-nodes", type=int, default=DEFAULT_NODE_BUDGET)
    pp.add_argument("--cap-sets", type=int, default=DEFAULT_SET_CAP)
    pp.set_defaults(func=cmd_pipeline)

    gp = sub.add_parser("gen", help="generate a seeded random instance")
    gp.add_argument("kind", choices=("sat", "graph"))
    gp.add_argument("--seed", type=int, required=True)
    gp.add_argument("--out")
    gp.add_argument("--vars", type=int)
    gp.add_argument("--clauses", type=int)
    gp.add_argument("--size-min", type=int, default=2)
    gp.add_argument("--size-max", type=int, default=3)
    gp.add_argument("--vertices", type=int)
    gp.add_argument("--edges", type=int)
    gp.add_argument("--forbid", type=int, action="append")
    gp.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, ContractViolation) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitExceeded as e:
        print(f"resource limit: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except VerificationMismatch as e:
        print(f"verification mismatch: {e}", file=sys.stderr)
        return EXIT_MISMATCH


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
