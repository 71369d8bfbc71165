"""Command-line entry point.

Exit codes: 0 success, 1 a verified claim failed, 2 unparsable input,
3 input is not a tree where one is required, 4 a size cap was exceeded.
Every flag can also be set through an environment variable named
RDLAB_<FLAG>, e.g. RDLAB_WORKERS=4; explicit flags win.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import oracle, treedp
from .certificates import Assignment, is_dominating, is_packing, is_rds, is_ridf
from .enumeration import ENUM_CAP, all_trees
from .families import ConstructionTrace, StarException, recognize_f, recognize_h, replay, sample_trace
from .graph import Graph, GraphError, NotATreeError, Tree, as_tree
from .io import ParseError, format_edgelist, format_edgelist_line, parse_assignment, parse_graph, to_graph6
from .oracle import CapExceeded
from .verify import (
    SweepReport,
    verify_bound_sandwich,
    verify_lemmas_on_traces,
    verify_oracle_dp,
    verify_theorem_F,
    verify_theorem_H,
)

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_NOT_TREE, EXIT_CAP = 0, 1, 2, 3, 4

CLAIMS = ("sandwich", "theorem-H", "theorem-F", "lemmas-H", "lemmas-F", "oracle-dp")


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: str | None = None
    format: str = "edgelist"
    method: str = "dp"
    family: str | None = None
    claim: str = "all"
    n: int | None = None
    n_max: int = 10
    n_max_ri: int = 11
    count: int = 1000
    budget: int = 16
    seed: int | None = None
    workers: int = 1
    output: str = "text"
    report_dir: str | None = None
    timing: bool = False
    kind: str | None = None
    set: str | None = None
    assignment: str | None = None
    emit: str = "trace"

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        fields = {k: v for k, v in vars(args).items() if k in cls.__dataclass_fields__ and v is not None}
        cfg = cls(**fields)
        cfg.validate()
        return cfg

    def validate(self) -> None:
        needs_seed = self.command == "generate" or (
            self.command == "verify" and self.claim in ("lemmas-H", "lemmas-F", "all")
        )
        if needs_seed and self.seed is None:
            raise CliError(f"{self.command} needs --seed (or RDLAB_SEED)", EXIT_PARSE)
        if self.command == "verify" and self.claim != "oracle-dp" and self.n_max > ENUM_CAP:
            raise CliError(f"--n-max {self.n_max} exceeds enumeration cap {ENUM_CAP}", EXIT_CAP)
        if self.command == "verify" and self.claim == "oracle-dp":
            if self.n_max > oracle.SET_CAP or self.n_max_ri > oracle.RIDF_CAP:
                raise CliError("oracle-dp bounds exceed oracle caps", EXIT_CAP)
        if self.command == "enumerate" and self.n is not None and self.n > ENUM_CAP:
            raise CliError(f"--n {self.n} exceeds enumeration cap {ENUM_CAP}", EXIT_CAP)


def _env(name: str, default=None, conv=str):
    raw = os.environ.get(f"RDLAB_{name.upper()}")
    return default if raw is None else conv(raw)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rdlab", description="Restrained (Italian) domination on trees.")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("--input", default=_env("input"), help="graph file, or - for stdin")
        p.add_argument("--format", choices=("edgelist", "graph6"), default=_env("format", "edgelist"))

    def output(p: argparse.ArgumentParser, choices=("json", "text", "csv")) -> None:
        p.add_argument("--output", choices=choices, default=_env("output", "text"))

    p = sub.add_parser("solve", help="compute gamma_r and gamma_ri with witnesses")
    graph_input(p)
    p.add_argument("--method", choices=("dp", "brute"), default=_env("method", "dp"))
    output(p)

    p = sub.add_parser("check", help="check a candidate set or assignment")
    graph_input(p)
    p.add_argument("--kind", choices=("dominating", "rds", "packing", "ridf"), required=True)
    p.add_argument("--set", help="comma-separated vertex ids")
    p.add_argument("--assignment", help="assignment file: n, then n labels")
    output(p)

    p = sub.add_parser("recognize", help="test membership in family H or F")
    graph_input(p)
    p.add_argument("--family", choices=("H", "F"), default=_env("family"), required=_env("family") is None)
    output(p, ("json", "text"))

    p = sub.add_parser("generate", help="sample a random construction trace")
    p.add_argument("--family", choices=("H", "F"), default=_env("family"), required=_env("family") is None)
    p.add_argument("--budget", type=int, default=_env("budget", 16, int))
    p.add_argument("--seed", type=int, default=_env("seed", None, int))
    p.add_argument("--emit", choices=("trace", "edgelist", "graph6"), default="trace")

    p = sub.add_parser("enumerate", help="all trees of one order, one per line")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("edgelist", "graph6"), default=_env("format", "graph6"))

    p = sub.add_parser("verify", help="run theorem and lemma sweeps")
    p.add_argument("--claim", choices=(*CLAIMS, "all"), default=_env("claim", "all"))
    p.add_argument("--n-max", type=int, default=_env("n_max", 10, int))
    p.add_argument("--n-max-ri", type=int, default=_env("n_max_ri", 11, int))
    p.add_argument("--count", type=int, default=_env("count", 1000, int))
    p.add_argument("--budget", type=int, default=_env("budget", 16, int))
    p.add_argument("--seed", type=int, default=_env("seed", None, int))
    p.add_argument("--workers", type=int, default=_env("workers", 1, int))
    p.add_argument("--report-dir", default=_env("report_dir"))
    p.add_argument("--timing", action="store_true", help="include wall time in reports")
    output(p, ("json", "text"))
    return parser


def _read_graph(cfg: RunConfig) -> Graph:
    if cfg.input is None:
        raise CliError("--input is required", EXIT_PARSE)
    try:
        text = sys.stdin.read() if cfg.input == "-" else Path(cfg.input).read_text()
        return parse_graph(text, cfg.format)
    except (OSError, ParseError, UnicodeDecodeError) as exc:
        raise CliError(f"cannot parse {cfg.input}: {exc}", EXIT_PARSE) from None


def _read_tree(cfg: RunConfig) -> Tree:
    g = _read_graph(cfg)
    try:
        return as_tree(g)
    except NotATreeError as exc:
        raise CliError(f"input is not a tree: {exc}", EXIT_NOT_TREE) from None


def _emit(rows: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, sort_keys=True) + "\n"
    if fmt == "csv":
        keys = sorted(rows)
        cells = [json.dumps(rows[k]) if isinstance(rows[k], (list, dict)) else str(rows[k]) for k in keys]
        return ",".join(keys) + "\n" + ",".join(f'"{c}"' if "," in c else c for c in cells) + "\n"
    return "".join(f"{k}={json.dumps(v) if isinstance(v, (list, dict)) else v}\n" for k, v in rows.items())


def cmd_solve(cfg: RunConfig) -> int:
    if cfg.method == "dp":
        t = _read_tree(cfg)
        r, s = treedp.gamma_r_tree(t)
        ri, f = treedp.gamma_ri_tree(t)
        rows = {"n": t.n, "method": "treedp", "gamma_r": r, "gamma_r_witness": sorted(s),
                "gamma_ri": ri, "gamma_ri_witness": list(f.values)}
    else:
        g = _read_graph(cfg)
        try:
            rep = oracle.gamma_r_bruteforce(g)
            rep2 = oracle.gamma_ri_bruteforce(g)
        except CapExceeded as exc:
            raise CliError(str(exc), EXIT_CAP) from None
        rows = {"n": g.n, "method": "bruteforce", "gamma_r": rep.value,
                "gamma_r_witness": sorted(rep.witnesses[0]), "gamma_r_witness_count": len(rep.witnesses),
                "gamma_ri": rep2.value, "gamma_ri_witness": list(rep2.witnesses[0].values),
                "gamma_ri_witness_count": len(rep2.witnesses)}
    sys.stdout.write(_emit(rows, cfg.output))
    return EXIT_OK


def cmd_check(cfg: RunConfig) -> int:
    g = _read_graph(cfg)
    try:
        if cfg.kind == "ridf":
            if cfg.assignment is None:
                raise CliError("--kind ridf needs --assignment", EXIT_PARSE)
            f = Assignment(parse_assignment(Path(cfg.assignment).read_text()))
            ok, witness = is_ridf(g, f)
        else:
            if cfg.set is None:
                raise CliError(f"--kind {cfg.kind} needs --set", EXIT_PARSE)
            members = [int(x) for x in cfg.set.split(",") if x.strip()]
            checker = {"dominating": is_dominating, "rds": is_rds, "packing": is_packing}[cfg.kind]
            ok, witness = checker(g, members)
    except (OSError, ParseError, ValueError) as exc:
        raise CliError(f"bad certificate: {exc}", EXIT_PARSE) from None
    rows = {"kind": cfg.kind, "valid": ok, "witness": list(witness) if isinstance(witness, tuple) else witness}
    sys.stdout.write(_emit(rows, cfg.output))
    return EXIT_OK


def cmd_recognize(cfg: RunConfig) -> int:
    t = _read_tree(cfg)
    result = recognize_h(t) if cfg.family == "H" else recognize_f(t)
    if isinstance(result, StarException):
        rows = {"family": cfg.family, "verdict": "star-exception", "t": result.t}
    elif isinstance(result, ConstructionTrace):
        rows = {"family": cfg.family, "verdict": "member", "trace": result.to_json()}
    else:
        rows = {"family": cfg.family, "verdict": "none"}
    if cfg.output == "json":
        sys.stdout.write(json.dumps(rows, sort_keys=True) + "\n")
    else:
        sys.stdout.write(f"{rows['verdict']}\n")
        if "trace" in rows:
            sys.stdout.write(result.dumps() + "\n")
    return EXIT_OK


def cmd_generate(cfg: RunConfig) -> int:
    try:
        trace = sample_trace(cfg.family, cfg.budget, cfg.seed)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_CAP) from None
    if cfg.emit == "trace":
        sys.stdout.write(trace.dumps() + "\n")
    else:
        tree, _ = replay(trace)
        sys.stdout.write((format_edgelist(tree) if cfg.emit == "edgelist" else to_graph6(tree) + "\n"))
    return EXIT_OK


def cmd_enumerate(cfg: RunConfig) -> int:
    try:
        trees = all_trees(cfg.n)
        for t in trees:
            line = to_graph6(t) if cfg.format == "graph6" else format_edgelist_line(t)
            sys.stdout.write(line + "\n")
    except CapExceeded as exc:
        raise CliError(str(exc), EXIT_CAP) from None
    return EXIT_OK


def _run_claim(claim: str, cfg: RunConfig) -> SweepReport:
    if claim == "sandwich":
        return verify_bound_sandwich(cfg.n_max, seed=cfg.seed or 0, workers=cfg.workers)
    if claim == "theorem-H":
        return verify_theorem_H(cfg.n_max, seed=cfg.seed or 0, workers=cfg.workers)
    if claim == "theorem-F":
        return verify_theorem_F(cfg.n_max, seed=cfg.seed or 0, workers=cfg.workers)
    if claim == "oracle-dp":
        return verify_oracle_dp(cfg.n_max, min(cfg.n_max_ri, cfg.n_max), workers=cfg.workers)
    family = claim.split("-")[1]
    return verify_lemmas_on_traces(family, cfg.count, cfg.budget, cfg.seed, workers=cfg.workers)


def _write_counterexamples(directory: Path, report: SweepReport) -> None:
    path = directory / f"{report.claim}-counterexamples.jsonl"
    with path.open("w") as fh:
        for failure in report.failures:
            record = {"edgelist": failure["edgelist"], "trace": failure.get("trace"), "failure": failure}
            fh.write(json.dumps(record, sort_keys=True) + "\n")


def cmd_verify(cfg: RunConfig) -> int:
    claims = CLAIMS if cfg.claim == "all" else (cfg.claim,)
    reports = []
    for claim in claims:
        if claim == "oracle-dp" and cfg.claim == "all":
            cfg_claim = RunConfig(**{**cfg.__dict__, "n_max": min(cfg.n_max, 12)})
        else:
            cfg_claim = cfg
        reports.append(_run_claim(claim, cfg_claim))
    if cfg.report_dir:
        out = Path(cfg.report_dir)
        out.mkdir(parents=True, exist_ok=True)
        for rep in reports:
            (out / f"{rep.claim}.json").write_text(rep.dumps(cfg.timing))
            if rep.failures:
                _write_counterexamples(out, rep)
    if cfg.output == "json":
        sys.stdout.write(json.dumps([r.to_json(cfg.timing) for r in reports], indent=2, sort_keys=True) + "\n")
    else:
        for rep in reports:
            status = "PASS" if rep.passed else "FAIL"
            sizes = ", ".join(f"n={n}:{c}" for n, c in sorted(rep.per_n.items()))
            sys.stdout.write(f"{status} {rep.claim} trees={rep.trees_checked} failures={len(rep.failures)} [{sizes}]\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


COMMANDS = {
    "solve": cmd_solve,
    "check": cmd_check,
    "recognize": cmd_recognize,
    "generate": cmd_generate,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig.from_args(args)
        return COMMANDS[cfg.command](cfg)
    except CliError as exc:
        print(f"rdlab: {exc}", file=sys.stderr)
        return exc.code
    except GraphError as exc:
        print(f"rdlab: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
