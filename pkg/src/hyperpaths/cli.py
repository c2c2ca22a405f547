"""
Command-line interface of the hyperpaths library.

    hyperpaths enumerate  --n 4 --k 2 --coherent-only --oracle lp
    hyperpaths count      --n 11 --by-length
    hyperpaths embed      --n 5 --k 2
    hyperpaths capture    --n 4 --k 2 --omega "0,1,3,100"
    hyperpaths capture    --n 5 --k 2 --c "3,1,4,2,5" --omega -12,16,-16,-4,-13
    hyperpaths gap-search --k 3 --n-max 6
    hyperpaths generate   --n 6

Exit codes: 0 success, 1 oracle disagreement for k=2, 2 usage, 3 budget exceeded, 4 non-generic omega
"""

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Union, List, Tuple, Optional

import numpy as np
import pandas as pd
from concurrent.futures import ProcessPoolExecutor

from .path_utils import (PathUtils, Direction, HyperpathsError, InvalidParameter, ResourceLimit, NonGenericOmega)
from .coherence import CoherenceOracle
from .counting import CoherentCounting
from .generator import CoherentGenerator
from .geometry import MonotonePathPolytope


EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_NON_GENERIC = 4



@dataclass
class RunConfig:
    subcommand: str
    n: Optional[int] = None
    k: Optional[int] = None
    c: Optional[tuple] = None
    omega: Optional[tuple] = None
    fmt: str = "json"
    out: Optional[str] = None
    coherent_only: bool = False
    oracle: Optional[str] = None
    by_length: bool = False
    n_max: Optional[int] = None
    threads: int = 1
    max_paths: Optional[int] = None
    max_seconds: Optional[float] = None
    debug: bool = False


    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        cfg = cls(subcommand=args.subcommand,
                  n=args.n, k=getattr(args, "k", None),
                  c=PathUtils.parse_rational_list(args.c) if getattr(args, "c", None) else None,
                  omega=PathUtils.parse_rational_list(args.omega) if getattr(args, "omega", None) else None,
                  fmt=args.format, out=args.out,
                  coherent_only=getattr(args, "coherent_only", False),
                  oracle=getattr(args, "oracle", None),
                  by_length=getattr(args, "by_length", False),
                  n_max=getattr(args, "n_max", None),
                  threads=args.threads if args.threads is not None else (PathUtils.env_int("HYPERPATHS_THREADS") or 1),
                  max_paths=args.max_paths if args.max_paths is not None else PathUtils.env_int("HYPERPATHS_MAX_PATHS"),
                  max_seconds=args.max_seconds if args.max_seconds is not None
                                               else PathUtils.env_float("HYPERPATHS_MAX_SECONDS"),
                  debug=args.debug or PathUtils.env_flag("HYPERPATHS_DEBUG"))
        cfg.validate()
        return cfg


    def validate(self) -> None:
        """
        Check the configuration before dispatch; raise InvalidParameter on any problem
        """
        needs_nk = ("enumerate", "embed", "capture")
        if self.subcommand in needs_nk and (self.n is None or self.k is None):
            raise InvalidParameter(f"RunConfig.validate(): `{self.subcommand}` requires --n and --k")
        if self.subcommand in ("count", "generate") and self.n is None:
            raise InvalidParameter(f"RunConfig.validate(): `{self.subcommand}` requires --n")
        if self.subcommand == "gap-search":
            if self.k is None or self.n_max is None:
                raise InvalidParameter("RunConfig.validate(): `gap-search` requires --k and --n-max")
            if self.k < 3:
                raise InvalidParameter(f"RunConfig.validate(): `gap-search` requires k >= 3 (got {self.k})")
        if self.subcommand == "capture" and self.omega is None:
            raise InvalidParameter("RunConfig.validate(): `capture` requires --omega")
        if self.c is not None and self.n is not None and len(self.c) != self.n:
            raise InvalidParameter(f"RunConfig.validate(): --c has {len(self.c)} entries, but n={self.n}")
        if self.threads < 1:
            raise InvalidParameter(f"RunConfig.validate(): --threads must be positive (got {self.threads})")
        if self.coherent_only and self.oracle is None:
            self.oracle = "lp"


    def direction(self) -> Optional[Direction]:
        if self.c is None:
            return None
        d = Direction.from_values(self.c)
        if not d.is_identity():
            print(f"note: the direction was sorted; sorted position i holds the original index "
                  f"{list(d.permutation)}[i-1], and all the supports below use sorted positions", file=sys.stderr)
        return d




######################################################################################################################

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="ambient dimension (size)")
    common.add_argument("--format", choices=("json", "csv"), default="json", help="output format (default: json)")
    common.add_argument("--out", help="output file (default: stdout)")
    common.add_argument("--threads", type=int, default=None, help="number of worker processes (default: 1)")
    common.add_argument("--max-paths", type=int, default=None, help="budget on the number of enumerated paths")
    common.add_argument("--max-seconds", type=float, default=None, help="budget on the running time")
    common.add_argument("--debug", action="store_true", help="print debugging information")

    with_k = argparse.ArgumentParser(add_help=False)
    with_k.add_argument("--k", type=int, help="number of ones in each vertex")
    with_k.add_argument("--c", help='direction, as comma-separated rationals "c1,c2,..." (default: 1,2,...,n)')

    parser = argparse.ArgumentParser(prog="hyperpaths",
                                     description="Coherent monotone paths on hypersimplices, in exact arithmetic.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("enumerate", parents=[common, with_k], help="list the monotone paths")
    p.add_argument("--coherent-only", action="store_true", help="only list the coherent paths")
    p.add_argument("--oracle", choices=("lp", "criterion", "both"), help="coherence oracle to run on each path")

    p = sub.add_parser("count", parents=[common], help="count the coherent paths of Delta(n,2)")
    p.add_argument("--n-max", type=int, help="last size of the range [n, n-max]")
    p.add_argument("--by-length", action="store_true", help="emit the table of counts by length")

    sub.add_parser("embed", parents=[common, with_k], help="embed the paths, flagging the vertices")

    p = sub.add_parser("capture", parents=[common, with_k], help="the path captured by a functional omega")
    p.add_argument("--omega", help='functional, as comma-separated rationals "w1,w2,...", in the labels of --c')

    p = sub.add_parser("gap-search", parents=[common], help="look for criterion-true but non-coherent paths")
    p.add_argument("--k", type=int, help="number of ones in each vertex (at least 3)")
    p.add_argument("--n-max", type=int, help="largest size to scan")

    sub.add_parser("generate", parents=[common], help="generate the coherent lattice paths of size n (k=2)")

    return parser



def write_records(records: List[dict], cfg: RunConfig, columns: Optional[List[str]] = None) -> None:
    """
    Emit the records as JSON-lines or as CSV (with header), to --out or stdout
    """
    if cfg.fmt == "csv":
        df = pd.DataFrame(records, columns=columns)
        for col in df.columns:
            if df[col].map(lambda v: isinstance(v, (list, dict))).any():
                df[col] = df[col].map(json.dumps)
        text = df.to_csv(index=False, lineterminator="\n")
    else:
        text = "".join(json.dumps(r) + "\n" for r in records)

    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        sys.stdout.write(text)



def write_frame(df: pd.DataFrame, cfg: RunConfig) -> None:
    # Round-trip through pandas' JSON writer to get plain Python values instead of numpy scalars
    records = json.loads(df.to_json(orient="records"))
    write_records(records, cfg, columns=list(df.columns))




######################################################################################################################

def examine_first_steps(cfg: RunConfig, c: Direction, first_steps: list) -> List[Tuple[dict, bool]]:
    """
    Enumerate the monotone paths starting with the given first steps, running the selected oracles.
    Module-level, so that it can run in a worker process

    :return:    List of pairs (record, disagreement flag), in canonical order
    """
    oracle = CoherenceOracle(cfg.n, cfg.k, c=c, debug=cfg.debug,
                             max_paths=cfg.max_paths, max_seconds=cfg.max_seconds)
    out = []
    for first in first_steps:
        for path in oracle.enumerate_monotone_paths(first_step=first):
            record = PathUtils.path_to_json(path)
            record["length"] = path.length
            disagree = False
            keep = True
            if cfg.oracle in ("lp", "both"):
                record["coherent"] = oracle.is_coherent_lp(path).verdict
                keep = record["coherent"]
            if cfg.oracle in ("criterion", "both"):
                record["criterion"] = oracle.satisfies_criterion(path).holds
                if cfg.oracle == "criterion":
                    keep = record["criterion"]
            if cfg.oracle == "both":
                disagree = record["coherent"] != record["criterion"]
            if keep or not cfg.coherent_only:
                out.append((record, disagree))
    return out



def cmd_enumerate(cfg: RunConfig) -> int:
    oracle = CoherenceOracle(cfg.n, cfg.k, c=cfg.direction(), debug=cfg.debug,
                             max_paths=cfg.max_paths, max_seconds=cfg.max_seconds)

    first_steps = oracle.improving_swaps(oracle.v_min)
    # Partition by first step; concatenating the batches in order keeps the canonical order
    batches = [[first_steps[i] for i in idx] for idx in
               np.array_split(np.arange(len(first_steps)), min(cfg.threads, len(first_steps)))]
    if len(batches) == 1:
        results = examine_first_steps(cfg, oracle.c, batches[0])
    else:
        with ProcessPoolExecutor(max_workers=len(batches)) as pool:
            futures = [pool.submit(examine_first_steps, cfg, oracle.c, batch) for batch in batches]
            results = [item for f in futures for item in f.result()]

    if cfg.max_paths is not None and len(results) > cfg.max_paths:
        raise ResourceLimit(f"cmd_enumerate(): more than {cfg.max_paths} paths")

    write_records([r for (r, _) in results], cfg)

    disagreements = [r for (r, d) in results if d]
    for r in disagreements:
        print(f"oracle disagreement: {r['supports']} coherent={r['coherent']} criterion={r['criterion']}",
              file=sys.stderr)
    if disagreements:
        if cfg.k == 2:
            print(f"error: {len(disagreements)} disagreements between the LP and the criterion for k=2",
                  file=sys.stderr)
            return EXIT_DISAGREEMENT
        print(f"warning: {len(disagreements)} disagreements (the criterion is not sufficient for k >= 3)",
              file=sys.stderr)

    return EXIT_OK



def cmd_count(cfg: RunConfig) -> int:
    n_max = cfg.n_max if cfg.n_max is not None else cfg.n

    if cfg.by_length:
        write_frame(CoherentCounting.length_table(cfg.n, n_max), cfg)
        return EXIT_OK

    records = []
    for n in range(cfg.n, n_max + 1):
        state = CoherentCounting.count_vector(n)
        total = CoherentCounting.count_total(n)
        assert state.total == total, f"cmd_count(): recursion ({state.total}) and closed form ({total}) disagree"
        records.append({"n": n, "coherent_paths": total, "t": state.t, "q": state.q, "c": state.c})

    write_records(records, cfg, columns=["n", "coherent_paths", "t", "q", "c"])
    return EXIT_OK



def cmd_embed(cfg: RunConfig) -> int:
    mpp = MonotonePathPolytope(cfg.n, cfg.k, c=cfg.direction(), debug=cfg.debug,
                               max_paths=cfg.max_paths, max_seconds=cfg.max_seconds)
    write_frame(mpp.embedding_table(), cfg)
    return EXIT_OK



def cmd_capture(cfg: RunConfig) -> int:
    oracle = CoherenceOracle(cfg.n, cfg.k, c=cfg.direction(), debug=cfg.debug)
    # omega is given in the original labels, like --c
    path = oracle.captured_path(oracle.c.to_sorted(cfg.omega))

    certificate = oracle.is_coherent_lp(path)
    assert certificate.verdict, f"cmd_capture(): the captured path {path} failed the LP coherence check"

    record = PathUtils.path_to_json(path)
    record["certificate"] = certificate.to_json()
    write_records([record], cfg)
    return EXIT_OK



def cmd_gap_search(cfg: RunConfig) -> int:
    path = CoherenceOracle.search_criterion_gap(cfg.k, cfg.n_max, max_paths=cfg.max_paths,
                                                max_seconds=cfg.max_seconds, debug=cfg.debug)
    if path is None:
        if cfg.out:
            write_records([], cfg)
        print("none")
        return EXIT_OK

    record = PathUtils.path_to_json(path)
    record["steps"] = [PathUtils.step_to_json(st) for st in CoherenceOracle.enhanced_steps(path)]
    write_records([record], cfg)
    return EXIT_OK



def cmd_generate(cfg: RunConfig) -> int:
    generator = CoherentGenerator(threads=cfg.threads, debug=cfg.debug)
    paths = generator.generate_coherent(cfg.n)
    records = []
    for lp in paths:
        record = lp.to_json()
        record["length"] = lp.length
        if lp.n >= 4:
            record["type"] = generator.classify(lp).tag
        records.append(record)
    write_records(records, cfg)
    return EXIT_OK



COMMANDS = {
    "enumerate": cmd_enumerate,
    "count": cmd_count,
    "embed": cmd_embed,
    "capture": cmd_capture,
    "gap-search": cmd_gap_search,
    "generate": cmd_generate,
}



VECTOR_OPTIONS = ("--c", "--omega")



def join_vector_values(argv: List[str]) -> List[str]:
    """
    Rewrite "--omega -12,16" as "--omega=-12,16", so that argparse does not take a vector
    with a negative first entry for an option
    """
    out = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in VECTOR_OPTIONS and i + 1 < len(argv) and argv[i + 1].startswith("-") \
                and argv[i + 1][1:2].isdigit():
            out.append(f"{token}={argv[i + 1]}")
            i += 2
        else:
            out.append(token)
            i += 1
    return out



def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(join_vector_values(sys.argv[1:] if argv is None else list(argv)))   # Usage errors exit with code 2

    try:
        cfg = RunConfig.from_args(args)
        return COMMANDS[cfg.subcommand](cfg)
    except NonGenericOmega as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_NON_GENERIC
    except ResourceLimit as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_BUDGET
    except HyperpathsError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_USAGE
