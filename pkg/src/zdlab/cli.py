"""Command-line front end.

Exit codes::

    0   success (mdim: Defined, Infinite or Undefined)
    1   verify/oracle found a disagreement between two computations
    3   mdim or survey produced an Unknown verdict (budget exhausted)
    64  usage error: bad flags, range, claim id or budget
    65  bad input data: ring spec, presentation, axiom violation, graph file
    66  input file not found
    73  output file cannot be written
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import catalog as cat
from .claims import FAIL, UnknownClaim, equality_search, verify_claims
from .graph import (Graph, GraphError, export, import_edge_list, import_json, is_connected,
                    random_connected_graph)
from .lab import survey_csv, survey_json, survey_markdown, survey_zn, zd_graph
from .mdim import (DEFAULT_BUDGET, Defined, Exhaustion, Infinite, MdimVerdict, TwinTriple,
                   Undefined, Unknown, brute_force_mdim, mdim, verdict_value)
from .rings import (MAX_ORDER, FiniteRing, RingError, all_zd_nilpotent, is_integral_domain,
                    zd_square_zero, zero_divisors)
from .ringspec import parse_ring_spec

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_UNKNOWN = 3
EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_NOINPUT = 66
EXIT_CANTCREAT = 73

BUDGET_CAP = 30


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    budget: int = DEFAULT_BUDGET
    order_cap: int = MAX_ORDER
    format: str | None = None
    workers: int = 1
    seed: int = 0

    def __post_init__(self):
        if not 0 <= self.budget <= BUDGET_CAP:
            raise UsageError(f"budget must be in 0..{BUDGET_CAP}; scans past 2^{BUDGET_CAP} are refused")
        if self.order_cap < 1:
            raise UsageError("order cap must be positive")
        if self.workers < 1:
            raise UsageError("workers must be >= 1")


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name}={raw!r} is not an integer") from None


def config_from(args: argparse.Namespace) -> RunConfig:
    budget = args.budget if args.budget is not None else _env_int("ZDG_BUDGET", DEFAULT_BUDGET)
    workers = args.workers if args.workers is not None else _env_int("ZDG_WORKERS", 1)
    return RunConfig(budget=budget, order_cap=args.order_cap, format=getattr(args, "format", None),
                     workers=workers, seed=args.seed)


def parse_range(text: str) -> list[int]:
    """``a..b`` inclusive, a single integer, or a comma-separated mix of both."""
    out: list[int] = []
    for part in text.split(","):
        lo, sep, hi = part.partition("..")
        try:
            a = int(lo)
            b = int(hi) if sep else a
        except ValueError:
            raise UsageError(f"bad range {text!r}; expected e.g. 2..60") from None
        if a < 2 or b < a:
            raise UsageError(f"bad range {part!r}; need 2 <= a <= b")
        out.extend(range(a, b + 1))
    return list(dict.fromkeys(out))


# -- commands ----------------------------------------------------------------------

def _set(R: FiniteRing, xs) -> str:
    return "{" + ", ".join(R.name(x) for x in xs) + "}"


def cmd_ring(spec: str, cfg: RunConfig) -> tuple[str, int]:
    R = parse_ring_spec(spec, cfg.order_cap)
    L = zero_divisors(R)
    info = {
        "ring": R.descriptor,
        "order": R.order,
        "units": len(R.units()),
        "zero_divisors": len(L),
        "L(R)": [R.name(x) for x in L],
        "integral_domain": is_integral_domain(R),
        "all_zd_nilpotent": all_zd_nilpotent(R),
        "L(R)^2=0": zd_square_zero(R),
    }
    if cfg.format == "json":
        return json.dumps(info, ensure_ascii=False) + "\n", EXIT_OK
    yn = {True: "yes", False: "no"}
    lines = [
        f"ring             {R.descriptor}",
        f"order            {R.order}",
        f"units            {info['units']}",
        f"|L(R)|           {len(L)}",
        f"L(R)             {_set(R, L)}",
        f"integral domain  {yn[info['integral_domain']]}",
        f"L(R) nilpotent   {yn[info['all_zd_nilpotent']]}",
        f"L(R)^2 = 0       {yn[info['L(R)^2=0']]}",
    ]
    return "\n".join(lines) + "\n", EXIT_OK


def render_verdict(G: Graph, v: MdimVerdict) -> str:
    if isinstance(v, Defined):
        s = f"Mdim = {v.k}"
        if v.k:
            s += ", witness {" + ", ".join(G.labels[i] for i in v.witness) + "}"
        return s
    if isinstance(v, Infinite):
        if isinstance(v.proof, TwinTriple):
            t = v.proof
            return f"Mdim = ∞ (twin triple {G.labels[t.u]}, {G.labels[t.v]}, {G.labels[t.w]})"
        assert isinstance(v.proof, Exhaustion)
        return f"Mdim = ∞ (exhaustion, {v.proof.subsets_checked} subsets)"
    if isinstance(v, Undefined):
        return "Mdim undefined (empty graph)"
    return f"Mdim unknown ({v.note})"


def load_graph_file(path: str) -> Graph:
    text = Path(path).read_text()
    if path.endswith(".json") or text.lstrip().startswith("{"):
        try:
            return import_json(text)
        except json.JSONDecodeError as exc:
            raise GraphError(f"{path}: {exc}") from None
    return import_edge_list(text)


def cmd_mdim(spec: str | None, graph_file: str | None, cfg: RunConfig) -> tuple[str, int]:
    if graph_file is not None:
        G = load_graph_file(graph_file)
        if not is_connected(G):
            raise GraphError(f"{graph_file}: graph is disconnected; "
                             "multiset dimension is only defined for connected graphs")
    else:
        G = zd_graph(parse_ring_spec(spec, cfg.order_cap))
    t0 = time.perf_counter()
    v = mdim(G, cfg.budget)
    print(f"elapsed {time.perf_counter() - t0:.3f} s", file=sys.stderr)
    if cfg.format == "json":
        out = {"mdim": verdict_value(v), "vertices": G.n, "edges": G.edge_count,
               "detail": render_verdict(G, v)}
        if isinstance(v, Defined):
            out["witness"] = [G.labels[i] for i in v.witness]
        text = json.dumps(out, ensure_ascii=False) + "\n"
    else:
        text = render_verdict(G, v) + "\n"
    return text, EXIT_UNKNOWN if isinstance(v, Unknown) else EXIT_OK


def cmd_survey(rng: str, cfg: RunConfig, kind: str = "zn") -> tuple[str, int]:
    rows = survey_zn(parse_range(rng), cfg.budget, cfg.workers, kind)
    render = {"csv": survey_csv, "markdown": survey_markdown, "json": survey_json}
    fmt = cfg.format or "csv"
    if fmt not in render:
        raise UsageError(f"survey cannot render {fmt!r}; use csv, markdown or json")
    unknown = any(isinstance(r.verdict, Unknown) for r in rows)
    return render[fmt](rows), EXIT_UNKNOWN if unknown else EXIT_OK


def cmd_verify(claims: list[str], cfg: RunConfig) -> tuple[str, int]:
    reports = verify_claims(claims or ["all"], cfg.budget)
    counts: dict[str, int] = {}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    summary = ", ".join(f"{k} {v}" for k, v in sorted(counts.items()))
    print(f"{len(reports)} checks: {summary}", file=sys.stderr)
    if cfg.format == "markdown":
        lines = ["| claim | instance | expected | computed | status | note |",
                 "|---|---|---|---|---|---|"]
        lines += [f"| {r.claim} | {r.instance} | {r.expected} | {r.computed} | {r.status} "
                  f"| {r.note} |" for r in reports]
        text = "\n".join(lines) + "\n"
    else:
        text = "".join(r.to_json() + "\n" for r in reports)
    return text, EXIT_FAIL if counts.get(FAIL) else EXIT_OK


def cmd_export(spec: str, fmt: str, cfg: RunConfig) -> tuple[str, int]:
    R = parse_ring_spec(spec, cfg.order_cap)
    return export(zd_graph(R), fmt, R.descriptor), EXIT_OK


def cmd_catalog(cfg: RunConfig) -> tuple[str, int]:
    lines = [f"{name}\t{cat.describe(name)}" for name in cat.names()]
    lines += [f"{alias}\talias of {target}" for alias, target in cat.ALIASES.items()]
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_equality(cfg: RunConfig) -> tuple[str, int]:
    hits = equality_search(budget=cfg.budget)
    lines = [json.dumps({"ring": a.name, "vertices": a.graph.n, "diameter": a.diameter,
                         "witness": [a.graph.labels[i] for i in a.verdict.witness]},
                        ensure_ascii=False) for a in hits]
    print(f"{len(hits)} graphs meet the order bound with equality", file=sys.stderr)
    return "".join(line + "\n" for line in lines), EXIT_OK


def cmd_oracle(count: int, max_n: int, cfg: RunConfig) -> tuple[str, int]:
    """Compare the solver with plain enumeration on seeded random connected graphs."""
    rng = random.Random(cfg.seed)
    bad = []
    for i in range(count):
        n = rng.randint(1, max_n)
        G = random_connected_graph(n, rng, p=rng.uniform(0.1, 0.7))
        fast = verdict_value(mdim(G, cfg.budget))
        slow = brute_force_mdim(G)[0]
        if fast != slow:
            bad.append(json.dumps({"case": i, "edges": G.edges(), "solver": fast, "brute": slow}))
    head = f"{count - len(bad)}/{count} agree (seed {cfg.seed}, n <= {max_n})\n"
    return head + "".join(b + "\n" for b in bad), EXIT_FAIL if bad else EXIT_OK


# -- argument parsing ----------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--budget", type=int, default=None,
                        help=f"exhaustive-search budget, at most {BUDGET_CAP} "
                             f"(env ZDG_BUDGET, default {DEFAULT_BUDGET})")
    common.add_argument("--workers", type=int, default=None,
                        help="worker processes for surveys (env ZDG_WORKERS, default 1)")
    common.add_argument("--seed", type=int, default=0, help="seed for random graph corpora")
    common.add_argument("--order-cap", type=int, default=MAX_ORDER,
                        help=f"largest ring order to build (default {MAX_ORDER})")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    p = _Parser(prog="zdlab", description="Zero-divisor graphs and their multiset dimension.",
                epilog="exit codes: 0 ok, 1 check failed, 3 unknown verdict, "
                       "64 usage, 65 bad input, 66 missing file, 73 cannot write output")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("ring", parents=[common], help="describe a ring")
    s.add_argument("spec")
    s.add_argument("--format", choices=["text", "json"], default="text")

    s = sub.add_parser("mdim", parents=[common], help="multiset dimension of a ZD-graph or graph file")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("spec", nargs="?")
    src.add_argument("--graph", metavar="FILE", help="edge-list or JSON graph file")
    s.add_argument("--format", choices=["text", "json"], default="text")

    s = sub.add_parser("survey", parents=[common], help="Z_n survey table")
    s.add_argument("range", help="e.g. 2..60")
    s.add_argument("--kind", choices=["zn", "gauss"], default="zn",
                   help="survey Z_n (default) or the Gaussian rings Z_n[i]")
    s.add_argument("--format", choices=["csv", "markdown", "json"], default="csv")

    s = sub.add_parser("verify", parents=[common], help="check the published claims")
    s.add_argument("claims", nargs="*", help="claim ids, default all")
    s.add_argument("--format", choices=["json", "markdown"], default="json")

    s = sub.add_parser("export", parents=[common], help="export a ZD-graph")
    s.add_argument("spec")
    s.add_argument("graph_format", nargs="?", default="dot", choices=["dot", "json", "edge-list"])
    s.add_argument("--format", dest="format", choices=["dot", "json", "edge-list"], default=None)

    sub.add_parser("catalog", parents=[common], help="list catalog ring names")
    sub.add_parser("equality", parents=[common],
                   help="search the corpus for Mdim-3 graphs of maximal order")

    s = sub.add_parser("oracle", parents=[common], help="solver vs enumeration on random graphs")
    s.add_argument("--count", type=int, default=500)
    s.add_argument("--max-n", type=int, default=8)
    return p


def run(argv: list[str] | None = None) -> tuple[str, int, str | None]:
    args = build_parser().parse_args(argv)
    cfg = config_from(args)
    cmd = args.command
    if cmd == "ring":
        text, code = cmd_ring(args.spec, cfg)
    elif cmd == "mdim":
        text, code = cmd_mdim(args.spec, args.graph, cfg)
    elif cmd == "survey":
        text, code = cmd_survey(args.range, cfg, args.kind)
    elif cmd == "verify":
        text, code = cmd_verify(args.claims, cfg)
    elif cmd == "export":
        text, code = cmd_export(args.spec, args.format or args.graph_format, cfg)
    elif cmd == "catalog":
        text, code = cmd_catalog(cfg)
    elif cmd == "equality":
        text, code = cmd_equality(cfg)
    else:
        if args.max_n > 12 or args.count < 1:
            raise UsageError("oracle needs --count >= 1 and --max-n <= 12")
        text, code = cmd_oracle(args.count, args.max_n, cfg)
    return text, code, args.out


def main(argv: list[str] | None = None) -> int:
    try:
        text, code, out = run(argv)
    except UsageError as exc:
        print(f"zdlab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownClaim as exc:
        print(f"zdlab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"zdlab: {exc}", file=sys.stderr)
        return EXIT_NOINPUT
    except (RingError, GraphError, ValueError) as exc:
        print(f"zdlab: {exc}", file=sys.stderr)
        return EXIT_DATA
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        try:
            Path(out).write_text(text, encoding="utf-8")
        except OSError as exc:
            print(f"zdlab: cannot write {out}: {exc}", file=sys.stderr)
            return EXIT_CANTCREAT
    return code


if __name__ == "__main__":
    sys.exit(main())
