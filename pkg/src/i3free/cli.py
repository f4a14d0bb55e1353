"""Command-line surface.

Subcommands: count, classify, partition, pinwheel, sample, amalgamate,
verify, bounds.  Exit codes: 0 success, 1 verification failure, 2 classify
on a digraph with an independent triple, 3 partition unavailable or
failed, 64 usage error, 65 malformed input data, 74 I/O error.
"""
from __future__ import annotations

import argparse
import itertools
import json
import sys
from typing import Optional

from . import census as census_mod
from . import sample as sample_mod
from ._backend import BACKEND
from .classify import classify as classify_digraph
from .classify import has_pinwheel
from .core import (
    Digraph,
    delta_set,
    delta_v,
    is_bitournament,
    is_I3_free,
    is_tournament,
    non_adjacency_graph,
)
from .dgf import emit_dgf, emit_dgf_inline, parse_dgf
from .errors import (
    ConstructionDefect,
    DomainError,
    EmbeddingError,
    Error,
    InputError,
    InvalidArc,
    NoNonArc,
    ParseError,
    PreconditionViolated,
    RangeError,
)
from .fraisse import amalgamate
from .partition import bipartition, constructive_partition

EX_USAGE = 64
EX_DATAERR = 65
EX_IOERR = 74


class _Parser(argparse.ArgumentParser):
    """argparse with the documented usage exit code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _read_config(path: Optional[str]) -> dict:
    """key=value lines, '#' comments; values are integers."""
    if path is None:
        return {}
    known = {"workers", "vertex_cap", "direct_cap", "graphs_cap", "rejection_cap"}
    out = {}
    with open(path) as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            key = key.strip()
            if not sep or key not in known:
                raise InputError(f"{path}:{line_no}: unknown config entry {line!r}")
            try:
                out[key] = int(value.strip())
            except ValueError:
                raise InputError(
                    f"{path}:{line_no}: value for {key} must be an integer"
                ) from None
    return out


def _load_digraph(path: str) -> Digraph:
    with open(path) as fh:
        return parse_dgf(fh.read()).to_digraph()


def _emit(payload, as_json: bool, plain_lines) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        for line in plain_lines:
            print(line)


def _cmd_count(args, config) -> int:
    workers = args.workers if args.workers is not None else config.get("workers", 1)
    if args.method == "direct":
        cap = args.cap if args.cap is not None else config.get("direct_cap")
        counts = census_mod.census_direct(args.n, workers=workers, cap=cap)
    else:
        cap = args.cap if args.cap is not None else config.get("graphs_cap")
        counts = census_mod.census_graphs(
            args.n, classes=args.classes, workers=workers, cap=cap
        )
    census_mod.upsert_census_csv(args.out, [counts])
    cells = [
        counts.n,
        counts.method,
        counts.F,
        counts.T,
        "" if counts.A is None else counts.A,
        "" if counts.B is None else counts.B,
        "" if counts.C is None else counts.C,
        "" if counts.uncovered is None else counts.uncovered,
    ]
    print(",".join(str(c) for c in cells))
    return 0


def _cmd_classify(args, config) -> int:
    d = _load_digraph(args.infile)
    try:
        flags = classify_digraph(d)
    except DomainError as exc:
        print(f"classify: {exc}", file=sys.stderr)
        return 2
    payload = flags.to_json()
    _emit(
        payload,
        args.json,
        [f"{k}: {json.dumps(v)}" for k, v in payload.items()],
    )
    return 0


def _cmd_partition(args, config) -> int:
    d = _load_digraph(args.infile)
    if args.method == "bipartition":
        parts = bipartition(d)
        if parts is None:
            print(
                "partition: non-adjacency graph is not bipartite; no two-tournament split",
                file=sys.stderr,
            )
            return 3
        payload = {"part1": list(parts[0]), "part2": list(parts[1])}
        _emit(
            payload,
            args.json,
            [f"part1: {payload['part1']}", f"part2: {payload['part2']}"],
        )
        return 0
    try:
        witness = constructive_partition(d, subset_rule=args.subset_rule)
    except NoNonArc as exc:
        print(f"partition: {exc}", file=sys.stderr)
        return 3
    except PreconditionViolated as exc:
        print(f"partition: {exc}", file=sys.stderr)
        return 3
    except ConstructionDefect as exc:
        print(f"partition: {exc}", file=sys.stderr)
        if exc.witness is not None:
            print(json.dumps(exc.witness.to_json(), indent=2), file=sys.stderr)
        return 3
    payload = witness.to_json()
    _emit(
        payload,
        args.json,
        [f"part1: {payload['part1']}", f"part2: {payload['part2']}"]
        + [f"{k}: {v}" for k, v in payload.items() if k not in ("part1", "part2")],
    )
    return 0


def _cmd_pinwheel(args, config) -> int:
    d = _load_digraph(args.infile)
    try:
        ks = [int(tok) for tok in args.k.split(",") if tok.strip()]
    except ValueError:
        raise InputError(f"--k must be a comma-separated integer list, got {args.k!r}") from None
    if not ks:
        raise InputError("--k must name at least one cycle length")
    result = {str(k): has_pinwheel(d, k) for k in ks}
    _emit(
        {"n": d.n, "pinwheel": result},
        args.json,
        [f"k={k}: {json.dumps(v)}" for k, v in result.items()],
    )
    return 0


def _cmd_sample(args, config) -> int:
    trace_fh = open(args.trace, "w") if args.trace else None
    collect = None
    if trace_fh is not None:
        collect = lambda d: print(emit_dgf_inline(d), file=trace_fh)
    try:
        if args.mcmc:
            samples = args.samples
            thinning = args.thin
            if args.steps is not None:
                if samples is not None:
                    raise InputError("--steps and --samples are alternatives; give one")
                eff_thin = thinning if thinning is not None else max(1, args.n * (args.n - 1) // 2)
                samples = max(1, args.steps // eff_thin)
            if samples is None:
                raise InputError("sample: --samples (or --mcmc --steps) is required")
            est = sample_mod.estimate_fraction(
                args.n,
                samples,
                burn_in=args.burnin,
                thinning=thinning,
                rng_seed=args.seed,
                collect=collect,
            )
            method = "mcmc"
        else:
            if args.samples is None:
                raise InputError("sample: --samples is required")
            cap = config.get("rejection_cap", sample_mod.REJECTION_CAP)
            est = sample_mod.estimate_fraction_rejection(
                args.n, args.samples, rng_seed=args.seed, cap=cap, collect=collect
            )
            method = "rejection"
    finally:
        if trace_fh is not None:
            trace_fh.close()
    payload = est.to_json()
    payload.update(
        {"method": method, "seed": args.seed, "rng": sample_mod.RNG_ALGORITHM}
    )
    print(json.dumps(payload, indent=2))
    return 0


def _cmd_amalgamate(args, config) -> int:
    a = _load_digraph(args.a)
    b = _load_digraph(args.b)
    c = _load_digraph(args.c)
    with open(args.fa) as fh:
        fa = json.load(fh)
    with open(args.ga) as fh:
        ga = json.load(fh)
    d, emb_b, emb_c = amalgamate(a, b, c, fa, ga)
    text = emit_dgf(d)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    print(
        json.dumps(
            {
                "n": d.n,
                "dgf": text,
                "embed_b": list(emb_b.map),
                "embed_c": list(emb_c.map),
            },
            indent=2,
        )
    )
    return 0


def _brute_triangle_free(d: Digraph) -> bool:
    g = non_adjacency_graph(d)
    return not any(
        g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
        for a, b, c in itertools.combinations(range(d.n), 3)
    )


def _brute_bipartite(d: Digraph) -> bool:
    g = non_adjacency_graph(d)
    edges = g.edges()
    return any(
        all((side >> u) & 1 != (side >> v) & 1 for u, v in edges)
        for side in range(1 << d.n)
    )


def _verify_exhaustive(k: int) -> int:
    """Definitional cross-checks over all 3^C(k,2) digraphs; returns #failures."""
    bad = 0
    for code in range(3 ** (k * (k - 1) // 2)):
        d = census_mod.digraph_of_code(k, code)
        free = is_I3_free(d)
        if free != _brute_triangle_free(d):
            bad += 1
        if is_bitournament(d) != _brute_bipartite(d):
            bad += 1
        if not free:
            continue
        for v in range(k):
            dv = delta_v(d, v)
            if not is_tournament(d, dv):
                bad += 1
            if dv:
                ddv = delta_set(d, dv)
                if v not in ddv:
                    bad += 1
                if dv & ddv:
                    bad += 1
    return bad


def _cmd_verify(args, config) -> int:
    n = args.n
    print(f"kernel backend: {BACKEND}")
    failures = 0
    for k in range(2, min(n, 4) + 1):
        bad = _verify_exhaustive(k)
        failures += bad
        print(f"exhaustive n={k}: {'ok' if bad == 0 else f'{bad} violations'}")
    rows = []
    for k in range(2, n + 1):
        counts = census_mod.census_graphs(k, classes=True)
        rows.append(counts)
        print(
            f"n={k}: F={counts.F} T={counts.T} A={counts.A} B={counts.B} "
            f"C={counts.C} uncovered={counts.uncovered}"
        )
    if len(rows) >= 2:
        growth = census_mod.growth_check(rows)
        print(f"growth checks: {growth}")
        if not all(growth):
            failures += 1
    print(f"verify: {'ok' if failures == 0 else 'FAILED'}")
    return 0 if failures == 0 else 1


def _cmd_bounds(args, config) -> int:
    counts = census_mod.read_census_csv(args.cache)
    reports = census_mod.lemma_bound_report(args.n, counts)
    print(json.dumps([r.to_json() for r in reports], indent=2))
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="i3free", description=__doc__)
    parser.add_argument("--config", help="key=value config file", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="exact census at one n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["direct", "graphs"], default="direct")
    p.add_argument("--classes", action="store_true", help="class counts with --method graphs")
    p.add_argument("--out", default="census.csv")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("classify", help="class membership of one digraph")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("partition", help="two-tournament partition")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument(
        "--method",
        choices=["bipartition", "paper", "constructive"],
        default="bipartition",
        help="two-colouring, or the anchored construction ('paper' = 'constructive')",
    )
    p.add_argument("--subset-rule", choices=["least", "greatest"], default="least")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_partition)

    p = sub.add_parser("pinwheel", help="cycle lengths in the non-adjacency graph")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--k", default="5,7,9", help="comma-separated cycle lengths")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_pinwheel)

    p = sub.add_parser("sample", help="Monte-Carlo bitournament fraction")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--mcmc", action="store_true")
    p.add_argument("--steps", type=int, default=None, help="post-burn-in steps (alternative to --samples)")
    p.add_argument("--burnin", type=int, default=None)
    p.add_argument("--thin", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trace", default=None, help="stream sampled digraphs, one inline dgf per line")
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("amalgamate", help="complete a span of embeddings")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--c", required=True)
    p.add_argument("--fa", required=True, help="file holding a JSON array: embedding of A into B")
    p.add_argument("--ga", required=True, help="file holding a JSON array: embedding of A into C")
    p.add_argument("--out", default=None, help="write the result as dgf here")
    p.set_defaults(func=_cmd_amalgamate)

    p = sub.add_parser("verify", help="invariant suites and coverage report")
    p.add_argument("--n", type=int, default=4)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bounds", help="evaluate the counting bounds from cached counts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cache", default="census.csv")
    p.set_defaults(func=_cmd_bounds)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _read_config(args.config)
        return args.func(args, config)
    except (ParseError, InvalidArc, EmbeddingError, InputError, RangeError, ValueError) as exc:
        print(f"i3free: {exc}", file=sys.stderr)
        return EX_DATAERR
    except OSError as exc:
        print(f"i3free: {exc}", file=sys.stderr)
        return EX_IOERR
    except Error as exc:
        print(f"i3free: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
