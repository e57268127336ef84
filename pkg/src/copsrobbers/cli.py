"""Command-line interface: corpus generation, verification suites, structural
analysis, and the play service."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .corpus import build_corpus, load_corpus, write_corpus
from .graph import generate, parse_graph
from .gyarfas import V0Rule
from .oracle import DEFAULT_BUDGET
from .structure import (dilworth_number, is_chordal, is_pt_free, longest_hole,
                        z_of_graph)
from .verify import (TableCache, sample_connected_graphs, summarize,
                     verify_corollary, verify_dilworth, verify_oracle,
                     verify_theorem1)


def _chunks(items: list, n: int) -> list[list]:
    size = max(1, (len(items) + n - 1) // n)
    return [items[i:i + size] for i in range(0, len(items), size)]


def _run_suite(args, entries) -> list:
    cache = TableCache()
    if args.suite == "theorem1":
        rule = V0Rule(args.v0_rule)
        return verify_theorem1(entries, args.t, rule, args.budget, cache)
    if args.suite == "corollary":
        return verify_corollary(entries, args.t, args.budget, cache)
    if args.suite == "oracle":
        return verify_oracle(entries, args.t, args.budget, cache)
    raise ValueError(f"unknown suite {args.suite}")


def _suite_worker(payload):
    args_dict, entries = payload
    args = argparse.Namespace(**args_dict)
    return _run_suite(args, entries)


def cmd_corpus(args) -> int:
    entries, manifest = build_corpus(args.filter, args.count, args.seed,
                                     n_min=args.n_min, n_max=args.n_max,
                                     rejection_share=args.rejection_share)
    path = write_corpus(args.out, entries, manifest)
    print(f"wrote {len(entries)} graphs to {args.out} (manifest {path})")
    print(json.dumps({k: v for k, v in manifest.to_json().items() if k != "entries"}))
    return 0


def cmd_verify(args) -> int:
    if args.suite == "dilworth":
        graphs = [(f"C{k}", generate("cycle", {"k": k})) for k in range(4, 10)]
        graphs += sample_connected_graphs(args.count, n_max=7, seed=args.seed)
        if args.corpus:
            entries, _ = load_corpus(args.corpus)
            graphs += [(e.id, e.graph) for e in entries]
        records = verify_dilworth(graphs, args.budget)
    else:
        if not args.corpus:
            print("suite requires --corpus", file=sys.stderr)
            return 2
        entries, _ = load_corpus(args.corpus)
        if args.jobs > 1 and len(entries) > 1:
            shared = dict(suite=args.suite, t=args.t, v0_rule=args.v0_rule,
                          budget=args.budget)
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                parts = pool.map(_suite_worker,
                                 [(shared, chunk) for chunk in _chunks(entries, args.jobs)])
            records = [r for part in parts for r in part]
        else:
            records = _run_suite(args, entries)
    records.sort(key=lambda r: (r.suite, r.graph_id))
    out = Path(args.out) if args.out else None
    lines = [r.to_json_line() for r in records]
    summary = summarize(records)
    lines.append(json.dumps({"summary": summary}, sort_keys=True))
    text = "\n".join(lines) + "\n"
    if out:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text, encoding="utf-8")
        print(f"report: {out}")
    else:
        sys.stdout.write(text)
    print(f"suite={args.suite} total={summary['total']} "
          f"passed={summary['passed']} failed={summary['failed']}", file=sys.stderr)
    return 0 if summary["failed"] == 0 else 1


def cmd_analyze(args) -> int:
    G = parse_graph(Path(args.graph).read_text(encoding="utf-8"))
    hole = longest_hole(G)
    z, argmin = z_of_graph(G)
    D, cert = dilworth_number(G)
    report = {
        "name": G.name,
        "n": G.n,
        "edges": G.edge_count,
        "longest_hole": hole.to_json() | {"length": hole.length} if hole else None,
        "chordal": is_chordal(G),
        "z": z,
        "z_argmin": argmin,
        "dilworth": D,
        "dilworth_certificate": cert.to_json(),
        "pt_free": {t: is_pt_free(G, t).pt_free for t in range(4, 9)},
    }
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app
    app = create_app(ttl_seconds=args.ttl, transcript_dir=args.transcript_dir,
                     frontend_dir=args.frontend)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="copsrobbers",
        description="pursuit-evasion engine: corpora, verification suites, "
                    "structural analysis, and a play service")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("corpus", help="generate a filtered graph corpus")
    p.add_argument("--filter", required=True,
                   help="no-hole-ge:T | chordal | pt-free:T")
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-min", type=int, default=5)
    p.add_argument("--n-max", type=int, default=20)
    p.add_argument("--rejection-share", type=float, default=0.4,
                   help="fraction of slots drawn by rejection sampling instead "
                        "of construction-guaranteed generators")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=["theorem1", "corollary", "dilworth", "oracle"])
    p.add_argument("--corpus", help="corpus directory")
    p.add_argument("--t", type=int, default=5, help="hole threshold (theorem1/oracle) "
                   "or path length (corollary)")
    p.add_argument("--v0-rule", default="first-vertex",
                   choices=[r.value for r in V0Rule])
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0, help="sampling seed (dilworth)")
    p.add_argument("--count", type=int, default=500,
                   help="sampled graph count (dilworth)")
    p.add_argument("--out", help="report path (JSON lines); stdout if omitted")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("analyze", help="structural report for a graph file")
    p.add_argument("graph", help="graph JSON file")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("serve", help="start the HTTP play service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8714)
    p.add_argument("--ttl", type=float, default=3600.0)
    p.add_argument("--transcript-dir")
    p.add_argument("--frontend", help="static frontend directory to mount at /")
    p.set_defaults(func=cmd_serve)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
