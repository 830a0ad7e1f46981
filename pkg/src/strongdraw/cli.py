"""Command-line front end: verify, simulate, campaign, replay, serve.

Exit codes: 0 success, 1 property/draw violations or byte mismatches,
2 usage errors (argparse default).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .hypergraph import Hypergraph, HypergraphError
from .simulate import DEFAULT_HORIZON, campaign, replay, run_game
from .transcript import Transcript
from .verifier import check_property_iv, verify_all

SEEDS_ENV = "STRONGDRAW_SEEDS"


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        text = Path(args.graph).read_text()
        graph, designated = Hypergraph.from_text(text)
    except (OSError, ValueError, HypergraphError) as exc:
        print(f"error: cannot read graph file: {exc}", file=sys.stderr)
        return 2
    z = args.z if args.z is not None else designated.get("z")
    if z is None:
        print("error: no designated vertex (pass --z or a 'z <id>' header)",
              file=sys.stderr)
        return 2
    if args.pairs:
        report, results = check_property_iv(graph)
        wanted = _parse_pairs(args.pairs)
        chosen = [r for r in results if {r.pair[0], r.pair[1]} in wanted]
        payload = [r.to_obj() for r in chosen]
        print(json.dumps(payload, indent=2) if args.report == "json" else
              "\n".join(f"{r.pair}: count={r.monomorphism_count} "
                        f"identity={r.all_identity}" for r in chosen))
        return 0 if all(r.all_identity for r in chosen) else 1
    report = verify_all(graph, z)
    if args.report == "json":
        print(json.dumps(report.to_obj(), indent=2))
    else:
        print(report.to_text())
    return 0 if report.draw_sufficient else 1


def _parse_pairs(arg: str) -> list[set]:
    out = []
    for chunk in arg.split(";"):
        a, b = chunk.split(":")
        out.append({tuple(sorted(int(x) for x in a.split(","))),
                    tuple(sorted(int(x) for x in b.split(",")))})
    return out


def _cmd_simulate(args: argparse.Namespace) -> int:
    t = run_game(args.adversary, args.horizon, args.seed)
    text = t.to_jsonl()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    bad_monitor = any(m.applicable and not m.holds for m in t.monitors)
    if t.outcome == "FpWin" or t.violation is not None or bad_monitor:
        print(f"violation: outcome={t.outcome} violation={t.violation}",
              file=sys.stderr)
        return 1
    return 0


def _load_seed_list(path: str | None, games: int) -> list[int] | None:
    path = path or os.environ.get(SEEDS_ENV)
    if not path:
        return None
    seeds = [int(line) for line in Path(path).read_text().split()]
    while len(seeds) < games:
        seeds.append(max(seeds) + 1 if seeds else 0)
    return seeds[:games]


def _cmd_campaign(args: argparse.Namespace) -> int:
    seeds = _load_seed_list(args.seeds_file, args.games)
    if seeds is None:
        report = campaign(args.games, args.horizon, base_seed=args.seed,
                          workers=args.workers)
    else:
        from .simulate import campaign_tasks, _play_one, CampaignReport
        from collections import Counter
        tasks = campaign_tasks(args.games, args.horizon, 0)
        tasks = [(name, seeds[i], horizon)
                 for i, (name, _, horizon) in enumerate(tasks)]
        summaries = [_play_one(t) for t in tasks]
        outcomes: Counter = Counter(s.outcome for s in summaries)
        by_adv: dict = {}
        for s in summaries:
            by_adv.setdefault(s.adversary, Counter())[s.outcome] += 1
        report = CampaignReport(
            games=len(summaries), horizon=args.horizon,
            outcomes=dict(outcomes),
            by_adversary={k: dict(v) for k, v in by_adv.items()},
            fp_wins=tuple(s for s in summaries if s.outcome == "FpWin"),
            violations=tuple(s for s in summaries if s.violation),
            monitor_failures=tuple(s for s in summaries if s.monitor_failures),
        )
    payload = report.to_obj()
    if args.out:
        Path(args.out).write_text(json.dumps(payload, indent=2) + "\n")
    print(json.dumps(payload["outcomes"]))
    if not report.ok:
        print("campaign FAILED: "
              f"fp_wins={len(report.fp_wins)} violations={len(report.violations)} "
              f"monitor_failures={len(report.monitor_failures)}", file=sys.stderr)
        return 1
    return 0


def _cmd_replay(args: argparse.Namespace) -> int:
    try:
        original = Path(args.transcript).read_text()
        t = Transcript.from_jsonl(original)
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: cannot read transcript: {exc}", file=sys.stderr)
        return 2
    rebuilt = replay(t).to_jsonl()
    if args.out:
        Path(args.out).write_text(rebuilt)
    if rebuilt != original:
        print("replay mismatch: re-derived transcript differs", file=sys.stderr)
        return 1
    print("replay ok: byte-identical")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import app
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="strongdraw")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check draw-sufficiency of a graph file")
    v.add_argument("graph")
    v.add_argument("--z", type=int, default=None)
    v.add_argument("--report", choices=("text", "json"), default="text")
    v.add_argument("--pairs", default=None,
                   help="only check rigidity of EDGE:EDGE pairs, ';'-separated")
    v.set_defaults(func=_cmd_verify)

    s = sub.add_parser("simulate", help="run one game against an adversary")
    s.add_argument("--adversary", required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--horizon", type=int, default=DEFAULT_HORIZON)
    s.add_argument("--out", default=None)
    s.set_defaults(func=_cmd_simulate)

    c = sub.add_parser("campaign", help="seeded batch across the adversary suite")
    c.add_argument("--games", type=int, required=True)
    c.add_argument("--horizon", type=int, default=DEFAULT_HORIZON)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--workers", type=int, default=1)
    c.add_argument("--out", default=None)
    c.add_argument("--seeds-file", default=None,
                   help=f"explicit seed corpus (default ${SEEDS_ENV})")
    c.set_defaults(func=_cmd_campaign)

    r = sub.add_parser("replay", help="re-derive a transcript and byte-compare")
    r.add_argument("transcript")
    r.add_argument("--out", default=None)
    r.set_defaults(func=_cmd_replay)

    sv = sub.add_parser("serve", help="start the interactive play service")
    sv.add_argument("--host", default="127.0.0.1")
    sv.add_argument("--port", type=int, default=8645)
    sv.set_defaults(func=_cmd_serve)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
