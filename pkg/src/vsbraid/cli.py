"""Command-line front end.

Exit codes: 0 success / pass / equal, 1 fail / unknown, 2 usage or input error.
JSON goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .equivalence import Budget, search_equivalent
from .morphisms import NORMAL_FORMS, normalize_to, permutation_of
from .presentations import CATALOGS, get_catalog
from .representation import fingerprint_table, rep_equal, verify_operator_conditions, verify_relations
from .schreier import decompose, rewrite_pure
from .words import WordError, parse_word

DEFAULT_SEED = 20180601


@dataclass
class RunConfig:
    command: str
    n: int | None = None
    p: int | None = None
    catalog: str | None = None
    depth: int = 8
    max_states: int = 200_000
    max_length: int | None = None
    output: str = "json"
    seed: int = DEFAULT_SEED
    threads: int = 1

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> RunConfig:
        cfg = cls(
            command=args.command,
            n=getattr(args, "n", None),
            p=getattr(args, "p", None),
            catalog=getattr(args, "catalog", None),
            depth=getattr(args, "depth", 8),
            max_states=getattr(args, "max_states", 200_000),
            max_length=getattr(args, "max_length", None),
            output=args.format,
            seed=args.seed,
            threads=args.threads,
        )
        cfg.validate()
        return cfg

    def validate(self) -> None:
        if self.n is not None and self.n < 2:
            raise ValueError("-n must be at least 2")
        if self.p is not None and self.p < 2:
            raise ValueError("--p must be a prime")
        if self.depth < 0 or self.max_states < 1:
            raise ValueError("search budget must be non-negative")
        if self.threads < 1:
            raise ValueError("--threads must be at least 1")


def _common(strands: bool = True, prime: bool = False, catalog: bool = False) -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--format", choices=("json", "text"), default="json")
    parent.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"seed for randomized work (default {DEFAULT_SEED})")
    parent.add_argument("--threads", type=int, default=1)
    if strands:
        parent.add_argument("-n", type=int, required=True, help="strand count")
    if prime:
        parent.add_argument("--p", type=int, default=3, help="prime for the cyclotomic representation")
    if catalog:
        parent.add_argument("--catalog", choices=sorted(CATALOGS), default="standard")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vsbraid", description="Virtual singular braid monoid toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("relations", parents=[_common(catalog=True)], help="list relation instances")

    p = sub.add_parser("perm", parents=[_common()], help="permutation of a word")
    p.add_argument("word")

    p = sub.add_parser("translate", parents=[_common()], help="translate a word to one alphabet")
    p.add_argument("--to", choices=NORMAL_FORMS, required=True)
    p.add_argument("word")

    p = sub.add_parser("decompose", parents=[_common()], help="split into pure part and coset representative")
    p.add_argument("word")

    p = sub.add_parser("rewrite-pure", parents=[_common()], help="rewrite a pure word into generalized fusing strings")
    p.add_argument("word")

    p = sub.add_parser("equal", parents=[_common(catalog=True)], help="search for a derivation w1 ~ w2")
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--max-states", type=int, default=200_000)
    p.add_argument("--max-length", type=int, default=None)
    p.add_argument("word1")
    p.add_argument("word2")

    p = sub.add_parser("eval", parents=[_common(prime=True)], help="fingerprint a word on all basis states")
    p.add_argument("word")

    sub.add_parser("verify", parents=[_common(prime=True, catalog=True)], help="check a catalog in the representation")
    sub.add_parser("verify-ops", parents=[_common(strands=False, prime=True)], help="check the operator conditions")
    return parser


def _emit(payload, cfg: RunConfig, text: str) -> None:
    if cfg.output == "json":
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        sys.stdout.write(text.rstrip("\n") + "\n")


def _cycles(perm) -> list[list[int]]:
    return [list(c) for c in perm.cycles()]


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = RunConfig.from_args(args)
        return _dispatch(args, cfg)
    except (WordError, ValueError) as exc:
        print(f"vsbraid {args.command}: {exc}", file=sys.stderr)
        return 2


def _dispatch(args: argparse.Namespace, cfg: RunConfig) -> int:
    cmd = cfg.command
    if cmd == "relations":
        rels = get_catalog(cfg.catalog).instantiate(cfg.n)
        _emit([r.to_json() for r in rels], cfg, "\n".join(f"{r.family} {dict(r.params)}: {r}" for r in rels))
        return 0

    if cmd == "perm":
        w = parse_word(args.word, cfg.n)
        perm = permutation_of(w)
        payload = {"word": str(w), "images": list(perm.images), "cycles": _cycles(perm), "pure": perm.is_identity()}
        _emit(payload, cfg, str(perm))
        return 0

    if cmd == "translate":
        w = parse_word(args.word, cfg.n)
        out = normalize_to(w, args.to)
        _emit({"word": str(w), "to": args.to, "result": str(out)}, cfg, str(out))
        return 0

    if cmd in ("decompose", "rewrite-pure"):
        w = parse_word(args.word, cfg.n)
        if cmd == "decompose":
            pure, rep = decompose(w)
        else:
            pure, rep = rewrite_pure(w), parse_word("", cfg.n)
        perm = permutation_of(w)
        payload = {
            "word": str(w),
            "pure": str(pure),
            "representative": str(rep),
            "permutation-cycles": _cycles(perm),
        }
        _emit(payload, cfg, f"pure: {pure or '1'}\nrepresentative: {rep or '1'}\npermutation: {perm}")
        return 0

    if cmd == "equal":
        catalog = get_catalog(cfg.catalog)
        w1, w2 = parse_word(args.word1, cfg.n), parse_word(args.word2, cfg.n)
        budget = Budget(cfg.depth, cfg.max_states, cfg.max_length)
        verdict = search_equivalent(w1, w2, catalog, budget)
        payload = verdict.to_json(w1)
        if not verdict.equivalent:
            payload["rep_equal"] = {str(p): rep_equal(w1, w2, p) for p in (3, 5)}
            payload["certified_unequal"] = not all(payload["rep_equal"].values())
        lines = [verdict.status]
        for step in payload.get("trace", []):
            lines.append(f"  {step['family']} {step['direction']} at {step['position']}: {step['result'] or '1'}")
        if "certified_unequal" in payload and payload["certified_unequal"]:
            lines.append("  representation fingerprints differ: words are not equal")
        _emit(payload, cfg, "\n".join(lines))
        return 0 if verdict.equivalent else 1

    if cmd == "eval":
        w = parse_word(args.word, cfg.n)
        rows = fingerprint_table(w, cfg.p)
        text = "\n".join(f"{r['state']} -> {r['scalar']} {r['image']}" for r in rows)
        _emit(rows, cfg, text)
        return 0

    if cmd == "verify":
        report = verify_relations(get_catalog(cfg.catalog), cfg.n, cfg.p, threads=cfg.threads)
        lines = [f"{report.catalog} n={report.n} p={report.p}: {'PASS' if report.passed else 'FAIL'}"]
        for fam in report.families:
            status = "pass" if fam.passed else f"FAIL ({len(fam.failures)})"
            lines.append(f"  {fam.family:<16} {fam.instances:>5} instances  {status}")
        _emit(report.to_json(), cfg, "\n".join(lines))
        return 0 if report.passed else 1

    if cmd == "verify-ops":
        report = verify_operator_conditions(cfg.p)
        lines = [f"p={report.p}: {'PASS' if report.passed else 'FAIL'}"]
        for c in report.conditions:
            lines.append(f"  ({c.number}) {c.statement}: {'pass' if c.passed else 'FAIL ' + c.detail}")
        _emit(report.to_json(), cfg, "\n".join(lines))
        return 0 if report.passed else 1

    raise ValueError(f"unknown subcommand {cmd!r}")


def main() -> None:
    sys.exit(run())
