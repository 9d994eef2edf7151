"""Command-line frontend: ``ternarity <subcommand> ...``.

Exit codes: 0 success, 1 a checked property failed, 2 bad input, 3 budget
exhausted.  ``--out`` receives the machine-readable result, which is
byte-identical for identical inputs; run metadata (timing, version, digest)
goes to a separate ``<out>.manifest.json`` or, without ``--out``, to stderr.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import sys
import time
from dataclasses import asdict, dataclass, field

from ternarity import __version__
from ternarity.errors import BudgetExceeded, InputError

log = logging.getLogger("ternarity")

EXIT_OK, EXIT_PROPERTY, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


@dataclass
class RunManifest:
    subcommand: str
    config: dict
    seed: int | None
    version: str = __version__
    seconds: float = 0.0
    result_digest: str = ""
    exit_code: int = 0
    extra: dict = field(default_factory=dict)


class Outcome:
    def __init__(self, result, exit_code=EXIT_OK, summary=""):
        self.result, self.exit_code, self.summary = result, exit_code, summary


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


# -- subcommands ------------------------------------------------------------


def cmd_enumerate(args) -> Outcome:
    from ternarity.hypergraph.canon import ALGORITHM_VERSION
    from ternarity.hypergraph.enumerate import enumerate_records

    def payload(records, complete):
        return {
            "k": args.k,
            "size": args.size,
            "count": len(records),
            "complete": complete,
            "algorithm": ALGORITHM_VERSION,
            "classes": [r.hypergraph(args.k).to_json() for r in records],
        }

    cache = None if args.no_cache else args.cache_dir
    try:
        recs = enumerate_records(args.k, args.size, threads=args.threads, budget=args.budget, cache_dir=cache)
    except BudgetExceeded as exc:
        partial = exc.partial or []
        return Outcome(dict(payload(partial, False), progress=exc.progress), EXIT_BUDGET,
                       f"budget exhausted; {len(partial)} classes so far")
    return Outcome(payload(recs, True), EXIT_OK, str(len(recs)))


def cmd_identities(args) -> Outcome:
    from ternarity.ndmatrix.catalogue import identity_subalgebra_scan, verify_identity_catalogue
    from ternarity.ndmatrix.semiring import parse_semiring

    s = parse_semiring(args.semiring)
    report = verify_identity_catalogue(args.algebra, args.n, s, args.trials, args.seed)
    result = {"catalogue": report.to_json()}
    lines = [f"{report.kind}: {report.passed}/{len(report.results)} catalogued equations pass"]
    lines += [f"warning: {w}" for w in report.warnings]
    if args.scan:
        scan = identity_subalgebra_scan(args.algebra, args.n, s)
        result["scan"] = {"count": scan.count, "equations": scan.equations()}
        lines.append(f"subalgebra scan: {scan.count} equations")
    return Outcome(result, EXIT_OK if report.all_passed else EXIT_PROPERTY, "\n".join(lines))


def cmd_axiom_search(args) -> Outcome:
    from ternarity.axiom.search import search_identities

    try:
        rep = search_identities(args.op, args.elements, seed=args.seed, confirm_trials=args.confirm_trials,
                                threads=args.threads, budget=args.budget, with_refuted=args.refuted)
    except BudgetExceeded as exc:
        partial = exc.partial
        data = partial.to_json() if partial is not None else {"complete": False}
        data["progress"] = exc.progress
        return Outcome(data, EXIT_BUDGET, f"budget exhausted: {exc.progress}")
    data = rep.to_json(include_refuted=args.refuted)
    data.pop("seed", None)
    return Outcome(data, EXIT_OK, f"{rep.op}: {len(rep.confirmed)} confirmed identity classes "
                                  f"({rep.terms} terms, {rep.buckets} fingerprint buckets)")


def _motif_from_arg(spec):
    from ternarity.hypergraph import shapes
    from ternarity.hypergraph.core import Hypergraph

    named = {
        "vee": shapes.vee, "triangle": shapes.triangle, "claw": shapes.claw, "diamond": shapes.diamond,
        **shapes.SIZE3_NAMED,
    }
    if spec in named:
        return named[spec]()
    if spec.startswith("path") and spec[4:].isdigit():
        return shapes.path(int(spec[4:]))
    if spec.startswith("edge") and spec[4:].isdigit():
        return shapes.edge(int(spec[4:]))
    if os.path.exists(spec):
        return Hypergraph.from_json(_load_json(spec))
    raise InputError(f"unknown motif {spec!r}: give a shape name or a hypergraph JSON file")


def cmd_motif(args) -> Outcome:
    from ternarity.hypergraph.core import Hypergraph
    from ternarity.hypergraph.motif import motif_adjacency

    h = Hypergraph.from_json(_load_json(args.input))
    m = _motif_from_arg(args.motif)
    adj = motif_adjacency(h, m)
    return Outcome({"motif": m.to_json(), "adjacency": adj.to_json()}, EXIT_OK,
                   f"{adj.size} adjacency hyperedges on {len(adj.vertices)} vertices")


def cmd_relations(args) -> Outcome:
    from ternarity.relation import TernaryRelation, compose, compose_triforce_alt, resolve_composition

    data = _load_json(args.inputs)
    rels = data.get("relations") if isinstance(data, dict) else data
    if not isinstance(rels, list) or len(rels) != 3:
        raise InputError("relations input must hold exactly three relations (a list or {\"relations\": [...]})")
    R, S, T = (TernaryRelation.from_json(r) for r in rels)
    kind = resolve_composition(args.kind)
    out = compose(kind, R, S, T)
    result = {"kind": kind, "result": out.to_json()}
    if kind == "triforce":
        alt = compose_triforce_alt(R, S, T)
        result["alt_variant_differs"] = alt != out
    return Outcome(result, EXIT_OK, f"{kind}: {len(out)} triples")


def cmd_triso(args) -> Outcome:
    from ternarity.errors import ComposabilityError
    from ternarity.triso import COMPOSITIONS, NotATrisomorphism, trisos_from_json

    data = _load_json(args.inputs)
    items = data.get("trisomorphisms") if isinstance(data, dict) else data
    if not isinstance(items, list) or len(items) != 3:
        raise InputError("triso input must hold exactly three trisomorphisms")
    try:
        ts = trisos_from_json(items)
    except NotATrisomorphism as exc:
        return Outcome({"valid": False, "error": str(exc), "object": exc.obj, "element": exc.element},
                       EXIT_PROPERTY, f"input is not a trisomorphism: {exc}")
    try:
        out = COMPOSITIONS[args.compose](*ts)
    except ComposabilityError as exc:
        return Outcome({"valid": False, "error": str(exc)}, EXIT_PROPERTY, f"not composable: {exc}")
    return Outcome({"valid": True, "composition": args.compose, "result": out.to_json()}, EXIT_OK,
                   f"{args.compose} composition is a valid trisomorphism")


def cmd_lie3(args) -> Outcome:
    from ternarity.lie3 import check_fundamental, check_skew, parse_bracket

    handle = parse_bracket(args.bracket)
    checks = ["skew", "fundamental"] if args.check == "both" else [args.check]
    verdicts = []
    for c in checks:
        fn = check_skew if c == "skew" else check_fundamental
        verdicts.append(fn(handle, args.trials, args.seed))
    ok = all(v.holds for v in verdicts)
    summary = "\n".join(f"{v.law}: {'holds' if v.holds else 'FAILS'}" for v in verdicts)
    return Outcome({"bracket": handle.name, "verdicts": [v.to_json() for v in verdicts]},
                   EXIT_OK if ok else EXIT_PROPERTY, summary)


# -- parser -----------------------------------------------------------------


def _positive(x):
    v = int(x)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ternarity", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write machine-readable JSON here")
    common.add_argument("--manifest", help="manifest path (default: <out>.manifest.json)")
    common.add_argument("--threads", type=_positive, default=1)
    common.add_argument("--seed", type=int, default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="count connected k-uniform hypergraph classes")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--size", type=_positive, required=True)
    p.add_argument("--budget", type=float, help="wall-clock budget in seconds")
    p.add_argument("--cache-dir", default=os.environ.get("TERNARITY_CACHE", ".ternarity-cache"))
    p.add_argument("--no-cache", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("identities", parents=[common], help="verify identity laws of a cubix algebra")
    p.add_argument("--algebra", required=True)
    p.add_argument("--n", type=_positive, default=2)
    p.add_argument("--semiring", default="fp:101")
    p.add_argument("--trials", type=_positive, default=50)
    p.add_argument("--scan", action="store_true")
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("axiom-search", parents=[common], help="search identities among multilinear terms")
    p.add_argument("--op", required=True)
    p.add_argument("--elements", type=int, choices=(5, 7), required=True)
    p.add_argument("--budget", type=float)
    p.add_argument("--confirm-trials", type=_positive, default=1)
    p.add_argument("--refuted", action="store_true", help="also report refuted bucket collisions")
    p.set_defaults(func=cmd_axiom_search)

    p = sub.add_parser("motif", parents=[common], help="motif adjacency hypergraph")
    p.add_argument("--input", required=True)
    p.add_argument("--motif", required=True)
    p.set_defaults(func=cmd_motif)

    p = sub.add_parser("relations", parents=[common], help="compose three ternary relations")
    p.add_argument("--kind", required=True)
    p.add_argument("--inputs", required=True)
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("triso", parents=[common], help="compose three trisomorphisms")
    p.add_argument("--compose", choices=("cone", "blades", "triforce"), required=True)
    p.add_argument("--inputs", required=True)
    p.set_defaults(func=cmd_triso)

    p = sub.add_parser("lie3", parents=[common], help="check a ternary bracket")
    p.add_argument("--bracket", required=True)
    p.add_argument("--check", choices=("skew", "fundamental", "both"), default="both")
    p.add_argument("--trials", type=_positive, default=200)
    p.set_defaults(func=cmd_lie3)
    return parser


def _config(args) -> dict:
    skip = {"func", "out", "manifest", "verbose", "command"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    t0 = time.monotonic()
    try:
        outcome = args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT

    text = canonical_json(outcome.result)
    digest = hashlib.sha256(text.encode()).hexdigest()
    if outcome.summary:
        print(outcome.summary)
    manifest = RunManifest(args.command, _config(args), args.seed, seconds=round(time.monotonic() - t0, 3),
                           result_digest=digest, exit_code=outcome.exit_code)
    mtext = canonical_json(asdict(manifest))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        with open(args.manifest or args.out + ".manifest.json", "w") as fh:
            fh.write(mtext)
    else:
        if args.manifest:
            with open(args.manifest, "w") as fh:
                fh.write(mtext)
        else:
            print(mtext, file=sys.stderr, end="")
    return outcome.exit_code


if __name__ == "__main__":
    sys.exit(main())
