"""Batch front end: ``python -m cartan_commutant VERB --n N [options]``.

Verbs
-----
basis     commutant basis (n >= 2)
dim       linear dimension and per-degree breakdown (n >= 2)
table     bracket table in the p or cfg basis (n >= 2; n >= 5 needs --allow-large)
verify    identity family (see ``--family``), or ``listing`` for printed tables
realize   homomorphism, collapse and Racah reports (n in 3..5)
casimir   trace Casimir c^[k] (n >= 2, 2 <= k <= n)

Text goes to standard output; ``--json PATH`` also writes the JSON
document.  The exit status is 0 only when every emitted check passes.
The default worker count comes from ``CARTAN_COMMUTANT_THREADS``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import poly_algebra as pa
from . import tables
from .commutant import enumerate_basis, linear_dimension, nu
from .report import Report
from .sl_model import trace_casimir

__all__ = ["main", "build_parser", "run"]

LARGE_N = 5


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cartan-commutant",
        description="Commutants of the Cartan subalgebra of sl(n) and their polynomial algebras.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, n_help):
        p.add_argument("--n", type=int, required=True, help=n_help)
        p.add_argument("--json", metavar="PATH", help="write the JSON document to PATH")
        p.add_argument("--threads", type=int, default=None, help="worker processes")
        p.add_argument("--seed", type=int, default=0, help="seed for sampled checks")

    common(sub.add_parser("basis", help="commutant basis"), "n >= 2")
    common(sub.add_parser("dim", help="linear dimension"), "n >= 2")
    p = sub.add_parser("table", help="bracket table")
    common(p, "n >= 2")
    p.add_argument("--basis", choices=("p", "cfg"), default="p", dest="basis_kind")
    p.add_argument("--allow-large", action="store_true", help=f"permit n >= {LARGE_N}")
    p = sub.add_parser("verify", help="identity family")
    common(p, "depends on the family")
    p.add_argument("--family", required=True, choices=sorted(pa.FAMILIES) + ["listing", "casimir-K"])
    p = sub.add_parser("realize", help="phase-space realization reports")
    common(p, "3, 4 or 5")
    p.add_argument("--float", action="store_true", dest="float_check",
                   help="append the floating-point cross-check")
    p = sub.add_parser("casimir", help="trace Casimir")
    common(p, "n >= 2")
    p.add_argument("--k", type=int, required=True)
    return parser


def _dump(doc: dict, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2, sort_keys=False)
            fh.write("\n")


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise UsageError(msg)


def _listing(n: int) -> Report:
    _need(n in (3, 4), "listing is available for n = 3 and n = 4")
    if n == 3:
        rep = pa.compare_listing(3, tables.TABLE3_P, "n=3 table", "p")
        for name, printed, alt in tables.TABLE3_DUPLICATES:
            rep.merge(pa.compare_listing(3, [(name + " as printed", printed)], "n=3 table duplicate", "p"))
            rep.merge(pa.compare_listing(3, [(name + " read with p_{1,3,2}", alt)], "n=3 table duplicate", "p"))
        rep.merge(pa.compare_listing(3, tables.FREL, "frel", "cfg"))
        rep.merge(pa.compare_listing(3, tables.EQUAFIN, "equafin", "cfg", "ijk"))
        return rep
    rep = pa.compare_listing(4, tables.CUBIC4, "cubic listing", "cfg", "ijkl")
    rep.merge(pa.compare_listing(4, list(tables.CUBIC4_REPAIRS.items()), "cubic listing (rebalanced)", "cfg", "ijkl"))
    return rep


def run(args: argparse.Namespace) -> tuple[int, str, dict]:
    """Execute a parsed command; returns ``(exit status, text, JSON document)``."""
    n = args.n
    verb = args.verb
    if verb == "basis":
        _need(n >= 2, "basis needs n >= 2")
        b = enumerate_basis(n)
        doc = b.to_json()
        lines = [f"commutant basis of sl({n}): {b.size} generators"]
        lines += [g.name for g in b.generators()]
        return 0, "\n".join(lines), doc
    if verb == "dim":
        _need(n >= 2, "dim needs n >= 2")
        breakdown = {"1": n - 1}
        breakdown.update({str(d): nu(n, d) for d in range(2, n + 1)})
        total = linear_dimension(n)
        doc = {"n": n, "linear_dimension": total, "by_degree": breakdown}
        text = f"{total} = " + "+".join(str(v) for v in breakdown.values())
        return 0, text, doc
    if verb == "table":
        _need(n >= 2, "table needs n >= 2")
        if n >= LARGE_N and not args.allow_large:
            raise UsageError(f"table for n >= {LARGE_N} is large; pass --allow-large")
        progress = None
        if n >= LARGE_N:
            def progress(done, total):
                if done % 100 == 0 or done == total:
                    print(f"[{done}/{total}] pairs", file=sys.stderr, flush=True)
        t = pa.structure_table(n, args.basis_kind, threads=args.threads, progress=progress)
        doc = t.to_json()
        doc["order"] = pa.algebra_order(t)
        return 0, t.to_text() + f"\norder: {doc['order']}", doc
    if verb == "verify":
        if args.family == "listing":
            rep = _listing(n)
        elif args.family == "casimir-K":
            _need(n == 3, "casimir-K is defined for n = 3")
            rep = pa.casimir_K(3)[1]
        else:
            try:
                rep = pa.verify_identities(n, args.family)
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
        return (0 if rep.all_passed else 1), rep.to_text(), rep.to_json()
    if verb == "realize":
        from . import realization as rz

        _need(n in (3, 4, 5), "realize supports n = 3, 4, 5")
        rep = rz.realize_report(n)
        if args.float_check:
            rep.merge(rz.float_crosscheck(rep, seed=args.seed))
        return (0 if rep.all_passed else 1), rep.to_text(), rep.to_json()
    if verb == "casimir":
        _need(n >= 2, "casimir needs n >= 2")
        _need(2 <= args.k <= n, "casimir needs 2 <= k <= n")
        c = trace_casimir(n, args.k)
        return 0, c.to_text(), {"n": n, "k": args.k, "polynomial": c.to_text(), "terms": len(c)}
    raise UsageError(f"unknown verb {verb!r}")  # pragma: no cover


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads is not None and args.threads < 1:
        parser.error("--threads must be positive")
    try:
        status, text, doc = run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(text)
    _dump(doc, args.json)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
