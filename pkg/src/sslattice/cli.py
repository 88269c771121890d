"""Command-line front end.

Exit codes: 0 success / property holds, 1 property fails, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .errors import LatticeError, NotGraded
from .generators import FAMILIES, FamilySpec, enumerate_lattices, make_family
from .io import export_dot, read_cover_file, serialize_cover_file
from .lattice import FiniteLattice, rank_function, validate_chain
from .modularity import chain_modularity_report, find_pentagon, rank_modular_violation
from .supersolvable import (
    birkhoff_violation,
    certify_supersolvable,
    chain_conditions,
    chief_chain_violation,
    verify_condition_equivalence,
)


class UsageError(Exception):
    pass


def parse_chain(text: str) -> tuple:
    try:
        ids = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise UsageError(f"bad chain {text!r}: expected comma-separated ids") from None
    if not ids:
        raise UsageError("empty chain")
    return ids


def _load(path) -> FiniteLattice:
    try:
        return read_cover_file(path)
    except OSError as e:
        raise UsageError(f"{path}: {e.strerror}") from None
    except LatticeError as e:
        raise UsageError(f"{path}: {e}") from None


def _chain(L, text, maximal=False):
    try:
        return validate_chain(L, parse_chain(text), maximal=maximal)
    except LatticeError as e:
        raise UsageError(f"chain {text}: {e}") from None


def _write(text, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit(args, lines, doc):
    if getattr(args, "format", "text") == "structured":
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


# -- subcommands -----------------------------------------------------------------

def cmd_gen(args):
    try:
        L = make_family(FamilySpec(args.family, args.n))
    except (LatticeError, ValueError) as e:
        raise UsageError(str(e)) from None
    _write(serialize_cover_file(L), args.output)
    return 0


def cmd_check_chain(args):
    L = _load(args.file)
    m = _chain(L, args.chain, maximal=True)
    try:
        rho = rank_function(L)
    except NotGraded:
        rho = None
    cond = chain_conditions(L, m, rho)
    lines = [f"chain {','.join(map(str, m))}",
             f"C1 chief_chain {cond.chief}",
             f"C3 graded_left_modular {cond.graded_left}",
             f"C4 chain_modular {cond.chain_modular}",
             f"C5 graded_rank_modular {cond.rank_modular}"]
    witnesses = []
    bad = chief_chain_violation(L, m)
    if bad is not None:
        c, triple = bad
        witnesses.append(f"VIOLATION op=chief_chain args={','.join(map(str, c))};"
                         f"{','.join(map(str, triple))}")
    witnesses.extend(chain_modularity_report(L, m).lines())
    if rho is None:
        witnesses.append("VIOLATION op=graded args=")
    else:
        for x in m:
            v = rank_modular_violation(L, rho, x)
            if v is not None:
                witnesses.append(f"VIOLATION op=rank_modular args={x},{v}")
    lines.extend(witnesses)
    doc = {"chain": list(m), "C1": cond.chief, "C3": cond.graded_left,
           "C4": cond.chain_modular, "C5": cond.rank_modular, "failures": witnesses}
    _emit(args, lines, doc)
    return 0 if cond.chain_modular else 1


def cmd_certify(args):
    L = _load(args.file)
    cert = certify_supersolvable(L, use_oracle=args.oracle, jobs=args.jobs)
    _emit(args, cert.lines(), cert.to_dict())
    return 0 if cert.supersolvable else 1


def _equiv_summary(L):
    rep = verify_condition_equivalence(L)
    return rep.agreement, len(rep.chains), rep.lines()


def cmd_verify_equiv(args):
    if args.max_size < 1:
        raise UsageError("--max-size must be at least 1")
    if args.max_size > 7 and not args.long:
        raise UsageError("sizes above 7 need --long")
    if args.max_size > 8:
        raise UsageError("--max-size is capped at 8")
    total = bad = 0
    for n in range(1, args.max_size + 1):
        lattices = list(enumerate_lattices(n, canonical=args.canonical, allow_long=args.long))
        if args.jobs > 1:
            with ProcessPoolExecutor(args.jobs) as ex:
                results = list(ex.map(_equiv_summary, lattices, chunksize=16))
        else:
            results = [_equiv_summary(L) for L in lattices]
        nbad = sum(1 for ok, _, _ in results if not ok)
        nchains = sum(k for _, k, _ in results)
        print(f"size {n}: {len(lattices)} lattices, {nchains} maximal chains, {nbad} disagreements")
        for ok, _, lines in results:
            if not ok:
                print("\n".join(lines))
        total += len(lattices)
        bad += nbad
    if bad:
        print(f"DISAGREEMENT on {bad} of {total} lattices")
        return 1
    print(f"agreement on all lattices ({total} checked)")
    return 0


def cmd_birkhoff(args):
    L = _load(args.file)
    m = _chain(L, args.mchain)
    c = _chain(L, args.cchain)
    try:
        v = birkhoff_violation(L, m, c, max_r=args.max_r)
    except LatticeError as e:
        print(f"precondition failed: {e}", file=sys.stderr)
        return 1
    if v is None:
        print("birkhoff identities hold")
        return 0
    print(v.to_text())
    return 1


def cmd_export_dot(args):
    L = _load(args.file)
    chain = _chain(L, args.chain) if args.chain else None
    witnesses = []
    if args.pentagons:
        for z in range(L.n):
            w = find_pentagon(L, short_side=z)
            if w is not None:
                witnesses.append(w)
    _write(export_dot(L, chain, witnesses), args.output)
    return 0


# -- parser --------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="sslattice", description="Supersolvable lattice toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="write a cover file for a lattice family")
    g.add_argument("family", choices=FAMILIES)
    g.add_argument("n", type=int)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check-chain", help="evaluate C1/C3/C4/C5 on one maximal chain")
    c.add_argument("-f", "--file", required=True)
    c.add_argument("--chain", required=True)
    c.add_argument("--format", choices=("text", "structured"), default="text")
    c.set_defaults(func=cmd_check_chain)

    s = sub.add_parser("certify", help="decide supersolvability")
    s.add_argument("-f", "--file", required=True)
    s.add_argument("--oracle", action="store_true", help="confirm with the distributivity oracle")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--format", choices=("text", "structured"), default="text")
    s.set_defaults(func=cmd_certify)

    v = sub.add_parser("verify-equiv", help="exhaustive check that C1, C3, C4, C5 agree")
    v.add_argument("--max-size", type=int, required=True)
    v.add_argument("--canonical", action="store_true", help="one lattice per isomorphism class")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--long", action="store_true", help="allow size 8")
    v.set_defaults(func=cmd_verify_equiv)

    b = sub.add_parser("birkhoff", help="check the two dual chain identities")
    b.add_argument("-f", "--file", required=True)
    b.add_argument("--mchain", required=True)
    b.add_argument("--cchain", required=True)
    b.add_argument("--max-r", type=int, default=None)
    b.set_defaults(func=cmd_birkhoff)

    d = sub.add_parser("export-dot", help="write a Graphviz Hasse diagram")
    d.add_argument("-f", "--file", required=True)
    d.add_argument("--chain")
    d.add_argument("--pentagons", action="store_true")
    d.add_argument("-o", "--output")
    d.set_defaults(func=cmd_export_dot)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as e:
        print(f"sslattice: error: {e}", file=sys.stderr)
        return 2
    except LatticeError as e:
        print(f"sslattice: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
