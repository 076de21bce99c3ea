"""Command-line interface.

Subcommands: catalog, pair, survivors, lemma, exceptions, monodromy, check.
``check`` exits 0 on any verdict and 2 on inconsistent input; its machine
format emits one JSON object per descriptor with keys "conclusion",
"citations" and "notes".
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys

from .catalog import IrrepDescriptor, descriptor, enumerate_minuscule
from .checker import (AVDescriptor, Conclusion, EndoType, InputInconsistentError,
                      Reduction, Verdict, decide, explain)
from .divisibility import divisibility_solutions, exception_pairs
from .exclusion import CandidatePair, check_pair, surviving_inners
from .monodromy import build_instance, verify_instance
from .roots import FormClass, LieType

_FORMS = {"nsd": FormClass.NON_SELF_DUAL, "symp": FormClass.SYMPLECTIC,
          "orth": FormClass.ORTHOGONAL}
_ENDO = {"I": EndoType.TYPE_I, "II": EndoType.TYPE_II, "III": EndoType.TYPE_III,
         "k": EndoType.IV_IMAG_QUAD, "IV": EndoType.IV_OTHER, "Q": EndoType.RATIONAL}


def _parse_irrep(text: str) -> IrrepDescriptor:
    """family:rank:weight, e.g. A:7:3."""
    try:
        family, rank, weight = text.split(":")
        return descriptor(LieType(family, int(rank)), int(weight))
    except ValueError as exc:
        raise SystemExit(f"bad module spec {text!r}: {exc}")


def _catalog_line(entry: IrrepDescriptor, machine: bool) -> str:
    if machine:
        return json.dumps({
            "family": entry.lie_type.family,
            "rank": entry.lie_type.rank,
            "weight": entry.weight_index,
            "dim": entry.dim,
            "form": entry.form.value,
        })
    return (f"{entry.lie_type} w{entry.weight_index} dim={entry.dim} "
            f"form={entry.form.value}")


def _cmd_catalog(args) -> int:
    t = LieType(args.family, args.rank)
    for entry in enumerate_minuscule(t):
        print(_catalog_line(entry, args.format == "machine"))
    return 0


def _cmd_pair(args) -> int:
    pair = CandidatePair(_parse_irrep(args.inner), _parse_irrep(args.outer))
    verdict = check_pair(pair, args.rank_tau)
    print(f"{verdict.status.value}: {verdict.reason}")
    return 0


def _cmd_survivors(args) -> int:
    survivors = surviving_inners(args.dim, _FORMS[args.form], args.rank_tau)
    if not survivors:
        print("none")
    for s in survivors:
        print(_catalog_line(s, machine=False))
    return 0


def _cmd_lemma(args) -> int:
    for m, s in divisibility_solutions(args.mmax):
        print(f"{m} {s}")
    return 0


def _cmd_exceptions(args) -> int:
    for p in exception_pairs(args.gmax):
        print(f"{p.g} {p.r}")
    return 0


def _cmd_monodromy(args) -> int:
    counts: dict[str, int] = {}
    for k in range(args.trials):
        inst = build_instance(args.g, args.r, args.seed + k)
        for name, ok in verify_instance(inst).items():
            counts[name] = counts.get(name, 0) + (1 if ok else 0)
    failed = False
    for name, good in counts.items():
        status = "pass" if good == args.trials else "FAIL"
        if good != args.trials:
            failed = True
        print(f"{name}: {good}/{args.trials} {status}")
    return 1 if failed else 0


def _descriptor_from_args(args) -> AVDescriptor:
    signature = None
    if args.signature:
        parts = args.signature.split(",")
        if len(parts) != 2:
            raise InputInconsistentError("signature must be two comma-separated integers")
        signature = (int(parts[0]), int(parts[1]))
    return AVDescriptor(
        g=args.g,
        endo_type=_ENDO[args.endo],
        endo_degree=args.degree,
        signature=signature,
        toric_rank=args.toric_rank,
        reduction=(Reduction.BAD_SEMISTABLE_SPLIT if args.bad_semistable_split
                   else Reduction.GOOD_OR_UNKNOWN),
        simple=args.simple,
        lie_parts_simple=args.simple_lie,
    )


def _machine_record(v: Verdict) -> str:
    return json.dumps({
        "conclusion": v.conclusion.value,
        "citations": list(v.citations),
        "notes": list(v.notes),
    })


def _emit_verdict(v: Verdict, fmt: str) -> None:
    if fmt == "machine":
        print(_machine_record(v))
    else:
        print(explain(v))


def _check_one(args) -> int:
    try:
        verdict = decide(_descriptor_from_args(args))
    except InputInconsistentError as exc:
        bad = Verdict(Conclusion.INPUT_INCONSISTENT, (), (str(exc),))
        _emit_verdict(bad, args.format)
        return 2
    _emit_verdict(verdict, args.format)
    return 0


def _cmd_check(args, parser) -> int:
    if args.file is None:
        return _check_one(args)
    status = 0
    with open(args.file, encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            sub = parser.parse_args(["check", "--format", args.format]
                                    + shlex.split(line))
            status = max(status, _check_one(sub))
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mtcheck")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list the cataloged modules of one type")
    p.add_argument("--family", required=True, choices=list("ABCDE"))
    p.add_argument("--rank", required=True, type=int)
    p.add_argument("--format", choices=["text", "machine"], default="text")

    p = sub.add_parser("pair", help="check one candidate proper inclusion")
    p.add_argument("--inner", required=True, metavar="FAM:RANK:WEIGHT")
    p.add_argument("--outer", required=True, metavar="FAM:RANK:WEIGHT")
    p.add_argument("--rank-tau", required=True, type=int)

    p = sub.add_parser("survivors", help="admissible proper-inclusion inners")
    p.add_argument("--dim", required=True, type=int)
    p.add_argument("--form", required=True, choices=sorted(_FORMS))
    p.add_argument("--rank-tau", required=True, type=int)

    p = sub.add_parser("lemma", help="binomial divisibility solutions")
    p.add_argument("--mmax", required=True, type=int)

    p = sub.add_parser("exceptions", help="exception pairs (g, r)")
    p.add_argument("--gmax", required=True, type=int)

    p = sub.add_parser("monodromy", help="build and verify seeded instances")
    p.add_argument("--g", required=True, type=int)
    p.add_argument("--r", required=True, type=int)
    p.add_argument("--seed", required=True, type=int)
    p.add_argument("--trials", type=int, default=1)

    p = sub.add_parser("check", help="decide a descriptor (or a batch file)")
    p.add_argument("--g", type=int, default=1)
    p.add_argument("--endo", choices=sorted(_ENDO), default="Q")
    p.add_argument("--degree", type=int, default=1)
    p.add_argument("--signature", default=None, metavar="A,B")
    p.add_argument("--toric-rank", type=int, default=0)
    p.add_argument("--bad-semistable-split", action="store_true")
    p.add_argument("--simple", action="store_true")
    p.add_argument("--simple-lie", action="store_true",
                   help="assert simplicity of the Lie parts directly")
    p.add_argument("--format", choices=["text", "machine"], default="text")
    p.add_argument("--file", default=None,
                   help="batch mode: one flag set per line")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "catalog":
            return _cmd_catalog(args)
        if args.command == "pair":
            return _cmd_pair(args)
        if args.command == "survivors":
            return _cmd_survivors(args)
        if args.command == "lemma":
            return _cmd_lemma(args)
        if args.command == "exceptions":
            return _cmd_exceptions(args)
        if args.command == "monodromy":
            return _cmd_monodromy(args)
        return _cmd_check(args, parser)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
