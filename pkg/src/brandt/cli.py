"""Batch command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 parse error,
3 invalid algebraic input, 4 budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import corpus as corpus_mod
from . import oracle as oracle_mod
from .brandt import LAMBDA_CAP_DEFAULT, construct_brandt, matrix_units
from .errors import BudgetExceeded, SemigroupError
from .oracle import DEFAULT_SEED, ORACLE_BUDGET_DEFAULT
from .semigroups import (
    FiniteSemigroup,
    adjoin_identity,
    adjoin_zero,
    idempotents,
    maximal_idempotents,
    natural_leq,
    unit_group,
    validate_semigroup,
)
from .triples import (
    aut_group_order,
    compose,
    enumerate_normalized_triples,
    invert,
    kernel_enumerate,
    realize_triple,
    triple_from_json,
    triple_to_json,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_BUDGET = 4


class ParseFailure(Exception):
    pass


def _load_semigroup(args) -> FiniteSemigroup:
    if getattr(args, "builtin", None):
        return corpus_mod.builtin(args.builtin)
    if not getattr(args, "input", None):
        raise ParseFailure("no input file and no --builtin given")
    try:
        with open(args.input, encoding="utf-8") as fh:
            doc = json.load(fh)
        labels = doc["elements"]
        table = doc["table"]
        name = doc.get("name")
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise ParseFailure(f"cannot read Cayley-table JSON: {exc}") from exc
    return validate_semigroup(labels, table, name=name)


def _emit(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    else:
        print(text)


def _report_doc_text(doc: dict) -> str:
    return "\n".join(f"{k}: {v}" for k, v in doc.items())


def _emit_doc(args, doc: dict) -> None:
    if args.format == "json":
        _emit(args, json.dumps(doc, separators=(",", ":"), ensure_ascii=False))
    else:
        _emit(args, _report_doc_text(doc))


def cmd_validate(args) -> int:
    S = _load_semigroup(args)
    E = idempotents(S)
    doc = {
        "name": S.name,
        "size": S.size,
        "associative": True,
        "zero": None if S.zero is None else S.elements[S.zero],
        "identity": None if S.identity is None else S.elements[S.identity],
        "idempotents": [S.elements[e] for e in E],
        "maximal_idempotents": [S.elements[e] for e in maximal_idempotents(S)],
        "natural_order": [
            [S.elements[e], S.elements[f]]
            for e in E
            for f in E
            if e != f and natural_leq(S, e, f)
        ],
    }
    if S.identity is not None:
        doc["units"] = [S.elements[u] for u in unit_group(S).members]
    _emit_doc(args, doc)
    return EXIT_OK


def cmd_extend(args) -> int:
    S = _load_semigroup(args)
    B = construct_brandt(S, args.lam, lam_cap=args.lam_cap)
    _emit(args, B.carrier.to_json())
    return EXIT_OK


def cmd_adjoin_zero(args) -> int:
    _emit(args, adjoin_zero(_load_semigroup(args)).to_json())
    return EXIT_OK


def cmd_adjoin_identity(args) -> int:
    _emit(args, adjoin_identity(_load_semigroup(args)).to_json())
    return EXIT_OK


def cmd_aut(args) -> int:
    S = _load_semigroup(args)
    doc: dict = {"subject": S.name or "input", "lambda": args.lam, "method": args.method}
    code = EXIT_OK
    if args.method == "both":
        report = oracle_mod.verify_realization_completeness(
            S, args.lam, oracle_budget=args.budget
        )
        doc.update(json.loads(report.to_json()))
        if not report.match:
            code = EXIT_MISMATCH
    elif args.method == "brute":
        B = construct_brandt(S, args.lam, allow_nonmonoid=True, lam_cap=args.lam_cap)
        autos = oracle_mod.enumerate_automorphisms(B.carrier, budget=args.budget)
        doc["order"] = len(autos)
    else:
        B = construct_brandt(S, args.lam, lam_cap=args.lam_cap)
        triples = enumerate_normalized_triples(B)
        doc["order"] = len(triples)
        doc["kernel_size"] = len(kernel_enumerate(B))
        doc["counting_formula_order"] = aut_group_order(B)
    _emit_doc(args, doc)
    return code


def _verify_matrix_units(args) -> tuple[int, list[dict]]:
    docs = []
    code = EXIT_OK
    for lam in range(1, args.max_lambda + 1):
        rep = oracle_mod.verify_matrix_units_rigidity(lam, oracle_budget=args.budget)
        docs.append(json.loads(rep.to_json()))
        if not rep.match:
            code = EXIT_MISMATCH
    return code, docs


def _verify_corpus(args, checker) -> tuple[int, list[dict]]:
    docs = []
    code = EXIT_OK
    for entry in corpus_mod.default_corpus():
        for lam in corpus_mod.corpus_lambdas(entry.semigroup, carrier_cap=args.budget):
            rep = checker(entry.semigroup, lam)
            doc = json.loads(rep.to_json())
            doc["corpus_entry"] = entry.name
            docs.append(doc)
            if not rep.match:
                code = EXIT_MISMATCH
    return code, docs


def cmd_verify(args) -> int:
    if args.suite == "matrix-units":
        code, docs = _verify_matrix_units(args)
    elif args.suite == "realization":
        code, docs = _verify_corpus(
            args,
            lambda S, lam: oracle_mod.verify_realization_completeness(
                S, lam, oracle_budget=args.budget
            ),
        )
    elif args.suite == "quotient":
        code, docs = _verify_corpus(
            args,
            lambda S, lam: oracle_mod.verify_quotient_structure(
                construct_brandt(S, lam), seed=args.seed, oracle_budget=args.budget
            ),
        )
    elif args.suite == "composition":
        docs = []
        code = EXIT_OK
        for entry in corpus_mod.default_corpus():
            for lam in corpus_mod.corpus_lambdas(entry.semigroup, carrier_cap=args.budget):
                B = construct_brandt(entry.semigroup, lam)
                ok = oracle_mod.verify_composition_law(B, args.trials, seed=args.seed)
                docs.append(
                    {"corpus_entry": entry.name, "lambda": lam, "match": ok, "trials": args.trials}
                )
                if not ok:
                    code = EXIT_MISMATCH
    elif args.suite == "zero-semigroup":
        census = oracle_mod.verify_zero_semigroup_bijections(args.k, args.lam)
        docs = [
            {
                "k": args.k,
                "lambda": args.lam,
                "carrier_size": census.carrier_size,
                "bijections": census.bijections,
                "automorphisms": census.automorphisms,
                "match": census.all_automorphisms,
            }
        ]
        code = EXIT_OK if census.all_automorphisms else EXIT_MISMATCH
    else:
        raise ParseFailure(f"unknown suite {args.suite!r}")

    if args.format == "json":
        _emit(args, json.dumps({"suite": args.suite, "results": docs},
                               separators=(",", ":"), ensure_ascii=False))
    else:
        lines = []
        for d in docs:
            status = "pass" if d.get("match") else "FAIL"
            head = d.get("corpus_entry") or d.get("subject") or args.suite
            extra = d.get("oracle_order", d.get("automorphisms", d.get("order", "")))
            lines.append(f"{status}  {head}  lambda={d.get('lambda')}  order={extra}")
        _emit(args, "\n".join(lines))
    return code


def cmd_triple(args) -> int:
    S = _load_semigroup(args)
    B = construct_brandt(S, args.lam, lam_cap=args.lam_cap)
    try:
        with open(args.triple, encoding="utf-8") as fh:
            t = triple_from_json(B, fh.read())
        t2 = None
        if args.action == "compose":
            if not args.other:
                raise ParseFailure("compose needs --other TRIPLE_FILE")
            with open(args.other, encoding="utf-8") as fh:
                t2 = triple_from_json(B, fh.read())
    except (OSError, ValueError, KeyError) as exc:
        raise ParseFailure(f"cannot read triple JSON: {exc}") from exc

    if args.action == "realize":
        sigma = realize_triple(B, t)
        doc = {
            "images": list(sigma.images),
            "labels": {B.carrier.elements[i]: B.carrier.elements[y]
                       for i, y in enumerate(sigma.images)},
        }
        _emit_doc(args, doc)
    elif args.action == "compose":
        _emit(args, triple_to_json(B, compose(B, t, t2)))
    else:
        _emit(args, triple_to_json(B, invert(B, t)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--budget", type=int, default=ORACLE_BUDGET_DEFAULT,
                        help="max carrier size for brute-force search")
    common.add_argument("--output", help="write the result to a file instead of stdout")
    common.add_argument("--lam-cap", type=int, default=LAMBDA_CAP_DEFAULT)

    src = argparse.ArgumentParser(add_help=False)
    src.add_argument("input", nargs="?", help="Cayley-table JSON file")
    src.add_argument("--builtin", choices=corpus_mod.BUILTIN_NAMES,
                     help="use a named built-in semigroup instead of a file")

    p = argparse.ArgumentParser(
        prog="brandt",
        description="Brandt extensions of finite monoids with zero and their automorphism groups",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("validate", parents=[common, src]).set_defaults(func=cmd_validate)

    q = sub.add_parser("extend", parents=[common, src])
    q.add_argument("--lambda", dest="lam", type=int, required=True)
    q.set_defaults(func=cmd_extend)

    sub.add_parser("adjoin-zero", parents=[common, src]).set_defaults(func=cmd_adjoin_zero)
    sub.add_parser("adjoin-identity", parents=[common, src]).set_defaults(func=cmd_adjoin_identity)

    q = sub.add_parser("aut", parents=[common, src])
    q.add_argument("--lambda", dest="lam", type=int, required=True)
    q.add_argument("--method", choices=["triples", "brute", "both"], default="both")
    q.set_defaults(func=cmd_aut)

    q = sub.add_parser("verify", parents=[common])
    q.add_argument("suite", choices=[
        "matrix-units", "realization", "zero-semigroup", "composition", "quotient",
    ])
    q.add_argument("--max-lambda", dest="max_lambda", type=int, default=4)
    q.add_argument("--k", type=int, default=3)
    q.add_argument("--lambda", dest="lam", type=int, default=2)
    q.add_argument("--trials", type=int, default=100)
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("triple", parents=[common, src])
    q.add_argument("action", choices=["realize", "compose", "invert"])
    q.add_argument("--lambda", dest="lam", type=int, required=True)
    q.add_argument("--triple", required=True, help="triple JSON file")
    q.add_argument("--other", help="second triple JSON file for compose")
    q.set_defaults(func=cmd_triple)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except SemigroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
