"""Command-line front end: generate families, certify them, compare set sizes.

Exit codes: 0 = certified nonlocal, 1 = not certified (a nontrivial
orthogonality-preserving measurement exists, or the rule engine alone could
not complete), 2 = parameter error, 3 = invalid input set.
"""

from __future__ import annotations

import argparse
import json
import sys

from .constructions import ConstructionError, SizeReport, gen_equal, gen_general, prior_sizes
from .inference import derive_certificate, render_fact
from .serialize import (
    DocumentError,
    dumps_canonical,
    state_set_from_document,
    state_set_to_document,
)
from .states import DimensionError, NonOrthogonalSetError, StateSet, check_pairwise_orthogonality
from .verifier import STATUS_TRIVIAL, verify_all

EXIT_OK = 0
EXIT_NOT_CERTIFIED = 1
EXIT_PARAMETER = 2
EXIT_INVALID_INPUT = 3


def _parse_dims(text: str) -> tuple[int, ...]:
    try:
        dims = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ConstructionError(f"could not parse dims {text!r}; expected e.g. 3,3,4")
    if not dims:
        raise ConstructionError("dims must not be empty")
    return dims


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _cmd_generate(args) -> int:
    if args.equal == (args.dims is not None):
        print("error: choose exactly one of --equal (with --parties/--dim) or --dims", file=sys.stderr)
        return EXIT_PARAMETER
    if args.equal:
        if args.parties is None or args.dim is None:
            print("error: --equal requires --parties and --dim", file=sys.stderr)
            return EXIT_PARAMETER
        sset = gen_equal(args.parties, args.dim)
    else:
        sset = gen_general(_parse_dims(args.dims))
    text = dumps_canonical(state_set_to_document(sset))
    _emit(text, args.out)
    count_line = f"{len(sset)} states"
    if args.out is None:
        print(count_line, file=sys.stderr)
    else:
        print(count_line)
    return EXIT_OK


def _sizes_json(report: SizeReport) -> dict:
    return {"ours": report.ours, "jiang": report.jiang, "wang": report.wang, "zhang": report.zhang}


def _build_report(sset: StateSet, engines: list[str]) -> tuple[dict, int]:
    report: dict = {
        "dims": list(sset.shape.dims),
        "provenance": sset.provenance,
        "orthogonality": {"ok": True, "violations": []},
        "per_party": [],
    }
    try:
        report["sizes"] = _sizes_json(prior_sizes(sset.shape.dims))
    except ConstructionError:
        report["sizes"] = None

    cert = derive_certificate(sset) if "lemma" in engines else None
    verdicts = verify_all(sset) if "oracle" in engines else None

    for t in range(sset.shape.n):
        if cert is not None:
            conclusion = cert.conclusions[t]
            entry = {
                "party": t,
                "engine": "lemma",
                "status": "Trivial" if conclusion.trivial else "Incomplete",
                "facts": [render_fact(f, cert.labels) for f in cert.facts_for_party(t)],
            }
            if not conclusion.trivial:
                entry["missing_zero_entries"] = [list(p) for p in conclusion.missing_zeros]
                entry["diagonal_classes"] = [list(c) for c in conclusion.diagonal_classes]
            report["per_party"].append(entry)
        if verdicts is not None:
            v = verdicts[t]
            entry = {
                "party": t,
                "engine": "oracle",
                "status": v.status,
                "nullspace_dim": v.nullspace_dim,
            }
            if v.witness is not None:
                entry["witness"] = v.witness.entry_strings()
            report["per_party"].append(entry)

    if verdicts is not None:
        certified = all(v.status == STATUS_TRIVIAL for v in verdicts)
        if certified:
            note = "certified (oracle)"
            if cert is not None and not cert.trivial_for_all():
                note = "certified (oracle); lemma-engine incomplete"
        else:
            bad = [v.party for v in verdicts if v.status != STATUS_TRIVIAL]
            note = (
                f"a nontrivial orthogonality-preserving first measurement exists on parties {bad}; "
                "this alone does not prove LOCC distinguishability"
            )
    else:
        certified = cert.trivial_for_all()
        note = "certified (lemma engine)" if certified else "lemma engine incomplete; run the oracle to decide"
    report["certified_nonlocal"] = certified
    report["note"] = note
    return report, (EXIT_OK if certified else EXIT_NOT_CERTIFIED)


def _cmd_verify(args) -> int:
    if (args.input is None) == (args.dims is None):
        print("error: choose exactly one of --input or --dims", file=sys.stderr)
        return EXIT_PARAMETER
    if args.input is not None:
        with open(args.input, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        sset = state_set_from_document(doc)
    else:
        sset = gen_general(_parse_dims(args.dims))

    violations = check_pairwise_orthogonality(sset)
    if violations:
        report = {
            "dims": list(sset.shape.dims),
            "provenance": sset.provenance,
            "orthogonality": {"ok": False, "violations": [list(p) for p in violations]},
            "per_party": [],
            "certified_nonlocal": False,
            "note": "input set is not pairwise orthogonal",
        }
        _emit(dumps_canonical(report), args.out)
        print(f"error: non-orthogonal state pairs: {violations}", file=sys.stderr)
        return EXIT_INVALID_INPUT

    engines = ["lemma", "oracle"] if args.engine == "both" else [args.engine]
    report, code = _build_report(sset, engines)
    _emit(dumps_canonical(report), args.out)
    return code


def _cmd_compare(args) -> int:
    dims = _parse_dims(args.dims)
    report = prior_sizes(dims)
    if args.json:
        doc = {"dims": list(dims)}
        doc.update(_sizes_json(report))
        sys.stdout.write(dumps_canonical(doc))
        return EXIT_OK
    print(f"dims: {','.join(map(str, dims))}")
    if report.ours is not None:
        print(f"ours   {report.ours:>6}   sum(d_2..d_n-1) + 2*d_n - n + 1")
    else:
        print("ours        -   needs n >= 3 and nondecreasing dims with d_1 >= 3")
    print(f"jiang  {report.jiang:>6}   sum(2*d_i - 3) + 1")
    if report.wang is not None:
        print(f"wang   {report.wang:>6}   2*(d_1 + d_3) - 3 (three parties)")
    if report.zhang is not None:
        print(f"zhang  {report.zhang:>6}   2*d_2 - 1 (two parties)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nwe",
        description="Generate locally indistinguishable orthogonal product states "
        "and certify that every orthogonality-preserving local measurement is trivial.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generate", help="generate a state family as canonical JSON")
    p_gen.add_argument("--equal", action="store_true", help="equal-dimension family")
    p_gen.add_argument("--parties", type=int, help="party count n for --equal")
    p_gen.add_argument("--dim", type=int, help="local dimension d for --equal")
    p_gen.add_argument("--dims", help="comma-separated dimensions for the general family, e.g. 3,3,4")
    p_gen.add_argument("--out", "-o", help="output path (default: stdout)")
    p_gen.set_defaults(func=_cmd_generate)

    p_ver = sub.add_parser("verify", help="certify a state set (input file or inline dims)")
    p_ver.add_argument("--input", "-i", help="state-set document (nwe/1 JSON)")
    p_ver.add_argument("--dims", help="generate the general family for these dims and verify it")
    p_ver.add_argument("--engine", choices=["lemma", "oracle", "both"], default="both")
    p_ver.add_argument("--out", "-o", help="report path (default: stdout)")
    p_ver.set_defaults(func=_cmd_verify)

    p_cmp = sub.add_parser("compare", help="set-size comparison against published counts")
    p_cmp.add_argument("--dims", required=True, help="comma-separated dimensions")
    p_cmp.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p_cmp.set_defaults(func=_cmd_compare)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConstructionError, DimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMETER
    except json.JSONDecodeError as exc:
        print(f"error: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except DocumentError as exc:
        print(f"error: invalid document: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except NonOrthogonalSetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT


if __name__ == "__main__":
    sys.exit(main())
