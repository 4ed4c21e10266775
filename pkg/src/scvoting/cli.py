"""Command-line front end.

Thin adapters only: every subcommand parses its inputs, calls one library
operation, and prints that operation's JSON serialization (with ``--json``)
or a short human summary.  Exit codes classify the outcome:

* 0 - success, or all requested checks passed
* 1 - usage error
* 2 - invalid input (unparsable file, unknown name, infeasible committee)
* 3 - negative decision (an axiom fails, or no committee exists)
* 4 - enumeration budget exceeded
"""

from __future__ import annotations

import argparse
import sys

from . import axioms, greedy, pav, search
from .core import (
    Committee,
    PartyListModel,
    ScvInstance,
    UniformModel,
    generate_instance,
    parse_instance,
    parse_set_cover,
    serialize_instance,
    to_json_text,
)
from .errors import (
    BudgetExceeded,
    InvalidInstance,
    ParseError,
    ScvError,
    SemanticError,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_NEGATIVE = 3
EXIT_BUDGET = 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage problems; this CLI reserves 2 for
    # invalid input files, so usage errors are rerouted to exit code 1
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="scvoting", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--quiet", action="store_true", help="suppress human summaries")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check an instance file")
    p.add_argument("instance")

    p = sub.add_parser("check", help="verify axioms for a given committee")
    p.add_argument("--axiom", required=True, choices=list(axioms.ALL_AXIOMS) + ["all"])
    p.add_argument("--committee", required=True, help="comma-separated candidate names")
    p.add_argument("instance")

    p = sub.add_parser("solve", help="construct or optimize a committee")
    p.add_argument("--rule", required=True, choices=["greedy", pav.SW_PAV, pav.IW_PAV])
    p.add_argument("--budget", type=int, default=pav.DEFAULT_MAXIMIZE_BUDGET)
    p.add_argument("--trace", help="write the greedy step trace to this file (JSON lines)")
    p.add_argument("instance")

    p = sub.add_parser("score", help="score a committee exactly")
    p.add_argument("--variant", required=True, choices=list(pav.VARIANTS))
    p.add_argument("--committee", required=True, help="comma-separated candidate names")
    p.add_argument("instance")

    p = sub.add_parser("exists", help="decide committee existence for an axiom")
    p.add_argument("--axiom", required=True, choices=[axioms.SW_JR])
    p.add_argument("--budget", type=int, default=search.DEFAULT_SEARCH_BUDGET)
    p.add_argument("instance")

    p = sub.add_parser("gen", help="generate an instance from a seeded model")
    p.add_argument("--model", required=True, choices=["uniform", "party-list"])
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--voters", type=int, help="uniform: voter count")
    p.add_argument("--sizes", help="uniform: comma-separated subset sizes")
    p.add_argument("--quotas", help="uniform: comma-separated quotas")
    p.add_argument("--p", type=float, help="uniform: approval probability")
    p.add_argument(
        "--subset",
        action="append",
        default=[],
        metavar="NAME:QUOTA:c1,c2,...",
        help="party-list: declare a candidate subset (repeatable)",
    )
    p.add_argument(
        "--block",
        action="append",
        default=[],
        metavar="COUNT:c1,c2,...",
        help="party-list: a block of identical ballots (repeatable)",
    )

    p = sub.add_parser("encode-setcover", help="encode a set-cover file as an instance")
    p.add_argument("setcover")
    p.add_argument("-o", "--output", default="-")

    return parser


def run(argv) -> int:
    """Execute one invocation; returns the exit code instead of exiting."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    handler = {
        "validate": _cmd_validate,
        "check": _cmd_check,
        "solve": _cmd_solve,
        "score": _cmd_score,
        "exists": _cmd_exists,
        "gen": _cmd_gen,
        "encode-setcover": _cmd_encode_setcover,
    }[args.command]
    try:
        return handler(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ScvError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run(sys.argv[1:]))


# -- helpers ------------------------------------------------------------------


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _write(path: str, text: str):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _load_instance(path: str) -> ScvInstance:
    return parse_instance(_read(path))


def _parse_committee(inst: ScvInstance, spec: str) -> Committee:
    names = [name.strip() for name in spec.split(",") if name.strip()]
    members = [inst.candidate_id(name) for name in names]
    return Committee.of(inst, members)


def _emit(args, payload, human_lines):
    if args.json:
        sys.stdout.write(to_json_text(payload))
    elif not args.quiet:
        for line in human_lines:
            print(line)


def _axiom_summary(inst: ScvInstance, committee) -> dict:
    return {
        axiom: axioms.verdict_to_json(inst, axioms.check_axiom(inst, committee, axiom))
        for axiom in axioms.ALL_AXIOMS
    }


def _describe_verdict(inst: ScvInstance, verdict) -> str:
    if verdict.satisfied:
        return f"{verdict.axiom}: pass"
    wit = verdict.witness
    names = ",".join(inst.candidate_name(c) for c in wit.candidates)
    return (
        f"{verdict.axiom}: FAIL (voters {sorted(wit.voters)} share {names}"
        + (f" in {inst.subsets[wit.subset].name}" if wit.subset is not None else "")
        + ")"
    )


# -- subcommands ---------------------------------------------------------------


def _cmd_validate(args) -> int:
    try:
        inst = parse_instance(_read(args.instance))
    except (ParseError, SemanticError, InvalidInstance) as exc:
        problems = list(getattr(exc, "problems", [])) or [str(exc)]
        _emit(args, {"valid": False, "problems": problems},
              [f"invalid: {p}" for p in problems])
        return EXIT_INVALID
    _emit(
        args,
        {"valid": True, "problems": []},
        [
            f"ok: {inst.num_voters} voters, {inst.num_subsets} subsets, "
            f"{inst.num_candidates} candidates, committee size {inst.committee_size}"
        ],
    )
    return EXIT_OK


def _cmd_check(args) -> int:
    inst = _load_instance(args.instance)
    committee = _parse_committee(inst, args.committee)
    requested = list(axioms.ALL_AXIOMS) if args.axiom == "all" else [args.axiom]
    verdicts = [axioms.check_axiom(inst, committee, axiom) for axiom in requested]
    payload = [axioms.verdict_to_json(inst, v) for v in verdicts]
    if args.axiom != "all":
        payload = payload[0]
    _emit(args, payload, [_describe_verdict(inst, v) for v in verdicts])
    return EXIT_OK if all(v.satisfied for v in verdicts) else EXIT_NEGATIVE


def _cmd_solve(args) -> int:
    inst = _load_instance(args.instance)
    if args.rule == "greedy":
        committee, trace = greedy.solve_greedy(inst)
        if args.trace:
            _write(args.trace, greedy.trace_to_json_lines(inst, trace))
        payload = {
            "rule": "greedy",
            "committee": list(inst.names_of(committee.members)),
            "axioms": _axiom_summary(inst, committee),
        }
    else:
        committee, score = pav.maximize(inst, args.rule, budget=args.budget)
        payload = {
            "variant": args.rule,
            "committee": list(inst.names_of(committee.members)),
            "score": pav.score_to_json(score),
            "axioms": _axiom_summary(inst, committee),
        }
    lines = [f"committee: {','.join(inst.names_of(committee.members))}"]
    if "score" in payload:
        lines.append(f"score: {payload['score']['num']}/{payload['score']['den']}")
    lines += [
        _describe_verdict(inst, axioms.check_axiom(inst, committee, axiom))
        for axiom in axioms.ALL_AXIOMS
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_score(args) -> int:
    inst = _load_instance(args.instance)
    committee = _parse_committee(inst, args.committee)
    score = (pav.sw_pav_score if args.variant == pav.SW_PAV else pav.iw_pav_score)(
        inst, committee
    )
    payload = {
        "variant": args.variant,
        "committee": list(inst.names_of(committee.members)),
        "score": pav.score_to_json(score),
    }
    _emit(args, payload, [f"{score.numerator}/{score.denominator}"])
    return EXIT_OK


def _cmd_exists(args) -> int:
    inst = _load_instance(args.instance)
    committee = search.sw_jr_exists(inst, budget=args.budget)
    if committee is None:
        _emit(args, {"exists": False, "committee": None}, ["none"])
        return EXIT_NEGATIVE
    names = list(inst.names_of(committee.members))
    _emit(args, {"exists": True, "committee": names}, [",".join(names)])
    return EXIT_OK


def _parse_int_list(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise _UsageError(f"{what} must be comma-separated integers, got {text!r}")


def _cmd_gen(args) -> int:
    if args.model == "uniform":
        missing = [
            flag
            for flag, value in (
                ("--voters", args.voters),
                ("--sizes", args.sizes),
                ("--quotas", args.quotas),
                ("--p", args.p),
            )
            if value is None
        ]
        if missing:
            raise _UsageError(f"uniform model requires {', '.join(missing)}")
        model = UniformModel(
            num_voters=args.voters,
            sizes=_parse_int_list(args.sizes, "--sizes"),
            quotas=_parse_int_list(args.quotas, "--quotas"),
            approval_prob=args.p,
        )
    else:
        if not args.subset or not args.block:
            raise _UsageError("party-list model requires --subset and --block")
        subsets = []
        for spec in args.subset:
            try:
                name, quota, members = spec.split(":", 2)
                subsets.append(
                    (name, tuple(c for c in members.split(",") if c), int(quota))
                )
            except ValueError:
                raise _UsageError(f"bad --subset {spec!r}, expected NAME:QUOTA:c1,c2")
        blocks = []
        for spec in args.block:
            try:
                count, members = spec.split(":", 1)
                blocks.append(
                    (int(count), tuple(c for c in members.split(",") if c))
                )
            except ValueError:
                raise _UsageError(f"bad --block {spec!r}, expected COUNT:c1,c2")
        model = PartyListModel(subsets=tuple(subsets), blocks=tuple(blocks))
    inst = generate_instance(model, args.seed)
    _write(args.output, serialize_instance(inst))
    if args.output != "-" and not args.quiet and not args.json:
        print(f"wrote {args.output}")
    return EXIT_OK


def _cmd_encode_setcover(args) -> int:
    sc = parse_set_cover(_read(args.setcover))
    inst = search.encode_set_cover(sc)
    _write(args.output, serialize_instance(inst))
    if args.output != "-" and not args.quiet and not args.json:
        print(f"wrote {args.output}")
    return EXIT_OK


if __name__ == "__main__":
    main()
