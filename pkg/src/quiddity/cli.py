"""Command-line front end.

Exit codes: 0 when the computation succeeds and any verdict is positive,
1 for a mathematically negative verdict (not +/-Id, not a member, not a
solution, frieze construction failure, sweep counterexample), 2 for usage,
parse, validation, or cap errors.

Sequences are given inline as comma-separated entries, or as ``@path`` to
process one sequence per line.  Enumeration caps can be raised or lowered
with the environment variables QUIDDITY_MOD2_CAP, QUIDDITY_POLYGON_CAP,
and QUIDDITY_INT_CAP.
"""

import argparse
import json
import os
import sys

from .algebra import (
    MatClass,
    classify_pm_identity,
    format_seq,
    in_principal_congruence,
    is_gamma2_solution,
    m_product,
    m_product_mod,
    parse_int_seq,
    parse_mod2_seq,
)
from .dissections import (
    CapExceeded,
    DEFAULT_POLYGON_CAP,
    Dissection,
    DissectionError,
)
from .enumeration import (
    DEFAULT_INT_CAP,
    DEFAULT_MOD2_CAP,
    SWEEP_NAMES,
    solution_report,
    theorem_sweep,
)
from .frieze import FriezeError, build_frieze, frieze_to_json_dict, render_text
from .surgery import (
    AllEven,
    NotASolution,
    SurgeryError,
    realize_dissection,
    realize_triangulation,
)

_SWEEP_CHOICES = ("all", "thm1") + SWEEP_NAMES


def _env_cap(name: str, default: int) -> int:
    value = os.environ.get(name)
    if value is None:
        return default
    try:
        return int(value)
    except ValueError:
        raise SystemExit(f"quiddity: {name} must be an integer, got {value!r}")


def _sequences(arg: str) -> list[str]:
    """Inline sequence, or one sequence per line from ``@path``."""
    if not arg.startswith("@"):
        return [arg]
    with open(arg[1:], encoding="utf-8") as handle:
        return [
            line.strip()
            for line in handle
            if line.strip() and not line.lstrip().startswith("#")
        ]


def _emit(data: dict) -> None:
    print(json.dumps(data))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiddity",
        description="Matrix words, polygon dissections, quiddities, and friezes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="evaluate M(c1,...,cn) and classify it")
    p.add_argument("sequence", help="comma-separated positive integers, or @file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--pm", action="store_true", help="compare against +Id/-Id")
    group.add_argument("--mod", type=int, metavar="N", help="test membership in the level-N congruence subgroup")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("check-mod2", help="test a 0/1 sequence for mod-2 solubility")
    p.add_argument("sequence", help="comma-separated 0/1 entries, or @file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("quiddity", help="read a dissection JSON file and print a quiddity")
    p.add_argument("dissection", help="path to dissection JSON, or - for stdin")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--cc", action="store_true", help="cells incident to each vertex")
    group.add_argument("--mod2", action="store_true", help="parity of triangles at each vertex")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("realize", help="build a dissection realizing a mod-2 solution")
    p.add_argument("sequence", help="comma-separated 0/1 entries, or @file")
    p.add_argument("--triangulation", action="store_true", help="build a triangulation (needs an odd entry)")
    p.add_argument("--dot", metavar="PATH", help="also write a DOT rendering")
    p.add_argument("--geometry", choices=["circle"], help="pin DOT vertices to the unit circle")

    p = sub.add_parser("frieze", help="build and render the frieze of a quiddity")
    p.add_argument("sequence", help="comma-separated positive integers, or @file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("enumerate", help="enumerate solutions and run verification sweeps")
    p.add_argument("n", type=int)
    p.add_argument("--classes", action="store_true", help="also list rotation-class representatives")
    p.add_argument("--tuples", action="store_true", help="list all solution tuples")
    p.add_argument("--verify-jacobsthal", action="store_true", help="check the count against the closed form")
    p.add_argument("--sweep", choices=_SWEEP_CHOICES, help="run a verification sweep up to n")
    p.add_argument("--json", action="store_true")

    return parser


def _cmd_check(args) -> int:
    worst = 0
    for text in _sequences(args.sequence):
        seq = parse_int_seq(text)
        if args.pm:
            m = m_product(seq)
            verdict = classify_pm_identity(m)
            member = verdict is not MatClass.OTHER
            if args.json:
                _emit({
                    "schema": 1,
                    "sequence": list(seq),
                    "matrix": [[m.a, m.b], [m.c, m.d]],
                    "verdict": verdict.value,
                })
            else:
                print(f"M({format_seq(seq)}) = {m}")
                print(verdict.value)
        else:
            if args.mod < 2:
                raise ValueError(f"modulus must be at least 2, got {args.mod}")
            m = m_product_mod(seq, args.mod)
            member = in_principal_congruence(m_product(seq), args.mod)
            if args.json:
                _emit({
                    "schema": 1,
                    "sequence": list(seq),
                    "modulus": args.mod,
                    "matrix": [[m.a, m.b], [m.c, m.d]],
                    "member": member,
                })
            else:
                print(f"M({format_seq(seq)}) mod {args.mod} = {m}")
                print("true" if member else "false")
        worst = max(worst, 0 if member else 1)
    return worst


def _cmd_check_mod2(args) -> int:
    worst = 0
    for text in _sequences(args.sequence):
        seq = parse_mod2_seq(text)
        m = m_product_mod(seq, 2)
        solution = is_gamma2_solution(seq)
        if args.json:
            _emit({
                "schema": 1,
                "sequence": list(seq),
                "matrix": [[m.a, m.b], [m.c, m.d]],
                "solution": solution,
            })
        else:
            print(f"M({format_seq(seq)}) mod 2 = {m}")
            print("true" if solution else "false")
        worst = max(worst, 0 if solution else 1)
    return worst


def _cmd_quiddity(args) -> int:
    if args.dissection == "-":
        text = sys.stdin.read()
    else:
        with open(args.dissection, encoding="utf-8") as handle:
            text = handle.read()
    d = Dissection.from_json(text)
    seq = d.quiddity_cc() if args.cc else d.quiddity_mod2()
    if args.json:
        _emit({"schema": 1, "n": d.n, "quiddity": list(seq)})
    else:
        print(format_seq(seq))
    return 0


def _cmd_realize(args) -> int:
    for text in _sequences(args.sequence):
        seq = parse_mod2_seq(text)
        d = realize_triangulation(seq) if args.triangulation else realize_dissection(seq)
        print(d.to_json())
        if args.dot:
            with open(args.dot, "w", encoding="utf-8") as handle:
                handle.write(d.to_dot(geometry=args.geometry))
    return 0


def _cmd_frieze(args) -> int:
    texts = _sequences(args.sequence)
    for pos, text in enumerate(texts):
        seq = parse_int_seq(text)
        pattern = build_frieze(seq)
        if args.json:
            _emit(frieze_to_json_dict(pattern))
        else:
            if pos:
                print()
            print(render_text(pattern), end="")
    return 0


def _expand_sweeps(choice: str) -> tuple[str, ...]:
    if choice == "all":
        return SWEEP_NAMES
    if choice == "thm1":
        return ("thm1i", "thm1ii")
    return (choice,)


def _cmd_enumerate(args, caps) -> int:
    mod2_cap, polygon_cap, int_cap = caps
    if args.sweep:
        status = 0
        results = []
        for which in _expand_sweeps(args.sweep):
            report = theorem_sweep(
                which,
                3,
                args.n,
                polygon_cap=polygon_cap,
                mod2_cap=mod2_cap,
                int_cap=int_cap,
            )
            results.append(report)
            if not report.ok:
                status = 1
        if args.json:
            _emit({
                "schema": 1,
                "sweeps": [
                    {
                        "which": r.which,
                        "range": [r.n_lo, r.n_hi],
                        "checked": r.checked,
                        "counterexamples": list(r.counterexamples),
                    }
                    for r in results
                ],
            })
        else:
            for r in results:
                print(
                    f"sweep={r.which} range={r.n_lo}..{r.n_hi} "
                    f"checked={r.checked} counterexamples={len(r.counterexamples)}"
                )
                for line in r.counterexamples:
                    print(f"  {line}")
        return status

    report = solution_report(args.n, cap=mod2_cap)
    if args.json:
        data = {
            "schema": 1,
            "n": report.n,
            "tuples": report.tuple_count,
            "expected": report.expected_count,
            "match": report.match,
            "classes": report.class_count,
        }
        if args.tuples:
            data["solutions"] = [list(t) for t in report.tuples]
        if args.classes:
            data["class_representatives"] = [list(t) for t in report.class_reps]
        _emit(data)
    else:
        print(
            f"n={report.n} tuples={report.tuple_count} "
            f"expected={report.expected_count} match={'true' if report.match else 'false'}"
        )
        if args.classes:
            print(f"classes={report.class_count}")
            for rep in report.class_reps:
                print(format_seq(rep))
        if args.tuples:
            for t in report.tuples:
                print(format_seq(t))
    if args.verify_jacobsthal and not report.match:
        return 1
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    caps = (
        _env_cap("QUIDDITY_MOD2_CAP", DEFAULT_MOD2_CAP),
        _env_cap("QUIDDITY_POLYGON_CAP", DEFAULT_POLYGON_CAP),
        _env_cap("QUIDDITY_INT_CAP", DEFAULT_INT_CAP),
    )

    try:
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "check-mod2":
            return _cmd_check_mod2(args)
        if args.command == "quiddity":
            return _cmd_quiddity(args)
        if args.command == "realize":
            return _cmd_realize(args)
        if args.command == "frieze":
            return _cmd_frieze(args)
        if args.command == "enumerate":
            return _cmd_enumerate(args, caps)
        raise AssertionError(f"unhandled command {args.command}")
    except (NotASolution, AllEven) as exc:
        print(f"quiddity: {exc}", file=sys.stderr)
        return 1
    except FriezeError as exc:
        print(f"quiddity: {exc}", file=sys.stderr)
        return 1
    except (CapExceeded, DissectionError, SurgeryError, ValueError, OSError) as exc:
        print(f"quiddity: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
