"""Command-line front end: verification runs, character reports, matrices."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from importlib import resources

from . import __version__
from .quotient import (
    almost_lower_triangular,
    build_ideal,
    graded_quotient,
    transition_matrix,
    verify_basis,
)
from .specht import build_basis_family, higher_specht
from .symfunc import (
    GradedSchurExpansion,
    graded_frobenius,
    grfrob_formula_rnk,
    grfrob_formula_rnkmu,
    hall_littlewood_cocharge,
)
from .tableaux import parse_partition, parse_tableau, partitions


class UsageError(Exception):
    """Bad parameters; maps to exit code 2."""


FAMILIES = ("Rn", "Rnk", "Rnks", "Rmu", "Rnkmu")

_REQUIRED = {
    "Rn": ("n",),
    "Rnk": ("n", "k"),
    "Rnks": ("n", "k", "s"),
    "Rmu": ("mu",),
    "Rnkmu": ("n", "k", "mu"),
}


def _resolve_params(family: str, args: argparse.Namespace) -> dict:
    """Collect the flags a family needs into a JSON-safe dict."""
    if family not in FAMILIES:
        raise UsageError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    out: dict = {}
    for name in _REQUIRED[family]:
        value = getattr(args, name, None)
        if value is None:
            raise UsageError(f"--{name} is required for family {family}")
        out[name] = list(value) if name == "mu" else value
    return out


def _family_kwargs(params: dict) -> dict:
    kwargs = dict(params)
    if "mu" in kwargs:
        kwargs["mu"] = tuple(kwargs["mu"])
    return kwargs


def _verify_report(family: str, params: dict) -> dict:
    kwargs = _family_kwargs(params)
    quotient = graded_quotient(build_ideal(family, **kwargs))
    elements = build_basis_family("B" + family[1:], **kwargs)
    return verify_basis(quotient, elements, family_name=family, params=params)


def _expansion_payload(exp: GradedSchurExpansion) -> dict:
    return {
        "terms": exp.to_jsonable(),
        "hilbert": list(exp.hilbert()),
        "pretty": str(exp),
    }


def _formula_expansion(family: str, params: dict) -> GradedSchurExpansion:
    kwargs = _family_kwargs(params)
    if family == "Rn":
        return grfrob_formula_rnk(kwargs["n"], kwargs["n"])
    if family == "Rnk":
        return grfrob_formula_rnk(kwargs["n"], kwargs["k"])
    if family == "Rmu":
        return hall_littlewood_cocharge(kwargs["mu"])
    if family == "Rnkmu":
        return grfrob_formula_rnkmu(kwargs["n"], kwargs["k"], kwargs["mu"])
    raise UsageError(f"no closed character formula is wired up for family {family}")


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _json_report(report: dict, path: str | None) -> None:
    _emit(json.dumps(report, indent=2, sort_keys=True) + "\n", path)


def _report_skeleton(command: str, config: dict) -> dict:
    return {"version": __version__, "command": command, "config": config}


# -- subcommand implementations ------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    params = _resolve_params(args.family, args)
    body = _verify_report(args.family, params)
    report = _report_skeleton("verify", {"family": args.family, "params": params})
    report.update(body)
    _json_report(report, args.output)
    return 0 if report["verdict"] else 1


def cmd_frobenius(args: argparse.Namespace) -> int:
    params = _resolve_params(args.family, args)
    kwargs = _family_kwargs(params)
    quotient = graded_quotient(build_ideal(args.family, **kwargs))
    computed = graded_frobenius(quotient)
    config = {"family": args.family, "params": params, "compare": args.compare}
    report = _report_skeleton("frobenius", config)
    report["computed"] = _expansion_payload(computed)
    code = 0
    if args.compare is not None:
        formula = _formula_expansion(args.family, params)
        report["formula"] = _expansion_payload(formula)
        report["equal"] = computed.coeffs == formula.coeffs
        code = 0 if report["equal"] else 1
    _json_report(report, args.output)
    return code


def _format_entry(value) -> str:
    return str(value)


def cmd_transition(args: argparse.Namespace) -> int:
    mu = tuple(args.mu)
    result = transition_matrix(mu, args.d, normalize=args.normalize)
    verdict, witness = almost_lower_triangular(result.matrix)
    matrix = [[_format_entry(v) for v in row] for row in result.matrix]
    labels = {
        "rows": [be.label() for be in result.rows],
        "cols": [be.label() for be in result.cols],
    }
    config = {"mu": list(mu), "d": args.d, "normalize": args.normalize}
    if args.format == "csv":
        if args.output is None:
            raise UsageError("--format csv requires --output (a sidecar file is written)")
        lines = [",".join(row) for row in matrix]
        _emit("\n".join(lines) + "\n", args.output)
        sidecar = _report_skeleton("transition", config)
        sidecar.update(labels)
        sidecar["almost_lower_triangular"] = verdict
        if witness is not None:
            sidecar["witness"] = [[_format_entry(v) for v in row] for row in witness]
        _json_report(sidecar, args.output + ".labels.json")
    else:
        report = _report_skeleton("transition", config)
        report["matrix"] = matrix
        report.update(labels)
        report["almost_lower_triangular"] = verdict
        report["witness"] = (
            None if witness is None else [[_format_entry(v) for v in row] for row in witness]
        )
        _json_report(report, args.output)
    return 0 if verdict else 1


def _sweep_cases(args: argparse.Namespace) -> list[dict]:
    if args.config is not None:
        with open(args.config, encoding="utf-8") as fh:
            data = json.load(fh)
        cases = data.get("cases", [])
        for case in cases:
            if case.get("family") not in FAMILIES or "params" not in case:
                raise UsageError(f"malformed sweep case: {case!r}")
        return cases
    if args.family is None or args.max_n is None:
        return []
    cases: list[dict] = []
    family = args.family
    for n in range(1, args.max_n + 1):
        if family == "Rn":
            cases.append({"family": family, "params": {"n": n}})
        elif family == "Rnk":
            for k in range(1, n + 1):
                cases.append({"family": family, "params": {"n": n, "k": k}})
        elif family == "Rnks":
            for k in range(1, n + 1):
                for s in range(0, k + 1):
                    cases.append({"family": family, "params": {"n": n, "k": k, "s": s}})
        elif family == "Rmu":
            for mu in partitions(n):
                cases.append({"family": family, "params": {"mu": list(mu)}})
        elif family == "Rnkmu":
            if n >= 2:
                for k in range(1, n + 1):
                    cases.append(
                        {"family": family, "params": {"n": n, "k": k, "mu": [n - 1]}}
                    )
        else:
            raise UsageError(f"unknown family {family!r}")
    return cases


def _run_case(case: dict) -> dict:
    """Worker entry point; must stay importable and return JSON-safe data."""
    body = _verify_report(case["family"], case["params"])
    return {
        "family": case["family"],
        "params": case["params"],
        "verdict": body["verdict"],
        "dimension": body["dimension"],
        "family_size": body["family_size"],
        "failures": body["failures"],
    }


def cmd_sweep(args: argparse.Namespace) -> int:
    cases = _sweep_cases(args)
    if args.jobs > 1 and len(cases) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_case, cases))
    else:
        results = [_run_case(case) for case in cases]
    config = {
        "family": args.family,
        "max_n": args.max_n,
        "cases": cases,
    }
    report = _report_skeleton("sweep", config)
    report["results"] = results
    report["total"] = len(results)
    report["passed"] = sum(1 for r in results if r["verdict"])
    report["all_pass"] = report["passed"] == report["total"]
    _json_report(report, args.output)
    return 0 if report["all_pass"] else 1


def cmd_hilbert(args: argparse.Namespace) -> int:
    params = _resolve_params(args.family, args)
    quotient = graded_quotient(build_ideal(args.family, **_family_kwargs(params)))
    report = _report_skeleton("hilbert", {"family": args.family, "params": params})
    report["hilbert"] = list(quotient.hilbert)
    report["dimension"] = quotient.dimension
    report["max_degree"] = quotient.max_degree
    _json_report(report, args.output)
    return 0


def cmd_specht_eval(args: argparse.Namespace) -> int:
    s = parse_tableau(args.s)
    t = parse_tableau(args.t)
    poly = higher_specht(s, t)
    if args.format == "pretty":
        _emit(str(poly) + "\n", args.output)
        return 0
    report = _report_skeleton("specht-eval", {"S": args.s, "T": args.t})
    report["degree"] = poly.degree()
    report["polynomial"] = str(poly)
    report["terms"] = [
        {"exponent": list(e), "coeff": str(c)} for e, c in poly.sorted_terms()
    ]
    _json_report(report, args.output)
    return 0


# -- parser ---------------------------------------------------------------------


def _add_family_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--family", required=True, help="Rn, Rnk, Rnks, Rmu or Rnkmu")
    sub.add_argument("--n", type=int)
    sub.add_argument("--k", type=int)
    sub.add_argument("--s", type=int)
    sub.add_argument("--mu", type=parse_partition, help='partition, e.g. "3,3,2"')
    sub.add_argument("--output", help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spechtpoly",
        description="Higher Specht bases of coinvariant-type quotient rings.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("verify", help="check a basis family against its quotient")
    _add_family_flags(p)
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("frobenius", help="graded Frobenius character of a quotient")
    _add_family_flags(p)
    p.add_argument(
        "--compare",
        nargs="?",
        const="formula",
        choices=["formula"],
        help="also evaluate the closed formula and report equality",
    )
    p.set_defaults(func=cmd_frobenius)

    p = subs.add_parser("transition", help="expansion matrix over the recursion family")
    p.add_argument("--mu", type=parse_partition, required=True)
    p.add_argument("--d", type=int, required=True, help="polynomial degree slice")
    p.add_argument("--normalize", choices=["raw", "primitive"], default="raw")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--output")
    p.set_defaults(func=cmd_transition)

    p = subs.add_parser("sweep", help="verify many families in one run")
    p.add_argument("--family", help="family to sweep with --max-n")
    p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("--config", help='JSON file with {"cases": [{family, params}...]}')
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output")
    p.set_defaults(func=cmd_sweep)

    p = subs.add_parser("hilbert", help="Hilbert function of a quotient")
    _add_family_flags(p)
    p.set_defaults(func=cmd_hilbert)

    p = subs.add_parser("specht-eval", help="print a single polynomial F_T^S")
    p.add_argument("--s", required=True, help='tableau, bottom row first, e.g. "1 1 1/2 2"')
    p.add_argument("--t", required=True, help='tableau, bottom row first, e.g. "1 3 5/2 4"')
    p.add_argument("--format", choices=["json", "pretty"], default="json")
    p.add_argument("--output")
    p.set_defaults(func=cmd_specht_eval)

    return parser


def report_schema() -> dict:
    """The JSON schema every report emitted by this CLI conforms to."""
    with resources.files("spechtpoly.schemas").joinpath("report.schema.json").open(
        encoding="utf-8"
    ) as fh:
        return json.load(fh)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"mathematical failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
