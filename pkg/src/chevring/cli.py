"""Command-line front end.

Subcommands: params, present, series, compare, verify.  Exit codes: 0 on
success, 1 on usage/input/resource errors, 2 when a mathematical hypothesis
of the requested computation fails (the diagnostic names the hypothesis).
The environment variable CHEVRING_MONOMIAL_LIMIT overrides the default
memory budget of the brute-force oracles.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from itertools import combinations_with_replacement

from . import oracles, presentations, rootdata
from .arith import galois_params, gl_params, multiplicative_order, prime_power_base
from .errors import InputError, PreconditionError, ResourceLimitError

SCHEMA_VERSION = 1

DEFAULT_PRIMES = (3, 5, 7, 11, 13)
# concrete fields driven through the Sp-pattern clause of `verify`
_SP_FIELDS = ((2, 2), (2, 4), (3, 3), (3, 9), (3, 27), (3, 81), (5, 5))


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); we want exit 1
        raise UsageError(message)


@dataclass(frozen=True)
class Request:
    subcommand: str
    family: str | None = None
    rank: int | None = None
    p: int | None = None
    q: int | None = None
    l: int | None = None
    b: int = 1
    n: int | None = None
    theory: str | None = None
    grading: str | None = None
    cutoff: int | None = None
    fmt: str = "text"
    primes: tuple[int, ...] = DEFAULT_PRIMES
    max_weight_entry: int = 4
    max_weight_len: int = 3
    max_m: int = 2
    sp_max_rank: int = 4
    monomial_limit: int = oracles.DEFAULT_MONOMIAL_LIMIT


def _default_monomial_limit() -> int:
    raw = os.environ.get("CHEVRING_MONOMIAL_LIMIT")
    if raw is None:
        return oracles.DEFAULT_MONOMIAL_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"CHEVRING_MONOMIAL_LIMIT must be an integer, got {raw!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chevring", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_field_args(p, with_group=True):
        if with_group:
            p.add_argument("--family", required=True, help="group family, e.g. GL, Sp, SO_odd")
            p.add_argument("--rank", required=True, type=int)
        p.add_argument("--q", required=True, type=int, help="field size (prime power)")
        p.add_argument("--l", required=True, type=int, help="coefficient prime")
        p.add_argument("--p", type=int, help="characteristic; inferred from q if omitted")

    p_params = sub.add_parser("params", help="show the arithmetic tuple (p, q, l, r, a, h)")
    add_field_args(p_params, with_group=False)
    p_params.add_argument("--n", type=int, help="also show the long division n = r*m + e")
    p_params.add_argument("--format", choices=("text", "json"), default="text")

    p_present = sub.add_parser("present", help="print a ring presentation")
    add_field_args(p_present)
    p_present.add_argument("--theory", choices=("cobordism", "chow"), required=True)
    p_present.add_argument("--b", type=int, default=1, help="coefficient exponent (chow only)")
    p_present.add_argument("--cutoff", type=int, help="also compute the Poincare series up to this degree")
    p_present.add_argument("--grading", choices=("chow", "topological"))
    p_present.add_argument("--format", choices=("text", "json", "latex"), default="text")

    p_series = sub.add_parser("series", help="Poincare series of a presentation")
    add_field_args(p_series)
    p_series.add_argument("--theory", choices=("cobordism", "chow"), required=True)
    p_series.add_argument("--b", type=int, default=1)
    p_series.add_argument("--cutoff", type=int, required=True)
    p_series.add_argument("--grading", choices=("chow", "topological"))
    p_series.add_argument("--format", choices=("text", "json", "latex"), default="text")

    p_compare = sub.add_parser("compare", help="compare the GL chow and cobordism presentations")
    p_compare.add_argument("--rank", required=True, type=int)
    p_compare.add_argument("--q", required=True, type=int)
    p_compare.add_argument("--l", required=True, type=int)
    p_compare.add_argument("--p", type=int)
    p_compare.add_argument("--format", choices=("text", "json"), default="text")

    p_verify = sub.add_parser("verify", help="run the built-in verification sweeps")
    p_verify.add_argument("--primes", default=",".join(str(x) for x in DEFAULT_PRIMES))
    p_verify.add_argument("--max-weight-entry", type=int, default=4)
    p_verify.add_argument("--max-weight-len", type=int, default=3)
    p_verify.add_argument("--max-m", type=int, default=2)
    p_verify.add_argument("--cutoff", type=int, default=8)
    p_verify.add_argument("--sp-max-rank", type=int, default=4)
    p_verify.add_argument("--monomial-limit", type=int)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def parse_args(argv) -> Request:
    ns = build_parser().parse_args(argv)
    kwargs = {"subcommand": ns.subcommand, "fmt": ns.format}
    for name in ("family", "rank", "p", "q", "l", "b", "n", "theory", "grading", "cutoff"):
        if hasattr(ns, name) and getattr(ns, name) is not None:
            kwargs[name] = getattr(ns, name)
    if ns.subcommand == "verify":
        try:
            primes = tuple(int(t) for t in ns.primes.split(","))
        except ValueError:
            raise UsageError(f"--primes must be a comma-separated integer list, got {ns.primes!r}")
        kwargs.update(
            primes=primes,
            max_weight_entry=ns.max_weight_entry,
            max_weight_len=ns.max_weight_len,
            max_m=ns.max_m,
            cutoff=ns.cutoff,
            sp_max_rank=ns.sp_max_rank,
            monomial_limit=ns.monomial_limit
            if ns.monomial_limit is not None
            else _default_monomial_limit(),
        )
    return Request(**kwargs)


def _infer_p(request: Request) -> int:
    base, _ = prime_power_base(request.q)
    if request.p is not None and request.p != base:
        raise InputError(
            f"--p {request.p} contradicts --q {request.q}, whose characteristic is {base}"
        )
    return base


def _presentation(request: Request) -> presentations.GradedPresentation:
    if request.theory == "chow":
        if request.family != "GL":
            raise InputError("chow presentations are available for the GL family only")
        if request.l == 2:
            raise PreconditionError(
                "l must be odd: the mod-l Chow presentation for GL is stated for odd primes only"
            )
        params = galois_params(_infer_p(request), request.q, request.l)
        return presentations.chow_gl_presentation(gl_params(params, request.rank), b=request.b)
    params = galois_params(_infer_p(request), request.q, request.l)
    if request.b != 1:
        raise InputError("--b is meaningful for the chow theory only")
    datum = rootdata.lookup(request.family, request.rank)
    return presentations.cobordism_presentation(datum, params)


# -- subcommand implementations ---------------------------------------------


def _run_params(request: Request) -> str:
    params = galois_params(_infer_p(request), request.q, request.l)
    payload = {
        "schema_version": SCHEMA_VERSION,
        "kind": "params",
        "p": params.p,
        "q": params.q,
        "l": params.l,
        "r": params.r,
        "a": params.a,
        "h": params.h,
    }
    if request.n is not None:
        glp = gl_params(params, request.n)
        payload.update(n=glp.n, m=glp.m, e=glp.e)
    if request.fmt == "json":
        return json.dumps(payload, indent=2)
    order = ("p", "q", "l", "r", "a", "h", "n", "m", "e")
    return "\n".join(f"{k} = {payload[k]}" for k in order if k in payload)


def _run_present(request: Request) -> str:
    pres = _presentation(request)
    if request.fmt == "latex":
        return presentations.render_latex(pres)
    if request.fmt == "json":
        payload = pres.to_json_dict()
        if request.cutoff is not None:
            grading = request.grading or pres.grading
            series = presentations.poincare_series(pres, request.cutoff, grading)
            payload["series"] = {"grading": grading, **series.to_json_dict()}
        return json.dumps(payload, indent=2)
    text = presentations.render_text(pres)
    if request.cutoff is not None:
        grading = request.grading or pres.grading
        series = presentations.poincare_series(pres, request.cutoff, grading)
        text += f"\nseries ({grading} grading, up to degree {request.cutoff}): {series}"
    return text


def _run_series(request: Request) -> str:
    pres = _presentation(request)
    grading = request.grading or pres.grading
    series = presentations.poincare_series(pres, request.cutoff, grading)
    if request.fmt == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "kind": "series",
            "theory": pres.theory,
            "group": {"family": pres.family, "rank": pres.rank},
            "field": {"p": pres.p, "q": pres.q},
            "prime": pres.l,
            "grading": grading,
            "series": series.to_json_dict(),
        }
        return json.dumps(payload, indent=2)
    if request.fmt == "latex":
        return _latex_series(series)
    return str(series)


def _latex_series(series) -> str:
    terms = []
    for d, c in enumerate(series.coefficients):
        if not c:
            continue
        if d == 0:
            terms.append(str(c))
            continue
        t = f"t^{d}" if d < 10 else f"t^{{{d}}}"
        terms.append(t if c == 1 else f"{c}{t}")
    terms.append(f"O(t^{{{series.cutoff + 1}}})")
    return " + ".join(terms)


def _run_compare(request: Request) -> str:
    params = galois_params(_infer_p(request), request.q, request.l)
    report = presentations.compare_chow_cobordism_gl(gl_params(params, request.rank))
    if request.fmt == "json":
        return json.dumps(report.to_json_dict(), indent=2)
    verdict = "equal" if report.equal else "MISMATCH"
    return "\n".join(
        [
            f"GL_{report.rank}, q = {report.q}, l = {report.l}: {verdict}",
            f"  chow degrees: {list(report.chow_degrees)}",
            f"  cobordism degrees: {list(report.cobordism_degrees)}",
        ]
    )


# -- verify -----------------------------------------------------------------


def _residues_one_per_order(l: int) -> list[int]:
    """The smallest residue mod l of each multiplicative order dividing l-1."""
    seen: dict[int, int] = {}
    for q in range(1, l):
        r = multiplicative_order(q, l)
        seen.setdefault(r, q)
    return [seen[r] for r in sorted(seen)]


def _weight_lists(max_len: int, max_entry: int):
    for k in range(1, max_len + 1):
        yield from combinations_with_replacement(range(1, max_entry + 1), k)


def _run_verify(request: Request) -> tuple[bool, str]:
    clauses: list[dict] = []

    def clause(name: str, passed: bool, instances: int, witness: str | None = None):
        clauses.append(
            {"name": name, "passed": passed, "instances": instances, "witness": witness}
        )

    checked = rootdata.validate_registry()
    clause("registry-invariants", True, checked)

    sweep = [(l, q) for l in request.primes for q in _residues_one_per_order(l)]

    count, witness = 0, None
    for l, q in sweep:
        for weights in _weight_lists(request.max_weight_len, request.max_weight_entry):
            problem = oracles.GradedActionProblem(
                weights=weights,
                l=l,
                q=q,
                cutoff=request.cutoff,
                monomial_limit=request.monomial_limit,
            )
            try:
                brute = oracles.coinvariants_hilbert_bruteforce(problem)
            except ResourceLimitError as exc:
                raise ResourceLimitError(
                    f"coinvariant sweep at weights {weights}, l = {l}, q = {q}: {exc}",
                    degree=exc.degree,
                    count=exc.count,
                ) from None
            closed = oracles.coinvariants_hilbert_closedform(problem)
            count += 1
            if brute != closed and witness is None:
                witness = f"weights {weights}, l = {l}, q = {q}: {brute} != {closed}"
    clause("coinvariants-oracle-vs-closed-form", witness is None, count, witness)

    count, witness = 0, None
    for l, q in sweep:
        for m in range(1, request.max_m + 1):
            problem = oracles.GradedActionProblem(
                weights=(1,) * m,
                l=l,
                q=q,
                cutoff=request.cutoff,
                permutation=oracles.FULL_SYMMETRIC,
                monomial_limit=request.monomial_limit,
            )
            try:
                brute = oracles.invariants_hilbert_bruteforce(problem)
            except ResourceLimitError as exc:
                raise ResourceLimitError(
                    f"invariant sweep at m = {m}, l = {l}, q = {q}: {exc}",
                    degree=exc.degree,
                    count=exc.count,
                ) from None
            closed = oracles.invariants_hilbert_closedform(problem)
            count += 1
            if brute != closed and witness is None:
                witness = f"m = {m}, l = {l}, q = {q}: {brute} != {closed}"
    clause("invariants-oracle-vs-closed-form", witness is None, count, witness)

    count, witness = 0, None
    for l in request.primes:
        for q in range(1, l):
            report = oracles.chern_scalar_checks(l, q)
            count += 1
            if not report.passed and witness is None:
                witness = f"l = {l}, q = {q}"
    clause("chern-scalar-identities", witness is None, count, witness)

    count, witness = 0, None
    for p, q in _SP_FIELDS:
        for l in request.primes:
            if q % l == 0:
                continue
            params = galois_params(p, q, l)
            for m in range(1, request.max_m + 1):
                report = oracles.verify_restricted_chern(m, params)
                count += 1
                if not report.passed and witness is None:
                    witness = f"m = {m}, q = {q}, l = {l}"
    clause("restricted-chern-class", witness is None, count, witness)

    count, witness = 0, None
    for p, q in _SP_FIELDS:
        for l in request.primes:
            if q % l == 0:
                continue
            params = galois_params(p, q, l)
            for n in range(1, request.sp_max_rank + 1):
                datum = rootdata.lookup("Sp", n)
                problem = oracles.GradedActionProblem(
                    weights=datum.degrees,
                    l=l,
                    q=q,
                    cutoff=request.cutoff,
                    monomial_limit=request.monomial_limit,
                )
                closed = oracles.coinvariants_hilbert_closedform(problem)
                pres = presentations.cobordism_presentation(datum, params)
                series = presentations.poincare_series(pres, request.cutoff, presentations.CHOW)
                count += 1
                if closed != series and witness is None:
                    witness = f"Sp rank {n}, q = {q}, l = {l}: {closed} != {series}"
    clause("sp-pattern-consistency", witness is None, count, witness)

    passed = all(c["passed"] for c in clauses)
    if request.fmt == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "kind": "verification-summary",
            "passed": passed,
            "clauses": clauses,
        }
        return passed, json.dumps(payload, indent=2)
    lines = []
    for c in clauses:
        status = "PASS" if c["passed"] else "FAIL"
        line = f"{c['name']}: {status} ({c['instances']} instances)"
        if c["witness"]:
            line += f" [{c['witness']}]"
        lines.append(line)
    lines.append("all clauses passed" if passed else "SOME CLAUSES FAILED")
    return passed, "\n".join(lines)


def run(request: Request) -> tuple[int, str, str]:
    """Execute a request; returns (exit code, rendered output, diagnostic).

    The rendered output belongs on stdout, the diagnostic on stderr; exactly
    one of the two is nonempty except for a failing verify sweep, whose
    summary is a result even though the exit code is nonzero.
    """
    try:
        if request.subcommand == "params":
            return 0, _run_params(request), ""
        if request.subcommand == "present":
            return 0, _run_present(request), ""
        if request.subcommand == "series":
            return 0, _run_series(request), ""
        if request.subcommand == "compare":
            return 0, _run_compare(request), ""
        if request.subcommand == "verify":
            passed, output = _run_verify(request)
            return (0 if passed else 1), output, ""
        return 1, "", f"usage error: unknown subcommand {request.subcommand!r}"
    except PreconditionError as exc:
        return 2, "", f"hypothesis violated: {exc}"
    except InputError as exc:
        return 1, "", f"input error: {exc}"
    except ResourceLimitError as exc:
        return 1, "", f"resource limit: {exc}"


def main(argv=None) -> int:
    try:
        request = parse_args(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    code, output, diagnostic = run(request)
    if output:
        print(output)
    if diagnostic:
        print(diagnostic, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
