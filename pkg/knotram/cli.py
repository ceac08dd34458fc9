"""Command line interface. Data goes to stdout, logs go to stderr.

Exit codes: 0 on success, 1 on a usage or configuration error, 2 when a
hypothesis is violated (even ``t`` or ``d``, invalid ``(t, p, q)``, a failed
self-test) and 3 when a budget ran out; partial output is still printed in
that last case.
"""

import argparse
import sys

from knotram.config import OUTPUT_FORMATS, RunConfig
from knotram.engine.cyclonorm import (
    norm_real,
    norm_square_check,
    omega_record,
    s_seq,
)
from knotram.engine.knotpoly import (
    alexander,
    f_poly,
    g_poly,
    newton_cert,
    validate_structure,
)
from knotram.executors.flipsearch import search, validate_hypotheses
from knotram.executors.ramify import (
    certificates_to_csv,
    certificates_to_text,
    certify,
    recurrence_audit,
    table,
)
from knotram.logger import DEBUG, DISABLE_DEBUG, QUIET, logger
from knotram.utils.utils import canonical_json


EXIT_OK = 0
EXIT_USAGE = 1
EXIT_HYPOTHESIS = 2
EXIT_BUDGET = 3

# Certified primes for t = 29, used by the self-test
REFERENCE_ROWS_T29 = {
    5: [],
    7: [13],
    9: [431],
    11: [43, 131, 1033],
    13: [1117, 1481],
    15: [149, 179],
    17: [67, 101, 509, 4657],
    19: [37],
    21: [],
}


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _command(sub, name, help):
    # no prefix matching, so "--d" never resolves to "--digit-cap"
    return sub.add_parser(name, help=help, allow_abbrev=False)


def _build_parser():
    parser = _ArgumentParser(
        prog="knotram",
        allow_abbrev=False,
        description=(
            "Ramified residue characteristics of the canonical quaternion "
            "algebras of (d, 0) surgeries on twist knots."
        ),
    )
    parser.add_argument(
        "--format", dest="output", choices=OUTPUT_FORMATS, default="json"
    )
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--trial-bound", type=int, default=10**6)
    parser.add_argument("--rho-iter-cap", type=int, default=2**26)
    parser.add_argument("--wall-ms", type=int, default=60000)
    parser.add_argument("--digit-cap", type=int, default=40000)
    parser.add_argument("--certify-digits", type=int, default=30)
    parser.add_argument("--debug", action="store_true")

    sub = parser.add_subparsers(dest="command", required=True)

    p = _command(sub, "charvar", "f_t, g_t, Alexander polynomial")
    p.add_argument("--t", type=int, required=True)

    p = _command(sub, "norm", "signed norm N_d")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument(
        "--method", choices=["resultant", "square"], default="resultant"
    )

    p = _command(sub, "certify", "ramification certificate for one d")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    p = _command(sub, "table", "certificates for a range of d")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--d-min", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--root", default=None, help="checkpoint directory")
    p.add_argument("--pbar", action="store_true")

    p = _command(sub, "search", "sign-flip search and localization")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--flips", type=int, default=2)
    p.add_argument("--exponent-cap", type=int, default=8)

    p = _command(sub, "omega", "omega(n) against s_n")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    _command(sub, "selftest", "runs the invariant battery")
    return parser


def _emit(payload, output, csv_render=None, text_render=None):
    """Prints ``payload``; formats without a dedicated rendering fall back
    to JSON."""

    if output == "csv" and csv_render is not None:
        print(csv_render())
    elif output == "text" and text_render is not None:
        print(text_render())
    else:
        print(canonical_json(payload))


def _cmd_charvar(args, config):
    report = validate_structure(args.t)
    payload = {
        "t": args.t,
        "f": str(f_poly(args.t)),
        "g": str(g_poly(args.t)),
        "alexander": str(alexander(args.t)),
        "newton_certified": newton_cert(args.t, 1),
        "validation": report.to_record(),
    }
    _emit(payload, config.output)
    return EXIT_OK if report.passed else EXIT_HYPOTHESIS


def _cmd_norm(args, config):
    record = norm_real(args.t, args.d, method=args.method)
    payload = {
        "norm": record.to_record(),
        "square_check": norm_square_check(args.t, args.d)
        if args.d >= 3
        else True,
    }
    _emit(
        payload,
        config.output,
        text_render=lambda: f"N_{args.d}(t={args.t}) = {record.value}",
    )
    return EXIT_OK


def _cmd_certify(args, config):
    cert = certify(args.t, args.d, config.budget)
    _emit(
        cert.to_record(),
        config.output,
        csv_render=lambda: certificates_to_csv([cert]),
        text_render=lambda: certificates_to_text([cert]),
    )
    return EXIT_OK if cert.status == "complete" else EXIT_BUDGET


def _cmd_table(args, config):
    rows = table(
        args.t,
        args.d_min,
        args.d_max,
        budget=config.budget,
        root=args.root,
        pbar=args.pbar,
    )
    payload = {
        "t": args.t,
        "rows": [row.to_record() for row in rows],
        "recurrences": [
            {"l": str(x["l"]), "d": x["d"]} for x in recurrence_audit(rows)
        ],
    }
    _emit(
        payload,
        config.output,
        csv_render=lambda: certificates_to_csv(rows),
        text_render=lambda: certificates_to_text(rows),
    )
    if any(row.status != "complete" for row in rows):
        return EXIT_BUDGET
    return EXIT_OK


def _cmd_search(args, config):
    violations = validate_hypotheses(args.t, args.p, args.q)
    if violations:
        for violation in violations:
            logger.error(violation)
        return EXIT_HYPOTHESIS
    result = search(
        args.t,
        args.p,
        args.q,
        max_flips=args.flips,
        exponent_cap=args.exponent_cap,
        digit_cap=config.digit_cap,
        certify_digits=config.certify_digits,
        budget=config.budget,
    )
    _emit(result.to_record(), config.output)
    return EXIT_BUDGET if result.budget_exhausted else EXIT_OK


def _cmd_omega(args, config):
    record = omega_record(args.t, args.n)
    _emit(record, config.output)
    return EXIT_OK


def selftest(budget=None):
    """Runs a fast battery of exact identities and reference rows.

    Returns
    -------
    list of dict
        One entry per check, with keys ``name`` and ``passed``.
    """

    checks = []

    def _add(name, ok):
        if not ok:
            logger.error(f"Self-test check '{name}' failed")
        checks.append({"name": name, "passed": bool(ok)})

    for t in range(3, 30, 2):
        _add(f"structure t={t}", validate_structure(t).passed)
    for t in (3, 5, 29):
        for d in range(3, 26, 2):
            _add(f"square t={t} d={d}", norm_square_check(t, d))
    for n in range(1, 52, 2):
        sign = -1 if (n - 1) // 2 % 2 else 1
        w = omega_record(29, n)
        _add(f"omega n={n}", w["signed_identity"])
        _add(
            f"residue n={n}",
            s_seq(29, n).s % 15 == (1 if sign > 0 else 14),
        )
    for d, primes in REFERENCE_ROWS_T29.items():
        _add(
            f"certify t=29 d={d}",
            sorted(certify(29, d, budget).primes) == primes,
        )
    return checks


def _cmd_selftest(args, config):
    checks = selftest(config.budget)
    passed = all(check["passed"] for check in checks)
    _emit({"passed": passed, "checks": checks}, config.output)
    return EXIT_OK if passed else EXIT_HYPOTHESIS


COMMANDS = {
    "charvar": _cmd_charvar,
    "norm": _cmd_norm,
    "certify": _cmd_certify,
    "table": _cmd_table,
    "search": _cmd_search,
    "omega": _cmd_omega,
    "selftest": _cmd_selftest,
}


def main(argv=None):
    """Entry point of the ``knotram`` console script.

    Parameters
    ----------
    argv : list of str, optional
        Defaults to ``sys.argv[1:]``.

    Returns
    -------
    int
        The exit code.
    """

    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    if args.debug:
        DEBUG()
    else:
        QUIET()

    try:
        config = RunConfig.from_parameters(
            seed=args.seed,
            trial_bound=args.trial_bound,
            rho_iter_cap=args.rho_iter_cap,
            wall_ms=args.wall_ms,
            digit_cap=args.digit_cap,
            certify_digits=args.certify_digits,
            output=args.output,
        )
        return COMMANDS[args.command](args, config)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except ValueError as err:
        logger.error(str(err))
        return EXIT_HYPOTHESIS
    finally:
        DISABLE_DEBUG()


if __name__ == "__main__":
    raise SystemExit(main())
