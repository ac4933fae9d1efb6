"""Command-line interface for the monomial ideal toolkit."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Sequence

from monomial_ideal_core.errors import (
    BudgetExceeded,
    InputError,
    NoDecomposition,
    NotEmbedded,
    OracleMismatch,
    PreconditionViolated,
    UnitIdeal,
    VerificationFailed,
    ZeroIdeal,
)
from monomial_ideal_core.groebner import initial_ideal
from monomial_ideal_core.homology import depth_oracle
from monomial_ideal_core.models import LinearForm, MonomialIdeal, MonomialPrime, TermOrder
from monomial_ideal_core.primes import (
    all_decompositions,
    associated_primes,
    associated_primes_bruteforce,
    embedded_decomposition,
    embedded_primes,
    minimal_primes,
    polarize,
    star_neighbor_table,
)
from monomial_ideal_core.serialization import format_ideal_text, ideal_to_json, load_ideal
from monomial_ideal_core.settings import Budgets, Field, load_budgets
from monomial_ideal_core.transforms import (
    TransferCase,
    check_min_prime_transfer,
    ini_binomial,
    ini_transform,
)

from ideal_explorer.checks import CheckSuite
from ideal_explorer.families import GraphKind, build_graph_ideal, formula_depth
from ideal_explorer.sequences import (
    Engine,
    SequencePlan,
    alternative_completions,
    cycle_sequence,
    dump_plan,
    load_plan,
    next_initial_ideal,
    unicyclic_sequence,
    verify_initially_regular,
)

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

INPUT_ERRORS = (
    InputError,
    UnitIdeal,
    ZeroIdeal,
    PreconditionViolated,
    BudgetExceeded,
    NotEmbedded,
)
VERIFICATION_ERRORS = (OracleMismatch, NoDecomposition, VerificationFailed)


class ExitStatus(str, Enum):
    """Command outcome and its process exit code."""
    OK = "ok"
    VERIFICATION_FAILED = "verification_failed"
    INPUT_ERROR = "input_error"

    @property
    def code(self) -> int:
        return {"ok": 0, "verification_failed": 1, "input_error": 2}[self.value]


@dataclass(frozen=True)
class CommandResult:
    """
    What a subcommand produced.

    Attributes:
        status: Outcome, mapped to the exit code
        payload: JSON document printed under --json
        text: Human-readable rendering
    """

    status: ExitStatus
    payload: dict[str, Any] = field(default_factory=dict)
    text: str = ""

    @property
    def exit_code(self) -> int:
        return self.status.code

    def render(self, as_json: bool = False) -> str:
        if as_json:
            return json.dumps(self.payload, sort_keys=True, indent=2)
        return self.text


def _ok(payload: dict[str, Any], text: str) -> CommandResult:
    return CommandResult(ExitStatus.OK, payload, text)


def _prime_names(ideal: MonomialIdeal, primes: Sequence[MonomialPrime]) -> list[list[str]]:
    return [p.names(ideal.ring) for p in primes]


def _prime_lines(ideal: MonomialIdeal, primes: Sequence[MonomialPrime]) -> list[str]:
    return [p.format(ideal.ring) for p in primes]


def cmd_gen(args: argparse.Namespace, budgets: Budgets) -> CommandResult:
    ideal = build_graph_ideal(args.kind, *args.params)
    return _ok(ideal_to_json(ideal), format_ideal_text(ideal).rstrip("\n"))


def cmd_ass(args: argparse.Namespace, budgets: Budgets) -> CommandResult:
    ideal = load_ideal(args.ideal)
    if args.bruteforce:
        found = associated_primes_bruteforce(ideal, budgets)
    else:
        found = associated_primes(ideal)
    minimal = set(minimal_primes(ideal))
    payload: dict[str, Any] = {
        "associated_primes": _prime_names(ideal, found),
        "embedded_primes": _prime_names(ideal, [p for p in found if p not in minimal]),
    }
    lines = [
        p.format(ideal.ring) + ("" if p in minimal else "  embedded") for p in found
    ]
    lines.append(f"{len(found)} associated primes, {len(found) - len(minimal)} embedded")

    if args.compare:
        other = (
            associated_primes(ideal) if args.bruteforce
            else associated_primes_bruteforce(ideal, budgets)
        )
        payload["agrees_with_witness_scan"] = other == found
        if other != found:
            lines.append("witness scan disagrees: " + " ".join(_prime_lines(ideal, other)))
            return CommandResult(ExitStatus.VERIFICATION_FAILED, payload, "\n".join(lines))
        lines.append("witness scan agrees")
    return _ok(payload, "\n".join(lines))


def cmd_min_primes(args: argparse.Namespace, budgets: Budgets) -> CommandResult:
    ideal = load_ideal(args.ideal)
    found = minimal_primes(ideal)
    payload = {"minimal_primes": _prime_names(ideal, found)}
    return _ok(payload, "\n".join(_prime_lines(ideal, found)))


def cmd_star(args: argparse.Namespace, budgets: Budgets) -> CommandResult:
    ideal = load_ideal(args.ideal)
    ring = ideal.ring
    table = star_neighbor_table(ideal)
    payload: dict[str, Any] = {
        "star_neighbors": {
            ring.name(w): sorted((ring.name(z) for z in zs), key=ring.index)
            for w, zs in table.items()
        }
    }
    lines = [
        f"N*({ring.name(w)}) = {{{', '.join(payload['star_neighbors'][ring.name(w)])}}}"
        for w in sorted(table)
    ] or ["no star neighbors"]

    if args.decompose:
        decompositions = []
        for q in embedded_primes(ideal):
            embedded_decomposition(ideal, q)
            options = all_decompositions(ideal, q)
            decompositions.append(
                {"prime": q.names(ring), "decompositions": [d.to_json(ring) for d in options]}
            )
            lines.append(
                f"{q.format(ring)} = " + " = ".join(d.format(ring) for d in options)
            )
        payload["decompositions"] = decompositions
    return _ok(payload, "\n".join(lines))


def cmd_polarize(args: argparse.Namespace, budgets: Budgets) -> CommandResult:
    ideal = load_ideal(args.ideal)
    polarized, pmap = polarize(ideal)
    origin = {
        pmap.target.name(t): [ideal.ring.name(i), copy] for t, (i, copy) in enumerate(pmap.origin)
    }
    payload = {"ideal": ideal_to_json(polarized), "origin": origin}
    return _ok(payload, format_ideal_text(polarized).rstrip("\n"))


def _order_for(ideal: MonomialIdeal, form: LinearForm, order_text: str | None) -> TermOrder:
    ring = ideal.ring
    if order_text:
        return TermOrder.lex(ring, [name.strip() for name in order_text.split(",")])
    return TermOrder.complete(ring, [form.names(ring)])


def _transfer_result(
    ideal: MonomialIdeal, form: LinearForm, case: TransferCase, engine: Engine, budgets: Budgets
) -> CommandResult:
    if len(form) not in (2, 3):
        raise InputError("transfer checks need a binomial or trinomial form")
    report = check_min_prime_transfer(
        ideal, case, *form.support, use_oracle=engine is Engine.BUCHBERGER, budgets=budgets
    )
    payload: dict[str, Any] = {
        "form": form.names(ideal.ring),
        "transfer": {
            "case": case.value,
            "holds": report.holds,
            "checked_primes": report.checked_primes,
            "violations": report.violations,
            "engine": report.engine,
        },
    }
    lines = [f"{case.value} transfer on {report.checked_primes} minimal primes ({report.engine})"]
    lines.extend(report.violations)
    if not report.holds:
        return CommandResult(ExitStatus.VERIFICATION_FAILED, payload, "\n".join(lines))
    lines.append("holds")
    return _ok(payload, "\n".join(lines))


def cmd_ini(args: argparse.Namespace, budgets: Budgets) -> CommandResult:
    ideal = load_ideal(args.ideal)
    ring = ideal.ring
    form = LinearForm.parse(ring, args.form)
    engine = Engine(args.engine)
    if args.transfer:
        return _transfer_result(ideal, form, TransferCase(args.transfer), engine, budgets)
    order = _order_for(ideal, form, args.order)
    payload: dict[str, Any] = {
        "form": form.names(ring),
        "order": order.names(ring),
        "engine": engine.value,
    }

    if engine is Engine.BOTH:
        closed = ini_transform(ideal, form, order)
        oracle = initial_ideal(ideal, form, order, budgets)
        payload["buchberger"] = oracle.format_gens()
        if closed is None:
            payload["closed_form"] = None
            payload["ideal"] = oracle.format_gens()
            text = f"I_1 = {oracle}\nno closed form applies; Buchberger only"
            return _ok(payload, text)
        only_closed = sorted(set(closed.format_gens()) - set(oracle.format_gens()))
        only_oracle = sorted(set(oracle.format_gens()) - set(closed.format_gens()))
        payload.update(
            closed_form=closed.format_gens(),
            equal=closed == oracle,
            only_closed_form=only_closed,
            only_buchberger=only_oracle,
            ideal=oracle.format_gens(),
        )
        if closed != oracle:
            text = (
                f"closed form {closed}\nBuchberger  {oracle}\n"
                f"only in closed form: {' '.join(only_closed) or '-'}\n"
                f"only in Buchberger:  {' '.join(only_oracle) or '-'}"
            )
            return CommandResult(ExitStatus.VERIFICATION_FAILED, payload, text)
        return _ok(payload, f"I_1 = {oracle}\nclosed form and Buchberger agree")

    if args.override and len(form) == 2:
        a, b = order.sort_variables(form.support)
        result = ini_binomial(ideal, a, b, override=True, order=order, budgets=budgets)
        used = "transform"
    else:
        result, used = next_initial_ideal(ideal, form, order, engine, budgets)
    payload["engine"] = used
    payload["ideal"] = result.format_gens()
    return _ok(payload, f"I_1 = {result}\n({used})")


def _plan_result(args: argparse.Namespace, plan: SequencePlan, budgets: Budgets) -> CommandResult:
    if getattr(args, "save", None):
        dump_plan(plan, args.save)
    payload: dict[str, Any] = {"plan": plan.to_json()}
    lines = [plan.format()]
    if args.verify:
        kind_params = (
            ("cycle", args.n) if args.seq_command == "cycle"
            else ("gnm", 3 * args.t + args.residue, 2)
        )
        ideal = build_graph_ideal(*kind_params)
        trace = verify_initially_regular(ideal, plan, Engine(args.engine), budgets)
        payload["verification"] = trace.to_json()
        lines.append(trace.format())
        if not trace.complete:
            return CommandResult(ExitStatus.VERIFICATION_FAILED, payload, "\n".join(lines))
    return _ok(payload, "\n".join(lines))


def cmd_seq(args: argparse.Namespace, budgets: Budgets) -> CommandResult:
    if args.seq_command == "cycle":
        return _plan_result(args, cycle_sequence(args.n), budgets)
    if args.seq_command == "gnm2":
        return _plan_result(args, unicyclic_sequence(args.t, args.residue), budgets)

    ideal = load_ideal(args.ideal)
    plan = load_plan(args.plan, ideal.ring)
    traces = []
    lines = []
    for candidate in alternative_completions(plan, args.completions):
        trace = verify_initially_regular(ideal, candidate, Engine(args.engine), budgets)
        traces.append({"order": candidate.order.names(ideal.ring), **trace.to_json()})
        lines.append("order: " + " > ".join(candidate.order.names(ideal.ring)))
        lines.append(trace.format())
    lengths = {t["verified_length"] for t in traces}
    payload = {"plan": plan.to_json(), "verifications": traces}
    if len(lengths) > 1:
        lines.append(f"verified lengths differ across completions: {sorted(lengths)}")
        return CommandResult(ExitStatus.VERIFICATION_FAILED, payload, "\n".join(lines))
    return _ok(payload, "\n".join(lines))


def cmd_depth(args: argparse.Namespace, budgets: Budgets) -> CommandResult:
    family = args.target in {kind.value for kind in GraphKind}
    if family:
        ideal = build_graph_ideal(args.target, *args.params)
        formula = formula_depth(args.target, *args.params)
    else:
        if args.params:
            raise InputError("size parameters only apply to cycle, path and gnm")
        if args.compare:
            raise InputError("--compare needs a graph family with a closed formula")
        ideal = load_ideal(args.target)
        formula = None

    payload: dict[str, Any] = {}
    lines = []
    if formula is not None:
        payload["formula"] = formula.to_json()
        lines.append(f"depth(R/I) = {formula.value} (formula)")
    if formula is None or args.oracle or args.compare:
        oracle = depth_oracle(ideal, budgets, workers=args.workers)
        payload["oracle"] = oracle.to_json()
        pd, sigma = oracle.witness or (0, ())
        lines.append(
            f"depth(R/I) = {oracle.value} (oracle over {budgets.field.value}, "
            f"pd {pd} at {' '.join(sigma) or '1'})"
        )
        if args.compare and formula is not None:
            payload["agree"] = oracle.value == formula.value
            if oracle.value != formula.value:
                lines.append("formula and oracle disagree")
                return CommandResult(ExitStatus.VERIFICATION_FAILED, payload, "\n".join(lines))
    return _ok(payload, "\n".join(lines))


def cmd_check(args: argparse.Namespace, budgets: Budgets) -> CommandResult:
    suite = CheckSuite(seed=args.seed, timeout=args.timeout, quick=args.quick, budgets=budgets)
    results = suite.run(args.only)
    passed = all(r.passed for r in results)
    payload = {
        "seed": args.seed,
        "quick": args.quick,
        "passed": passed,
        "checks": [r.to_json() for r in results],
    }
    lines = [r.format() for r in results]
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    status = ExitStatus.OK if passed else ExitStatus.VERIFICATION_FAILED
    return CommandResult(status, payload, "\n".join(lines))


HANDLERS: dict[str, Callable[[argparse.Namespace, Budgets], CommandResult]] = {
    "gen": cmd_gen,
    "ass": cmd_ass,
    "min-primes": cmd_min_primes,
    "star": cmd_star,
    "polarize": cmd_polarize,
    "ini": cmd_ini,
    "seq": cmd_seq,
    "depth": cmd_depth,
    "check": cmd_check,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Emit canonical JSON")
    common.add_argument("--config", help="YAML file with oracle budgets")
    common.add_argument("-v", "--verbose", action="store_true", help="Log at DEBUG level")
    common.add_argument(
        "--field",
        choices=[f.value for f in Field],
        help="Coefficient field for the homology oracle (default from budgets: QQ)",
    )

    parser = argparse.ArgumentParser(
        prog="monoideal",
        description="Exact computations with monomial ideals: primes, initial ideals and depth",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser(
        "gen", parents=[common],
        help="Write the edge ideal of a cycle, path or unicyclic graph",
        description="Edge ideal of C_n (cycle N), P_p (path P) or the cycle C_n with "
        "an m-vertex path attached at x2 (gnm N M).",
    )
    gen.add_argument("kind", choices=[k.value for k in GraphKind])
    gen.add_argument("params", type=int, nargs="+")

    ass = sub.add_parser(
        "ass", parents=[common],
        help="Associated primes of R/I",
        description="Associated primes of R/I by polarization: Ass(R/I) is the "
        "depolarized Min of the squarefree polarization. --bruteforce scans colon "
        "ideals (I : c) directly.",
    )
    ass.add_argument("ideal", help="Ideal file, or - for stdin")
    ass.add_argument("--bruteforce", action="store_true", help="Use the witness scan")
    ass.add_argument("--compare", action="store_true", help="Cross-check both algorithms")

    min_primes = sub.add_parser(
        "min-primes", parents=[common],
        help="Minimal primes of R/I",
        description="Minimal primes of R/I: the minimal vertex covers of the generator "
        "supports.",
    )
    min_primes.add_argument("ideal")

    star = sub.add_parser(
        "star", parents=[common],
        help="Star neighbors and embedded-prime decompositions",
        description="Star neighbors N*(w) of every variable. With --decompose, applies the "
        "embedded-prime decomposition via star neighbors: every embedded prime is a "
        "minimal prime plus star-neighbor variables.",
    )
    star.add_argument("ideal")
    star.add_argument("--decompose", action="store_true")

    pol = sub.add_parser(
        "polarize", parents=[common],
        help="Squarefree polarization of I",
        description="Squarefree polarization, replacing each x^a by x_1 ... x_a. "
        "Polarization preserves associated primes up to depolarization.",
    )
    pol.add_argument("ideal")

    ini = sub.add_parser(
        "ini", parents=[common],
        help="Initial ideal ini(I, f) for a linear form f",
        description="Leading-term ideal of (I, f) under a lex order by the initial-ideal "
        "formulas for leaf binomials, leaf-pair binomials and trinomials, or by "
        "Buchberger's algorithm. --transfer checks the minimal-prime transfer for "
        "the chosen case.",
    )
    ini.add_argument("ideal")
    ini.add_argument("-f", "--form", required=True, help="Linear form such as x1+x5+x2")
    ini.add_argument("--order", help="Full lex order, comma separated, highest first")
    ini.add_argument("--engine", choices=[e.value for e in Engine], default="transform")
    ini.add_argument(
        "--override", action="store_true",
        help="Apply the binomial formula outside its contexts, checked by Buchberger",
    )
    ini.add_argument(
        "--transfer",
        choices=[c.value for c in TransferCase],
        help="Check that Min(ini(I, f)) comes from Min(I) as this case predicts",
    )

    seq = sub.add_parser(
        "seq",
        help="Initially regular sequences",
        description="Initially regular sequences: linear forms f_1, ..., f_q regular on "
        "each iterated initial ideal, so depth(R/I) >= q. Includes the length n + 1 "
        "sequence on C_{3n+2} and the lower-bound sequence on G_{3t+2,2}.",
    )
    seq_sub = seq.add_subparsers(dest="seq_command", required=True)
    seq_cycle = seq_sub.add_parser("cycle", parents=[common], help="Sequence on I(C_n)")
    seq_cycle.add_argument("n", type=int)
    seq_gnm = seq_sub.add_parser(
        "gnm2", parents=[common], help="Sequence on I(G_{3t+2,2}), or I(G_{3t,2}) with --residue 0"
    )
    seq_gnm.add_argument("t", type=int)
    seq_gnm.add_argument("--residue", type=int, choices=[0, 2], default=2)
    for p in (seq_cycle, seq_gnm):
        p.add_argument("--verify", action="store_true", help="Verify on the edge ideal")
        p.add_argument("--engine", choices=[e.value for e in Engine], default="transform")
        p.add_argument("--save", help="Write the plan as JSON")
    seq_verify = seq_sub.add_parser("verify", parents=[common], help="Verify a plan file")
    seq_verify.add_argument("ideal")
    seq_verify.add_argument("--plan", required=True, help="Plan JSON file")
    seq_verify.add_argument("--engine", choices=[e.value for e in Engine], default="transform")
    seq_verify.add_argument(
        "--completions", type=int, default=1, help="Rerun under this many lex completions"
    )

    depth = sub.add_parser(
        "depth", parents=[common],
        help="depth(R/I) by closed formula or Hochster's formula",
        description="depth(R/I) by the cycle depth formula ceil((n - 1) / 3), the path "
        "formula ceil(p / 3) and the unicyclic depth formula for G_{n,m}, or for any "
        "ideal as n - pd(R/I) with pd from Hochster's formula.",
    )
    depth.add_argument("target", nargs="?", default="-", help="cycle, path, gnm or an ideal file")
    depth.add_argument("params", type=int, nargs="*")
    depth.add_argument("--oracle", action="store_true", help="Also run the homological oracle")
    depth.add_argument("--compare", action="store_true", help="Fail when formula and oracle differ")
    depth.add_argument("--workers", type=int, help="Processes for the oracle scan")

    check = sub.add_parser(
        "check", parents=[common],
        help="Run the verification suite",
        description="Compares every closed formula and fast algorithm with its oracle.",
    )
    check.add_argument("--only", nargs="+", choices=CheckSuite.NAMES)
    check.add_argument("--seed", type=int, default=0)
    check.add_argument("--timeout", type=float, help="Per-check limit in seconds")
    check.add_argument("--quick", action="store_true", help="Smaller instance counts")
    return parser


def _failure(status: ExitStatus, command: str, error: Exception) -> CommandResult:
    logger.debug("%s failed: %s", command, error)
    payload = {"status": status.value, "error": type(error).__name__, "message": str(error)}
    return CommandResult(status, payload, f"error: {error}")


def execute(args: argparse.Namespace) -> CommandResult:
    """Run a parsed command, mapping library errors to exit statuses."""
    try:
        budgets = load_budgets(args.config)
        if args.field:
            budgets = budgets.updated({"field": args.field})
        return HANDLERS[args.command](args, budgets)
    except INPUT_ERRORS as e:
        return _failure(ExitStatus.INPUT_ERROR, args.command, e)
    except VERIFICATION_ERRORS as e:
        return _failure(ExitStatus.VERIFICATION_FAILED, args.command, e)


def run(argv: Sequence[str] | None = None) -> CommandResult:
    return execute(build_parser().parse_args(argv))


def main(argv: Sequence[str] | None = None) -> int:
    """Command-line entry point for `monoideal`."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format=LOG_FORMAT,
        stream=sys.stderr,
    )
    result = execute(args)
    output = result.render(args.json)
    if result.status is ExitStatus.INPUT_ERROR and not args.json:
        print(output, file=sys.stderr)
    elif output:
        print(output)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
