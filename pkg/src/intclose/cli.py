"""Command line front end.

``intclose PROBLEM`` runs the characteristic-0 pipeline (or a single
characteristic-q closure with ``--mode charq``) and prints the resulting
presentation in text or structured (JSON) form.
"""

from __future__ import annotations

import argparse
import json
import sys

from .closure import ClosureError
from .conductor import ConductorError
from .domains import GF, QQ, DomainError
from .driver import (CharqResult, DriverError, RunConfig, run_algorithm1,
                     run_charq)
from .lifting import LiftError
from .problem import ProblemError, parse_problem
from .rings import format_poly


def _psi_factored(presentation) -> str:
    """psi(y) as a combination of the fraction variables, e.g. ybar*(x - 8/7)."""
    ring = presentation.ring
    combo = presentation.inclusion_combo
    parts = []
    nbar = ring.ndep
    for k, c in enumerate(combo):
        if c.is_zero():
            continue
        if k < nbar:
            name = ring.names[k]
            if len(c.terms) == 1 and c.is_monic() and not any(c.lm):
                parts.append(name)
            else:
                parts.append(f"{name}*({format_poly(c)})")
        else:
            parts.append(f"({format_poly(c)})")
    return " + ".join(parts) if parts else "0"


def _weights_line(weights) -> str:
    return ";".join(",".join(str(x) for x in row) for row in weights)


def _emit_common(lines, fractions, presentation):
    lines.append(f"delta: {fractions.denominator}")
    lines.append("numerators:")
    for g in fractions.numerators:
        lines.append(f"  {g}")
    lines.append(f"induced_weights: {_weights_line(presentation.induced_weights)}")
    if presentation.relations:
        for rel in presentation.relations:
            lines.append(f"relation: {rel}")
    else:
        lines.append("relations: (none)")
    lines.append(f"psi(y): {_psi_factored(presentation)}")


def emit_text(result) -> str:
    lines = []
    if isinstance(result, CharqResult):
        lines.append("mode: charq")
        lines.append(f"q: {result.q}")
        lines.append(f"Delta: {result.conductor}")
        _emit_common(lines, result.fractions, result.presentation)
    else:
        lines.append("mode: char0")
        lines.append(f"status: {'accepted' if result.accepted else 'not accepted'}")
        lines.append(f"Delta: {result.conductor}")
        lines.append(f"primes: {','.join(str(q) for q in result.primes_used)}")
        if result.presentation is not None:
            _emit_common(lines, result.fractions, result.presentation)
        cert = result.certificate
        if cert is not None:
            lines.append(f"certificate: gb={str(cert.gb_ok).lower()}"
                         f" containment={str(cert.containment_ok).lower()}"
                         f" numerators={str(cert.numerators_ok).lower()}"
                         f" accepted={str(cert.accepted).lower()}")
        skipped = [r for r in result.runs if not r.usable]
        for r in skipped:
            lines.append(f"skipped: q={r.q} ({r.reason})")
    return "\n".join(lines) + "\n"


def _poly_list(polys) -> list:
    return [format_poly(p) for p in polys]


def emit_structured(result) -> str:
    if isinstance(result, CharqResult):
        doc = {
            "mode": "charq",
            "q": result.q,
            "conductor": format_poly(result.conductor),
            "delta": format_poly(result.fractions.denominator),
            "numerators": _poly_list(result.fractions.numerators),
            "induced_weights": [list(r) for r in result.presentation.induced_weights],
            "relations": _poly_list(result.presentation.relations),
            "psi": format_poly(result.presentation.inclusion_image),
            "psi_factored": _psi_factored(result.presentation),
        }
    else:
        doc = {
            "mode": "char0",
            "accepted": result.accepted,
            "conductor": format_poly(result.conductor),
            "primes": list(result.primes_used),
        }
        if result.presentation is not None:
            doc.update({
                "delta": format_poly(result.fractions.denominator),
                "numerators": _poly_list(result.fractions.numerators),
                "induced_weights": [list(r) for r in result.presentation.induced_weights],
                "relations": _poly_list(result.presentation.relations),
                "psi": format_poly(result.presentation.inclusion_image),
                "psi_factored": _psi_factored(result.presentation),
            })
        cert = result.certificate
        if cert is not None:
            doc["certificate"] = {
                "gb": cert.gb_ok,
                "containment": cert.containment_ok,
                "numerators": cert.numerators_ok,
                "per_prime": [[q, ok] for q, ok in cert.per_prime],
                "accepted": cert.accepted,
            }
        doc["skipped"] = [{"q": r.q, "reason": r.reason}
                          for r in result.runs if not r.usable]
    return json.dumps(doc, indent=2) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="intclose",
        description="Integral closure of F[x...][y]/(f) with exact arithmetic.")
    ap.add_argument("problem", help="problem file (see docs for the format)")
    ap.add_argument("--mode", choices=("char0", "charq"), default=None,
                    help="full rational pipeline or a single finite-field run")
    ap.add_argument("--prime", type=int, default=None,
                    help="the prime for charq mode")
    ap.add_argument("--primes", default=None,
                    help="explicit comma-separated prime schedule for char0 mode")
    ap.add_argument("--start-prime", type=int, default=5,
                    help="first candidate prime for the default schedule")
    ap.add_argument("--max-primes", type=int, default=12,
                    help="maximum number of usable primes to incorporate")
    ap.add_argument("--max-iter", type=int, default=64,
                    help="fixpoint iteration bound for the closure")
    ap.add_argument("--format", choices=("text", "structured"), default="text")
    ap.add_argument("--log", default=None, help="write the audit log to this file")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with open(args.problem, encoding="utf-8") as fh:
            problem = parse_problem(fh.read())
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ProblemError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    mode = args.mode
    if mode is None:
        mode = "charq" if problem.characteristic else "char0"
    prime = args.prime or problem.characteristic

    try:
        if mode == "charq":
            if not prime:
                print("error: charq mode requires --prime or a characteristic field",
                      file=sys.stderr)
                return 2
            ring = problem.ring(GF(prime))
            f = problem.relation(ring)
            config = RunConfig(mode="charq", prime=prime,
                               max_iter=args.max_iter, fmt=args.format)
            result = run_charq(ring, f, prime, max_iter=args.max_iter)
            audit = [f"q={prime} delta={result.conductor}"]
        else:
            ring = problem.ring(QQ)
            f = problem.relation(ring)
            primes = None
            if args.primes:
                primes = tuple(int(p) for p in args.primes.split(","))
            config = RunConfig(mode="char0", primes=primes,
                               start_prime=args.start_prime,
                               max_primes=args.max_primes,
                               max_iter=args.max_iter, fmt=args.format)
            result = run_algorithm1(ring, f, config)
            audit = result.audit
    except (DriverError, ProblemError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ClosureError, ConductorError, LiftError, DomainError) as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return 1

    out = emit_text(result) if args.format == "text" else emit_structured(result)
    sys.stdout.write(out)
    if args.log:
        with open(args.log, "w", encoding="utf-8") as fh:
            fh.write("\n".join(audit) + "\n")
    if mode == "char0" and not result.accepted:
        print("not accepted: prime budget exhausted before certification",
              file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
