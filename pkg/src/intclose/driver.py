"""End-to-end drivers: the characteristic-0 pipeline and single-prime runs."""

from __future__ import annotations

from dataclasses import dataclass, field

from .closure import (ClosurePresentation, FractionSet, induce_presentation,
                      minimize_denominator, qth_closure)
from .conductor import canonical_conductor
from .domains import GF, QQ, is_prime
from .lifting import (Certificate, LiftState, PrimeRun, compatibility_check,
                      reconcile_and_lift, run_prime, verify_candidate)
from .rings import Polynomial, Ring
from .weights import validate_weight_function


class DriverError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    mode: str = "char0"              # "char0" | "charq"
    primes: tuple | None = None      # explicit schedule; otherwise ascending
    start_prime: int = 5
    max_primes: int = 12             # max usable primes incorporated
    max_iter: int = 64               # closure fixpoint bound
    prime: int | None = None         # charq mode
    fmt: str = "text"
    verbosity: int = 0

    def __post_init__(self):
        if self.mode not in ("char0", "charq"):
            raise DriverError(f"unknown mode {self.mode!r}")
        if self.mode == "charq" and not self.prime:
            raise DriverError("charq mode requires an explicit prime")
        if self.max_primes < 1:
            raise DriverError("max primes must be at least 1")
        if self.primes is not None:
            if len(set(self.primes)) != len(self.primes):
                raise DriverError("prime schedule contains duplicates")
            for q in self.primes:
                if not is_prime(q):
                    raise DriverError(f"{q} in the schedule is not prime")


@dataclass(frozen=True)
class Stage:
    state: LiftState
    certificate: Certificate | None


@dataclass
class Algorithm1Result:
    accepted: bool
    conductor: Polynomial
    presentation: ClosurePresentation | None
    fractions: FractionSet | None
    certificate: Certificate | None
    runs: list = field(default_factory=list)
    stages: list = field(default_factory=list)
    audit: list = field(default_factory=list)

    @property
    def primes_used(self) -> tuple:
        return tuple(r.q for r in self.runs if r.usable)


def _prime_schedule(config: RunConfig):
    if config.primes is not None:
        for q in config.primes:
            yield q
        return
    q = max(2, config.start_prime)
    budget = max(60, 12 * config.max_primes)
    while budget:
        if is_prime(q):
            yield q
            budget -= 1
        q += 1


def _lm_names(polys):
    return "[" + ",".join(_mono_text(p.lm, p.ring) for p in polys) + "]"


def _mono_text(mono, ring):
    parts = []
    for name, e in zip(ring.names, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def validate_problem(ring: Ring, f: Polynomial):
    ok, offending = validate_weight_function(f)
    if not ok:
        bad = ", ".join(_mono_text(m, ring) for m in offending)
        raise DriverError(f"no weight function: maximal-weight monomials {{{bad}}}")


def run_algorithm1(ring: Ring, f: Polynomial, config: RunConfig | None = None) -> Algorithm1Result:
    """Steps of the multi-modular pipeline, stopping at the first certificate."""
    config = config or RunConfig()
    validate_problem(ring, f)
    delta0 = canonical_conductor([f], ring).delta
    result = Algorithm1Result(False, delta0, None, None, None)
    result.audit.append(f"conductor: {delta0}")
    usable: list[PrimeRun] = []
    for q in _prime_schedule(config):
        if len(usable) >= config.max_primes:
            break
        run = run_prime(q, f, delta0, max_iter=config.max_iter)
        if run.usable and usable and not compatibility_check(usable + [run]):
            run = PrimeRun(q, "skipped", reason="incompatible closure signature")
        result.runs.append(run)
        if not run.usable:
            result.audit.append(f"q={q} skipped: {run.reason}")
            continue
        usable.append(run)
        result.audit.append(
            f"q={q} usable delta={run.delta_q} J={run.fractions.count - 1}"
            f" lm_g={_lm_names(run.fractions.numerators)}"
            f" K={len(run.presentation.relations)}"
            f" lm_b={_lm_names(run.presentation.relations) if run.presentation.relations else '[]'}")
        state = reconcile_and_lift(usable, ring)
        cert = verify_candidate(state, f, usable) if state.lifted else None
        result.stages.append(Stage(state, cert))
        if cert is None:
            result.audit.append(
                f"N={state.modulus} primes={','.join(map(str, state.primes))}"
                f" lift=failed ({state.lift_error})")
            continue
        result.audit.append(
            f"N={state.modulus} primes={','.join(map(str, state.primes))} lift=ok"
            f" gb={cert.gb_ok} containment={cert.containment_ok}"
            f" numerators={cert.numerators_ok} accepted={cert.accepted}")
        result.certificate = cert
        if cert.accepted:
            result.accepted = True
            result.fractions = FractionSet(ring.with_domain(QQ), state.numerators,
                                           state.numerators[-1])
            out_q = usable[0].presentation.ring
            result.presentation = ClosurePresentation(
                out_q.with_domain(QQ), state.relations, state.psi,
                state.psi_combo, result.fractions)
            return result
    result.audit.append("prime budget exhausted without an accepted certificate")
    return result


@dataclass
class CharqResult:
    q: int
    conductor: Polynomial
    fractions: FractionSet
    presentation: ClosurePresentation


def run_charq(ring: Ring, f: Polynomial, q: int, max_iter: int = 64) -> CharqResult:
    """Single characteristic-q closure with its induced presentation."""
    if ring.domain != GF(q):
        raise DriverError(f"ring domain must be GF({q})")
    validate_problem(ring, f)
    delta = canonical_conductor([f], ring).delta
    fractions = minimize_denominator(qth_closure(ring, f, delta, q, max_iter=max_iter))
    presentation = induce_presentation(fractions, f)
    return CharqResult(q, delta, fractions, presentation)
