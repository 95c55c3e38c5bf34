"""Exact integral closures of F[x_n..x_1][y]/(f).

Characteristic q: Frobenius fixpoint iteration on modules of fractions.
Characteristic 0: per-prime closures reconciled by the Chinese remainder
theorem, lifted by extended-Euclidean rational reconstruction, and certified
by a Groebner-basis and ideal-containment check.
"""

from .closure import (ClosurePresentation, ClosureError, FractionSet,
                      FrobeniusTable, canonical_generators, frobenius_nf,
                      induce_presentation, minimize_denominator, module_reduce,
                      qth_closure, qth_power_step, strict_shape_ok,
                      weight_balance_ok)
from .conductor import (ConductorError, ConductorResult, canonical_conductor,
                        exact_divide, extended_jacobian, gcd_in_p,
                        partial_derivative)
from .domains import GF, INT, MODP, QQ, RAT, ZZ, Domain, DomainError, balanced, is_prime
from .driver import (Algorithm1Result, CharqResult, DriverError, RunConfig,
                     run_algorithm1, run_charq)
from .groebner import (GroebnerError, ModuleVector, buchberger, head_reduce,
                       ideal_contains, is_minimal_reduced_gb, minimal_reduced,
                       module_gb, module_normal_form, normal_form, s_poly)
from .lifting import (Certificate, LiftError, LiftState, PrimeRun,
                      compatibility_check, crt, crt_poly, is_prime_usable,
                      lift_poly, mod_n, mu_poly, psi_combination, psi_substitute, rat_recon,
                      reconcile_and_lift, run_prime, verify_candidate)
from .orders import (GREVLEX, GREVLEX_OVER_WEIGHT, POSITION_UP_BLOCK,
                     WEIGHT_OVER_GREVLEX, MonomialOrder, OrderError, dep_block,
                     grevlex, grevlex_over_weight, weight_over_grevlex)
from .problem import ProblemError, ProblemFile, parse_problem
from .rings import ParseError, Polynomial, Ring, RingError, format_poly
from .weights import (WeightError, mono_weight, normalize_weights,
                      validate_weight_function, weight_of)

__version__ = "0.1.0"
