"""Integral closure in characteristic q by Frobenius fixpoint iteration.

The module of fractions between S = P[y]/(f) and (1/D)S (D a conductor
element) is represented by its canonical ordered set of monic numerators.
One iteration keeps the sub-module whose members g satisfy
NF(g^q, f) in D^(q-1) * (current module); the chain stabilizes on the
integral closure.  The fixpoint is turned into a quadratic presentation over
new variables, one per non-trivial fraction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .domains import MODP
from .groebner import buchberger, minimal_reduced, normal_form
from .linalg import nullspace_mod
from .orders import grevlex_over_weight, mono_div, mono_mul
from .rings import Polynomial, Ring
from .weights import mono_weight, weight_of


class ClosureError(ValueError):
    pass


def _dep_part(mono, ndep):
    return mono[:ndep]

def _indep_divides(a, b, ndep):
    return all(x <= y for x, y in zip(a[ndep:], b[ndep:]))


def module_reduce(h: Polynomial, gens, scale: Polynomial | None = None,
                  want_combination: bool = False):
    """P-module division of h by {scale * g : g in gens}.

    Reduction only cancels leading monomials through independent-variable
    multiples, i.e. a term reduces against scale*g when the dependent parts
    agree and the independent part of LM(scale*g) divides it.  Returns
    ``(remainder, coefficients)``; coefficients (in P) satisfy
    h = sum(c_j * scale * g_j) + remainder when requested, else None.
    """
    ring = h.ring
    dom = ring.domain
    ndep = ring.ndep
    key = ring.order.key
    targets = []
    for g in gens:
        t = g if scale is None else scale * g
        if t.is_zero():
            raise ClosureError("zero generator in module reduction")
        targets.append((t.lm, t.lc, t.terms))
    combo: list[dict] | None = [dict() for _ in gens] if want_combination else None
    work = dict(h.terms)
    rem: dict = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for j, (lm, lc, terms) in enumerate(targets):
            if _dep_part(lm, ndep) == _dep_part(m, ndep) and _indep_divides(lm, m, ndep):
                quot = mono_div(m, lm)
                factor = dom.div(c, lc)
                for m2, c2 in terms:
                    if m2 == lm:
                        continue
                    mm = mono_mul(quot, m2)
                    s = dom.sub(work.get(mm, 0), dom.mul(factor, c2))
                    if dom.is_zero(s):
                        work.pop(mm, None)
                    else:
                        work[mm] = s
                if combo is not None:
                    cj = combo[j]
                    s = dom.add(cj.get(quot, 0), factor)
                    if dom.is_zero(s):
                        cj.pop(quot, None)
                    else:
                        cj[quot] = s
                break
        else:
            rem[m] = c
    coeffs = None
    if combo is not None:
        coeffs = [ring.poly(c) for c in combo]
    return ring.poly(rem), coeffs


def canonical_generators(gens, ring: Ring) -> tuple:
    """Monic, fully interreduced, order-descending generating set (P-module)."""
    work = [g.monic() for g in gens if not g.is_zero()]
    key = ring.order.key
    changed = True
    while changed:
        changed = False
        work.sort(key=lambda g: key(g.lm), reverse=True)
        for i in range(len(work)):
            others = work[:i] + work[i + 1:]
            if not others:
                continue
            r, _ = module_reduce(work[i], others)
            if r != work[i]:
                changed = True
                if r.is_zero():
                    del work[i]
                else:
                    work[i] = r.monic()
                break
    return tuple(work)


@dataclass(frozen=True)
class FractionSet:
    """Canonical numerators (g_J, ..., g_1, g_0) over a common denominator.

    The represented P-module is spanned by the fractions g_j / denominator;
    g_0 is the unique pure-P generator (equal to the denominator exactly when
    the set presents a ring, e.g. any fixpoint of the iteration).
    """

    ring: Ring
    numerators: tuple
    denominator: Polynomial

    def __post_init__(self):
        if not self.numerators:
            raise ClosureError("empty fraction set")
        ndep = self.ring.ndep
        for g in self.numerators:
            if g.is_zero() or not g.is_monic():
                raise ClosureError("numerators must be monic and nonzero")
        if not self.g0.in_subring(ndep):
            raise ClosureError("g_0 must lie in the independent subring")
        key = self.ring.order.key
        keys = [key(g.lm) for g in self.numerators]
        if keys != sorted(keys, reverse=True):
            raise ClosureError("numerators must descend under the ring order")
        for i, g in enumerate(self.numerators):
            for j, h in enumerate(self.numerators):
                if i == j:
                    continue
                for m, _ in g.terms:
                    if (_dep_part(h.lm, ndep) == _dep_part(m, ndep)
                            and _indep_divides(h.lm, m, ndep)):
                        raise ClosureError("numerators are not interreduced")

    @property
    def g0(self) -> Polynomial:
        return self.numerators[-1]

    @property
    def count(self) -> int:
        """J + 1: number of module generators including the trivial one."""
        return len(self.numerators)

    def fraction_weights(self) -> list[tuple]:
        wd = weight_of(self.denominator)
        out = []
        for g in self.numerators:
            wg = weight_of(g)
            out.append(tuple(a - b for a, b in zip(wg, wd)))
        return out


class FrobeniusTable:
    """Normal forms of powers of the dependent variable modulo f."""

    def __init__(self, f: Polynomial):
        ring = f.ring
        if ring.ndep != 1:
            raise ClosureError("one dependent variable expected")
        self.ring = ring
        self.d = f.degree_in(0)
        lead = tuple(self.d if i == 0 else 0 for i in range(ring.nvars))
        if f.coeff_of(lead) != ring.domain.one:
            raise ClosureError("relation must be monic in the dependent variable")
        # y^d = -(f - y^d)
        self.tail = -(f - ring.monomial(lead))
        if self.tail.degree_in(0) >= self.d:
            raise ClosureError("relation has extra terms of top dependent degree")
        self._table = [ring.monomial(tuple(k if i == 0 else 0 for i in range(ring.nvars)))
                       for k in range(self.d)]

    def power(self, k: int) -> Polynomial:
        ring = self.ring
        dom = ring.domain
        while len(self._table) <= k:
            prev = self._table[-1]
            acc: dict = {}
            for m, c in prev.terms:
                if m[0] + 1 < self.d:
                    mono = (m[0] + 1,) + m[1:]
                    acc[mono] = dom.add(acc.get(mono, 0), c)
                else:
                    shift = (0,) + m[1:]
                    for m2, c2 in self.tail.terms:
                        mono = mono_mul(shift, m2)
                        s = dom.add(acc.get(mono, 0), dom.mul(c, c2))
                        if dom.is_zero(s):
                            acc.pop(mono, None)
                        else:
                            acc[mono] = s
                    continue
            self._table.append(ring.poly(acc))
        return self._table[k]


def frobenius_nf(g: Polynomial, q: int, table: FrobeniusTable) -> Polynomial:
    """NF(g^q, f) using termwise Frobenius: (sum t_i)^q = sum t_i^q."""
    ring = g.ring
    if ring.domain.kind != MODP or ring.domain.char != q:
        raise ClosureError(f"ring characteristic is not {q}")
    dom = ring.domain
    acc: dict = {}
    for m, c in g.terms:
        base = table.power(q * m[0])
        shift = (0,) + tuple(q * e for e in m[1:])
        for m2, c2 in base.terms:
            mono = mono_mul(shift, m2)
            s = dom.add(acc.get(mono, 0), dom.mul(c, c2))
            if dom.is_zero(s):
                acc.pop(mono, None)
            else:
                acc[mono] = s
    return ring.poly(acc)


def qth_power_step(numerators: tuple, q: int, table: FrobeniusTable,
                   conductor: Polynomial) -> tuple:
    """One contraction: members whose Frobenius image stays in D^(q-1)*module.

    Works on the finite quotient module/(D*module); D*module always survives
    the step, so the kernel there plus D*module generates the next module.
    """
    ring = table.ring
    if ring.nindep != 1:
        raise ClosureError("closure iteration supports one independent variable")
    xdeg = conductor.degree_in(1)
    if xdeg == 0:
        return numerators
    scale = conductor ** (q - 1)
    targets = [scale * g for g in numerators]
    phis = [frobenius_nf(g, q, table) for g in numerators]
    cols = []
    col_ids = []
    support: dict = {}
    for j, g in enumerate(numerators):
        for alpha in range(xdeg):
            shifted = phis[j].mul_term((0, q * alpha))
            rem, _ = module_reduce(shifted, targets)
            cols.append(rem)
            col_ids.append((j, alpha))
            for m, _ in rem.terms:
                support.setdefault(m, len(support))
    if all(r.is_zero() for r in cols):
        return numerators
    rows = [[0] * len(cols) for _ in range(len(support))]
    for cidx, rem in enumerate(cols):
        for m, c in rem.terms:
            rows[support[m]][cidx] = int(c)
    kernel = nullspace_mod(rows, len(cols), q)
    new_gens = [conductor * g for g in numerators]
    for vec in kernel:
        acc = ring.zero()
        for cidx, coeff in enumerate(vec):
            if coeff:
                j, alpha = col_ids[cidx]
                acc = acc + numerators[j].mul_term((0, alpha), coeff)
        if not acc.is_zero():
            new_gens.append(acc)
    return canonical_generators(new_gens, ring)


def qth_closure(ring: Ring, f: Polynomial, conductor: Polynomial, q: int,
                max_iter: int = 64) -> FractionSet:
    """Fixpoint of the contraction, started from all of (1/D)S."""
    if ring.domain.kind != MODP or ring.domain.char != q:
        raise ClosureError(f"expected a ring of characteristic {q}")
    if ring.ndep != 1 or ring.nindep != 1:
        raise ClosureError("closure iteration supports rings F_q[y; x] only")
    table = FrobeniusTable(f)
    d = table.d
    nums = tuple(ring.monomial(tuple(k if i == 0 else 0 for i in range(ring.nvars)))
                 for k in range(d - 1, -1, -1))
    nums = canonical_generators(nums, ring)
    for _ in range(max_iter):
        nxt = qth_power_step(nums, q, table, conductor)
        if list(nxt) == list(nums):
            if nums[-1] != conductor.monic():
                raise ClosureError("fixpoint does not contain the conductor fraction")
            return FractionSet(ring, nums, conductor.monic())
        nums = nxt
    raise ClosureError(f"no fixpoint within {max_iter} iterations")


def _y_contents(g: Polynomial) -> list[Polynomial]:
    """Coefficient polynomials of g grouped by dependent part (all lie in P)."""
    ring = g.ring
    ndep = ring.ndep
    groups: dict = {}
    for m, c in g.terms:
        dep = _dep_part(m, ndep)
        groups.setdefault(dep, {})[(0,) * ndep + m[ndep:]] = c
    return [ring.poly(d) for d in groups.values()]


def minimize_denominator(fs: FractionSet) -> FractionSet:
    """Divide out the common P-content of the denominator and all numerators."""
    from .conductor import exact_divide, gcd_in_p
    ring = fs.ring
    c = fs.denominator.monic()
    for g in fs.numerators[:-1]:
        for coeff in _y_contents(g):
            c = gcd_in_p(c, coeff)
    c = gcd_in_p(c, fs.g0)
    if c == ring.one():
        return fs
    nums = tuple(exact_divide(g, c).monic() for g in fs.numerators)
    return FractionSet(ring, nums, exact_divide(fs.denominator, c).monic())


@dataclass(frozen=True)
class ClosurePresentation:
    """Quadratic presentation of the closure over new fraction variables."""

    ring: Ring                       # output ring: ybar block then x block
    relations: tuple                 # minimal reduced basis of induced relations
    inclusion_image: Polynomial      # psi(y) inside the output ring
    inclusion_combo: tuple           # coefficients c_k in P with psi(y) = sum c_k ybar_k
    fractions: FractionSet

    @property
    def induced_weights(self) -> tuple:
        return self.ring.weights


def _transport_p(poly: Polynomial, out_ring: Ring, pad: int) -> Polynomial:
    """Move a P-polynomial into the output ring (pad dependent exponents)."""
    src_ndep = poly.ring.ndep
    acc = {}
    for m, c in poly.terms:
        acc[(0,) * pad + m[src_ndep:]] = c
    return out_ring.poly(acc)


def induce_presentation(fs: FractionSet, f: Polynomial,
                        var_stem: str = "ybar") -> ClosurePresentation:
    """Presentation of the fixpoint module as a quadratic P-algebra.

    Every product of fraction generators reduces to a P-linear combination of
    them; those reduction rules, interreduced, are the relation basis.  The
    inclusion image of y is its own expression over the fractions.
    """
    ring = fs.ring
    if fs.g0 != fs.denominator:
        raise ClosureError("presentation requires a fixpoint fraction set (g_0 = denominator)")
    nums = fs.numerators
    J = len(nums) - 1
    indep_names = ring.names[ring.ndep:]
    if J == 1:
        ybar_names = (var_stem,)
    else:
        ybar_names = tuple(f"{var_stem}{j}" for j in range(J, 0, -1))
    if set(ybar_names) & set(indep_names):
        raise ClosureError("fraction variable names collide with ring variables")
    out_names = ybar_names + tuple(indep_names)
    wd = weight_of(fs.denominator)
    wrows = len(wd)
    wbar = []
    for r in range(wrows):
        row = [weight_of(g)[r] - wd[r] for g in nums[:-1]]
        row += [ring.weights[r][ring.ndep + i] for i in range(ring.nindep)]
        wbar.append(tuple(row))
    wbar = tuple(wbar)
    if any(x < 0 for row in wbar for x in row):
        raise ClosureError("negative induced weight: not an integral fraction set")
    out_ring = Ring(out_names, J, ring.domain,
                    grevlex_over_weight(wbar, J, J + ring.nindep), wbar)

    def ybar_mono(*positions):
        e = [0] * out_ring.nvars
        for p in positions:
            e[p] += 1
        return tuple(e)

    relations = []
    for a in range(J):          # position a <-> numerator nums[a]
        for b in range(a, J):
            prod = normal_form(nums[a] * nums[b], [f])
            rem, coeffs = module_reduce(prod, list(nums), scale=fs.denominator,
                                        want_combination=True)
            if not rem.is_zero():
                raise ClosureError(
                    f"fraction product {a},{b} leaves the module: not a fixpoint")
            rel = out_ring.monomial(ybar_mono(a, b))
            for k, ck in enumerate(coeffs):
                if ck.is_zero():
                    continue
                moved = _transport_p(ck, out_ring, J)
                if k < J:
                    moved = moved * out_ring.monomial(ybar_mono(k))
                rel = rel - moved
            relations.append(rel)
    basis = tuple(minimal_reduced(buchberger(relations))) if relations else ()

    y_delta = ring.var(ring.names[0]) * fs.denominator
    rem, coeffs = module_reduce(normal_form(y_delta, [f]), list(nums),
                                want_combination=True)
    if not rem.is_zero():
        raise ClosureError("inclusion image of y is not in the module")
    psi = out_ring.zero()
    for k, ck in enumerate(coeffs):
        if ck.is_zero():
            continue
        moved = _transport_p(ck, out_ring, J)
        if k < J:
            moved = moved * out_ring.monomial(ybar_mono(k))
        psi = psi + moved
    return ClosurePresentation(out_ring, basis, psi, tuple(coeffs), fs)


def strict_shape_ok(presentation: ClosurePresentation) -> bool:
    """Dependent degree <= 2 everywhere; quadratic leads have linear tails."""
    nd = presentation.ring.ndep
    for rel in presentation.relations:
        lead_deg = sum(rel.lm[:nd])
        tail_degs = [sum(m[:nd]) for m, _ in rel.terms[1:]]
        if lead_deg == 2:
            if any(dg > 1 for dg in tail_degs):
                return False
        elif lead_deg != 1:
            return False
    return True


def weight_balance_ok(presentation: ClosurePresentation) -> bool:
    """Leading-term weight equals the maximal trailing-term weight, per relation."""
    w = presentation.ring.weights
    for rel in presentation.relations:
        if len(rel.terms) < 2:
            continue
        lead = mono_weight(rel.lm, w)
        tail = max(mono_weight(m, w) for m, _ in rel.terms[1:])
        if lead != tail:
            return False
    return True
