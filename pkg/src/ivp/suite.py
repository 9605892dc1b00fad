"""Machine checks for the structural claims behind the non-flatness result.

Every check returns a CheckReport with a stable identifier, a pass/fail
status, the budget it ran under, and on failure a witness expression that
the CLI can re-examine.  The catalog:

    lemma1-ideal-intersection   M^k membership = joint N0^k and N1^k membership
    lemma2-locality             every element of D outside M is a unit of D
    lemma3-integral-generator   m | g-1 for g in S; t^2+t = m; t = (mt)/m in Frac(D)
    lemma4-conductor            M conducts T into D, units of T do not; M^-1 = T
    lemma5-contraction          N0 and N1 both contract to M inside D
    ideal-generators            M = m*D + mt*D by explicit decomposition
    probe-family                u = t(t+1)^(n+1) has v0 = 1, v1 = n+1, u in M \\ M^2
    obstruction                 (X^2+X)/m maps D to T, fails Int(D), and every
                                bundled representation candidate is refuted
    flatness-conclusion         the decided facts assemble into the failure of
                                flatness, with the localization criterion taken
                                as an input assumption

Exhaustive loops run over polynomials of degree <= degree_bound; sampled
loops draw `samples` elements from seeded generators, so a report is a
pure function of its budget.
"""

import random
from dataclasses import dataclass

from . import localfield
from . import intdecider
from .gf2poly import BinaryPoly, divrem
from .localfield import RatFunc, valuation, residue, minv_witness
from .ivpoly import XPoly, x_squared_plus_x, obstruction_poly, substitute_affine
from .refuter import (SumMismatch, InvalidCandidate, ValuationContradiction,
                      probe_point, refute_candidate)
from .corpus import builtin_candidates
from . import sampling

_M_ELT = RatFunc('t^2+t')
_T_ELT = RatFunc('t')


@dataclass(frozen=True)
class Budget:
    """Work bound for one suite run: exhaustive degree, sample count, seed."""

    degree_bound: int = 8
    samples: int = 10_000
    seed: int = 42


@dataclass(frozen=True)
class CheckReport:
    check_id: str
    status: str
    budget: Budget
    witness: str | None
    details: str

    @property
    def passed(self):
        return self.status == 'pass'


def _rng(budget, tag):
    # independent deterministic stream per check
    return random.Random(f'{budget.seed}:{tag}')


def _report(check_id, budget, failures, details):
    if failures:
        details = details + f' | first failure: {failures[0]}'
        return CheckReport(check_id, 'fail', budget, failures[0], details)
    return CheckReport(check_id, 'pass', budget, None, details)


def _poly_masks(degree_bound):
    return range(1 << (degree_bound + 1))


def _check_part1(budget):
    failures = []
    lf = localfield
    for mask in _poly_masks(budget.degree_bound):
        x = RatFunc(mask)
        joint = lf.is_member(x, lf.N0()) and lf.is_member(x, lf.N1())
        if lf.is_member(x, lf.M()) != joint:
            failures.append(str(x))
    rng = _rng(budget, 'part1')
    for k in range(budget.samples):
        if k & 1:
            x = sampling.random_t_element(rng)
        else:
            num = sampling.random_polynomial(rng, 8)
            den = BinaryPoly(rng.randrange(1, 1 << 6))
            x = RatFunc(num, den)
        joint = lf.is_member(x, lf.N0()) and lf.is_member(x, lf.N1())
        if lf.is_member(x, lf.M()) != joint:
            failures.append(str(x))
    details = (f'M = N0 * N1 as membership: exhaustive over polynomials of degree '
               f'<= {budget.degree_bound} plus {budget.samples} random fractions')
    return _report('lemma1-ideal-intersection', budget, failures, details)


def _check_part2(budget):
    failures = []
    lf = localfield
    checked = 0
    for mask in _poly_masks(budget.degree_bound):
        x = RatFunc(mask)
        if lf.is_member(x, lf.D) and not lf.is_member(x, lf.M()):
            checked += 1
            if not lf.is_member(x.inv(), lf.D):
                failures.append(str(x))
    rng = _rng(budget, 'part2')
    for _ in range(budget.samples):
        x = RatFunc(1) + _M_ELT * sampling.random_t_element(rng)
        if not lf.is_member(x.inv(), lf.D):
            failures.append(str(x))
    details = (f'every element of D outside M is invertible in D: {checked} '
               f'exhaustive polynomial cases, {budget.samples} sampled units; '
               'the Noetherian and dimension-one side facts are accepted from '
               'the underlying development, not machine checked')
    return _report('lemma2-locality', budget, failures, details)


def _check_part3(budget):
    failures = []
    lf = localfield
    bound = max(budget.degree_bound, 10)
    m_poly = BinaryPoly('t^2+t')
    count = 0
    for mask in _poly_masks(bound):
        g = RatFunc(mask)
        if mask and lf.is_member(g, lf.S):
            count += 1
            if divrem(BinaryPoly(mask) + 1, m_poly)[1]:
                failures.append(str(g))
    if BinaryPoly('t') ** 2 + BinaryPoly('t') != m_poly:
        failures.append('t^2+t')
    mt = _M_ELT * _T_ELT
    if not lf.is_member(mt, lf.M()):
        failures.append(str(mt))
    if mt / _M_ELT != _T_ELT:
        failures.append(str(mt))
    details = (f'm divides g-1 for every g in S of degree <= {bound} '
               f'({count} of them); t^2+t = m exactly, so t is integral over D; '
               'mt lies in M, exhibiting t = (mt)/m inside Frac(D)')
    return _report('lemma3-integral-generator', budget, failures, details)


def _check_part4(budget):
    failures = []
    lf = localfield
    rng = _rng(budget, 'part4')
    for _ in range(budget.samples):
        u = sampling.random_m_element(rng)
        if lf.is_member((RatFunc(1) + u) * _T_ELT, lf.D):
            failures.append(str(u))
    for _ in range(budget.samples):
        x = sampling.random_t_element(rng)
        w = sampling.random_m_element(rng)
        product = x * w
        if not (lf.is_member(product, lf.M()) and lf.is_member(product, lf.D)):
            failures.append(f'{x} times {w}')
    for _ in range(budget.samples):
        x = sampling.random_nonintegral_element(rng, max_pole=3)
        try:
            w = minv_witness(x)
        except (AssertionError, ValueError):
            failures.append(str(x))
            continue
        if not lf.is_member(w, lf.M()) or lf.is_member(x * w, lf.D):
            failures.append(str(x))
    details = (f'{budget.samples} samples each way: units 1+u of T never conduct '
               't into D; T*M lands in M and hence in D; every sampled element '
               'outside T fails to multiply M into D, so M^-1 = T and (D : T) = M')
    return _report('lemma4-conductor', budget, failures, details)


def _check_part5(budget):
    failures = []
    lf = localfield
    checked = 0
    for mask in _poly_masks(budget.degree_bound):
        x = RatFunc(mask)
        if not lf.is_member(x, lf.D):
            continue
        checked += 1
        in_m = lf.is_member(x, lf.M())
        if lf.is_member(x, lf.N0()) != in_m or lf.is_member(x, lf.N1()) != in_m:
            failures.append(str(x))
    rng = _rng(budget, 'part5')
    for _ in range(budget.samples):
        x = sampling.random_d_element_general(rng)
        in_m = lf.is_member(x, lf.M())
        if lf.is_member(x, lf.N0()) != in_m or lf.is_member(x, lf.N1()) != in_m:
            failures.append(str(x))
    details = (f'N0 and N1 both contract to M in D: {checked} exhaustive '
               f'polynomial members of D, {budget.samples} sampled members')
    return _report('lemma5-contraction', budget, failures, details)


def check_lemma(part, budget=None):
    """Run one of the five structural checks on the ring pair (D, T)."""
    budget = budget or Budget()
    checks = {1: _check_part1, 2: _check_part2, 3: _check_part3,
              4: _check_part4, 5: _check_part5}
    if part not in checks:
        raise ValueError(f'part must be 1..5, got {part!r}')
    return checks[part](budget)


def check_ideal_generators(budget=None):
    """M = m*D + mt*D, by sampled double inclusion with explicit cofactors."""
    budget = budget or Budget()
    failures = []
    lf = localfield
    rng = _rng(budget, 'generators')
    mt = _M_ELT * _T_ELT
    for _ in range(budget.samples):
        d1 = sampling.random_d_element_general(rng)
        d2 = sampling.random_d_element_general(rng)
        if not lf.is_member(_M_ELT * d1 + mt * d2, lf.M()):
            failures.append(f'{d1}, {d2}')
    for _ in range(budget.samples):
        x = sampling.random_m_element(rng)
        s = x / _M_ELT
        e = RatFunc(residue(s, 0) ^ residue(s, 1))
        d = s + e * _T_ELT
        if not lf.is_member(d, lf.D) or not lf.is_member(e, lf.D):
            failures.append(str(x))
        elif _M_ELT * d + mt * e != x:
            failures.append(str(x))
    details = (f'{budget.samples} samples each way: m*D + mt*D lands in M, and '
               'every sampled member of M splits as m*d + mt*e with d, e in D '
               '(e is the residue mismatch bit of x/m, d the corrected cofactor)')
    return _report('ideal-generators', budget, failures, details)


def check_probe_family(budget=None):
    """The probes u = t(t+1)^(n+1), n = 1..10: v0 = 1, v1 = n+1, in M, not M^2."""
    budget = budget or Budget()
    failures = []
    lf = localfield
    for n in range(1, 11):
        u = probe_point(n)
        ok = (valuation(u, 0) == 1 and valuation(u, 1) == n + 1
              and lf.is_member(u, lf.M()) and not lf.is_member(u, lf.M(2)))
        if not ok:
            failures.append(str(u))
    details = 'exact valuations of the ten probes t(t+1)^(n+1), n = 1..10'
    return _report('probe-family', budget, failures, details)


def check_obstruction(budget=None):
    """The quotient polynomial f = (X^2+X)/m and the candidate corpus.

    (a) substituting a + t(t+1)V for X turns f into V + t(t+1)V^2, exactly,
        for both bits a; (b) f maps D into T; (c) f does not map D into D,
    with a validated witness whose value has residue pair (0, 1);
    (d) m*f = X^2+X exactly; (e) every bundled candidate is refuted and all
    recorded chain inequalities hold.
    """
    budget = budget or Budget()
    failures = []
    f = obstruction_poly()
    expanded = XPoly((0, 1, _M_ELT))
    for a in (0, 1):
        if substitute_affine(f, a) != expanded:
            failures.append(f'substitution at a = {a}')
    verdict_t = intdecider.decide_int_DT(f)
    if not verdict_t.is_member:
        failures.append(f'f rejected for target T at {verdict_t.witness}')
    verdict_d = intdecider.decide_int_D(f)
    if verdict_d.is_member:
        failures.append('f accepted for target D')
    else:
        w, val = verdict_d.witness, verdict_d.witness_value
        if (not localfield.is_member(w, localfield.D)
                or localfield.is_member(val, localfield.D)
                or residue(val, 0) != 0 or residue(val, 1) != 1):
            failures.append(f'bad witness {w}')
    if f * _M_ELT != x_squared_plus_x():
        failures.append('m*f differs from X^2+X')

    labeled = builtin_candidates()
    outcomes = {'SumMismatch': 0, 'InvalidCandidate': 0, 'ValuationContradiction': 0}
    for label, candidate in labeled:
        try:
            cert = refute_candidate(candidate)
        except AssertionError as exc:
            failures.append(f'{label}: refutation integrity check tripped: {exc}')
            continue
        outcomes[type(cert.outcome).__name__] += 1
        if isinstance(cert.outcome, ValuationContradiction):
            failures.append(f'{label}: chain contradiction reached on real data')
        for record in cert.chain.terms:
            if not record.ultrametric_ok:
                failures.append(f'{label}: ultrametric step failed at term {record.index}')
            for iq in record.inequalities:
                if not (iq.holds and iq.lower_bound >= 2 and iq.v1_term >= 2):
                    failures.append(f'{label}: inequality failed at term {record.index}')
        if isinstance(cert.outcome, SumMismatch):
            bad = [r for r in cert.chain.terms
                   if not (r.difference_in_m and r.product_in_m2)]
            if bad or not cert.chain.combined_in_m2:
                failures.append(f'{label}: chain memberships failed on valid terms')
    if len(labeled) < 50:
        failures.append(f'corpus too small: {len(labeled)}')
    details = (f'f = (X^2+X)/m: expansion, deciders and exact identity verified; '
               f'{len(labeled)} bundled candidates all refuted '
               f'({outcomes["SumMismatch"]} sum mismatches, '
               f'{outcomes["InvalidCandidate"]} invalid candidates, '
               f'{outcomes["ValuationContradiction"]} chain contradictions)')
    return _report('obstruction', budget, failures, details)


def check_conclusion(prior_reports, budget=None):
    """Assemble the decided facts into the non-flatness conclusion.

    Machine checked here: m*f and mt*f are both integer valued on D, so
    M*f lands in Int(D) through the verified generators of M.  Taken as an
    input assumption, not computed: flatness of Int(D) over D would force
    every polynomial conducting M into Int(D) to lie in T*Int(D).  The
    refuted corpus and the deciders then leave no room for flatness.
    """
    budget = budget or Budget()
    failures = []
    f = obstruction_poly()
    mt = _M_ELT * _T_ELT
    if not intdecider.decide_int_D(f * _M_ELT).is_member:
        failures.append('m*f not integer valued')
    if not intdecider.decide_int_D(f * mt).is_member:
        failures.append('mt*f not integer valued')
    bad = [r.check_id for r in prior_reports if not r.passed]
    if bad:
        failures.append('prerequisite checks failed: ' + ', '.join(bad))
    details = ('f multiplies both generators of M into Int(D) (decided), yet f '
               'itself is not integer valued while mapping D into T (decided), '
               'and every bundled representation X^2+X = sum a_i h_i with a_i '
               'in M, h_i integer valued, is refuted; under the localization '
               'criterion for flatness (assumed, not computed) the D-module of '
               'integer-valued polynomials on D is therefore not flat')
    return _report('flatness-conclusion', budget, failures, details)


def run_all(budget=None):
    """Every check in catalog order; the conclusion consumes the rest."""
    budget = budget or Budget()
    reports = [check_lemma(part, budget) for part in (1, 2, 3, 4, 5)]
    reports.append(check_ideal_generators(budget))
    reports.append(check_probe_family(budget))
    reports.append(check_obstruction(budget))
    reports.append(check_conclusion(reports, budget))
    return reports
