"""Refutation engine for claimed finite representations of X^2+X.

A candidate claims X^2 + X = sum of a_i * h_i(X) with every a_i in the
ideal M = t(t+1)T and every h_i integer valued on D.  No candidate ever
survives; refute_candidate returns a disproof certificate whose records
can be replayed step by step.

The valuation chain behind the generic disproof: choose n larger than
every coefficient pole order of the h_i at t+1 and probe at
u = t(t+1)^(n+1).  Each difference h_i(u) - h_i(0) is a sum of terms
c_r u^r whose valuation at t+1 is at least -(n-1) + r(n+1) >= 2, and the
difference lands in M; multiplying by a_i in M lands in M^2.  Were the
combination equal to X^2+X, summing the differences would put u^2+u in
M^2, and u^2 already lies in M^2, forcing u itself into M^2.  That is
impossible: u has valuation exactly 1 at t.  Explicit candidates die
earlier, at validation or at an exact coefficient mismatch; the chain is
still executed on their terms so every inequality gets exercised.
"""

from dataclasses import dataclass
from math import inf

from .localfield import RatFunc, is_member, valuation, M
from .ivpoly import XPoly, pole_bound, x_squared_plus_x
from .intdecider import decide_int_D

_T_ELT = RatFunc('t')
_T1_ELT = RatFunc('t+1')


@dataclass(frozen=True)
class Candidate:
    """Finite list of (coefficient, polynomial) pairs."""

    terms: tuple[tuple[RatFunc, XPoly], ...]

    @classmethod
    def from_pairs(cls, pairs):
        out = []
        for a, h in pairs:
            out.append((a if isinstance(a, RatFunc) else RatFunc(a),
                        h if isinstance(h, XPoly) else XPoly(h)))
        return cls(tuple(out))

    def __len__(self):
        return len(self.terms)


@dataclass(frozen=True)
class TermInequality:
    """One monomial of one difference h(u) - h(0), with its exact valuation
    at t+1 and the lower bound -(n-1) + r(n+1) that forces it into N1^2."""

    power: int
    v1_coeff: int
    v1_probe: int
    v1_term: int
    lower_bound: int
    holds: bool


@dataclass(frozen=True)
class TermRecord:
    """Everything the chain knows about one candidate term at the probe."""

    index: int
    pole_order: int
    inequalities: tuple[TermInequality, ...]
    difference: RatFunc
    v1_difference: int | float
    ultrametric_ok: bool
    difference_in_m: bool
    product_in_m2: bool


@dataclass(frozen=True)
class DifferenceEvidence:
    """Membership evidence for one difference h(u) - h(0)."""

    value: RatFunc
    v1: int | float
    v1_at_least_2: bool
    in_t: bool
    in_d: bool
    in_m: bool


@dataclass(frozen=True)
class SumMismatch:
    """The combination differs from X^2+X at the stated coefficient."""

    coefficient_index: int
    expected: RatFunc
    actual: RatFunc


@dataclass(frozen=True)
class InvalidCandidate:
    """A term violates the side conditions of the claimed representation."""

    term_index: int
    reason: str
    witness: RatFunc | None = None


@dataclass(frozen=True)
class ValuationContradiction:
    """All side conditions hold and the sum matches, so the chain applies
    and pins u inside M^2 against v0(u) = 1."""

    n: int
    probe: RatFunc
    terms: tuple[TermRecord, ...]
    final_step: str


@dataclass(frozen=True)
class ValuationChain:
    """Replayable record of the full chain on a candidate's terms."""

    n: int
    probe: RatFunc
    terms: tuple[TermRecord, ...]
    combined_difference: RatFunc
    combined_in_m2: bool
    probe_in_m: bool
    probe_in_m2: bool
    v0_probe: int
    final_step: str


@dataclass(frozen=True)
class RefutationCertificate:
    """Disproof of one candidate: the decisive outcome plus the replayed
    valuation chain over the candidate's own terms."""

    outcome: SumMismatch | InvalidCandidate | ValuationContradiction
    chain: ValuationChain

    def describe(self):
        lines = []
        o = self.outcome
        if isinstance(o, SumMismatch):
            lines.append('outcome: sum mismatch at the coefficient of '
                         f'X^{o.coefficient_index}: expected {o.expected}, got {o.actual}')
        elif isinstance(o, InvalidCandidate):
            lines.append(f'outcome: invalid candidate at term {o.term_index}: {o.reason}')
        else:
            lines.append(f'outcome: valuation contradiction at n = {o.n}, u = {o.probe}')
        c = self.chain
        lines.append(f'chain replay: n = {c.n}, probe u = {c.probe} '
                     f'(v0 = {c.v0_probe}, in M: {_yn(c.probe_in_m)}, in M^2: {_yn(c.probe_in_m2)})')
        for tr in c.terms:
            lines.append(f'  term {tr.index}: pole order {tr.pole_order} at t+1; '
                         f'h(u)-h(0) = {tr.difference}; v1 = {tr.v1_difference}; '
                         f'in M: {_yn(tr.difference_in_m)}; a*(h(u)-h(0)) in M^2: {_yn(tr.product_in_m2)}')
            for iq in tr.inequalities:
                lines.append(f'    X^{iq.power}: v1(c*u^{iq.power}) = {iq.v1_term} '
                             f'>= -(n-1)+r(n+1) = {iq.lower_bound} >= 2: {_yn(iq.holds)}')
        lines.append(f'  combined difference = {c.combined_difference}; '
                     f'in M^2: {_yn(c.combined_in_m2)}')
        lines.append(f'final step: {c.final_step}')
        return '\n'.join(lines)


def _yn(flag):
    return 'yes' if flag else 'no'


def probe_point(n):
    """The probe u = t(t+1)^(n+1), with v0(u) = 1 and v1(u) = n+1."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f'probe index must be an int >= 1, got {n!r}')
    return _T_ELT * _T1_ELT ** (n + 1)


def choose_n(candidate):
    """Minimal legal chain parameter: one more than the worst coefficient
    pole order at t+1 over the candidate's terms, and at least 1."""
    worst = 0
    for _, h in candidate.terms:
        worst = max(worst, pole_bound(h, 1))
    return max(1, 1 + worst)


def verify_term_inequality(n, r, c):
    """Check v1(c * u^r) >= 2 together with the arithmetic lower bound
    -(n-1) + r(n+1) >= 2 for a nonzero coefficient c of X^r."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f'chain parameter n must be an int >= 1, got {n!r}')
    if not isinstance(r, int) or r < 1:
        raise ValueError(f'term power must be an int >= 1, got {r!r}')
    c = c if isinstance(c, RatFunc) else RatFunc(c)
    if not c:
        raise ValueError('term inequality needs a nonzero coefficient')
    v1c = valuation(c, 1)
    if v1c < -(n - 1):
        raise ValueError(f'coefficient pole too deep for n = {n}: v1 = {v1c}')
    v1_probe = n + 1
    v1_term = v1c + r * v1_probe
    lower = -(n - 1) + r * (n + 1)
    holds = lower >= 2 and v1_term >= lower
    return TermInequality(r, v1c, v1_probe, v1_term, lower, holds)


def difference_in_M(h, n):
    """Evidence that h(u) - h(0) lies in M for integer-valued h and a legal n.

    Preconditions (ValueError otherwise): h maps D into D, and n exceeds
    the pole order of h's coefficients at t+1.  Any failed evidence flag
    raises, since it would expose a bug rather than a property of h.
    """
    h = h if isinstance(h, XPoly) else XPoly(h)
    if n < pole_bound(h, 1) + 1:
        raise ValueError(f'n = {n} does not exceed the pole order {pole_bound(h, 1)}')
    verdict = decide_int_D(h)
    if not verdict.is_member:
        raise ValueError(f'factor is not integer valued on D: '
                         f'x = {verdict.witness} gives {verdict.witness_value}')
    u = probe_point(n)
    d = h.evaluate(u) + h.evaluate(RatFunc(0))
    v1 = valuation(d, 1)
    evidence = DifferenceEvidence(
        value=d,
        v1=v1,
        v1_at_least_2=v1 >= 2,
        in_t=is_member(d, 'T'),
        in_d=is_member(d, 'D'),
        in_m=is_member(d, M(1)),
    )
    if not (evidence.v1_at_least_2 and evidence.in_t and evidence.in_d and evidence.in_m):
        raise AssertionError(f'difference evidence failed for {h} at n = {n}: {evidence}')
    return evidence


def _term_record(index, a, h, n, u):
    # non-raising chain step, legal for any term once n >= pole order + 1
    ineqs = []
    for r in range(1, len(h.coeffs)):
        c = h.coeffs[r]
        if c:
            ineqs.append(verify_term_inequality(n, r, c))
    d = h.evaluate(u) + h.evaluate(RatFunc(0))
    v1 = valuation(d, 1)
    ultrametric_ok = (not ineqs) or v1 >= min(iq.v1_term for iq in ineqs)
    return TermRecord(
        index=index,
        pole_order=pole_bound(h, 1),
        inequalities=tuple(ineqs),
        difference=d,
        v1_difference=v1,
        ultrametric_ok=ultrametric_ok,
        difference_in_m=is_member(d, M(1)),
        product_in_m2=is_member(a * d, M(2)),
    )


_FINAL_STEP = ('u^2 lies in M^2 and each a*(h(u)-h(0)) lies in M^2, so a valid '
               'representation of X^2+X would give u = (u^2+u) + u^2 in M^2; '
               'that needs v0(u) >= 2, but v0(u) = 1')


def _run_chain(candidate, n):
    u = probe_point(n)
    records = tuple(_term_record(i, a, h, n, u)
                    for i, (a, h) in enumerate(candidate.terms))
    combined = RatFunc(0)
    for record, (a, _) in zip(records, candidate.terms):
        combined = combined + a * record.difference
    return ValuationChain(
        n=n,
        probe=u,
        terms=records,
        combined_difference=combined,
        combined_in_m2=is_member(combined, M(2)),
        probe_in_m=is_member(u, M(1)),
        probe_in_m2=is_member(u, M(2)),
        v0_probe=valuation(u, 0),
        final_step=_FINAL_STEP,
    )


def _validate(candidate):
    for i, (a, h) in enumerate(candidate.terms):
        if not is_member(a, M(1)):
            return InvalidCandidate(i, f'coefficient {a} lies outside the ideal M')
        verdict = decide_int_D(h)
        if not verdict.is_member:
            return InvalidCandidate(
                i,
                f'factor is not integer valued on D: at x = {verdict.witness} '
                f'the value {verdict.witness_value} leaves D',
                witness=verdict.witness,
            )
    return None


def refute_candidate(candidate, force_n=None):
    """Disproof certificate for a claimed representation of X^2+X.

    Validation runs first, then the exact sum comparison, and only a
    candidate surviving both (which cannot exist) would be refuted by the
    valuation contradiction itself.  The chain is replayed on the
    candidate's terms in every case.
    """
    if not isinstance(candidate, Candidate):
        candidate = Candidate.from_pairs(candidate)
    n = choose_n(candidate)
    if force_n is not None:
        if not isinstance(force_n, int) or force_n < n:
            raise ValueError(f'forced n must be an int >= {n}, got {force_n!r}')
        n = force_n
    chain = _run_chain(candidate, n)

    invalid = _validate(candidate)
    if invalid is not None:
        return RefutationCertificate(outcome=invalid, chain=chain)

    total = XPoly(())
    for a, h in candidate.terms:
        total = total + h * a
    target = x_squared_plus_x()
    top = max(len(total.coeffs), len(target.coeffs)) - 1
    for j in range(top, -1, -1):
        expected = target.coeff(j)
        actual = total.coeff(j)
        if expected != actual:
            return RefutationCertificate(
                outcome=SumMismatch(j, expected, actual), chain=chain)

    # unreachable for genuine inputs: a validated, sum-exact candidate would
    # make the chain flags below inconsistent with closure of M^2 under sums
    bad = [tr for tr in chain.terms
           if not (tr.difference_in_m and tr.product_in_m2 and tr.ultrametric_ok)]
    if bad or not chain.combined_in_m2 or not chain.probe_in_m or chain.probe_in_m2:
        raise AssertionError('chain flags inconsistent on a validated candidate')
    outcome = ValuationContradiction(n, chain.probe, chain.terms, chain.final_step)
    return RefutationCertificate(outcome=outcome, chain=chain)
