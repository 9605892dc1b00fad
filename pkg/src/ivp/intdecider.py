"""Exact membership deciders for integer-valued polynomials.

Whether p maps all of D into T (or into D) is decided by evaluating p on
finitely many residue-class representatives.  The key bound: for x, y in
D and a coefficient pole order e at a place, the valuation of p(x) - p(y)
at that place is at least v(x - y) - e.  So checking representatives that
cover all classes modulo the e-th (for target T) or (e+1)-st (for target
D, where residues must survive) ideal powers decides membership for every
element of D at once.  A representative that fails is returned as a
re-checkable witness.
"""

import random
from dataclasses import dataclass

from . import localfield
from .localfield import RatFunc, lift_from_residues
from .ivpoly import pole_bound
from .sampling import random_d_element


@dataclass(frozen=True)
class MembershipVerdict:
    """Outcome of a decider run.

    On a no verdict the witness is an element of D whose value
    witness_value lies outside the target.  precision records the ideal
    powers (at the two places) whose residue classes were enumerated.
    """

    is_member: bool
    witness: RatFunc | None
    witness_value: RatFunc | None
    precision: tuple[int, int]


def enum_representatives(e0, e1):
    """Representatives of D covering every class that evaluation at the
    stated precisions can distinguish.

    An element of D is a bit a plus t(t+1)*v, and only (a, v mod t^(e0-1),
    v mod (t+1)^(e1-1)) matters at precision (e0, e1).  The full cover has
    2 * 2^max(e0-1,0) * 2^max(e1-1,0) elements; at precision (0, 0) the
    single representative 0 suffices.
    """
    if e0 < 0 or e1 < 0:
        raise ValueError('precisions must be >= 0')
    if e0 == 0 and e1 == 0:
        return [RatFunc(0)]
    k0 = max(e0 - 1, 0)
    k1 = max(e1 - 1, 0)
    reps = []
    for a in (0, 1):
        for s0 in range(1 << k0):
            for s1 in range(1 << k1):
                reps.append(lift_from_residues(a, s0, s1, k0, k1))
    return reps


def decide_int_DT(p):
    """Does p map every element of D into T?  Exact yes/no with witness."""
    e0 = pole_bound(p, 0)
    e1 = pole_bound(p, 1)
    for x in enum_representatives(e0, e1):
        value = p.evaluate(x)
        if not localfield.is_member(value, localfield.T):
            return MembershipVerdict(False, x, value, (e0, e1))
    return MembershipVerdict(True, None, None, (e0, e1))


def decide_int_D(p):
    """Does p map every element of D into D?  Exact yes/no with witness.

    One extra order of precision beyond the pole bounds pins down the
    residues of the values, not just their integrality.
    """
    k0 = pole_bound(p, 0) + 1
    k1 = pole_bound(p, 1) + 1
    for x in enum_representatives(k0, k1):
        value = p.evaluate(x)
        if not localfield.is_member(value, localfield.D):
            return MembershipVerdict(False, x, value, (k0, k1))
    return MembershipVerdict(True, None, None, (k0, k1))


_SAMPLED_TARGETS = ('T', 'D', 'M')


def sampled_membership_check(p, target, count, seed):
    """Randomized counterpart of the deciders: evaluate p at count random
    elements of D and test membership of each value in the target.

    Never a proof of yes; any failure is a definite no with a witness.
    Deterministic for a fixed seed.
    """
    if not isinstance(target, localfield.SetDescriptor):
        target = localfield.SetDescriptor.parse(target)
    if target.kind not in _SAMPLED_TARGETS:
        raise ValueError(f'sampled check supports T, D and M powers, not {target}')
    rng = random.Random(seed)
    for _ in range(count):
        x = random_d_element(rng)
        value = p.evaluate(x)
        if not localfield.is_member(value, target):
            return MembershipVerdict(False, x, value, (0, 0))
    return MembershipVerdict(True, None, None, (0, 0))
