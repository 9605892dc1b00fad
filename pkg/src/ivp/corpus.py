"""Bundled corpus of candidate representations of X^2+X, all refutable.

Construction is deterministic and label-driven so tests can slice by
category:

    empty      the candidate with no terms
    poly-*     valid terms with polynomial factors (exact sum mismatch)
    pole-*     valid factors carrying genuine poles at t+1, forcing the
               chain parameter n above 1
    invalid-a  coefficient outside the ideal M
    invalid-h  factor that is not integer valued on D
"""

from .localfield import RatFunc
from .ivpoly import XPoly, X, x_squared_plus_x
from .refuter import Candidate

_ONE = RatFunc(1)
_T = RatFunc('t')
_T1 = RatFunc('t+1')
_M = RatFunc('t^2+t')


def _powers_of_target_over_m(k):
    # (X^2+X)^k / m^(k-1): integer valued on D with pole order k-1 at t+1,
    # since its value at a + t(t+1)v is t(t+1) * (v + t(t+1)v^2)^k
    return x_squared_plus_x() ** k * (_M ** (k - 1)).inv()


def builtin_candidates():
    """Labeled candidates, every one refutable, covering all categories."""
    target = x_squared_plus_x()
    one_poly = XPoly((1,))
    h_pole2 = _powers_of_target_over_m(2)
    h_pole3 = _powers_of_target_over_m(3)
    h_pole4 = _powers_of_target_over_m(4)
    obstruction = target * _M.inv()

    out = [('empty', Candidate(()))]

    a_pool = [_M, _M * _T, _M * _T1, _M * _M, _M * _T * _T, _M * (_ONE + _M)]
    h_pool = [one_poly, X, X + one_poly, X * X, target,
              X * X * X + X, XPoly((1, 1, 1))]
    for i, a in enumerate(a_pool):
        for j, h in enumerate(h_pool[:5]):
            out.append((f'poly-single-{i}{j}', Candidate(((a, h),))))
    out.append(('poly-pair-0', Candidate(((_M, X), (_M * _T, X * X)))))
    out.append(('poly-pair-1', Candidate(((_M, target), (_M * _M, X)))))
    out.append(('poly-pair-2', Candidate(((_M * _T1, h_pool[5]), (_M, one_poly)))))
    out.append(('poly-triple-0', Candidate(((_M, X), (_M, X * X), (_M * _T, one_poly)))))
    out.append(('poly-zero-term', Candidate(((_M, XPoly(())), (RatFunc(0), X)))))

    out.append(('pole-single-2', Candidate(((_M, h_pole2),))))
    out.append(('pole-single-3', Candidate(((_M * _T, h_pole3),))))
    out.append(('pole-single-4', Candidate(((_M, h_pole4),))))
    out.append(('pole-pair-0', Candidate(((_M, h_pole2), (_M * _T, X)))))
    out.append(('pole-pair-1', Candidate(((_M * _M, h_pole3), (_M, X * X)))))
    out.append(('pole-pair-2', Candidate(((_M * _T1, h_pole2), (_M * _T, h_pole3)))))
    out.append(('pole-mixed-0', Candidate(((_M, h_pole2 + target), (_M, one_poly)))))
    out.append(('pole-mixed-1', Candidate(((_M, h_pole2 * RatFunc('t^2+t+1')),))))

    for i, a in enumerate([_ONE, _T, _T1, _ONE + _M, RatFunc(1, 't')]):
        out.append((f'invalid-a-{i}', Candidate(((a, target),))))
    out.append(('invalid-a-mixed', Candidate(((_M, X), (_T, X * X)))))

    bad_h_pool = [
        obstruction,                       # (X^2+X)/m itself
        X * _M.inv(),                      # X/m
        obstruction * obstruction,
        (X + one_poly) * _T1.inv(),
        obstruction * X,
    ]
    for i, h in enumerate(bad_h_pool):
        out.append((f'invalid-h-{i}', Candidate(((_M * _T, h),))))
    out.append(('invalid-h-exact', Candidate(((_M, obstruction),))))

    return out
