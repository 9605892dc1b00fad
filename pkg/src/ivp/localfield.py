"""The rational function field GF(2)(t) with its two distinguished places.

Elements are reduced fractions of GF(2)[t] polynomials (RatFunc).  The two
discrete valuations v0 and v1 count zeros of a fraction at t and at t+1;
both uniformizers get value 1.  Everything downstream is decided from
those two integers and the residues they induce:

    T  = fractions with v0 >= 0 and v1 >= 0 (denominator prime to t(t+1)),
    N0 = t*T and N1 = (t+1)*T, the two maximal ideals of T,
    M  = N0 * N1 = t(t+1)*T,
    D  = GF(2) + M, the pullback of GF(2) along T -> T/M,
    S  = polynomials nonvanishing at both 0 and 1 (the inverted set).

The valuation of the zero element is reported as math.inf, never as an
int; membership predicates treat 0 as belonging to T, to D, and to every
ideal power, but never to the unit group.
"""

from dataclasses import dataclass
from math import inf

from . import gf2poly
from .gf2poly import BinaryPoly, _clmul, _divmod, _gcd, _eval_at, _invert, _mult_at

_M_MASK = 0b110        # t^2+t


def _coerce_masks(value):
    """Numerator/denominator masks for a RatFunc-like value, else None."""
    if isinstance(value, RatFunc):
        return value._n, value._d
    if isinstance(value, BinaryPoly):
        return value.mask, 1
    if isinstance(value, int) and value >= 0:
        return value, 1
    if isinstance(value, str):
        return gf2poly._from_terms(value), 1
    return None


class RatFunc:
    """Reduced fraction num/den of GF(2)[t] polynomials, den nonzero.

    The class invariant is gcd(num, den) = 1 with den nonzero; zero is
    canonically 0/1.  Arithmetic restores the invariant on every result,
    so equality is plain componentwise comparison.
    """

    __slots__ = ('_n', '_d')

    def __init__(self, num=0, den=1):
        n = _coerce_masks(num)
        d = _coerce_masks(den)
        if n is None or d is None:
            raise TypeError(f'cannot build a fraction from {num!r}/{den!r}')
        nn, nd = n
        dn, dd = d
        # num/den with fraction inputs means an actual quotient
        n_mask = _clmul(nn, dd)
        d_mask = _clmul(nd, dn)
        if d_mask == 0:
            raise ZeroDivisionError('zero denominator')
        if n_mask == 0:
            d_mask = 1
        else:
            g = _gcd(n_mask, d_mask)
            if g != 1:
                n_mask = _divmod(n_mask, g)[0]
                d_mask = _divmod(d_mask, g)[0]
        object.__setattr__(self, '_n', n_mask)
        object.__setattr__(self, '_d', d_mask)

    def __setattr__(self, name, value):
        raise AttributeError('RatFunc is immutable')

    @classmethod
    def _raw(cls, n_mask, d_mask):
        # internal: caller guarantees the reduced-form invariant
        obj = object.__new__(cls)
        object.__setattr__(obj, '_n', n_mask)
        object.__setattr__(obj, '_d', d_mask)
        return obj

    @classmethod
    def _reduced(cls, n_mask, d_mask):
        if n_mask == 0:
            return cls._raw(0, 1)
        g = _gcd(n_mask, d_mask)
        if g != 1:
            n_mask = _divmod(n_mask, g)[0]
            d_mask = _divmod(d_mask, g)[0]
        return cls._raw(n_mask, d_mask)

    @property
    def num(self):
        return BinaryPoly(self._n)

    @property
    def den(self):
        return BinaryPoly(self._d)

    @property
    def is_polynomial(self):
        return self._d == 1

    def __add__(self, other):
        masks = _coerce_masks(other)
        if masks is None:
            return NotImplemented
        n2, d2 = masks
        if self._d == 1 and d2 == 1:
            return RatFunc._raw(self._n ^ n2, 1)
        n = _clmul(self._n, d2) ^ _clmul(n2, self._d)
        return RatFunc._reduced(n, _clmul(self._d, d2))

    __radd__ = __add__
    __sub__ = __add__           # characteristic 2
    __rsub__ = __add__

    def __mul__(self, other):
        masks = _coerce_masks(other)
        if masks is None:
            return NotImplemented
        n2, d2 = masks
        if self._n == 0 or n2 == 0:
            return RatFunc._raw(0, 1)
        if self._d == 1 and d2 == 1:
            return RatFunc._raw(_clmul(self._n, n2), 1)
        return RatFunc._reduced(_clmul(self._n, n2), _clmul(self._d, d2))

    __rmul__ = __mul__

    def inv(self):
        """Multiplicative inverse in the field GF(2)(t)."""
        if self._n == 0:
            raise ZeroDivisionError('inverse of zero')
        return RatFunc._raw(self._d, self._n)

    def __truediv__(self, other):
        masks = _coerce_masks(other)
        if masks is None:
            return NotImplemented
        n2, d2 = masks
        if n2 == 0:
            raise ZeroDivisionError('division by zero')
        if self._n == 0:
            return RatFunc._raw(0, 1)
        return RatFunc._reduced(_clmul(self._n, d2), _clmul(self._d, n2))

    def __rtruediv__(self, other):
        masks = _coerce_masks(other)
        if masks is None:
            return NotImplemented
        return RatFunc._raw(*masks) / self

    def __pow__(self, n):
        if not isinstance(n, int):
            raise ValueError('exponent must be an int')
        base = self if n >= 0 else self.inv()
        result = RatFunc._raw(1, 1)
        for _ in range(abs(n)):
            result = result * base
        return result

    def __eq__(self, other):
        masks = _coerce_masks(other)
        if masks is None:
            return NotImplemented
        return (self._n, self._d) == masks

    def __hash__(self):
        return hash(('RatFunc', self._n, self._d))

    def __bool__(self):
        return self._n != 0

    def __str__(self):
        num_s = gf2poly._to_terms(self._n)
        if self._d == 1:
            return num_s
        den_s = gf2poly._to_terms(self._d)
        if '+' in num_s:
            num_s = f'({num_s})'
        if '+' in den_s:
            den_s = f'({den_s})'
        return f'{num_s}/{den_s}'

    def __repr__(self):
        return self.__str__()


ZERO = RatFunc._raw(0, 1)
ONE = RatFunc._raw(1, 1)
T_GEN = RatFunc._raw(0b10, 1)          # the element t
M_GEN = RatFunc._raw(_M_MASK, 1)       # the element t^2+t = t(t+1)


def make_reduced(num, den):
    """Canonical reduced fraction num/den; ZeroDivisionError on den = 0."""
    return RatFunc(num, den)


def field_add(x, y):
    return RatFunc(x) + RatFunc(y)


def field_mul(x, y):
    return RatFunc(x) * RatFunc(y)


def field_inv(x):
    return RatFunc(x).inv()


def valuation(x, place):
    """Order of vanishing of x at t (place 0) or t+1 (place 1).

    Returns an int for nonzero x and math.inf for x = 0, so comparisons
    against required ideal powers work uniformly.
    """
    if place not in (0, 1):
        raise ValueError(f'place must be 0 or 1, got {place!r}')
    if not isinstance(x, RatFunc):
        x = RatFunc(x)
    if x._n == 0:
        return inf
    return _mult_at(x._n, place) - _mult_at(x._d, place)


def residue(x, place):
    """Image of x in the residue field T/N_place, as the int 0 or 1.

    Defined only when x has no pole at the place (ValueError otherwise);
    the residue is 0 exactly when the valuation is positive or x = 0.
    """
    if not isinstance(x, RatFunc):
        x = RatFunc(x)
    if x._n == 0:
        return 0
    v = valuation(x, place)
    if v < 0:
        raise ValueError(f'residue undefined: pole of order {-v} at place {place}')
    return 0 if v >= 1 else 1


_IDEAL_KINDS = ('N0', 'N1', 'M')
_PLAIN_KINDS = ('S', 'T', 'D', 'unitD')


@dataclass(frozen=True)
class SetDescriptor:
    """Name of one of the membership targets: S, T, D, unitD, N0^k, N1^k, M^k."""

    kind: str
    power: int = 1

    def __post_init__(self):
        if self.kind not in _IDEAL_KINDS and self.kind not in _PLAIN_KINDS:
            raise ValueError(f'unknown set {self.kind!r}')
        if not isinstance(self.power, int) or self.power < 1:
            raise ValueError(f'ideal power must be an int >= 1, got {self.power!r}')
        if self.kind in _PLAIN_KINDS and self.power != 1:
            raise ValueError(f'{self.kind} takes no power')

    @classmethod
    def parse(cls, text):
        """Parse descriptors like "D", "M", "M^2", "N1^3"."""
        base, sep, exp = text.strip().partition('^')
        base = base.strip()
        if not sep:
            return cls(base)
        try:
            k = int(exp)
        except ValueError:
            raise ValueError(f'bad ideal power {exp!r}') from None
        return cls(base, k)

    def __str__(self):
        if self.kind in _IDEAL_KINDS and self.power != 1:
            return f'{self.kind}^{self.power}'
        return self.kind


S = SetDescriptor('S')
T = SetDescriptor('T')
D = SetDescriptor('D')
UNIT_D = SetDescriptor('unitD')


def N0(k=1):
    return SetDescriptor('N0', k)


def N1(k=1):
    return SetDescriptor('N1', k)


def M(k=1):
    return SetDescriptor('M', k)


def is_member(x, target):
    """Exact membership of x in the named set, decided from valuations.

    S-membership is a statement about polynomials, so a fraction with a
    nontrivial denominator raises ValueError for target S.
    """
    if not isinstance(x, RatFunc):
        x = RatFunc(x)
    if not isinstance(target, SetDescriptor):
        target = SetDescriptor.parse(target) if isinstance(target, str) else target
    kind = target.kind
    if kind == 'S':
        if x._d != 1:
            raise ValueError('S-membership applies to polynomials only')
        g = x._n
        return g != 0 and _eval_at(g, 0) == 1 and _eval_at(g, 1) == 1
    v0 = valuation(x, 0)
    v1 = valuation(x, 1)
    if kind == 'T':
        return v0 >= 0 and v1 >= 0
    if kind == 'N0':
        return v0 >= target.power and v1 >= 0
    if kind == 'N1':
        return v0 >= 0 and v1 >= target.power
    if kind == 'M':
        return v0 >= target.power and v1 >= target.power
    # D and unitD need both residues, hence no poles
    if v0 < 0 or v1 < 0:
        return False
    r0 = 0 if v0 >= 1 else 1
    r1 = 0 if v1 >= 1 else 1
    if kind == 'D':
        return r0 == r1
    return r0 == 1 and r1 == 1      # unitD


def lift_from_residues(a, s0, s1, k0, k1):
    """Element a + t(t+1)*v of D with v = s0 mod t^k0 and v = s1 mod (t+1)^k1.

    a is a bit; s0, s1 are polynomial residues of degree below k0 and k1.
    The two moduli are coprime, so v exists and is found by inverting each
    modulus against the other.
    """
    if a not in (0, 1):
        raise ValueError(f'constant part must be the bit 0 or 1, got {a!r}')
    if not isinstance(k0, int) or not isinstance(k1, int) or k0 < 0 or k1 < 0:
        raise ValueError('residue precisions must be ints >= 0')
    s0 = BinaryPoly(s0).mask
    s1 = BinaryPoly(s1).mask
    if s0 >> k0:
        raise ValueError(f'residue data too wide: deg(s0) >= {k0}')
    if s1 >> k1:
        raise ValueError(f'residue data too wide: deg(s1) >= {k1}')
    mod0 = 1 << k0                        # t^k0
    mod1 = BinaryPoly(0b11).__pow__(k1).mask   # (t+1)^k1
    if k0 == 0 and k1 == 0:
        v = 0
    elif k0 == 0:
        v = s1
    elif k1 == 0:
        v = s0
    else:
        c1 = _invert(mod1, mod0)
        c0 = _invert(mod0, mod1)
        v = _clmul(_clmul(s0, c1), mod1) ^ _clmul(_clmul(s1, c0), mod0)
        v = _divmod(v, _clmul(mod0, mod1))[1]
    return RatFunc._raw(a ^ _clmul(_M_MASK, v), 1)


def minv_witness(x):
    """For x outside T, a witness w in M with x*w outside D.

    Such a w certifies that x does not multiply M into D, so no element
    outside T belongs to (D : M).  The witness is a monomial t^a (t+1)^b
    chosen so that x*w has valuation 0 at the surviving pole and valuation
    >= 1 at the other place, forcing a residue mismatch.
    """
    x = RatFunc(x)
    if x._n == 0:
        raise ValueError('witness requires an element outside T')
    v0 = valuation(x, 0)
    v1 = valuation(x, 1)
    if v0 >= 0 and v1 >= 0:
        raise ValueError('witness requires an element outside T')
    if v0 <= -1:
        a, b = -v0, max(1, -v1 + 1)
    else:
        a, b = max(1, -v0 + 1), -v1
    w_mask = _clmul(1 << a, BinaryPoly(0b11).__pow__(b).mask)
    w = RatFunc._raw(w_mask, 1)
    product = x * w
    if not is_member(w, M(1)) or is_member(product, D):
        raise AssertionError(f'witness construction failed for {x}')
    return w
