"""Polynomials in one indeterminate X with RatFunc coefficients.

An XPoly is a trimmed tuple of coefficients, lowest degree first.  The
indeterminate carries no name of its own; callers that care about the
display variable pass one to to_string.  Two operations drive everything
downstream: exact evaluation at a field element, and the affine
substitution X -> a + t(t+1)*V that re-expands a polynomial around a
residue class of the pullback ring.
"""

from .localfield import RatFunc, valuation

_M = RatFunc('t^2+t')


def _coerce(c):
    return c if isinstance(c, RatFunc) else RatFunc(c)


class XPoly:
    """Immutable polynomial in X over GF(2)(t)."""

    __slots__ = ('coeffs',)

    def __init__(self, coeffs=()):
        cs = [_coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, 'coeffs', tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError('XPoly is immutable')

    @classmethod
    def _trusted(cls, cs):
        while cs and not cs[-1]:
            cs.pop()
        obj = object.__new__(cls)
        object.__setattr__(obj, 'coeffs', tuple(cs))
        return obj

    @property
    def degree(self):
        """Degree as an int, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self):
        return not self.coeffs

    def coeff(self, j):
        """Coefficient of X^j (zero beyond the stored length)."""
        if j < 0:
            raise ValueError('negative coefficient index')
        return self.coeffs[j] if j < len(self.coeffs) else RatFunc(0)

    def __add__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for j, c in enumerate(b):
            cs[j] = cs[j] + c
        return XPoly._trusted(cs)

    __sub__ = __add__           # characteristic 2

    def __mul__(self, other):
        if isinstance(other, XPoly):
            if not self.coeffs or not other.coeffs:
                return XPoly._trusted([])
            cs = [RatFunc(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b:
                        cs[i + j] = cs[i + j] + a * b
            return XPoly._trusted(cs)
        scalar = _coerce(other)
        return XPoly._trusted([c * scalar for c in self.coeffs])

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError('exponent must be a nonnegative int')
        result = XPoly((1,))
        for _ in range(n):
            result = result * self
        return result

    def evaluate(self, x):
        """Exact value at the field element x, by Horner's rule."""
        x = _coerce(x)
        acc = RatFunc(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    __call__ = evaluate

    def __eq__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(('XPoly', self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def to_string(self, var='X'):
        if not self.coeffs:
            return '0'
        parts = []
        for j in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[j]
            if not c:
                continue
            power = '' if j == 0 else var if j == 1 else f'{var}^{j}'
            if j == 0:
                parts.append(str(c))
            elif c == RatFunc(1):
                parts.append(power)
            else:
                cs = str(c)
                if '+' in cs or '/' in cs:
                    cs = f'({cs})'
                parts.append(f'{cs}*{power}')
        return '+'.join(parts)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return self.to_string()


X = XPoly((0, 1))


def x_squared_plus_x():
    """The target polynomial X^2 + X."""
    return XPoly((0, 1, 1))


def obstruction_poly():
    """(X^2+X)/(t^2+t): maps D into T yet fails to be integer valued on D."""
    inv_m = _M.inv()
    return XPoly((RatFunc(0), inv_m, inv_m))


def evaluate(p, x):
    return p.evaluate(x)


def substitute_affine(p, a):
    """Expansion of p(a + t(t+1)*V) as a polynomial in V, exactly.

    a must be the bit 0 or 1.  Substituting the generic element of a
    residue class of D turns value questions over that class into
    coefficient questions, which is what the membership deciders consume.
    """
    if a not in (0, 1):
        raise ValueError(f'affine shift must be the bit 0 or 1, got {a!r}')
    base = XPoly((RatFunc(a), _M))      # a + t(t+1)*V
    acc = XPoly(())
    for c in reversed(p.coeffs):
        acc = acc * base + XPoly((c,))
    return acc


def pole_bound(p, place):
    """Worst pole order of the coefficients at the place (0 when none)."""
    worst = 0
    for c in p.coeffs:
        if c:
            v = valuation(c, place)
            if v < -worst:
                worst = -v
    return worst
