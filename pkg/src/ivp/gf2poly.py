"""Exact arithmetic for polynomials over GF(2) in the variable t.

A polynomial is stored as a nonnegative integer bit mask: bit i holds the
coefficient of t^i, so t^2+t is 0b110.  Addition is XOR, multiplication is
a carryless convolution, and division runs the schoolbook algorithm with
shifts.  Every nonzero polynomial over GF(2) is monic, so gcds and exact
division are canonical without unit bookkeeping.

Plain functions accept and return BinaryPoly instances (ints and term
strings are coerced); the _-prefixed helpers work on raw masks and carry
the actual algorithms.
"""


def _degree(a):
    return a.bit_length() - 1


def _clmul(a, b):
    if a.bit_length() < b.bit_length():
        a, b = b, a
    r = 0
    while b:
        r ^= a << (_degree(b & -b))
        b &= b - 1
    return r


def _divmod(a, b):
    if b == 0:
        raise ZeroDivisionError('division by zero polynomial')
    db = _degree(b)
    q = 0
    while a and _degree(a) >= db:
        shift = _degree(a) - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def _mod(a, b):
    return _divmod(a, b)[1]


def _gcd(a, b):
    while b:
        a, b = b, _mod(a, b)
    return a


def _exact_div(a, b):
    q, r = _divmod(a, b)
    if r:
        raise ValueError('inexact division')
    return q


def _invert(a, modulus):
    # extended Euclid; raises when gcd(a, modulus) != 1
    if modulus == 0:
        raise ZeroDivisionError('zero modulus')
    if modulus == 1:
        return 0
    r0, r1 = modulus, _mod(a, modulus)
    s0, s1 = 0, 1
    while r1:
        q, r = _divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 ^ _clmul(q, s1)
    if r0 != 1:
        raise ValueError('not invertible: operands share a factor')
    return _mod(s0, modulus)


def _eval_at(a, c):
    if c == 0:
        return a & 1
    if c == 1:
        return a.bit_count() & 1
    raise ValueError(f'evaluation point must be 0 or 1, got {c!r}')


def _mult_at(a, c):
    # multiplicity of the root c, by repeated exact division by (t - c)
    if a == 0:
        raise ValueError('multiplicity of the zero polynomial')
    if c == 0:
        return _degree(a & -a)
    if c != 1:
        raise ValueError(f'root must be 0 or 1, got {c!r}')
    count = 0
    while True:
        q, r = _divmod(a, 0b11)
        if r:
            return count
        a = q
        count += 1


def _from_terms(s):
    mask = 0
    for term in s.replace(' ', '').split('+'):
        if term == '0':
            continue
        if term == '1':
            mask ^= 1
        elif term == 't':
            mask ^= 2
        elif term.startswith('t^'):
            mask ^= 1 << int(term[2:])
        else:
            raise ValueError(f'ill formatted polynomial term {term!r}')
    return mask


def _to_terms(mask):
    if mask == 0:
        return '0'
    terms = []
    for i in range(_degree(mask), -1, -1):
        if (mask >> i) & 1:
            terms.append('1' if i == 0 else 't' if i == 1 else f't^{i}')
    return '+'.join(terms)


class BinaryPoly:
    """Immutable polynomial over GF(2), one int mask per instance."""

    __slots__ = ('mask',)

    def __init__(self, value=0):
        if isinstance(value, BinaryPoly):
            value = value.mask
        elif isinstance(value, str):
            value = _from_terms(value)
        elif not isinstance(value, int):
            raise TypeError(f'cannot build a polynomial from {value!r}')
        elif value < 0:
            raise ValueError(f'coefficient mask must be nonnegative, got {value!r}')
        object.__setattr__(self, 'mask', value)

    def __setattr__(self, name, value):
        raise AttributeError('BinaryPoly is immutable')

    @property
    def degree(self):
        """Degree as an int, or None for the zero polynomial."""
        return None if self.mask == 0 else _degree(self.mask)

    @property
    def is_zero(self):
        return self.mask == 0

    def eval_at(self, c):
        """Value at the point c of GF(2), as the int 0 or 1."""
        return _eval_at(self.mask, c)

    __call__ = eval_at

    def multiplicity_at(self, c):
        """Multiplicity of the root c, computed by repeated exact division."""
        return _mult_at(self.mask, c)

    def _coerce(value):
        if isinstance(value, BinaryPoly):
            return value.mask
        if isinstance(value, int) and value >= 0:
            return value
        if isinstance(value, str):
            return _from_terms(value)
        return None

    def __add__(self, other):
        mask = BinaryPoly._coerce(other)
        if mask is None:
            return NotImplemented
        return BinaryPoly(self.mask ^ mask)

    __radd__ = __add__
    __sub__ = __add__           # characteristic 2
    __rsub__ = __add__

    def __mul__(self, other):
        mask = BinaryPoly._coerce(other)
        if mask is None:
            return NotImplemented
        return BinaryPoly(_clmul(self.mask, mask))

    __rmul__ = __mul__

    def __divmod__(self, other):
        mask = BinaryPoly._coerce(other)
        if mask is None:
            return NotImplemented
        q, r = _divmod(self.mask, mask)
        return BinaryPoly(q), BinaryPoly(r)

    def __floordiv__(self, other):
        qr = self.__divmod__(other)
        return qr if qr is NotImplemented else qr[0]

    def __mod__(self, other):
        qr = self.__divmod__(other)
        return qr if qr is NotImplemented else qr[1]

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError('exponent must be a nonnegative int')
        r = 1
        b = self.mask
        while n:
            if n & 1:
                r = _clmul(r, b)
            b = _clmul(b, b)
            n >>= 1
        return BinaryPoly(r)

    def __eq__(self, other):
        mask = BinaryPoly._coerce(other)
        if mask is None:
            return NotImplemented
        return self.mask == mask

    def __hash__(self):
        return hash(('BinaryPoly', self.mask))

    def __bool__(self):
        return self.mask != 0

    def __str__(self):
        return _to_terms(self.mask)

    def __repr__(self):
        return _to_terms(self.mask)


def add(p, q):
    """Sum of two polynomials (XOR of masks)."""
    return BinaryPoly(p) + BinaryPoly(q)


def mul(p, q):
    """Product of two polynomials (carryless convolution)."""
    return BinaryPoly(p) * BinaryPoly(q)


def divrem(p, q):
    """Quotient and remainder with deg(remainder) < deg(q)."""
    return divmod(BinaryPoly(p), BinaryPoly(q))


def gcd(p, q):
    """Greatest common divisor; canonical since GF(2) polynomials are monic."""
    p, q = BinaryPoly(p), BinaryPoly(q)
    if p.is_zero and q.is_zero:
        raise ValueError('gcd(0, 0) is undefined')
    return BinaryPoly(_gcd(p.mask, q.mask))


def eval_at(p, c):
    return BinaryPoly(p).eval_at(c)


def multiplicity_at(p, c):
    return BinaryPoly(p).multiplicity_at(c)


def inverse_mod(p, modulus):
    """Inverse of p modulo the given polynomial; ValueError when not coprime."""
    return BinaryPoly(_invert(BinaryPoly(p).mask, BinaryPoly(modulus).mask))


ZERO = BinaryPoly(0)
ONE = BinaryPoly(1)
T = BinaryPoly(0b10)
T_PLUS_1 = BinaryPoly(0b11)
M = BinaryPoly(0b110)        # t*(t+1) = t^2+t, the conductor generator
