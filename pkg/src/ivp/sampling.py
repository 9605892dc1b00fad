"""Deterministic random generators for test elements of the tower of rings.

Every function takes a random.Random instance, so a fixed seed fixes the
whole stream.  Degree limits keep the masks word sized; the generators
trade uniformity over the full ring for uniform coverage of the residue
data that the membership predicates actually inspect.
"""

from .gf2poly import BinaryPoly
from .localfield import RatFunc, T_GEN, M_GEN, is_member, T


def random_polynomial(rng, max_deg=8):
    """Uniform polynomial of degree below max_deg (the zero mask included)."""
    return BinaryPoly(rng.randrange(1 << max_deg))


def random_s_polynomial(rng, max_deg=8):
    """Polynomial nonvanishing at 0 and 1, i.e. a member of the inverted set."""
    while True:
        mask = rng.randrange(1, 1 << max_deg) | 1
        if (mask.bit_count() & 1) == 1:
            return BinaryPoly(mask)


def random_t_element(rng, max_deg=8):
    """Element of T as a polynomial over a random invertible denominator."""
    return RatFunc(random_polynomial(rng, max_deg), random_s_polynomial(rng, max_deg))


def random_d_element(rng):
    """Element of D in pinned form: a uniform bit plus t(t+1) times a
    uniform polynomial of degree < 8."""
    return RatFunc(rng.getrandbits(1)) + M_GEN * random_polynomial(rng, 8)


def random_d_element_general(rng, max_deg=8):
    """Element of D whose M-part may carry a denominator."""
    return RatFunc(rng.getrandbits(1)) + M_GEN * random_t_element(rng, max_deg)


def random_m_element(rng, max_deg=8):
    """Element of the shared maximal ideal M = t(t+1)T."""
    return M_GEN * random_t_element(rng, max_deg)


def random_nonintegral_element(rng, max_pole=3, max_deg=6):
    """Element outside T with pole order at most max_pole at each place."""
    while True:
        a = rng.randrange(max_pole + 1)
        b = rng.randrange(max_pole + 1)
        if a == 0 and b == 0:
            continue
        den = (T_GEN ** a) * ((T_GEN + RatFunc(1)) ** b) * random_s_polynomial(rng, max_deg)
        x = RatFunc(random_polynomial(rng, max_deg), den)
        if x and not is_member(x, T):
            return x
