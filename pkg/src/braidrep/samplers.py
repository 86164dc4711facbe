"""Seeded parameter samplers for sweeps and oracle cross-checks.

All samplers take an explicit random.Random instance so a fixed seed
reproduces the exact parameter stream.  Values are small rationals (bounded
numerator and denominator) to keep exact arithmetic cheap; dependent
parameters are derived so the family constraints hold by construction.
"""

from fractions import Fraction

from .fields import RationalField, cyclotomic_field, root_of_unity
from .reps import CLASSIFIED, RepSpec


def small_fraction(rng, bound=10):
    """Nonzero rational with |numerator| and denominator at most bound."""
    num = rng.choice([n for n in range(-bound, bound + 1) if n != 0])
    den = rng.randint(1, bound)
    return Fraction(num, den)


def random_classified_spec(d, rng, field=None, bound=10):
    """Random specialized spec for the classified family.

    For d=4 and d=5 the last eigenvalue is derived from the root parameter,
    so the family constraint holds by construction.
    """
    if field is None:
        field = RationalField()
    if d in (2, 3):
        eigs = [field.const(small_fraction(rng, bound)) for _ in range(d)]
        return RepSpec(CLASSIFIED, eigs)
    if d == 4:
        l1, l2, l3 = (field.const(small_fraction(rng, bound)) for _ in range(3))
        root = field.const(small_fraction(rng, bound))
        l4 = l2 * l3 / (l1 * root ** 2)
        return RepSpec(CLASSIFIED, [l1, l2, l3, l4], root_param=root)
    if d == 5:
        l1, l2, l3, l4 = (field.const(small_fraction(rng, bound)) for _ in range(4))
        g = field.const(small_fraction(rng, bound))
        l5 = g ** 5 / (l1 * l2 * l3 * l4)
        return RepSpec(CLASSIFIED, [l1, l2, l3, l4, l5], root_param=g)
    raise ValueError("classified family covers dimensions 2..5, got %d" % d)


def degenerate_classified_spec(d, rng, field=None, bound=10):
    """Spec sitting on the non-simple locus: one obstruction factor is zero.

    One eigenvalue (or the root parameter) is solved from a vanishing factor
    rather than rejection-sampled, so coverage of the locus is guaranteed.
    Dimension 2 has no rational zeros, so it defaults to the sixth-cyclotomic
    field; other dimensions default to the rationals.
    """
    if d == 2:
        # l1^2 - l1*l2 + l2^2 = 0 at l2 = z*l1 for a primitive sixth root z
        if field is None:
            field = cyclotomic_field(6)
        z = root_of_unity(field, 6)
        l1 = field.const(small_fraction(rng, bound))
        return RepSpec(CLASSIFIED, [l1, z * l1])
    if field is None:
        field = RationalField()
    if d == 3:
        # l1^2 + l2*l3 = 0 at l3 = -l1^2/l2
        l1 = field.const(small_fraction(rng, bound))
        l2 = field.const(small_fraction(rng, bound))
        return RepSpec(CLASSIFIED, [l1, l2, -(l1 ** 2) / l2])
    if d == 4:
        # the square of the root parameter is l2*l3/D; choosing D = -l2*l3/l1^2
        # makes that square equal -l1^2, so l1^2 + gamma^2 = 0
        l1, l2, l3 = (field.const(small_fraction(rng, bound)) for _ in range(3))
        root = -(l2 * l3) / l1 ** 2
        l4 = l2 * l3 / (l1 * root ** 2)
        return RepSpec(CLASSIFIED, [l1, l2, l3, l4], root_param=root)
    if d == 5:
        # gamma^2 + l1*l2 = 0 at l2 = -gamma^2/l1
        l1 = field.const(small_fraction(rng, bound))
        g = field.const(small_fraction(rng, bound))
        l2 = -(g ** 2) / l1
        l3, l4 = (field.const(small_fraction(rng, bound)) for _ in range(2))
        l5 = g ** 5 / (l1 * l2 * l3 * l4)
        return RepSpec(CLASSIFIED, [l1, l2, l3, l4, l5], root_param=g)
    raise ValueError("classified family covers dimensions 2..5, got %d" % d)


def central_unit_spec(d, rng, field=None, bound=10, square_only=False):
    """Spec whose central scalar is 1 (or, with square_only, only its square).

    The central scalar is -(l1*l2)^3 for d=2, (l1*l2*l3)^2 for d=3,
    -(l2*l3/D)^3 for d=4 and gamma^6 for d=5; each case pins one parameter so
    the scalar collapses to 1.  With square_only=True the d=2 and d=4 cases
    instead leave the sign free, giving central scalar -1 half the time.
    """
    if field is None:
        field = RationalField()
    if d == 2:
        l1 = field.const(small_fraction(rng, bound))
        sign = field.const(rng.choice((1, -1))) if square_only else field.const(-1)
        return RepSpec(CLASSIFIED, [l1, sign / l1])
    if d == 3:
        l1, l2 = (field.const(small_fraction(rng, bound)) for _ in range(2))
        sign = field.const(rng.choice((1, -1)))
        return RepSpec(CLASSIFIED, [l1, l2, sign / (l1 * l2)])
    if d == 4:
        l1, l2, l3 = (field.const(small_fraction(rng, bound)) for _ in range(3))
        sign = field.const(rng.choice((1, -1))) if square_only else field.const(-1)
        root = sign * l2 * l3
        l4 = l2 * l3 / (l1 * root ** 2)
        return RepSpec(CLASSIFIED, [l1, l2, l3, l4], root_param=root)
    if d == 5:
        l1, l2, l3, l4 = (field.const(small_fraction(rng, bound)) for _ in range(4))
        g = field.const(rng.choice((1, -1)))
        l5 = g ** 5 / (l1 * l2 * l3 * l4)
        return RepSpec(CLASSIFIED, [l1, l2, l3, l4, l5], root_param=g)
    raise ValueError("classified family covers dimensions 2..5, got %d" % d)


def random_binomial_params(size, rng, field=None, bound=10):
    """Parameter list lambda_0..lambda_{size-1} with constant opposite products."""
    if field is None:
        field = RationalField()
    n = size - 1
    if size % 2 == 1:
        mid = field.const(small_fraction(rng, bound))
        c = mid * mid
    else:
        c = field.const(small_fraction(rng, bound))
        mid = None
    params = [None] * size
    for i in range(size // 2):
        x = field.const(small_fraction(rng, bound))
        params[i] = x
        params[n - i] = c / x
    if mid is not None:
        params[size // 2] = mid
    return params, c
