"""Simplicity, equivalence, and modular-group membership for braid pairs.

A classified pair is simple exactly when none of a short list of obstruction
polynomials in the eigenvalues (and root parameter) vanishes.  The criterion
lives in the Q scalars: for each index pair r != s, the triple product
P_r(A) P_s(B) P_r(A) is a scalar multiple Q_rs of the rank-one matrix P_r(A),
and the pair is simple iff every Q_rs is nonzero.  This module evaluates the
closed forms of Q_rs, recomputes them from the defining matrix identity as an
independent route, and cross-checks the verdict against a generated-algebra
span oracle that knows nothing about the closed forms.

Every check is exact; nothing here tolerates approximation.
"""

from itertools import combinations

from .fields import SymbolicField, root_of_unity
from .matrices import RowSpace, SquareMatrix, UniPoly, nullspace_dim, vec
from .reps import CLASSIFIED, RepSpec, RepSpecError, build_rep, structure_report


def p_poly(r, eigenvalues):
    """Monic polynomial with every eigenvalue except the r-th as a root.

    Degree is one less than the count; evaluated at A it projects (up to a
    scalar) onto the r-th eigenspace.  Indices are 1-based.
    """
    d = len(eigenvalues)
    if not 1 <= r <= d:
        raise ValueError("index %d out of range 1..%d" % (r, d))
    field = eigenvalues[0].field
    coeffs = [field.one]
    for i, lam in enumerate(eigenvalues, start=1):
        if i == r:
            continue
        # multiply the accumulated polynomial by (x - lam)
        nxt = [field.zero] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k + 1] = nxt[k + 1] + c
            nxt[k] = nxt[k] - lam * c
        coeffs = nxt
    return UniPoly(field, coeffs)


def q_closed(d, r, s, eigenvalues, gamma=None):
    """Closed form of the Q scalar for an index pair r != s.

    eigenvalues is the full 1-based list; for dimension 4 gamma must carry the
    SQUARE of the root parameter pair product, gamma^2 = l2*l3/D (only the
    square enters the formula), and for dimension 5 the fifth root itself.
    """
    if r == s:
        raise ValueError("Q is defined for distinct indices only")
    if not (1 <= r <= d and 1 <= s <= d):
        raise ValueError("indices out of range")
    if len(eigenvalues) != d:
        raise ValueError("need exactly %d eigenvalues" % d)
    lam = {i: eigenvalues[i - 1] for i in range(1, d + 1)}
    lr, ls = lam[r], lam[s]
    if d == 2:
        return -(lr ** 2) + lr * ls - ls ** 2
    if d == 3:
        k = ({1, 2, 3} - {r, s}).pop()
        lk = lam[k]
        return (lr ** 2 + ls * lk) * (ls ** 2 + lr * lk)
    if d == 4:
        if gamma is None:
            raise ValueError("dimension 4 needs the squared root parameter")
        g2 = gamma
        k, l = sorted({1, 2, 3, 4} - {r, s})
        lk, ll = lam[k], lam[l]
        return (
            -(g2.inv())
            * (lr ** 2 + g2) * (ls ** 2 + g2)
            * (g2 + lr * lk + ls * ll) * (g2 + lr * ll + ls * lk)
        )
    if d == 5:
        if gamma is None:
            raise ValueError("dimension 5 needs the root parameter")
        g = gamma
        g2 = g ** 2
        out = g ** -8
        out = out * (g2 + lr * g + lr ** 2) * (g2 + ls * g + ls ** 2)
        for k in range(1, 6):
            if k in (r, s):
                continue
            out = out * (g2 + lr * lam[k]) * (g2 + ls * lam[k])
        return out
    raise ValueError("Q scalars cover dimensions 2..5, got %d" % d)


def gamma_argument(spec):
    """The gamma value q_closed expects for this spec: none below dimension 4,
    the squared bridge l2*l3/D for dimension 4, the fifth root for dimension 5."""
    if spec.family != CLASSIFIED:
        raise RepSpecError("Q scalars apply to the classified family")
    if spec.dim <= 3:
        return None
    if spec.dim == 4:
        l1, l2, l3, l4 = spec.eigenvalues
        return l2 * l3 / spec.root_param
    return spec.root_param


def q_from_spec(spec, r, s):
    return q_closed(spec.dim, r, s, list(spec.eigenvalues), gamma_argument(spec))


def q_oracle(rep, r, s):
    """Q recomputed from the defining identity, with no closed form involved.

    Evaluates P_r at A and P_s at B, checks the triple product is an exact
    scalar multiple of P_r(A) entry by entry, and returns that scalar.  A zero
    P_r(A) or a failed proportionality marks input outside the oracle's
    domain and raises.
    """
    eigs = list(rep.spec.eigenvalues)
    pa = p_poly(r, eigs).eval_matrix(rep.A)
    pb = p_poly(s, eigs).eval_matrix(rep.B)
    if pa.is_zero():
        raise ValueError("P_r(A) vanished; the pair cannot be simple")
    triple = pa * pb * pa
    d = rep.dim
    ref = next(
        (i, j)
        for i in range(1, d + 1)
        for j in range(1, d + 1)
        if not pa.entry(i, j).is_zero()
    )
    q = triple.entry(*ref) / pa.entry(*ref)
    if triple != pa.scale(q):
        raise RuntimeError("triple product is not proportional to P_r(A)")
    return q


def q_corner(rep):
    """The (1,d) Q scalar read off the corner identity.

    P_1(B) P_d(A) is supported on the single (d,d) entry, whose value is the
    Q scalar; any other nonzero entry is an internal error.
    """
    eigs = list(rep.spec.eigenvalues)
    d = rep.dim
    m = p_poly(1, eigs).eval_matrix(rep.B) * p_poly(d, eigs).eval_matrix(rep.A)
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            if (i, j) != (d, d) and not m.entry(i, j).is_zero():
                raise RuntimeError("corner product has support off the (d,d) entry")
    return m.entry(d, d)


class Obstruction:
    """One evaluated obstruction generator: a label, the eigenvalue indices
    involved, and the exact value at the spec's parameters."""

    __slots__ = ("label", "indices", "value")

    def __init__(self, label, indices, value):
        self.label = label
        self.indices = indices
        self.value = value

    def __repr__(self):
        return "Obstruction(%s=%s)" % (self.label, self.value.render())


def obstruction_generators(spec):
    """The obstruction list for the spec's dimension, evaluated at its data.

    The pair is simple iff no value in this list is zero; the list is the
    irredundant generator set of the non-simple locus per dimension.  For
    dimension 5 the quadratic family g^2+g*l_i+l_i^2 is included for all five
    indices, not just the first four: the Q factorization is symmetric in all
    indices, so restricting to four would miss permuted zeros.
    """
    if spec.family != CLASSIFIED:
        raise RepSpecError("obstruction generators apply to the classified family")
    d = spec.dim
    lam = {i: spec.eigenvalues[i - 1] for i in range(1, d + 1)}
    out = []
    if d == 2:
        out.append(Obstruction(
            "l1^2-l1*l2+l2^2", [1, 2],
            lam[1] ** 2 - lam[1] * lam[2] + lam[2] ** 2,
        ))
        return out
    if d == 3:
        for i in range(1, 4):
            r, s = sorted({1, 2, 3} - {i})
            out.append(Obstruction(
                "l%d^2+l%d*l%d" % (i, r, s), [i, r, s],
                lam[i] ** 2 + lam[r] * lam[s],
            ))
        return out
    g = gamma_argument(spec)
    if d == 4:
        g2 = g  # the bridge value is already the square
        for i in range(1, 5):
            out.append(Obstruction(
                "l%d^2+g^2" % i, [i], lam[i] ** 2 + g2,
            ))
        for i, j, r, s in ((1, 2, 3, 4), (1, 3, 2, 4), (1, 4, 2, 3)):
            out.append(Obstruction(
                "g^2+l%d*l%d+l%d*l%d" % (i, j, r, s), [i, j, r, s],
                g2 + lam[i] * lam[j] + lam[r] * lam[s],
            ))
        return out
    g2 = g ** 2
    for i in range(1, 6):
        out.append(Obstruction(
            "g^2+g*l%d+l%d^2" % (i, i), [i],
            g2 + g * lam[i] + lam[i] ** 2,
        ))
    for i, j in combinations(range(1, 6), 2):
        out.append(Obstruction(
            "g^2+l%d*l%d" % (i, j), [i, j],
            g2 + lam[i] * lam[j],
        ))
    return out


class ClassificationReport:
    """Simplicity verdict plus any optional checks that were run.

    vanishing_factors holds the zero obstruction generators as (label,
    indices) pairs.  sl2z/psl2z, burnside, deligne_certificate and westbury
    stay None unless their checks ran.
    """

    __slots__ = (
        "simple", "vanishing_factors", "sl2z", "psl2z",
        "burnside", "deligne_certificate", "westbury",
    )

    def __init__(self, simple, vanishing_factors):
        self.simple = simple
        self.vanishing_factors = vanishing_factors
        self.sl2z = None
        self.psl2z = None
        self.burnside = None
        self.deligne_certificate = None
        self.westbury = None

    def to_json_dict(self):
        return {
            "simple": self.simple,
            "vanishing_factors": [
                {"generator": label, "indices": list(indices)}
                for label, indices in self.vanishing_factors
            ],
            "sl2z": self.sl2z,
            "psl2z": self.psl2z,
            "burnside": self.burnside,
            "deligne_certificate": self.deligne_certificate,
            "westbury": (
                None if self.westbury is None
                else {"n": list(self.westbury[:2]), "m": list(self.westbury[2:])}
            ),
        }


def is_simple(spec):
    """Classify the spec: simple iff every Q scalar with r != s is nonzero.

    The verdict is computed twice, from the Q closed forms and from the
    obstruction generator list; the two routes cover the same zero locus, so
    disagreement is an internal error, not a data-dependent outcome.
    """
    if spec.family != CLASSIFIED:
        raise RepSpecError("simplicity classification applies to the classified family")
    d = spec.dim
    q_all_nonzero = all(
        not q_from_spec(spec, r, s).is_zero()
        for r, s in combinations(range(1, d + 1), 2)
    )
    vanishing = [
        (gen.label, gen.indices)
        for gen in obstruction_generators(spec)
        if gen.value.is_zero()
    ]
    if q_all_nonzero != (not vanishing):
        raise RuntimeError(
            "Q scalars and obstruction generators disagree on the zero locus"
        )
    return ClassificationReport(q_all_nonzero, vanishing)


def burnside_oracle(rep):
    """Span oracle: do words in {A, B} span the full matrix ring?

    Closure iteration over an incrementally reduced row space; each round
    multiplies the newly added spanning matrices by A and B on the right.
    The chain must stabilize within dim^2 strict growth steps, so exceeding
    twice that many rounds is an internal error.  Specialized backends only.
    """
    field = rep.field
    if isinstance(field, SymbolicField):
        raise ValueError("the span oracle needs specialized scalars")
    d = rep.dim
    target = d * d
    space = RowSpace(field, target)
    ident = SquareMatrix.identity(field, d)
    space.insert(vec(ident))
    frontier = [ident]
    rounds = 0
    while frontier and space.rank < target:
        rounds += 1
        if rounds > 2 * target:
            raise RuntimeError("span closure failed to stabilize")
        fresh = []
        for m in frontier:
            for gen in (rep.A, rep.B):
                prod = m * gen
                if space.insert(vec(prod)):
                    fresh.append(prod)
        frontier = fresh
    return space.rank == target


def hom_space_dim(rep1, rep2):
    """Dimension of the space of intertwiners X with X A1 = A2 X, X B1 = B2 X.

    Assembled as an explicit 2*d^2 x d^2 exact linear system; its nullity is
    1 between equivalent simple pairs, 0 between inequivalent ones.
    """
    if rep1.dim != rep2.dim:
        raise ValueError("intertwiner space needs equal dimensions")
    d = rep1.dim
    field = rep1.field
    rows = []
    for m1, m2 in ((rep1.A, rep2.A), (rep1.B, rep2.B)):
        for i in range(1, d + 1):
            for j in range(1, d + 1):
                row = [field.zero] * (d * d)
                for k in range(1, d + 1):
                    # coefficient of x_{ik} from X*M1, of x_{kj} from -M2*X
                    row[(i - 1) * d + (k - 1)] = row[(i - 1) * d + (k - 1)] + m1.entry(k, j)
                    row[(k - 1) * d + (j - 1)] = row[(k - 1) * d + (j - 1)] - m2.entry(i, k)
                rows.append(row)
    return nullspace_dim(field, rows, d * d)


def sl2z_flags(spec):
    """Whether the pair factors through the modular group or its quotient.

    The central scalar delta is read from the structure report; the pair
    descends to SL(2,Z) iff delta^2 = 1 and to PSL(2,Z) iff delta = 1.
    Symbolic specs are rejected: equality with 1 is not decidable for free
    parameters.
    """
    if isinstance(spec.field, SymbolicField):
        raise ValueError(
            "modular-group flags need specialized scalars; "
            "delta = 1 is undecidable with free parameters"
        )
    rep = build_rep(spec)
    delta = structure_report(rep).delta
    one = spec.field.one
    return (delta * delta == one, delta == one)


def deligne_check(spec):
    """Sufficient simplicity certificate from eigenvalue products.

    A proper nonzero submodule of size r would force
    (product of all eigenvalues)^(6r) = (product over the submodule)^(6d).
    If that equation fails for every proper nonempty index subset, no such
    submodule can exist and the certificate (True) is issued.  One-way only:
    False means no certificate, not non-simplicity.
    """
    if isinstance(spec.field, SymbolicField):
        raise ValueError("the certificate check needs specialized scalars")
    if spec.family != CLASSIFIED:
        raise RepSpecError("the certificate check applies to the classified family")
    d = spec.dim
    total = spec.eigenvalue_product()
    for r in range(1, d):
        lhs = total ** (6 * r)
        for subset in combinations(spec.eigenvalues, r):
            sub = subset[0]
            for lam in subset[1:]:
                sub = sub * lam
            if lhs == sub ** (6 * d):
                return False
    return True


def westbury_dims(rep, sixth_root):
    """Eigenspace dimensions of the normalized order-2 and order-3 elements.

    Scaling A and B by the inverse of a sixth root of the central scalar
    makes ABA an involution and AB of order three.  Returns
    (n1, n2, m1, m2, m3): the +1/-1 eigenspace dimensions of normalized ABA
    and the eigenspace dimensions of normalized AB at the three cube roots of
    unity (1, omega, omega^2).  Needs a backend containing a primitive cube
    root of unity.
    """
    field = rep.field
    delta = structure_report(rep).delta
    if sixth_root ** 6 != delta:
        raise ValueError("sixth_root^6 must equal the central scalar")
    inv = sixth_root.inv()
    ap = rep.A.scale(inv)
    bp = rep.B.scale(inv)
    d = rep.dim
    ident = SquareMatrix.identity(field, d)

    def eigdim(m, value):
        shifted = m - ident.scale(value)
        return nullspace_dim(field, [list(r) for r in shifted.rows], d)

    involution = ap * bp * ap
    n1 = eigdim(involution, field.one)
    n2 = eigdim(involution, -field.one)
    omega = root_of_unity(field, 3)
    rotation = ap * bp
    ms = [eigdim(rotation, field.one), eigdim(rotation, omega), eigdim(rotation, omega * omega)]
    if n1 + n2 != d or sum(ms) != d:
        raise RuntimeError("eigenspace dimensions do not fill the space")
    return (n1, n2, ms[0], ms[1], ms[2])
