"""Construction of braid matrix pairs and their structural identities.

Two families are built here.  The classified family gives, for each dimension
2..5, the pair (A, B) of triangular matrices determined by the eigenvalues of
A (plus a root parameter in dimensions 4 and 5); these realize every simple
pair in those dimensions.  The binomial family is a separate parametric family
in any size, with entries built from binomial coefficients.

Conventions used throughout: A is upper triangular with diagonal
(lambda_1..lambda_d), B is lower triangular with the reversed diagonal, and
bar(i) = d+1-i.  The product ABA is then skew-diagonal; its entries sigma_i
carry a square root of the central scalar delta up to rescaling, and all
reported identities are stated in rescaling-invariant form (no radicals are
ever constructed).
"""

from fractions import Fraction
import json
import math

from .fields import (
    NumberField,
    RationalField,
    Scalar,
    SymbolicField,
    VarContext,
)
from .matrices import SquareMatrix, nullspace_basis

CLASSIFIED = "classified"
BINOMIAL = "binomial"


class RepSpecError(ValueError):
    """Raised when representation parameters violate a family constraint."""


class RepSpec:
    """Validated parameter set for one representation.

    classified: dim 2..5, eigenvalues lambda_1..lambda_d, root_param is D for
    dim 4 (D^2 = l2*l3/(l1*l4)) and gamma for dim 5 (gamma^5 = prod of
    eigenvalues).  binomial: dim is the matrix size (2..8), eigenvalues is the
    parameter list lambda_0..lambda_{size-1} with lambda_i*lambda_{size-1-i}
    constant.
    """

    __slots__ = ("family", "dim", "field", "eigenvalues", "root_param")

    def __init__(self, family, eigenvalues, root_param=None):
        eigenvalues = tuple(eigenvalues)
        if not eigenvalues:
            raise RepSpecError("no eigenvalues given")
        field = eigenvalues[0].field
        for lam in eigenvalues:
            if not isinstance(lam, Scalar):
                raise RepSpecError("eigenvalues must be Scalars")
            if lam.is_zero():
                raise RepSpecError("zero eigenvalue")
        d = len(eigenvalues)
        if family == CLASSIFIED:
            if not 2 <= d <= 5:
                raise RepSpecError(f"classified family needs 2..5 eigenvalues, got {d}")
            if d <= 3:
                if root_param is not None:
                    raise RepSpecError("root parameter only applies to dim 4 and 5")
            else:
                if root_param is None:
                    raise RepSpecError(f"dim {d} needs a root parameter")
                if root_param.is_zero():
                    raise RepSpecError("zero root parameter")
                if d == 4:
                    l1, l2, l3, l4 = eigenvalues
                    if root_param ** 2 != l2 * l3 / (l1 * l4):
                        raise RepSpecError("root parameter squared must equal l2*l3/(l1*l4)")
                else:
                    prod = eigenvalues[0]
                    for lam in eigenvalues[1:]:
                        prod = prod * lam
                    if root_param ** 5 != prod:
                        raise RepSpecError("root parameter to the 5th must equal the eigenvalue product")
        elif family == BINOMIAL:
            if not 2 <= d <= 8:
                raise RepSpecError(f"binomial family supports sizes 2..8, got {d}")
            if root_param is not None:
                raise RepSpecError("binomial family takes no root parameter")
            c = eigenvalues[0] * eigenvalues[-1]
            for i in range(d):
                if eigenvalues[i] * eigenvalues[d - 1 - i] != c:
                    raise RepSpecError("opposite parameters must have constant product")
        else:
            raise RepSpecError(f"unknown family {family!r}")
        self.family = family
        self.dim = d
        self.field = field
        self.eigenvalues = eigenvalues
        self.root_param = root_param

    def eigenvalue_product(self):
        prod = self.eigenvalues[0]
        for lam in self.eigenvalues[1:]:
            prod = prod * lam
        return prod

    def binomial_constant(self):
        if self.family != BINOMIAL:
            raise RepSpecError("not a binomial spec")
        return self.eigenvalues[0] * self.eigenvalues[-1]


class Rep:
    """A matrix pair together with the spec that produced (or describes) it."""

    __slots__ = ("spec", "A", "B")

    def __init__(self, spec, a, b):
        if a.dim != spec.dim or b.dim != spec.dim:
            raise RepSpecError("matrix size does not match spec dimension")
        self.spec = spec
        self.A = a
        self.B = b

    @property
    def dim(self):
        return self.spec.dim

    @property
    def field(self):
        return self.spec.field


def symbolic_classified_spec(d):
    """Fully symbolic spec for the classified family.

    Free variables: d=2,3 all eigenvalues; d=4 (l1,l2,l3,D) with l4
    eliminated via the root constraint; d=5 (l1..l4,g) with l5 eliminated.
    Returns (field, spec).
    """
    if d == 2:
        field = SymbolicField(VarContext(("l1", "l2")))
        eigs = [field.var("l1"), field.var("l2")]
        return field, RepSpec(CLASSIFIED, eigs)
    if d == 3:
        field = SymbolicField(VarContext(("l1", "l2", "l3")))
        eigs = [field.var(n) for n in ("l1", "l2", "l3")]
        return field, RepSpec(CLASSIFIED, eigs)
    if d == 4:
        field = SymbolicField(VarContext(("l1", "l2", "l3", "D")))
        l1, l2, l3, dd = (field.var(n) for n in ("l1", "l2", "l3", "D"))
        l4 = l2 * l3 / (l1 * dd ** 2)
        return field, RepSpec(CLASSIFIED, [l1, l2, l3, l4], root_param=dd)
    if d == 5:
        field = SymbolicField(VarContext(("l1", "l2", "l3", "l4", "g")))
        l1, l2, l3, l4, g = (field.var(n) for n in ("l1", "l2", "l3", "l4", "g"))
        l5 = g ** 5 / (l1 * l2 * l3 * l4)
        return field, RepSpec(CLASSIFIED, [l1, l2, l3, l4, l5], root_param=g)
    raise RepSpecError(f"no classified family in dimension {d}")


def build_rep(spec):
    """Construct the explicit matrix pair for a classified spec."""
    if spec.family != CLASSIFIED:
        raise RepSpecError("build_rep expects a classified spec; use build_binomial_rep")
    field = spec.field
    z = field.zero
    eigs = spec.eigenvalues
    d = spec.dim
    if d == 2:
        l1, l2 = eigs
        a = SquareMatrix(field, [[l1, l1], [z, l2]])
        b = SquareMatrix(field, [[l2, z], [-l2, l1]])
    elif d == 3:
        l1, l2, l3 = eigs
        top = l1 * l3 / l2 + l2
        a = SquareMatrix(field, [
            [l1, top, l2],
            [z, l2, l2],
            [z, z, l3],
        ])
        b = SquareMatrix(field, [
            [l3, z, z],
            [-l2, l2, z],
            [l2, -top, l1],
        ])
    elif d == 4:
        l1, l2, l3, l4 = eigs
        dd = spec.root_param
        di = dd ** -1
        a = SquareMatrix(field, [
            [l1, (1 + di + di ** 2) * l2, (1 + di + di ** 2) * l3, l4],
            [z, l2, (1 + di) * l3, l4],
            [z, z, l3, l4],
            [z, z, z, l4],
        ])
        b = SquareMatrix(field, [
            [l4, z, z, z],
            [-l3, l3, z, z],
            [dd * l2, -(dd + 1) * l2, l2, z],
            [-dd ** 3 * l1, (dd ** 3 + dd ** 2 + dd) * l1, -(dd ** 2 + dd + 1) * l1, l1],
        ])
    else:
        l1, l2, l3, l4, l5 = eigs
        g = spec.root_param
        a15 = g ** 3 / (l1 * l5)
        a34 = a15 + l3
        a24 = a15 + l3 + g
        a23 = g + l3 + g ** 2 / l3
        a14 = (l2 * l4 / g ** 2 + 1) * (l3 + g ** 3 / (l2 * l4))
        a12 = (1 + g ** 2 / (l2 * l4)) * (l2 + g ** 3 / (l3 * l4))
        a13 = (g ** 2 / l3 + l3 + g) * (1 + l1 * l5 / g ** 2)
        a = SquareMatrix(field, [
            [l1, a12, a13, a14, a15],
            [z, l2, a23, a24, a15],
            [z, z, l3, a34, a15],
            [z, z, z, l4, l4],
            [z, z, z, z, l5],
        ])
        # B is forced by the skew symmetry b_ij = (-1)^(i+j) a_(bar i, bar j),
        # which holds exactly in this dimension (odd d keeps it radical-free)
        b = SquareMatrix.from_function(
            field, 5,
            lambda i, j: (-1) ** (i + j) * a.entry(6 - i, 6 - j),
        )
    return Rep(spec, a, b)


def build_binomial_rep(size, params, c=None):
    """Binomial-coefficient family on `size` basis vectors.

    params is lambda_0..lambda_{size-1} with lambda_i*lambda_{bar i} = c,
    bar i = size-1-i.  A_ij = C(bar i, bar j) lambda_j, B_ij =
    (-1)^(i+j) C(i, j) lambda_{bar i} with 0-based indices.
    """
    params = tuple(params)
    if len(params) != size:
        raise RepSpecError("need exactly one parameter per basis vector")
    spec = RepSpec(BINOMIAL, params)
    if c is not None and c != spec.binomial_constant():
        raise RepSpecError("constant does not match the parameter products")
    field = spec.field
    n = size - 1

    def a_entry(i, j):
        # 1-based from SquareMatrix; shift to the 0-based convention
        i, j = i - 1, j - 1
        return field.const(math.comb(n - i, n - j)) * params[j]

    def b_entry(i, j):
        i, j = i - 1, j - 1
        return field.const((-1) ** (i + j) * math.comb(i, j)) * params[n - i]

    a = SquareMatrix.from_function(field, size, a_entry)
    b = SquareMatrix.from_function(field, size, b_entry)
    return Rep(spec, a, b)


def verify_braid(rep):
    return rep.A * rep.B * rep.A == rep.B * rep.A * rep.B


def verify_ordered_triangular(rep):
    """A upper triangular with eigenvalue i at (i,i); B lower with the reverse."""
    a, b, d = rep.A, rep.B, rep.dim
    eigs = rep.spec.eigenvalues
    for i in range(1, d + 1):
        if a.entry(i, i) != eigs[i - 1] or b.entry(i, i) != eigs[d - i]:
            return False
        for j in range(1, i):
            if not a.entry(i, j).is_zero():
                return False
        for j in range(i + 1, d + 1):
            if not b.entry(i, j).is_zero():
                return False
    return True


class StructureReport:
    """Outcome of the structural identity checks on a braid pair.

    sigma_i denotes (ABA)_{i, bar i}.  All identity checks are stated in the
    rescaling-invariant form, so they hold for any valid basis choice:

      skew_diag_ok   ABA has zero entries off the skew diagonal
      delta          the scalar with (ABA)^2 = delta * I
      delta_power_ok delta^d = det(A)^6
      b_symmetry_ok  sigma_j * b_ij = sigma_i * a_{bar i, bar j}
      ba_skew_ok     lambda_i * (BA)_{i, bar i} = sigma_i
      ba_zero_ok     (BA)_{ij} = 0 whenever i+j > d+1
      corner_ok      a_{1d} * lambda_1 * lambda_d = sigma_1

    strict_symmetry reports whether the stronger per-entry form
    b_ij = (-1)^(i+j) a_{bar i, bar j} holds verbatim; it does for the odd
    dimensions built here and fails for the even-dimensional normalizations,
    whose basis scaling absorbs a square root.  sign_pattern_ok checks, for
    symbolic input only, that each sigma_i is a single Laurent term and the
    coefficient signs alternate relative to sigma_1; on specialized input it
    is None (the sign pattern is not basis-invariant there).
    """

    __slots__ = (
        "braid_ok", "triangular_ok", "skew_diag_ok", "sigma", "sigmas",
        "delta", "delta_power_ok", "b_symmetry_ok", "ba_skew_ok",
        "ba_zero_ok", "corner_ok", "strict_symmetry", "sign_pattern_ok",
    )

    def all_ok(self):
        core = (
            self.braid_ok, self.triangular_ok, self.skew_diag_ok,
            self.delta_power_ok, self.b_symmetry_ok, self.ba_skew_ok,
            self.ba_zero_ok, self.corner_ok,
        )
        if not all(core):
            return False
        return self.sign_pattern_ok is not False

    def to_json_dict(self):
        return {
            "braid_ok": self.braid_ok,
            "triangular_ok": self.triangular_ok,
            "skew_diag_ok": self.skew_diag_ok,
            "sigma": self.sigma.render(),
            "delta": self.delta.render(),
            "delta_power_ok": self.delta_power_ok,
            "b_symmetry_ok": self.b_symmetry_ok,
            "ba_skew_ok": self.ba_skew_ok,
            "ba_zero_ok": self.ba_zero_ok,
            "corner_ok": self.corner_ok,
            "strict_symmetry": self.strict_symmetry,
            "sign_pattern_ok": self.sign_pattern_ok,
        }


def structure_report(rep):
    """Run every structural check; raises if the braid relation fails."""
    if not verify_braid(rep):
        raise ValueError("braid relation fails; no structure to report")
    a, b, d = rep.A, rep.B, rep.dim
    field = rep.field
    eigs = rep.spec.eigenvalues
    report = StructureReport()
    report.braid_ok = True
    report.triangular_ok = verify_ordered_triangular(rep)

    aba = a * b * a
    report.skew_diag_ok = all(
        aba.entry(i, j).is_zero()
        for i in range(1, d + 1)
        for j in range(1, d + 1)
        if j != d + 1 - i
    )
    sigmas = [aba.entry(i, d + 1 - i) for i in range(1, d + 1)]
    report.sigmas = tuple(sigmas)
    report.sigma = sigmas[0]

    sq = aba * aba
    if not sq.is_scalar():
        raise ValueError("ABA squared is not scalar")
    delta = sq.scalar_value()
    report.delta = delta
    report.delta_power_ok = delta ** d == a.det() ** 6

    report.b_symmetry_ok = all(
        sigmas[j - 1] * b.entry(i, j) == sigmas[i - 1] * a.entry(d + 1 - i, d + 1 - j)
        for i in range(1, d + 1)
        for j in range(1, d + 1)
    )
    report.strict_symmetry = all(
        b.entry(i, j) == (-1) ** (i + j) * a.entry(d + 1 - i, d + 1 - j)
        for i in range(1, d + 1)
        for j in range(1, d + 1)
    )

    ba = b * a
    report.ba_skew_ok = all(
        eigs[i - 1] * ba.entry(i, d + 1 - i) == sigmas[i - 1] for i in range(1, d + 1)
    )
    report.ba_zero_ok = all(
        ba.entry(i, j).is_zero()
        for i in range(1, d + 1)
        for j in range(1, d + 1)
        if i + j > d + 1
    )
    report.corner_ok = a.entry(1, d) * eigs[0] * eigs[d - 1] == sigmas[0]

    report.sign_pattern_ok = None
    if isinstance(field, SymbolicField):
        signs = []
        for s in sigmas:
            num, den = s.value
            if not den.is_one() or len(num.terms) != 1:
                signs = None
                break
            coeff = next(iter(num.terms.values()))
            signs.append(1 if coeff > 0 else -1)
        if signs is None:
            report.sign_pattern_ok = False
        else:
            report.sign_pattern_ok = all(
                signs[i] == signs[0] * (-1) ** i for i in range(d)
            )
    return report


def verify_lemma_identities(rep):
    """The basic consequences of the braid relation, checked by multiplication.

    Returns a dict of booleans: conjugation by ABA swaps A and B; the
    quotient identities ABA(AB)^-1 = B and BAB(BA)^-1 = A; (ABA)^2 is the
    scalar delta with (ABA)^-1 = delta^-1 ABA; and, when the eigenvalues are
    pairwise distinct, ABA maps each eigenvector of A to an eigenvector of B
    with the same eigenvalue (None when eigenvalues repeat).
    """
    a, b, d = rep.A, rep.B, rep.dim
    field = rep.field
    aba = a * b * a
    out = {}
    aba_inv = aba.inverse()
    out["conjugation_swaps"] = (aba * a * aba_inv == b) and (aba * b * aba_inv == a)
    out["quotient_identities"] = (
        aba * (a * b).inverse() == b and (b * a * b) * (b * a).inverse() == a
    )
    sq = aba * aba
    ok = sq.is_scalar()
    if ok:
        delta = sq.scalar_value()
        ok = aba_inv == aba.scale(delta.inv())
    out["center_scalar"] = ok

    eigs = rep.spec.eigenvalues
    distinct = all(
        eigs[i] != eigs[j] for i in range(d) for j in range(i + 1, d)
    )
    if not distinct:
        out["eigenvector_transport"] = None
        return out
    transport = True
    ident = SquareMatrix.identity(field, d)
    for i in range(d):
        shifted = a - ident.scale(eigs[i])
        basis = nullspace_basis(field, [list(r) for r in shifted.rows], d)
        if len(basis) != 1:
            transport = False
            break
        v = basis[0]
        image = [_mat_vec(aba, v, k) for k in range(d)]
        b_image = [_mat_vec(b, image, k) for k in range(d)]
        if any(b_image[k] != eigs[i] * image[k] for k in range(d)):
            transport = False
            break
    out["eigenvector_transport"] = transport
    return out


def _mat_vec(m, v, k):
    acc = m.field.zero
    for j in range(m.dim):
        acc = acc + m.rows[k][j] * v[j]
    return acc


def verify_skew_criterion(a, s, c):
    """Sufficient criterion for the braid relation from a skew involution.

    a must be upper triangular and s skew-diagonal with s^2 = c*I; sets
    B = s a s^-1 and tests (i) (BA)_{ij} = 0 for i+j > d+1 and (ii)
    lambda_i (BA)_{i, bar i} = kappa * s_{i, bar i} for a single constant
    kappa.  Condition (ii) makes ABA a scalar multiple of s, which is what
    forces BAB = S(ABA)S^-1 = ABA; the scalar need not equal c itself (for
    the binomial family it is (-1)^(dim-1) * c).  When both hold the braid
    relation is certified by direct multiplication (an internal failure there
    raises, it cannot happen if the criterion is sound).
    """
    d = a.dim
    field = a.field
    for i in range(1, d + 1):
        for j in range(1, i):
            if not a.entry(i, j).is_zero():
                raise ValueError("first matrix must be upper triangular")
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            if j != d + 1 - i and not s.entry(i, j).is_zero():
                raise ValueError("conjugator must be skew-diagonal")
    if c.is_zero():
        raise ValueError("conjugator squared scalar must be nonzero")
    if s * s != SquareMatrix.identity(field, d).scale(c):
        raise ValueError("conjugator squared must be the given scalar")
    b = s * a * s.inverse()
    ba = b * a
    for i in range(1, d + 1):
        for j in range(1, d + 1):
            if i + j > d + 1 and not ba.entry(i, j).is_zero():
                return False
    kappa = a.entry(1, 1) * ba.entry(1, d) / s.entry(1, d)
    for i in range(2, d + 1):
        lhs = a.entry(i, i) * ba.entry(i, d + 1 - i)
        if lhs != kappa * s.entry(i, d + 1 - i):
            return False
    if a * b * a != b * a * b:
        raise ValueError("criterion hypotheses held but the braid relation failed")
    return True


def rescale_basis(rep, diag):
    """Conjugate by diag(diag); entries must be nonzero and palindromic."""
    diag = list(diag)
    d = rep.dim
    if len(diag) != d:
        raise ValueError("need one scale per basis vector")
    for i in range(d):
        x = diag[i]
        if not isinstance(x, Scalar) or x.is_zero():
            raise ValueError("scales must be nonzero Scalars")
        if x != diag[d - 1 - i]:
            raise ValueError("scales must be palindromic")

    def conj(m):
        return SquareMatrix.from_function(
            rep.field, d,
            lambda i, j: diag[i - 1] * m.entry(i, j) / diag[j - 1],
        )

    return Rep(rep.spec, conj(rep.A), conj(rep.B))


def binomial_identity_check(d):
    """Exact integer check of the alternating binomial convolution identity.

    sum_k (-1)^(i+k) C(i,k) C(d-k, d-j) = (-1)^i C(d-i, j) for 0<=i,j<=d.
    The right side vanishes exactly when i+j > d, which is what makes the
    product BA of the binomial pair supported on and above the skew diagonal.
    """
    if d > 12:
        raise ValueError("identity check capped at 12")
    for i in range(d + 1):
        for j in range(d + 1):
            total = sum(
                (-1) ** (i + k) * math.comb(i, k) * math.comb(d - k, d - j)
                for k in range(d + 1)
            )
            if total != (-1) ** i * math.comb(d - i, j):
                return False
    return True


# --- serialization -----------------------------------------------------------

def rep_to_json_dict(rep):
    field = rep.field
    out = {
        "dim": rep.dim,
        "family": rep.spec.family,
        "variables": list(field.context.names) if isinstance(field, SymbolicField) else [],
    }
    if isinstance(field, NumberField):
        out["modulus"] = field.modulus_render()
    out["eigenvalues"] = [lam.render() for lam in rep.spec.eigenvalues]
    out["root_param"] = rep.spec.root_param.render() if rep.spec.root_param is not None else None
    out["A"] = rep.A.render()
    out["B"] = rep.B.render()
    return out


def rep_to_json(rep, indent=2):
    return json.dumps(rep_to_json_dict(rep), indent=indent)


def rep_from_json_dict(data):
    variables = data.get("variables") or []
    if variables:
        field = SymbolicField(VarContext(tuple(variables)))
    elif data.get("modulus"):
        field = NumberField.from_modulus_string(data["modulus"])
    else:
        field = RationalField()
    eigs = [field.parse(s) for s in data["eigenvalues"]]
    root = field.parse(data["root_param"]) if data.get("root_param") else None
    spec = RepSpec(data["family"], eigs, root_param=root)
    if spec.dim != data["dim"]:
        raise RepSpecError("dimension does not match eigenvalue count")
    a = SquareMatrix(field, [[field.parse(s) for s in row] for row in data["A"]])
    b = SquareMatrix(field, [[field.parse(s) for s in row] for row in data["B"]])
    return Rep(spec, a, b)


def rep_from_json(text):
    return rep_from_json_dict(json.loads(text))
