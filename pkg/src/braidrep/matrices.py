"""Exact dense linear algebra over the scalar backends.

Everything here works for any field object from :mod:`braidrep.fields`:
rationals, rational functions, or number fields.  Sizes stay tiny (at most
8x8), so the algorithms favour exactness and clarity over asymptotics.
Determinants use a memoized Laplace expansion over column subsets, which is
division free; inverses and ranks use fraction-level Gauss-Jordan.
"""

from __future__ import annotations

from .fields import BackendMismatch, Scalar

MIN_DIM = 2
MAX_DIM = 8


class SquareMatrix:
    """Immutable square matrix of Scalars over a single field."""

    __slots__ = ("field", "rows")

    def __init__(self, field, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if not (MIN_DIM <= n <= MAX_DIM):
            raise ValueError(f"matrix dimension {n} outside supported range {MIN_DIM}..{MAX_DIM}")
        for r in rows:
            if len(r) != n:
                raise ValueError("matrix is not square")
            for x in r:
                if not isinstance(x, Scalar):
                    raise TypeError("matrix entries must be Scalars")
                if x.field is not field and x.field != field:
                    raise BackendMismatch("matrix entry from a different field")
        self.field = field
        self.rows = rows

    @property
    def dim(self):
        return len(self.rows)

    @classmethod
    def identity(cls, field, n):
        one, zero = field.one, field.zero
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, n):
        zero = field.zero
        return cls(field, [[zero] * n for _ in range(n)])

    @classmethod
    def from_function(cls, field, n, fn):
        """Build from fn(i, j) -> Scalar with 1-based indices."""
        return cls(field, [[fn(i + 1, j + 1) for j in range(n)] for i in range(n)])

    def entry(self, i, j):
        """1-based access, matching the row/column conventions in formulas."""
        return self.rows[i - 1][j - 1]

    def __eq__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        if self.dim != other.dim:
            return False
        return all(
            self.rows[i][j] == other.rows[i][j]
            for i in range(self.dim)
            for j in range(self.dim)
        )

    def __hash__(self):
        raise TypeError("SquareMatrix is not hashable")

    def __add__(self, other):
        self._check(other)
        return SquareMatrix(
            self.field,
            [
                [self.rows[i][j] + other.rows[i][j] for j in range(self.dim)]
                for i in range(self.dim)
            ],
        )

    def __sub__(self, other):
        self._check(other)
        return SquareMatrix(
            self.field,
            [
                [self.rows[i][j] - other.rows[i][j] for j in range(self.dim)]
                for i in range(self.dim)
            ],
        )

    def __neg__(self):
        return SquareMatrix(self.field, [[-x for x in r] for r in self.rows])

    def __mul__(self, other):
        if not isinstance(other, SquareMatrix):
            return NotImplemented
        self._check(other)
        n = self.dim
        cols = list(zip(*other.rows))
        out = []
        for i in range(n):
            row = self.rows[i]
            out.append([_dot(row, cols[j]) for j in range(n)])
        return SquareMatrix(self.field, out)

    def _check(self, other):
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        if self.field is not other.field and self.field != other.field:
            raise BackendMismatch("matrices over different fields")

    def scale(self, c):
        if not isinstance(c, Scalar):
            c = self.field.const(c)
        return SquareMatrix(self.field, [[c * x for x in r] for r in self.rows])

    def transpose(self):
        return SquareMatrix(self.field, list(zip(*self.rows)))

    def trace(self):
        t = self.field.zero
        for i in range(self.dim):
            t = t + self.rows[i][i]
        return t

    def power(self, k):
        if k < 0:
            return self.inverse().power(-k)
        result = SquareMatrix.identity(self.field, self.dim)
        base = self
        while k:
            if k & 1:
                result = result * base
            if k > 1:
                base = base * base
            k >>= 1
        return result

    def det(self):
        """Division-free determinant: Laplace expansion memoized on column sets."""
        n = self.dim
        rows = self.rows
        cache = {}

        def minor(row, colmask):
            # determinant of the submatrix on rows row..n-1 and the columns in colmask
            if row == n:
                return self.field.one
            key = colmask
            hit = cache.get(key)
            if hit is not None:
                return hit
            total = self.field.zero
            sign = 1
            m = colmask
            while m:
                low = m & -m
                j = low.bit_length() - 1
                a = rows[row][j]
                if not a.is_zero():
                    sub = minor(row + 1, colmask & ~low)
                    term = a * sub
                    total = total + term if sign > 0 else total - term
                sign = -sign
                m &= m - 1
            cache[key] = total
            return total

        return minor(0, (1 << n) - 1)

    def is_invertible(self):
        return not self.det().is_zero()

    def inverse(self):
        n = self.dim
        field = self.field
        aug = [list(self.rows[i]) + [field.one if j == i else field.zero for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
            if pivot is None:
                raise ZeroDivisionError("matrix is singular")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv = aug[col][col].inv()
            aug[col] = [inv * x for x in aug[col]]
            for r in range(n):
                if r != col and not aug[r][col].is_zero():
                    factor = aug[r][col]
                    aug[r] = [aug[r][k] - factor * aug[col][k] for k in range(2 * n)]
        return SquareMatrix(field, [row[n:] for row in aug])

    def is_zero(self):
        return all(x.is_zero() for r in self.rows for x in r)

    def is_scalar(self):
        """True when the matrix is c*I; returns the scalar via scalar_value()."""
        n = self.dim
        c = self.rows[0][0]
        for i in range(n):
            for j in range(n):
                x = self.rows[i][j]
                if i == j:
                    if x != c:
                        return False
                elif not x.is_zero():
                    return False
        return True

    def scalar_value(self):
        if not self.is_scalar():
            raise ValueError("matrix is not scalar")
        return self.rows[0][0]

    def render(self):
        """Nested list of canonical strings, row major."""
        return [[x.render() for x in r] for r in self.rows]

    def __repr__(self):
        body = "; ".join(", ".join(x.render() for x in r) for r in self.rows)
        return f"SquareMatrix[{body}]"


def _dot(row, col):
    it = iter(zip(row, col))
    a, b = next(it)
    acc = a * b
    for a, b in it:
        acc = acc + a * b
    return acc


def vec(matrix):
    """Row-major flattening of a SquareMatrix into a list of Scalars."""
    return [x for r in matrix.rows for x in r]


class UniPoly:
    """Univariate polynomial with Scalar coefficients, ascending order."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        coeffs = list(coeffs)
        while len(coeffs) > 1 and coeffs[-1].is_zero():
            coeffs.pop()
        if not coeffs:
            coeffs = [field.zero]
        self.field = field
        self.coeffs = tuple(coeffs)

    @property
    def degree(self):
        if len(self.coeffs) == 1 and self.coeffs[0].is_zero():
            return -1
        return len(self.coeffs) - 1

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        raise TypeError("UniPoly is not hashable")

    def is_monic(self):
        return self.degree >= 0 and self.coeffs[-1] == self.field.one

    def eval_scalar(self, x):
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_matrix(self, m):
        n = m.dim
        acc = SquareMatrix.zeros(self.field, n)
        for c in reversed(self.coeffs):
            acc = acc * m + SquareMatrix.identity(self.field, n).scale(c)
        return acc

    def divides(self, other):
        _, rem = other.divmod(self)
        return rem.degree < 0

    def divmod(self, divisor):
        if divisor.degree < 0:
            raise ZeroDivisionError("division by zero polynomial")
        field = self.field
        rem = list(self.coeffs)
        dn = divisor.degree
        lead_inv = divisor.coeffs[-1].inv()
        q = [field.zero] * max(len(rem) - dn, 1)
        for i in range(len(rem) - 1, dn - 1, -1):
            c = rem[i]
            if c.is_zero():
                continue
            factor = c * lead_inv
            q[i - dn] = factor
            for j in range(dn + 1):
                rem[i - dn + j] = rem[i - dn + j] - factor * divisor.coeffs[j]
        return UniPoly(field, q), UniPoly(field, rem)

    def render(self, name="t"):
        if self.degree < 0:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c.is_zero():
                continue
            cs = c.render()
            if e == 0:
                parts.append(cs)
            else:
                mono = name if e == 1 else f"{name}^{e}"
                if cs == "1":
                    parts.append(mono)
                elif cs == "-1":
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{cs}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"UniPoly({self.render()})"


def char_poly(m):
    """Characteristic polynomial det(tI - M) by the Faddeev-LeVerrier recurrence."""
    field = m.field
    n = m.dim
    coeffs = [field.zero] * (n + 1)
    coeffs[n] = field.one
    ident = SquareMatrix.identity(field, n)
    mk = SquareMatrix.zeros(field, n)
    c = field.one
    for k in range(1, n + 1):
        mk = m * (mk + ident.scale(c))
        c = -(mk.trace() / field.const(k))
        coeffs[n - k] = c
    return UniPoly(field, coeffs)


def min_poly(m):
    """Monic minimal polynomial: first linear dependency among I, M, M^2, ..."""
    field = m.field
    powers = [SquareMatrix.identity(field, m.dim)]
    vectors = [vec(powers[0])]
    while True:
        nxt = powers[-1] * m
        target = vec(nxt)
        combo = solve_linear(field, [list(v) for v in vectors], target)
        if combo is not None:
            coeffs = [-c for c in combo] + [field.one]
            return UniPoly(field, coeffs)
        powers.append(nxt)
        vectors.append(target)


def solve_linear(field, columns, target):
    """Solve sum_j x_j * columns[j] = target exactly; None when inconsistent.

    columns is a list of equal-length coordinate lists.  Assumes the columns
    are linearly independent, which holds for the power-sequence caller.
    """
    k = len(columns)
    rows = [[col[i] for col in columns] + [target[i]] for i in range(len(target))]
    pivot_rows = []
    for col in range(k):
        pivot = None
        for r, row in enumerate(rows):
            if r in pivot_rows:
                continue
            if not row[col].is_zero():
                pivot = r
                break
        if pivot is None:
            return None
        inv = rows[pivot][col].inv()
        rows[pivot] = [inv * x for x in rows[pivot]]
        for r in range(len(rows)):
            if r != pivot and not rows[r][col].is_zero():
                f = rows[r][col]
                rows[r] = [rows[r][i] - f * rows[pivot][i] for i in range(k + 1)]
        pivot_rows.append(pivot)
    # consistency: every non-pivot row must have zero residual
    for r, row in enumerate(rows):
        if r not in pivot_rows and not row[k].is_zero():
            return None
    solution = [field.zero] * k
    for col, r in enumerate(pivot_rows):
        solution[col] = rows[r][k]
    return solution


def rref(field, rows):
    """Reduced row echelon form of a list of coordinate lists.

    Returns (reduced_rows, pivot_columns); zero rows are dropped.
    """
    work = [list(r) for r in rows]
    ncols = len(work[0]) if work else 0
    pivots = []
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(work)) if not work[r][col].is_zero()), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = work[rank][col].inv()
        work[rank] = [inv * x for x in work[rank]]
        for r in range(len(work)):
            if r != rank and not work[r][col].is_zero():
                f = work[r][col]
                work[r] = [work[r][i] - f * work[rank][i] for i in range(ncols)]
        pivots.append(col)
        rank += 1
    return work[:rank], pivots


def matrix_rank(m):
    reduced, _ = rref(m.field, [list(r) for r in m.rows])
    return len(reduced)


def nullspace_basis(field, rows, ncols):
    """Basis of the right nullspace of the given row list, as coordinate lists."""
    if not rows:
        ident = []
        for j in range(ncols):
            v = [field.zero] * ncols
            v[j] = field.one
            ident.append(v)
        return ident
    reduced, pivots = rref(field, rows)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for r, p in enumerate(pivots):
            v[p] = -reduced[r][f]
        basis.append(v)
    return basis


def nullspace_dim(field, rows, ncols):
    if not rows:
        return ncols
    reduced, _ = rref(field, rows)
    return ncols - len(reduced)


class RowSpace:
    """Incrementally maintained row space in reduced echelon form.

    insert() returns True when the vector enlarged the span.  Used for the
    span-of-words closure, where most candidate vectors are rejected and the
    incremental reduction keeps that cheap.
    """

    __slots__ = ("field", "ncols", "rows", "pivots")

    def __init__(self, field, ncols):
        self.field = field
        self.ncols = ncols
        self.rows = []
        self.pivots = []

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vector):
        v = list(vector)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if not c.is_zero():
                v = [v[i] - c * row[i] for i in range(self.ncols)]
        return v

    def insert(self, vector):
        v = self.reduce(vector)
        pivot = next((i for i in range(self.ncols) if not v[i].is_zero()), None)
        if pivot is None:
            return False
        inv = v[pivot].inv()
        v = [inv * x for x in v]
        # back-substitute into the existing rows to stay fully reduced
        for idx in range(len(self.rows)):
            c = self.rows[idx][pivot]
            if not c.is_zero():
                self.rows[idx] = [self.rows[idx][i] - c * v[i] for i in range(self.ncols)]
        at = next((k for k, p in enumerate(self.pivots) if p > pivot), len(self.pivots))
        self.rows.insert(at, v)
        self.pivots.insert(at, pivot)
        return True

    def contains(self, vector):
        return all(x.is_zero() for x in self.reduce(vector))
