"""Exact scalar arithmetic: multivariate Laurent polynomials, rational-function
pairs, rationals, and algebraic number fields Q[x]/(m).

Every scalar belongs to exactly one field backend; mixing backends raises
BackendMismatch. Rational-function pairs are reduced only by extracting monomial
and rational content from the denominator (never a full multivariate gcd), and
equality is decided by cross-multiplication. Serialization uses a fixed
graded-lexicographic term order over the context's declared variable order, so
rendering is deterministic and parse(render(x)) == x.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
import re


class BackendMismatch(TypeError):
    """Raised when scalars from different field backends are combined."""


class SpecializationError(ValueError):
    """Raised when a variable assignment is incomplete or hits a zero denominator."""


class ParseError(ValueError):
    pass


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


@dataclass(frozen=True)
class VarContext:
    """Ordered, immutable set of distinct variable names."""

    names: tuple

    def __post_init__(self):
        if not isinstance(self.names, tuple):
            object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise ValueError("variable names must be distinct")
        for n in self.names:
            if not _NAME_RE.fullmatch(n):
                raise ValueError("bad variable name: %r" % (n,))

    def index(self, name):
        return self.names.index(name)

    def __len__(self):
        return len(self.names)


def _grlex_key(mono):
    # graded-lex: total degree first, then the exponent tuple itself
    return (sum(mono), mono)


class LaurentPolynomial:
    """Sparse Laurent polynomial: {exponent tuple: nonzero Fraction}."""

    __slots__ = ("context", "terms")

    def __init__(self, context, terms):
        self.context = context
        self.terms = {m: c for m, c in terms.items() if c != 0}

    @classmethod
    def const(cls, context, value):
        value = Fraction(value)
        if value == 0:
            return cls(context, {})
        return cls(context, {(0,) * len(context): value})

    @classmethod
    def var(cls, context, name, power=1):
        mono = [0] * len(context)
        mono[context.index(name)] = power
        return cls(context, {tuple(mono): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0,) * len(self.context): Fraction(1)}

    def _check(self, other):
        if self.context != other.context:
            raise BackendMismatch("polynomials from different variable contexts")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
        return LaurentPolynomial(self.context, out)

    def __neg__(self):
        return LaurentPolynomial(self.context, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s == 0:
                    out.pop(m, None)
                else:
                    out[m] = s
        return LaurentPolynomial(self.context, out)

    def scale(self, value):
        value = Fraction(value)
        return LaurentPolynomial(self.context, {m: c * value for m, c in self.terms.items()})

    def shift(self, mono):
        """Multiply by the monomial with the given exponent tuple."""
        return LaurentPolynomial(
            self.context,
            {tuple(a + b for a, b in zip(m, mono)): c for m, c in self.terms.items()},
        )

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = LaurentPolynomial.const(self.context, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def invert_variables(self):
        """Substitute every variable by its inverse (negate all exponents)."""
        return LaurentPolynomial(
            self.context, {tuple(-e for e in m): c for m, c in self.terms.items()}
        )

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: _grlex_key(mc[0]), reverse=True)

    def leading_coeff(self):
        if not self.terms:
            return Fraction(0)
        return self.sorted_terms()[0][1]

    def content(self):
        """(signed content, monomial content): sign of the leading coefficient times
        gcd(numerators)/lcm(denominators), and the per-variable minimum exponents."""
        if not self.terms:
            return Fraction(1), (0,) * len(self.context)
        g = 0
        l = 1
        for c in self.terms.values():
            g = gcd(g, abs(c.numerator))
            l = lcm(l, c.denominator)
        content = Fraction(g, l)
        if self.leading_coeff() < 0:
            content = -content
        mono = tuple(min(m[i] for m in self.terms) for i in range(len(self.context)))
        return content, mono

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.context == other.context and self.terms == other.terms

    def __hash__(self):
        return hash((self.context, frozenset(self.terms.items())))

    def render(self):
        if not self.terms:
            return "0"
        out = []
        for mono, coeff in self.sorted_terms():
            factors = []
            for name, e in zip(self.context.names, mono):
                if e == 0:
                    continue
                factors.append(name if e == 1 else "%s^%d" % (name, e))
            mag = abs(coeff)
            if not factors:
                body = _render_fraction(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = _render_fraction(mag) + "*" + "*".join(factors)
            if not out:
                out.append(body if coeff > 0 else "-" + body)
            else:
                out.append(("+" if coeff > 0 else "-") + body)
        return "".join(out)

    def __repr__(self):
        return "LaurentPolynomial(%s)" % self.render()


def _render_fraction(c):
    if c.denominator == 1:
        return str(c.numerator)
    return "%d/%d" % (c.numerator, c.denominator)


class Scalar:
    """A field element tagged with its backend. Supports +, -, *, /, ** and ==;
    ints and Fractions are promoted, anything cross-backend raises."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field is not self.field and other.field != self.field:
                raise BackendMismatch(
                    "cannot mix scalars from %r and %r" % (self.field, other.field)
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(self.field, self.field._add(self.value, other.value))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.field, self.field._neg(self.value))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(self.field, self.field._mul(self.value, other.value))

    __rmul__ = __mul__

    def inv(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        return Scalar(self.field, self.field._inv(self.value))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, k):
        if not isinstance(k, int):
            raise ValueError("scalar powers must be integers")
        if k < 0:
            return self.inv() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def is_zero(self):
        return self.field._is_zero(self.value)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.field._eq(self.value, other.value)

    def render(self):
        return self.field._render(self.value)

    def __repr__(self):
        return "Scalar(%s)" % self.render()


class RationalField:
    """Plain exact rationals."""

    mode = "rational"

    def const(self, value):
        return Scalar(self, Fraction(value))

    @property
    def zero(self):
        return self.const(0)

    @property
    def one(self):
        return self.const(1)

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _inv(self, a):
        return 1 / a

    def _is_zero(self, a):
        return a == 0

    def _eq(self, a, b):
        return a == b

    def _render(self, a):
        return _render_fraction(a)

    def parse(self, text):
        return Scalar(self, _parse_rational_string(text))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "RationalField()"


class SymbolicField:
    """Fraction field of the Laurent polynomial ring over a variable context.

    Elements are (num, den) pairs. Reduction divides out the denominator's sign,
    rational content and monomial content only; a denominator that is a single
    Laurent term therefore always normalizes to 1. Equality cross-multiplies.
    """

    mode = "symbolic"

    def __init__(self, context):
        self.context = context

    def _pair(self, num, den):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in rational function")
        if num.is_zero():
            return Scalar(self, (num, LaurentPolynomial.const(self.context, 1)))
        content, mono = den.content()
        if content != 1 or any(mono):
            inv = 1 / content
            neg = tuple(-e for e in mono)
            num = num.scale(inv).shift(neg)
            den = den.scale(inv).shift(neg)
        return Scalar(self, (num, den))

    def from_poly(self, p):
        return self._pair(p, LaurentPolynomial.const(self.context, 1))

    def const(self, value):
        return self.from_poly(LaurentPolynomial.const(self.context, value))

    def var(self, name):
        return self.from_poly(LaurentPolynomial.var(self.context, name))

    @property
    def zero(self):
        return self.const(0)

    @property
    def one(self):
        return self.const(1)

    def _add(self, a, b):
        n1, d1 = a
        n2, d2 = b
        if d1 == d2:
            return self._pair(n1 + n2, d1).value
        return self._pair(n1 * d2 + n2 * d1, d1 * d2).value

    def _neg(self, a):
        return (-a[0], a[1])

    def _mul(self, a, b):
        return self._pair(a[0] * b[0], a[1] * b[1]).value

    def _inv(self, a):
        return self._pair(a[1], a[0]).value

    def _is_zero(self, a):
        return a[0].is_zero()

    def _eq(self, a, b):
        if a[1] == b[1]:
            return a[0] == b[0]
        return a[0] * b[1] == b[0] * a[1]

    def _render(self, a):
        num, den = a
        if den.is_one():
            return num.render()
        return "(%s)/(%s)" % (num.render(), den.render())

    def parse(self, text):
        num, den = _parse_rf_string(self.context, text)
        return self._pair(num, den)

    def __eq__(self, other):
        return isinstance(other, SymbolicField) and self.context == other.context

    def __hash__(self):
        return hash(("symbolic", self.context))

    def __repr__(self):
        return "SymbolicField(%s)" % ",".join(self.context.names)


class NumberField:
    """Q[x]/(m(x)) for a monic modulus m, elements as coefficient tuples of
    length deg(m). The modulus is trusted to be irreducible; a reducible one
    surfaces as a ZeroDivisionError on inversion of a zero divisor."""

    mode = "algebraic"

    def __init__(self, modulus, gen_name="z"):
        modulus = tuple(Fraction(c) for c in modulus)
        if len(modulus) < 2 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree >= 1")
        self.modulus = modulus
        self.degree = len(modulus) - 1
        self.gen_name = gen_name

    def element(self, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > self.degree:
            coeffs = self._reduce(coeffs)
        coeffs += [Fraction(0)] * (self.degree - len(coeffs))
        return Scalar(self, tuple(coeffs))

    def const(self, value):
        return self.element([Fraction(value)])

    @property
    def zero(self):
        return self.const(0)

    @property
    def one(self):
        return self.const(1)

    @property
    def gen(self):
        return self.element([0, 1])

    def _reduce(self, coeffs):
        coeffs = list(coeffs)
        for i in range(len(coeffs) - 1, self.degree - 1, -1):
            c = coeffs[i]
            if c == 0:
                continue
            for j in range(self.degree + 1):
                coeffs[i - self.degree + j] -= c * self.modulus[j]
        return coeffs[: self.degree]

    def _add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def _neg(self, a):
        return tuple(-x for x in a)

    def _mul(self, a, b):
        out = [Fraction(0)] * (2 * self.degree - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return tuple(self._reduce(out))

    def _inv(self, a):
        # extended Euclid in Q[x] against the modulus
        r0, r1 = list(self.modulus), list(a)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(c != 0 for c in r1):
            q, r = _polydivmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _polysub(s0, _polymul(q, s1))
        lead = next(c for c in reversed(r0) if c != 0)
        if any(c != 0 for c in r0[1:]):
            raise ZeroDivisionError("zero divisor: modulus is not irreducible")
        return tuple(self._reduce([c / lead for c in s0]))

    def _is_zero(self, a):
        return all(c == 0 for c in a)

    def _eq(self, a, b):
        return a == b

    def _render(self, a):
        ctx = VarContext((self.gen_name,))
        p = LaurentPolynomial(ctx, {(i,): c for i, c in enumerate(a) if c != 0})
        return p.render()

    def parse(self, text):
        ctx = VarContext((self.gen_name,))
        num, den = _parse_rf_string(ctx, text)
        value = self._from_poly(num)
        if not den.is_one():
            value = value / self._from_poly(den)
        return value

    def _from_poly(self, p):
        coeffs = [Fraction(0)] * (max((m[0] for m in p.terms), default=0) + 1)
        for m, c in p.terms.items():
            if m[0] < 0:
                raise ParseError("negative powers of the generator are not supported")
            coeffs[m[0]] = c
        return self.element(coeffs)

    def modulus_render(self):
        ctx = VarContext((self.gen_name,))
        p = LaurentPolynomial(ctx, {(i,): c for i, c in enumerate(self.modulus) if c != 0})
        return p.render()

    @classmethod
    def from_modulus_string(cls, text):
        names = sorted({m.group(0) for m in re.finditer(r"[A-Za-z_][A-Za-z_0-9]*", text)})
        if len(names) != 1:
            raise ParseError("modulus must use exactly one variable")
        ctx = VarContext((names[0],))
        p = parse_polynomial(ctx, text)
        top = max((m[0] for m in p.terms), default=0)
        if min((m[0] for m in p.terms), default=0) < 0:
            raise ParseError("modulus must be a plain polynomial")
        coeffs = [Fraction(0)] * (top + 1)
        for m, c in p.terms.items():
            coeffs[m[0]] = c
        return cls(tuple(coeffs), gen_name=names[0])

    def __eq__(self, other):
        return (
            isinstance(other, NumberField)
            and self.modulus == other.modulus
            and self.gen_name == other.gen_name
        )

    def __hash__(self):
        return hash(("algebraic", self.modulus, self.gen_name))

    def __repr__(self):
        return "NumberField(%s)" % self._render(
            tuple(self.modulus[:-1]) if self.degree > 0 else ()
        )


def _polydivmod(a, b):
    a = list(a)
    db = max(i for i, c in enumerate(b) if c != 0)
    q = [Fraction(0)] * max(1, len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        if a[i] == 0:
            continue
        f = a[i] / b[db]
        q[i - db] = f
        for j in range(db + 1):
            a[i - db + j] -= f * b[j]
    return q, a[:db] if db > 0 else [Fraction(0)]


def _polymul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _polysub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    return [a[i] - (b[i] if i < len(b) else 0) for i in range(n)]


def cyclotomic_field(n, gen_name="z"):
    """Number field containing a primitive n-th root of unity (the generator)."""
    moduli = {
        3: (1, 1, 1),
        4: (1, 0, 1),
        5: (1, 1, 1, 1, 1),
        6: (1, -1, 1),
    }
    if n not in moduli:
        raise ValueError("unsupported cyclotomic order %d" % n)
    coeffs = moduli[n]
    return NumberField(tuple(Fraction(c) for c in coeffs), gen_name=gen_name)


def root_of_unity(field, order):
    """A primitive cube or sixth root of unity in an algebraic backend.

    Searches small integer combinations of generator powers (enough for every
    field this package constructs); raises ValueError when the field has no
    such root.  order must be 3 or 6.
    """
    if order not in (3, 6):
        raise ValueError("only cube and sixth roots are supported")
    if not isinstance(field, NumberField):
        raise ValueError("roots of unity beyond +-1 need an algebraic backend")
    trace = field.const(-1) if order == 3 else field.one
    one = field.one
    power = one
    for _ in range(12):
        power = power * field.gen
        for cand in (power, -power, power + one, power - one,
                     -power + one, -power - one):
            # primitive root of the order iff x^2 - trace*x + 1 = 0
            if cand * cand == trace * cand - one:
                return cand
    raise ValueError("field contains no primitive root of order %d" % order)


def specialize(scalar, assignment, target):
    """Evaluate a symbolic scalar under {variable name: Scalar in target field}.

    Ring homomorphism on the polynomial level; raises SpecializationError if a
    variable is missing, a variable value is zero while a negative power occurs,
    or the denominator evaluates to zero.
    """
    field = scalar.field
    if not isinstance(field, SymbolicField):
        raise SpecializationError("specialize expects a symbolic scalar")
    for name in field.context.names:
        if name not in assignment:
            raise SpecializationError("no value for variable %r" % name)
        if assignment[name].field != target:
            raise BackendMismatch("assignment value for %r is not in the target field" % name)
    num, den = scalar.value
    den_val = _eval_poly(den, field.context, assignment, target)
    if den_val.is_zero():
        raise SpecializationError("denominator vanishes under this assignment")
    num_val = _eval_poly(num, field.context, assignment, target)
    return num_val / den_val


def _eval_poly(p, context, assignment, target):
    total = target.zero
    for mono, coeff in p.sorted_terms():
        term = target.const(coeff)
        for name, e in zip(context.names, mono):
            if e == 0:
                continue
            base = assignment[name]
            if base.is_zero() and e < 0:
                raise SpecializationError("negative power of zero for variable %r" % name)
            term = term * base**e
        total = total + term
    return total


# ---------------------------------------------------------------------------
# parsing

_TOKEN_RE = re.compile(r"\s*(\(|\)|\+|-|\*|\^|/|\d+|[A-Za-z_][A-Za-z0-9_]*)")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise ParseError("bad character at %r" % text[pos:])
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


def _parse_rational_string(text):
    tokens = _tokenize(text)
    value, rest = _parse_signed_rational(tokens)
    if rest:
        raise ParseError("trailing input in rational: %r" % text)
    return value


def _parse_signed_rational(tokens):
    sign = 1
    while tokens and tokens[0] in "+-":
        if tokens[0] == "-":
            sign = -sign
        tokens = tokens[1:]
    if not tokens or not tokens[0].isdigit():
        raise ParseError("expected a number")
    num = int(tokens[0])
    tokens = tokens[1:]
    if len(tokens) >= 2 and tokens[0] == "/" and tokens[1].isdigit():
        return Fraction(sign * num, int(tokens[1])), tokens[2:]
    return Fraction(sign * num), tokens


def _parse_rf_string(context, text):
    """Parse '(num)/(den)' or a bare polynomial; returns (num, den) polynomials."""
    tokens = _tokenize(text)
    if tokens and tokens[0] == "(":
        depth = 0
        for i, tok in enumerate(tokens):
            if tok == "(":
                depth += 1
            elif tok == ")":
                depth -= 1
                if depth == 0:
                    close = i
                    break
        else:
            raise ParseError("unbalanced parentheses")
        rest = tokens[close + 1 :]
        if len(rest) >= 2 and rest[0] == "/" and rest[1] == "(":
            if rest[-1] != ")":
                raise ParseError("unbalanced parentheses in denominator")
            num = _parse_poly_tokens(context, tokens[1:close])
            den = _parse_poly_tokens(context, rest[2:-1])
            return num, den
    num = _parse_poly_tokens(context, tokens)
    return num, LaurentPolynomial.const(context, 1)


def parse_polynomial(context, text):
    return _parse_poly_tokens(context, _tokenize(text))


def _parse_poly_tokens(context, tokens):
    if not tokens:
        raise ParseError("empty polynomial")
    total = LaurentPolynomial.const(context, 0)
    i = 0
    first = True
    while i < len(tokens):
        sign = 1
        saw_sign = False
        while i < len(tokens) and tokens[i] in "+-":
            if tokens[i] == "-":
                sign = -sign
            saw_sign = True
            i += 1
        if not first and not saw_sign:
            raise ParseError("expected '+' or '-' between terms")
        term, i = _parse_term(context, tokens, i)
        total = total + (term.scale(-1) if sign < 0 else term)
        first = False
    return total


def _parse_term(context, tokens, i):
    if i >= len(tokens):
        raise ParseError("expected a term")
    coeff = Fraction(1)
    factors = []
    expect_factor = True
    while i < len(tokens):
        tok = tokens[i]
        if expect_factor:
            if tok.isdigit():
                value = Fraction(int(tok))
                i += 1
                if i + 1 < len(tokens) and tokens[i] == "/" and tokens[i + 1].isdigit():
                    value = Fraction(value.numerator, int(tokens[i + 1]))
                    i += 2
                coeff *= value
            elif _NAME_RE.fullmatch(tok):
                name = tok
                power = 1
                i += 1
                if i < len(tokens) and tokens[i] == "^":
                    i += 1
                    psign = 1
                    if i < len(tokens) and tokens[i] == "-":
                        psign = -1
                        i += 1
                    if i >= len(tokens) or not tokens[i].isdigit():
                        raise ParseError("expected an integer exponent")
                    power = psign * int(tokens[i])
                    i += 1
                factors.append((name, power))
            else:
                raise ParseError("unexpected token %r" % tok)
            expect_factor = False
        elif tok == "*":
            expect_factor = True
            i += 1
        else:
            break
    if expect_factor:
        raise ParseError("dangling '*'")
    mono = [0] * len(context)
    for name, power in factors:
        try:
            mono[context.index(name)] += power
        except ValueError:
            raise ParseError("unknown variable %r" % name) from None
    return LaurentPolynomial(context, {tuple(mono): coeff}), i
