"""Exact coefficient field: rational functions over Q in declared parameters.

A ``Poly`` is a multivariate polynomial with exact rational coefficients,
stored sparsely as a map from exponent vectors to coefficients.  A ``Scalar``
is a quotient of two such polynomials and is the coefficient field used
everywhere else in the package.  ``CScalar`` is the complexification.

Equality of scalars is decided by cross-multiplication, so correctness never
depends on polynomial GCDs.  A cheap normalization (rational content and
common monomial factors) keeps sizes under control.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class ScalarError(Exception):
    pass


class DenominatorVanishes(ScalarError):
    """The denominator of a scalar vanishes at the requested parameter point."""

    def __init__(self, point):
        self.point = dict(point)
        super().__init__(f"denominator vanishes at {self.point}")


class ScalarParseError(ScalarError):
    def __init__(self, text, pos, msg):
        self.text = text
        self.pos = pos
        super().__init__(f"parse error at position {pos} in {text!r}: {msg}")


def _grlex_key(expts):
    return (sum(expts), expts)


class Poly:
    """Sparse multivariate polynomial over Q in a fixed parameter list."""

    __slots__ = ("params", "terms")

    def __init__(self, params, terms):
        self.params = tuple(params)
        self.terms = {e: c for e, c in terms.items() if c != 0}

    # -- constructors -------------------------------------------------

    @classmethod
    def const(cls, params, value):
        value = Fraction(value)
        n = len(params)
        if value == 0:
            return cls(params, {})
        return cls(params, {(0,) * n: value})

    @classmethod
    def zero(cls, params):
        return cls(params, {})

    @classmethod
    def one(cls, params):
        return cls.const(params, 1)

    @classmethod
    def var(cls, params, name):
        params = tuple(params)
        i = params.index(name)
        e = tuple(1 if j == i else 0 for j in range(len(params)))
        return cls(params, {e: Fraction(1)})

    # -- queries ------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self):
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise ScalarError(f"not a constant polynomial: {self}")
        return next(iter(self.terms.values()))

    def total_degree(self):
        if self.is_zero():
            return -1
        return max(sum(e) for e in self.terms)

    def leading(self):
        """Leading (exponent, coefficient) under graded lexicographic order."""
        if self.is_zero():
            raise ScalarError("zero polynomial has no leading term")
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def content(self):
        """Positive rational content (gcd of coefficients)."""
        if self.is_zero():
            return Fraction(1)
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den)

    def monomial_gcd(self):
        """Elementwise-minimum exponent vector over all terms."""
        n = len(self.params)
        if self.is_zero():
            return (0,) * n
        it = iter(self.terms)
        m = list(next(it))
        for e in it:
            for i in range(n):
                if e[i] < m[i]:
                    m[i] = e[i]
        return tuple(m)

    def shift_down(self, mono):
        if all(x == 0 for x in mono):
            return self
        return Poly(self.params, {
            tuple(a - b for a, b in zip(e, mono)): c for e, c in self.terms.items()
        })

    # -- arithmetic ---------------------------------------------------

    def _check(self, other):
        if self.params != other.params:
            raise ScalarError(
                f"parameter mismatch: {self.params} vs {other.params}")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return Poly(self.params, terms)

    def __neg__(self):
        return Poly(self.params, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.params, other)
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return Poly(self.params, terms)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ScalarError("negative power of a polynomial")
        result = Poly.one(self.params)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.params == other.params and self.terms == other.terms

    def __hash__(self):
        return hash((self.params, frozenset(self.terms.items())))

    def substitute(self, assignment):
        """Substitute a subset of the parameters by exact rationals.

        The result lives over the same parameter list; substituted variables
        simply no longer occur.
        """
        vals = {p: Fraction(v) for p, v in assignment.items()}
        idx = [i for i, p in enumerate(self.params) if p in vals]
        if not idx:
            return self
        terms = {}
        for e, c in self.terms.items():
            for i in idx:
                if e[i]:
                    c = c * vals[self.params[i]] ** e[i]
            if c == 0:
                continue
            e2 = tuple(0 if i in idx else k for i, k in enumerate(e))
            terms[e2] = terms.get(e2, Fraction(0)) + c
        return Poly(self.params, terms)

    def evaluate(self, assignment):
        """Evaluate at a map parameter -> Fraction; exact."""
        vals = [Fraction(assignment[p]) for p in self.params]
        total = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for v, k in zip(vals, e):
                if k:
                    t *= v ** k
            total += t
        return total

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                p if k == 1 else f"{p}^{k}"
                for p, k in zip(self.params, e) if k)
            if mono:
                if c == 1:
                    term = mono
                elif c == -1:
                    term = f"-{mono}"
                else:
                    term = f"{c}*{mono}"
            else:
                term = str(c)
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out

    def __repr__(self):
        return f"Poly({self})"


class Scalar:
    """Element of the rational-function field Q(p1,...,pm).

    Immutable.  The denominator is normalized so that its rational content is
    1 and its graded-lex leading coefficient is positive; common monomial
    factors of numerator and denominator are cancelled.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = Poly.one(num.params)
        if den.is_zero():
            raise ScalarError("zero denominator")
        if num.params != den.params:
            raise ScalarError("parameter mismatch in scalar")
        if num.is_zero():
            den = Poly.one(num.params)
        else:
            m_num = num.monomial_gcd()
            m_den = den.monomial_gcd()
            mono = tuple(min(a, b) for a, b in zip(m_num, m_den))
            num = num.shift_down(mono)
            den = den.shift_down(mono)
        c = den.content()
        _, lead = den.leading()
        if lead < 0:
            c = -c
        if c != 1:
            inv = Fraction(1) / c
            num = num * inv
            den = den * inv
        self.num = num
        self.den = den

    # -- constructors -------------------------------------------------

    @classmethod
    def const(cls, params, value):
        return cls(Poly.const(params, value))

    @classmethod
    def zero(cls, params):
        return cls(Poly.zero(params))

    @classmethod
    def one(cls, params):
        return cls(Poly.one(params))

    @classmethod
    def var(cls, params, name):
        return cls(Poly.var(params, name))

    # -- queries ------------------------------------------------------

    @property
    def params(self):
        return self.num.params

    def is_zero(self):
        return self.num.is_zero()

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self):
        return self.num.constant_value() / self.den.constant_value()

    def substitute(self, assignment):
        """Partial specialization of parameters; exact.

        Raises DenominatorVanishes when the substitution kills the
        denominator.
        """
        den = self.den.substitute(assignment)
        if den.is_zero():
            raise DenominatorVanishes(assignment)
        return Scalar(self.num.substitute(assignment), den)

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return Scalar.const(self.params, other)
        if isinstance(other, Scalar):
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return Scalar(self.num + other.num, self.den)
        return Scalar(self.num * other.den + other.num * self.den,
                      self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Scalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        return Scalar(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        return Scalar(self.den, self.num)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return Scalar(self.num ** k, self.den ** k)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        # cross-multiplication; no GCD needed for correctness
        return (self.num * other.den - other.num * self.den).is_zero()

    def __hash__(self):
        # only cheap canonical cases hash consistently; constants suffice
        if self.is_constant():
            return hash(self.constant_value())
        return hash((self.num, self.den))

    def __str__(self):
        if self.den == Poly.one(self.params):
            return str(self.num)
        num = str(self.num)
        den = str(self.den)
        if len(self.num.terms) > 1:
            num = f"({num})"
        # the denominator must re-parse as a single '/' operand, so wrap it
        # unless it is a constant or a bare power of one variable
        e, c = self.den.leading()
        atomic = len(self.den.terms) == 1 and (
            sum(1 for k in e if k) == 0 or
            (c == 1 and sum(1 for k in e if k) == 1))
        if not atomic:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"Scalar({self})"


def scalar_eval(s, assignment):
    """Evaluate a scalar at a parameter point; exact rational result.

    Raises DenominatorVanishes when the point lies on the denominator locus.
    """
    den = s.den.evaluate(assignment)
    if den == 0:
        raise DenominatorVanishes(assignment)
    return s.num.evaluate(assignment) / den


class CScalar:
    """Complex extension of the scalar field: re + i*im."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=None):
        if im is None:
            im = Scalar.zero(re.params)
        if re.params != im.params:
            raise ScalarError("parameter mismatch in complex scalar")
        self.re = re
        self.im = im

    @classmethod
    def from_real(cls, s):
        return cls(s)

    @classmethod
    def i(cls, params):
        return cls(Scalar.zero(params), Scalar.one(params))

    @property
    def params(self):
        return self.re.params

    def is_zero(self):
        return self.re.is_zero() and self.im.is_zero()

    def is_real(self):
        return self.im.is_zero()

    def conj(self):
        return CScalar(self.re, -self.im)

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return CScalar(Scalar.const(self.params, other))
        if isinstance(other, Scalar):
            return CScalar(other)
        if isinstance(other, CScalar):
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CScalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return CScalar(-self.re, -self.im)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CScalar(self.re * other.re - self.im * other.im,
                       self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def inverse(self):
        n = self.re * self.re + self.im * self.im
        if n.is_zero():
            raise ZeroDivisionError("inverse of zero complex scalar")
        return CScalar(self.re / n, -self.im / n)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __str__(self):
        if self.im.is_zero():
            return str(self.re)
        if self.re.is_zero():
            return f"({self.im})*i"
        return f"({self.re}) + ({self.im})*i"

    def __repr__(self):
        return f"CScalar({self})"


# ---------------------------------------------------------------------------
# Scalar literal grammar: integers, parameter identifiers, + - * / ^ with
# integer exponents, parentheses.  Example: -(1+a^2)/b
# ---------------------------------------------------------------------------

class _Parser:
    def __init__(self, text, params):
        self.text = text
        self.params = tuple(params)
        self.pos = 0

    def error(self, msg):
        raise ScalarParseError(self.text, self.pos, msg)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def parse(self):
        value = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            self.error("unexpected trailing input")
        return value

    def expr(self):
        ch = self.peek()
        if ch == "+":
            self.pos += 1
            value = self.term()
        elif ch == "-":
            self.pos += 1
            value = -self.term()
        else:
            value = self.term()
        while True:
            ch = self.peek()
            if ch == "+":
                self.pos += 1
                value = value + self.term()
            elif ch == "-":
                self.pos += 1
                value = value - self.term()
            else:
                return value

    def term(self):
        value = self.power()
        while True:
            ch = self.peek()
            if ch == "*":
                self.pos += 1
                value = value * self.power()
            elif ch == "/":
                self.pos += 1
                divisor = self.power()
                if divisor.is_zero():
                    self.error("division by zero")
                value = value / divisor
            else:
                return value

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            sign = 1
            if self.peek() == "-":
                self.pos += 1
                sign = -1
            exponent = self.integer()
            return base ** (sign * exponent)
        return base

    def atom(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            value = self.expr()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return value
        if ch == "-":
            self.pos += 1
            return -self.atom()
        if ch.isdigit():
            return Scalar.const(self.params, self.integer())
        if ch.isalpha() or ch == "_":
            name = self.identifier()
            if name not in self.params:
                self.error(f"unknown parameter {name!r}")
            return Scalar.var(self.params, name)
        self.error("expected number, parameter or '('")

    def integer(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected integer")
        return int(self.text[start:self.pos])

    def identifier(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (
                self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        return self.text[start:self.pos]


def parse_scalar(text, params):
    """Parse a scalar literal like ``-(1+a^2)/b`` over the given parameters."""
    return _Parser(str(text), params).parse()
