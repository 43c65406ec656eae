"""Exact multivariate polynomials over the rationals.

A polynomial is stored sparsely as a mapping from exponent tuples to
nonzero Fractions, relative to a fixed ordered tuple of variable names.
All arithmetic is exact; there is no floating point anywhere.

The text format is the one used by every file format in this package:

    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' nat)?
    base     := rational | name | '(' expr ')'
    rational := int ('/' nat)?

Whitespace is insignificant and there is no implicit multiplication,
so ``x^2 - 1/2*y`` parses but ``2x`` does not.  (The optional leading
sign on an expr is a documented superset of the base grammar; it makes
printing and parsing mutual inverses.)
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Tuple

Exponent = Tuple[int, ...]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()/]))")


class PolynomialError(ValueError):
    """Raised on malformed polynomial text or mismatched variable contexts."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise PolynomialError(f"expected an int or Fraction coefficient, got {type(value).__name__}")


class Polynomial:
    """Sparse exact polynomial in a fixed tuple of named variables."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Tuple[str, ...], terms: Mapping[Exponent, Fraction] | None = None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise PolynomialError(f"duplicate variable names in {variables!r}")
        for v in variables:
            if not _NAME_RE.fullmatch(v):
                raise PolynomialError(f"invalid variable name {v!r}")
        clean: Dict[Exponent, Fraction] = {}
        if terms:
            nvars = len(variables)
            for exps, coeff in terms.items():
                exps = tuple(exps)
                if len(exps) != nvars or any(e < 0 for e in exps):
                    raise PolynomialError(f"bad exponent tuple {exps!r} for {nvars} variables")
                c = _as_fraction(coeff)
                if c:
                    clean[exps] = clean.get(exps, Fraction(0)) + c
                    if not clean[exps]:
                        del clean[exps]
        self.variables = variables
        self.terms = clean

    @classmethod
    def _raw(cls, variables: Tuple[str, ...], terms: Dict[Exponent, Fraction]) -> "Polynomial":
        # trusted constructor: terms already canonical (no zeros, right arity)
        self = object.__new__(cls)
        self.variables = variables
        self.terms = terms
        return self

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, variables) -> "Polynomial":
        return cls._raw(tuple(variables), {})

    @classmethod
    def const(cls, variables, value) -> "Polynomial":
        variables = tuple(variables)
        c = _as_fraction(value)
        if not c:
            return cls._raw(variables, {})
        return cls._raw(variables, {(0,) * len(variables): c})

    @classmethod
    def variable(cls, variables, name: str) -> "Polynomial":
        variables = tuple(variables)
        try:
            i = variables.index(name)
        except ValueError:
            raise PolynomialError(f"unknown variable {name!r}; context is {variables!r}") from None
        exps = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls._raw(variables, {exps: Fraction(1)})

    # -- basic queries -----------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial (error if non-constant)."""
        if not self.terms:
            return Fraction(0)
        if not self.is_constant():
            raise PolynomialError(f"polynomial {self} is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self) -> int:
        """Total degree; zero polynomial reports -1."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    # -- arithmetic ---------------------------------------------------

    def _check_context(self, other: "Polynomial") -> None:
        if self.variables != other.variables:
            raise PolynomialError(
                f"variable mismatch: {self.variables!r} vs {other.variables!r}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(self.variables, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_context(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            s = out.get(exps, Fraction(0)) + c
            if s:
                out[exps] = s
            else:
                out.pop(exps, None)
        return Polynomial._raw(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(self.variables, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            if not c:
                return Polynomial._raw(self.variables, {})
            return Polynomial._raw(self.variables, {e: k * c for e, k in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_context(other)
        out: Dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial._raw(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise PolynomialError(f"exponent must be a nonnegative int, got {n!r}")
        out = Polynomial.const(self.variables, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(self.variables, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- calculus ------------------------------------------------------

    def diff(self, name: str) -> "Polynomial":
        """Partial derivative with respect to the named variable."""
        try:
            i = self.variables.index(name)
        except ValueError:
            raise PolynomialError(f"unknown variable {name!r}; context is {self.variables!r}") from None
        out: Dict[Exponent, Fraction] = {}
        for exps, c in self.terms.items():
            if exps[i]:
                e = list(exps)
                k = e[i]
                e[i] = k - 1
                key = tuple(e)
                s = out.get(key, Fraction(0)) + c * k
                if s:
                    out[key] = s
                else:
                    del out[key]
        return Polynomial._raw(self.variables, out)

    def evaluate(self, point: Mapping[str, Fraction]) -> Fraction:
        """Evaluate at a rational point given as {variable: value}."""
        vals = []
        for v in self.variables:
            if v not in point:
                raise PolynomialError(f"no value supplied for variable {v!r}")
            vals.append(_as_fraction(point[v]))
        total = Fraction(0)
        for exps, c in self.terms.items():
            prod = c
            for val, e in zip(vals, exps):
                if e:
                    prod *= val ** e
            total += prod
        return total

    # -- printing and parsing ------------------------------------------

    def _sorted_terms(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exps, coeff in self._sorted_terms():
            factors = []
            for name, e in zip(self.variables, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            pieces.append(("- " if coeff < 0 else "+ ") + body)
        head = pieces[0]
        head = ("-" + head[2:]) if head.startswith("- ") else head[2:]
        return " ".join([head] + pieces[1:])

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r}, vars={self.variables!r})"

    @classmethod
    def parse(cls, text: str, variables) -> "Polynomial":
        return _Parser(text, tuple(variables)).parse()


class _Parser:
    """Recursive-descent parser for the polynomial grammar above."""

    def __init__(self, text: str, variables: Tuple[str, ...]):
        self.text = text
        self.variables = variables
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if not m:
                if text[pos:].strip():
                    raise PolynomialError(f"unexpected character {text[pos:].lstrip()[0]!r}", pos)
                break
            kind = m.lastgroup
            self.tokens.append((kind, m.group(kind), m.start(kind)))
            pos = m.end()
        self.i = 0

    def _peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("eof", "", len(self.text))

    def _next(self):
        tok = self._peek()
        self.i += 1
        return tok

    def _expect_op(self, op: str):
        kind, val, pos = self._next()
        if kind != "op" or val != op:
            raise PolynomialError(f"expected {op!r}, found {val or 'end of input'!r}", pos)

    def parse(self) -> Polynomial:
        result = self._expr()
        kind, val, pos = self._peek()
        if kind != "eof":
            raise PolynomialError(f"trailing input starting with {val!r}", pos)
        return result

    def _expr(self) -> Polynomial:
        sign = 1
        kind, val, _ = self._peek()
        if kind == "op" and val in "+-":
            self.i += 1
            sign = -1 if val == "-" else 1
        result = self._term() * sign
        while True:
            kind, val, _ = self._peek()
            if kind == "op" and val in "+-":
                self.i += 1
                t = self._term()
                result = result - t if val == "-" else result + t
            else:
                return result

    def _term(self) -> Polynomial:
        result = self._factor()
        while True:
            kind, val, _ = self._peek()
            if kind == "op" and val == "*":
                self.i += 1
                result = result * self._factor()
            else:
                return result

    def _factor(self) -> Polynomial:
        base = self._base()
        kind, val, _ = self._peek()
        if kind == "op" and val == "^":
            self.i += 1
            kind, val, pos = self._next()
            if kind != "int":
                raise PolynomialError(f"expected an integer exponent, found {val or 'end of input'!r}", pos)
            return base ** int(val)
        return base

    def _base(self) -> Polynomial:
        kind, val, pos = self._next()
        if kind == "int":
            num = int(val)
            kind2, val2, _ = self._peek()
            if kind2 == "op" and val2 == "/":
                self.i += 1
                kind3, val3, pos3 = self._next()
                if kind3 != "int":
                    raise PolynomialError(f"expected a denominator, found {val3 or 'end of input'!r}", pos3)
                den = int(val3)
                if den == 0:
                    raise PolynomialError("zero denominator", pos3)
                return Polynomial.const(self.variables, Fraction(num, den))
            return Polynomial.const(self.variables, num)
        if kind == "name":
            if val not in self.variables:
                raise PolynomialError(f"unknown variable {val!r}; context is {self.variables!r}", pos)
            return Polynomial.variable(self.variables, val)
        if kind == "op" and val == "(":
            inner = self._expr()
            self._expect_op(")")
            return inner
        raise PolynomialError(f"expected a number, variable, or '(', found {val or 'end of input'!r}", pos)


def divergence(components, variables) -> Polynomial:
    """Divergence sum_a d(Y^a)/d(x_a) of a base vector field given by components."""
    variables = tuple(variables)
    components = tuple(components)
    if len(components) != len(variables):
        raise PolynomialError(f"{len(components)} components for {len(variables)} variables")
    out = Polynomial.zero(variables)
    for comp, name in zip(components, variables):
        out = out + comp.diff(name)
    return out


def field_bracket(y, z, variables):
    """Commutator [Y, Z] of base vector fields given componentwise."""
    variables = tuple(variables)
    out = []
    for b in range(len(variables)):
        acc = Polynomial.zero(variables)
        for a, name in enumerate(variables):
            acc = acc + y[a] * z[b].diff(name) - z[a] * y[b].diff(name)
        out.append(acc)
    return tuple(out)
