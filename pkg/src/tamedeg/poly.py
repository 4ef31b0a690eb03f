"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a finite map from exponent tuples to nonzero Fractions,
together with a fixed variable count ``n``.  The zero polynomial has total
degree ``NEG_INF`` (a float -inf sentinel, comparable with ints).

The text grammar accepts variables ``x1..x9`` or declared aliases such as
``x, y, z``; integer and ``p/q`` rational literals; operators ``+ - * ^``
and parentheses.  Implicit multiplication is forbidden.  Canonical printing
is graded-lexicographic descending with explicit ``*`` and coefficient 1
suppressed.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

NEG_INF = float("-inf")

Scalar = Union[int, Fraction]


class DimensionMismatch(ValueError):
    """Raised when two polynomials with different variable counts meet."""


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _as_fraction(c: Scalar) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")


class Polynomial:
    """Immutable sparse polynomial in ``n`` variables over the rationals."""

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Mapping[tuple, Scalar] | Iterable = ()):
        if n < 0:
            raise ValueError("variable count must be nonnegative")
        clean: dict[tuple[int, ...], Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != n:
                raise DimensionMismatch(
                    f"exponent tuple {exps} has length {len(exps)}, expected {n}")
            if any(e < 0 or not isinstance(e, int) for e in exps):
                raise ValueError(f"exponents must be nonnegative integers: {exps}")
            c = _as_fraction(coeff)
            if c:
                acc = clean.get(exps)
                c = c if acc is None else acc + c
                if c:
                    clean[exps] = c
                else:
                    del clean[exps]
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(n)

    @classmethod
    def constant(cls, n: int, c: Scalar) -> "Polynomial":
        return cls(n, {(0,) * n: c})

    @classmethod
    def variable(cls, n: int, i: int) -> "Polynomial":
        """x_i, 0-based index."""
        if not 0 <= i < n:
            raise IndexError(f"variable index {i} out of range for n={n}")
        exps = [0] * n
        exps[i] = 1
        return cls(n, {tuple(exps): 1})

    @classmethod
    def monomial(cls, n: int, exps: Sequence[int], coeff: Scalar = 1) -> "Polynomial":
        return cls(n, {tuple(exps): coeff})

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.n, Fraction(0))

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def total_degree(self):
        """Max monomial degree; NEG_INF for the zero polynomial."""
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def variables(self) -> set[int]:
        """Indices of variables actually occurring."""
        used: set[int] = set()
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    used.add(i)
        return used

    def involves(self, i: int) -> bool:
        return any(exps[i] for exps in self.terms)

    # -- ring operations -----------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.n != other.n:
            raise DimensionMismatch(f"variable counts differ: {self.n} vs {other.n}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.n, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for exps, c in other.terms.items():
            acc = out.get(exps)
            s = c if acc is None else acc + c
            if s:
                out[exps] = s
            elif acc is not None:
                del out[exps]
        res = Polynomial.__new__(Polynomial)
        object.__setattr__(res, "n", self.n)
        object.__setattr__(res, "terms", out)
        object.__setattr__(res, "_hash", None)
        return res

    __radd__ = __add__

    def __neg__(self):
        res = Polynomial.__new__(Polynomial)
        object.__setattr__(res, "n", self.n)
        object.__setattr__(res, "terms", {e: -c for e, c in self.terms.items()})
        object.__setattr__(res, "_hash", None)
        return res

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.n, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> "Polynomial":
        c = _as_fraction(c)
        if not c:
            return Polynomial.zero(self.n)
        res = Polynomial.__new__(Polynomial)
        object.__setattr__(res, "n", self.n)
        object.__setattr__(res, "terms", {e: c * v for e, v in self.terms.items()})
        object.__setattr__(res, "_hash", None)
        return res

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return Polynomial.zero(self.n)
        if len(a) > len(b):
            a, b = b, a
        # Exponent tuples are packed into single ints (21 bits per variable)
        # so that the inner loop is one int add plus one dict update; exponent
        # addition never carries across fields at these degrees.
        n = self.n
        shifts = tuple(21 * i for i in range(n))
        mask = (1 << 21) - 1

        def pack(exps):
            key = 0
            for e, s in zip(exps, shifts):
                key |= e << s
            return key

        # Integer fast path: products of automorphism components routinely hit
        # millions of term pairs, and int arithmetic beats Fraction by ~20x.
        if all(c.denominator == 1 for c in a.values()) and all(
                c.denominator == 1 for c in b.values()):
            ai = [(pack(e), c.numerator) for e, c in a.items()]
            bi = [(pack(e), c.numerator) for e, c in b.items()]
            out_i: dict[int, int] = {}
            get = out_i.get
            for ea, ca in ai:
                for eb, cb in bi:
                    key = ea + eb
                    out_i[key] = get(key, 0) + ca * cb
            packed = {k: Fraction(v) for k, v in out_i.items() if v}
        else:
            af = [(pack(e), c) for e, c in a.items()]
            bf = [(pack(e), c) for e, c in b.items()]
            out_f: dict[int, Fraction] = {}
            getf = out_f.get
            for ea, ca in af:
                for eb, cb in bf:
                    key = ea + eb
                    prev = getf(key)
                    out_f[key] = ca * cb if prev is None else prev + ca * cb
            packed = {k: v for k, v in out_f.items() if v}
        out = {tuple((k >> s) & mask for s in shifts): v
               for k, v in packed.items()}
        res = Polynomial.__new__(Polynomial)
        object.__setattr__(res, "n", self.n)
        object.__setattr__(res, "terms", out)
        object.__setattr__(res, "_hash", None)
        return res

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- structure -----------------------------------------------------

    def homogeneous_part(self, d: int) -> "Polynomial":
        if d < 0:
            raise ValueError("degree must be nonnegative")
        return Polynomial(self.n, {e: c for e, c in self.terms.items() if sum(e) == d})

    def leading_form(self) -> "Polynomial":
        if not self.terms:
            raise ValueError("zero polynomial has no leading form")
        return self.homogeneous_part(int(self.total_degree()))

    def partial_derivative(self, i: int) -> "Polynomial":
        """Formal d/dx_i, 0-based index."""
        if not 0 <= i < self.n:
            raise IndexError(f"variable index {i} out of range for n={self.n}")
        out: dict[tuple[int, ...], Fraction] = {}
        for exps, c in self.terms.items():
            e = exps[i]
            if e:
                key = exps[:i] + (e - 1,) + exps[i + 1:]
                out[key] = out.get(key, Fraction(0)) + c * e
        return Polynomial(self.n, out)

    def substitute(self, args: Sequence["Polynomial"]) -> "Polynomial":
        """Evaluate at args: the image of self under x_i -> args[i]."""
        if len(args) != self.n:
            raise DimensionMismatch(
                f"expected {self.n} substitution arguments, got {len(args)}")
        if not args:
            return Polynomial(0, dict(self.terms))
        m = args[0].n
        for a in args:
            if a.n != m:
                raise DimensionMismatch("substitution arguments differ in variable count")
        # cache powers of each argument
        max_exp = [0] * self.n
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e > max_exp[i]:
                    max_exp[i] = e
        powers: list[list[Polynomial]] = []
        for i, a in enumerate(args):
            row = [Polynomial.constant(m, 1)]
            for _ in range(max_exp[i]):
                row.append(row[-1] * a)
            powers.append(row)
        result = Polynomial.zero(m)
        for exps, c in self.terms.items():
            prod = Polynomial.constant(m, c)
            for i, e in enumerate(exps):
                if e:
                    prod = prod * powers[i][e]
            result = result + prod
        return result

    # -- comparison / display -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.n, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.n, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Polynomial({self.n}, {format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


# ---------------------------------------------------------------------------
# text form
# ---------------------------------------------------------------------------

def default_varnames(n: int) -> tuple[str, ...]:
    if n <= 3:
        return ("x", "y", "z")[:n]
    if n <= 9:
        return tuple(f"x{i}" for i in range(1, n + 1))
    raise ValueError("default variable names support at most 9 variables")


def _grlex_key(exps: tuple[int, ...]):
    return (sum(exps), exps)


def format_poly(p: Polynomial, varnames: Sequence[str] | None = None) -> str:
    """Canonical text: graded-lex descending, explicit '*', coeff 1 suppressed."""
    if varnames is None:
        varnames = default_varnames(p.n)
    if len(varnames) != p.n:
        raise DimensionMismatch("variable name list length differs from n")
    if not p.terms:
        return "0"
    pieces = []
    for exps in sorted(p.terms, key=_grlex_key, reverse=True):
        c = p.terms[exps]
        factors = []
        for name, e in zip(varnames, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mono = "*".join(factors)
        ac = abs(c)
        if mono and ac == 1:
            body = mono
        elif mono:
            body = f"{ac}*{mono}"
        else:
            body = str(ac)
        pieces.append(("-" if c < 0 else "+", body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


_TOKEN_RE = re.compile(r"\s*(?:(\d+/\d+|\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*^()]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos:].strip()[0]!r}", pos)
            break
        num, name, op = m.groups()
        if num is not None:
            tokens.append(("num", num, m.start(1)))
        elif name is not None:
            tokens.append(("name", name, m.start(2)))
        else:
            tokens.append(("op", op, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, varnames: Sequence[str]):
        self.tokens = _tokenize(text)
        self.i = 0
        self.n = len(varnames)
        self.index = {name: i for i, name in enumerate(varnames)}

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expr(self) -> Polynomial:
        kind, val, pos = self.peek()
        negate = False
        if kind == "op" and val in "+-":
            self.take()
            negate = val == "-"
        acc = self.term()
        if negate:
            acc = -acc
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                acc = acc - rhs if val == "-" else acc + rhs
            else:
                return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = acc * self.factor()
            elif kind in ("num", "name") or (kind == "op" and val == "("):
                raise ParseError("implicit multiplication is not allowed", pos)
            else:
                return acc

    def factor(self) -> Polynomial:
        base = self.atom()
        kind, val, pos = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "num" or "/" in val:
                raise ParseError("exponent must be a nonnegative integer", pos)
            return base ** int(val)
        return base

    def atom(self) -> Polynomial:
        kind, val, pos = self.take()
        if kind == "num":
            if "/" in val:
                num, den = val.split("/")
                return Polynomial.constant(self.n, Fraction(int(num), int(den)))
            return Polynomial.constant(self.n, int(val))
        if kind == "name":
            if val not in self.index:
                raise ParseError(f"unknown variable {val!r}", pos)
            return Polynomial.variable(self.n, self.index[val])
        if kind == "op" and val == "(":
            inner = self.expr()
            kind, val, pos = self.take()
            if not (kind == "op" and val == ")"):
                raise ParseError("expected ')'", pos)
            return inner
        if kind == "op" and val == "-":
            return -self.atom()
        raise ParseError(f"unexpected token {val!r}" if val else "unexpected end of input", pos)


def parse_poly(text: str, varnames: Sequence[str] | None = None, n: int | None = None) -> Polynomial:
    """Parse the text grammar into a Polynomial.

    Either ``varnames`` or ``n`` (to use default names) must pin the ambient
    variable count.
    """
    if varnames is None:
        varnames = default_varnames(3 if n is None else n)
        indexed = True
    else:
        indexed = False
    parser = _Parser(text, varnames)
    if indexed:
        # with default names both spellings are valid: x,y,z and x1..x9
        for i in range(len(varnames)):
            parser.index.setdefault(f"x{i + 1}", i)
    result = parser.expr()
    kind, val, pos = parser.peek()
    if kind != "end":
        raise ParseError(f"trailing input {val!r}", pos)
    return result
