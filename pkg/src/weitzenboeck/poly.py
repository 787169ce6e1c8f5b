"""Sparse multivariate polynomials with exact rational coefficients.

The ambient ring is K[x_1..x_n, y_1..y_n, ..., CX, CY]: n chains of k+1
variables each ("block" i, "level" j), plus the two covariant variables
CX and CY.  Coefficients are `fractions.Fraction`, so every computation
is exact; floating point is never used.

A monomial is a dense exponent tuple with one slot per variable, laid out
block-major and level-minor, covariant slots last:

    x1, y1, ..., x2, y2, ..., CX, CY        (for k = 1)

A polynomial maps exponent tuples to nonzero coefficients; the zero
polynomial is the empty map.  Term iteration and printing use graded
lexicographic order (higher total degree first, ties broken by the
exponent tuple, earlier variables dominating), which makes output and
downstream pivot selection deterministic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .errors import AmbientMismatch, ParseError, UnknownVariable

Scalar = Union[int, Fraction]
Exponents = tuple[int, ...]


@dataclass(frozen=True)
class Variable:
    """One variable of the ring.

    Chain variables carry block 1..n and level 0..k (level 0 is the
    x-layer, level 1 the y-layer, and so on).  The covariant variables
    use block 0: level 0 is CX, level 1 is CY.
    """

    block: int
    level: int

    @property
    def is_covariant(self) -> bool:
        return self.block == 0

    @property
    def name(self) -> str:
        if self.block == 0:
            return "CX" if self.level == 0 else "CY"
        if self.level < 3:
            return f"{'xyz'[self.level]}{self.block}"
        return f"v{self.block}.{self.level}"

    def __repr__(self):
        return f"Variable({self.name})"


COV_X = Variable(0, 0)
COV_Y = Variable(0, 1)


def ring_var(block: int, level: int) -> Variable:
    if block < 1 or level < 0:
        raise UnknownVariable(f"no ring variable with block {block}, level {level}")
    return Variable(block, level)


def x(i: int) -> Variable:
    return ring_var(i, 0)


def y(i: int) -> Variable:
    return ring_var(i, 1)


def z(i: int) -> Variable:
    return ring_var(i, 2)


@dataclass(frozen=True)
class Ambient:
    """The ring shape: n chain blocks of k+1 variables plus CX, CY."""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 1 or self.k < 1:
            raise ValueError(f"ambient requires n >= 1 and k >= 1, got ({self.n}, {self.k})")

    @property
    def ring_width(self) -> int:
        return self.n * (self.k + 1)

    @property
    def width(self) -> int:
        return self.ring_width + 2

    def index(self, v: Variable) -> int:
        """Dense slot of a variable; raises UnknownVariable if outside the ring."""
        if v.is_covariant:
            if v.level not in (0, 1):
                raise UnknownVariable(f"unknown covariant variable {v!r}")
            return self.ring_width + v.level
        if not (1 <= v.block <= self.n) or not (0 <= v.level <= self.k):
            raise UnknownVariable(f"{v.name} does not exist in ambient (n={self.n}, k={self.k})")
        return (v.block - 1) * (self.k + 1) + v.level

    def variable_at(self, idx: int) -> Variable:
        if idx < 0 or idx >= self.width:
            raise UnknownVariable(f"no variable at slot {idx}")
        if idx >= self.ring_width:
            return Variable(0, idx - self.ring_width)
        return Variable(idx // (self.k + 1) + 1, idx % (self.k + 1))

    def variables(self) -> list[Variable]:
        return [self.variable_at(i) for i in range(self.width)]

    def level_at(self, idx: int) -> int:
        """Chain level of a ring slot (0 for covariant slots)."""
        return idx % (self.k + 1) if idx < self.ring_width else 0

    def block_degrees(self, exps: Exponents) -> tuple[int, ...]:
        step = self.k + 1
        return tuple(sum(exps[b * step : (b + 1) * step]) for b in range(self.n))

    def weight(self, exps: Exponents) -> int:
        step = self.k + 1
        return sum((i % step) * e for i, e in enumerate(exps[: self.ring_width]) if e)

    def cov_degree(self, exps: Exponents) -> int:
        return exps[-2] + exps[-1]

    def ring_degree(self, exps: Exponents) -> int:
        return sum(exps[: self.ring_width])


def monomial_sort_key(exps: Exponents):
    """Ascending key for graded lex order; reverse for the canonical display order."""
    return (sum(exps), exps)


class Polynomial:
    """Immutable sparse polynomial over an `Ambient`.

    Treat instances as frozen: all arithmetic returns new objects, and the
    internal term map is never mutated after construction, so values may be
    shared freely between threads or tasks.
    """

    __slots__ = ("ambient", "_terms")

    def __init__(self, ambient: Ambient, terms: Mapping[Exponents, Scalar] | Iterable[tuple[Exponents, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponents, Fraction] = {}
        width = ambient.width
        for exps, coeff in items:
            if len(exps) != width or any(e < 0 for e in exps):
                raise AmbientMismatch(f"exponent tuple {exps} does not fit ambient (n={ambient.n}, k={ambient.k})")
            c = Fraction(coeff)
            if c:
                acc = clean.get(exps, 0) + c
                if acc:
                    clean[exps] = acc
                else:
                    clean.pop(exps, None)
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, ambient: Ambient) -> "Polynomial":
        return cls(ambient)

    @classmethod
    def one(cls, ambient: Ambient) -> "Polynomial":
        return cls.constant(ambient, 1)

    @classmethod
    def constant(cls, ambient: Ambient, value: Scalar) -> "Polynomial":
        return cls(ambient, {(0,) * ambient.width: Fraction(value)})

    @classmethod
    def variable(cls, ambient: Ambient, v: Variable) -> "Polynomial":
        exps = [0] * ambient.width
        exps[ambient.index(v)] = 1
        return cls(ambient, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, ambient: Ambient, powers: Mapping[Variable, int], coeff: Scalar = 1) -> "Polynomial":
        exps = [0] * ambient.width
        for v, e in powers.items():
            exps[ambient.index(v)] += e
        return cls(ambient, {tuple(exps): Fraction(coeff)})

    # -- inspection --------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def items(self) -> Iterator[tuple[Exponents, Fraction]]:
        """Unordered term iteration (fast path for internal computation)."""
        return iter(self._terms.items())

    def terms(self) -> list[tuple[Exponents, Fraction]]:
        """Terms in canonical order: graded lex, highest first."""
        return sorted(self._terms.items(), key=lambda kv: monomial_sort_key(kv[0]), reverse=True)

    def coefficient(self, exps: Exponents) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def total_degree(self) -> int:
        """Largest total degree over all terms; 0 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=0)

    def homogeneous_degree(self) -> int | None:
        """The common total degree of all terms, or None if degrees are mixed."""
        degrees = {sum(e) for e in self._terms}
        if not degrees:
            return 0
        if len(degrees) > 1:
            return None
        return degrees.pop()

    def gradings(self) -> set[tuple[tuple[int, ...], int, int]]:
        """Distinct (block_degrees, weight, covariant_degree) triples of the terms."""
        amb = self.ambient
        return {
            (amb.block_degrees(exps), amb.weight(exps), amb.cov_degree(exps))
            for exps in self._terms
        }

    # -- arithmetic --------------------------------------------------------

    def _check_ambient(self, other: "Polynomial"):
        if self.ambient != other.ambient:
            raise AmbientMismatch(
                f"ambients differ: (n={self.ambient.n}, k={self.ambient.k}) vs (n={other.ambient.n}, k={other.ambient.k})"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ambient, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ambient(other)
        out = dict(self._terms)
        for exps, c in other._terms.items():
            acc = out.get(exps, 0) + c
            if acc:
                out[exps] = acc
            else:
                out.pop(exps, None)
        return self._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return self._wrap({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ambient, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Polynomial.zero(self.ambient)
            return self._wrap({e: cc * c for e, cc in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ambient(other)
        out: dict[Exponents, Fraction] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                key = tuple(a + b for a, b in zip(ea, eb))
                acc = out.get(key, 0) + ca * cb
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
        return self._wrap(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = Polynomial.one(self.ambient)
        for _ in range(exponent):
            result = result * self
        return result

    def partial(self, v: Variable) -> "Polynomial":
        """Formal partial derivative with respect to one variable."""
        idx = self.ambient.index(v)
        out: dict[Exponents, Fraction] = {}
        for exps, c in self._terms.items():
            e = exps[idx]
            if e:
                key = exps[:idx] + (e - 1,) + exps[idx + 1 :]
                out[key] = out.get(key, Fraction(0)) + c * e
        return self._wrap(out)

    def _wrap(self, terms: dict[Exponents, Fraction]) -> "Polynomial":
        # internal fast path: terms already canonical (no zeros, right width)
        p = Polynomial.__new__(Polynomial)
        object.__setattr__(p, "ambient", self.ambient)
        object.__setattr__(p, "_terms", terms)
        return p

    # -- equality and display ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ambient, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ambient == other.ambient and self._terms == other._terms

    def __hash__(self):
        return hash((self.ambient, frozenset(self._terms.items())))

    def __str__(self):
        if not self._terms:
            return "0"
        amb = self.ambient
        parts: list[str] = []
        for exps, coeff in self.terms():
            # factors print layer by layer (x's, then y's, ...), covariants last
            order = sorted(
                (i for i, e in enumerate(exps) if e),
                key=lambda i: (i >= amb.ring_width, amb.level_at(i), i),
            )
            factors = []
            for idx in order:
                e = exps[idx]
                name = amb.variable_at(idx).name
                factors.append(name if e == 1 else f"{name}^{e}")
            mag = abs(coeff)
            if factors and mag == 1:
                body = "*".join(factors)
            elif factors:
                body = "*".join([str(mag)] + factors)
            else:
                body = str(mag)
            if not parts:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f" - {body}" if coeff < 0 else f" + {body}")
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial(n={self.ambient.n}, k={self.ambient.k}, {str(self)!r})"


# -- parsing ----------------------------------------------------------------

_TOKEN = re.compile(r"(?P<int>\d+)|(?P<name>[xyz]\d+|v\d+\.\d+|CX|CY)|(?P<op>[-+*/^])")

_LEVEL_BY_LETTER = {"x": 0, "y": 1, "z": 2}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def _variable_from_name(name: str) -> Variable:
    if name == "CX":
        return COV_X
    if name == "CY":
        return COV_Y
    if name[0] == "v":
        block, level = name[1:].split(".")
        return Variable(int(block), int(level))
    return Variable(int(name[1:]), _LEVEL_BY_LETTER[name[0]])


class _Parser:
    def __init__(self, text: str, ambient: Ambient):
        self.ambient = ambient
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        terms: dict[Exponents, Fraction] = {}
        sign = 1
        kind, value, pos = self.peek()
        if kind == "op" and value in "+-":
            self.advance()
            sign = -1 if value == "-" else 1
        while True:
            exps, coeff = self.term()
            acc = terms.get(exps, Fraction(0)) + sign * coeff
            if acc:
                terms[exps] = acc
            else:
                terms.pop(exps, None)
            kind, value, pos = self.peek()
            if kind == "end":
                return Polynomial(self.ambient, terms)
            if kind == "op" and value in "+-":
                self.advance()
                sign = -1 if value == "-" else 1
                continue
            raise ParseError(f"expected '+' or '-', got {value!r}", pos)

    def term(self) -> tuple[Exponents, Fraction]:
        coeff = Fraction(1)
        exps = [0] * self.ambient.width
        kind, value, pos = self.peek()
        if kind == "int":
            self.advance()
            coeff = Fraction(int(value))
            kind, value, pos = self.peek()
            if kind == "op" and value == "/":
                self.advance()
                coeff /= self.posint("denominator")
                kind, value, pos = self.peek()
            if not (kind == "op" and value == "*"):
                return tuple(exps), coeff  # bare constant term
            self.advance()
        self.factor(exps)
        while True:
            kind, value, pos = self.peek()
            if kind == "op" and value == "*":
                self.advance()
                self.factor(exps)
            else:
                return tuple(exps), coeff

    def factor(self, exps: list[int]):
        kind, value, pos = self.advance()
        if kind != "name":
            raise ParseError(f"expected a variable, got {value!r}" if value else "expected a variable", pos)
        var = _variable_from_name(value)
        try:
            idx = self.ambient.index(var)
        except UnknownVariable:
            raise AmbientMismatch(
                f"variable {value!r} exceeds ambient (n={self.ambient.n}, k={self.ambient.k}) at position {pos}",
                position=pos,
            ) from None
        power = 1
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            self.advance()
            power = self.posint("exponent")
        exps[idx] += power

    def posint(self, what: str) -> int:
        kind, value, pos = self.advance()
        if kind != "int" or int(value) < 1:
            raise ParseError(f"expected a positive integer {what}", pos)
        return int(value)


def parse(text: str, ambient: Ambient) -> Polynomial:
    """Parse polynomial text.

    Grammar: terms joined by '+'/'-'; a term is an optional rational
    coefficient followed by '*'-joined variable factors, each optionally
    raised with '^'; variables are x1../y1../z1../v1.3../CX/CY.  A bare
    rational is accepted as a constant term, and the first term may carry
    a leading sign.  Whitespace is insignificant.
    """
    return _Parser(text, ambient).parse()


def format_poly(p: Polynomial) -> str:
    """Canonical text form; `parse(format_poly(p), p.ambient) == p`."""
    return str(p)
