"""Exact arithmetic underlying the curve-family checkers.

Three layers, bottom up:

* ``Scalar``   -- the field of fractions of polynomials with integer
  coefficients in named transcendental symbols.  A "generic" symbol stands
  for a sufficiently general complex number, so a Scalar is zero exactly
  when its numerator is the zero polynomial.  That convention turns
  "nonzero for a generic choice of coefficients" into a decidable test.
* ``Poly``     -- sparse multivariate polynomials over Scalar with a fixed
  ordered tuple of variable names.  The two-variable case over ``(a, t)``
  is the workhorse (``a`` the family parameter, ``t`` the curve parameter);
  ambient-space equations use longer variable tuples.
* ``SeriesT``  -- truncated power series over Scalar, with inversion,
  m-th roots and composition, used for exact reparametrizations.

No floating point, no algebraic extensions: every operation stays inside
the fraction field.  Roots that would leave the field are refused by the
callers rather than approximated.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _int_gcd
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "Scalar",
    "Poly",
    "SeriesT",
    "Arc",
    "ParseError",
    "fresh_symbol",
    "fresh_symbols",
    "parse_poly",
    "t_order",
    "leading_coeff_t",
    "substitute_arc",
    "series_invert_root",
    "series_reversion",
    "wedge3",
    "INFINITY",
]

INFINITY = float("inf")

# ---------------------------------------------------------------------------
# generic symbols
# ---------------------------------------------------------------------------

_symbol_lock = threading.Lock()
_symbol_counter = itertools.count(1)


def fresh_symbol() -> "Scalar":
    """Allocate the next generic symbol g1, g2, ... (process-wide)."""
    with _symbol_lock:
        n = next(_symbol_counter)
    return Scalar.symbol(f"g{n}")


def fresh_symbols(n: int) -> tuple["Scalar", ...]:
    return tuple(fresh_symbol() for _ in range(n))


# ---------------------------------------------------------------------------
# integer-coefficient polynomials in named symbols (numerators/denominators)
# ---------------------------------------------------------------------------
#
# A monomial is a sorted tuple of (name, exponent) pairs; a polynomial is a
# dict mapping monomials to nonzero Fractions.  Scalars normalize contents
# so stored coefficients are integers, but the helpers accept Fractions.

Mono = tuple[tuple[str, int], ...]
SPoly = dict[Mono, Fraction]

_ONE_M: Mono = ()


def _mono_mul(m1: Mono, m2: Mono) -> Mono:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for name, e in m2:
        d[name] = d.get(name, 0) + e
    return tuple(sorted((k, v) for k, v in d.items() if v))


def _mono_key(m: Mono):
    # graded order: total degree, then the name/exponent tuple
    return (sum(e for _, e in m), m)


def _sp_add(p: SPoly, q: SPoly) -> SPoly:
    r = dict(p)
    for m, c in q.items():
        s = r.get(m, Fraction(0)) + c
        if s:
            r[m] = s
        else:
            r.pop(m, None)
    return r


def _sp_mul(p: SPoly, q: SPoly) -> SPoly:
    r: SPoly = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = _mono_mul(m1, m2)
            s = r.get(m, Fraction(0)) + c1 * c2
            if s:
                r[m] = s
            else:
                r.pop(m, None)
    return r


def _sp_neg(p: SPoly) -> SPoly:
    return {m: -c for m, c in p.items()}


def _sp_const(c: Fraction) -> SPoly:
    return {_ONE_M: c} if c else {}


def _sp_str(p: SPoly) -> str:
    if not p:
        return "0"
    parts = []
    for m in sorted(p, key=_mono_key, reverse=True):
        c = p[m]
        body = "*".join(name if e == 1 else f"{name}^{e}" for name, e in m)
        if not body:
            term = str(abs(c))
        elif abs(c) == 1:
            term = body
        else:
            term = f"{abs(c)}*{body}"
        parts.append(("- " if c < 0 else "+ ") + term)
    out = " ".join(parts)
    return "-" + out[2:] if out.startswith("- ") else out[2:]


class ParseError(ValueError):
    """Syntax or vocabulary error in a polynomial expression.

    Carries the byte offset of the offending token in ``offset``.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


# ---------------------------------------------------------------------------
# Scalar
# ---------------------------------------------------------------------------


class Scalar:
    """Exact ratio of integer-coefficient polynomials in generic symbols.

    Zero testing looks only at the numerator; equality cross-multiplies, so
    no polynomial gcd is ever required.  Normalization is light: common
    monomial factors and integer content are cancelled and the denominator's
    leading coefficient is made positive, which keeps printing canonical.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: SPoly, den: SPoly | None = None):
        if den is None:
            den = _sp_const(Fraction(1))
        if not den:
            raise ZeroDivisionError("scalar with zero denominator")
        if not num:
            self.num: SPoly = {}
            self.den: SPoly = _sp_const(Fraction(1))
            return
        # cancel common monomial factor of all monomials in num and den
        common: dict[str, int] = {}
        first = True
        for m in itertools.chain(num, den):
            if first:
                common = dict(m)
                first = False
            else:
                for name in list(common):
                    common[name] = min(common[name], dict(m).get(name, 0))
        common = {k: v for k, v in common.items() if v > 0}
        if common:
            shift = tuple(sorted(common.items()))

            def strip(m: Mono) -> Mono:
                d = dict(m)
                for name, e in shift:
                    d[name] -= e
                return tuple(sorted((k, v) for k, v in d.items() if v))

            num = {strip(m): c for m, c in num.items()}
            den = {strip(m): c for m, c in den.items()}
        # integer content: make all coefficients integral and jointly coprime
        denoms = [c.denominator for c in itertools.chain(num.values(), den.values())]
        lcm = 1
        for d in denoms:
            lcm = lcm * d // _int_gcd(lcm, d)
        nums = [c.numerator * (lcm // c.denominator)
                for c in itertools.chain(num.values(), den.values())]
        g = 0
        for v in nums:
            g = _int_gcd(g, abs(v))
        scale = Fraction(lcm, g if g else 1)
        lead = den[max(den, key=_mono_key)]
        if lead < 0:
            scale = -scale
        self.num = {m: c * scale for m, c in num.items()}
        self.den = {m: c * scale for m, c in den.items()}

    # -- constructors --

    @classmethod
    def from_fraction(cls, q) -> "Scalar":
        return cls(_sp_const(Fraction(q)))

    @classmethod
    def symbol(cls, name: str) -> "Scalar":
        return cls({((name, 1),): Fraction(1)})

    # -- predicates --

    def is_zero(self) -> bool:
        return not self.num

    def is_rational(self) -> bool:
        return all(m == _ONE_M for m in self.num) and all(m == _ONE_M for m in self.den)

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"scalar {self} is not rational")
        num = self.num.get(_ONE_M, Fraction(0))
        return num / self.den[_ONE_M]

    def symbols(self) -> set[str]:
        out: set[str] = set()
        for m in itertools.chain(self.num, self.den):
            out.update(name for name, _ in m)
        return out

    # -- arithmetic --

    @staticmethod
    def _coerce(x) -> "Scalar":
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return Scalar.from_fraction(x)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = Scalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(_sp_add(_sp_mul(self.num, o.den), _sp_mul(o.num, self.den)),
                      _sp_mul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(_sp_neg(self.num), self.den)

    def __sub__(self, other):
        o = Scalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = Scalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar(_sp_mul(self.num, o.num), _sp_mul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = Scalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        return Scalar(_sp_mul(self.num, o.den), _sp_mul(self.den, o.num))

    def __rtruediv__(self, other):
        o = Scalar._coerce(other)
        return o / self

    def __pow__(self, n: int):
        if n < 0:
            return Scalar.from_fraction(1) / self ** (-n)
        out = Scalar.from_fraction(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = Scalar._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return _sp_add(_sp_mul(self.num, o.den), _sp_neg(_sp_mul(o.num, self.den))) == {}

    def __hash__(self):
        if self.is_rational():
            return hash(self.as_fraction())
        return hash(frozenset(self.num.items()))

    def subs(self, name: str, value: "Scalar | Fraction | int") -> "Scalar":
        """Substitute a rational or Scalar value for a symbol."""
        v = Scalar._coerce(value)

        def sub_poly(p: SPoly) -> Scalar:
            acc = Scalar.from_fraction(0)
            for m, c in p.items():
                term = Scalar.from_fraction(c)
                for sym, e in m:
                    term = term * (v if sym == name else Scalar.symbol(sym)) ** e
                acc = acc + term
            return acc

        return sub_poly(self.num) / sub_poly(self.den)

    def coeffs_in(self, name: str) -> list["Scalar"]:
        """Coefficients of the numerator as a polynomial in one symbol.

        Requires the denominator to be free of that symbol; the returned
        list is degree-indexed and each entry is divided by the denominator.
        """
        if any(s == name for m in self.den for s, _ in m):
            raise ValueError(f"denominator involves {name}")
        buckets: dict[int, SPoly] = {}
        for m, c in self.num.items():
            d = dict(m)
            e = d.pop(name, 0)
            rest = tuple(sorted(d.items()))
            buckets.setdefault(e, {})
            buckets[e] = _sp_add(buckets[e], {rest: c})
        deg = max(buckets, default=0)
        den = Scalar(dict(self.den))
        return [Scalar(buckets.get(k, {})) / den for k in range(deg + 1)]

    def __str__(self):
        if self.is_rational():
            return str(self.as_fraction())
        ns = _sp_str(self.num)
        if self.den == _sp_const(Fraction(1)):
            return ns
        return f"({ns})/({_sp_str(self.den)})"

    __repr__ = __str__


_S0 = Scalar.from_fraction(0)
_S1 = Scalar.from_fraction(1)


def _as_scalar(x) -> Scalar:
    s = Scalar._coerce(x)
    if s is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as Scalar")
    return s


# ---------------------------------------------------------------------------
# sparse multivariate polynomials over Scalar
# ---------------------------------------------------------------------------


class Poly:
    """Sparse polynomial over Scalar with a fixed tuple of variable names.

    Terms map exponent tuples (aligned with ``vars``) to nonzero Scalars.
    The two-variable instance over ``('a', 't')`` represents one entry of a
    family parametrization.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple[int, ...], Scalar] | None = None):
        self.vars = tuple(variables)
        clean: dict[tuple[int, ...], Scalar] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != len(self.vars):
                    raise ValueError("exponent tuple does not match variables")
                c = _as_scalar(c)
                if not c.is_zero():
                    clean[tuple(e)] = c
        self.terms = clean

    # -- constructors --

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "Poly":
        return cls(variables)

    @classmethod
    def const(cls, variables: Sequence[str], c) -> "Poly":
        return cls(variables, {(0,) * len(variables): _as_scalar(c)})

    @classmethod
    def var(cls, variables: Sequence[str], name: str) -> "Poly":
        variables = tuple(variables)
        i = variables.index(name)
        e = [0] * len(variables)
        e[i] = 1
        return cls(variables, {tuple(e): _S1})

    @classmethod
    def monomial(cls, variables: Sequence[str], exps: Sequence[int], c=1) -> "Poly":
        return cls(variables, {tuple(exps): _as_scalar(c)})

    # -- predicates / views --

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[tuple[int, ...]]:
        return sorted(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def _check(self, other: "Poly"):
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    # -- arithmetic --

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = Poly.const(self.vars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, _S0) + c
            if s.is_zero():
                terms.pop(e, None)
            else:
                terms[e] = s
        return Poly(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = Poly.const(self.vars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            c = _as_scalar(other)
            if c.is_zero():
                return Poly(self.vars)
            return Poly(self.vars, {e: co * c for e, co in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        terms: dict[tuple[int, ...], Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = terms.get(e, _S0) + c1 * c2
                if s.is_zero():
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return Poly(self.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative exponent")
        out = Poly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.vars == other.vars and self.support() == other.support() and all(
            self.terms[e] == other.terms[e] for e in self.terms
        )

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms)))

    # -- calculus / structure --

    def diff(self, name: str) -> "Poly":
        i = self.vars.index(name)
        terms: dict[tuple[int, ...], Scalar] = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = list(e)
            ne[i] -= 1
            terms[tuple(ne)] = c * e[i]
        return Poly(self.vars, terms)

    def min_deg(self, name: str) -> float:
        """Lowest exponent of a variable; +inf for the zero polynomial."""
        if not self.terms:
            return INFINITY
        i = self.vars.index(name)
        return min(e[i] for e in self.terms)

    def max_deg(self, name: str) -> int:
        if not self.terms:
            return 0
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def constant_value(self) -> Scalar:
        """The constant coefficient (the whole value for a constant poly)."""
        return self.terms.get((0,) * len(self.vars), _S0)

    def coeff_of(self, name: str, k: int) -> "Poly":
        """Coefficient of name**k, as a polynomial in the other variables."""
        i = self.vars.index(name)
        rest = tuple(v for v in self.vars if v != name)
        terms: dict[tuple[int, ...], Scalar] = {}
        for e, c in self.terms.items():
            if e[i] == k:
                terms[tuple(x for j, x in enumerate(e) if j != i)] = c
        return Poly(rest, terms)

    def compose(self, values: Sequence["Poly | Scalar | int | Fraction"]) -> "Poly":
        """Substitute values[i] for vars[i].  Values must share one variable
        tuple (Scalars are promoted); the result lives on that tuple."""
        polys: list[Poly] = []
        target: tuple[str, ...] | None = None
        for v in values:
            if isinstance(v, Poly):
                target = v.vars
        if target is None:
            raise ValueError("at least one substitution value must be a Poly")
        for v in values:
            polys.append(v if isinstance(v, Poly) else Poly.const(target, v))
        if len(polys) != len(self.vars):
            raise ValueError("need one value per variable")
        cache: list[dict[int, Poly]] = [
            {0: Poly.const(target, 1)} for _ in polys
        ]

        def power(i: int, n: int) -> Poly:
            c = cache[i]
            if n not in c:
                c[n] = power(i, n - 1) * polys[i]
            return c[n]

        out = Poly(target)
        for e, c in self.terms.items():
            term = Poly.const(target, c)
            for i, exp in enumerate(e):
                if exp:
                    term = term * power(i, exp)
            out = out + term
        return out

    def eval_scalar(self, values: Sequence[Scalar | int | Fraction]) -> Scalar:
        if len(values) != len(self.vars):
            raise ValueError("need one value per variable")
        vals = [_as_scalar(v) for v in values]
        out = _S0
        for e, c in self.terms.items():
            term = c
            for v, exp in zip(vals, e):
                if exp:
                    term = term * v ** exp
            out = out + term
        return out

    def exact_div(self, divisor: "Poly") -> "Poly | None":
        """Exact quotient self/divisor, or None when it is not a polynomial.

        Single-divisor division with respect to a graded order; the remainder
        is zero exactly when the divisor divides self.
        """
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")

        def key(e):
            return (sum(e), e)

        dlead = max(divisor.terms, key=key)
        dc = divisor.terms[dlead]
        rem = self
        quo = Poly(self.vars)
        while not rem.is_zero():
            rlead = max(rem.terms, key=key)
            diff = tuple(r - d for r, d in zip(rlead, dlead))
            if any(x < 0 for x in diff):
                return None
            q = Poly(self.vars, {diff: rem.terms[rlead] / dc})
            quo = quo + q
            rem = rem - q * divisor
        return quo

    def __str__(self):
        if not self.terms:
            return "0"
        parts: list[str] = []
        for e in sorted(self.terms, key=lambda ee: (sum(ee), ee), reverse=True):
            c = self.terms[e]
            body = "*".join(
                v if k == 1 else f"{v}^{k}"
                for v, k in zip(self.vars, e) if k
            )
            if c.is_rational():
                q = c.as_fraction()
                neg, mag = q < 0, abs(q)
                if not body:
                    text = str(mag)
                elif mag == 1:
                    text = body
                else:
                    text = f"{mag}*{body}"
            else:
                neg = False
                text = f"({c})*{body}" if body else f"({c})"
            parts.append(("- " if neg else "+ ") + text)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[2:]

    def grammar_str(self) -> str:
        """Canonical text that reparses to the same polynomial.

        Only valid when all coefficients are rational; the leading term of a
        negative-first polynomial is written with an explicit ``-1*`` factor
        because the expression grammar has no unary minus.
        """
        if not self.terms:
            return "0"
        parts: list[str] = []
        first = True
        for e in sorted(self.terms, key=lambda ee: (sum(ee), ee), reverse=True):
            q = self.terms[e].as_fraction()
            body = "*".join(
                v if k == 1 else f"{v}^{k}"
                for v, k in zip(self.vars, e) if k
            )
            mag = abs(q)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if first:
                if q < 0:
                    text = f"-{mag}*{body}" if body else f"-{mag}"
                parts.append(text)
                first = False
            else:
                parts.append((" - " if q < 0 else " + ") + text)
        return "".join(parts)

    __repr__ = __str__


# ---------------------------------------------------------------------------
# expression parser
# ---------------------------------------------------------------------------
#
#   expr     := term (('+' | '-') term)*
#   term     := factor ('*' factor)*
#   factor   := base ('^' nat)?
#   base     := rational | var | '(' expr ')'
#   rational := int ('/' nat)?
#
# Whitespace is insignificant.  There is no unary minus: a negative leading
# coefficient must be written as part of a rational, e.g. "-1*t^2".


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""


def parse_poly(text: str, variables: Sequence[str]) -> Poly:
    """Parse an expression into a Poly over the given ordered variables.

    Raises ParseError (with byte offset) on syntax errors, unknown variable
    names, or negative exponents.
    """
    variables = tuple(variables)
    lx = _Lexer(text)

    def error(msg: str):
        raise ParseError(msg, lx.pos)

    def read_nat() -> int:
        lx.skip_ws()
        if lx.peek() == "-":
            error("negative exponent")
        start = lx.pos
        while lx.pos < len(lx.text) and lx.text[lx.pos].isdigit():
            lx.pos += 1
        if lx.pos == start:
            error("expected a natural number")
        return int(lx.text[start:lx.pos])

    def read_int() -> int:
        lx.skip_ws()
        start = lx.pos
        if lx.peek() == "-":
            lx.pos += 1
        digits = lx.pos
        while lx.pos < len(lx.text) and lx.text[lx.pos].isdigit():
            lx.pos += 1
        if lx.pos == digits:
            lx.pos = start
            error("expected an integer")
        return int(lx.text[start:lx.pos])

    def base() -> Poly:
        ch = lx.peek()
        if ch == "(":
            lx.pos += 1
            inner = expr()
            if lx.peek() != ")":
                error("expected ')'")
            lx.pos += 1
            return inner
        if ch.isdigit() or ch == "-":
            n = read_int()
            if lx.peek() == "/":
                lx.pos += 1
                d = read_nat()
                if d == 0:
                    error("zero denominator")
                return Poly.const(variables, Fraction(n, d))
            return Poly.const(variables, n)
        if ch.isalpha() or ch == "_":
            start = lx.pos
            while lx.pos < len(lx.text) and (lx.text[lx.pos].isalnum() or lx.text[lx.pos] == "_"):
                lx.pos += 1
            name = lx.text[start:lx.pos]
            if name not in variables:
                lx.pos = start
                error(f"unknown variable {name!r}")
            return Poly.var(variables, name)
        error("expected a number, variable or '('")
        raise AssertionError  # unreachable

    def factor() -> Poly:
        b = base()
        if lx.peek() == "^":
            lx.pos += 1
            return b ** read_nat()
        return b

    def term() -> Poly:
        f = factor()
        while lx.peek() == "*":
            lx.pos += 1
            f = f * factor()
        return f

    def expr() -> Poly:
        acc = term()
        while True:
            ch = lx.peek()
            if ch == "+":
                lx.pos += 1
                acc = acc + term()
            elif ch == "-":
                # binary minus: a '-' that starts a rational belongs to term()
                save = lx.pos
                lx.pos += 1
                try:
                    acc = acc - term()
                except ParseError:
                    lx.pos = save
                    raise
            else:
                return acc

    out = expr()
    lx.skip_ws()
    if lx.pos != len(lx.text):
        error("trailing input")
    return out


# ---------------------------------------------------------------------------
# (a, t) conveniences
# ---------------------------------------------------------------------------

AT = ("a", "t")


def t_order(p: Poly) -> float:
    """Lowest power of t in a two-variable entry; +inf for the zero entry."""
    return p.min_deg("t")


def leading_coeff_t(p: Poly) -> Poly:
    """Coefficient of the lowest t-power, as a polynomial in a alone."""
    if p.is_zero():
        raise ValueError("zero polynomial has no leading coefficient")
    k = int(p.min_deg("t"))
    return p.coeff_of("t", k)


# ---------------------------------------------------------------------------
# test arcs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Arc:
    """Monomial test arc a = a0 + c*t**theta (with optional deeper tail).

    ``theta`` is a positive Fraction, or None for the vertical arc a == a0.
    ``c`` is an exact Scalar coefficient, or None for a symbolic generic
    coefficient (rendered as c1, c2, ... by substitution depth).
    ``refinement`` adds a further tail c'*t**(theta + theta') whose exponent
    field is relative to this segment's theta.
    """

    theta: Fraction | None
    c: Scalar | None = None
    a0: Scalar = _S0
    refinement: "Arc | None" = None

    def segments(self) -> list[tuple[Fraction, Scalar | None]]:
        """Flatten to [(absolute exponent, coefficient), ...]."""
        out: list[tuple[Fraction, Scalar | None]] = []
        node: Arc | None = self
        total = Fraction(0)
        while node is not None:
            if node.theta is None:
                break
            if node.theta <= 0:
                raise ValueError("arc exponents must be positive")
            total += node.theta
            out.append((total, node.c))
            node = node.refinement
        return out

    def theta_str(self) -> str:
        return "inf" if self.theta is None else str(self.theta)


def substitute_arc(p: Poly, arc: Arc) -> Poly:
    """Substitute the arc into a two-variable entry.

    Returns a polynomial in the single variable ``s`` where t = s**Q and
    a = a0 + sum of c_k * s**(e_k * Q), Q clearing all exponent denominators.
    Symbolic coefficients become Scalar symbols c1, c2, ...
    """
    segs = arc.segments()
    q = 1
    for e, _ in segs:
        q = q * e.denominator // _int_gcd(q, e.denominator)
    s = ("s",)
    if arc.a0.is_zero() and len(segs) <= 1:
        # a is a single monomial in s (or zero), so each (a, t) term maps
        # to one s term; skip the general composition machinery
        if segs:
            e, c = segs[0]
            coeff = Scalar.symbol("c1") if c is None else c
            a_exp = int(e * q)
            cpow: dict[int, Scalar] = {}
        terms: dict[tuple[int, ...], Scalar] = {}
        for (i, j), val in p.terms.items():
            if i:
                if not segs:
                    continue
                cp = cpow.get(i)
                if cp is None:
                    cp = cpow[i] = coeff ** i
                val = val * cp
                key = (i * a_exp + j * q,)
            else:
                key = (j * q,)
            acc = terms.get(key)
            terms[key] = val if acc is None else acc + val
        return Poly(s, terms)
    a_val = Poly.const(s, arc.a0)
    for k, (e, c) in enumerate(segs, start=1):
        coeff = Scalar.symbol(f"c{k}") if c is None else c
        a_val = a_val + Poly.monomial(s, (int(e * q),), coeff)
    t_val = Poly.monomial(s, (q,))
    return p.compose([a_val, t_val])


# ---------------------------------------------------------------------------
# truncated power series
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SeriesT:
    """Power series over Scalar truncated at ``order`` (exclusive).

    coeffs[k] is the coefficient of the k-th power; len(coeffs) == order.
    Arithmetic results carry the minimum truncation order of the operands.
    """

    coeffs: tuple[Scalar, ...]
    order: int

    def __post_init__(self):
        if len(self.coeffs) != self.order:
            raise ValueError("coefficient list must have length == order")

    @classmethod
    def from_poly(cls, p: Poly, order: int) -> "SeriesT":
        if len(p.vars) != 1:
            raise ValueError("series source must be univariate")
        coeffs = [_S0] * order
        for (e,), c in p.terms.items():
            if e < order:
                coeffs[e] = c
        return cls(tuple(coeffs), order)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, order: int | None = None) -> "SeriesT":
        cs = [_as_scalar(c) for c in coeffs]
        if order is None:
            order = len(cs)
        cs = (cs + [_S0] * order)[:order]
        return cls(tuple(cs), order)

    def __getitem__(self, k: int) -> Scalar:
        return self.coeffs[k]

    def truncate(self, order: int) -> "SeriesT":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return SeriesT(self.coeffs[:order], order)

    def valuation(self) -> float:
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                return k
        return INFINITY

    def __add__(self, other: "SeriesT") -> "SeriesT":
        n = min(self.order, other.order)
        return SeriesT(tuple(self.coeffs[k] + other.coeffs[k] for k in range(n)), n)

    def __sub__(self, other: "SeriesT") -> "SeriesT":
        n = min(self.order, other.order)
        return SeriesT(tuple(self.coeffs[k] - other.coeffs[k] for k in range(n)), n)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            c = _as_scalar(other)
            return SeriesT(tuple(x * c for x in self.coeffs), self.order)
        n = min(self.order, other.order)
        out = [_S0] * n
        for i, ci in enumerate(self.coeffs[:n]):
            if ci.is_zero():
                continue
            for j in range(n - i):
                cj = other.coeffs[j]
                if not cj.is_zero():
                    out[i + j] = out[i + j] + ci * cj
        return SeriesT(tuple(out), n)

    __rmul__ = __mul__

    def inverse(self) -> "SeriesT":
        """Multiplicative inverse; requires a nonzero constant term."""
        if self.order == 0 or self.coeffs[0].is_zero():
            raise ValueError("series inverse needs a nonzero constant term")
        a0 = self.coeffs[0]
        out = [_S1 / a0] + [_S0] * (self.order - 1)
        for k in range(1, self.order):
            acc = _S0
            for i in range(1, k + 1):
                ai = self.coeffs[i]
                if not ai.is_zero():
                    acc = acc + ai * out[k - i]
            out[k] = -acc / a0
        return SeriesT(tuple(out), self.order)

    def root(self, m: int) -> "SeriesT":
        """m-th root with the same truncation order.

        The constant term must be 1, or a rational with an exact rational
        m-th root; anything else would leave the scalar field, so callers
        normalize first (a harmless rescaling in every use here).
        """
        if m < 1:
            raise ValueError("root index must be >= 1")
        if m == 1:
            return self
        if self.order == 0 or self.coeffs[0].is_zero():
            raise ValueError("series root needs a nonzero constant term")
        c0 = self.coeffs[0]
        scale = _S1
        if not (c0 == _S1):
            if not c0.is_rational():
                raise ValueError("series root needs constant term 1 or an exact rational root")
            q = c0.as_fraction()
            if q <= 0:
                raise ValueError("series root needs a positive rational constant term")
            rn = round(q.numerator ** (1 / m))
            rd = round(q.denominator ** (1 / m))
            if rn ** m != q.numerator or rd ** m != q.denominator:
                raise ValueError(f"{q} has no exact rational {m}-th root")
            scale = Scalar.from_fraction(Fraction(rn, rd))
            inv = _S1 / c0
            unit = SeriesT(tuple(c * inv for c in self.coeffs), self.order)
            return unit.root(m) * scale
        # binomial series around 1: (1+z)^(1/m) with z of positive valuation
        n = self.order
        z = self - SeriesT.from_coeffs([1], n)
        out = SeriesT.from_coeffs([1], n)
        zk = SeriesT.from_coeffs([1], n)
        binom = Fraction(1)
        alpha = Fraction(1, m)
        for k in range(1, n):
            binom = binom * (alpha - (k - 1)) / k
            zk = zk * z
            if zk.valuation() >= n:
                break
            out = out + zk * Scalar.from_fraction(binom)
        return out

    def compose(self, inner: "SeriesT") -> "SeriesT":
        """self(inner); the inner series must have zero constant term."""
        n = min(self.order, inner.order)
        if n and not inner.coeffs[0].is_zero():
            raise ValueError("composition needs inner valuation >= 1")
        out = SeriesT.from_coeffs([self.coeffs[0]] if n else [], n)
        gk = SeriesT.from_coeffs([1], n)
        for k in range(1, n):
            gk = gk * inner
            if gk.valuation() >= n:
                break
            c = self.coeffs[k]
            if not c.is_zero():
                out = out + gk * c
        return out

    def __str__(self):
        parts = [f"{c}*s^{k}" for k, c in enumerate(self.coeffs) if not c.is_zero()]
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(s^{self.order})"


def series_invert_root(u: SeriesT, m: int) -> SeriesT:
    """Return v with v**m == u up to the truncation order.

    Used to reparametrize t so that t**m * u(t) becomes an exact m-th power:
    with s = t*v(t) one has t**m * u = s**m.
    """
    return u.root(m)


def series_reversion(v: SeriesT) -> SeriesT:
    """Given s(t) = t*v(t) with v(0) = 1, return w with t(s) = s*w(s).

    Newton iteration on the functional equation; each pass doubles the
    number of correct coefficients.
    """
    n = v.order
    if n == 0 or not (v.coeffs[0] == _S1):
        raise ValueError("reversion needs unit constant term")
    # series s(t) = t * v(t) as coefficients in t, degree shifted by one
    s_of_t = SeriesT.from_coeffs([_S0] + list(v.coeffs[: n - 1]), n) if n > 1 else SeriesT.from_coeffs([_S0], n)
    ds = _series_derivative(s_of_t)
    t = SeriesT.from_coeffs([0, 1], n)
    s_var = SeriesT.from_coeffs([0, 1], n)
    correct = 2
    while correct < n + 1:
        err = s_of_t.compose(t) - s_var
        t = t - err * ds.compose(t).inverse()
        correct *= 2
    # t(s) is exact modulo s^n, so the cofactor w in t = s*w(s) is one
    # order shorter
    return SeriesT(tuple(t.coeffs[1:]), n - 1)


def _series_derivative(f: SeriesT) -> SeriesT:
    n = f.order
    return SeriesT(tuple(f.coeffs[k + 1] * (k + 1) for k in range(n - 1)) + (_S0,), n)


# ---------------------------------------------------------------------------
# wedge membership
# ---------------------------------------------------------------------------


def wedge3(v: Sequence, omega: Mapping[tuple[int, int], object], dim: int) -> dict[tuple[int, int, int], object]:
    """Coordinates of v wedged with a 2-form, indexed by 1 <= i < j < k <= dim.

    For a decomposable 2-form representing a plane, all coordinates vanish
    exactly when the line spanned by v lies in the plane.  Entries may be
    Scalars or any ring elements supporting +, - and *.
    """
    if len(v) != dim:
        raise ValueError(f"vector has {len(v)} entries, expected {dim}")
    for (i, j) in omega:
        if not (1 <= i < j <= dim):
            raise ValueError(f"bad 2-form index ({i},{j})")

    def om(i: int, j: int):
        return omega.get((i, j), _S0)

    out: dict[tuple[int, int, int], object] = {}
    for i in range(1, dim + 1):
        for j in range(i + 1, dim + 1):
            for k in range(j + 1, dim + 1):
                out[(i, j, k)] = (
                    v[i - 1] * om(j, k) - v[j - 1] * om(i, k) + v[k - 1] * om(i, j)
                )
    return out
