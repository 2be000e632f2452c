"""Sparse polynomials in x, y, z with exact rational coefficients.

Coefficients are stored as ``int`` whenever they are integral and as
:class:`fractions.Fraction` otherwise, so integer computations (which is
what resultants and gcds mostly do after clearing denominators) stay on
the fast path.
"""
from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Rational = Fraction

VARS = ("x", "y", "z")

Exponent = tuple  # (a, b, c)


def _norm(c):
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return c.numerator
        return c
    if isinstance(c, int):
        return c
    if isinstance(c, str):
        return _norm(Fraction(c))
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


def _var_index(var) -> int:
    if isinstance(var, int):
        if var not in (0, 1, 2):
            raise ValueError(f"variable index out of range: {var}")
        return var
    try:
        return VARS.index(var)
    except ValueError:
        raise ValueError(f"unknown variable {var!r}") from None


def _grlex_key(e):
    return (e[0] + e[1] + e[2], e)


class TriPoly:
    """Immutable sparse polynomial in x, y, z over the rationals."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                e = tuple(int(k) for k in e)
                if len(e) != 3 or min(e) < 0:
                    raise ValueError(f"bad exponent {e}")
                c = _norm(c)
                if c:
                    clean[e] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "TriPoly":
        # terms already normalized and free of zeros
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c) -> "TriPoly":
        return cls({(0, 0, 0): c})

    @classmethod
    def var(cls, name) -> "TriPoly":
        e = [0, 0, 0]
        e[_var_index(name)] = 1
        return cls._raw({tuple(e): 1})

    @classmethod
    def monomial(cls, exps, coeff=1) -> "TriPoly":
        return cls({tuple(exps): coeff})

    @classmethod
    def linear(cls, a, b, c) -> "TriPoly":
        return cls({(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, exps) -> Fraction | int:
        return self._terms.get(tuple(exps), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and (0, 0, 0) in self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def degree_in(self, var) -> int:
        i = _var_index(var)
        if not self._terms:
            return -1
        return max(e[i] for e in self._terms)

    def variables(self) -> set:
        out = set()
        for e in self._terms:
            for i in range(3):
                if e[i]:
                    out.add(i)
        return out

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self._terms}
        return len(degs) <= 1

    def leading_term(self):
        """(exponent, coefficient) of the graded-lex leading term, x > y > z."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms, key=_grlex_key)
        return e, self._terms[e]

    def leading_coefficient(self):
        return self.leading_term()[1]

    def evaluate(self, point: Sequence):
        x, y, z = (_norm(Fraction(v)) for v in point)
        total = 0
        for (a, b, c), k in self._terms.items():
            total += k * x**a * y**b * z**c
        return _norm(Fraction(total))

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, TriPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return TriPoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = _norm(v)
            else:
                out.pop(e, None)
        return TriPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return TriPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = _norm(other)
            if not other:
                return ZERO
            return TriPoly._raw({e: _norm(c * other) for e, c in self._terms.items()})
        if not isinstance(other, TriPoly):
            return NotImplemented
        out: dict = {}
        get = out.get
        for (a, b, c), u in self._terms.items():
            for (p, q, r), v in other._terms.items():
                k = (a + p, b + q, c + r)
                out[k] = get(k, 0) + u * v
        return TriPoly._raw({e: _norm(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "TriPoly":
        return self * c

    def shift(self, var, k: int) -> "TriPoly":
        """Multiply by ``var**k``."""
        i = _var_index(var)
        out = {}
        for e, c in self._terms.items():
            e2 = list(e)
            e2[i] += k
            out[tuple(e2)] = c
        return TriPoly._raw(out)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TriPoly.constant(other)
        if not isinstance(other, TriPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"TriPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


ZERO = TriPoly._raw({})
ONE = TriPoly._raw({(0, 0, 0): 1})


# -- printing -------------------------------------------------------------

def _monomial_str(e) -> str:
    parts = []
    for name, k in zip(VARS, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_poly(f: TriPoly) -> str:
    """Canonical text form: graded-lex descending terms, explicit * and ^."""
    if f.is_zero():
        return "0"
    out = []
    for i, e in enumerate(sorted(f._terms, key=_grlex_key, reverse=True)):
        c = f._terms[e]
        neg = c < 0
        a = -c if neg else c
        mono = _monomial_str(e)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


# -- parsing --------------------------------------------------------------

class PolySyntaxError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            name = text[i:j]
            if name not in VARS:
                raise PolySyntaxError(f"unknown identifier {name!r}", i, text)
            tokens.append(("var", name, i))
            i = j
        elif ch in "+-*^()/":
            tokens.append((ch, ch, i))
            i += 1
        else:
            raise PolySyntaxError(f"unexpected character {ch!r}", i, text)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise PolySyntaxError(f"expected {kind!r}, found {what}", tok[2], self.text)
        self.pos += 1
        return tok

    def parse(self) -> TriPoly:
        f = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise PolySyntaxError(f"unexpected {tok[1]!r}", tok[2], self.text)
        return f

    def expr(self) -> TriPoly:
        sign = 1
        # a leading sign is accepted so printed output re-parses
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        f = self.term() * sign
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            f = f + t if op == "+" else f - t
        return f

    def term(self) -> TriPoly:
        f = self.factor()
        while self.peek()[0] == "*":
            self.take()
            f = f * self.factor()
        return f

    def factor(self) -> TriPoly:
        base = self.base()
        if self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] != "int":
                raise PolySyntaxError(
                    "exponent must be a non-negative integer literal", tok[2], self.text
                )
            self.take()
            return base ** tok[1]
        return base

    def base(self) -> TriPoly:
        tok = self.peek()
        kind = tok[0]
        if kind == "var":
            self.take()
            return TriPoly.var(tok[1])
        if kind == "int":
            self.take()
            if self.peek()[0] == "/":
                self.take()
                den = self.peek()
                if den[0] != "int":
                    raise PolySyntaxError("expected integer denominator", den[2], self.text)
                self.take()
                if den[1] == 0:
                    raise PolySyntaxError("zero denominator", den[2], self.text)
                return TriPoly.constant(Fraction(tok[1], den[1]))
            return TriPoly.constant(tok[1])
        if kind == "(":
            self.take()
            f = self.expr()
            self.take(")")
            return f
        what = "end of input" if kind == "end" else repr(tok[1])
        raise PolySyntaxError(f"unexpected {what}", tok[2], self.text)


def parse_poly(text: str) -> TriPoly:
    """Parse an expression in x, y, z with integer or p/q literals."""
    return _Parser(text).parse()


# -- calculus -------------------------------------------------------------

def differentiate(f: TriPoly, var) -> TriPoly:
    i = _var_index(var)
    out = {}
    for e, c in f.items():
        k = e[i]
        if k:
            e2 = list(e)
            e2[i] = k - 1
            out[tuple(e2)] = _norm(c * k)
    return TriPoly._raw(out)


def gradient(f: TriPoly) -> tuple:
    return tuple(differentiate(f, i) for i in range(3))


# -- univariate views -----------------------------------------------------

def coefficients_in(f: TriPoly, var) -> dict:
    """Map k -> coefficient of var**k (a TriPoly free of var)."""
    i = _var_index(var)
    groups: dict = {}
    for e, c in f.items():
        k = e[i]
        e2 = list(e)
        e2[i] = 0
        groups.setdefault(k, {})[tuple(e2)] = c
    return {k: TriPoly._raw(t) for k, t in groups.items()}


def _lc_in(f: TriPoly, i: int):
    d = f.degree_in(i)
    out = {}
    for e, c in f.items():
        if e[i] == d:
            e2 = list(e)
            e2[i] = 0
            out[tuple(e2)] = c
    return d, TriPoly._raw(out)


# -- division -------------------------------------------------------------

class InexactDivisionError(ArithmeticError):
    pass


def divide_exact(f: TriPoly, g: TriPoly) -> TriPoly:
    """Return q with f = q*g; raise InexactDivisionError otherwise."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if g.is_constant():
        return f * _inverse(g.coeff((0, 0, 0)))
    ge, gc = g.leading_term()
    rem = dict(f._terms)
    quot = {}
    gterms = list(g.items())
    while rem:
        e = max(rem, key=_grlex_key)
        c = rem[e]
        qe = (e[0] - ge[0], e[1] - ge[1], e[2] - ge[2])
        if min(qe) < 0:
            raise InexactDivisionError("divisor does not divide dividend")
        if isinstance(c, int) and isinstance(gc, int) and c % gc == 0:
            qc = c // gc
        else:
            qc = _norm(Fraction(c) / gc)
        quot[qe] = qc
        for (a, b, cc), v in gterms:
            k = (a + qe[0], b + qe[1], cc + qe[2])
            w = rem.get(k, 0) - qc * v
            if w:
                rem[k] = _norm(w)
            else:
                rem.pop(k, None)
    return TriPoly._raw(quot)


def _inverse(c):
    return _norm(Fraction(1) / Fraction(c))


# -- normalization and gcd ------------------------------------------------

def integer_content_normalize(f: TriPoly) -> TriPoly:
    """Primitive integer form with positive graded-lex leading coefficient."""
    if f.is_zero():
        return f
    den = 1
    for c in f._terms.values():
        if isinstance(c, Fraction):
            den = den * c.denominator // math.gcd(den, c.denominator)
    ints = {e: int(c * den) for e, c in f._terms.items()}
    g = 0
    for v in ints.values():
        g = math.gcd(g, v)
    if f.leading_coefficient() < 0:
        g = -g
    return TriPoly._raw({e: v // g for e, v in ints.items()})


def _prem(a: TriPoly, b: TriPoly, i: int) -> TriPoly:
    """Pseudo-remainder of a by b as polynomials in variable i."""
    da = a.degree_in(i)
    db, lcb = _lc_in(b, i)
    r = a
    e = da - db + 1
    while not r.is_zero():
        dr, lcr = _lc_in(r, i)
        if dr < db:
            break
        r = lcb * r - (lcr * b).shift(i, dr - db)
        e -= 1
    if e > 0:
        r = r * lcb**e
    return r


def content_in(f: TriPoly, var) -> TriPoly:
    """Gcd of the coefficients of f viewed as a polynomial in var."""
    i = _var_index(var)
    g = ZERO
    for c in sorted(coefficients_in(f, i).values(), key=lambda p: len(p._terms)):
        g = _gcd(g, c)
        if g.is_constant():
            return ONE
    return integer_content_normalize(g)


def _primitive_part_in(f: TriPoly, i: int) -> TriPoly:
    c = content_in(f, i)
    if c.is_constant():
        return integer_content_normalize(f)
    return integer_content_normalize(divide_exact(f, c))


def _subresultant_gcd(a: TriPoly, b: TriPoly, i: int) -> TriPoly:
    """Gcd of two polynomials primitive in variable i, via the subresultant PRS."""
    if a.degree_in(i) < b.degree_in(i):
        a, b = b, a
    g = ONE
    h = ONE
    while True:
        delta = a.degree_in(i) - b.degree_in(i)
        r = _prem(a, b, i)
        if r.is_zero():
            return _primitive_part_in(b, i)
        if r.degree_in(i) == 0:
            return ONE
        a, b = b, divide_exact(r, g * h**delta)
        g = _lc_in(a, i)[1]
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = divide_exact(g**delta, h ** (delta - 1))


def _gcd(f: TriPoly, g: TriPoly) -> TriPoly:
    if f.is_zero():
        return g
    if g.is_zero():
        return f
    vs = f.variables() | g.variables()
    if not vs:
        return ONE
    i = min(vs)
    if f.degree_in(i) == 0:
        return _gcd(f, content_in(g, i))
    if g.degree_in(i) == 0:
        return _gcd(content_in(f, i), g)
    cf = content_in(f, i)
    cg = content_in(g, i)
    pf = f if cf.is_constant() else divide_exact(f, cf)
    pg = g if cg.is_constant() else divide_exact(g, cg)
    h = _subresultant_gcd(pf, pg, i)
    cont = _gcd(cf, cg)
    return h if cont.is_constant() else cont * h


def poly_gcd(f: TriPoly, g: TriPoly, *more: TriPoly) -> TriPoly:
    """Greatest common divisor over Q, primitive with positive leading coefficient."""
    polys = (f, g) + more
    if all(p.is_zero() for p in polys):
        raise ValueError("gcd of zero polynomials is undefined")
    acc = ZERO
    for p in polys:
        acc = _gcd(acc, p)
        if acc.is_constant() and not acc.is_zero():
            return ONE
    return integer_content_normalize(acc)


# -- resultants -----------------------------------------------------------

def sylvester_matrix(f: TriPoly, g: TriPoly, var) -> list:
    """Sylvester matrix with f's coefficient rows first, highest power leftmost."""
    i = _var_index(var)
    m = f.degree_in(i)
    n = g.degree_in(i)
    if m <= 0 or n <= 0:
        raise ValueError("both polynomials need positive degree in the eliminated variable")
    fc = coefficients_in(f, i)
    gc = coefficients_in(g, i)
    fa = [fc.get(m - k, ZERO) for k in range(m + 1)]
    ga = [gc.get(n - k, ZERO) for k in range(n + 1)]
    size = m + n
    rows = []
    for r in range(n):
        rows.append([ZERO] * r + fa + [ZERO] * (size - r - m - 1))
    for r in range(m):
        rows.append([ZERO] * r + ga + [ZERO] * (size - r - n - 1))
    return rows


def bareiss_determinant(matrix: list) -> TriPoly:
    """Fraction-free determinant of a square matrix of TriPoly entries."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return ONE
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            for s in range(k + 1, n):
                if not a[s][k].is_zero():
                    a[k], a[s] = a[s], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                num = piv * row_i[j]
                if not aik.is_zero() and not row_k[j].is_zero():
                    num = num - aik * row_k[j]
                row_i[j] = num if prev == ONE else divide_exact(num, prev)
            row_i[k] = ZERO
        prev = piv
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def resultant_wrt(f: TriPoly, g: TriPoly, var) -> TriPoly:
    """Sylvester resultant eliminating var (f's rows first in the matrix)."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial")
    return bareiss_determinant(sylvester_matrix(f, g, var))


# -- squarefree decomposition ---------------------------------------------

def _deflate(f: TriPoly) -> TriPoly:
    # for homogeneous f over Q: prod p_i^(m_i - 1)
    return poly_gcd(f, *gradient(f))


def squarefree_part(f: TriPoly) -> TriPoly:
    """f divided by the gcd of f and its partial derivatives, normalized."""
    if f.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    if f.is_constant():
        return ONE
    return integer_content_normalize(divide_exact(f, _deflate(f)))


def _check_binary_form(f: TriPoly):
    if f.is_zero():
        raise ValueError("zero binary form")
    if not f.is_homogeneous() or len(f.variables()) > 2:
        raise ValueError("expected a nonzero binary form (homogeneous in at most two variables)")


def distinct_root_count(f: TriPoly) -> int:
    """Number of distinct roots in P^1(C) of a nonzero binary form."""
    _check_binary_form(f)
    return squarefree_part(f).degree()


def root_multiplicities(f: TriPoly) -> Counter:
    """Multiset of root multiplicities of a binary form, as {multiplicity: count}."""
    _check_binary_form(f)
    counts = Counter()
    h = f
    at_least = []
    while h.degree() > 0:
        nxt = _deflate(h)
        at_least.append(h.degree() - nxt.degree())
        h = nxt
    # at_least[k] = number of roots with multiplicity >= k+1
    for k, n in enumerate(at_least):
        later = at_least[k + 1] if k + 1 < len(at_least) else 0
        if n - later:
            counts[k + 1] = n - later
    return counts


# -- linear changes -------------------------------------------------------

def det3(m) -> Fraction:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def apply_linear_change(f: TriPoly, matrix: Sequence[Sequence]) -> TriPoly:
    """Substitute (x, y, z) -> M (x, y, z), i.e. return f(M v)."""
    m = [[_norm(Fraction(v)) for v in row] for row in matrix]
    if len(m) != 3 or any(len(row) != 3 for row in m):
        raise ValueError("expected a 3x3 matrix")
    if det3(m) == 0:
        raise ValueError("singular matrix")
    images = [TriPoly.linear(*row) for row in m]
    powers = [[ONE] for _ in range(3)]
    for i in range(3):
        top = f.degree_in(i) if not f.is_zero() else 0
        for _ in range(top):
            powers[i].append(powers[i][-1] * images[i])
    out = ZERO
    for (a, b, c), k in f.items():
        out = out + powers[0][a] * powers[1][b] * powers[2][c] * k
    return out


def product(polys: Iterable[TriPoly]) -> TriPoly:
    out = ONE
    for p in polys:
        out = out * p
    return out
