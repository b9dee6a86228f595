"""Exact arithmetic over Q(q).

Laurent polynomials are stored as ``{exponent: coefficient}`` dicts with no
zero coefficients.  Rational functions are kept as reduced fractions
``num/den`` with ``den`` an ordinary polynomial, ``den(0) != 0`` and ``den``
monic, so two equal functions always have identical representations.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "LaurentPoly",
    "QRat",
    "PoleAtPoint",
    "q",
    "qnum",
    "kappa",
    "eval_at",
    "limit_at_one",
    "expand_at_one",
]


class PoleAtPoint(ZeroDivisionError):
    """The canonical denominator vanishes at the requested point."""


def _num(c):
    # keep integral values as int so the common path never touches Fraction
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class LaurentPoly:
    """A Laurent polynomial in q with rational coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            terms = dict(terms)
        self.terms = {k: _num(v) for k, v in terms.items() if v != 0}
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        p = object.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c):
        return cls._raw({0: _num(c)} if c else {})

    @classmethod
    def monomial(cls, k, c=1):
        return cls._raw({k: _num(c)} if c else {})

    def is_zero(self):
        return not self.terms

    __bool__ = lambda self: bool(self.terms)

    def is_one(self):
        return len(self.terms) == 1 and self.terms.get(0) == 1

    def degree(self):
        return max(self.terms)

    def valuation(self):
        return min(self.terms)

    def leading_coefficient(self):
        return self.terms[max(self.terms)]

    def shift(self, k):
        """Multiply by q**k."""
        if k == 0:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        if len(self.terms) < len(other.terms):
            self, other = other, self
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = _num(s)
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            if not other:
                return LaurentPoly._raw({})
            other = _num(other)
            return LaurentPoly._raw({e: _num(c * other) for e, c in self.terms.items()})
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw({e: _num(c) for e, c in out.items() if c})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __call__(self, x):
        """Evaluate at a rational point."""
        x = Fraction(x)
        total = Fraction(0)
        for e, c in self.terms.items():
            if e < 0 and x == 0:
                raise PoleAtPoint("negative power of q at q = 0")
            total += c * x**e
        return _num(total)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        return _render_laurent(self.terms)


# -- dense polynomial helpers (coefficient lists, lowest degree first) --------


def _to_dense(p: LaurentPoly):
    """Return (shift, coeffs) with p = q**shift * sum(coeffs[k] q**k), coeffs[0] != 0."""
    lo, hi = min(p.terms), max(p.terms)
    return lo, [p.terms.get(e, 0) for e in range(lo, hi + 1)]


def _from_dense(coeffs, shift=0):
    return LaurentPoly._raw({k + shift: _num(c) for k, c in enumerate(coeffs) if c})


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _divmod_dense(a, b):
    a = [Fraction(c) for c in a]
    lb = Fraction(b[-1])
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], _trim(a)
    quot = [Fraction(0)] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db] / lb
        quot[k] = c
        if c:
            for t in range(db + 1):
                a[k + t] -= c * b[t]
    return _trim(quot), _trim(a[:db])


def _gcd_dense(a, b):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _divmod_dense(a, b)
        a, b = b, r
    lc = Fraction(a[-1])
    return [Fraction(c) / lc for c in a]


class QRat:
    """An element of Q(q) in canonical reduced form."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly.const(num)
        if not isinstance(den, LaurentPoly):
            den = LaurentPoly.const(den)
        n, d = _canonical(num, den)
        self.num = n
        self.den = d
        self._hash = None

    @classmethod
    def _raw(cls, num, den=None):
        x = object.__new__(cls)
        x.num = num
        x.den = _ONE_POLY if den is None else den
        x._hash = None
        return x

    @classmethod
    def q(cls, k=1):
        return cls._raw(LaurentPoly.monomial(k))

    @classmethod
    def coerce(cls, x):
        if isinstance(x, QRat):
            return x
        if isinstance(x, LaurentPoly):
            return cls._raw(x)
        if isinstance(x, (int, Fraction)):
            return cls._raw(LaurentPoly.const(x))
        raise TypeError(f"cannot coerce {type(x).__name__} to QRat")

    def is_laurent(self):
        return self.den.is_one()

    def __bool__(self):
        return bool(self.num.terms)

    def __add__(self, other):
        try:
            other = QRat.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den is other.den or self.den == other.den:
            if self.den.is_one():
                return QRat._raw(self.num + other.num)
            return QRat(self.num + other.num, self.den)
        return QRat(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QRat._raw(-self.num, self.den)

    def __sub__(self, other):
        try:
            other = QRat.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return _ZERO
            return QRat._raw(self.num * other, self.den)
        try:
            other = QRat.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return QRat._raw(self.num * other.num)
        return QRat(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("division by the zero fraction")
        return QRat(self.den, self.num)

    def __truediv__(self, other):
        try:
            other = QRat.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QRat.coerce(other) * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        if self.den.is_one() and len(self.num.terms) == 1:
            (e, c), = self.num.terms.items()
            return QRat._raw(LaurentPoly.monomial(e * k, c**k))
        out = _ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, QRat):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self == QRat.coerce(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"QRat({self})"

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        if len(self.num.terms) == 1:
            return _wrap(self.num.terms) + "/" + _wrap(self.den.terms, force=True)
        shift = self.num.valuation()
        top = self.num.shift(-shift)
        s = _wrap(top.terms) + "/" + _wrap(self.den.terms, force=True)
        if shift:
            s += f"*q^{shift}" if shift != 1 else "*q"
        return s


def _canonical(num: LaurentPoly, den: LaurentPoly):
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return num, _ONE_POLY
    dshift, dcoef = _to_dense(den)
    num = num.shift(-dshift)
    if len(dcoef) > 1:
        nshift, ncoef = _to_dense(num)
        g = _gcd_dense(ncoef, dcoef)
        if len(g) > 1:
            ncoef, _ = _divmod_dense(ncoef, g)
            dcoef, _ = _divmod_dense(dcoef, g)
        num = _from_dense(ncoef, nshift)
    lc = dcoef[-1]
    if lc != 1:
        lc = Fraction(lc)
        dcoef = [Fraction(c) / lc for c in dcoef]
        num = num * (1 / lc)
    return num, _from_dense(dcoef)


def _render_term(c, e, first):
    neg = c < 0
    a = -c if neg else c
    if e == 0:
        body = str(a)
    else:
        qp = "q" if e == 1 else f"q^{e}"
        body = qp if a == 1 else f"{a}*{qp}"
    if first:
        return ("-" if neg else "") + body
    return (" - " if neg else " + ") + body


def _render_laurent(terms):
    if not terms:
        return "0"
    return "".join(
        _render_term(terms[e], e, i == 0) for i, e in enumerate(sorted(terms, reverse=True))
    )


def _wrap(terms, force=False):
    s = _render_laurent(terms)
    if force or len(terms) > 1 or s.startswith("-") or "/" in s:
        return f"({s})"
    return s


_ONE_POLY = LaurentPoly._raw({0: 1})
_ONE = QRat._raw(_ONE_POLY)
_ZERO = QRat._raw(LaurentPoly._raw({}))

q = QRat.q()


def qnum(n: int) -> QRat:
    """The q-number [n]_q = (q^n - q^-n)/(q - q^-1), a Laurent polynomial for integer n."""
    return (q**n - q ** (-n)) / (q - q**-1)


def kappa(d: int) -> QRat:
    """q^d - q^-d for a sign d = +1 or -1."""
    if d not in (1, -1):
        raise ValueError("d must be +1 or -1")
    return q**d - q ** (-d)


def eval_at(x, q0) -> Fraction:
    """Exact value of ``x`` at ``q = q0``; raises PoleAtPoint at a pole."""
    x = QRat.coerce(x)
    q0 = Fraction(q0)
    d = x.den(q0)
    if d == 0:
        raise PoleAtPoint(f"denominator {x.den} vanishes at q = {q0}")
    return Fraction(x.num(q0)) / d


def _at_one_dense(p: LaurentPoly, shift: int):
    """Coefficients of q**shift * p(q) as a polynomial in t = q - 1 (shift makes it polynomial)."""
    p = p.shift(shift)
    assert not p.terms or p.valuation() >= 0
    out = [Fraction(0)] * (p.degree() + 1 if p.terms else 1)
    # binomial expansion of (1 + t)^e
    for e, c in p.terms.items():
        b = 1
        for k in range(e + 1):
            out[k] += c * b
            b = b * (e - k) // (k + 1)
    return out


def expand_at_one(x, order: int) -> dict[int, Fraction]:
    """Laurent expansion of ``x`` in t = q - 1, all terms t**k with k <= order.

    Returns ``{k: coefficient}`` with zero coefficients dropped.
    """
    x = QRat.coerce(x)
    if not x:
        return {}
    s = max(0, -x.num.valuation())
    a = _at_one_dense(x.num, s)
    b = _at_one_dense(x.den, s)
    va = next(k for k, c in enumerate(a) if c)
    vb = next(k for k, c in enumerate(b) if c)
    a, b = a[va:], b[vb:]
    v = va - vb
    n = order - v + 1
    if n <= 0:
        return {}
    # power series division a/b, b[0] != 0
    a = a + [Fraction(0)] * n
    out = []
    for k in range(n):
        c = a[k]
        for t in range(1, min(k, len(b) - 1) + 1):
            c -= out[k - t] * b[t]
        out.append(c / b[0])
    return {k + v: _num(c) for k, c in enumerate(out) if c}


def limit_at_one(x) -> Fraction:
    """lim_{q -> 1} x, after cancelling common factors of (q - 1)."""
    x = QRat.coerce(x)
    ser = expand_at_one(x, 0)
    if ser and min(ser) < 0:
        raise PoleAtPoint("infinite limit at q = 1")
    return ser.get(0, 0)
