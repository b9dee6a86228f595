"""PBW normal forms in U_q(gl(M|N)).

A *letter* is one Cartan-Weyl generator, encoded as a tuple whose natural
ordering is the PBW order:

    (0, (i, j))   F_ij
    (1, c)        q^X with X = sum c_k K_k, c an integer tuple
    (2, (i, j))   E_ij

so a flat word of letters is an ordered monomial exactly when it is
nondecreasing, contains at most one Cartan letter and repeats no odd root.
Elements map such flat monomials to nonzero coefficients.  Coefficients live
in whatever field the ``q`` of the algebra belongs to: the symbolic
``qcoeff.q`` by default, or a Fraction to compute at a specialised value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import qcoeff
from .rootdata import (
    Branch,
    IndefiniteDegreeSign,
    Superdim,
    _check_root,
    bilinear,
    classify,
    degree_sign,
    parity_index,
    positive_roots,
    simple_root_coords,
    weight_bilinear,
)

__all__ = [
    "F_KIND",
    "K_KIND",
    "E_KIND",
    "E",
    "F",
    "QK",
    "Algebra",
    "Element",
    "PBWMonomial",
    "NotHomogeneous",
    "DimensionMismatch",
    "AlreadyOrdered",
    "StraighteningError",
    "IndefiniteDegreeSign",
]

F_KIND, K_KIND, E_KIND = 0, 1, 2

# guard against a rule table that fails to terminate
MAX_DEPTH = 2000


class NotHomogeneous(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


class AlreadyOrdered(ValueError):
    pass


class StraighteningError(RuntimeError):
    pass


def E(i, j):
    return (E_KIND, (i, j))


def F(i, j):
    return (F_KIND, (i, j))


def QK(c):
    return (K_KIND, tuple(c))


@dataclass(frozen=True, order=True)
class PBWMonomial:
    """Compressed view of an ordered monomial: F-block, Cartan vector, E-block."""

    f_block: tuple
    cartan: tuple
    e_block: tuple

    @classmethod
    def from_word(cls, mono, n):
        f, e, c = [], [], (0,) * n
        for kind, data in mono:
            if kind == K_KIND:
                c = data
                continue
            block = f if kind == F_KIND else e
            if block and block[-1][0] == data:
                block[-1] = (data, block[-1][1] + 1)
            else:
                block.append((data, 1))
        return cls(tuple(f), c, tuple(e))

    def to_word(self):
        out = [F(*r) for r, k in self.f_block for _ in range(k)]
        if any(self.cartan):
            out.append(QK(self.cartan))
        out += [E(*r) for r, k in self.e_block for _ in range(k)]
        return tuple(out)


def _add_into(acc, mono, c):
    s = acc.get(mono)
    s = c if s is None else s + c
    if s:
        acc[mono] = s
    else:
        acc.pop(mono, None)


class Algebra:
    """U_q(gl(M|N)) with coefficients in the field generated by ``q``."""

    def __init__(self, dim: Superdim, q=None):
        self.dim = dim
        self.q = qcoeff.q if q is None else q
        if isinstance(self.q, int):
            self.q = Fraction(self.q)
        self.one = self.q**0
        n = dim.n
        self.n = n
        self._par = {i: parity_index(dim, i) for i in range(1, n + 1)}
        self._d = {i: 1 - 2 * p for i, p in self._par.items()}
        self.roots = positive_roots(dim)
        self._rpar = {r: (self._par[r[0]] + self._par[r[1]]) % 2 for r in self.roots}
        self._qpow = {}
        self._mult_cache = {}
        self._expand_cache = {}
        self._depth = 0

    # -- scalars ---------------------------------------------------------

    def qpow(self, k):
        v = self._qpow.get(k)
        if v is None:
            v = self._qpow[k] = self.q**k
        return v

    def q_i(self, i, k=1):
        """q_i**k with q_i = q**d_i."""
        return self.qpow(self._d[i] * k)

    def d(self, i):
        return self._d[i]

    def parity(self, i):
        return self._par[i]

    def is_odd(self, r):
        return self._rpar[r]

    # -- construction ----------------------------------------------------

    def _check_letter(self, x):
        kind, data = x
        if kind == K_KIND:
            if len(data) != self.n:
                raise ValueError(f"Cartan vector {data} must have length {self.n}")
        elif kind in (E_KIND, F_KIND):
            _check_root(self.dim, data)
        else:
            raise ValueError(f"unknown letter {x!r}")

    def zero(self):
        return Element(self, {})

    def scalar(self, c):
        return Element(self, {(): self.one * c} if c else {})

    def __call__(self, *letters):
        """The normalized product of the given letters."""
        return self.normalize([(self.one, letters)])

    def E(self, i, j):
        return self(E(i, j))

    def F(self, i, j):
        return self(F(i, j))

    def cartan(self, c):
        return self(QK(c))

    def cartan_vector(self, pairs):
        """Integer vector from ``{index: coefficient}``."""
        c = [0] * self.n
        for i, v in pairs.items():
            c[i - 1] += v
        return tuple(c)

    # -- rewrite table ---------------------------------------------------

    def _rewrite(self, y, x):
        """Rewrite the out-of-order pair y*x as a list of (coefficient, word)."""
        ky, dy = y
        kx, dx = x
        if ky == E_KIND and kx == K_KIND:
            # q^X E q^-X = q^<alpha, X> E
            i, j = dy
            return [(self.qpow(dx[j - 1] - dx[i - 1]), (x, y))]
        if ky == K_KIND and kx == F_KIND:
            # q^X F q^-X = q^-<alpha, X> F
            i, j = dx
            return [(self.qpow(dy[j - 1] - dy[i - 1]), (x, y))]
        if ky == E_KIND and kx == F_KIND:
            return self._rewrite_ef(dy, dx)
        if ky == kx and ky in (E_KIND, F_KIND):
            return self._rewrite_same(ky, dx, dy)
        raise AssertionError(f"no rule for {y!r} {x!r}")

    def _swap_factor(self, r, s):
        sign = -1 if self._rpar[r] and self._rpar[s] else 1
        return sign * self.qpow(bilinear(self.dim, r, s))

    def _rewrite_same(self, kind, r, s):
        """E_s E_r or F_s F_r with r lexicographically before s."""
        factor = self._swap_factor(r, s)
        branch = classify(self.dim, r, s)
        (i, j), (m, n) = r, s
        if kind == E_KIND:
            # E_r E_s - sign q^-(r,s) E_s E_r = C
            out = [(factor, (E(*r), E(*s)))]
            if branch is Branch.V:
                out.append((-factor, (E(i, n),)))
            elif branch is Branch.IV:
                # C = -(q_m - q_m^-1) E_mj E_in
                kap = self.q_i(m) - self.q_i(m, -1)
                out.append((factor * kap, (E(m, j), E(i, n))))
            return out
        # F_s F_r - sign q^(r,s) F_r F_s = C
        out = [(factor, (F(*r), F(*s)))]
        if branch is Branch.V:
            out.append((self.one, (F(i, n),)))
        elif branch is Branch.IV:
            # C = (q_m - q_m^-1) F_in F_mj
            kap = self.q_i(m) - self.q_i(m, -1)
            out.append((kap, (F(i, n), F(m, j))))
        return out

    def _kvec(self, plus, minus):
        # d_a K_a - d_b K_b
        c = [0] * self.n
        c[plus - 1] += self._d[plus]
        c[minus - 1] -= self._d[minus]
        return tuple(c)

    def _rewrite_ef(self, r, s):
        """E_r F_s = sign F_s E_r + [[E_r, F_s]]."""
        sign = -1 if self._rpar[r] and self._rpar[s] else 1
        out = [(self.one * sign, (F(*s), E(*r)))]
        if r == s:
            # [[E_ij, F_ij]] = (q^(d_i K_i - d_j K_j) - q^-(...)) / (q_i - q_i^-1)
            i, j = r
            inv = 1 / (self.q_i(i) - self.q_i(i, -1))
            h = self._kvec(i, j)
            out.append((inv, (QK(h),)))
            out.append((-inv, (QK(tuple(-a for a in h)),)))
            return out
        if r < s:
            branch = classify(self.dim, r, s)
            (i, j), (m, n) = r, s
            if branch is Branch.I:
                # [[E_ij, F_in]] = -(-1)^([i]+[j]) q^(-d_i K_i + d_j K_j) F_jn
                c = -1 if not self._rpar[r] else 1
                out.append((self.one * c, (QK(self._kvec(j, i)), F(j, n))))
            elif branch is Branch.III:
                # [[E_ij, F_mj]] = q^(-d_m K_m + d_j K_j) E_im
                out.append((self.one, (QK(self._kvec(j, m)), E(i, m))))
            elif branch is Branch.IV:
                # [[E_ij, F_mn]] = (q_j - q_j^-1) q^(-d_m K_m + d_j K_j) F_jn E_im
                kap = self.q_i(j) - self.q_i(j, -1)
                out.append((kap, (QK(self._kvec(j, m)), F(j, n), E(i, m))))
            return out
        branch = classify(self.dim, s, r)
        (i, j), (m, n) = s, r
        if branch is Branch.I:
            # [[E_in, F_ij]] = -(-1)^([i]+[j]) E_jn q^(d_i K_i - d_j K_j)
            c = -1 if not self._rpar[s] else 1
            out.append((self.one * c, (E(j, n), QK(self._kvec(i, j)))))
        elif branch is Branch.III:
            # [[E_mj, F_ij]] = F_im q^(d_m K_m - d_j K_j)
            out.append((self.one, (F(i, m), QK(self._kvec(m, j)))))
        elif branch is Branch.IV:
            # [[E_mn, F_ij]] = -(q_j - q_j^-1) F_im E_jn q^(d_m K_m - d_j K_j)
            kap = self.q_i(j) - self.q_i(j, -1)
            out.append((-kap, (F(i, m), E(j, n), QK(self._kvec(m, j)))))
        return out

    # -- straightening ---------------------------------------------------

    def _mult(self, m, x):
        """Normal form of (ordered monomial m) * (letter x) as a dict."""
        key = (m, x)
        hit = self._mult_cache.get(key)
        if hit is not None:
            return hit
        self._depth += 1
        try:
            if self._depth > MAX_DEPTH:
                raise StraighteningError("straightening did not terminate")
            res = self._mult_uncached(m, x)
        finally:
            self._depth -= 1
        self._mult_cache[key] = res
        return res

    def _mult_uncached(self, m, x):
        one = self.one
        if x[0] == K_KIND and not any(x[1]):
            return {m: one}
        if not m:
            return {(x,): one}
        y = m[-1]
        if y[0] == K_KIND and x[0] == K_KIND:
            c = tuple(a + b for a, b in zip(y[1], x[1]))
            return {m[:-1] + ((K_KIND, c),) if any(c) else m[:-1]: one}
        if y < x:
            return {m + (x,): one}
        if y == x:
            return {} if self._rpar[x[1]] else {m + (x,): one}
        out = {}
        head = m[:-1]
        for c, w in self._rewrite(y, x):
            for mono, c2 in self._mult_word(head, w).items():
                _add_into(out, mono, c * c2)
        return out

    def _mult_word(self, m, word):
        acc = {m: self.one}
        for x in word:
            nxt = {}
            for mono, c in acc.items():
                for mono2, c2 in self._mult(mono, x).items():
                    _add_into(nxt, mono2, c * c2)
            acc = nxt
            if not acc:
                break
        return acc

    def normalize(self, terms):
        """Normal form of sum(c * word) for an iterable of (coefficient, word)."""
        acc = {}
        for c, word in terms:
            if not c:
                continue
            for x in word:
                self._check_letter(x)
            for mono, c2 in self._mult_word((), tuple(word)).items():
                _add_into(acc, mono, c * c2)
        return Element(self, acc)

    def straighten_pair(self, a, b):
        """Apply the commutation rule to the out-of-order pair a*b and normalize."""
        self._check_letter(a)
        self._check_letter(b)
        if not a[0] == b[0] == K_KIND:
            if a < b or (a == b and not self._rpar[a[1]]):
                raise AlreadyOrdered(f"{a!r} {b!r} is already ordered")
        return Element(self, dict(self._mult((a,), b)))

    def multiply(self, a, b):
        self._same(a, b)
        acc = {}
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                for mono, c in self._mult_word(m1, m2).items():
                    _add_into(acc, mono, c1 * c2 * c)
        return Element(self, acc)

    def _same(self, a, b):
        if a.alg is not self or b.alg is not self:
            if a.alg.dim != b.alg.dim or a.alg.dim != self.dim:
                raise DimensionMismatch(f"{a.alg.dim} vs {b.alg.dim}")
            if a.alg.q != b.alg.q:
                raise DimensionMismatch("elements over different coefficient fields")

    # -- root vectors ----------------------------------------------------

    def expand_to_simple(self, kind, r):
        """E_ij or F_ij as a list of (coefficient, word in simple generators)."""
        if kind in ("E", "F"):
            kind = E_KIND if kind == "E" else F_KIND
        key = (kind, r)
        hit = self._expand_cache.get(key)
        if hit is not None:
            return hit
        _check_root(self.dim, r)
        i, j = r
        if j == i + 1:
            out = [(self.one, ((kind, r),))]
        else:
            k = j - 1
            head = self.expand_to_simple(kind, (i, k))
            simple = (kind, (k, j))
            if kind == E_KIND:
                # E_{i,k+1} = E_ik E_k - q_k E_k E_ik
                out = [(c, w + (simple,)) for c, w in head]
                out += [(-self.q_i(k) * c, (simple,) + w) for c, w in head]
            else:
                # F_{i,k+1} = F_k F_ik - q_k^-1 F_ik F_k
                out = [(c, (simple,) + w) for c, w in head]
                out += [(-self.q_i(k, -1) * c, w + (simple,)) for c, w in head]
        self._expand_cache[key] = out
        return out

    def expand_word(self, word):
        """Replace every root vector of a word by its simple expansion."""
        terms = [(self.one, ())]
        for x in word:
            if x[0] == K_KIND or x[1][1] == x[1][0] + 1:
                terms = [(c, w + (x,)) for c, w in terms]
                continue
            exp = self.expand_to_simple(x[0], x[1])
            terms = [(c * c2, w + w2) for c, w in terms for c2, w2 in exp]
        return terms

    # -- gradings and the q-supercommutator -------------------------------

    def monomial_weight(self, mono):
        w = [0] * self.n
        for kind, data in mono:
            if kind == K_KIND:
                continue
            s = 1 if kind == E_KIND else -1
            w[data[0] - 1] += s
            w[data[1] - 1] -= s
        return tuple(w)

    def monomial_parity(self, mono):
        return sum(self._rpar[data] for kind, data in mono if kind != K_KIND) % 2

    def weight_parity(self, w):
        """Parity of a root-lattice weight: the coefficient of the odd simple root mod 2."""
        return simple_root_coords(w)[self.dim.M - 1] % 2

    def supercommutator(self, a, b):
        """[[a, b]] for homogeneous a, b of definite-sign degrees."""
        self._same(a, b)
        if not a or not b:
            return self.zero()
        wa, wb = a.weight(), b.weight()
        sa, sb = degree_sign(wa), degree_sign(wb)
        sign = -1 if self.weight_parity(wa) and self.weight_parity(wb) else 1
        form = weight_bilinear(self.dim, wa, wb)
        if sa > 0 and sb > 0:
            f = self.qpow(-form)
        elif sa < 0 and sb < 0:
            f = self.qpow(form)
        else:
            f = self.one
        return a * b - (b * a) * (sign * f)


class Element:
    """A finite linear combination of ordered monomials."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: Algebra, terms: dict):
        self.alg = alg
        self.terms = terms

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def _coerce(self, other):
        if isinstance(other, Element):
            self.alg._same(self, other)
            return other
        return self.alg.scalar(other)

    def __add__(self, other):
        other = self._coerce(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            _add_into(acc, m, c)
        return Element(self.alg, acc)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.alg, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        if not c:
            return self.alg.zero()
        return Element(self.alg, {m: v * c for m, v in self.terms.items() if v * c})

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.alg.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("elements only take nonnegative integer powers")
        out = self.alg.scalar(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.alg.dim == other.alg.dim and self.terms == other.terms
        if isinstance(other, (int, Fraction, qcoeff.QRat)):
            return self == self.alg.scalar(other)
        return NotImplemented

    __hash__ = None

    def weights(self):
        return {self.alg.monomial_weight(m) for m in self.terms}

    def weight(self):
        ws = self.weights()
        if len(ws) != 1:
            raise NotHomogeneous(f"element has {len(ws)} distinct weights")
        return ws.pop()

    def parity(self):
        ps = {self.alg.monomial_parity(m) for m in self.terms}
        if len(ps) != 1:
            raise NotHomogeneous("element is not parity-homogeneous")
        return ps.pop()

    def scalar_part(self):
        return self.terms.get((), 0)

    def is_scalar(self):
        return all(m == () for m in self.terms)

    def pbw_terms(self):
        """(PBWMonomial, coefficient) pairs in canonical display order."""
        items = [(PBWMonomial.from_word(m, self.alg.n), c) for m, c in self.terms.items()]
        items.sort(key=lambda t: t[0], reverse=True)
        return items

    def __str__(self):
        from .render import render_text

        return render_text(self)

    def __repr__(self):
        return f"<Element of U_q({self.alg.dim}): {self}>"

