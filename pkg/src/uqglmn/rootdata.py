"""Root data of gl(M|N) with the distinguished simple roots Xi_i - Xi_{i+1}.

Roots are plain tuples ``(i, j)`` with ``1 <= i < j <= M + N``; weights and
Cartan vectors are integer tuples of length ``M + N`` over the basis
Xi_1, ..., Xi_{M+N} (resp. K_1, ..., K_{M+N}).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

__all__ = [
    "Superdim",
    "Branch",
    "IndexOutOfRange",
    "NotStrictlyOrdered",
    "IndefiniteDegreeSign",
    "parity_index",
    "d_sign",
    "root_parity",
    "bilinear",
    "weight_bilinear",
    "cartan_pairing",
    "lex_compare",
    "classify",
    "weight_of",
    "positive_roots",
    "simple_root_coords",
    "degree_sign",
]


class IndexOutOfRange(IndexError):
    pass


class NotStrictlyOrdered(ValueError):
    pass


class IndefiniteDegreeSign(ValueError):
    """A weight that is neither a positive nor a negative combination of simple roots."""


@dataclass(frozen=True)
class Superdim:
    M: int
    N: int

    def __post_init__(self):
        if self.M < 1 or self.N < 1:
            raise ValueError(f"M and N must be positive, got M={self.M}, N={self.N}")
        if self.M == self.N:
            raise ValueError("gl(M|N) requires M != N")

    @property
    def n(self) -> int:
        return self.M + self.N

    def __str__(self):
        return f"gl({self.M}|{self.N})"


class Branch(enum.Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"
    VI = "VI"


def _check_index(dim: Superdim, i: int):
    if not 1 <= i <= dim.n:
        raise IndexOutOfRange(f"index {i} outside 1..{dim.n}")


def _check_root(dim: Superdim, r):
    i, j = r
    _check_index(dim, i)
    _check_index(dim, j)
    if i >= j:
        raise IndexOutOfRange(f"root {r} must satisfy i < j")


def parity_index(dim: Superdim, i: int) -> int:
    _check_index(dim, i)
    return 0 if i <= dim.M else 1


def d_sign(dim: Superdim, i: int) -> int:
    return -1 if parity_index(dim, i) else 1


def root_parity(dim: Superdim, r) -> int:
    _check_root(dim, r)
    i, j = r
    return (parity_index(dim, i) + parity_index(dim, j)) % 2


def bilinear(dim: Superdim, r1, r2) -> int:
    """<alpha_ij, alpha_mn> = d_i d_im - d_j d_jm - d_i d_in + d_j d_jn."""
    _check_root(dim, r1)
    _check_root(dim, r2)
    (i, j), (m, n) = r1, r2
    di, dj = d_sign(dim, i), d_sign(dim, j)
    return di * (i == m) - dj * (j == m) - di * (i == n) + dj * (j == n)


def weight_bilinear(dim: Superdim, w1, w2) -> int:
    """The form (Xi_i, Xi_j) = d_i delta_ij extended to arbitrary weights."""
    return sum(d_sign(dim, k + 1) * a * b for k, (a, b) in enumerate(zip(w1, w2)))


def cartan_pairing(dim: Superdim, r, c) -> int:
    """<alpha_jn, sum_i c_i K_i> = c_j - c_n."""
    _check_root(dim, r)
    if len(c) != dim.n:
        raise IndexOutOfRange(f"Cartan vector of length {len(c)}, expected {dim.n}")
    j, n = r
    return c[j - 1] - c[n - 1]


def lex_compare(r1, r2) -> int:
    """-1, 0 or 1 as r1 precedes, equals or follows r2 lexicographically."""
    return (r1 > r2) - (r1 < r2)


def classify(dim: Superdim, r1, r2) -> Branch:
    _check_root(dim, r1)
    _check_root(dim, r2)
    if not r1 < r2:
        raise NotStrictlyOrdered(f"{r1} does not precede {r2}")
    (i, j), (m, n) = r1, r2
    if i == m:
        return Branch.I
    # from here i < m
    if n < j:
        return Branch.II
    if n == j:
        return Branch.III
    if m < j:
        return Branch.IV
    if m == j:
        return Branch.V
    return Branch.VI


def weight_of(dim: Superdim, r, kind: str) -> tuple[int, ...]:
    _check_root(dim, r)
    sign = {"E": 1, "F": -1}[kind]
    w = [0] * dim.n
    w[r[0] - 1] = sign
    w[r[1] - 1] = -sign
    return tuple(w)


def positive_roots(dim: Superdim) -> list[tuple[int, int]]:
    """All positive roots in lexicographic order."""
    return list(combinations(range(1, dim.n + 1), 2))


def simple_root_coords(w) -> tuple[int, ...]:
    """Coordinates of a root-lattice weight over alpha_1, ..., alpha_{n-1}."""
    if sum(w) != 0:
        raise ValueError(f"{w} is not in the root lattice")
    out, s = [], 0
    for a in w[:-1]:
        s += a
        out.append(s)
    return tuple(out)


def degree_sign(w) -> int:
    """+1 if w is a nonzero sum of positive roots, -1 for the negation.

    Zero and mixed-sign weights raise IndefiniteDegreeSign.
    """
    c = simple_root_coords(w)
    if any(c) and all(a >= 0 for a in c):
        return 1
    if any(c) and all(a <= 0 for a in c):
        return -1
    raise IndefiniteDegreeSign(f"weight {w} has no definite sign")
