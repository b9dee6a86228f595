"""Mechanical checks of the commutation relations.

Every relation is stated here independently of the rewrite table in
:mod:`uqglmn.pbw`: root vectors are replaced by their expansions in simple
generators before normalizing, and signs are written with the index parities
exactly as the relations are usually displayed.  Two further suites do not
trust symbolic cancellation at all: one re-runs the relations with ``q``
specialised to rational numbers, the other compares the q -> 1 limit with
matrix units of gl(M|N).
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import qcoeff
from .pbw import E, F, QK, Algebra, Element, E_KIND, F_KIND
from .rootdata import Branch, Superdim, classify, positive_roots
from .render import render_text

__all__ = [
    "CheckReport",
    "algebra",
    "check_defining",
    "check_propositions",
    "check_associativity",
    "check_classical_limit",
    "check_random_eval",
    "SUITES",
    "run_suites",
]


@dataclass
class CheckReport:
    suite: str
    dim: Superdim
    instances: int = 0
    failures: list = field(default_factory=list)
    skipped: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    records: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def add(self, rel, idx, residual=None, skip=None):
        self.instances += 1
        rec = {"suite": self.suite, "dim": [self.dim.M, self.dim.N], "relation": rel, "indices": list(idx)}
        if skip is not None:
            self.skipped.append((rel, idx, skip))
            rec.update(status="skipped", reason=skip)
        elif residual:
            text = residual if isinstance(residual, str) else render_text(residual)
            self.failures.append((rel, idx, text))
            rec.update(status="fail", residual=text)
        else:
            rec.update(status="pass", residual="0")
        self.records.append(rec)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = (
            f"{status} {self.suite:<13} {self.dim}: {self.instances} instances, "
            f"{len(self.failures)} failed, {len(self.skipped)} skipped ({self.elapsed:.2f}s)"
        )
        return line

    def to_text(self) -> str:
        lines = [self.summary()]
        lines += [f"  note: {n}" for n in self.notes]
        for rel, idx, res in self.failures:
            lines.append(f"  FAIL {rel} {tuple(idx)}: residual {res}")
        for rel, idx, why in self.skipped:
            lines.append(f"  skip {rel} {tuple(idx)}: {why}")
        return "\n".join(lines)

    def to_jsonl(self) -> str:
        return "\n".join(json.dumps(r, sort_keys=True) for r in self.records)


@lru_cache(maxsize=None)
def algebra(dim: Superdim, q=None) -> Algebra:
    """Shared algebra instance, so suites reuse each other's straightening cache."""
    return Algebra(dim, q)


# -- helpers over an algebra ------------------------------------------------


class RuleMismatch(AssertionError):
    """Normalizing a word directly disagrees with normalizing its simple expansion."""

    def __init__(self, direct, expanded):
        super().__init__("direct and expanded normal forms differ")
        self.residual = direct - expanded


def _lin(A: Algebra, terms) -> Element:
    """Normalize sum(c * word) after expanding every root vector to simple generators.

    The same sum is also normalized with the root vectors kept as letters, which
    exercises the engine's root-vector rewrite rules; the two must agree.
    """
    terms = list(terms)
    out = []
    for c, w in terms:
        for c2, w2 in A.expand_word(w):
            out.append((c * c2, w2))
    expanded = A.normalize(out)
    direct = A.normalize(terms)
    if direct != expanded:
        raise RuleMismatch(direct, expanded)
    return expanded


def _sgn(e):
    return -1 if e % 2 else 1


def _kv(A, pairs):
    return QK(A.cartan_vector(pairs))


def _q(A, i, k=1):
    return A.q_i(i, k)


def _kap(A, i):
    return A.q_i(i) - A.q_i(i, -1)


# -- relation statements ------------------------------------------------------
#
# Each builder yields (relation id, indices, thunk); the thunk maps an Algebra
# to (lhs, rhs) Elements, so the same statements run over Q(q) and over Q.


def _defining_instances(dim: Superdim):
    n = dim.n
    M = dim.M
    simple = range(1, n)

    yield "cartan_unit", (), lambda A: (A.cartan((0,) * n), A.scalar(1))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            yield "cartan_merge", (i, j), lambda A, i=i, j=j: (
                A(_kv(A, {i: 1}), _kv(A, {j: 1})),
                A.cartan(tuple(a + b for a, b in zip(A.cartan_vector({i: 1}), A.cartan_vector({j: 1})))),
            )
        yield "cartan_inverse", (i,), lambda A, i=i: (A(_kv(A, {i: 1}), _kv(A, {i: -1})), A.scalar(1))
    for i in range(1, n + 1):
        for k in simple:
            pair = (i == k) - (i == k + 1)
            yield "cartan_conj_simple_E", (i, k), lambda A, i=i, k=k, p=pair: (
                A(_kv(A, {i: 1}), E(k, k + 1), _kv(A, {i: -1})),
                A.E(k, k + 1).scale(A.qpow(p)),
            )
            yield "cartan_conj_simple_F", (i, k), lambda A, i=i, k=k, p=pair: (
                A(_kv(A, {i: 1}), F(k, k + 1), _kv(A, {i: -1})),
                A.F(k, k + 1).scale(A.qpow(-p)),
            )

    def ef(A, i, j):
        lhs = A.supercommutator(A.E(i, i + 1), A.F(j, j + 1))
        if i != j:
            return lhs, A.zero()
        h = A.cartan_vector({i: A.d(i), i + 1: -A.d(i + 1)})
        rhs = (A.cartan(h) - A.cartan(tuple(-a for a in h))).scale(1 / _kap(A, i))
        return lhs, rhs

    for i in simple:
        for j in simple:
            yield "ef_simple", (i, j), lambda A, i=i, j=j: ef(A, i, j)

    # bracket forms of the Serre relations
    def bil_simple(i, j):
        d = lambda k: 1 if k <= M else -1
        return d(i) * ((i == j) - (i == j + 1)) - d(i + 1) * ((i + 1 == j) - (i + 1 == j + 1))

    for i in simple:
        for j in simple:
            if bil_simple(i, j) == 0:
                yield "scomm_zero_E", (i, j), lambda A, i=i, j=j: (
                    A.supercommutator(A.E(i, i + 1), A.E(j, j + 1)),
                    A.zero(),
                )
                yield "scomm_zero_F", (j, i), lambda A, i=i, j=j: (
                    A.supercommutator(A.F(j, j + 1), A.F(i, i + 1)),
                    A.zero(),
                )
    for i in simple:
        if bil_simple(i, i) == 0:
            continue
        if i >= 2:
            yield "scomm_cubic_minus_E", (i,), lambda A, i=i: (
                A.supercommutator(A.supercommutator(A.E(i - 1, i), A.E(i, i + 1)), A.E(i, i + 1)),
                A.zero(),
            )
            yield "scomm_cubic_minus_F", (i,), lambda A, i=i: (
                A.supercommutator(A.F(i, i + 1), A.supercommutator(A.F(i, i + 1), A.F(i - 1, i))),
                A.zero(),
            )
        if i <= n - 2:
            yield "scomm_cubic_plus_E", (i,), lambda A, i=i: (
                A.supercommutator(A.E(i, i + 1), A.supercommutator(A.E(i, i + 1), A.E(i + 1, i + 2))),
                A.zero(),
            )
            yield "scomm_cubic_plus_F", (i,), lambda A, i=i: (
                A.supercommutator(A.supercommutator(A.F(i + 1, i + 2), A.F(i, i + 1)), A.F(i, i + 1)),
                A.zero(),
            )

    # the same relations written out as words
    Es = lambda k: E(k, k + 1)
    Fs = lambda k: F(k, k + 1)
    for i in simple:
        for j in simple:
            if j - i > 1:
                yield "commute_far_E", (i, j), lambda A, i=i, j=j: (
                    _lin(A, [(1, (Es(i), Es(j))), (-1, (Es(j), Es(i)))]),
                    A.zero(),
                )
                yield "commute_far_F", (j, i), lambda A, i=i, j=j: (
                    _lin(A, [(1, (Fs(j), Fs(i))), (-1, (Fs(i), Fs(j)))]),
                    A.zero(),
                )
    yield "odd_simple_square_E", (M,), lambda A: (_lin(A, [(1, (Es(M), Es(M)))]), A.zero())
    yield "odd_simple_square_F", (M,), lambda A: (_lin(A, [(1, (Fs(M), Fs(M)))]), A.zero())
    two = lambda A: A.qpow(1) + A.qpow(-1)
    for i in simple:
        if i == M:
            continue
        if i >= 2:
            yield "cubic_minus_E", (i,), lambda A, i=i: (
                _lin(A, [
                    (1, (Es(i - 1), Es(i), Es(i))),
                    (-two(A), (Es(i), Es(i - 1), Es(i))),
                    (1, (Es(i), Es(i), Es(i - 1))),
                ]),
                A.zero(),
            )
            yield "cubic_minus_F", (i,), lambda A, i=i: (
                _lin(A, [
                    (1, (Fs(i), Fs(i), Fs(i - 1))),
                    (-two(A), (Fs(i), Fs(i - 1), Fs(i))),
                    (1, (Fs(i - 1), Fs(i), Fs(i))),
                ]),
                A.zero(),
            )
        if i <= n - 2:
            yield "cubic_plus_E", (i,), lambda A, i=i: (
                _lin(A, [
                    (1, (Es(i), Es(i), Es(i + 1))),
                    (-two(A), (Es(i), Es(i + 1), Es(i))),
                    (1, (Es(i + 1), Es(i), Es(i))),
                ]),
                A.zero(),
            )
            yield "cubic_plus_F", (i,), lambda A, i=i: (
                _lin(A, [
                    (1, (Fs(i + 1), Fs(i), Fs(i))),
                    (-two(A), (Fs(i), Fs(i + 1), Fs(i))),
                    (1, (Fs(i), Fs(i), Fs(i + 1))),
                ]),
                A.zero(),
            )
    if M >= 2 and dim.N >= 2:
        sc = lambda A, x, y: A.supercommutator(x, y)
        yield "quartic_E", (M,), lambda A: (
            sc(A, sc(A, sc(A, A.E(M - 1, M), A.E(M, M + 1)), A.E(M + 1, M + 2)), A.E(M, M + 1)),
            A.zero(),
        )
        yield "quartic_F", (M,), lambda A: (
            sc(A, A.F(M, M + 1), sc(A, A.F(M + 1, M + 2), sc(A, A.F(M, M + 1), A.F(M - 1, M)))),
            A.zero(),
        )


def _proposition_instances(dim: Superdim):
    n = dim.n
    roots = positive_roots(dim)
    par = lambda i: 0 if i <= dim.M else 1

    for (j, m) in roots:
        for i in range(1, n + 1):
            p = (i == j) - (i == m)
            yield "cartan_conj_E", (i, j, m), lambda A, i=i, j=j, m=m, p=p: (
                _lin(A, [(1, (_kv(A, {i: 1}), E(j, m), _kv(A, {i: -1})))]),
                _lin(A, [(A.qpow(p), (E(j, m),))]),
            )
            yield "cartan_conj_F", (i, j, m), lambda A, i=i, j=j, m=m, p=p: (
                _lin(A, [(1, (_kv(A, {i: 1}), F(j, m), _kv(A, {i: -1})))]),
                _lin(A, [(A.qpow(-p), (F(j, m),))]),
            )

    for r, s in combinations(roots, 2):
        (i, j), (m, n_) = r, s
        b = classify(dim, r, s)
        idx = (i, j, m, n_)
        if b is Branch.VI:
            yield "ee_commute_VI", idx, lambda A, r=r, s=s: (
                _lin(A, [(1, (E(*r), E(*s))), (-1, (E(*s), E(*r)))]), A.zero())
            yield "ff_commute_VI", idx, lambda A, r=r, s=s: (
                _lin(A, [(1, (F(*s), F(*r))), (-1, (F(*r), F(*s)))]), A.zero())
            yield "ef_commute_VI", idx, lambda A, r=r, s=s: (
                _lin(A, [(1, (E(*r), F(*s))), (-1, (F(*s), E(*r)))]), A.zero())
            yield "ef_commute_VI", (m, n_, i, j), lambda A, r=r, s=s: (
                _lin(A, [(1, (E(*s), F(*r))), (-1, (F(*r), E(*s)))]), A.zero())
        elif b is Branch.V:
            yield "ee_glue_V", idx, lambda A, i=i, j=j, n_=n_: (
                _lin(A, [(1, (E(i, j), E(j, n_))), (-_q(A, j), (E(j, n_), E(i, j)))]),
                _lin(A, [(1, (E(i, n_),))]),
            )
            yield "ff_glue_V", idx, lambda A, i=i, j=j, n_=n_: (
                _lin(A, [(1, (F(j, n_), F(i, j))), (-_q(A, j, -1), (F(i, j), F(j, n_)))]),
                _lin(A, [(1, (F(i, n_),))]),
            )
            yield "ef_commute_V", idx, lambda A, i=i, j=j, n_=n_: (
                _lin(A, [(1, (E(i, j), F(j, n_))), (-1, (F(j, n_), E(i, j)))]), A.zero())
            yield "ef_commute_V", (j, n_, i, j), lambda A, i=i, j=j, n_=n_: (
                _lin(A, [(1, (E(j, n_), F(i, j))), (-1, (F(i, j), E(j, n_)))]), A.zero())
        elif b is Branch.II:
            sg = _sgn(par(m) + par(n_))
            yield "ee_signed_II", idx, lambda A, r=r, s=s, sg=sg: (
                _lin(A, [(1, (E(*r), E(*s))), (-sg, (E(*s), E(*r)))]), A.zero())
            yield "ff_signed_II", idx, lambda A, r=r, s=s, sg=sg: (
                _lin(A, [(1, (F(*s), F(*r))), (-sg, (F(*r), F(*s)))]), A.zero())
            yield "ef_signed_II", idx, lambda A, r=r, s=s, sg=sg: (
                _lin(A, [(1, (E(*r), F(*s))), (-sg, (F(*s), E(*r)))]), A.zero())
            yield "ef_signed_II", (m, n_, i, j), lambda A, r=r, s=s, sg=sg: (
                _lin(A, [(1, (E(*s), F(*r))), (-sg, (F(*r), E(*s)))]), A.zero())
        elif b is Branch.I:
            # s = (i, n_)
            sg = _sgn(par(i) + par(j))
            yield "ee_qswap_I", idx, lambda A, i=i, j=j, n_=n_, sg=sg: (
                _lin(A, [(1, (E(i, j), E(i, n_))), (-sg * _q(A, i, -1), (E(i, n_), E(i, j)))]),
                A.zero(),
            )
            yield "ff_qswap_I", idx, lambda A, i=i, j=j, n_=n_, sg=sg: (
                _lin(A, [(1, (F(i, n_), F(i, j))), (-sg * _q(A, i), (F(i, j), F(i, n_)))]),
                A.zero(),
            )
            yield "ef_dressed_I", idx, lambda A, i=i, j=j, n_=n_, sg=sg: (
                _lin(A, [(1, (E(i, j), F(i, n_))), (-sg, (F(i, n_), E(i, j)))]),
                _lin(A, [(-sg, (_kv(A, {i: -A.d(i), j: A.d(j)}), F(j, n_)))]),
            )
            yield "ef_dressed_I", (i, n_, i, j), lambda A, i=i, j=j, n_=n_, sg=sg: (
                _lin(A, [(1, (E(i, n_), F(i, j))), (-sg, (F(i, j), E(i, n_)))]),
                _lin(A, [(-sg, (E(j, n_), _kv(A, {i: A.d(i), j: -A.d(j)})))]),
            )
        elif b is Branch.III:
            # s = (m, j)
            sg = _sgn(par(m) + par(j))
            yield "ee_qswap_III", idx, lambda A, i=i, j=j, m=m, sg=sg: (
                _lin(A, [(1, (E(i, j), E(m, j))), (-sg * _q(A, j, -1), (E(m, j), E(i, j)))]),
                A.zero(),
            )
            yield "ff_qswap_III", idx, lambda A, i=i, j=j, m=m, sg=sg: (
                _lin(A, [(1, (F(m, j), F(i, j))), (-sg * _q(A, j), (F(i, j), F(m, j)))]),
                A.zero(),
            )
            yield "ef_dressed_III", idx, lambda A, i=i, j=j, m=m, sg=sg: (
                _lin(A, [(1, (E(i, j), F(m, j))), (-sg, (F(m, j), E(i, j)))]),
                _lin(A, [(1, (_kv(A, {m: -A.d(m), j: A.d(j)}), E(i, m)))]),
            )
            yield "ef_dressed_III", (m, j, i, j), lambda A, i=i, j=j, m=m, sg=sg: (
                _lin(A, [(1, (E(m, j), F(i, j))), (-sg, (F(i, j), E(m, j)))]),
                _lin(A, [(1, (F(i, m), _kv(A, {m: A.d(m), j: -A.d(j)})))]),
            )
        else:
            # branch IV: i < m < j < n_
            sg = _sgn(par(m) + par(j))
            yield "ee_corr_IV", idx, lambda A, i=i, j=j, m=m, n_=n_, sg=sg: (
                _lin(A, [(1, (E(i, j), E(m, n_))), (-sg, (E(m, n_), E(i, j)))]),
                _lin(A, [(-_kap(A, m), (E(m, j), E(i, n_)))]),
            )
            yield "ff_corr_IV", idx, lambda A, i=i, j=j, m=m, n_=n_, sg=sg: (
                _lin(A, [(1, (F(m, n_), F(i, j))), (-sg, (F(i, j), F(m, n_)))]),
                _lin(A, [(_kap(A, m), (F(i, n_), F(m, j)))]),
            )
            yield "ef_corr_IV", idx, lambda A, i=i, j=j, m=m, n_=n_, sg=sg: (
                _lin(A, [(1, (E(i, j), F(m, n_))), (-sg, (F(m, n_), E(i, j)))]),
                _lin(A, [(_kap(A, j), (_kv(A, {m: -A.d(m), j: A.d(j)}), F(j, n_), E(i, m)))]),
            )
            yield "ef_corr_IV", (m, n_, i, j), lambda A, i=i, j=j, m=m, n_=n_, sg=sg: (
                _lin(A, [(1, (E(m, n_), F(i, j))), (-sg, (F(i, j), E(m, n_)))]),
                _lin(A, [(-_kap(A, j), (F(i, m), E(j, n_), _kv(A, {m: A.d(m), j: -A.d(j)})))]),
            )

    # generalized Serre relations, through the q-supercommutator
    def ex(A, kind, r):
        return _lin(A, [(1, ((kind, r),))])

    sc = lambda A, x, y: A.supercommutator(x, y)
    for i, j, k in combinations(range(1, n + 1), 3):
        yield "serre_gen_I", (i, j, k), lambda A, i=i, j=j, k=k: (
            sc(A, ex(A, E_KIND, (i, j)), sc(A, ex(A, E_KIND, (i, j)), ex(A, E_KIND, (j, k)))),
            A.zero(),
        )
        yield "serre_gen_I", (i, j, k), lambda A, i=i, j=j, k=k: (
            sc(A, sc(A, ex(A, F_KIND, (j, k)), ex(A, F_KIND, (i, j))), ex(A, F_KIND, (i, j))),
            A.zero(),
        )
        yield "serre_gen_III", (i, j, k), lambda A, i=i, j=j, k=k: (
            sc(A, sc(A, ex(A, E_KIND, (i, j)), ex(A, E_KIND, (j, k))), ex(A, E_KIND, (j, k))),
            A.zero(),
        )
        yield "serre_gen_III", (i, j, k), lambda A, i=i, j=j, k=k: (
            sc(A, ex(A, F_KIND, (j, k)), sc(A, ex(A, F_KIND, (j, k)), ex(A, F_KIND, (i, j)))),
            A.zero(),
        )

    for (i, j) in roots:
        if par(i) + par(j) == 1:
            yield "odd_square_E", (i, j), lambda A, i=i, j=j: (_lin(A, [(1, (E(i, j), E(i, j)))]), A.zero())
            yield "odd_square_F", (i, j), lambda A, i=i, j=j: (_lin(A, [(1, (F(i, j), F(i, j)))]), A.zero())
        sg = _sgn(par(i) + par(j))

        def cartan_ratio(A, i=i, j=j):
            h = A.cartan_vector({i: A.d(i), j: -A.d(j)})
            return (A.cartan(h) - A.cartan(tuple(-a for a in h))).scale(1 / _kap(A, i))

        yield "ef_cartan_equal", (i, j), lambda A, i=i, j=j, sg=sg, cr=cartan_ratio: (
            _lin(A, [(1, (E(i, j), F(i, j))), (-sg, (F(i, j), E(i, j)))]),
            cr(A),
        )


def _run(suite, dim, instances, A, report=None):
    report = report or CheckReport(suite, dim)
    t = time.perf_counter()
    for rel, idx, thunk in instances:
        try:
            lhs, rhs = thunk(A)
        except ZeroDivisionError as exc:
            report.add(rel, idx, skip=f"PoleAtPoint: {exc}")
            continue
        except RuleMismatch as exc:
            report.add(rel, idx, residual="rewrite rules disagree with expansion: " + render_text(exc.residual))
            continue
        report.add(rel, idx, residual=lhs - rhs)
    report.elapsed += time.perf_counter() - t
    return report


def check_defining(dim: Superdim, alg: Algebra | None = None) -> CheckReport:
    """Defining relations and Serre relations, bracket and expanded forms."""
    report = CheckReport("defining", dim)
    if not (dim.M >= 2 and dim.N >= 2):
        report.notes.append("quartic relation inapplicable (needs M >= 2 and N >= 2)")
    return _run("defining", dim, _defining_instances(dim), alg or algebra(dim), report)


def check_propositions(dim: Superdim, alg: Algebra | None = None) -> CheckReport:
    """Every commutation relation between root vectors, for every index tuple."""
    return _run("propositions", dim, _proposition_instances(dim), alg or algebra(dim))


def random_letter(dim: Superdim, rng: random.Random):
    kind = rng.randrange(3)
    if kind == 1:
        return QK(tuple(rng.randint(-1, 1) for _ in range(dim.n)))
    return (kind, rng.choice(positive_roots(dim)))


def random_word(dim: Superdim, rng: random.Random, max_len: int):
    return tuple(random_letter(dim, rng) for _ in range(rng.randint(0, max_len)))


def check_associativity(
    dim: Superdim, trials: int = 500, max_word_len: int = 4, seed: int = 0, alg: Algebra | None = None
) -> CheckReport:
    """Compare (ab)c with a(bc) for seeded random words a, b, c."""
    if trials < 1:
        raise ValueError("trials must be positive")
    A = alg or algebra(dim)
    rng = random.Random(seed)
    report = CheckReport("assoc", dim)
    t = time.perf_counter()
    for k in range(trials):
        words = [random_word(dim, rng, max_word_len) for _ in range(3)]
        a, b, c = (A.normalize([(1, w)]) for w in words)
        report.add("associativity", (k,), residual=(a * b) * c - a * (b * c))
    report.elapsed = time.perf_counter() - t
    return report


# -- classical limit ------------------------------------------------------------


def _mat_bracket(dim, x, y):
    """Super bracket of matrix units E_ab, E_cd as {(row, col): coefficient}."""
    (a, b), (c, d) = x, y
    par = lambda i: 0 if i <= dim.M else 1
    sign = _sgn(((par(a) + par(b)) % 2) * ((par(c) + par(d)) % 2))
    out = {}
    if b == c:
        out[(a, d)] = out.get((a, d), 0) + 1
    if d == a:
        out[(c, b)] = out.get((c, b), 0) - sign
    return {k: v for k, v in out.items() if v}


def _classical_key(u):
    a, b = u
    if a < b:
        return ((), None, (((a, b), 1),))
    if a > b:
        return ((((b, a), 1),), None, ())
    return ((), a, ())


def _limit(x: Element):
    """q -> 1 limit of an element, Cartan exponentials kept to first order.

    Returns {(f_block, cartan index or None, e_block): value}, or raises
    ValueError when a pole survives.
    """
    groups = {}
    for pm, c in x.pbw_terms():
        groups.setdefault((pm.f_block, pm.e_block), []).append((pm.cartan, c))
    out = {}
    for (fb, eb), items in groups.items():
        pole = 0
        for cart, c in items:
            ser = qcoeff.expand_at_one(c, 0)
            if ser and min(ser) < -1:
                raise ValueError("pole of order > 1 at q = 1")
            a_m1 = ser.get(-1, 0)
            pole += a_m1
            key = (fb, None, eb)
            out[key] = out.get(key, 0) + ser.get(0, 0)
            for k, v in enumerate(cart, start=1):
                if v and a_m1:
                    key = (fb, k, eb)
                    out[key] = out.get(key, 0) + a_m1 * v
        if pole:
            raise ValueError("simple pole at q = 1 does not cancel")
    return {k: Fraction(v) for k, v in out.items() if v}


def check_classical_limit(dim: Superdim) -> CheckReport:
    """Structure constants at q -> 1 against matrix units of gl(M|N)."""
    A = algebra(dim)
    report = CheckReport("classical", dim)
    t = time.perf_counter()
    roots = positive_roots(dim)
    unit = {("E", r): r for r in roots}
    unit.update({("F", r): (r[1], r[0]) for r in roots})
    gen = lambda g: A.E(*g[1]) if g[0] == "E" else A.F(*g[1])

    pairs = []
    for r in roots:
        for s in roots:
            if r <= s:
                pairs.append((("E", r), ("E", s)))
                pairs.append((("F", s), ("F", r)))
            pairs.append((("E", r), ("F", s)))

    def compare(rel, idx, quantum, expected):
        try:
            got = _limit(quantum)
        except ValueError as exc:
            report.add(rel, idx, residual=f"{exc}: {render_text(quantum)}")
            return
        want = {}
        for u, v in expected.items():
            key = _classical_key(u)
            want[key] = want.get(key, 0) + v
        want = {k: Fraction(v) for k, v in want.items() if v}
        if got != want:
            report.add(rel, idx, residual=f"limit {got} != classical {want}")
        else:
            report.add(rel, idx)

    for g1, g2 in pairs:
        quantum = A.supercommutator(gen(g1), gen(g2))
        rel = f"scomm_{g1[0]}{g2[0]}"
        compare(rel, g1[1] + g2[1], quantum, _mat_bracket(dim, unit[g1], unit[g2]))

    inv_t = 1 / (qcoeff.q - 1)
    for i in range(1, dim.n + 1):
        for g in sorted(unit):
            x = gen(g)
            conj = A.normalize([(1, (_kv(A, {i: 1}), (E_KIND if g[0] == "E" else F_KIND, g[1]), _kv(A, {i: -1})))])
            quantum = (conj - x).scale(inv_t)
            a, b = unit[g]
            expected = {unit[g]: (i == a) - (i == b)}
            compare(f"cartan_{g[0]}", (i,) + g[1], quantum, expected)
    report.elapsed = time.perf_counter() - t
    return report


# -- specialisation at rational q ---------------------------------------------------


def check_random_eval(dim: Superdim, q0_list=(2, Fraction(3, 2), -2), seed: int = 0) -> CheckReport:
    """Re-check every relation with q specialised to each q0.

    For each instance the relation is recomputed over Q with q = q0 (no
    symbolic cancellation involved), and the symbolic left-hand side is
    evaluated coefficientwise with ``eval_at`` and compared with the
    specialised one.  ``seed`` only fixes the order in which instances are
    visited.
    """
    report = CheckReport("eval", dim)
    sym = algebra(dim)
    insts = list(_proposition_instances(dim))
    random.Random(seed).shuffle(insts)
    t = time.perf_counter()
    for q0 in q0_list:
        q0 = Fraction(q0)
        num = Algebra(dim, q0)
        for rel, idx, thunk in insts:
            tag = (str(q0),) + tuple(idx)
            try:
                lhs_n, rhs_n = thunk(num)
                lhs_s, _ = thunk(sym)
                evald = {m: qcoeff.eval_at(c, q0) for m, c in lhs_s.terms.items()}
            except ZeroDivisionError as exc:
                report.add(rel, tag, skip=f"PoleAtPoint: {exc}")
                continue
            except RuleMismatch as exc:
                report.add(rel, tag, residual="rewrite rules disagree with expansion: " + render_text(exc.residual))
                continue
            residual = lhs_n - rhs_n
            if residual:
                report.add(rel, tag, residual=residual)
                continue
            evald = {m: c for m, c in evald.items() if c}
            if evald != lhs_n.terms:
                report.add(rel, tag, residual="symbolic value at q0 differs from specialised computation")
                continue
            report.add(rel, tag)
    report.elapsed = time.perf_counter() - t
    return report


SUITES = ("defining", "propositions", "assoc", "classical", "eval")


def run_suites(dim: Superdim, suites=SUITES, seed: int = 0, trials: int = 500, max_word_len: int = 4):
    out = []
    for s in suites:
        if s == "defining":
            out.append(check_defining(dim))
        elif s == "propositions":
            out.append(check_propositions(dim))
        elif s == "assoc":
            out.append(check_associativity(dim, trials, max_word_len, seed))
        elif s == "classical":
            out.append(check_classical_limit(dim))
        elif s == "eval":
            out.append(check_random_eval(dim, seed=seed))
        else:
            raise ValueError(f"unknown suite {s!r}")
    return out
