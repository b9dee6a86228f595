"""Acceptance criteria, one test each, with their runtime budgets.

Each test appends a PASS/FAIL line to ``RESULTS``; the lines are printed in
the pytest terminal summary, or directly when this file is run as a script.
Algebra caches are cleared first so every timing is from a cold start.
"""

import random
import time
from fractions import Fraction

import pytest

from uqglmn import verify
from uqglmn.expr import parse_element
from uqglmn.pbw import E, F, QK, Algebra
from uqglmn.qcoeff import q
from uqglmn.render import render_text
from uqglmn.rootdata import Superdim, positive_roots, root_parity

RESULTS = []


def record(name, ok, elapsed, budget, detail=""):
    ok = ok and (budget is None or elapsed < budget)
    limit = f" (budget {budget}s)" if budget is not None else ""
    RESULTS.append(f"{'PASS' if ok else 'FAIL'} {name}: {detail} {elapsed:.2f}s{limit}".rstrip())
    return ok


@pytest.fixture(autouse=True)
def cold_caches():
    verify.algebra.cache_clear()
    yield


def _suite_criterion(name, dims, check, budget):
    ok_all = True
    details = []
    for dim in dims:
        verify.algebra.cache_clear()
        t = time.perf_counter()
        rep = check(dim)
        dt = time.perf_counter() - t
        ok = rep.passed and dt < budget
        ok_all &= ok
        details.append(f"{dim} {rep.instances} inst/{len(rep.failures)} fail/{dt:.2f}s")
        if not rep.passed:
            print(rep.to_text())
    line = "; ".join(details)
    RESULTS.append(f"{'PASS' if ok_all else 'FAIL'} {name}: {line} (budget {budget}s per dim)")
    return ok_all


def test_1_defining_relation_kernel():
    dims = [Superdim(1, 2), Superdim(2, 1), Superdim(1, 3), Superdim(3, 1), Superdim(2, 3), Superdim(3, 2)]
    assert _suite_criterion("1 defining relations", dims, verify.check_defining, 10)


def test_2_proposition_suite():
    dims = [Superdim(2, 3), Superdim(3, 2)]
    assert _suite_criterion("2 root-vector relations", dims, verify.check_propositions, 60)


def test_3_classical_limit():
    assert _suite_criterion("3 classical limit", [Superdim(2, 3)], verify.check_classical_limit, 10)


def test_4_random_evaluation():
    check = lambda d: verify.check_random_eval(d, (2, Fraction(3, 2), -2), seed=0)
    assert _suite_criterion("4 evaluation at q0 in {2, 3/2, -2}", [Superdim(2, 3)], check, 30)


def test_5_associativity():
    check = lambda d: verify.check_associativity(d, trials=500, max_word_len=4, seed=0)
    assert _suite_criterion("5 associativity, 500 trials", [Superdim(2, 3)], check, 60)


def test_6_nilpotency_boundary():
    dim = Superdim(2, 3)
    A = Algebra(dim)
    t = time.perf_counter()
    odd_zero, even_nonzero, bad = 0, 0, []
    for r in positive_roots(dim):
        for letter in (E, F):
            x = A(letter(*r), letter(*r))
            if root_parity(dim, r):
                odd_zero += x == 0
                if x != 0:
                    bad.append(r)
            else:
                ok = x.terms == {(letter(*r), letter(*r)): 1}
                even_nonzero += ok
                if not ok:
                    bad.append(r)
    odd = [r for r in positive_roots(dim) if root_parity(dim, r)]
    ok = not bad and len(odd) == 6 and odd_zero == 12 and even_nonzero == 8
    assert record(
        "6 nilpotency boundary",
        ok,
        time.perf_counter() - t,
        None,
        f"{odd_zero}/12 odd squares vanish, {even_nonzero}/8 even squares survive",
    )


def _random_normalized(A, rng):
    dim = A.dim
    roots = positive_roots(dim)

    def letter():
        k = rng.randrange(3)
        if k == 0:
            return F(*rng.choice(roots))
        if k == 2:
            return E(*rng.choice(roots))
        return QK(tuple(rng.randint(-2, 2) for _ in range(dim.n)))

    def coeff():
        c = rng.randint(-3, 3) * q ** rng.randint(-3, 3) + rng.randint(-2, 2)
        if rng.random() < 0.3:
            c = c / (q - q**-1) ** rng.randint(1, 2)
        if rng.random() < 0.2:
            c = c * Fraction(1, rng.randint(2, 5))
        return c

    terms = [(coeff(), tuple(letter() for _ in range(rng.randint(0, 4)))) for _ in range(rng.randint(1, 4))]
    return A.normalize(terms)


def test_7_idempotence_and_round_trip():
    A = Algebra(Superdim(2, 3))
    rng = random.Random(0)
    t = time.perf_counter()
    bad = 0
    for _ in range(1000):
        x = _random_normalized(A, rng)
        again = A.normalize([(c, pm.to_word()) for pm, c in x.pbw_terms()])
        back = parse_element(render_text(x), A)
        bad += (again != x) + (back != x)
    assert record(
        "7 idempotence and round trip", bad == 0, time.perf_counter() - t, 30, f"1000 elements, {bad} mismatches"
    )


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
