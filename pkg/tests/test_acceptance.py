"""The ten acceptance criteria, one test each.

Every test prints a single ``criterion k: PASS|FAIL`` line (visible even
under output capture) and then asserts its verdict.  Run this file directly
to get just the ten lines::

    python tests/test_acceptance.py
"""
import itertools
import sys
import time

import pytest

from hermsig import rootdata as rdm
from hermsig import signature as S
from hermsig.checks import dominant_weights, equal_rank_suite, split_suite
from hermsig.oracle import inertia, kernel_signature
from hermsig.realform import HighestWeightSpec, builtin_group
from hermsig.restricted import restrict
from hermsig.tables import fold_checks, table3
from hermsig.weylres import build_W_theta, component_group, coset_partition_ok, enumerate_W1

from structured import instance


def gl_sweep():
    """Self-dual decreasing lambda with |lambda_i| <= 3, n = 2..6."""
    return [(n, lam) for n in range(2, 7) for lam in S.self_dual_weights(n, 3)]


# ---------------------------------------------------------------------------
# the criteria; each returns (ok, detail)


def criterion_1():
    bad = [(n, lam) for n, lam in gl_sweep() if S.gl_signature(n, lam).sig != S.gl_closed_form(n, lam)]
    return not bad, f"{len(gl_sweep())} weights, mismatches {bad[:3]}"


def criterion_2():
    got = {n: S.gl_signature(n, (1,) + (0,) * (n - 2) + (-1,)).sig for n in range(2, 9)}
    return all(got[n] == n - 1 for n in got), f"Sig by n: {got}"


def criterion_3():
    bad = []
    for n, lam in gl_sweep():
        lhs, rhs = S.ratio_identity(n, lam)
        if lhs != rhs or lhs != S.gl_dimension(lam):
            bad.append((n, lam))
    return not bad, f"{len(gl_sweep())} weights, failures {bad[:3]}"


def criterion_4_parts():
    square, lower = [], []
    for n, lam in gl_sweep():
        r = S.gl_signature(n, lam)
        if (r.p - r.q) ** 2 > r.p + r.q:
            square.append((n, lam))
        if any(lam) and r.sig < n - 1:
            lower.append((n, lam, r.sig))
    return square, lower


def criterion_4():
    square, lower = criterion_4_parts()
    detail = (f"(p-q)^2 <= p+q fails at {square or 'no weight'}; "
              f"Sig >= n-1 fails at {lower or 'no weight'}")
    return not square and not lower, detail


def criterion_5():
    suites = [split_suite("A", 1), split_suite("A", 2), split_suite("A", 3), split_suite("C", 2)]
    ok = all(s.ok for s in suites)
    return ok, "; ".join(f"{s.name}: {len(s.cases)} cases, {len(s.disagreements)} disagree" for s in suites)


def criterion_6():
    suites = [equal_rank_suite("Sp(4)"), equal_rank_suite("Sp(6)")]
    ok = all(s.ok for s in suites)
    return ok, "; ".join(f"{s.name}: {len(s.cases)} cases, {len(s.disagreements)} disagree" for s in suites)


def criterion_7():
    rows = table3()
    folds = fold_checks()
    bad_rows = [(g.name, b) for g, _, b in rows if b]
    bad_folds = [(g, k) for g, k, ok, _ in folds if not ok]
    ok = len(rows) == 10 and len(folds) == 6 and not bad_rows and not bad_folds
    return ok, f"{len(rows)} rows, {len(folds)} diagrams; bad rows {bad_rows}, bad diagrams {bad_folds}"


def criterion_8():
    orders = {label: component_group(builtin_group(label)).order
              for label in ("SL(2)", "SL(3)", "SL(4)", "Sp(4)", "Sp(6)", "split(G2)", "PSp(4)", "PSp(6)",
                            "PSO(4,4)")}
    klein = component_group(builtin_group("PSO(4,4)"))
    want = {"SL(2)": 1, "SL(3)": 1, "SL(4)": 1, "Sp(4)": 1, "Sp(6)": 1, "split(G2)": 1,
            "PSp(4)": 2, "PSp(6)": 2, "PSO(4,4)": 4}
    ok = orders == want and klein.rank == 2
    return ok, f"orders {orders}"


def criterion_9():
    rays = {2: [(1, -1), (2, -2), (3, -3)],
            3: [(1, 0, -1), (2, 0, -2), (3, 0, -3)],
            4: [(2, 1, -1, -2), (3, 1, -1, -3), (3, 2, -2, -3)]}
    bad, seen = [], {}
    for n, lams in rays.items():
        deg = S.degree_bound(n)
        for lam0 in lams:
            probe = S.sig_degree_probe(n, lam0, kmax=deg + 3)
            if not probe.vanishes:
                bad.append((n, lam0))
            seen[n] = (deg, probe.sharp)
    return not bad, f"(degree, sharp) by n: {seen}; failures {bad}"


PROPERTY_TYPES = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4), ("C", 3), ("C", 4),
                  ("D", 4), ("G", 2), ("F", 4)]
PROPERTY_GROUPS = ["SL(2)", "GL(2)", "GL(3)", "GL(4)", "GL(5)", "GL(6)", "SL(4)", "SL(5)", "Sp(4)", "Sp(6)",
                   "PSp(4)", "PSp(6)", "SO(4,4)", "PSO(4,4)", "split(G2)", "quasisplit(D4)", "split(E6)",
                   "compact(B2)", "complex(A1)", "complex(A2)"]


def _root_datum_axioms():
    for fam, n in PROPERTY_TYPES:
        d = rdm.from_cartan_matrix(rdm.cartan_matrix_of_type(fam, n))
        d.validate()
        roots = set(d.roots)
        for i in range(len(d.roots)):
            if any(d.reflect(i, b) not in roots for b in d.roots):
                return False
    for label in PROPERTY_GROUPS:
        restrict(builtin_group(label))  # verifies the restricted root datum axioms
    return True


def _weyl_vs_freudenthal():
    count = 0
    for fam, n in PROPERTY_TYPES:
        d = rdm.from_cartan_matrix(rdm.cartan_matrix_of_type(fam, n))
        pos = rdm.PositiveSystem.of(d)
        for lam in dominant_weights(d, 1000):
            if sum(rdm.freudenthal_multiplicities(pos, lam).values()) != rdm.weyl_dimension(pos, lam):
                return False, count
            count += 1
    return True, count


def _homogeneity():
    for fam, n in PROPERTY_TYPES:
        pos = rdm.PositiveSystem.of(rdm.from_cartan_matrix(rdm.cartan_matrix_of_type(fam, n)))
        npos = len(pos.positive)
        for psi in itertools.product(range(2), repeat=n):
            base = rdm.weyl_dimension(pos, psi)
            for k in range(1, 5):
                lam = tuple(k * x + (k - 1) * r for x, r in zip(psi, pos.rho))
                if rdm.weyl_dimension(pos, lam) != k ** npos * base:
                    return False
    return True


def _cosets():
    for label in PROPERTY_GROUPS:
        rd = restrict(builtin_group(label))
        if rd.rank > 4:
            continue
        W = build_W_theta(rd)
        W1 = enumerate_W1(rd, W)
        if not coset_partition_ok(W, W1) or len(W1) * len(W.subgroup("K0")) != W.order:
            return False
    return True


def _epsilon():
    checked = 0
    for label in PROPERTY_GROUPS:
        rf = builtin_group(label)
        ctx = S.prepare(rf)
        for lam in itertools.product(range(3), repeat=rf.tc_rank):
            if not ctx.rd.is_dominant(lam, ctx.rd.positive_c):
                continue
            try:
                S.compute_signature(rf, HighestWeightSpec(lam, (0,) * rf.split_rank), check_invariance=False)
            except ValueError:
                continue
            eps = [S.epsilon(ctx.rd, ctx.W, lam, w) for w in ctx.W1]
            if eps[0] != 1 or ctx.W1[0].word != () or any(e * e != 1 for e in eps):
                return False, checked
            checked += 1
    # the rank-one alternation
    ctx = S.prepare(builtin_group("SL(2)"))
    for k in range(8):
        if S.epsilon(ctx.rd, ctx.W, (k,), ctx.W1[1]) != (-1) ** k:
            return False, checked
    return True, checked


def _kernel():
    for seed in range(200):
        T, Smat, want = instance(seed)
        p1, q1 = kernel_signature(T, Smat)
        P, Q, _ = inertia(Smat)
        if (p1, q1) != want or P - Q != p1 - q1:
            return False
    return True


def criterion_10():
    parts = {}
    parts["axioms"] = _root_datum_axioms()
    ok, n = _weyl_vs_freudenthal()
    parts[f"weyl=freudenthal ({n} weights)"] = ok
    parts["homogeneity"] = _homogeneity()
    parts["W1 cosets"] = _cosets()
    ok, n = _epsilon()
    parts[f"epsilon ({n} weights)"] = ok
    parts["kernel signature (200 instances)"] = _kernel()
    return all(parts.values()), ", ".join(f"{k}: {'ok' if v else 'FAILED'}" for k, v in parts.items())


# (criterion function, time budget in seconds)
CRITERIA = {
    1: (criterion_1, 10), 2: (criterion_2, 1), 3: (criterion_3, 10), 4: (criterion_4, 10),
    5: (criterion_5, 600), 6: (criterion_6, 300), 7: (criterion_7, 30), 8: (criterion_8, 5),
    9: (criterion_9, 10), 10: (criterion_10, 120),
}


def evaluate(k):
    fn, budget = CRITERIA[k]
    t = time.perf_counter()
    ok, detail = fn()
    dt = time.perf_counter() - t
    in_time = dt <= budget
    verdict = "PASS" if ok and in_time else "FAIL"
    timing = f"{dt:.2f}s of {budget}s" + ("" if in_time else " (over budget)")
    return ok and in_time, f"criterion {k}: {verdict}  [{timing}] {detail}"


def _report(capsys, k):
    ok, line = evaluate(k)
    with capsys.disabled():
        print("\n" + line)
    return ok, line


@pytest.mark.parametrize("k", [1, 2, 3, 5, 6, 7, 8, 9, 10])
def test_criterion(capsys, k):
    ok, line = _report(capsys, k)
    assert ok, line


@pytest.mark.xfail(strict=True, reason="GL(4), lambda = (1,1,-1,-1) has Sig 2 < n - 1; see the decisions ledger")
def test_criterion_4(capsys):
    ok, line = _report(capsys, 4)
    assert ok, line


def test_criterion_4_holding_parts():
    """The parts of criterion 4 that do hold, so they stay guarded."""
    square, lower = criterion_4_parts()
    assert square == []
    assert lower == [(4, (1, 1, -1, -1), 2)]


if __name__ == "__main__":
    results = [evaluate(k) for k in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
