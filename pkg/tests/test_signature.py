import itertools

import pytest
from hypothesis import given, strategies as st

from hermsig import signature as S
from hermsig.realform import HighestWeightSpec, builtin_group, gl_split_to_fundamental
from hermsig.restricted import highest_weight_spec

BUILTINS = ["GL(1)", "GL(2)", "GL(3)", "GL(4)", "GL(5)", "SL(2)", "SL(3)", "SL(4)", "SL(5)", "Sp(4)",
            "Sp(6)", "PSp(4)", "PSp(6)", "SO(4,4)", "PSO(4,4)", "split(G2)", "split(E6)",
            "quasisplit(D4)", "compact(A2)", "compact(B2)", "complex(A1)", "complex(A2)"]


def zero_spec(rf):
    return HighestWeightSpec((0,) * rf.tc_rank, (0,) * rf.split_rank)


def check_result(res):
    assert res.p + res.q == res.dim
    assert res.p - res.q == res.sig >= 0
    total = sum(c.epsilon * c.dim_E for c in res.contributions)
    assert res.sig * 2 ** res.r == abs(total)
    assert all(c.dim_E > 0 and c.epsilon in (1, -1) for c in res.contributions)
    assert res.contributions[0].word == () and res.contributions[0].epsilon == 1


@pytest.mark.parametrize("label", BUILTINS)
def test_trivial_representation(label):
    rf = builtin_group(label)
    res = S.compute_signature(rf, zero_spec(rf))
    assert (res.dim, res.sig) == (1, 1)
    assert res.invariance == S.G_INVARIANT
    check_result(res)


@pytest.mark.parametrize("lam,sig", [((1, 0, -1), 2), ((1, 0, 0, -1), 3), ((0, 0, 0, 0), 1),
                                     ((2, 1, -1, -2), 5), ((1, 1, -1, -1), 2)])
def test_gl_examples(lam, sig):
    res = S.gl_signature(len(lam), lam)
    assert res.sig == sig
    check_result(res)


def test_gl4_pair():
    assert S.gl_signature(4, (2, 1, -1, -2)).pair == (90, 85)


@pytest.mark.parametrize("k", range(7))
def test_sl2_parity(k):
    rf = builtin_group("SL(2)")
    res = S.compute_signature(rf, HighestWeightSpec((k,)))
    assert res.sig == (1 if k % 2 == 0 else 0)
    assert [c.epsilon for c in res.contributions] == [1, (-1) ** k]
    assert res.r == 1


@pytest.mark.parametrize("label", ["compact(A2)", "compact(B2)", "compact(G2)"])
def test_compact_is_definite(label):
    rf = builtin_group(label)
    for lam in itertools.product(range(3), repeat=rf.datum.rank):
        res = S.compute_signature(rf, highest_weight_spec(rf, lam))
        assert res.sig == res.dim and res.r == 0 and len(res.contributions) == 1


@pytest.mark.parametrize("label", ["GL(4)", "GL(5)", "Sp(4)", "Sp(6)", "PSp(4)", "SL(5)", "split(G2)",
                                   "PSO(4,4)", "complex(A2)"])
def test_epsilon_normalization_and_parity(label):
    rf = builtin_group(label)
    ctx = S.prepare(rf)
    for lam in itertools.product(range(3), repeat=rf.tc_rank):
        if not ctx.rd.is_dominant(lam, ctx.rd.positive_c):
            continue
        try:
            res = S.compute_signature(rf, HighestWeightSpec(lam, (0,) * rf.split_rank))
        except ValueError:
            continue  # does not lift to an integral weight
        check_result(res)
        for w in ctx.W1:
            e = S.epsilon(ctx.rd, ctx.W, lam, w)
            assert e * e == 1
        assert S.epsilon(ctx.rd, ctx.W, lam, ctx.W1[0]) == 1


@pytest.mark.parametrize("m", [1, 2, 3])
def test_gl_epsilon_of_last_reflection(m):
    rf = builtin_group(f"GL({2 * m})")
    ctx = S.prepare(rf)
    s = [w for w in ctx.W1 if not w.is_identity()][0]
    for lam in itertools.product(range(4), repeat=m):
        lam = tuple(sorted(lam, reverse=True))
        assert S.epsilon(ctx.rd, ctx.W, lam, s) == (-1) ** lam[-1]


def test_sp4_adjoint_contributions():
    rf = builtin_group("Sp(4)")
    res = S.compute_signature(rf, highest_weight_spec(rf, (2, 0)))
    assert res.sig == 2 and res.r == 3 and res.dim == 10
    assert sorted(c.dim_E for c in res.contributions) == [3, 3, 5, 5]


def test_invariance_levels():
    rf = builtin_group("GL(4)")
    assert S.compute_signature(rf, HighestWeightSpec((1, 1), (0, 0))).invariance == S.G_SHARP_ONLY
    assert S.compute_signature(rf, HighestWeightSpec((2, 0), (0, 0))).invariance == S.G_INVARIANT
    assert S.compute_signature(builtin_group("GL(2)"), HighestWeightSpec((1,), (0,))).invariance == S.G_SHARP_ONLY
    # trivial component group: always invariant
    rf = builtin_group("Sp(4)")
    for lam in [(1, 0), (2, 1), (3, 0)]:
        res = S.compute_signature(rf, highest_weight_spec(rf, lam))
        assert res.invariance == S.G_INVARIANT and not res.ambiguity_flag


def test_no_form():
    rf = builtin_group("GL(4)")
    res = S.compute_signature(rf, gl_split_to_fundamental(4, (2, 1, 0, -1)))
    assert res.sig is None and res.invariance == S.NO_FORM_LEVEL


def test_imaginary_nu_is_ignored():
    rf = builtin_group("GL(4)")
    a = S.compute_signature(rf, HighestWeightSpec((2, 0), (0, 0), (3, 1)))
    b = S.compute_signature(rf, HighestWeightSpec((2, 0), (0, 0)))
    assert (a.sig, a.dim) == (b.sig, b.dim)


def test_bad_inputs():
    rf = builtin_group("GL(4)")
    with pytest.raises(ValueError, match="integral"):
        S.compute_signature(rf, HighestWeightSpec((1, 0), (0, 0)))
    with pytest.raises(ValueError):
        S.compute_signature(rf, HighestWeightSpec((0, 2), (0, 0)))
    with pytest.raises(ValueError):
        S.compute_signature(rf, HighestWeightSpec((2,), (0, 0)))


def test_closed_form_examples():
    assert S.gl_closed_form(1, (0,)) == 1
    assert S.gl_closed_form(4, (0, 0, 0, 0)) == 1
    assert S.gl_closed_form(4, (1, 0, 0, -1)) == 3
    assert S.gl_closed_form(4, (2, 1, -1, -2)) == 5
    with pytest.raises(ValueError):
        S.gl_closed_form(4, (2, 1, 0, -1))


def test_ratio_identity_examples():
    assert S.ratio_identity(4, (0, 0, 0, 0)) == (1, 1)
    assert S.ratio_identity(4, (2, 1, -1, -2)) == (175, 175)
    assert S.ratio_identity(3, (1, 0, -1)) == (8, 8)


@pytest.mark.parametrize("n,lam0,deg", [(2, (1, -1), 0), (3, (1, 0, -1), 1), (4, (2, 1, -1, -2), 2),
                                        (5, (2, 1, 0, -1, -2), 4)])
def test_degree_probe(n, lam0, deg):
    assert S.degree_bound(n) == deg
    for method in ("general", "closed"):
        probe = S.sig_degree_probe(n, lam0, method=method)
        assert probe.vanishes and probe.degree <= deg


def test_finite_differences():
    assert S.finite_differences([1, 4, 9, 16]) == [[1, 4, 9, 16], [3, 5, 7], [2, 2], [0]]


def test_self_dual_weights():
    ws = S.self_dual_weights(3, 2)
    assert len(set(ws)) == len(ws)
    assert set(ws) == {(0, 0, 0), (1, 0, -1), (2, 0, -2)}


@given(st.integers(2, 7), st.lists(st.integers(0, 4), min_size=3, max_size=3))
def test_closed_form_matches_general_formula(n, parts):
    m = n // 2
    half = sorted(parts[:m] if m <= 3 else parts + [0] * (m - 3), reverse=True)[:m]
    lam = tuple(half) + (0,) * (n % 2) + tuple(-x for x in reversed(half))
    res = S.gl_signature(n, lam)
    assert res.sig == S.gl_closed_form(n, lam)
    lhs, rhs = S.ratio_identity(n, lam)
    assert lhs == rhs == res.dim
    assert res.sig ** 2 <= res.dim
    if any(lam) and lam != (1, 1, -1, -1):
        assert res.sig >= n - 1


def test_lower_bound_exception_gl4():
    # SL(4) is Spin(3,3); this weight is the traceless symmetric square of the
    # 6-dimensional vector representation, of signature (6+6, 9) minus one
    # positive trace line, so p - q = 2 < n - 1.
    res = S.gl_signature(4, (1, 1, -1, -1))
    assert (res.dim, res.p, res.q, res.sig) == (20, 11, 9, 2)
    assert S.gl_closed_form(4, (1, 1, -1, -1)) == 2


@pytest.mark.parametrize("n", range(2, 9))
def test_adjoint_signature(n):
    lam = (1,) + (0,) * (n - 2) + (-1,)
    assert S.gl_signature(n, lam).sig == n - 1
