import itertools
from fractions import Fraction

import pytest

from hermsig import rootdata as rdm

SMALL_TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"]
WEYL_ORDERS = {"A1": 2, "A2": 6, "A3": 24, "A4": 120, "B2": 8, "B3": 48, "C3": 48, "D4": 192, "G2": 12}


def pos_of(label):
    return rdm.PositiveSystem.of(rdm.build_root_system(label))


@pytest.mark.parametrize("label,n_roots", [("A1", 2), ("A2", 6), ("GL(4)", 12), ("C2", 8), ("G2", 12)])
def test_root_counts(label, n_roots):
    assert len(rdm.build_root_system(label).roots) == n_roots


def test_gl_roots_are_differences():
    d = rdm.build_root_system("GL(4)")
    want = {tuple((i == a) - (i == b) for i in range(4)) for a in range(4) for b in range(4) if a != b}
    assert set(d.roots) == want
    assert d.rank == 4


@pytest.mark.parametrize("label", SMALL_TYPES)
def test_axioms_and_closure(label):
    d = rdm.build_root_system(label)
    d.validate()
    roots = set(d.roots)
    for a, c in zip(d.roots, d.coroots):
        assert sum(x * y for x, y in zip(a, c)) == 2
        assert tuple(-x for x in a) in roots
    for i in range(len(d.roots)):
        for b in d.roots:
            assert d.reflect(i, b) in roots


@pytest.mark.parametrize("label", SMALL_TYPES)
def test_weyl_orders(label):
    pos = pos_of(label)
    group = rdm.generate_weyl_group(pos)
    assert len(group) == WEYL_ORDERS[label] == rdm.weyl_group_order(pos)
    assert len({g.matrix for g in group}) == len(group)


def test_weyl_words_multiply_out():
    pos = pos_of("B3")
    d = pos.datum
    for g in rdm.generate_weyl_group(pos):
        h = rdm.identity_element(d.rank)
        for k in g.word:
            h = h * rdm.simple_reflection(d, k)
        assert h.matrix == g.matrix
        assert len(g.word) == g.length


def test_weyl_group_cap():
    with pytest.raises(OverflowError):
        rdm.generate_weyl_group(pos_of("E8"), cap=1000)


def test_non_finite_type_rejected():
    with pytest.raises(rdm.RootDataError, match="failing"):
        rdm.build_root_system([[2, -3], [-3, 2]])


def test_rho_pairs_to_one_with_simple_coroots():
    for label in SMALL_TYPES:
        pos = pos_of(label)
        for c in pos.datum.simple_coroots:
            assert sum(x * y for x, y in zip(pos.rho, c)) == 1


def test_weyl_dimension_examples():
    assert rdm.weyl_dimension(pos_of("A2"), (0, 0)) == 1
    for k in range(6):
        assert rdm.weyl_dimension(pos_of("A1"), (k,)) == k + 1
    d2 = rdm.orthogonal_root_datum("D", 2)
    assert rdm.weyl_dimension(rdm.PositiveSystem.of(d2), (Fraction(3, 2), Fraction(1, 2))) == 6


def test_weyl_dimension_rejects_nondominant():
    with pytest.raises(ValueError, match="coroot"):
        rdm.weyl_dimension(pos_of("A2"), (-2, 0))


def test_dominant_representative():
    pos = pos_of("A1")
    v, w = rdm.dominant_representative(pos, (-3,))
    assert v == (3,) and w.act((-3,)) == (3,)
    v, w = rdm.dominant_representative(pos, (2,))
    assert v == (2,) and w.is_identity

    pos = pos_of("A2")
    v, w = rdm.dominant_representative(pos, (-1, 2))
    assert rdm.is_dominant(pos, v) and w.act((-1, 2)) == v


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3"])
def test_dominant_representative_invariant(label):
    pos = pos_of(label)
    group = rdm.generate_weyl_group(pos)
    for phi in itertools.product(range(-2, 3), repeat=pos.datum.rank):
        v, _ = rdm.dominant_representative(pos, phi)
        assert rdm.dominant_representative(pos, v)[0] == v
        for g in group[::3]:
            assert rdm.dominant_representative(pos, g.act(phi))[0] == v


def test_freudenthal_examples():
    assert rdm.freudenthal_multiplicities(pos_of("A2"), (0, 0)) == {(0, 0): 1}
    m = rdm.freudenthal_multiplicities(pos_of("A1"), (4,))
    assert m == {(k,): 1 for k in (4, 2, 0, -2, -4)}
    m = rdm.freudenthal_multiplicities(pos_of("A2"), (1, 1))
    assert m[(0, 0)] == 2 and sum(m.values()) == 8
    with pytest.raises(ValueError):
        rdm.freudenthal_multiplicities(pos_of("A2"), (-1, 0))


@pytest.mark.parametrize("label,bound", [("A2", 4), ("B2", 4), ("G2", 2), ("A3", 2), ("C3", 1)])
def test_freudenthal_matches_weyl_and_is_invariant(label, bound):
    pos = pos_of(label)
    group = rdm.generate_weyl_group(pos)
    for lam in itertools.product(range(bound + 1), repeat=pos.datum.rank):
        m = rdm.freudenthal_multiplicities(pos, lam)
        assert sum(m.values()) == rdm.weyl_dimension(pos, lam)
        for g in group:
            for mu, k in m.items():
                assert m[g.act(mu)] == k


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "G2", "A3", "B3", "C3", "A4", "D4", "B4", "C4"])
def test_homogeneity(label):
    pos = pos_of(label)
    npos = len(pos.positive)
    for psi in itertools.product(range(2), repeat=pos.datum.rank):
        base = rdm.weyl_dimension(pos, psi)
        for k in range(1, 5):
            lam = tuple(k * x + (k - 1) * r for x, r in zip(psi, pos.rho))
            assert rdm.weyl_dimension(pos, lam) == k ** npos * base


def test_weyl_orbit_and_longest_element():
    pos = pos_of("A2")
    assert sorted(rdm.weyl_orbit(pos, (1, 0))) == sorted([(1, 0), (-1, 1), (0, -1)])
    w0 = rdm.longest_element(pos)
    assert w0.length == 3
    assert w0.act((1, 0)) == (0, -1)
