import itertools
import random

import pytest

from hermsig import linalg as la
from hermsig import oracle as O
from hermsig import rootdata as rdm
from hermsig.realform import builtin_group
from hermsig.restricted import highest_weight_spec
from hermsig.signature import compute_signature
from structured import instance

A1 = [[2]]
A2 = [[2, -1], [-1, 2]]
A3 = rdm.cartan_matrix_of_type("A", 3)
C2 = rdm.cartan_matrix_of_type("C", 2)
B2 = rdm.cartan_matrix_of_type("B", 2)
G2 = rdm.cartan_matrix_of_type("G", 2)


def test_a1_standard():
    M = O.construct_irrep(A1, (1,))
    assert M.matrix("e", 0) == [[0, 1], [0, 0]]
    assert M.matrix("f", 0) == [[0, 0], [1, 0]]
    assert M.matrix("h", 0) == [[1, 0], [0, -1]]


@pytest.mark.parametrize("cartan,lam,dim", [(A2, (1, 1), 8), (A3, (1, 0, 1), 15), (C2, (2, 1), 35),
                                            (G2, (1, 0), 7), (B2, (0, 3), 20)])
def test_dimensions_and_multiplicities(cartan, lam, dim):
    M = O.construct_irrep(cartan, lam)
    pos = rdm.PositiveSystem.of(rdm.from_cartan_matrix(cartan))
    assert M.dim == dim == rdm.weyl_dimension(pos, lam)
    assert M.multiplicities() == rdm.freudenthal_multiplicities(pos, lam)
    M.check_relations()


def test_a2_adjoint_zero_weight():
    M = O.construct_irrep(A2, (1, 1))
    assert M.multiplicities()[(0, 0)] == 2


def test_relations_as_matrices():
    M = O.construct_irrep(C2, (1, 1))
    n = M.rank
    for i, j in itertools.product(range(n), repeat=2):
        E, F = M.matrix("e", i), M.matrix("f", j)
        comm = [[a - b for a, b in zip(r, s)] for r, s in zip(la.mat_mul(E, F), la.mat_mul(F, E))]
        want = M.matrix("h", i) if i == j else [[0] * M.dim for _ in range(M.dim)]
        assert comm == want


def test_construct_errors():
    with pytest.raises(OverflowError):
        O.construct_irrep(A1, (401,))
    with pytest.raises(ValueError):
        O.construct_irrep(A1, (-1,))


@pytest.mark.parametrize("S,want", [([[1, 0, 0], [0, 1, 0], [0, 0, 1]], (3, 0, 0)),
                                    ([[1, 0], [0, -1]], (1, 1, 0)),
                                    ([[0, 1], [1, 0]], (1, 1, 0)),
                                    ([[0, 0], [0, 0]], (0, 0, 2)),
                                    ([[1, 2], [2, 4]], (1, 0, 1))])
def test_inertia_examples(S, want):
    assert O.inertia(S) == want


def test_inertia_congruence_invariant():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 5)
        d = [rng.choice((-1, 0, 1)) for _ in range(n)]
        D = [[d[i] if i == j else 0 for j in range(n)] for i in range(n)]
        while True:
            C = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
            if la.determinant(C):
                break
        S = la.mat_mul(la.mat_mul(la.transpose(C), D), C)
        assert O.inertia(S) == (d.count(1), d.count(-1), d.count(0))


def test_trivial_module_form():
    M = O.construct_irrep(A2, (0, 0))
    assert O.invariant_symmetric_form(M).inertia == (1, 0, 0)


@pytest.mark.parametrize("method", ["propagate", "nullspace"])
def test_a2_adjoint_form(method):
    g = O.invariant_symmetric_form(O.construct_irrep(A2, (1, 1)), method)
    p, q, z = g.inertia
    assert {p, q} == {5, 3} and z == 0


@pytest.mark.parametrize("cartan,lam", [(A1, (2,)), (A1, (3,)), (A3, (1, 0, 1)), (C2, (1, 0)), (G2, (1, 0))])
def test_methods_agree(cartan, lam):
    M = O.construct_irrep(cartan, lam)
    a = O.invariant_symmetric_form(M, "propagate")
    b = O.invariant_symmetric_form(M, "nullspace")
    assert abs(a.inertia[0] - a.inertia[1]) == abs(b.inertia[0] - b.inertia[1])


def test_form_is_invariant():
    M = O.construct_irrep(C2, (1, 1))
    S = O.invariant_symmetric_form(M).matrix()
    for kind in "efh":
        for i in range(M.rank):
            X = M.matrix(kind, i)
            lhs = la.mat_mul(la.transpose(X), S)
            rhs = la.mat_mul(S, X)
            assert all(a + b == 0 for r, s in zip(lhs, rhs) for a, b in zip(r, s))


def test_non_self_dual_rejected():
    with pytest.raises(O.OracleError):
        O.invariant_symmetric_form(O.construct_irrep(A2, (1, 0)))


@pytest.mark.parametrize("lam,sig", [((0,), 1), ((2,), 1), ((4,), 1), ((1,), 0), ((5,), 0)])
def test_split_a1(lam, sig):
    assert O.oracle_sig_split(A1, lam) == sig


def test_split_examples():
    assert O.oracle_sig_split(A2, (1, 1)) == 2
    assert O.oracle_sig_split(A3, (1, 0, 1)) == 3
    assert O.oracle_sig_split(A2, (0, 0)) == 1


@pytest.mark.parametrize("label,lam,sig", [("Sp(4)", (2, 0), 2), ("SL(2)", (2,), 1), ("compact(B2)", (1, 0), 5),
                                           ("Sp(4)", (1, 0), 0)])
def test_equal_rank_examples(label, lam, sig):
    rf = builtin_group(label)
    assert O.oracle_sig_equal_rank(rf, lam) == sig
    assert compute_signature(rf, highest_weight_spec(rf, lam)).sig == sig


def test_equal_rank_needs_equal_rank():
    with pytest.raises(O.OracleError):
        O.oracle_sig_equal_rank(builtin_group("GL(4)"), (1, 0, 0, -1))


def test_grading_cocharacter_realizes_grading():
    for label in ["Sp(4)", "Sp(6)", "SL(2)", "compact(B2)"]:
        rf = builtin_group(label)
        x = O.grading_cocharacter(rf)
        for i, a in enumerate(rf.datum.roots):
            parity = la.dot(a, x)
            assert parity.denominator == 1
            assert (parity % 2 == 1) == (rf.grading[i] == "n")


def test_cyclotomic():
    # coefficients from the constant term up
    assert O.cyclotomic_polynomial(1) == [-1, 1]
    assert O.cyclotomic_polynomial(4) == [1, 0, 1]
    assert O.cyclotomic_polynomial(12) == [1, 0, -1, 0, 1]


def test_charpoly_and_spectrum():
    assert O.charpoly([[0, 1], [-1, 0]]) == [1, 0, 1]
    assert O.charpoly([[1, 2], [0, 3]]) == [3, -4, 1]
    assert O.nonpositive_real_spectrum([[-1, 0], [0, 0]])
    assert O.nonpositive_real_spectrum([[-4, 0, 0], [0, -4, 0], [0, 0, -1]])
    assert not O.nonpositive_real_spectrum([[0, 1], [1, 0]])
    assert not O.nonpositive_real_spectrum([[0, 1], [-1, 0]])  # eigenvalues +-i
    assert not O.nonpositive_real_spectrum([[2]])


def test_kernel_signature_examples():
    assert O.kernel_signature([[0] * 3] * 3, [[1, 0, 0], [0, 1, 0], [0, 0, -1]]) == (2, 1)
    assert O.kernel_signature([[0, 1], [-1, 0]], [[1, 0], [0, -1]]) == (0, 0)
    T = [[0, 1, 0], [-1, 0, 0], [0, 0, 0]]
    assert O.kernel_signature(T, [[1, 0, 0], [0, -1, 0], [0, 0, 1]]) == (1, 0)


def test_kernel_signature_preconditions():
    with pytest.raises(ValueError, match="self-adjoint"):
        O.kernel_signature([[0, 1], [0, 0]], [[1, 0], [0, 1]])
    with pytest.raises(ValueError, match="imaginary"):
        O.kernel_signature([[1, 0], [0, 2]], [[1, 0], [0, -1]])
    # a nilpotent Jordan block is self-adjoint for the antidiagonal form
    J = [[0, 1, 0], [0, 0, 1], [0, 0, 0]]
    with pytest.raises(ValueError, match="semisimple"):
        O.kernel_signature(J, [[0, 0, 1], [0, 1, 0], [1, 0, 0]])


@pytest.mark.parametrize("seed", range(25))
def test_kernel_signature_structured(seed):
    T, S, want = instance(seed)
    p1, q1 = O.kernel_signature(T, S)
    assert (p1, q1) == want
    P, Q, _ = O.inertia(S)
    assert P - Q == p1 - q1
