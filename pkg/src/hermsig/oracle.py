"""Brute-force ground truth for signatures.

Nothing here uses the restricted root system or W^theta.  The split oracle
builds the irreducible module explicitly, solves for the invariant bilinear
form and counts its inertia.  The equal-rank oracle evaluates the character
of the representation at the element implementing the Cartan involution.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg as la
from . import rootdata as rdm

Sparse = Dict[int, Fraction]
Weight = Tuple[int, ...]

DEFAULT_CAP = 400


class OracleError(RuntimeError):
    pass


def _axpy(acc: Sparse, c, v: Sparse) -> None:
    if c == 0:
        return
    for k, x in v.items():
        y = acc.get(k, 0) + c * x
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)


def _sdot(u: Sparse, v: Sparse):
    if len(u) > len(v):
        u, v = v, u
    return sum((x * v[k] for k, x in u.items() if k in v), Fraction(0))


# ---------------------------------------------------------------------------
# Explicit irreducible modules


@dataclass
class ExplicitModule:
    """An irreducible highest-weight module with sparse Chevalley-generator actions.

    Basis vector ``k`` is the PBW monomial ``f_{labels[k][0]} f_{labels[k][1]} ... v``
    (modulo the radical) and has weight ``weights[k]`` in fundamental coordinates.
    ``E[i][k]`` and ``F[i][k]`` hold the images of basis vector ``k``.
    """

    cartan: Tuple[Tuple[int, ...], ...]
    highest: Weight
    weights: List[Weight]
    labels: List[Tuple[int, ...]]
    parent: List[Tuple[int, int]]          # basis k = f_j (basis b) for (j, b)
    E: List[List[Sparse]]
    F: List[List[Sparse]]
    spaces: Dict[Weight, List[int]]
    gram: Dict[Weight, List[List[Fraction]]] = field(default_factory=dict)  # contravariant form

    @property
    def dim(self) -> int:
        return len(self.weights)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    def h(self, i: int, k: int) -> int:
        return self.weights[k][i]

    def act(self, kind: str, i: int, v: Sparse) -> Sparse:
        out: Sparse = {}
        if kind == "h":
            return {k: x * self.weights[k][i] for k, x in v.items() if self.weights[k][i]}
        table = self.E[i] if kind == "e" else self.F[i]
        for k, x in v.items():
            _axpy(out, x, table[k])
        return out

    def multiplicities(self) -> Dict[Weight, int]:
        return {mu: len(idx) for mu, idx in self.spaces.items()}

    def matrix(self, kind: str, i: int) -> List[List[Fraction]]:
        n = self.dim
        M = [[Fraction(0)] * n for _ in range(n)]
        for k in range(n):
            col = {k: Fraction(1)}
            for r, x in self.act(kind, i, col).items():
                M[r][k] = x
        return M

    def check_relations(self, serre: bool = True) -> None:
        """Verify ``[e_i, f_j] = delta_ij h_i``, ``[h, e]``, ``[h, f]`` and the Serre relations on every basis vector."""
        l, A = self.rank, self.cartan
        for k in range(self.dim):
            v = {k: Fraction(1)}
            for i in range(l):
                for j in range(l):
                    lhs = self.act("e", i, self.act("f", j, v))
                    _axpy(lhs, -1, self.act("f", j, self.act("e", i, v)))
                    if i == j:
                        _axpy(lhs, -1, self.act("h", i, v))
                    if lhs:
                        raise OracleError(f"[e_{i}, f_{j}] relation fails on basis vector {k}")
            for i in range(l):
                for k2, x in self.E[i][k].items():
                    if self.weights[k2] != tuple(a + b for a, b in zip(self.weights[k], A[i])):
                        raise OracleError("e_i does not raise weights by alpha_i")
            if not serre:
                continue
            for i in range(l):
                for j in range(l):
                    if i == j:
                        continue
                    n = 1 - A[j][i]
                    for kind in ("e", "f"):
                        tot: Sparse = {}
                        for t in range(n + 1):
                            w = v
                            for _ in range(t):
                                w = self.act(kind, i, w)
                            w = self.act(kind, j, w)
                            for _ in range(n - t):
                                w = self.act(kind, i, w)
                            _axpy(tot, (-1) ** t * comb(n, t), w)
                        if tot:
                            raise OracleError(f"Serre relation ({kind}, {i}, {j}) fails")


def construct_irrep(cartan_matrix, lam: Sequence[int], cap: int = DEFAULT_CAP) -> ExplicitModule:
    """Irreducible module of highest weight ``lam`` (fundamental coordinates).

    Weight spaces are built level by level.  The candidates ``f_j b`` for a
    weight are compared through their contravariant Gram matrix, computed by
    moving ``e``'s to the right; the pivot candidates give a basis of the
    quotient by the radical.
    """
    A = tuple(tuple(int(x) for x in row) for row in cartan_matrix)
    l = len(A)
    lam = tuple(int(x) for x in lam)
    if len(lam) != l:
        raise ValueError(f"lambda has {len(lam)} entries, expected {l}")
    if any(x < 0 for x in lam):
        raise ValueError(f"lambda = {lam} is not dominant")
    if l:
        d = rdm.weyl_dimension(rdm.from_cartan_matrix([list(r) for r in A]), lam)
        if d > cap:
            raise OverflowError(f"dimension {d} exceeds the cap {cap}")
    M = ExplicitModule(A, lam, [lam], [()], [(-1, -1)], [[{}] for _ in range(l)],
                       [[] for _ in range(l)], {lam: [0]}, {lam: [[Fraction(1)]]})
    local: Dict[int, int] = {0: 0}  # basis index -> position in its weight space
    level = [lam]
    while level:
        nxt: List[Weight] = []
        seen = set()
        for mu in level:
            for j in range(l):
                nu = tuple(a - b for a, b in zip(mu, A[j]))
                if nu not in seen:
                    seen.add(nu)
                    nxt.append(nu)
        new_level = []
        for nu in sorted(nxt, reverse=True):
            cands = []
            for j in range(l):
                up = tuple(a + b for a, b in zip(nu, A[j]))
                for b in M.spaces.get(up, []):
                    cands.append((j, b))
            if not cands:
                continue
            # e_i of each candidate, in the basis one level up
            eimg = []
            for (j, b) in cands:
                row = []
                for i in range(l):
                    v: Sparse = {}
                    for y, x in M.E[i][b].items():
                        _axpy(v, x, M.F[j][y])
                    if i == j:
                        c = M.weights[b][i]
                        if c:
                            _axpy(v, Fraction(c), {b: Fraction(1)})
                    row.append(v)
                eimg.append(row)
            # Gram matrix <f_j b, f_k c> = <b, e_j (f_k c)>
            m = len(cands)
            G = [[Fraction(0)] * m for _ in range(m)]
            for s, (j, b) in enumerate(cands):
                up = M.weights[b]
                gb = M.gram[up][local[b]]
                for t in range(m):
                    v = eimg[t][j]
                    G[s][t] = sum((gb[local[y]] * x for y, x in v.items()), Fraction(0))
            R, piv = la.rref(G)
            if not piv:
                for j, b in cands:
                    while len(M.F[j]) <= b:
                        M.F[j].append({})
                continue
            start = len(M.weights)
            idx = list(range(start, start + len(piv)))
            for pos, p in enumerate(piv):
                j, b = cands[p]
                M.weights.append(nu)
                M.labels.append((j,) + M.labels[b])
                M.parent.append((j, b))
                local[start + pos] = pos
                for i in range(l):
                    M.E[i].append(eimg[p][i])
            M.spaces[nu] = idx
            GB = [[G[p][q] for q in piv] for p in piv]
            M.gram[nu] = GB
            inv = la.inverse(GB)
            # express f_j b for every candidate in the new basis
            for t, (j, b) in enumerate(cands):
                rhs = [G[p][t] for p in piv]
                coords = la.mat_vec(inv, rhs)
                vec = {idx[s]: c for s, c in enumerate(coords) if c}
                while len(M.F[j]) <= b:
                    M.F[j].append({})
                M.F[j][b] = vec
            new_level.append(nu)
            if len(M.weights) > cap:
                raise OverflowError(f"dimension exceeds the cap {cap}")
        level = new_level
    for i in range(l):
        while len(M.F[i]) < M.dim:
            M.F[i].append({})
    return M


# ---------------------------------------------------------------------------
# Inertia


def inertia(S) -> Tuple[int, int, int]:
    """Exact ``(p, q, z)`` of a symmetric rational matrix by congruence elimination."""
    M = [[la.F(x) for x in row] for row in S]
    n = len(M)
    for i in range(n):
        for j in range(i):
            if M[i][j] != M[j][i]:
                raise ValueError("matrix is not symmetric")
    p = q = 0
    active = list(range(n))
    while active:
        piv = next((i for i in active if M[i][i] != 0), None)
        if piv is not None:
            d = M[piv][piv]
            p, q = (p + 1, q) if d > 0 else (p, q + 1)
            rest = [i for i in active if i != piv]
            for i in rest:
                if M[i][piv] == 0:
                    continue
                c = M[i][piv] / d
                for j in rest:
                    M[i][j] -= c * M[piv][j]
            active = rest
            continue
        pair = next(((i, j) for i in active for j in active if j > i and M[i][j] != 0), None)
        if pair is None:
            break
        i0, j0 = pair
        # 2x2 pivot [[0, a], [a, 0]] has one positive and one negative eigenvalue
        p, q = p + 1, q + 1
        a = M[i0][j0]
        rest = [i for i in active if i not in (i0, j0)]
        # inverse of [[0, a], [a, 0]] is [[0, 1/a], [1/a, 0]]
        for i in rest:
            ui, vi = M[i][i0], M[i][j0]
            if ui == 0 and vi == 0:
                continue
            for j in rest:
                M[i][j] -= (ui * M[j0][j] + vi * M[i0][j]) / a
        active = rest
    return p, q, n - p - q


# ---------------------------------------------------------------------------
# Invariant forms for split real forms


@dataclass
class GramForm:
    """Invariant bilinear form, stored as blocks pairing weight ``mu`` with ``-mu``."""

    blocks: Dict[Weight, Tuple[List[int], List[int], List[List[Fraction]]]]
    size: int
    symmetric: bool = True

    def value(self, x: int, y: int) -> Fraction:
        s = 1 if self.symmetric else -1
        for rows, cols, B in self.blocks.values():
            if x in rows and y in cols:
                return B[rows.index(x)][cols.index(y)]
            if y in rows and x in cols:
                return s * B[rows.index(y)][cols.index(x)]
        return Fraction(0)

    def matrix(self) -> List[List[Fraction]]:
        n = self.size
        out = [[Fraction(0)] * n for _ in range(n)]
        s = 1 if self.symmetric else -1
        for rows, cols, B in self.blocks.values():
            for a, x in enumerate(rows):
                for b, y in enumerate(cols):
                    out[x][y] = B[a][b]
                    out[y][x] = s * B[a][b]
        return out

    @property
    def inertia(self) -> Tuple[int, int, int]:
        """Inertia of the symmetric form, or of the Hermitian form ``i B`` when ``B`` is alternating."""
        p = q = 0
        for mu, (rows, cols, B) in self.blocks.items():
            if rows == cols and self.symmetric:
                a, b, _ = inertia(B)
            else:
                r = la.rank(B) if B else 0
                if rows == cols:        # alternating block on the zero weight space
                    r //= 2
                a = b = r
            p, q = p + a, q + b
        return p, q, self.size - p - q


def _row_functional(M: ExplicitModule) -> List[Sparse]:
    """``rows[x][y] = S(x, y)`` by propagating ``S(f_j b, w) = -S(b, f_j w)``."""
    lam = M.highest
    low = tuple(-a for a in lam)
    if len(M.spaces.get(low, [])) != 1:
        raise OracleError(f"highest weight {lam} is not self-dual; no invariant form")
    rows: List[Sparse] = [dict() for _ in range(M.dim)]
    rows[0] = {M.spaces[low][0]: Fraction(1)}
    for x in range(1, M.dim):
        j, b = M.parent[x]
        target = tuple(-a for a in M.weights[x])
        r: Sparse = {}
        for w in M.spaces.get(target, []):
            val = _sdot(rows[b], M.F[j][w])
            if val:
                r[w] = -val
        rows[x] = r
    return rows


def _check_invariance(M: ExplicitModule, rows: List[Sparse]) -> None:
    for v in range(M.dim):
        for i in range(M.rank):
            for kind in ("e", "f"):
                table = M.E[i] if kind == "e" else M.F[i]
                Xv = table[v]
                sign = 1 if kind == "e" else -1
                target = tuple(-(a + sign * b) for a, b in zip(M.weights[v], M.cartan[i]))
                for w in M.spaces.get(target, []):
                    lhs = sum((x * rows[y].get(w, 0) for y, x in Xv.items()), Fraction(0))
                    rhs = _sdot(rows[v], table[w])
                    if lhs + rhs != 0:
                        raise OracleError(f"invariance fails for {kind}_{i} at ({v}, {w})")


def _blocks_from_rows(M: ExplicitModule, rows: List[Sparse], symmetric: bool) -> GramForm:
    blocks = {}
    for mu, idx in M.spaces.items():
        neg = tuple(-a for a in mu)
        if neg not in M.spaces:
            raise OracleError(f"weight {mu} has no partner {neg}")
        if neg < mu:
            continue
        cols = M.spaces[neg]
        B = [[rows[x].get(y, Fraction(0)) for y in cols] for x in idx]
        blocks[mu] = (list(idx), list(cols), B)
    return GramForm(blocks, M.dim, symmetric)


def invariant_symmetric_form(M: ExplicitModule, method: str = "propagate") -> GramForm:
    """The invariant form ``S(Xv, w) + S(v, Xw) = 0`` for the split real form, up to scale.

    ``propagate`` derives ``S`` from its value on the extremal pair and then
    verifies every invariance equation exactly; ``nullspace`` solves the full
    linear system and insists on a one-dimensional solution space (only
    practical for small modules).  If the form is alternating the returned
    ``GramForm`` has ``symmetric=False``.
    """
    if method == "nullspace":
        return _nullspace_form(M)
    rows = _row_functional(M)
    _check_invariance(M, rows)
    sym = all(rows[y].get(x, 0) == v for x in range(M.dim) for y, v in rows[x].items())
    alt = all(rows[y].get(x, 0) == -v for x in range(M.dim) for y, v in rows[x].items())
    if not (sym or alt):
        raise OracleError("invariant form is neither symmetric nor alternating")
    return _blocks_from_rows(M, rows, sym)


def _nullspace_form(M: ExplicitModule) -> GramForm:
    n = M.dim
    # h-invariance forces S(x, y) = 0 unless wt x + wt y = 0; those unknowns are dropped.
    unknowns = [(x, y) for x in range(n) for y in range(n)
                if all(a + b == 0 for a, b in zip(M.weights[x], M.weights[y]))]
    pos = {u: k for k, u in enumerate(unknowns)}
    eqs = []
    for v in range(n):
        for w in range(n):
            for i in range(M.rank):
                for table in (M.E[i], M.F[i]):
                    row = [Fraction(0)] * len(unknowns)
                    for y, x in table[v].items():
                        if (y, w) in pos:
                            row[pos[(y, w)]] += x
                    for y, x in table[w].items():
                        if (v, y) in pos:
                            row[pos[(v, y)]] += x
                    if any(row):
                        eqs.append(row)
    ker = la.nullspace(eqs, len(unknowns)) if eqs else [[Fraction(int(k == t)) for k in range(len(unknowns))]
                                                          for t in range(len(unknowns))]
    if len(ker) != 1:
        raise OracleError(f"invariant forms form a space of dimension {len(ker)}, expected 1")
    sol = ker[0]
    rows: List[Sparse] = [dict() for _ in range(n)]
    for (x, y), k in pos.items():
        if sol[k]:
            rows[x][y] = sol[k]
    low = M.spaces[tuple(-a for a in M.highest)][0]
    scale = rows[0].get(low, 0)
    if scale:
        rows = [{y: v / scale for y, v in r.items()} for r in rows]
    sym = all(rows[y].get(x, 0) == v for x in range(n) for y, v in rows[x].items())
    return _blocks_from_rows(M, rows, sym)


def oracle_sig_split(cartan_matrix, lam: Sequence[int], cap: int = DEFAULT_CAP) -> int:
    """``|p - q|`` of the invariant Hermitian form for the split real form, by brute force."""
    M = construct_irrep(cartan_matrix, lam, cap)
    S = invariant_symmetric_form(M)
    p, q, z = S.inertia
    if z:
        raise OracleError(f"invariant form is degenerate (z = {z})")
    return abs(p - q)


# ---------------------------------------------------------------------------
# Equal-rank forms: character at the element implementing theta


def _poly_divmod(a: List[int], b: List[int]) -> Tuple[List[int], List[int]]:
    """Division of integer polynomials (coefficient lists, lowest degree first) by a monic ``b``."""
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1]
        shift = len(a) - len(b)
        q[shift] = c
        for k, x in enumerate(b):
            a[shift + k] -= c * x
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return q, a


def cyclotomic_polynomial(n: int) -> List[int]:
    """Coefficients of Phi_n, lowest degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, r = _poly_divmod(poly, cyclotomic_polynomial(d))
            if r:
                raise ArithmeticError("cyclotomic division left a remainder")
    return poly


def _reduce_cyclotomic(coeffs: List[int], N: int) -> List[int]:
    _, r = _poly_divmod(coeffs, cyclotomic_polynomial(N))
    return r


def grading_cocharacter(rf) -> Tuple[Fraction, ...]:
    """A rational ``x`` with ``<alpha, x>`` congruent mod 2 to 1 on noncompact and 0 on compact roots."""
    G = rf.datum
    simple = list(G.simple_indices)
    A = [list(G.roots[i]) for i in simple]
    b = [1 if rf.is_noncompact(i) else 0 for i in simple]
    x = la.solve(A, b) if A else [Fraction(0)] * G.rank
    if x is None:
        raise OracleError("grading system is infeasible")
    for i in range(len(G.roots)):
        v = la.dot(G.roots[i], x)
        want = 1 if rf.is_noncompact(i) else 0
        if la.F(v).denominator != 1 or (int(v) - want) % 2:
            raise OracleError(f"grading is not realized by x at root {G.roots[i]}")
    return tuple(x)


def oracle_sig_equal_rank(rf, lam: Sequence, cap: Optional[int] = DEFAULT_CAP) -> int:
    """``|sum_mu mult(mu) exp(i pi <mu, x>)|`` for an equal-rank real form.

    ``lam`` is an extremal weight of the representation in X^* coordinates.
    The sum is evaluated exactly in Z[zeta_N] with ``N`` twice the common
    denominator of the pairings.
    """
    G = rf.datum
    if any(rf.theta[i][j] != (1 if i == j else 0) for i in range(G.rank) for j in range(G.rank)):
        raise OracleError("the equal-rank oracle needs theta = 1 on the character lattice")
    x = grading_cocharacter(rf)
    pos = rdm.PositiveSystem.of(G)
    top, _ = rdm.dominant_representative(pos, tuple(lam))
    if cap is not None and rdm.weyl_dimension(pos, top) > cap:
        raise OverflowError("dimension exceeds the cap")
    mult = rdm.freudenthal_multiplicities(pos, top)
    phases = {mu: la.F(la.dot(mu, x)) for mu in mult}
    den = 1
    for v in phases.values():
        den = den * v.denominator // gcd(den, v.denominator)
    N = 2 * den
    coeffs = [0] * N
    for mu, m in mult.items():
        k = int(phases[mu] * den) % N  # exp(i pi a/den) = zeta_N^a
        coeffs[k] += m
    # every phase is zeta^k0 times a sign; strip zeta^k0 and read off the integer
    k0 = int(phases[top] * den) % N
    shifted = [coeffs[(k + k0) % N] for k in range(N)]
    red = _reduce_cyclotomic(shifted, N)
    if len(red) > 1:
        raise OracleError(f"character value is not a root of unity times an integer: {red}")
    return abs(red[0]) if red else 0


# ---------------------------------------------------------------------------
# Kernel signature


def charpoly(M) -> List[Fraction]:
    """Characteristic polynomial ``det(tI - M)``, lowest degree first."""
    n = len(M)
    A = [[la.F(x) for x in row] for row in M]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    Mk = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I ;  c_{n-k} = -tr(A M_k) / k
        Mk = la.mat_mul(A, Mk) if k > 1 else [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            Mk[i][i] += coeffs[n - k + 1]
        AMk = la.mat_mul(A, Mk)
        coeffs[n - k] = -sum(AMk[i][i] for i in range(n)) / k
    return coeffs


def _pdiv(a: List[Fraction], b: List[Fraction]) -> Tuple[List[Fraction], List[Fraction]]:
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    b = list(b)
    while b and b[-1] == 0:
        b.pop()
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and a:
        c = a[-1] / b[-1]
        s = len(a) - len(b)
        q[s] = c
        for k, x in enumerate(b):
            a[s + k] -= c * x
        while a and a[-1] == 0:
            a.pop()
    return q, a


def _pgcd(a, b):
    while b and any(b):
        _, r = _pdiv(a, b)
        a, b = b, r
    while a and a[-1] == 0:
        a.pop()
    return a


def _deriv(p):
    return [k * p[k] for k in range(1, len(p))]


def _peval(p, t):
    return sum((c * t ** k for k, c in enumerate(p)), Fraction(0))


def _sign_at_infinity(p, negative: bool) -> int:
    while p and p[-1] == 0:
        p = p[:-1]
    if not p:
        return 0
    s = 1 if p[-1] > 0 else -1
    if negative and (len(p) - 1) % 2:
        s = -s
    return s


def _sturm_changes(seq, t) -> int:
    """Sign changes of a Sturm sequence at ``t`` (a Fraction, or "-inf" / "+inf")."""
    signs = []
    for p in seq:
        if isinstance(t, str):
            v = _sign_at_infinity(p, t == "-inf")
        else:
            v = _peval(p, t)
        if v != 0:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def nonpositive_real_spectrum(M) -> bool:
    """All eigenvalues of ``M`` are real and <= 0 (exact, via Sturm sequences)."""
    p = charpoly(M)
    if len(p) <= 1:
        return True
    g = _pgcd(list(p), _deriv(p))
    sq, _ = _pdiv(p, g) if len(g) > 1 else (p, [])
    while sq and sq[-1] == 0:
        sq.pop()
    deg = len(sq) - 1
    if deg <= 0:
        return True
    seq = [sq, _deriv(sq)]
    while True:
        _, r = _pdiv(seq[-2], seq[-1])
        if not r:
            break
        seq.append([-c for c in r])
    # number of distinct real roots in (-inf, 0]
    count = _sturm_changes(seq, "-inf") - _sturm_changes(seq, Fraction(0))
    return count == deg


def kernel_signature(T, S) -> Tuple[int, int]:
    """Inertia ``(p1, q1)`` of ``S`` restricted to ``ker T``.

    ``T`` must be self-adjoint for the nondegenerate form ``S``, with purely
    imaginary eigenvalues and no nilpotent part at 0.  Then ``p1 - q1``
    equals ``p - q`` of ``S`` itself, which is asserted.
    """
    Smat = S.matrix() if isinstance(S, GramForm) else [[la.F(x) for x in row] for row in S]
    T = [[la.F(x) for x in row] for row in T]
    n = len(Smat)
    if len(T) != n or any(len(r) != n for r in T):
        raise ValueError("T and S must be square of the same size")
    ST = la.mat_mul(Smat, T)
    if ST != la.mat_mul(la.transpose(T), Smat):
        raise ValueError("T is not self-adjoint for S")
    T2 = la.mat_mul(T, T)
    if not nonpositive_real_spectrum(T2):
        raise ValueError("T has eigenvalues that are not purely imaginary")
    # a nilpotent part at eigenvalue 0 breaks the conclusion (try a 3x3 Jordan block)
    if la.rank(T) != la.rank(T2):
        raise ValueError("T is not semisimple at the eigenvalue 0")
    P, Q, Z = inertia(Smat)
    if Z:
        raise ValueError("the form S is degenerate")
    K = la.nullspace(T, n)
    if K:
        Kt = [list(v) for v in K]
        sub = la.mat_mul(la.mat_mul(Kt, Smat), la.transpose(Kt))
        p1, q1, _ = inertia(sub)
    else:
        p1 = q1 = 0
    if p1 - q1 != P - Q:
        raise ArithmeticError(f"kernel inertia ({p1}, {q1}) disagrees with P - Q = {P - Q}")
    return p1, q1
