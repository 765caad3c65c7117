"""Real forms: Cartan involutions on root data and their root gradings.

A :class:`RealForm` packages a root datum with an involution ``theta`` of
``X^*`` (an integer matrix acting on column vectors) and a grading of the
``theta``-fixed (imaginary) roots into compact ``"c"`` and noncompact ``"n"``.
The Cartan is assumed maximally compact, so no root is sent to its negative.

Weights of the compact torus ``T_c`` are written in coordinates given by a
Z-basis ``k_1..k_s`` of the fixed coweights ``X_*^theta``: a weight ``x`` of
``X^*`` restricts to ``(<x,k_1>, ..., <x,k_s>)``.  Likewise the split part
``nu`` of a weight is its pairing with a basis of ``X_*^{-theta}``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg as la
from . import rootdata as rdm
from .rootdata import RootDatum, RootDataError

COMPACT, NONCOMPACT = "c", "n"


class RealFormError(ValueError):
    """A Cartan involution or grading fails one of the real-form axioms."""


def _mat(M) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(int(a) for a in row) for row in M)


@dataclass(frozen=True)
class HighestWeightSpec:
    """The pair ``(lambda_c, nu_c)``; ``nu_c`` is kept as real and imaginary parts."""

    lambda_c: Tuple[int, ...]
    nu_re: Tuple[Fraction, ...] = ()
    nu_im: Tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "lambda_c", tuple(int(x) for x in self.lambda_c))
        object.__setattr__(self, "nu_re", la.vec(self.nu_re))
        object.__setattr__(self, "nu_im", la.vec(self.nu_im or [0] * len(self.nu_re)))
        if len(self.nu_im) != len(self.nu_re):
            raise ValueError("real and imaginary parts of nu have different lengths")

    @property
    def nu_is_imaginary(self) -> bool:
        return all(x == 0 for x in self.nu_re)


@dataclass(frozen=True)
class GroupLabel:
    family: str
    params: Tuple = ()

    def __str__(self):
        if self.family in ("split", "quasisplit", "compact", "complex"):
            return f"{self.family}({self.params[0]}{self.params[1]})"
        if self.family in ("SO", "PSO"):
            return f"{self.family}({self.params[0]},{self.params[0]})"
        return f"{self.family}({', '.join(str(p) for p in self.params)})"


@dataclass(frozen=True)
class RealForm:
    datum: RootDatum
    theta: Tuple[Tuple[int, ...], ...]
    grading: Dict[int, str]
    label: str = ""
    tc_basis: Optional[Tuple[Tuple[int, ...], ...]] = None
    ac_basis: Optional[Tuple[Tuple[int, ...], ...]] = None
    _theta_perm: Tuple[int, ...] = field(default=(), repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "theta", _mat(self.theta))
        object.__setattr__(self, "grading", dict(self.grading))
        perm = _validate(self)
        object.__setattr__(self, "_theta_perm", perm)
        n = self.datum.rank
        co = la.transpose(self.theta)  # theta on X_* (theta is an involution)
        if self.tc_basis is None:
            K = la.integer_kernel([[co[i][j] - int(i == j) for j in range(n)] for i in range(n)], n)
            object.__setattr__(self, "tc_basis", tuple(_nice(K)))
        if self.ac_basis is None:
            K = la.integer_kernel([[co[i][j] + int(i == j) for j in range(n)] for i in range(n)], n)
            object.__setattr__(self, "ac_basis", tuple(_nice(K)))
        _check_basis(self, self.tc_basis, 1)
        _check_basis(self, self.ac_basis, -1)

    # -- theta actions ---------------------------------------------------
    def theta_weight(self, x: Sequence) -> tuple:
        return la.mat_vec(self.theta, x)

    def theta_coweight(self, y: Sequence) -> tuple:
        return la.vec_mat(y, self.theta)

    def theta_index(self, i: int) -> int:
        return self._theta_perm[i]

    def is_imaginary(self, i: int) -> bool:
        return self._theta_perm[i] == i

    def is_complex(self, i: int) -> bool:
        return not self.is_imaginary(i)

    @property
    def imaginary_indices(self) -> List[int]:
        return [i for i in range(len(self.datum.roots)) if self.is_imaginary(i)]

    def is_noncompact(self, i: int) -> bool:
        return self.grading[i] == NONCOMPACT

    # -- torus coordinates -----------------------------------------------
    def restrict_weight(self, x: Sequence) -> tuple:
        """Coordinates of the restriction of ``x`` to the compact torus."""
        return tuple(la.dot(x, k) for k in self.tc_basis)

    def split_part(self, x: Sequence) -> tuple:
        return tuple(la.dot(x, a) for a in self.ac_basis)

    def tc_coweight_coords(self, y: Sequence) -> Tuple[int, ...]:
        """Write a theta-fixed coweight in the basis ``tc_basis``."""
        c = la.integer_solve(la.transpose(self.tc_basis), y)
        if c is None:
            raise RealFormError(f"{tuple(y)} is not a fixed coweight")
        return c

    @property
    def tc_rank(self) -> int:
        return len(self.tc_basis)

    @property
    def split_rank(self) -> int:
        return len(self.ac_basis)


def _nice(K):
    """Deterministic sign and order normalization of a lattice basis."""
    out = []
    for v in K:
        v = tuple(int(a) for a in v)
        lead = next((a for a in v if a), 0)
        out.append(v if lead > 0 else tuple(-a for a in v))
    out.sort(key=lambda v: tuple(-abs(a) for a in v), reverse=False)
    return out


def _check_basis(rf: RealForm, basis, sign: int) -> None:
    n = rf.datum.rank
    for k in basis:
        if tuple(rf.theta_coweight(k)) != tuple(sign * a for a in k):
            raise RealFormError(f"coweight {k} is not in the {sign:+d} eigenlattice of theta")
    expected = la.integer_kernel(
        [[la.transpose(rf.theta)[i][j] - sign * int(i == j) for j in range(n)] for i in range(n)], n)
    if len(basis) != len(expected):
        raise RealFormError("torus basis has the wrong rank")
    for v in expected:
        if not la.in_integer_span(list(basis), v):
            raise RealFormError("torus basis does not span the saturated eigenlattice")


def _validate(rf: RealForm) -> Tuple[int, ...]:
    rd, T = rf.datum, rf.theta
    n = rd.rank
    if len(T) != n or any(len(r) != n for r in T):
        raise RealFormError("theta has the wrong shape")
    if la.mat_mul(T, T) != la.identity(n):
        raise RealFormError("theta is not an involution")
    perm = []
    for i, (a, c) in enumerate(zip(rd.roots, rd.coroots)):
        ta = la.mat_vec(T, a)
        if not rd.is_root(ta):
            raise RealFormError(f"theta maps root {a} to the non-root {ta}")
        j = rd.index(ta)
        if tuple(la.vec_mat(c, T)) != rd.coroots[j]:
            raise RealFormError(f"theta does not carry the coroot of {a} to the coroot of {ta}")
        if ta == tuple(-x for x in a):
            raise RealFormError(f"root {a} is real; the Cartan is not maximally compact")
        perm.append(j)
    imag = {i for i, j in enumerate(perm) if i == j}
    g = rf.grading
    if set(g) != imag:
        missing = sorted(imag - set(g))
        extra = sorted(set(g) - imag)
        raise RealFormError(f"grading must cover exactly the imaginary roots (missing {missing}, extra {extra})")
    for i in imag:
        if g[i] not in (COMPACT, NONCOMPACT):
            raise RealFormError(f"grading value {g[i]!r} is not 'c' or 'n'")
        if g[rd.index(tuple(-x for x in rd.roots[i]))] != g[i]:
            raise RealFormError(f"grading is not symmetric at {rd.roots[i]}")
    for i in imag:
        for j in imag:
            s = la.add(rd.roots[i], rd.roots[j])
            if rd.is_root(s):
                k = rd.index(s)
                want = COMPACT if (g[i] == g[j]) else NONCOMPACT
                if g[k] != want:
                    raise RealFormError(
                        f"grading is not additive: {rd.roots[i]} + {rd.roots[j]} should be {want}")
    # complex reflections preserve the grading
    for i in range(len(rd.roots)):
        j = perm[i]
        if j == i:
            continue
        s = la.add(rd.roots[i], rd.roots[j])
        if rd.is_root(s):
            k = rd.index(s)
            if g[k] != NONCOMPACT:
                raise RealFormError(f"alpha + theta(alpha) = {s} is a compact root")
            refl = [k]
        else:
            refl = [i, j]
        for b in imag:
            v = rd.roots[b]
            for r in refl:
                v = rd.reflect(r, v)
            if g[rd.index(v)] != g[b]:
                raise RealFormError(f"complex reflection at {rd.roots[i]} changes the grading of {rd.roots[b]}")
    return tuple(perm)


def classify_root(rf: RealForm, i: int) -> str:
    """``real``, ``complex``, ``imaginary_compact`` or ``imaginary_noncompact``."""
    j = rf.theta_index(i)
    if rf.datum.roots[j] == tuple(-x for x in rf.datum.roots[i]):
        return "real"
    if j != i:
        return "complex"
    return "imaginary_noncompact" if rf.grading[i] == NONCOMPACT else "imaginary_compact"


# ---------------------------------------------------------------------------
# Gradings


def _imaginary_simple(rd: RootDatum, imag: Sequence[int]) -> List[int]:
    pos = [i for i in imag if i in set(rd.positive)]
    posvecs = {rd.roots[i] for i in pos}
    return [i for i in pos if not any(la.sub(rd.roots[i], rd.roots[j]) in posvecs for j in pos)]


def grading_from_simple(rd: RootDatum, imag: Sequence[int], simple: Sequence[int],
                        values: Sequence[int]) -> Dict[int, str]:
    """Extend a Z/2 grading given on simple imaginary roots linearly to all imaginary roots."""
    basis = [rd.roots[s] for s in simple]
    g = {}
    for i in imag:
        c = la.solve_combination(basis, rd.roots[i])
        if c is None or any(x.denominator != 1 for x in c):
            raise RealFormError("imaginary roots are not integral combinations of the simple ones")
        par = sum(int(x) * v for x, v in zip(c, values)) % 2
        g[i] = NONCOMPACT if par else COMPACT
    return g


def quasisplit_grading(rd: RootDatum, theta) -> Dict[int, str]:
    """Among valid gradings for ``theta``, the one with fewest compact roots.

    Candidates are all assignments on the simple imaginary roots; ties are
    broken lexicographically so the choice is reproducible.
    """
    n = rd.rank
    perm = [rd.index(la.mat_vec(theta, a)) for a in rd.roots]
    imag = [i for i in range(len(rd.roots)) if perm[i] == i]
    simple = _imaginary_simple(rd, imag)
    best = None
    for values in product((1, 0), repeat=len(simple)):
        g = grading_from_simple(rd, imag, simple, values)
        try:
            RealForm(rd, theta, g)
        except RealFormError:
            continue
        ncompact = sum(1 for v in g.values() if v == COMPACT)
        if best is None or ncompact < best[0]:
            best = (ncompact, g)
    if best is None:
        raise RealFormError("no valid grading exists for this involution")
    return best[1]


def grading_from_coweight(rd: RootDatum, imag: Sequence[int], z: Sequence) -> Dict[int, str]:
    """Grading ``beta -> <beta, z> mod 2`` (``z`` must pair integrally)."""
    g = {}
    for i in imag:
        v = la.dot(rd.roots[i], z)
        if la.F(v).denominator != 1:
            raise RealFormError("coweight does not pair integrally with the roots")
        g[i] = NONCOMPACT if int(v) % 2 else COMPACT
    return g


# ---------------------------------------------------------------------------
# Built-in groups


def _diagram_theta(rd: RootDatum, perm: Sequence[int]):
    """Involution of X^* (fundamental-weight coordinates) permuting simple roots by ``perm``."""
    n = rd.rank
    return tuple(tuple(int(perm[j] == i) for j in range(n)) for i in range(n))


def _minus_w0_perm(rd: RootDatum) -> List[int]:
    w0 = rdm.longest_element(rd)
    perm = []
    for a in rd.simple_roots:
        b = tuple(-x for x in w0.act(a))
        perm.append(rd.simple_roots.index(b))
    return perm


def _diagram_perm(family: str, n: int) -> List[int]:
    family = family.upper()
    ident = list(range(n))
    if family == "A":
        return list(reversed(ident))
    if family == "D":
        if n == 2:
            return [1, 0]
        p = list(ident)
        p[n - 2], p[n - 1] = p[n - 1], p[n - 2]
        return p
    if family == "E" and n == 6:
        # Bourbaki numbering: 1<->6, 3<->5, 2 and 4 fixed
        return [5, 1, 4, 3, 2, 0]
    return ident


def split_group(family: str, n: int) -> RealForm:
    """Split real form of the simply connected group of the given type."""
    rd = rdm.build_root_system(f"{family}{n}")
    theta = _diagram_theta(rd, _minus_w0_perm(rd))
    return RealForm(rd, theta, quasisplit_grading(rd, theta), label=f"split({family.upper()}{n})")


def quasisplit_group(family: str, n: int) -> RealForm:
    """Quasisplit form whose involution is the nontrivial diagram automorphism."""
    A = rdm.cartan_matrix_of_type(family, n)
    rd = rdm.from_cartan_matrix(A, label=f"{family.upper()}{n}")
    theta = _diagram_theta(rd, _diagram_perm(family, n))
    return RealForm(rd, theta, quasisplit_grading(rd, theta), label=f"quasisplit({family.upper()}{n})")


def sl_group(n: int) -> RealForm:
    rf = split_group("A", n - 1)
    return RealForm(rf.datum, rf.theta, rf.grading, label=f"SL({n},R)")


def compact_group(family: str, n: int) -> RealForm:
    rd = rdm.build_root_system(f"{family}{n}")
    theta = la.identity(rd.rank)
    return RealForm(rd, theta, {i: COMPACT for i in range(len(rd.roots))}, label=f"compact({family.upper()}{n})")


def complex_group(family: str, n: int) -> RealForm:
    """The complex group H(C) viewed as a real group: H x H with theta swapping factors."""
    h = rdm.build_root_system(f"{family}{n}")
    r = h.rank
    roots, coroots = [], []
    for a, c in zip(h.roots, h.coroots):
        z = (0,) * r
        roots += [a + z, z + a]
        coroots += [c + z, z + c]
    rd = rdm.make_root_datum(2 * r, roots, coroots, label=f"{family.upper()}{n}x{family.upper()}{n}")
    theta = [[int(j == (i + r) % (2 * r)) for j in range(2 * r)] for i in range(2 * r)]
    return RealForm(rd, theta, {}, label=f"complex({family.upper()}{n})")


def gl_group(n: int) -> RealForm:
    """GL(n,R) on its fundamental Cartan.

    ``theta`` swaps and negates coordinates within each 2x2 block and
    negates the last coordinate when ``n`` is odd.  All imaginary roots are
    noncompact.
    """
    rd = rdm.gl_root_datum(n)
    m = n // 2
    T = [[0] * n for _ in range(n)]
    for j in range(m):
        T[2 * j][2 * j + 1] = -1
        T[2 * j + 1][2 * j] = -1
    if n % 2:
        T[n - 1][n - 1] = -1
    grading = {}
    for i, a in enumerate(rd.roots):
        if tuple(la.mat_vec(T, a)) == a:
            grading[i] = NONCOMPACT
    tc = tuple(tuple(int(k == 2 * j) - int(k == 2 * j + 1) for k in range(n)) for j in range(m))
    ac = [tuple(int(k in (2 * j, 2 * j + 1)) for k in range(n)) for j in range(m)]
    if n % 2:
        ac.append(tuple(int(k == n - 1) for k in range(n)))
    return RealForm(rd, T, grading, label=f"GL({n},R)", tc_basis=tc, ac_basis=tuple(ac))


def _symplectic_roots(n: int):
    e = lambda i: tuple(int(k == i) for k in range(n))  # noqa: E731
    roots, coroots = [], []
    for i in range(n):
        for j in range(i + 1, n):
            for si, sj in ((1, -1), (-1, 1), (1, 1), (-1, -1)):
                v = la.add(la.scale(si, e(i)), la.scale(sj, e(j)))
                roots.append(v)
                coroots.append(v)
        for s in (1, -1):
            roots.append(la.scale(2 * s, e(i)))
            coroots.append(la.scale(s, e(i)))
    return roots, coroots


def _sp_grading(rd: RootDatum) -> Dict[int, str]:
    # e_i - e_j compact; e_i + e_j and 2e_i noncompact
    g = {}
    for i in range(len(rd.roots)):
        a = rd.to_ambient(rd.roots[i])
        g[i] = NONCOMPACT if sum(a) % 2 == 0 and sum(a) != 0 else COMPACT
    return g


def sp_group(n: int) -> RealForm:
    """Sp(2n,R) in ambient coordinates Z^n; theta is the identity."""
    roots, coroots = _symplectic_roots(n)
    rd = rdm.make_root_datum(n, roots, coroots, label=f"C{n}")
    return RealForm(rd, la.identity(n), _sp_grading(rd), label=f"Sp({2 * n},R)")


def _even_sum_basis(n: int) -> List[Tuple[int, ...]]:
    if n == 1:
        return [(2,)]
    rows = [tuple(int(k == i) - int(k == i + 1) for k in range(n)) for i in range(n - 1)]
    rows.append(tuple(int(k >= n - 2) for k in range(n)))
    return rows


def psp_group(n: int) -> RealForm:
    """PSp(2n,R): X^* = {x in Z^n : sum x even}, X_* = <Z^n, (1/2,...,1/2)>."""
    roots, coroots = _symplectic_roots(n)
    rd = rdm.datum_on_sublattice(_even_sum_basis(n), roots, coroots, label=f"C{n}ad")
    return RealForm(rd, la.identity(n), _sp_grading(rd), label=f"PSp({2 * n},R)")


def _orthogonal_even_roots(N: int):
    e = lambda i: tuple(int(k == i) for k in range(N))  # noqa: E731
    roots = []
    for i in range(N):
        for j in range(i + 1, N):
            for si, sj in ((1, -1), (-1, 1), (1, 1), (-1, -1)):
                roots.append(la.add(la.scale(si, e(i)), la.scale(sj, e(j))))
    return roots, list(roots)


def so_group(n: int, adjoint: bool = False) -> RealForm:
    """SO(2n,2n) (or PSO(2n,2n) when ``adjoint``) on a compact Cartan, theta = id.

    The grading is ``beta -> <beta, z> mod 2`` with ``z = (1^n, 0^n)``.
    """
    N = 2 * n
    roots, coroots = _orthogonal_even_roots(N)
    if adjoint:
        rd = rdm.datum_on_sublattice(_even_sum_basis(N), roots, coroots, label=f"D{N}ad")
    else:
        rd = rdm.make_root_datum(N, roots, coroots, label=f"D{N}")
    z = tuple([1] * n + [0] * n)
    g = {i: (NONCOMPACT if la.dot(rd.to_ambient(rd.roots[i]), z) % 2 else COMPACT)
         for i in range(len(rd.roots))}
    name = "PSO" if adjoint else "SO"
    return RealForm(rd, la.identity(N), g, label=f"{name}({N},{N})")


def parse_group_label(text: str, n: Optional[int] = None) -> GroupLabel:
    """Parse labels such as ``GL(4)``, ``GL`` with ``n=4``, ``Sp(4)``, ``PSO(4,4)``, ``split(E6)``."""
    t = text.strip().replace(" ", "")
    if "(" in t:
        fam, rest = t.split("(", 1)
        args = rest.rstrip(")").replace(",R", "").split(",")
    else:
        fam, args = t, ([str(n)] if n is not None else [])
    key = fam.lower()
    aliases = {"gl": "GL", "sl": "SL", "sp": "Sp", "psp": "PSp", "so": "SO", "pso": "PSO",
               "split": "split", "quasisplit": "quasisplit", "compact": "compact", "complex": "complex"}
    if key not in aliases:
        if len(fam) >= 2 and fam[0].upper() in "ABCDEFG" and fam[1:].isdigit():
            return GroupLabel("split", (fam[0].upper(), int(fam[1:])))
        raise ValueError(f"unknown group family {fam!r}")
    family = aliases[key]
    if family in ("split", "quasisplit", "compact", "complex"):
        if len(args) == 1:
            a = args[0]
            return GroupLabel(family, (a[0].upper(), int(a[1:])))
        return GroupLabel(family, (args[0].upper(), int(args[1])))
    if not args or not args[0]:
        raise ValueError(f"{family} needs a size parameter")
    nums = [int(a) for a in args if a]
    if family in ("Sp", "PSp"):
        if nums[0] % 2:
            raise ValueError(f"{family}(2n) needs an even size")
        return GroupLabel(family, (nums[0],))
    if family in ("SO", "PSO"):
        p = nums[0]
        q = nums[1] if len(nums) > 1 else p
        if p != q or p % 2:
            raise ValueError(f"{family}(p,q) is only built in for p = q even")
        return GroupLabel(family, (p,))
    return GroupLabel(family, (nums[0],))


def builtin_group(label) -> RealForm:
    """Construct one of the built-in real forms; accepts a :class:`GroupLabel` or a string."""
    if isinstance(label, str):
        label = parse_group_label(label)
    f, p = label.family, label.params
    if f == "GL":
        if p[0] < 1:
            raise ValueError("GL(n) needs n >= 1")
        return gl_group(p[0])
    if f == "SL":
        if p[0] < 2:
            raise ValueError("SL(n) needs n >= 2")
        return sl_group(p[0])
    if f == "Sp":
        return sp_group(p[0] // 2)
    if f == "PSp":
        return psp_group(p[0] // 2)
    if f == "SO":
        return so_group(p[0] // 2)
    if f == "PSO":
        return so_group(p[0] // 2, adjoint=True)
    if f == "split":
        return split_group(*p)
    if f == "quasisplit":
        return quasisplit_group(*p)
    if f == "compact":
        return compact_group(*p)
    if f == "complex":
        return complex_group(*p)
    raise ValueError(f"unknown family {f!r}")


def from_json(obj) -> RealForm:
    """Custom real form from the JSON schema ``{rank, roots, coroots, theta, grading}``.

    ``grading`` lists ``"c"``/``"n"`` for the theta-fixed roots in the order
    in which they appear in ``roots``.
    """
    if isinstance(obj, str):
        obj = json.loads(obj)
    for key in ("rank", "roots", "coroots", "theta", "grading"):
        if key not in obj:
            raise RealFormError(f"missing field {key!r}")
    rank = int(obj["rank"])
    roots = [tuple(int(x) for x in r) for r in obj["roots"]]
    coroots = [tuple(int(x) for x in c) for c in obj["coroots"]]
    theta = [[int(x) for x in row] for row in obj["theta"]]
    try:
        rd = rdm.make_root_datum(rank, roots, coroots, label=obj.get("label", "custom"))
    except RootDataError as exc:
        raise RealFormError(f"roots/coroots: {exc}") from None
    if len(theta) != rank or any(len(r) != rank for r in theta):
        raise RealFormError("field 'theta' must be a rank x rank integer matrix")
    fixed = [r for r in roots if tuple(la.mat_vec(theta, r)) == r]
    grading = list(obj["grading"])
    if len(grading) != len(fixed):
        raise RealFormError(f"field 'grading' has {len(grading)} entries; {len(fixed)} theta-fixed roots")
    g = {rd.index(r): str(v) for r, v in zip(fixed, grading)}
    return RealForm(rd, theta, g, label=obj.get("label", "custom"))


def to_json(rf: RealForm) -> dict:
    rd = rf.datum
    fixed = [i for i in range(len(rd.roots)) if rf.is_imaginary(i)]
    return {
        "rank": rd.rank,
        "roots": [list(r) for r in rd.roots],
        "coroots": [list(c) for c in rd.coroots],
        "theta": [list(r) for r in rf.theta],
        "grading": [rf.grading[i] for i in fixed],
        "label": rf.label,
    }


# ---------------------------------------------------------------------------
# Integrality, duality, existence


def is_weakly_integral(rf: RealForm, gamma) -> bool:
    """``<gamma, alpha^vee>`` integral for every root (``gamma`` in X^* (x) Q)."""
    if isinstance(gamma, HighestWeightSpec):
        return all(la.F(la.dot(gamma.lambda_c, c)).denominator == 1 for c in restricted_coroot_coords(rf))
    return all(la.F(la.dot(gamma, c)).denominator == 1 for c in rf.datum.coroots)


def is_strongly_integral(rf: RealForm, gamma) -> bool:
    """Weak integrality plus the condition at real roots.

    On a maximally compact Cartan there are no real roots, so this agrees
    with :func:`is_weakly_integral`.
    """
    real = [i for i in range(len(rf.datum.roots)) if classify_root(rf, i) == "real"]
    assert not real
    return is_weakly_integral(rf, gamma)


def restricted_coroot_vector(rf: RealForm, i: int) -> Tuple[int, ...]:
    """The restricted coroot attached to root ``i``, as a fixed coweight in X_*."""
    rd = rf.datum
    c = rd.coroots[i]
    j = rf.theta_index(i)
    if j == i:
        return c
    s = la.add(c, rd.coroots[j])
    if rd.is_root(la.add(rd.roots[i], rd.roots[j])):
        return tuple(2 * x for x in s)
    return s


def restricted_coroot_coords(rf: RealForm) -> List[Tuple[int, ...]]:
    return [rf.tc_coweight_coords(restricted_coroot_vector(rf, i)) for i in range(len(rf.datum.roots))]


def hermitian_dual(gamma: HighestWeightSpec) -> HighestWeightSpec:
    """``(lambda, nu) -> (lambda, -conj(nu))``."""
    return HighestWeightSpec(gamma.lambda_c, tuple(-x for x in gamma.nu_re), gamma.nu_im)


NO_FORM = "none"
EXISTS = "exists_on_identity_component"
SEE_INVARIANCE = "see_invariance_level"


def hermitian_existence(rf: RealForm, gamma: HighestWeightSpec, component_group_order: Optional[int] = None) -> str:
    """Whether an invariant Hermitian form exists.

    There is none as soon as ``nu`` has a nonzero real part.  Otherwise a
    form exists on the identity-component level; when the component group is
    nontrivial the full-group question is answered by the invariance level.
    """
    if not gamma.nu_is_imaginary:
        return NO_FORM
    if component_group_order is None:
        from .weylres import component_group
        component_group_order = component_group(rf).order
    return EXISTS if component_group_order == 1 else SEE_INVARIANCE


def gl_split_to_fundamental(n: int, lam: Sequence[int]) -> HighestWeightSpec:
    """Convert a GL(n) highest weight in split coordinates to ``(lambda_c, nu_c)``.

    ``lambda_c = (l_1 - l_n, l_2 - l_{n-1}, ...)`` and the split part pairs
    ``l_j`` with ``l_{n+1-j}`` (plus the middle entry for odd ``n``).
    """
    lam = [int(x) for x in lam]
    if len(lam) != n:
        raise ValueError(f"expected {n} entries, got {len(lam)}")
    if any(lam[i] < lam[i + 1] for i in range(n - 1)):
        raise ValueError(f"{tuple(lam)} is not weakly decreasing")
    m = n // 2
    lc = tuple(lam[j] - lam[n - 1 - j] for j in range(m))
    nu = [lam[j] + lam[n - 1 - j] for j in range(m)]
    if n % 2:
        nu.append(lam[m])
    return HighestWeightSpec(lc, tuple(nu))


def is_self_dual_gl(lam: Sequence[int]) -> bool:
    return list(lam) == [-x for x in reversed(lam)]
