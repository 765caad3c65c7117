"""Root data, Weyl groups, the Weyl dimension formula and weight multiplicities.

Conventions
-----------
A root datum is stored in coordinates: ``X^*`` is ``Z^rank`` and ``X_*`` is
the dual lattice, so the pairing of a weight with a coweight is the dot
product.  Roots live in ``X^*`` and coroots in ``X_*``; the two lists are
parallel.  Weyl group elements are integer matrices acting on column vectors
of ``X^*``.

For Cartan-matrix builds we use the convention ``A[i][j] = <alpha_i,
alpha_j^vee>`` and the simply connected lattice: weights are written in the
basis of fundamental weights, coweights in the basis of simple coroots.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg as la

IntVector = Tuple[int, ...]
RatVector = Tuple[Fraction, ...]

DEFAULT_WEYL_CAP = 10 ** 6


class RootDataError(ValueError):
    """Raised when input does not describe a valid (finite) root datum."""


def _pair(x: Sequence, y: Sequence):
    return la.dot(x, y)


def _neg(v: Sequence) -> tuple:
    return tuple(-a for a in v)


def _lex_positive(v: Sequence) -> bool:
    for a in v:
        if a != 0:
            return a > 0
    return False


# ---------------------------------------------------------------------------
# Root datum


@dataclass(frozen=True)
class RootDatum:
    rank: int
    roots: Tuple[IntVector, ...]
    coroots: Tuple[IntVector, ...]
    positive: Tuple[int, ...]
    simple_indices: Tuple[int, ...]
    label: str = ""
    # rows are the X^* basis vectors written in some ambient Z^k (optional)
    ambient: Optional[Tuple[Tuple[int, ...], ...]] = None
    _index: Dict[IntVector, int] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {r: i for i, r in enumerate(self.roots)})

    # -- lookups ---------------------------------------------------------
    def index(self, root: Sequence) -> int:
        key = tuple(int(a) for a in root)
        try:
            return self._index[key]
        except KeyError:
            raise KeyError(f"{key} is not a root") from None

    def is_root(self, v: Sequence) -> bool:
        try:
            key = tuple(la.as_int_vector(v) or ())
        except TypeError:
            return False
        return len(key) == self.rank and key in self._index

    def coroot_of(self, root: Sequence) -> IntVector:
        return self.coroots[self.index(root)]

    @property
    def positive_roots(self) -> List[IntVector]:
        return [self.roots[i] for i in self.positive]

    @property
    def positive_coroots(self) -> List[IntVector]:
        return [self.coroots[i] for i in self.positive]

    @property
    def simple_roots(self) -> List[IntVector]:
        return [self.roots[i] for i in self.simple_indices]

    @property
    def simple_coroots(self) -> List[IntVector]:
        return [self.coroots[i] for i in self.simple_indices]

    @property
    def semisimple_rank(self) -> int:
        return len(self.simple_indices)

    def cartan_matrix(self) -> List[List[int]]:
        """``A[i][j] = <alpha_i, alpha_j^vee>`` for the simple roots."""
        S, C = self.simple_roots, self.simple_coroots
        return [[_pair(a, c) for c in C] for a in S]

    def positive_system(self) -> "PositiveSystem":
        return PositiveSystem.of(self)

    # -- reflections -----------------------------------------------------
    def reflect(self, i: int, x: Sequence) -> tuple:
        """Apply ``s_{alpha_i}`` (root index ``i``) to a weight."""
        a, c = self.roots[i], self.coroots[i]
        k = _pair(x, c)
        return tuple(xj - k * aj for xj, aj in zip(x, a))

    def coreflect(self, i: int, y: Sequence) -> tuple:
        a, c = self.roots[i], self.coroots[i]
        k = _pair(a, y)
        return tuple(yj - k * cj for yj, cj in zip(y, c))

    def reflection_matrix(self, i: int) -> Tuple[IntVector, ...]:
        a, c = self.roots[i], self.coroots[i]
        n = self.rank
        return tuple(tuple(int(r == s) - a[r] * c[s] for s in range(n)) for r in range(n))

    def to_ambient(self, x: Sequence) -> tuple:
        if self.ambient is None:
            return tuple(x)
        return la.vec_mat(x, self.ambient)

    def validate(self) -> None:
        validate_root_datum(self.rank, self.roots, self.coroots)


def validate_root_datum(rank: int, roots: Sequence[Sequence[int]], coroots: Sequence[Sequence[int]]) -> None:
    """Check the root datum axioms; raise :class:`RootDataError` naming the failure."""
    if len(roots) != len(coroots):
        raise RootDataError("roots and coroots have different lengths")
    index = {tuple(r): i for i, r in enumerate(roots)}
    coindex = {tuple(c): i for i, c in enumerate(coroots)}
    if len(index) != len(roots):
        raise RootDataError("duplicate root")
    for i, (a, c) in enumerate(zip(roots, coroots)):
        if len(a) != rank or len(c) != rank:
            raise RootDataError(f"root {i} has wrong length")
        if _pair(a, c) != 2:
            raise RootDataError(f"<root {a}, coroot {c}> != 2")
        if _neg(a) not in index or coroots[index[_neg(a)]] != tuple(-x for x in c):
            raise RootDataError(f"root {a} has no negative partner with coroot {_neg(c)}")
    for i, (a, c) in enumerate(zip(roots, coroots)):
        for j, (b, d) in enumerate(zip(roots, coroots)):
            k = _pair(b, c)
            if int(k) != k:
                raise RootDataError(f"non-integral pairing <{b}, {c}>")
            sb = tuple(bj - k * aj for bj, aj in zip(b, a))
            sd = tuple(dj - _pair(a, d) * cj for dj, cj in zip(d, c))
            if sb not in index:
                raise RootDataError(f"reflection in {a} maps root {b} outside the root set")
            if coroots[index[sb]] != sd or sd not in coindex:
                raise RootDataError(f"reflection in {a} does not respect the root/coroot bijection at {b}")


def _simple_from_positive(roots: Sequence[IntVector], positive: Sequence[int]) -> Tuple[int, ...]:
    """Positive roots that are not a sum of two positive roots."""
    pos = [roots[i] for i in positive]
    posset = set(pos)
    return tuple(i for i in positive
                 if not any(la.sub(roots[i], b) in posset for b in pos))


def make_root_datum(rank: int, roots: Sequence[Sequence[int]], coroots: Sequence[Sequence[int]],
                    positive_key=None, label: str = "", ambient=None, validate: bool = True) -> RootDatum:
    """Assemble a :class:`RootDatum`, choosing positivity by ``positive_key``.

    ``positive_key(root_index)`` must return a tuple whose lexicographic sign
    decides positivity; by default the root coordinates themselves are used.
    Roots are reordered: positive roots first (in input order), then their
    negatives in the same order.
    """
    roots = [tuple(int(x) for x in r) for r in roots]
    coroots = [tuple(int(x) for x in c) for c in coroots]
    if validate:
        validate_root_datum(rank, roots, coroots)
    key = positive_key or (lambda i: roots[i])
    pos_in = [i for i in range(len(roots)) if _lex_positive(key(i))]
    if 2 * len(pos_in) != len(roots):
        raise RootDataError("positivity rule does not select exactly one of each +/- pair")
    index = {r: i for i, r in enumerate(roots)}
    order = pos_in + [index[_neg(roots[i])] for i in pos_in]
    R = tuple(roots[i] for i in order)
    C = tuple(coroots[i] for i in order)
    npos = len(pos_in)
    positive = tuple(range(npos))
    if validate:
        posset = set(R[:npos])
        for a in R[:npos]:
            for b in R[:npos]:
                s = la.add(a, b)
                if s in index and s not in posset:
                    raise RootDataError("positive set is not closed under addition")
    simple = _simple_from_positive(R, positive)
    amb = tuple(tuple(int(x) for x in row) for row in ambient) if ambient is not None else None
    return RootDatum(rank, R, C, positive, simple, label, amb)


def reflection_closure(simple_roots: Sequence[Sequence], simple_coroots: Sequence[Sequence]):
    """All (root, coroot) pairs generated from simple ones by simple reflections."""
    pairs = {(tuple(a), tuple(c)) for a, c in zip(simple_roots, simple_coroots)}
    frontier = list(pairs)
    sims = list(zip(simple_roots, simple_coroots))
    while frontier:
        nxt = []
        for b, d in frontier:
            for a, c in sims:
                k = _pair(b, c)
                nb = tuple(x - k * y for x, y in zip(b, a))
                nd = tuple(x - _pair(a, d) * y for x, y in zip(d, c))
                if (nb, nd) not in pairs:
                    pairs.add((nb, nd))
                    nxt.append((nb, nd))
        frontier = nxt
        if len(pairs) > 100000:
            raise RootDataError("reflection closure is infinite (not of finite type)")
    return sorted(pairs)


# ---------------------------------------------------------------------------
# Cartan matrices and type labels


def cartan_matrix_of_type(family: str, n: int) -> List[List[int]]:
    """Cartan matrix with ``A[i][j] = <alpha_i, alpha_j^vee>``, Bourbaki numbering."""
    family = family.upper()
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        A[i][j] = aij
        A[j][i] = aji

    if family == "A":
        if n < 1:
            raise RootDataError("A_n needs n >= 1")
        for i in range(n - 1):
            link(i, i + 1)
    elif family in ("B", "C"):
        if n < 2:
            raise RootDataError(f"{family}_n needs n >= 2")
        for i in range(n - 2):
            link(i, i + 1)
        # B: alpha_n short, so <alpha_{n-1}, alpha_n^vee> = -2
        if family == "B":
            link(n - 2, n - 1, -2, -1)
        else:
            link(n - 2, n - 1, -1, -2)
    elif family == "D":
        if n < 2:
            raise RootDataError("D_n needs n >= 2")
        if n == 2:
            return A
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif family == "E":
        if n not in (6, 7, 8):
            raise RootDataError("E_n needs n in {6,7,8}")
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif family == "F":
        if n != 4:
            raise RootDataError("F_n needs n = 4")
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif family == "G":
        if n != 2:
            raise RootDataError("G_n needs n = 2")
        link(0, 1, -1, -3)
    else:
        raise RootDataError(f"unknown family {family!r}")
    return A


def parse_type_label(label: str) -> Tuple[str, int]:
    label = label.strip().upper()
    if not label or not label[0].isalpha() or not label[1:].isdigit():
        raise RootDataError(f"cannot parse type label {label!r}")
    return label[0], int(label[1:])


def check_finite_type(A: Sequence[Sequence[int]]) -> None:
    """Raise with the offending principal submatrix unless ``A`` is of finite type."""
    n = len(A)
    for i in range(n):
        if A[i][i] != 2:
            raise RootDataError(f"diagonal entry A[{i}][{i}] = {A[i][i]} != 2")
        for j in range(n):
            if i != j:
                if A[i][j] > 0:
                    raise RootDataError(f"positive off-diagonal entry A[{i}][{j}]")
                if (A[i][j] == 0) != (A[j][i] == 0):
                    raise RootDataError(f"A[{i}][{j}] and A[{j}][{i}] are not both zero")
    # symmetrize: find d with D A symmetric (d_i = |alpha_i|^2 / 2 up to scale)
    d: List[Optional[Fraction]] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and A[i][j] != 0:
                    # <a_i, a_j^v> = 2(a_i,a_j)/(a_j,a_j) ; so (a_i,a_j) = A_ij d_j
                    val = d[i] * A[j][i] / A[i][j]
                    if d[j] is None:
                        d[j] = val
                        stack.append(j)
                    elif d[j] != val:
                        raise RootDataError("Cartan matrix is not symmetrizable")
    B = [[A[i][j] * d[j] for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        sub = [row[:k] for row in B[:k]]
        if la.determinant(sub) <= 0:
            raise RootDataError(
                f"Cartan matrix is not of finite type; failing leading submatrix {[list(r[:k]) for r in A[:k]]}")


def from_cartan_matrix(A: Sequence[Sequence[int]], label: str = "") -> RootDatum:
    """Simply connected root datum of a finite-type Cartan matrix."""
    A = [[int(x) for x in row] for row in A]
    n = len(A)
    check_finite_type(A)
    simple_roots = [tuple(A[i]) for i in range(n)]
    simple_coroots = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    pairs = reflection_closure(simple_roots, simple_coroots)
    roots = [p[0] for p in pairs]
    coroots = [p[1] for p in pairs]
    # coordinates in the simple-root basis decide positivity
    Ainv = la.inverse(A) if n else []

    def key(i):
        return tuple(la.vec_mat(roots[i], Ainv))

    # order positive roots by height then coordinates for reproducibility
    order = sorted(range(len(roots)), key=lambda i: (sum(key(i)) < 0, abs(sum(key(i))), tuple(-x for x in key(i))))
    roots = [roots[i] for i in order]
    coroots = [coroots[i] for i in order]
    Ainv_key = lambda i: tuple(la.vec_mat(roots[i], Ainv))  # noqa: E731
    rd = make_root_datum(n, roots, coroots, positive_key=Ainv_key, label=label or cartan_label(A))
    # simple roots in Cartan order
    simple = tuple(rd.index(a) for a in simple_roots)
    return RootDatum(rd.rank, rd.roots, rd.coroots, rd.positive, simple, rd.label, None)


def build_root_system(spec) -> RootDatum:
    """Root datum from a type label (``"A2"``, ``"GL4"``, ``"E6"``) or a Cartan matrix."""
    if isinstance(spec, str):
        s = spec.strip().upper()
        if s.startswith("GL"):
            return gl_root_datum(int(s[2:].strip("()")))
        fam, n = parse_type_label(s)
        return from_cartan_matrix(cartan_matrix_of_type(fam, n), label=f"{fam}{n}")
    return from_cartan_matrix(spec)


def gl_root_datum(n: int) -> RootDatum:
    """GL(n): X^* = Z^n, roots e_i - e_j, positive for i < j."""
    if n < 1:
        raise RootDataError("GL(n) needs n >= 1")
    roots, coroots = [], []
    for i in range(n):
        for j in range(n):
            if i != j:
                v = tuple(int(k == i) - int(k == j) for k in range(n))
                roots.append(v)
                coroots.append(v)
    return make_root_datum(n, roots, coroots, label=f"GL{n}")


def datum_on_sublattice(basis: Sequence[Sequence[int]], roots: Sequence[Sequence[int]],
                        coroots: Sequence[Sequence[int]], label: str = "") -> RootDatum:
    """Root datum whose X^* is the lattice spanned by the rows of ``basis``.

    ``roots`` and ``coroots`` are written in ambient coordinates of Z^k with
    the standard pairing.  Positivity is lexicographic in the ambient
    coordinates, and the ambient basis is kept for display.
    """
    B = [list(r) for r in basis]
    Binv = la.inverse(B)
    new_roots, new_coroots = [], []
    for a, c in zip(roots, coroots):
        x = la.as_int_vector(la.vec_mat(a, Binv))
        y = la.as_int_vector(la.mat_vec(B, c))
        if x is None:
            raise RootDataError(f"root {tuple(a)} is not in the weight lattice")
        if y is None:
            raise RootDataError(f"coroot {tuple(c)} is not in the dual lattice")
        new_roots.append(x)
        new_coroots.append(y)
    amb = [tuple(r) for r in roots]
    order_key = {x: amb[i] for i, x in enumerate(new_roots)}
    return make_root_datum(len(B), new_roots, new_coroots,
                           positive_key=lambda i, R=new_roots: order_key[R[i]],
                           label=label, ambient=B)


def orthogonal_root_datum(family: str, m: int) -> RootDatum:
    """Type B_m or D_m in orthonormal coordinates of Z^m (D_1 is empty)."""
    roots, coroots = [], []
    e = lambda i: tuple(int(k == i) for k in range(m))  # noqa: E731
    for i in range(m):
        for j in range(i + 1, m):
            for si in (1, -1):
                for sj in (1, -1):
                    v = la.add(la.scale(si, e(i)), la.scale(sj, e(j)))
                    roots.append(v)
                    coroots.append(v)
        if family.upper() == "B":
            for s in (1, -1):
                roots.append(la.scale(s, e(i)))
                coroots.append(la.scale(2 * s, e(i)))
    if family.upper() not in ("B", "D"):
        raise RootDataError("orthogonal_root_datum takes B or D")
    # positivity via the regular functional (m, m-1, ..., 1)
    f = tuple(m - k for k in range(m))
    return make_root_datum(m, roots, coroots, positive_key=lambda i: (la.dot(roots[i], f),),
                           label=f"{family.upper()}{m}")


# ---------------------------------------------------------------------------
# Type classification of (possibly non-reduced) root systems

def _component_label(A: Sequence[Sequence[int]]) -> str:
    n = len(A)
    if n == 1:
        return "A1"
    prod = {(i, j): A[i][j] * A[j][i] for i in range(n) for j in range(n) if i < j and A[i][j]}
    deg = [sum(1 for j in range(n) if j != i and A[i][j]) for i in range(n)]
    if 3 in prod.values():
        return "G2"
    doubles = [e for e, v in prod.items() if v == 2]
    if not doubles:
        branch = [i for i in range(n) if deg[i] >= 3]
        if not branch:
            return f"A{n}"
        b = branch[0]
        arms = []
        for nb in (j for j in range(n) if j != b and A[b][j]):
            length, prev, cur = 1, b, nb
            while True:
                nxt = [j for j in range(n) if j not in (prev, cur) and A[cur][j]]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            arms.append(length)
        arms.sort()
        if arms[:2] == [1, 1]:
            return f"D{n}"
        return {(1, 2, 2): "E6", (1, 2, 3): "E7", (1, 2, 4): "E8"}[tuple(arms)]
    (i, j), = doubles
    if n == 2:
        return "B2"
    leaves = [k for k in range(n) if deg[k] == 1]
    if i not in leaves and j not in leaves:
        return "F4"
    leaf, nb = (i, j) if i in leaves else (j, i)
    # leaf short  <=>  <alpha_nb, alpha_leaf^vee> = -2
    return f"B{n}" if A[nb][leaf] == -2 else f"C{n}"


def canonical_label(label: str) -> str:
    fixes = {"B1": "A1", "C1": "A1", "C2": "B2", "D2": "A1^2", "D3": "A3", "A0": "", "D1": ""}
    return fixes.get(label, label)


def _format_components(labels: List[str]) -> str:
    parts: List[str] = []
    for lab in labels:
        lab = canonical_label(lab)
        if not lab:
            continue
        if "^" in lab:
            base, k = lab.split("^")
            parts.extend([base] * int(k))
        else:
            parts.append(lab)
    if not parts:
        return "∅"

    def sort_key(s):
        return (s.rstrip("0123456789"), int(s.lstrip("ABCDEFG") or 0))

    counts: Dict[str, int] = {}
    for p in parts:
        counts[p] = counts.get(p, 0) + 1
    out = []
    for p in sorted(counts, key=sort_key):
        out.append(p if counts[p] == 1 else f"{p}^{counts[p]}")
    return "x".join(out)


def cartan_label(A: Sequence[Sequence[int]]) -> str:
    """Isomorphism type of a finite Cartan matrix, e.g. ``"A1^2xB3"``."""
    n = len(A)
    seen, comps = set(), []
    for s in range(n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and A[i][j]:
                    seen.add(j)
                    stack.append(j)
        comp.sort()
        comps.append(_component_label([[A[i][j] for j in comp] for i in comp]))
    return _format_components(comps)


def root_system_type(roots: Sequence[Sequence], coroots: Sequence[Sequence]) -> str:
    """Type label of a root system given by explicit (root, coroot) vectors.

    Handles non-reduced systems: a component containing both ``b`` and
    ``2b`` is reported as ``BC_n``.
    """
    roots = [tuple(r) for r in roots]
    coroots = [tuple(c) for c in coroots]
    if not roots:
        return "∅"
    rootset = set(roots)
    pos = [i for i, r in enumerate(roots) if _lex_positive(r)]
    posset = {roots[i] for i in pos}
    half = lambda r: tuple(x / 2 if isinstance(x, Fraction) else Fraction(x, 2) for x in r)  # noqa: E731
    indivisible = [i for i in pos if tuple(half(roots[i])) not in rootset]
    simple = [i for i in indivisible
              if not any(la.sub(roots[i], roots[j]) in posset for j in pos if j != i)]
    simple.sort(key=lambda i: roots[i])
    n = len(simple)
    A = [[_pair(roots[i], coroots[j]) for j in simple] for i in simple]
    # connected components
    seen, labels = set(), []
    for s in range(n):
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and A[i][j]:
                    seen.add(j)
                    stack.append(j)
        comp.sort()
        lab = _component_label([[A[i][j] for j in comp] for i in comp])
        span = [roots[simple[i]] for i in comp]
        doubled = any(tuple(2 * x for x in roots[simple[i]]) in rootset for i in comp)
        if not doubled:
            # a divisible root anywhere in this component's span?
            for r in roots:
                if tuple(half(r)) in rootset and la.solve_combination(span, half(r)) is not None:
                    doubled = True
                    break
        labels.append(f"BC{len(comp)}" if doubled else lab)
    return _format_components(labels)


# ---------------------------------------------------------------------------
# Positive systems, Weyl elements, dimensions


@dataclass(frozen=True)
class PositiveSystem:
    datum: RootDatum
    positive: Tuple[int, ...]
    rho: RatVector
    two_rho: IntVector

    @classmethod
    def of(cls, rd: RootDatum) -> "PositiveSystem":
        two = [0] * rd.rank
        for i in rd.positive:
            two = [x + y for x, y in zip(two, rd.roots[i])]
        return cls(rd, rd.positive, tuple(Fraction(x, 2) for x in two), tuple(two))


def _as_pos(obj) -> PositiveSystem:
    return obj if isinstance(obj, PositiveSystem) else PositiveSystem.of(obj)


@dataclass(frozen=True)
class WeylElement:
    matrix: Tuple[IntVector, ...]
    word: Tuple[int, ...] = ()

    def act(self, x: Sequence) -> tuple:
        return la.mat_vec(self.matrix, x)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        m = la.freeze(la.mat_mul(self.matrix, other.matrix))
        return WeylElement(tuple(tuple(int(a) for a in row) for row in m), self.word + other.word)

    def inverse(self) -> "WeylElement":
        inv = la.inverse(self.matrix)
        return WeylElement(tuple(tuple(int(a) for a in row) for row in inv), tuple(reversed(self.word)))

    @property
    def length(self) -> int:
        return len(self.word)

    def is_identity(self) -> bool:
        return all(self.matrix[i][j] == int(i == j) for i in range(len(self.matrix)) for j in range(len(self.matrix)))


def identity_element(rank: int) -> WeylElement:
    return WeylElement(tuple(tuple(r) for r in la.identity(rank)), ())


def simple_reflection(rd: RootDatum, k: int) -> WeylElement:
    """Reflection in the ``k``-th simple root (word ``(k,)``)."""
    return WeylElement(rd.reflection_matrix(rd.simple_indices[k]), (k,))


def dominant_representative(pos, phi: Sequence) -> Tuple[RatVector, WeylElement]:
    """Dominant W-conjugate of ``phi`` and an element mapping ``phi`` to it."""
    pos = _as_pos(pos)
    rd = pos.datum
    x = tuple(la.F(a) for a in phi)
    w = identity_element(rd.rank)
    while True:
        for k, i in enumerate(rd.simple_indices):
            if _pair(x, rd.coroots[i]) < 0:
                x = rd.reflect(i, x)
                w = simple_reflection(rd, k) * w
                break
        else:
            return x, w


def is_dominant(pos, lam: Sequence) -> bool:
    pos = _as_pos(pos)
    rd = pos.datum
    return all(_pair(lam, rd.coroots[i]) >= 0 for i in rd.simple_indices)


def is_integral(pos, lam: Sequence) -> bool:
    rd = _as_pos(pos).datum
    return all(la.F(_pair(lam, c)).denominator == 1 for c in rd.coroots)


def weyl_dimension(pos, lam: Sequence) -> int:
    """Weyl dimension formula ``prod <lam+rho, a^v> / <rho, a^v>`` over positive coroots."""
    pos = _as_pos(pos)
    rd = pos.datum
    shifted = la.add(la.vec(lam), pos.rho)
    num = Fraction(1)
    for i in pos.positive:
        c = rd.coroots[i]
        top = _pair(shifted, c)
        if top <= 0:
            raise ValueError(f"lambda + rho is not strictly dominant: pairing {top} with coroot {c}")
        num *= top / _pair(pos.rho, c)
    if num.denominator != 1:
        raise ArithmeticError(f"Weyl dimension {num} is not an integer")
    return int(num)


def generate_weyl_group(pos, cap: int = DEFAULT_WEYL_CAP) -> List[WeylElement]:
    """All elements of W with reduced words, in breadth-first (length) order."""
    pos = _as_pos(pos)
    rd = pos.datum
    n = rd.rank
    # W acts freely on the orbit of a regular vector; use 2*rho plus a central part.
    probe = tuple(2 * x for x in pos.two_rho)
    ident = identity_element(n)
    seen = {probe: ident}
    order = [ident]
    queue = deque([(probe, ident)])
    sims = list(enumerate(rd.simple_indices))
    while queue:
        v, w = queue.popleft()
        for k, i in sims:
            nv = rd.reflect(i, v)
            if nv in seen:
                continue
            if len(seen) >= cap:
                raise OverflowError(f"Weyl group exceeds the cap of {cap} elements")
            # matrix of s_i w: reflect each column of w
            cols = la.transpose(w.matrix)
            ncols = [rd.reflect(i, col) for col in cols]
            m = tuple(tuple(int(a) for a in row) for row in la.transpose(ncols))
            nw = WeylElement(m, (k,) + w.word)
            seen[nv] = nw
            order.append(nw)
            queue.append((nv, nw))
    return order


def longest_element(pos) -> WeylElement:
    pos = _as_pos(pos)
    _, w = dominant_representative(pos, tuple(-x for x in pos.two_rho))
    return w


# ---------------------------------------------------------------------------
# Freudenthal multiplicities


def invariant_form(pos):
    """W-invariant symmetric form ``(x, y) = sum_{a>0} <x,a^v><y,a^v>`` on X^* (x) Q."""
    pos = _as_pos(pos)
    cos = pos.datum.positive_coroots

    def form(x, y):
        return sum((_pair(x, c) * _pair(y, c) for c in cos), 0)

    return form


def freudenthal_multiplicities(pos, lam: Sequence[int]) -> Dict[IntVector, int]:
    """Weight multiplicities of the irreducible module of highest weight ``lam``."""
    pos = _as_pos(pos)
    rd = pos.datum
    lam = tuple(int(x) for x in lam)
    if not is_dominant(pos, lam):
        raise ValueError(f"{lam} is not dominant")
    if not is_integral(pos, lam):
        raise ValueError(f"{lam} is not integral")
    n = rd.rank
    cos = rd.positive_coroots
    # Gram matrix of the invariant form; integral on integral weights
    Q = [[sum(c[i] * c[j] for c in cos) for j in range(n)] for i in range(n)]

    def form(x, y):
        return sum(x[i] * Q[i][j] * y[j] for i in range(n) if x[i] for j in range(n) if y[j])

    posroots = rd.positive_roots
    simples = rd.simple_roots
    norm_lam = form(lam, lam)
    # downward search by simple roots, pruned by the norm bound
    levels: List[List[IntVector]] = [[lam]]
    seen = {lam}
    while levels[-1]:
        nxt = []
        for mu in levels[-1]:
            for a in simples:
                nu = la.sub(mu, a)
                if nu not in seen and form(nu, nu) <= norm_lam:
                    seen.add(nu)
                    nxt.append(nu)
        levels.append(nxt)
    Qa = [tuple(sum(Q[i][j] * a[j] for j in range(n)) for i in range(n)) for a in posroots]
    Q2rho = [sum(Q[i][j] * pos.two_rho[j] for j in range(n)) for i in range(n)]

    def shifted_norm(x):  # |x + rho|^2 - |rho|^2
        return form(x, x) + sum(x[i] * Q2rho[i] for i in range(n))

    top = shifted_norm(lam)
    mult: Dict[IntVector, int] = {lam: 1}
    # tail[k][nu] = sum_{j >= 0} m(nu + j a_k) (nu + j a_k, a_k), accumulated down each a_k-string
    tail: List[Dict[IntVector, int]] = [dict() for _ in posroots]
    for k, qa in enumerate(Qa):
        tail[k][lam] = sum(x * y for x, y in zip(lam, qa))
    for level in levels[1:]:
        for mu in sorted(level):
            ups = [tuple(m + x for m, x in zip(mu, a)) for a in posroots]
            rhs = 2 * sum(tail[k].get(up, 0) for k, up in enumerate(ups))
            coef = top - shifted_norm(mu)
            if coef == 0:
                if rhs != 0:
                    raise ArithmeticError(f"Freudenthal recursion inconsistent at {mu}")
                m = 0
            else:
                m, r = divmod(rhs, coef)
                if r or m < 0:
                    raise ArithmeticError(f"non-integral multiplicity {Fraction(rhs, coef)} at {mu}")
            if m:
                mult[mu] = m
            for k, qa in enumerate(Qa):
                t = tail[k].get(ups[k], 0)
                if m:
                    t += m * sum(x * y for x, y in zip(mu, qa))
                if t:
                    tail[k][mu] = t
    return mult


def weyl_orbit(pos, lam: Sequence, cap: int = DEFAULT_WEYL_CAP) -> List[tuple]:
    """Orbit of ``lam`` under W by reflection closure (no group enumeration)."""
    rd = _as_pos(pos).datum
    start = tuple(lam)
    seen = {start}
    order = [start]
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for i in rd.simple_indices:
                u = rd.reflect(i, v)
                if u not in seen:
                    if len(seen) >= cap:
                        raise OverflowError("orbit exceeds cap")
                    seen.add(u)
                    order.append(u)
                    nxt.append(u)
        frontier = nxt
    return order


def weyl_group_order(pos) -> int:
    return len(generate_weyl_group(pos))


__all__ = [
    "RootDatum", "PositiveSystem", "WeylElement", "RootDataError",
    "build_root_system", "from_cartan_matrix", "gl_root_datum", "orthogonal_root_datum",
    "cartan_matrix_of_type", "check_finite_type", "cartan_label", "root_system_type",
    "canonical_label", "make_root_datum", "validate_root_datum",
    "weyl_dimension", "dominant_representative", "freudenthal_multiplicities",
    "generate_weyl_group", "longest_element", "weyl_orbit", "is_dominant", "is_integral",
    "identity_element", "simple_reflection", "invariant_form",
]
