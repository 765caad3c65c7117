"""The restricted Weyl group W^theta, its reflection subgroups and cosets.

Elements are integer matrices acting on compact-torus coordinates (see
:mod:`hermsig.restricted`), wrapped as :class:`~hermsig.rootdata.WeylElement`
with words in the simple restricted reflections.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from . import linalg as la
from .realform import RealForm
from .restricted import (COMPLEX_NONSUM, COMPLEX_SUM, IMAGINARY, RestrictedDatum,
                         restrict)
from .rootdata import DEFAULT_WEYL_CAP, WeylElement

Key = Tuple[Tuple[int, ...], ...]


class WeylGroupError(RuntimeError):
    """A structural identity of the restricted Weyl group failed."""


def _key(m) -> Key:
    return tuple(tuple(int(a) for a in row) for row in m)


def _mul(a: Key, b: Key) -> Key:
    return _key(la.mat_mul(a, b))


def _inv(a: Key) -> Key:
    return _key(la.inverse(a))


def _identity(n: int) -> Key:
    return _key(la.identity(n))


def generate_group(gens: Sequence[Key], n: int, cap: int = DEFAULT_WEYL_CAP) -> Dict[Key, Tuple[int, ...]]:
    """Closure of a set of integer matrices, mapping each element to a shortest word."""
    e = _identity(n)
    words = {e: ()}
    queue = deque([e])
    while queue:
        w = queue.popleft()
        for k, g in enumerate(gens):
            v = _mul(g, w)
            if v not in words:
                if len(words) >= cap:
                    raise OverflowError(f"group exceeds the cap of {cap} elements")
                words[v] = (k,) + words[w]
                queue.append(v)
    return words


@dataclass
class RestrictedWeylGroup:
    rd: RestrictedDatum
    words: Dict[Key, Tuple[int, ...]]
    subgroups: Dict[str, FrozenSet[Key]] = field(default_factory=dict)
    reflection_dictionary: Dict[int, Tuple[str, Tuple[int, ...]]] = field(default_factory=dict)

    @property
    def order(self) -> int:
        return len(self.words)

    @property
    def elements(self) -> List[WeylElement]:
        return [WeylElement(k, w) for k, w in sorted(self.words.items(), key=lambda kw: (len(kw[1]), kw[1]))]

    def element(self, key: Key) -> WeylElement:
        return WeylElement(key, self.words[key])

    def subgroup(self, name: str) -> FrozenSet[Key]:
        return self.subgroups[name]

    def act(self, key: Key, x: Sequence) -> tuple:
        return tuple(la.mat_vec(key, x))

    @property
    def identity(self) -> Key:
        return _identity(self.rd.rank)


def reflection_subgroup(rd: RestrictedDatum, idx: Sequence[int], cap: int = DEFAULT_WEYL_CAP) -> FrozenSet[Key]:
    gens = sorted({rd.reflection_matrix(i) for i in idx})
    return frozenset(generate_group(gens, rd.rank, cap))


def _reflection_dictionary(rd: RestrictedDatum) -> Dict[int, Tuple[str, Tuple[int, ...]]]:
    """Realize each simple restricted reflection by an element of W commuting with theta."""
    rf = rd.rf
    G = rf.datum
    out = {}
    for i in rd.simple:
        r = rd.roots[i]
        a = r.sources[0]
        if r.case == IMAGINARY:
            kind, refl = "s_alpha", (a,)
        elif r.case == COMPLEX_NONSUM:
            kind, refl = "s_alpha s_theta(alpha)", (a, rf.theta_index(a))
        else:
            kind, refl = "s_(alpha+theta(alpha))", (G.index(la.add(G.roots[a], G.roots[rf.theta_index(a)])),)
        M = _identity(G.rank)
        for j in refl:
            M = _mul(G.reflection_matrix(j), M)
        if _mul(M, rf.theta) != _mul(rf.theta, M):
            raise WeylGroupError(f"lift of the reflection in {r.value} does not commute with theta")
        for e in la.identity(G.rank):
            lhs = rf.restrict_weight(la.mat_vec(M, e))
            rhs = rd.reflect(i, rf.restrict_weight(e))
            if tuple(lhs) != tuple(rhs):
                raise WeylGroupError(f"lift of the reflection in {r.value} restricts incorrectly")
        out[i] = (kind, refl)
    return out


def build_W_theta(rd, cap: int = DEFAULT_WEYL_CAP) -> RestrictedWeylGroup:
    """W^theta as the reflection group of the restricted roots, with subgroup registries."""
    if isinstance(rd, RealForm):
        rd = restrict(rd)
    gens = [rd.reflection_matrix(i) for i in rd.simple]
    words = generate_group(gens, rd.rank, cap)
    W = RestrictedWeylGroup(rd, words)
    every = set(words)
    named = {
        "cplx": rd.cplx,
        "imag": rd.imag,
        "sing_imag": rd.sing_imag,
        "sing_cplx": rd.sing_cplx,
        "sing_ncpt": rd.sing_ncpt,
        "K0": sorted(rd.K),
        "res_red": sorted(rd.reduced),
    }
    for name, idx in named.items():
        sub = reflection_subgroup(rd, idx, cap)
        if not sub <= every:
            raise WeylGroupError(f"subgroup {name} is not inside W^theta")
        W.subgroups[name] = sub
    W.subgroups["all"] = frozenset(words)
    if W.subgroups["res_red"] != W.subgroups["all"]:
        raise WeylGroupError("the reduced restricted roots generate a smaller Weyl group")
    W.reflection_dictionary = _reflection_dictionary(rd)
    return W


def _is_normal(W: RestrictedWeylGroup, sub: FrozenSet[Key], sub_gens: Sequence[Key]) -> bool:
    for g in (W.rd.reflection_matrix(i) for i in W.rd.simple):
        for h in sub_gens:
            if _mul(_mul(g, h), g) not in sub:  # simple reflections are involutions
                return False
    return True


@dataclass(frozen=True)
class Factorization:
    normal: str
    complement: str
    normal_order: int
    complement_order: int
    normal_type: str
    complement_type: str


def semidirect_decompositions(W: RestrictedWeylGroup) -> Tuple[Factorization, Factorization]:
    """``W_cplx x| W_sing_imag`` and ``W_sing_cplx |x W_imag``, verified."""
    from .restricted import restricted_type

    rd = W.rd
    types = restricted_type(rd)
    out = []
    for normal, comp in (("cplx", "sing_imag"), ("imag", "sing_cplx")):
        N, C = W.subgroup(normal), W.subgroup(comp)
        if len(N) * len(C) != W.order:
            raise WeylGroupError(f"|W_{normal}| * |W_{comp}| = {len(N) * len(C)} != |W| = {W.order}")
        if N & C != {W.identity}:
            raise WeylGroupError(f"W_{normal} and W_{comp} intersect nontrivially")
        idx = rd.cplx if normal == "cplx" else rd.imag
        if not _is_normal(W, N, [rd.reflection_matrix(i) for i in idx]):
            raise WeylGroupError(f"W_{normal} is not normal")
        out.append(Factorization(normal, comp, len(N), len(C), types[normal], types[comp]))
    return out[0], out[1]


def enumerate_W1(rd: RestrictedDatum, W: RestrictedWeylGroup) -> List[WeylElement]:
    """Coset representatives ``{w : w R^+_res contains R^+_K}``, shortest first."""
    posK = [rd.roots[i].value for i in rd.positive if i in rd.K]
    posvals = {rd.roots[i].value for i in rd.positive}
    W1 = []
    for key, word in W.words.items():
        inv = _inv(key)
        if all(tuple(la.mat_vec(inv, g)) in posvals for g in posK):
            W1.append(WeylElement(key, word))
    W1.sort(key=lambda w: (len(w.word), w.word))
    K0 = W.subgroup("K0")
    if len(K0) * len(W1) != W.order:
        raise WeylGroupError(f"|W_K0| * |W^1| = {len(K0) * len(W1)} != |W| = {W.order}")
    sing = W.subgroup("sing_imag")
    if not all(w.matrix in sing for w in W1):
        raise WeylGroupError("W^1 is not contained in W_sing_imag")
    # refined description inside W_sing_imag
    pos_sing = {rd.roots[i].value for i in rd.sing_imag if i in rd.positive}
    pos_sing_cpt = [rd.roots[i].value for i in rd.sing_imag if i in rd.positive and not rd.roots[i].noncompact]
    refined = set()
    for key in sing:
        inv = _inv(key)
        if all(tuple(la.mat_vec(inv, g)) in pos_sing for g in pos_sing_cpt):
            refined.add(key)
    if refined != {w.matrix for w in W1}:
        raise WeylGroupError("W^1 differs from its description inside W_sing_imag")
    return W1


def coset_partition_ok(W: RestrictedWeylGroup, W1: Sequence[WeylElement]) -> bool:
    """The cosets ``W_K0 w`` (w in W^1) are disjoint and cover W^theta."""
    K0 = W.subgroup("K0")
    covered = set()
    for w in W1:
        coset = {_mul(k, w.matrix) for k in K0}
        if coset & covered:
            return False
        covered |= coset
    return covered == set(W.words)


# ---------------------------------------------------------------------------
# Singular noncompact roots and the component group


@dataclass(frozen=True)
class SingularNcptBasis:
    roots: Tuple[int, ...]           # restricted-root indices (positive)
    values: Tuple[Tuple[int, ...], ...]
    coroots: Tuple[Tuple[int, ...], ...]  # coroots in X_* coordinates of G
    ambient_rank: int = 0

    def H(self, B: Sequence[int]) -> Tuple[int, ...]:
        h = [0] * self.ambient_rank
        for j in B:
            h = [x + y for x, y in zip(h, self.coroots[j])]
        return tuple(h)


def singular_ncpt_basis(rd: RestrictedDatum) -> SingularNcptBasis:
    G = rd.rf.datum
    idx = tuple(i for i in rd.sing_ncpt if i in rd.positive)
    cor = []
    for i in idx:
        (src,) = rd.roots[i].sources
        cor.append(G.coroots[src])
    for a in range(len(idx)):
        for b in range(len(idx)):
            if a != b and la.dot(rd.roots[idx[a]].value, rd.roots[idx[b]].coroot) != 0:
                raise WeylGroupError("singular noncompact roots are not orthogonal")
    return SingularNcptBasis(idx, tuple(rd.roots[i].value for i in idx), tuple(cor), G.rank)


@dataclass(frozen=True)
class ComponentGroup:
    subsets: Tuple[Tuple[int, ...], ...]
    elements: Tuple[Key, ...]
    basis: SingularNcptBasis

    @property
    def order(self) -> int:
        return len(self.subsets)

    @property
    def rank(self) -> int:
        o, r = self.order, 0
        while o > 1:
            o //= 2
            r += 1
        return r

    def describe(self) -> str:
        if self.order == 1:
            return "trivial"
        if self.order == 2:
            return "Z/2"
        if self.order == 4:
            return "(Z/2)^2 (Klein four-group)"
        return f"(Z/2)^{self.rank}"


def singular_ncpt_in_K(rf: RealForm, rd: RestrictedDatum, basis: Optional[SingularNcptBasis] = None):
    """Subsets ``B`` with ``H_B`` in ``(1+theta) X_*`` and the matching ``s_B``."""
    basis = basis or singular_ncpt_basis(rd)
    n = rf.datum.rank
    M = [[int(i == j) + rf.theta[j][i] for j in range(n)] for i in range(n)]  # 1 + theta on X_*
    r = len(basis.roots)
    subsets, elements = [], []
    for size in range(r + 1):
        for B in combinations(range(r), size):
            if la.integer_solve(M, basis.H(B)) is not None:
                s = _identity(rd.rank)
                for j in B:
                    s = _mul(rd.reflection_matrix(basis.roots[j]), s)
                subsets.append(B)
                elements.append(s)
    found = set(subsets)
    for B1 in subsets:
        for B2 in subsets:
            sym = tuple(sorted(set(B1) ^ set(B2)))
            if sym not in found:
                raise WeylGroupError("the admissible subsets are not closed under symmetric difference")
    return ComponentGroup(tuple(subsets), tuple(elements), basis)


def component_group(rf: RealForm, rd: Optional[RestrictedDatum] = None) -> ComponentGroup:
    """The elementary abelian 2-group ``W^sing_ncpt(K)``."""
    rd = rd or restrict(rf)
    return singular_ncpt_in_K(rf, rd)
