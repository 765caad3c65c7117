"""Restricted roots on the compact part of a maximally compact Cartan.

Every root ``alpha`` restricts to the compact torus; in the coordinates of
:class:`~hermsig.realform.RealForm` the restriction is the integer vector
``(<alpha, k_j>)_j``.  Its restricted coroot is a theta-fixed coweight,
written in the same basis ``k_j``:

* imaginary ``alpha``: ``alpha^vee``;
* complex with ``alpha + theta(alpha)`` not a root: ``alpha^vee + theta(alpha)^vee``;
* complex with ``alpha + theta(alpha)`` a root: ``2 (alpha^vee + theta(alpha)^vee)``.

With these choices pairings are plain dot products and every restricted
root pairs to 2 with its coroot.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from . import linalg as la
from . import rootdata as rdm
from .realform import (NONCOMPACT, HighestWeightSpec, RealForm, RealFormError,
                       restricted_coroot_vector)

IMAGINARY, COMPLEX_NONSUM, COMPLEX_SUM = "imaginary", "complex_nonsum", "complex_sum"


class RestrictionError(RuntimeError):
    """The restricted roots fail a root-datum axiom (bad theta or grading)."""


@dataclass(frozen=True)
class RestrictedRoot:
    value: Tuple[int, ...]
    coroot: Tuple[int, ...]
    case: str
    sources: Tuple[int, ...]
    noncompact: bool = False

    @property
    def is_imaginary(self) -> bool:
        return self.case == IMAGINARY

    @property
    def is_complex(self) -> bool:
        return self.case != IMAGINARY


def _lexsign(v) -> int:
    for a in v:
        if a:
            return 1 if a > 0 else -1
    return 0


@dataclass(frozen=True)
class RestrictedDatum:
    rf: RealForm
    roots: Tuple[RestrictedRoot, ...]
    positive: FrozenSet[int]
    simple: Tuple[int, ...]
    reduced: FrozenSet[int]
    K: FrozenSet[int]
    two_rho_cplx: Tuple[int, ...]
    two_rho_imag: Tuple[int, ...]
    two_rho_K: Tuple[int, ...]
    sing_imag: Tuple[int, ...]
    sing_cplx: Tuple[int, ...]
    sing_ncpt: Tuple[int, ...]
    positive_c: FrozenSet[int]  # indices of roots of G positive for the theta-stable system
    rho_G: Tuple[Fraction, ...]
    rho_K: Tuple[Fraction, ...]
    two_rho_res_vee: Tuple[int, ...]

    # -- lookups -----------------------------------------------------------
    @property
    def rank(self) -> int:
        return self.rf.tc_rank

    def index(self, value: Sequence) -> int:
        key = tuple(int(x) for x in value)
        for i, r in enumerate(self.roots):
            if r.value == key:
                return i
        raise KeyError(f"{key} is not a restricted root")

    def find(self, value: Sequence) -> Optional[int]:
        try:
            return self.index(value)
        except (KeyError, TypeError, ValueError):
            return None

    def values(self, idx: Sequence[int]) -> List[Tuple[int, ...]]:
        return [self.roots[i].value for i in idx]

    def coroots(self, idx: Sequence[int]) -> List[Tuple[int, ...]]:
        return [self.roots[i].coroot for i in idx]

    @property
    def cplx(self) -> List[int]:
        return [i for i, r in enumerate(self.roots) if r.is_complex]

    @property
    def imag(self) -> List[int]:
        return [i for i, r in enumerate(self.roots) if r.is_imaginary]

    @property
    def noncompact_imag(self) -> List[int]:
        return [i for i, r in enumerate(self.roots) if r.is_imaginary and r.noncompact]

    def positive_of(self, idx: Sequence[int]) -> List[int]:
        return [i for i in idx if i in self.positive]

    def pair(self, x: Sequence, i: int):
        return la.dot(x, self.roots[i].coroot)

    def reflect(self, i: int, x: Sequence) -> tuple:
        r = self.roots[i]
        k = la.dot(x, r.coroot)
        return tuple(a - k * b for a, b in zip(x, r.value))

    def reflection_matrix(self, i: int) -> Tuple[Tuple[int, ...], ...]:
        r = self.roots[i]
        n = self.rank
        return tuple(tuple(int(a == b) - r.value[a] * r.coroot[b] for b in range(n)) for a in range(n))

    def simple_of(self, idx: Sequence[int]) -> List[int]:
        """Simple roots of the subsystem ``idx`` for the induced positive system."""
        pos = [i for i in idx if i in self.positive]
        vals = {self.roots[i].value for i in pos}
        return [i for i in pos if not any(la.sub(self.roots[i].value, self.roots[j].value) in vals for j in pos)]

    def is_dominant(self, x: Sequence, idx: Optional[Sequence[int]] = None) -> bool:
        idx = self.simple if idx is None else self.simple_of(idx)
        return all(self.pair(x, i) >= 0 for i in idx)

    def dominant(self, x: Sequence, idx: Optional[Sequence[int]] = None) -> Tuple[tuple, Tuple[int, ...]]:
        """Dominant conjugate of ``x`` under the reflections of the subsystem ``idx``.

        Returns the vector and the list of restricted-root indices of the
        reflections applied (first applied first).
        """
        simple = self.simple if idx is None else self.simple_of(idx)
        x = tuple(x)
        word: List[int] = []
        while True:
            for i in simple:
                if self.pair(x, i) < 0:
                    x = self.reflect(i, x)
                    word.append(i)
                    break
            else:
                return x, tuple(word)


def _restricted_roots(rf: RealForm) -> List[RestrictedRoot]:
    rd = rf.datum
    groups: Dict[Tuple[int, ...], List[int]] = {}
    for i, a in enumerate(rd.roots):
        v = tuple(int(x) for x in rf.restrict_weight(a))
        groups.setdefault(v, []).append(i)
    out = []
    for v, src in groups.items():
        if all(x == 0 for x in v):
            raise RestrictionError("a root restricts to zero (real root present)")
        cases, coroots, grades = set(), set(), set()
        for i in src:
            j = rf.theta_index(i)
            if j == i:
                cases.add(IMAGINARY)
                grades.add(rf.grading[i] == NONCOMPACT)
            elif rd.is_root(la.add(rd.roots[i], rd.roots[j])):
                cases.add(COMPLEX_SUM)
            else:
                cases.add(COMPLEX_NONSUM)
            coroots.add(tuple(rf.tc_coweight_coords(restricted_coroot_vector(rf, i))))
        if len(cases) != 1:
            raise RestrictionError(f"restricted root {v} has sources of mixed type {sorted(cases)}")
        if len(coroots) != 1:
            raise RestrictionError(f"restricted root {v} has inconsistent coroots {sorted(coroots)}")
        if len(grades) > 1:
            raise RestrictionError(f"restricted root {v} has sources of mixed compactness")
        (case,), (co,) = cases, coroots
        if la.dot(v, co) != 2:
            raise RestrictionError(f"pairing of restricted root {v} with its coroot {co} is not 2")
        out.append(RestrictedRoot(v, co, case, tuple(sorted(src)), bool(grades and grades.pop())))
    out.sort(key=lambda r: r.value, reverse=True)
    return out


def restrict(rf: RealForm) -> RestrictedDatum:
    """Restricted root datum with its theta-stable, 2rho_K-dominant positive system."""
    rd = rf.datum
    roots = _restricted_roots(rf)
    vals = [r.value for r in roots]
    try:
        rdm.validate_root_datum(rf.tc_rank, vals, [r.coroot for r in roots])
    except rdm.RootDataError as exc:
        raise RestrictionError(f"restricted roots violate a root-datum axiom: {exc}") from None
    n = len(roots)
    K = frozenset(i for i, r in enumerate(roots) if r.is_complex or not r.noncompact)

    # provisional (lexicographic) system, used only to fix R_K^+ and 2rho_K
    K_pos = [i for i in K if _lexsign(roots[i].value) > 0]
    two_rho_K = [0] * rf.tc_rank
    for i in K_pos:
        two_rho_K = [x + y for x, y in zip(two_rho_K, roots[i].value)]
    two_rho_K = tuple(two_rho_K)

    def key(i):
        r = roots[i]
        return (la.dot(two_rho_K, r.coroot),) + tuple(r.coroot)

    positive = frozenset(i for i in range(n) if _lexsign(key(i)) > 0)
    if len(positive) * 2 != n:
        raise RestrictionError("positive system does not split the roots evenly")
    assert set(K_pos) == (positive & K), "the K-positive system moved"
    valset = {r.value for r in roots}
    posvals = {roots[i].value for i in positive}
    for i in positive:
        for j in positive:
            s = la.add(roots[i].value, roots[j].value)
            if s in valset and s not in posvals:
                raise RestrictionError("positive restricted roots are not closed under addition")
    simple = tuple(sorted(
        (i for i in positive if not any(la.sub(roots[i].value, roots[j].value) in posvals for j in positive)),
        key=lambda i: roots[i].value, reverse=True))
    reduced = frozenset(i for i in range(n) if tuple(2 * x for x in roots[i].value) not in valset)

    def total(idx):
        t = [0] * rf.tc_rank
        for i in idx:
            t = [x + y for x, y in zip(t, roots[i].value)]
        return tuple(t)

    two_rho_cplx = total(i for i in positive if roots[i].is_complex)
    two_rho_imag = total(i for i in positive if roots[i].is_imaginary)
    two_rho_K2 = total(i for i in positive & K)
    assert two_rho_K2 == two_rho_K

    def singular(t):
        return tuple(i for i in range(n) if la.dot(t, roots[i].coroot) == 0)

    sing_imag = singular(two_rho_cplx)
    sing_cplx = singular(two_rho_imag)
    sing_ncpt = singular(two_rho_K)
    for i in sing_imag:
        if not roots[i].is_imaginary:
            raise RestrictionError(f"singular imaginary set contains the complex root {roots[i].value}")
    for i in sing_cplx:
        if not roots[i].is_complex:
            raise RestrictionError(f"singular complex set contains the imaginary root {roots[i].value}")
    for i in sing_ncpt:
        if not (roots[i].is_imaginary and roots[i].noncompact):
            raise RestrictionError(f"singular noncompact set contains {roots[i].value}")
        for j in sing_ncpt:
            if j != i and roots[j].value != tuple(-x for x in roots[i].value):
                if la.dot(roots[i].value, roots[j].coroot) != 0:
                    raise RestrictionError("singular noncompact roots are not orthogonal")

    # pull back positivity to the roots of G
    pos_c = set()
    for i in positive:
        pos_c.update(roots[i].sources)
    pos_c = frozenset(pos_c)
    assert len(pos_c) * 2 == len(rd.roots)
    rho_G = [Fraction(0)] * rf.tc_rank
    for i in pos_c:
        rho_G = [x + Fraction(y, 2) for x, y in zip(rho_G, rf.restrict_weight(rd.roots[i]))]
    rho_K = tuple(Fraction(x, 2) for x in two_rho_K)
    two_rho_res_vee = [0] * rf.tc_rank
    for i in positive & reduced:
        two_rho_res_vee = [x + y for x, y in zip(two_rho_res_vee, roots[i].coroot)]
    return RestrictedDatum(rf, tuple(roots), positive, simple, reduced, K,
                           two_rho_cplx, two_rho_imag, two_rho_K, sing_imag, sing_cplx, sing_ncpt,
                           pos_c, tuple(rho_G), rho_K, tuple(two_rho_res_vee))


# ---------------------------------------------------------------------------
# Types


def subsystem_type(rd: RestrictedDatum, idx: Sequence[int]) -> str:
    return rdm.root_system_type(rd.values(idx), rd.coroots(idx))


def restricted_type(rd: RestrictedDatum) -> Dict[str, str]:
    """Isomorphism types of the restricted system and its distinguished subsystems."""
    every = range(len(rd.roots))
    return {
        "res": subsystem_type(rd, every),
        "res_red": subsystem_type(rd, sorted(rd.reduced)),
        "cplx": subsystem_type(rd, rd.cplx),
        "imag": subsystem_type(rd, rd.imag),
        "K": subsystem_type(rd, sorted(rd.K)),
        "sing_cplx": subsystem_type(rd, rd.sing_cplx),
        "sing_imag": subsystem_type(rd, rd.sing_imag),
        "sing_ncpt": subsystem_type(rd, rd.sing_ncpt),
    }


# ---------------------------------------------------------------------------
# Weights


def lift_weight(rf: RealForm, lambda_c: Sequence, nu: Optional[Sequence] = None) -> Tuple[Fraction, ...]:
    """The rational weight of X^* with given compact and split parts."""
    n = rf.datum.rank
    nu = list(nu) if nu is not None else [0] * rf.split_rank
    A = [list(k) for k in rf.tc_basis] + [list(a) for a in rf.ac_basis]
    x = la.solve(A, list(lambda_c) + nu)
    if x is None or len(A) != n:
        raise RealFormError("could not lift the weight")
    return x


def highest_weight_spec(rf: RealForm, weight: Sequence, rd: Optional[RestrictedDatum] = None,
                        nu_im: Optional[Sequence] = None) -> HighestWeightSpec:
    """``(lambda_c, nu_c)`` of the irreducible representation with extremal weight ``weight``.

    The weight is first made dominant for the theta-stable positive system,
    then split into its compact and split parts.
    """
    rd = rd or restrict(rf)
    G = rf.datum
    pos = sorted(rd.positive_c)
    posvals = {G.roots[i] for i in pos}
    simple = [i for i in pos if not any(la.sub(G.roots[i], G.roots[j]) in posvals for j in pos)]
    x = tuple(weight)
    while True:
        for i in simple:
            if la.dot(x, G.coroots[i]) < 0:
                x = G.reflect(i, x)
                break
        else:
            break
    lc = rf.restrict_weight(x)
    if any(la.F(a).denominator != 1 for a in lc):
        raise RealFormError("weight does not restrict to an integral character of the compact torus")
    return HighestWeightSpec(tuple(int(a) for a in lc), rf.split_part(x), nu_im)


def restricted_height(rd: RestrictedDatum, phi: Sequence) -> int:
    """Pairing of the dominant conjugate of ``phi`` with 2rho_res^vee (reduced coroots)."""
    x, _ = rd.dominant(phi)
    h = la.dot(x, rd.two_rho_res_vee)
    assert la.F(h).denominator == 1
    return int(h)


def restricted_weight_test(rd: RestrictedDatum, lambda_c: Sequence, phi: Sequence):
    """Whether ``lambda_c - phi`` is a nonnegative integer sum of positive restricted roots.

    Returns ``(ok, coefficients)`` with coefficients on the simple restricted
    roots (in the order of ``rd.simple``); ``coefficients`` is None when the
    difference is not in the root lattice.
    """
    diff = la.sub(lambda_c, phi)
    c = la.solve_combination(rd.values(rd.simple), diff)
    if c is None or any(x.denominator != 1 for x in c):
        return False, None
    coeffs = tuple(int(x) for x in c)
    ok = all(x >= 0 for x in coeffs)
    if ok and rd.is_dominant(phi) and rd.is_dominant(lambda_c):
        h1, h2 = restricted_height(rd, phi), restricted_height(rd, lambda_c)
        assert h1 <= h2 and ((h1 == h2) == (tuple(phi) == tuple(lambda_c)))
    return ok, coeffs


def restricted_extremal_weights(rd: RestrictedDatum, lambda_c: Sequence, cap: int = rdm.DEFAULT_WEYL_CAP):
    """The orbit of ``lambda_c`` under the restricted Weyl group, sorted."""
    start = tuple(int(a) for a in lambda_c)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for i in rd.simple:
                u = tuple(int(a) for a in rd.reflect(i, v))
                if u not in seen:
                    if len(seen) >= cap:
                        raise OverflowError("orbit exceeds cap")
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    h = restricted_height(rd, start)
    assert all(restricted_height(rd, v) == h for v in seen)
    return sorted(seen, reverse=True)


# ---------------------------------------------------------------------------
# Diagram folding


def _diagram(nodes: Sequence[Tuple[Sequence, Sequence, str, Tuple[int, ...]]]) -> dict:
    """Diagram from ``(value, coroot, kind, orbit)`` vertices; the bond between
    two vertices is read off from the Cartan integers."""
    vertices = []
    for vid, (val, _, kind, orbit) in enumerate(nodes):
        vertices.append({"id": vid, "orbit": list(orbit), "kind": kind,
                         "filled": kind == "imaginary", "value": [str(x) for x in val]})
    edges = []
    for a in range(len(nodes)):
        for b in range(a + 1, len(nodes)):
            p = la.dot(nodes[a][0], nodes[b][1])
            q = la.dot(nodes[b][0], nodes[a][1])
            if p == 0:
                continue
            bond = max(abs(p), abs(q))
            # arrow points at the shorter root: <long, short^vee> has the larger size
            arrow = None
            if abs(p) > abs(q):
                arrow = b
            elif abs(q) > abs(p):
                arrow = a
            edges.append({"from": a, "to": b, "bond": int(bond), "arrow_to": arrow})
    return {"vertices": vertices, "edges": edges}


def _theta_simple(rf: RealForm, rd: RestrictedDatum) -> List[int]:
    G = rf.datum
    pos = sorted(rd.positive_c)
    posvals = {G.roots[i] for i in pos}
    simple = [i for i in pos if not any(la.sub(G.roots[i], G.roots[j]) in posvals for j in pos)]
    return _chain_order(G, simple)


def _chain_order(G, simple: List[int]) -> List[int]:
    """Order simple roots by walking the diagram from a leaf, so paths read naturally."""
    if not simple:
        return []
    adj = {i: [j for j in simple if j != i and la.dot(G.roots[i], G.coroots[j]) != 0] for i in simple}
    out: List[int] = []
    remaining = sorted(simple, key=lambda i: G.roots[i], reverse=True)
    while remaining:
        comp_start = min((i for i in remaining if len(adj[i]) <= 1), default=remaining[0],
                         key=remaining.index)
        stack = [comp_start]
        while stack:
            i = stack.pop()
            if i in out:
                continue
            out.append(i)
            remaining.remove(i)
            stack.extend(sorted((j for j in adj[i] if j not in out), key=lambda j: len(adj[j]), reverse=True))
    return out


def fold_diagram(rf: RealForm, rd: Optional[RestrictedDatum] = None) -> dict:
    """Dynkin diagrams of R, R_red, the restricted roots and the reduced restricted roots.

    Vertices of the restricted diagrams are theta-orbits of simple roots of G
    (for the theta-stable positive system), numbered ``1..l`` along the
    diagram of G.  A complex orbit whose two roots are adjacent is tagged
    ``complex_self_joined``; in the reduced diagrams it is replaced by the
    imaginary root ``alpha + theta(alpha)``.
    """
    rd = rd or restrict(rf)
    G = rf.datum
    simple = _theta_simple(rf, rd)
    name = {i: k + 1 for k, i in enumerate(simple)}
    theta_perm = {name[i]: name[rf.theta_index(i)] for i in simple}
    adjacent = lambda i, j: la.dot(G.roots[i], G.coroots[j]) != 0
    orbits, seen = [], set()
    for i in simple:
        if i in seen:
            continue
        j = rf.theta_index(i)
        orb = (i,) if j == i else tuple(sorted((i, j), key=simple.index))
        seen.update(orb)
        orbits.append(orb)
    R_nodes = [(G.roots[i], G.coroots[i], "imaginary" if rf.is_imaginary(i) else "complex", (name[i],))
               for i in simple]
    red_nodes, res_nodes, res_red_nodes = [], [], []
    for orb in orbits:
        names = tuple(name[k] for k in orb)
        r = rd.index(rf.restrict_weight(G.roots[orb[0]]))
        rr = rd.roots[r]
        if len(orb) == 1:
            kind = "imaginary"
        elif rr.case == COMPLEX_SUM:
            kind = "complex_self_joined"
        else:
            kind = "complex"
        res_nodes.append((rr.value, rr.coroot, kind, names))
        if kind == "complex_self_joined":
            a, b = orb
            s = la.add(G.roots[a], G.roots[b])
            k = G.index(s)
            red_nodes.append((G.roots[k], G.coroots[k], "imaginary", names))
            r2 = rd.roots[rd.index(tuple(2 * x for x in rr.value))]
            res_red_nodes.append((r2.value, r2.coroot, "imaginary", names))
        else:
            for k in orb:
                red_nodes.append((G.roots[k], G.coroots[k], "imaginary" if len(orb) == 1 else "complex",
                                  (name[k],)))
            res_red_nodes.append((rr.value, rr.coroot, kind, names))
    return {"R": _diagram(R_nodes), "R_red": _diagram(red_nodes),
            "res": _diagram(res_nodes), "res_red": _diagram(res_red_nodes),
            "theta": {str(k): v for k, v in sorted(theta_perm.items())},
            "adjacent_pairs": sorted([name[k] for k in orb] for orb in orbits
                                     if len(orb) == 2 and adjacent(*orb))}


def render_diagram(d: dict) -> str:
    """One-line text picture: ``*`` imaginary, ``o`` complex, ``@`` self-joined."""
    sym = {"imaginary": "*", "complex": "o", "complex_self_joined": "@"}
    parts = []
    for v in d["vertices"]:
        parts.append(f"{sym[v['kind']]}{{{','.join(str(x) for x in v['orbit'])}}}")
    lines = []
    for e in d["edges"]:
        bond = {1: "-", 2: "=", 3: "≡"}.get(e["bond"], "?")
        arrow = ""
        if e["arrow_to"] == e["to"]:
            arrow = ">"
        elif e["arrow_to"] == e["from"]:
            arrow = "<"
        lines.append(f"{parts[e['from']]} {bond}{arrow}{bond} {parts[e['to']]}" if arrow else
                     f"{parts[e['from']]} {bond}{bond} {parts[e['to']]}")
    if not lines:
        return "  ".join(parts) if parts else "(empty)"
    return "; ".join(lines)
