"""Signatures of invariant Hermitian forms on finite-dimensional representations.

The main entry point is :func:`compute_signature`.  For a representation
with compact highest weight ``lambda_c`` it sums, over the coset
representatives ``W^1``, the signed dimensions of the K-types with highest
weight ``w(lambda_c + rho_G) - rho_K``, and divides by ``2^r``.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg as la
from . import rootdata as rdm
from .realform import (EXISTS, NO_FORM, HighestWeightSpec, RealForm,
                       builtin_group, gl_split_to_fundamental, is_self_dual_gl)
from .restricted import RestrictedDatum, lift_weight, restrict
from .rootdata import PositiveSystem, WeylElement
from .weylres import (ComponentGroup, RestrictedWeylGroup, build_W_theta,
                      component_group, enumerate_W1)

G_INVARIANT, G_SHARP_ONLY, NO_FORM_LEVEL = "G_invariant", "G_sharp_only", "no_form"


class SignatureError(ArithmeticError):
    """An identity that must hold exactly failed (indicates a bug or bad input)."""


@dataclass
class Context:
    """Everything about a real form that does not depend on the weight."""

    rf: RealForm
    rd: RestrictedDatum
    W: RestrictedWeylGroup
    W1: List[WeylElement]
    cg: ComponentGroup
    posK: List[int]
    pos_system: PositiveSystem
    r: int
    ell: int


_CACHE: Dict[int, Context] = {}


def prepare(rf: RealForm) -> Context:
    if id(rf) in _CACHE and _CACHE[id(rf)].rf is rf:
        return _CACHE[id(rf)]
    rd = restrict(rf)
    W = build_W_theta(rd)
    W1 = enumerate_W1(rd, W)
    cg = component_group(rf, rd)
    G = rf.datum
    posK = [i for i in rd.positive if i in rd.K]
    pos_c = tuple(sorted(rd.positive_c))
    two = [0] * G.rank
    for i in pos_c:
        two = [x + y for x, y in zip(two, G.roots[i])]
    pos_system = PositiveSystem(G, pos_c, tuple(Fraction(x, 2) for x in two), tuple(two))
    # r by counting root types
    n_cplx = sum(1 for i in pos_c if rf.is_complex(i))
    n_ncpt = sum(1 for i in pos_c if rf.is_imaginary(i) and rf.is_noncompact(i))
    if n_cplx % 2:
        raise SignatureError("positive complex roots do not come in theta-pairs")
    r = n_cplx // 2 + n_ncpt
    # r from dimensions: dim s = dim g - dim k
    ell = rf.split_rank
    n_k_spaces = len(G.roots) // 2 - n_cplx // 2 - n_ncpt  # positive K root spaces
    dim_g = G.rank + len(G.roots)
    dim_k = rf.tc_rank + 2 * n_k_spaces
    dim_s = dim_g - dim_k
    if (dim_s - ell) != 2 * r:
        raise SignatureError(f"dim s - l = {dim_s - ell} but 2r = {2 * r}")
    if 2 * n_k_spaces != 2 * len(posK) and not _merged(rd):
        raise SignatureError("K root count disagrees with the restricted K-system")
    ctx = Context(rf, rd, W, W1, cg, posK, pos_system, r, ell)
    _CACHE[id(rf)] = ctx
    return ctx


def _merged(rd: RestrictedDatum) -> bool:
    return any(len(r.sources) > (1 if r.is_imaginary else 2) for r in rd.roots)


def _ctx(obj) -> Context:
    return obj if isinstance(obj, Context) else prepare(obj)


# ---------------------------------------------------------------------------
# epsilon and invariance


def epsilon(rd, W, lambda_c: Sequence, w) -> int:
    """Sign of the form on the extremal restricted weight space ``w lambda_c``.

    ``w`` may be any element of W^theta (a matrix or a :class:`WeylElement`);
    the sign only depends on the coset ``W_K0 w``.
    """
    key = w.matrix if isinstance(w, WeylElement) else w
    phi = tuple(la.mat_vec(key, lambda_c))
    phi, _ = rd.dominant(phi, sorted(rd.K))
    simple = rd.simple_of(rd.sing_imag)
    diff = la.sub(lambda_c, phi)
    c = la.solve_combination(rd.values(simple), diff)
    if c is None or any(x.denominator != 1 or x < 0 for x in c):
        raise SignatureError(
            f"lambda_c - w lambda_c = {diff} is not a nonnegative integer sum of singular imaginary simple roots")
    sign = 1
    for coef, i in zip(c, simple):
        if rd.roots[i].noncompact and int(coef) % 2:
            sign = -sign
    return sign


@dataclass(frozen=True)
class Invariance:
    level: str
    literal: bool          # epsilon(x) = 1 for all x in the component group
    consistent: bool       # epsilon(xw) epsilon(w) independent of w

    def as_dict(self):
        return asdict(self)


def invariance_level(rf, rd=None, W=None, lambda_c: Sequence = (), cg: Optional[ComponentGroup] = None,
                     W1=None) -> Invariance:
    """Whether the form is invariant under the full group or only its identity-component part.

    ``G_invariant`` iff ``epsilon(xw) = epsilon(w)`` for every ``x`` in the
    component group and every ``w`` in W^1.
    """
    ctx = None
    if rd is None or W is None:
        ctx = _ctx(rf)
        rd, W = ctx.rd, ctx.W
    if cg is None:
        cg = ctx.cg if ctx else component_group(rd.rf, rd)
    if W1 is None:
        W1 = ctx.W1 if ctx else enumerate_W1(rd, W)
    from .weylres import _mul

    ok, literal, consistent = True, True, True
    for x in cg.elements:
        ratios = set()
        for w in W1:
            e_w = epsilon(rd, W, lambda_c, w)
            e_xw = epsilon(rd, W, lambda_c, _mul(x, w.matrix))
            ratios.add(e_w * e_xw)
            if e_xw != e_w:
                ok = False
        if len(ratios) > 1:
            consistent = False
        if epsilon(rd, W, lambda_c, x) != 1:
            literal = False
    return Invariance(G_INVARIANT if ok else G_SHARP_ONLY, literal, consistent)


# ---------------------------------------------------------------------------
# The signature


@dataclass(frozen=True)
class Contribution:
    word: Tuple[int, ...]
    epsilon: int
    dim_E: int
    weight: Tuple[Fraction, ...]


@dataclass
class SignatureResult:
    group: str
    lambda_c: Tuple[int, ...]
    dim: int
    sig: Optional[int]
    p: Optional[int]
    q: Optional[int]
    r: int
    ell: int
    contributions: List[Contribution] = field(default_factory=list)
    invariance: str = G_INVARIANT
    invariance_literal: Optional[bool] = None
    ambiguity_flag: bool = False
    existence: str = EXISTS
    p0: int = 0
    q0: int = 0

    @property
    def pair(self) -> Optional[Tuple[int, int]]:
        if self.p is None:
            return None
        return (self.p, self.q)

    def to_json(self, lam=None) -> dict:
        return {
            "group": self.group,
            "lambda": list(lam) if lam is not None else list(self.lambda_c),
            "lambda_c": list(self.lambda_c),
            "dim": self.dim,
            "p": self.p,
            "q": self.q,
            "sig": self.sig,
            "r": self.r,
            "contributions": [
                {"w": list(c.word), "epsilon": c.epsilon, "dim_E": c.dim_E,
                 "weight": [str(x) for x in c.weight]} for c in self.contributions],
            "invariance": self.invariance,
            "invariance_literal": self.invariance_literal,
            "ambiguity_flag": self.ambiguity_flag,
        }


def k_dimension(rd: RestrictedDatum, posK: Sequence[int], v: Sequence) -> int:
    """Weyl dimension over R^+_K of the K-type with ``rho_K``-shifted weight ``v``."""
    d = Fraction(1)
    for i in posK:
        co = rd.roots[i].coroot
        top = la.dot(v, co)
        if top <= 0:
            raise SignatureError(f"w(lambda_c + rho_G) = {tuple(v)} is not K-regular dominant at {rd.roots[i].value}")
        d *= Fraction(top) / la.dot(rd.rho_K, co)
    if d.denominator != 1:
        raise SignatureError(f"K-type dimension {d} is not an integer")
    return int(d)


def compute_signature(rf, gamma: HighestWeightSpec, check_invariance: bool = True) -> SignatureResult:
    """Signature ``{p, q}`` and ``Sig = |p - q|`` of the invariant form on F(gamma)."""
    ctx = _ctx(rf)
    rf, rd = ctx.rf, ctx.rd
    lam = tuple(int(x) for x in gamma.lambda_c)
    if len(lam) != rd.rank:
        raise ValueError(f"lambda_c has {len(lam)} entries; the compact torus has rank {rd.rank}")
    if not rd.is_dominant(lam):
        raise ValueError(f"lambda_c = {lam} is not dominant for the restricted positive system")
    nu = list(gamma.nu_re) if gamma.nu_re else [0] * rf.split_rank
    weight = lift_weight(rf, lam, nu)
    bad = [rf.datum.coroots[i] for i in ctx.pos_system.positive
           if la.F(la.dot(weight, rf.datum.coroots[i])).denominator != 1]
    if bad:
        raise ValueError(f"lambda_c = {lam} does not come from an integral weight "
                         f"(pairs non-integrally with the coroot {bad[0]})")
    dim = rdm.weyl_dimension(ctx.pos_system, weight)
    flag = ctx.cg.order > 1
    if not gamma.nu_is_imaginary:
        return SignatureResult(rf.label, lam, dim, None, None, None, ctx.r, ctx.ell,
                               invariance=NO_FORM_LEVEL, ambiguity_flag=flag, existence=NO_FORM)
    # a purely imaginary nu is a unitary twist: compute at nu = 0
    dim = rdm.weyl_dimension(ctx.pos_system, lift_weight(rf, lam))
    shifted = la.add(la.vec(lam), rd.rho_G)
    contributions = []
    p0 = q0 = 0
    for w in ctx.W1:
        v = tuple(la.mat_vec(w.matrix, shifted))
        dE = k_dimension(rd, ctx.posK, v)
        e = epsilon(rd, ctx.W, lam, w)
        contributions.append(Contribution(w.word, e, dE, v))
        if e > 0:
            p0 += dE
        else:
            q0 += dE
    num = abs(p0 - q0)
    if num % (2 ** ctx.r):
        raise SignatureError(f"|p0 - q0| = {num} is not divisible by 2^r = {2 ** ctx.r}")
    sig = num // 2 ** ctx.r
    if (dim - sig) % 2 or sig > dim:
        raise SignatureError(f"Sig = {sig} is incompatible with dim = {dim}")
    if ctx.cg.order == 1 or not check_invariance:
        inv = Invariance(G_INVARIANT, True, True) if ctx.cg.order == 1 else None
    else:
        inv = invariance_level(ctx, ctx.rd, ctx.W, lam, ctx.cg, ctx.W1)
    return SignatureResult(
        rf.label, lam, dim, sig, (dim + sig) // 2, (dim - sig) // 2, ctx.r, ctx.ell, contributions,
        invariance=inv.level if inv else G_INVARIANT,
        invariance_literal=inv.literal if inv else None,
        ambiguity_flag=flag,
        existence=EXISTS if ctx.cg.order == 1 else "see_invariance_level",
        p0=p0, q0=q0)


# ---------------------------------------------------------------------------
# GL(n, R)


_GL: Dict[int, RealForm] = {}


def gl_form(n: int) -> RealForm:
    if n not in _GL:
        _GL[n] = builtin_group(f"GL({n})")
    return _GL[n]


def gl_signature(n: int, lam: Sequence[int]) -> SignatureResult:
    """:func:`compute_signature` for GL(n,R) with ``lam`` in split coordinates."""
    rf = gl_form(n)
    return compute_signature(rf, gl_split_to_fundamental(n, lam))


def gl_dimension(lam: Sequence[int]) -> int:
    n = len(lam)
    return rdm.weyl_dimension(rdm.gl_root_datum(n), tuple(lam))


def gl_closed_form(n: int, lam: Sequence[int]) -> int:
    """Sig of the self-dual GL(n,R) representation ``lam`` by the spin-module formula.

    With ``n = 2m + e`` and ``mu = (lam_1..lam_m)``, this is the dimension of
    the D_m (e = 0) or B_m (e = 1) representation of highest weight
    ``mu + (1/2,...,1/2)`` divided by ``2^(m - 1 + e)``.
    """
    lam = [int(x) for x in lam]
    if len(lam) != n:
        raise ValueError(f"expected {n} entries")
    if any(lam[i] < lam[i + 1] for i in range(n - 1)):
        raise ValueError("lambda must be weakly decreasing")
    if not is_self_dual_gl(lam):
        raise ValueError("no_form: lambda is not self-dual")
    m, e = divmod(n, 2)
    if m == 0:
        return 1
    datum = rdm.orthogonal_root_datum("B" if e else "D", m)
    hw = tuple(Fraction(2 * lam[j] + 1, 2) for j in range(m))
    d = rdm.weyl_dimension(datum, hw)
    den = 2 ** (m - 1 + e)
    if d % den:
        raise SignatureError(f"spin-module dimension {d} not divisible by {den}")
    return d // den


def ratio_identity(n: int, lam: Sequence[int]) -> Tuple[Fraction, Fraction]:
    """``(dim, Sig^2 * prod_i (2 lam_i + n - 2i + 1) / (n - 2i + 1))`` over i = 1..m."""
    lam = [int(x) for x in lam]
    m = n // 2
    lhs = Fraction(gl_dimension(lam))
    prod = Fraction(1)
    for i in range(1, m + 1):
        prod *= Fraction(2 * lam[i - 1] + n - 2 * i + 1, n - 2 * i + 1)
    rhs = gl_closed_form(n, lam) ** 2 * prod
    return lhs, rhs


def degree_bound(n: int) -> int:
    m, e = divmod(n, 2)
    return m * m + m * (e - 1)


def finite_differences(values: Sequence) -> List[List]:
    table = [list(values)]
    while len(table[-1]) > 1:
        row = table[-1]
        table.append([row[i + 1] - row[i] for i in range(len(row) - 1)])
    return table


@dataclass
class DegreeProbe:
    n: int
    lambda0: Tuple[int, ...]
    values: List[int]
    differences: List[List[int]]
    degree: int

    @property
    def vanishes(self) -> bool:
        """The (degree+1)-th differences are identically zero."""
        d = self.degree + 1
        return d < len(self.differences) and all(x == 0 for x in self.differences[d])

    @property
    def sharp(self) -> bool:
        """The degree-th differences are not all zero."""
        return any(x != 0 for x in self.differences[self.degree])


def sig_degree_probe(n: int, lambda0: Sequence[int], kmax: Optional[int] = None,
                     method: str = "general") -> DegreeProbe:
    """Sig(k lambda0) for k = 1..kmax with its finite-difference table."""
    lam0 = [int(x) for x in lambda0]
    if not is_self_dual_gl(lam0):
        raise ValueError("lambda0 must be self-dual")
    if any(lam0[i] <= lam0[i + 1] for i in range(n // 2)):
        raise ValueError("lambda0 must be strictly regular on its first half")
    deg = degree_bound(n)
    kmax = kmax or deg + 3
    vals = []
    for k in range(1, kmax + 1):
        lam = [k * x for x in lam0]
        if method == "closed":
            vals.append(gl_closed_form(n, lam))
        else:
            vals.append(gl_signature(n, lam).sig)
    return DegreeProbe(n, tuple(lam0), vals, finite_differences(vals), deg)


def self_dual_weights(n: int, bound: int) -> List[Tuple[int, ...]]:
    """All self-dual weakly decreasing integer vectors with entries in [-bound, bound]."""
    m, e = divmod(n, 2)
    out = []

    def rec(prefix):
        if len(prefix) == m:
            mid = [0] if e else []
            out.append(tuple(prefix + mid + [-x for x in reversed(prefix)]))
            return
        top = prefix[-1] if prefix else bound
        for x in range(top, -1, -1):
            rec(prefix + [x])

    rec([])
    return sorted(out, reverse=True)
