"""Agreement suites between the signature formula and the brute-force oracles."""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

from . import rootdata as rdm
from .oracle import oracle_sig_equal_rank, oracle_sig_split
from .realform import builtin_group
from .restricted import highest_weight_spec
from .signature import compute_signature


@dataclass
class SuiteResult:
    name: str
    cases: List[Tuple[Tuple[int, ...], int, int]] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def disagreements(self):
        return [c for c in self.cases if c[1] != c[2]]

    @property
    def ok(self) -> bool:
        return bool(self.cases) and not self.disagreements


def dominant_weights(datum, cap: int, keep: Callable[[Tuple[int, ...]], bool] = lambda lam: True):
    """Dominant weights with Weyl dimension <= cap, for data whose dominant weights have nonnegative coordinates.

    Shells of growing maximal coordinate are scanned until one is empty;
    this is exhaustive because the dimension increases with each coordinate.
    """
    pos = rdm.PositiveSystem.of(datum)
    out = []
    b = 0
    while True:
        shell = []
        for lam in itertools.product(range(b + 1), repeat=datum.rank):
            if max(lam, default=0) != b or not rdm.is_dominant(pos, lam):
                continue
            if rdm.weyl_dimension(pos, lam) <= cap:
                shell.append(lam)
        if not shell:
            break
        out.extend(l for l in shell if keep(l))
        b += 1
    return sorted(out, key=lambda l: (rdm.weyl_dimension(pos, l), l))


def self_dual(datum, lam) -> bool:
    pos = rdm.PositiveSystem.of(datum)
    w0 = rdm.longest_element(pos)
    return tuple(-x for x in w0.act(lam)) == tuple(lam)


def split_suite(family: str, n: int, cap: int = 400, flip: bool = False) -> SuiteResult:
    """oracle_sig_split against compute_signature for every self-dual lambda with dim <= cap."""
    A = rdm.cartan_matrix_of_type(family, n)
    datum = rdm.from_cartan_matrix(A)
    rf = builtin_group(f"split({family}{n})")
    res = SuiteResult(f"split {family}{n}")
    t = time.perf_counter()
    for lam in dominant_weights(datum, cap, lambda lam: self_dual(datum, lam)):
        o = oracle_sig_split(A, lam, cap)
        f = _formula(rf, lam, flip and not res.cases)
        res.cases.append((tuple(lam), o, f))
    res.seconds = time.perf_counter() - t
    return res


def equal_rank_suite(label: str, cap: int = 400, flip: bool = False) -> SuiteResult:
    """oracle_sig_equal_rank against compute_signature for every dominant lambda with dim <= cap."""
    rf = builtin_group(label)
    res = SuiteResult(f"equal-rank {label}")
    t = time.perf_counter()
    for lam in dominant_weights(rf.datum, cap):
        o = oracle_sig_equal_rank(rf, lam, cap)
        f = _formula(rf, lam, flip and not res.cases)
        res.cases.append((tuple(lam), o, f))
    res.seconds = time.perf_counter() - t
    return res


def _formula(rf, lam, flip: bool) -> Optional[int]:
    r = compute_signature(rf, highest_weight_spec(rf, lam))
    if not flip:
        return r.sig
    # harness self-test: flip the sign of the last contribution
    total = sum(c.epsilon * c.dim_E for c in r.contributions)
    c = r.contributions[-1]
    total -= 2 * c.epsilon * c.dim_E
    if total % 2 ** r.r:
        return -1
    return abs(total) // 2 ** r.r


FAST = (("split", "A", 1), ("split", "A", 2))
FULL = FAST + (("split", "A", 3), ("split", "C", 2), ("equal", "Sp(4)", None), ("equal", "Sp(6)", None))


def run_suites(level: str = "fast", cap: Optional[int] = None, inject_fault: bool = False) -> List[SuiteResult]:
    """Run the fast (A1, A2; dimension <= 100) or full (dimension <= 400) plan."""
    plan: Sequence = FAST if level == "fast" else FULL
    cap = cap or (100 if level == "fast" else 400)
    out = []
    for k, (kind, a, b) in enumerate(plan):
        flip = inject_fault and k == 0
        if kind == "split":
            out.append(split_suite(a, b, cap, flip))
        else:
            out.append(equal_rank_suite(a, cap, flip))
    return out
