"""Restricted-root tables computed from scratch, with embedded expected rows.

Each row records the isomorphism types of the restricted system and its
complex, imaginary and singular subsystems for a simple root system with a
nontrivial diagram involution, together with the orders of the two
semidirect factorizations of the restricted Weyl group.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Dict, List, Tuple

from .realform import builtin_group, quasisplit_group
from .restricted import fold_diagram, render_diagram, restrict, restricted_type
from .rootdata import _format_components
from .weylres import build_W_theta, semidirect_decompositions

COLUMNS = ("res", "cplx", "imag", "sing_cplx", "sing_imag")


def _weyl_order(family: str, n: int) -> int:
    if n <= 0:
        return 1
    if family == "A":
        return factorial(n + 1)
    if family in "BC":
        return 2 ** n * factorial(n)
    if family == "D":
        return 2 ** (n - 1) * factorial(n) if n >= 2 else (2 if n == 1 else 1)
    if family == "F":
        return 1152
    raise ValueError(family)


def _types(*parts) -> str:
    labels: List[str] = []
    for fam, n, times in parts:
        if n > 0:
            labels.extend([f"{fam}{n}"] * times)
    return _format_components(labels)


@dataclass(frozen=True)
class Row:
    family: str
    rank: int
    res: str
    cplx: str
    imag: str
    sing_cplx: str
    sing_imag: str
    cplx_by_sing_imag: Tuple[int, int]
    sing_cplx_by_imag: Tuple[int, int]

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def as_dict(self) -> Dict[str, object]:
        return {"type": self.name, **{c: getattr(self, c) for c in COLUMNS},
                "cplx_by_sing_imag": list(self.cplx_by_sing_imag),
                "sing_cplx_by_imag": list(self.sing_cplx_by_imag)}


def expected_row(family: str, rank: int) -> Row:
    """The expected row, written in terms of the parameter n of each family."""
    if family == "A" and rank % 2 == 1:
        n = (rank + 1) // 2
        return Row("A", rank, _types(("C", n, 1)), _types(("D", n, 1)), _types(("A", 1, n)),
                   _types(("A", n - 1, 1)), _types(("A", 1, 1)),
                   (_weyl_order("D", n), 2), (factorial(n), 2 ** n))
    if family == "A":
        n = rank // 2
        res = f"BC{n}"
        return Row("A", rank, res, _types(("B", n, 1)), _types(("A", 1, n)),
                   _types(("A", n - 1, 1)), "∅",
                   (_weyl_order("B", n), 1), (factorial(n), 2 ** n))
    if family == "D":
        n = rank - 1
        return Row("D", rank, _types(("B", n, 1)), _types(("A", 1, n)), _types(("D", n, 1)),
                   _types(("A", 1, 1)), _types(("A", n - 1, 1)),
                   (2 ** n, factorial(n)), (2, _weyl_order("D", n)))
    if family == "E" and rank == 6:
        return Row("E", 6, "F4", "D4", "D4", "A2", "A2",
                   (_weyl_order("D", 4), 6), (6, _weyl_order("D", 4)))
    raise ValueError(f"no table row for {family}{rank}")


def table_groups() -> List[Tuple[str, int]]:
    rows = [("A", 2 * n - 1) for n in range(2, 5)]
    rows += [("A", 2 * n) for n in range(1, 4)]
    rows += [("D", n + 1) for n in range(2, 5)]
    rows.append(("E", 6))
    return rows


def computed_row(family: str, rank: int) -> Row:
    rf = quasisplit_group(family, rank)
    rd = restrict(rf)
    t = restricted_type(rd)
    W = build_W_theta(rd)
    f1, f2 = semidirect_decompositions(W)
    return Row(family, rank, t["res"], t["cplx"], t["imag"], t["sing_cplx"], t["sing_imag"],
               (f1.normal_order, f1.complement_order), (f2.complement_order, f2.normal_order))


def table3() -> List[Tuple[Row, Row, List[str]]]:
    """``(computed, expected, mismatching columns)`` for every row."""
    out = []
    for fam, n in table_groups():
        got, want = computed_row(fam, n), expected_row(fam, n)
        bad = [c for c in COLUMNS + ("cplx_by_sing_imag", "sing_cplx_by_imag")
               if getattr(got, c) != getattr(want, c)]
        out.append((got, want, bad))
    return out


# ---------------------------------------------------------------------------
# Folded diagrams


def diagram_shape(d: dict) -> Tuple:
    """Isomorphism-invariant summary: vertex kinds and edges labelled by end kinds, bond and arrow."""
    kinds = [v["kind"] for v in d["vertices"]]
    edges = []
    for e in d["edges"]:
        a, b = kinds[e["from"]], kinds[e["to"]]
        head = None if e["arrow_to"] is None else kinds[e["arrow_to"]]
        edges.append((tuple(sorted((a, b))), e["bond"], head))
    degrees = sorted(sum(1 for e in d["edges"] if v["id"] in (e["from"], e["to"])) for v in d["vertices"])
    return tuple(sorted(kinds)), tuple(sorted(edges, key=repr)), tuple(degrees)


C, I, S = "complex", "imaginary", "complex_self_joined"

# Expected folds: the four diagrams for SL(5,R) and the two for split E6.
EXPECTED_FOLDS = {
    "SL(5)": {
        "R": ((C, C, C, C), [((C, C), 1, None)] * 3, (1, 1, 2, 2)),
        "R_red": ((C, C, I), [((C, I), 1, None)] * 2, (1, 1, 2)),
        "res": ((C, S), [((C, S), 2, S)], (1, 1)),
        "res_red": ((C, I), [((C, I), 2, C)], (1, 1)),
    },
    "split(E6)": {
        "R": ((C, C, C, C, I, I), [((C, C), 1, None)] * 2 + [((C, I), 1, None)] * 2 + [((I, I), 1, None)],
              (1, 1, 1, 2, 2, 3)),
        "res": ((C, C, I, I), [((C, C), 1, None), ((C, I), 2, C), ((I, I), 1, None)], (1, 1, 2, 2)),
    },
}


def _normalize(entry) -> Tuple:
    kinds, edges, degrees = entry
    return tuple(sorted(kinds)), tuple(sorted(edges, key=repr)), tuple(degrees)


def fold_checks() -> List[Tuple[str, str, bool, str]]:
    """``(group, diagram, ok, rendering)`` for each expected fold."""
    out = []
    for label, diagrams in EXPECTED_FOLDS.items():
        d = fold_diagram(builtin_group(label))
        for key, want in diagrams.items():
            got = diagram_shape(d[key])
            out.append((label, key, got == _normalize(want), render_diagram(d[key])))
    return out


def theta_on_diagram(label: str) -> Dict[str, int]:
    return fold_diagram(builtin_group(label))["theta"]
