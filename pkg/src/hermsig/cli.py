"""Command-line interface.

    hermsig sig --builtin GL --n 3 --lambda 1,0,-1
    hermsig sig --spec group.json --lambda 2
    hermsig tables
    hermsig sweep --builtin GL --n 4 --sweep=-3:3 --self-dual --format csv
    hermsig verify --verify fast

Weights for the built-in GL and SL groups are entered in split coordinates
(a weakly decreasing integer vector ``lambda_1 >= ... >= lambda_n``).
Other built-in groups take a weight in the coordinates of their character
lattice, and custom groups (``--spec``) take ``lambda_c`` directly in the
coordinates of the compact torus.

Exit codes: 0 ok, 1 usage, 2 validation, 3 verification failure, 4 internal.
"""
from __future__ import annotations

import argparse
import csv
import itertools
import json
import sys
from typing import List, Optional, Sequence

from .oracle import OracleError
from .realform import (GroupLabel, HighestWeightSpec, RealForm, RealFormError, builtin_group,
                       from_json, gl_split_to_fundamental, is_self_dual_gl, parse_group_label)
from .restricted import RestrictionError, highest_weight_spec
from .rootdata import RootDataError
from .signature import (SignatureError, SignatureResult, compute_signature, prepare, ratio_identity,
                        sig_degree_probe)

EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, EXIT_VERIFY, EXIT_INTERNAL = 0, 1, 2, 3, 4

SWEEP_SCHEMA = "hermsig-sweep/1"
SWEEP_COLUMNS = ("lambda", "dim", "p", "q", "sig", "r", "sig_squared", "p_plus_q",
                 "bound_ok", "ratio_ok", "invariance")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# group and weight ingestion


class Group:
    """A real form together with the convention used to read weights."""

    def __init__(self, rf: RealForm, label: Optional[GroupLabel], convention: str):
        self.rf = rf
        self.label = label
        self.convention = convention  # "gl", "sl", "lattice" or "compact"

    @property
    def name(self) -> str:
        return self.rf.label

    def spec(self, lam: Sequence[int]) -> HighestWeightSpec:
        if self.convention == "gl":
            return gl_split_to_fundamental(self.label.params[0], lam)
        if self.convention == "sl":
            n = self.label.params[0]
            _check_len(lam, n)
            if any(lam[i] < lam[i + 1] for i in range(n - 1)):
                raise ValueError(f"{tuple(lam)} is not weakly decreasing")
            return highest_weight_spec(self.rf, [lam[i] - lam[i + 1] for i in range(n - 1)])
        if self.convention == "compact":
            _check_len(lam, self.rf.tc_rank)
            return HighestWeightSpec(tuple(lam), (0,) * self.rf.split_rank)
        _check_len(lam, self.rf.datum.rank)
        return highest_weight_spec(self.rf, lam)

    @property
    def width(self) -> int:
        if self.convention in ("gl", "sl"):
            return self.label.params[0]
        if self.convention == "compact":
            return self.rf.tc_rank
        return self.rf.datum.rank


def _check_len(lam, n):
    if len(lam) != n:
        raise ValueError(f"lambda has {len(lam)} entries; expected {n}")


def load_group(builtin: Optional[str], n: Optional[int], spec_path: Optional[str]) -> Group:
    if bool(builtin) == bool(spec_path):
        raise UsageError("give exactly one of --builtin and --spec")
    if builtin:
        label = parse_group_label(builtin, n)
        conv = {"GL": "gl", "SL": "sl"}.get(label.family, "lattice")
        return Group(builtin_group(label), label, conv)
    try:
        with open(spec_path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ValueError(f"{spec_path}: {exc.strerror}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{spec_path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(obj, dict):
        raise ValueError(f"{spec_path}: top level must be a JSON object")
    if "builtin" in obj:
        return load_group(str(obj["builtin"]), obj.get("n"), None)
    body = obj.get("custom", obj)
    try:
        rf = from_json(body)
    except (RealFormError, RootDataError, ValueError, TypeError) as exc:
        raise ValueError(f"{spec_path}: {exc}") from None
    return Group(rf, None, "compact")


def parse_lambda(text: str) -> List[int]:
    text = text.strip().strip("()[]")
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"--lambda expects comma-separated integers, got {text!r}") from None


def parse_ranges(text: str, width: int) -> List[range]:
    parts = text.split(",")
    if len(parts) == 1:
        parts = parts * width
    if len(parts) != width:
        raise UsageError(f"--sweep has {len(parts)} ranges; expected 1 or {width}")
    out = []
    for p in parts:
        try:
            lo, hi = p.split(":")
            out.append(range(int(lo), int(hi) + 1))
        except ValueError:
            raise UsageError(f"bad range {p!r}; expected lo:hi") from None
    return out


# ---------------------------------------------------------------------------
# rendering


def _fmt(x) -> str:
    return str(x)


def render_text(res: SignatureResult, lam, spec: HighestWeightSpec) -> str:
    lines = [f"group: {res.group}", f"lambda: {tuple(lam)}", f"lambda_c: {res.lambda_c}"]
    if res.sig is None:
        lines.append(f"dim: {res.dim}")
        lines.append("no invariant Hermitian form: nu must be purely imaginary, "
                     f"but its real part is {tuple(_fmt(x) for x in spec.nu_re)}")
        return "\n".join(lines) + "\n"
    lines += [
        f"dim: {res.dim}",
        f"{{p, q}}: {{{res.p}, {res.q}}}",
        f"Sig: {res.sig}",
        f"r: {res.r}",
        f"p0 - q0: {res.p0 - res.q0}",
        f"invariance: {res.invariance}",
    ]
    if res.ambiguity_flag:
        lines.append(f"  (component group nontrivial; literal reading: {res.invariance_literal})")
    lines.append("contributions:")
    lines.append(f"  {'w':<16}{'eps':>4}{'dim E_w':>10}  weight")
    for c in res.contributions:
        w = "".join(f"s{i}" for i in c.word) or "1"
        lines.append(f"  {w:<16}{c.epsilon:>+4d}{c.dim_E:>10}  ({', '.join(_fmt(x) for x in c.weight)})")
    return "\n".join(lines) + "\n"


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# commands


def cmd_sig(args, out) -> int:
    g = load_group(args.builtin, args.n, args.spec)
    if args.lam is None:
        raise UsageError("sig needs --lambda")
    lam = parse_lambda(args.lam)
    spec = g.spec(lam)
    res = compute_signature(g.rf, spec)
    if args.format == "json":
        obj = res.to_json(lam)
        if res.sig is None:
            obj["no_form_reason"] = "real part of nu is nonzero"
        out.write(_json(obj))
    elif args.format == "csv":
        _write_rows(out, [_row(g, lam, res)])
    else:
        out.write(render_text(res, lam, spec))
    return EXIT_OK


def cmd_tables(args, out) -> int:
    from .restricted import fold_diagram, render_diagram
    from .tables import COLUMNS, fold_checks, table3

    rows = table3()
    folds = fold_checks()
    bad = any(b for _, _, b in rows) or not all(ok for _, _, ok, _ in folds)
    if args.format == "json":
        out.write(_json({
            "restricted_root_systems": [dict(got.as_dict(), mismatches=b) for got, _, b in rows],
            "folds": [{"group": g, "diagram": k, "ok": ok, "picture": pic} for g, k, ok, pic in folds],
        }))
    else:
        head = ("R",) + COLUMNS + ("cplx|sing_imag", "sing_cplx|imag", "status")
        table = [head]
        for got, want, b in rows:
            table.append((got.name,) + tuple(getattr(got, c) for c in COLUMNS) + (
                "x".join(map(str, got.cplx_by_sing_imag)), "x".join(map(str, got.sing_cplx_by_imag)),
                "ok" if not b else "MISMATCH " + ",".join(b)))
        widths = [max(len(str(r[i])) for r in table) for i in range(len(head))]
        for r in table:
            out.write("  ".join(str(x).ljust(w) for x, w in zip(r, widths)).rstrip() + "\n")
        out.write("\nfolded diagrams (* imaginary, o complex, @ complex joined to its theta-image)\n")
        for g, k, ok, pic in folds:
            out.write(f"  {g:<10} {k:<8} {'ok' if ok else 'MISMATCH':<9} {pic}\n")
    return EXIT_VERIFY if bad else EXIT_OK


def _row(g: Group, lam, res: SignatureResult) -> dict:
    row = {"lambda": " ".join(str(x) for x in lam), "dim": res.dim, "p": res.p, "q": res.q,
           "sig": res.sig, "r": res.r, "sig_squared": None, "p_plus_q": None,
           "bound_ok": None, "ratio_ok": None, "invariance": res.invariance}
    if res.sig is not None:
        row["sig_squared"] = (res.p - res.q) ** 2
        row["p_plus_q"] = res.p + res.q
        row["bound_ok"] = row["sig_squared"] <= row["p_plus_q"]
        if g.convention == "gl" and is_self_dual_gl(lam):
            lhs, rhs = ratio_identity(len(lam), lam)
            row["ratio_ok"] = lhs == rhs
    return row


def _write_rows(out, rows):
    w = csv.writer(out, lineterminator="\n")
    w.writerow(SWEEP_COLUMNS)
    for r in rows:
        w.writerow(["" if r[c] is None else (str(r[c]).lower() if isinstance(r[c], bool) else r[c])
                    for c in SWEEP_COLUMNS])


def _enumerate(g: Group, ranges: List[range], self_dual: bool, cap: int):
    total = 1
    for r in ranges:
        total *= len(r)
    if total > cap:
        raise ValueError(f"sweep enumerates {total} candidates, over the cap {cap}")
    rf, rd = g.rf, prepare(g.rf).rd
    for lam in itertools.product(*ranges):
        lam = list(lam)
        if g.convention in ("gl", "sl"):
            if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
                continue
            if self_dual and not is_self_dual_gl(lam):
                continue
        elif g.convention == "compact":
            if not rd.is_dominant(lam):
                continue
        else:
            from .rootdata import PositiveSystem, is_dominant
            if not is_dominant(PositiveSystem.of(rf.datum), lam):
                continue
        try:
            spec = g.spec(lam)
            res = compute_signature(rf, spec)
        except ValueError:
            continue
        if self_dual and res.sig is None:
            continue
        yield lam, res


def cmd_sweep(args, out) -> int:
    if args.schema:
        out.write(f"schema: {SWEEP_SCHEMA}\n")
        out.write("columns: " + ",".join(SWEEP_COLUMNS) + "\n")
        return EXIT_OK
    g = load_group(args.builtin, args.n, args.spec)
    if not args.sweep:
        raise UsageError("sweep needs --sweep lo:hi[,lo:hi...]")
    ranges = parse_ranges(args.sweep, g.width)
    rows = [_row(g, lam, res) for lam, res in _enumerate(g, ranges, args.self_dual, args.cap)]
    probe = None
    if args.probe:
        if g.convention != "gl":
            raise UsageError("--probe is available for GL only")
        lam0 = parse_lambda(args.probe)
        probe = sig_degree_probe(len(lam0), lam0)
    if args.format == "json":
        obj = {"schema": SWEEP_SCHEMA, "group": g.name, "rows": rows}
        if probe:
            obj["probe"] = {"lambda0": list(probe.lambda0), "values": probe.values,
                            "degree": probe.degree, "vanishes": probe.vanishes, "sharp": probe.sharp}
        out.write(_json(obj))
    else:
        _write_rows(out, rows)
        if probe:
            out.write(f"# probe lambda0={' '.join(map(str, probe.lambda0))} values={' '.join(map(str, probe.values))} "
                      f"degree={probe.degree} vanishes={str(probe.vanishes).lower()} "
                      f"sharp={str(probe.sharp).lower()}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    from .checks import run_suites

    level = args.verify or "fast"
    results = run_suites(level, args.cap if args.cap_given else None, inject_fault=args.inject_fault)
    out.write(f"{'suite':<22}{'cases':>7}{'agree':>7}{'seconds':>10}  status\n")
    for r in results:
        agree = len(r.cases) - len(r.disagreements)
        out.write(f"{r.name:<22}{len(r.cases):>7}{agree:>7}{r.seconds:>10.2f}  {'PASS' if r.ok else 'FAIL'}\n")
        for lam, o, f in r.disagreements[:5]:
            out.write(f"    lambda={lam}: oracle {o}, formula {f}\n")
    return EXIT_OK if all(r.ok for r in results) else EXIT_VERIFY


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hermsig", description="Signatures of invariant Hermitian forms on "
                                            "finite-dimensional representations of real reductive groups.")
    p.add_argument("--verify", choices=("fast", "full"), help="run the oracle agreement suites")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def group_flags(q):
        q.add_argument("--builtin", help="built-in group, e.g. GL, 'GL(4)', 'Sp(4)', 'PSO(4,4)', 'split(E6)'")
        q.add_argument("--n", type=int, help="size parameter when --builtin is a bare family name")
        q.add_argument("--spec", help="JSON group specification file")

    q = sub.add_parser("sig", help="signature of one representation")
    group_flags(q)
    q.add_argument("--lambda", dest="lam", help="highest weight, comma separated")
    q.add_argument("--format", choices=("text", "json", "csv"), default="text")

    q = sub.add_parser("tables", help="restricted root tables and folded diagrams")
    q.add_argument("--format", choices=("text", "json"), default="text")

    q = sub.add_parser("sweep", help="signatures over a box of weights")
    group_flags(q)
    q.add_argument("--sweep", help="lo:hi for every coordinate, or one lo:hi per coordinate")
    q.add_argument("--self-dual", action="store_true", help="keep only weights carrying a form")
    q.add_argument("--format", choices=("csv", "json"), default="csv")
    q.add_argument("--cap", type=int, default=100000, help="maximum number of candidate weights")
    q.add_argument("--probe", help="GL only: append the degree probe along k*lambda0")
    q.add_argument("--schema", action="store_true", help="print the CSV schema and exit")

    q = sub.add_parser("verify", help="oracle agreement suites")
    q.add_argument("--verify", "--level", dest="verify", choices=("fast", "full"), default="fast")
    q.add_argument("--cap", type=int, default=None, help="dimension cap for the suites")
    q.add_argument("--inject-fault", action="store_true", help="flip one sign to test the harness")
    return p


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        if args.verify:
            args.command, args.cap, args.inject_fault = "verify", None, False
        else:
            parser.print_usage(sys.stderr)
            return EXIT_USAGE
    if args.command == "verify":
        args.cap_given = args.cap is not None
    handlers = {"sig": cmd_sig, "tables": cmd_tables, "sweep": cmd_sweep, "verify": cmd_verify}
    try:
        return handlers[args.command](args, out)
    except UsageError as exc:
        print(f"hermsig: usage: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SignatureError, OracleError, RestrictionError, AssertionError) as exc:
        print(f"hermsig: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, RealFormError, RootDataError, OverflowError) as exc:
        print(f"hermsig: invalid input: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
