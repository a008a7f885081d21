"""Command-line front end.

Exit codes: 0 success, 1 a verification suite failed, 2 usage error.
The default output format can be set with ``EXTSPRINGER_FORMAT``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from . import inversions as inv
from . import poincare as pc
from . import tableaux as tb
from . import toric
from . import verify
from .partitions import ParseError, Partition, divides

FORMATS = ("table", "json", "csv", "latex")
FORMAT_ENV = "EXTSPRINGER_FORMAT"

SUBCOMMAND_DOCS = {
    "rst list": "all row-strict tableaux of a shape with their inversion counts and maximal divisors",
    "tableau info": "I/J/K sets, blocks, maximal divisor, Springer inversions and pairs, w_sigma^-1, toric frame",
    "tableau quotient": "quotient tableau sigma/d obtained by merging size-d blocks",
    "poincare springer": "sum over row-strict tableaux of t^|sigma|",
    "poincare extended": "sum over row-strict tableaux of d_sigma t^|sigma|, checked against the totient formula",
    "poincare isotypic": "chi_i component t^D P(Sp_{lam/d}) with d = n/gcd(n,i), checked cell by cell",
    "poincare equivariant": "all isotypic components at once",
    "poincare lusztig": "stalk of the Lusztig sheaf for chi_i at x_lam, t^(N+D) P(Sp_{lam/d})",
    "cells": "extended cells (sigma, r) with 0 <= r < d_sigma and their dimensions",
    "toric dstar": "gcd of [n] minus J",
    "toric phi": "component label sum_j j*c_j mod d*",
    "toric characters": "characters of the center on the span of the components",
    "toric invariants": "H- and H_J-invariance of a monomial and its invariant-sum decomposition",
    "verify all": "every exhaustive identity suite; exit 1 on the first failing suite",
}


class UsageError(Exception):
    pass


@dataclass
class Output:
    data: Any
    table: str
    csv_rows: list[list[Any]] | None = None
    latex: str | None = None
    exit_code: int = 0

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.data, indent=2) + "\n"
        if fmt == "csv":
            rows = self.csv_rows if self.csv_rows is not None else _flat_rows(self.data)
            buf = io.StringIO()
            csv.writer(buf, lineterminator="\n").writerows(rows)
            return buf.getvalue()
        if fmt == "latex":
            return (self.latex if self.latex is not None else self.table) + "\n"
        return self.table + "\n"


def _flat_rows(data: Any) -> list[list[Any]]:
    if isinstance(data, dict):
        return [["key", "value"]] + [[k, json.dumps(v)] for k, v in data.items()]
    return [[json.dumps(data)]]


def _parse_ints(text: str | None, what: str) -> list[int]:
    if text is None or text.strip() == "":
        return []
    out = []
    for token in text.split(","):
        token = token.strip()
        if not token.lstrip("-").isdigit():
            raise ParseError(f"bad {what} token {token!r}", token)
        out.append(int(token))
    return out


def _poly_output(label: str, lam: Partition, poly: pc.IntPolynomial, extra: dict | None = None) -> Output:
    data = {"partition": list(lam.parts), **(extra or {}), "poly": poly.to_json()}
    rows = [["degree", "coefficient"]] + [[j, c] for j, c in enumerate(poly.coeffs)]
    return Output(data, f"{label}({lam}) = {poly}", rows, poly.to_latex())


def cmd_rst_list(args) -> Output:
    lam = Partition.parse(args.partition)
    items = [(s, inv.inversion_count(s), tb.max_divisor(s)) for s in tb.enumerate_rst(lam)]
    data = {
        "partition": list(lam.parts),
        "tableaux": [{**s.to_json(), "inversions": e, "max_divisor": d} for s, e, d in items],
    }
    table = "\n".join(f"{s.to_text():<30} |sigma|={e:<3} d={d}" for s, e, d in items)
    rows = [["tableau", "inversions", "max_divisor"]] + [[s.to_text(), e, d] for s, e, d in items]
    return Output(data, table, rows)


def cmd_tableau_info(args) -> Output:
    s = tb.RowStrictTableau.parse(args.tableau)
    dec = tb.ijk_decomposition(s)
    frame = tb.cell_frame(s)
    invs = inv.springer_inversions(s)
    pairs = inv.springer_pairs(s)
    data = {
        "tableau": s.to_json(),
        "I": sorted(dec.I),
        "J": sorted(dec.J),
        "K": sorted(dec.K),
        "blocks": [list(b) for b in tb.blocks(s)],
        "max_divisor": tb.max_divisor(s),
        "divisors": tb.divisor_set(s),
        "inversion_count": len(invs),
        "inversions": invs.to_json(),
        "pair_count": len(pairs),
        "pairs": pairs.to_json(),
        "i_tilde": inv.i_tilde(s).to_json(),
        "w_sigma_inverse": tb.w_sigma(s),
        "standard": tb.is_standard(s),
        "frame": frame.to_json(),
    }
    lines = [
        f"tableau   {s.to_text()}  shape {s.shape}",
        f"I         {sorted(dec.I)}",
        f"J         {sorted(dec.J)}",
        f"K         {sorted(dec.K)}",
        f"blocks    {[list(b) for b in tb.blocks(s)]}",
        f"d_sigma   {data['max_divisor']}  divisors {data['divisors']}",
        f"|sigma|   {len(invs)}  inv {invs.sorted()}",
        f"|pairs|   {len(pairs)}",
        f"w^-1      {data['w_sigma_inverse']}",
        f"standard  {data['standard']}",
    ]
    return Output(data, "\n".join(lines))


def cmd_tableau_quotient(args) -> Output:
    s = tb.RowStrictTableau.parse(args.tableau)
    q = tb.quotient_tableau(s, args.d)
    return Output(q.to_json(), q.to_text(), [[x for x in row] for row in q.rows])


def _char_arg(args, lam: Partition) -> int:
    if args.char is None:
        raise UsageError("--char is required for this subcommand")
    if not 0 <= args.char < lam.n:
        raise UsageError(f"--char must lie in 0..{lam.n - 1}")
    return args.char


def cmd_poincare(args) -> Output:
    lam = Partition.parse(args.partition)
    kind = args.kind
    if kind == "springer":
        return _poly_output("P_Sp", lam, pc.springer_poincare(lam))
    if kind == "extended":
        ext = pc.extended_poincare(lam)
        if ext != pc.extended_poincare_totient(lam):
            raise pc.ConsistencyError(f"totient formula disagrees for {lam}")
        terms = [{"d": d, "totient": ph, "shift": D, "quotient": list(mu.parts)} for d, ph, D, mu in pc.totient_terms(lam)]
        return _poly_output("P_ext", lam, ext, {"totient_terms": terms})
    if kind == "equivariant":
        eq = pc.equivariant_poincare(lam)
        table = "\n".join(f"chi_{i:<3} {p}" for i, p in enumerate(eq.by_char))
        rows = [["char", "degree", "coefficient"]] + [
            [i, j, c] for i, p in enumerate(eq.by_char) for j, c in enumerate(p.coeffs)
        ]
        latex = " + ".join(f"({p.to_latex()})\\chi_{{{i}}}" for i, p in enumerate(eq.by_char) if p) or "0"
        return Output(eq.to_json(), table, rows, latex)
    i = _char_arg(args, lam)
    d = pc.char_divisor(lam.n, i)
    if kind == "isotypic":
        full = pc.isotypic_poincare(lam, i)
        if divides(d, lam):
            shift = pc.dim_shift(lam, d)
            base = pc.springer_poincare(pc.quotient_partition(lam, d))
        else:
            shift, base = None, pc.ZERO
        data = {"partition": list(lam.parts), "char": i, "d": d, "shift": shift, "poly": base.to_json(), "expanded": full.to_json()}
        rows = [["degree", "coefficient"]] + [[j, c] for j, c in enumerate(full.coeffs)]
        return Output(data, f"P_chi_{i}({lam}) = {full}", rows, full.to_latex())
    stalk = pc.lusztig_stalk_poincare(lam, i)
    data = {"partition": list(lam.parts), "char": i, "d": d, **stalk.to_json()}
    if divides(d, lam):
        data["smaller_group"] = pc.smaller_group_form(lam, i).to_json()
    text = f"t^{stalk.shift} ({stalk.poly})" if stalk.poly else "0"
    latex = f"t^{{{stalk.shift}}}\\left({stalk.poly.to_latex()}\\right)" if stalk.poly else "0"
    rows = [["degree", "coefficient"]] + [[j + stalk.shift, c] for j, c in enumerate(stalk.poly.coeffs)]
    return Output(data, f"P_stalk_chi_{i}({lam}) = {text}", rows, latex)


def cmd_cells(args) -> Output:
    lam = Partition.parse(args.partition)
    cells = pc.extended_cells(lam)
    data = {"partition": list(lam.parts), "cells": [c.to_json() for c in cells]}
    table = "\n".join(f"{c.tableau.to_text():<30} r={c.r:<3} dim={c.dim}" for c in cells)
    rows = [["tableau", "r", "dim"]] + [[c.tableau.to_text(), c.r, c.dim] for c in cells]
    return Output(data, table, rows)


def _frame(args) -> toric.ToricFrame:
    if args.n is None:
        raise UsageError("--n is required")
    J = _parse_ints(args.J, "J")
    K = _parse_ints(args.K, "K")
    try:
        return toric.ToricFrame.from_jk(args.n, J, K)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_toric(args) -> Output:
    frame = _frame(args)
    ds = toric.d_star(frame)
    base = {"frame": frame.to_json(), "d_star": ds}
    if args.kind == "dstar":
        return Output(base, f"d* = {ds}")
    if args.kind == "characters":
        chars = toric.component_characters(frame)
        return Output({**base, "characters": chars}, " + ".join(f"chi_{p}" for p in chars))
    if args.kind == "phi":
        c = _parse_ints(args.c, "c") if args.c is not None else [0] * len(frame.J)
        idx = toric.phi(frame, c)
        data = {**base, "c": {"J": list(frame.j_sorted), "c": c}, "r": idx.r, "next": toric.z_shift(idx).r}
        return Output(data, f"phi = {idx.r} (mod {ds}); central generator sends it to {data['next']}")
    if args.b is None:
        raise UsageError("--b is required for toric invariants")
    b = toric.ExponentVector(frame.n, _parse_ints(args.b, "b"))
    data = {
        **base,
        "b": b.to_json(),
        "H_invariant": toric.is_invariant_monomial(b, "full"),
        "H_J_invariant": toric.is_invariant_monomial(b, frame.J),
    }
    lines = [f"H-invariant {data['H_invariant']}", f"H_J-invariant {data['H_J_invariant']}"]
    if data["H_J_invariant"]:
        c = _parse_ints(args.c, "c") if args.c is not None else [0] * len(frame.J)
        dec = toric.invariant_sum_decomposition(b, frame.J, c)
        data["decomposition"] = {
            "g": dec.g.to_json(),
            "m": {str(j): m for j, m in sorted(dec.m.items())},
            "scalar_exponent": dec.scalar_exponent,
        }
        lines.append(f"g = {list(dec.g.exps)}  m = {dict(sorted(dec.m.items()))}  c = omega^{dec.scalar_exponent}")
    return Output(data, "\n".join(lines))


def cmd_verify(args) -> Output:
    reports = verify.run_all(args.n_max)
    ok = all(r.passed for r in reports)
    data = {"n_max": args.n_max, "pass": ok, "reports": [r.to_json() for r in reports]}
    table = "\n".join(r.line() for r in reports)
    rows = [["check", "range", "pass", "ms"]] + [[r.check, r.range, r.passed, round(r.ms, 3)] for r in reports]
    return Output(data, table, rows, exit_code=0 if ok else 1)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None)
    common.add_argument("--out", default=None, help="write output to this file")

    parser = argparse.ArgumentParser(prog="extspringer", description=__doc__.splitlines()[0])
    parser.add_argument("--seed-docs", action="store_true", help="print what each subcommand computes")
    sub = parser.add_subparsers(dest="command")

    rst = sub.add_parser("rst").add_subparsers(dest="action", required=True)
    p = rst.add_parser("list", parents=[common])
    p.add_argument("partition")
    p.set_defaults(func=cmd_rst_list)

    tab = sub.add_parser("tableau").add_subparsers(dest="action", required=True)
    p = tab.add_parser("info", parents=[common])
    p.add_argument("tableau")
    p.set_defaults(func=cmd_tableau_info)
    p = tab.add_parser("quotient", parents=[common])
    p.add_argument("tableau")
    p.add_argument("d", type=int)
    p.set_defaults(func=cmd_tableau_quotient)

    p = sub.add_parser("poincare", parents=[common])
    p.add_argument("kind", choices=("springer", "extended", "isotypic", "equivariant", "lusztig"))
    p.add_argument("partition")
    p.add_argument("--char", type=int, default=None)
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("cells", parents=[common])
    p.add_argument("partition")
    p.set_defaults(func=cmd_cells)

    p = sub.add_parser("toric", parents=[common])
    p.add_argument("kind", choices=("dstar", "phi", "characters", "invariants"))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--J", default="", help="comma-separated J")
    p.add_argument("--K", default="", help="comma-separated K; the rest of 1..n-1 is I")
    p.add_argument("--c", default=None, help="c-tuple aligned with sorted J")
    p.add_argument("--b", default=None, help="exponent vector for invariants")
    p.set_defaults(func=cmd_toric)

    ver = sub.add_parser("verify").add_subparsers(dest="action", required=True)
    p = ver.add_parser("all", parents=[common])
    p.add_argument("--n-max", type=int, default=8)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.seed_docs:
        stdout.write(json.dumps(SUBCOMMAND_DOCS, indent=2) + "\n")
        return 0
    if not getattr(args, "func", None):
        parser.print_usage(stderr)
        return 2
    fmt = args.format or os.environ.get(FORMAT_ENV, "table")
    if fmt not in FORMATS:
        stderr.write(f"error: unknown format {fmt!r} from {FORMAT_ENV}\n")
        return 2
    try:
        out = args.func(args)
    except ParseError as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    except (UsageError, ValueError) as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    text = out.render(fmt)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return out.exit_code


def main() -> None:
    sys.exit(run())
