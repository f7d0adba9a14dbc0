from __future__ import annotations

import argparse
import sys
from typing import Sequence

from ..g2lie import CATALOG_NAMES


def _show_subalgebra(name: str) -> int:
    from ..exterior import format_form
    from ..g2lie import catalog, centralizer_in_g2, normalizer_in_g2
    from ..invariants import invariant_forms27, invariant_spinors

    h = catalog(name)
    print(f"{name}: dim {h.dim}")
    for lab, g in zip(h.labels, h.generators):
        print(f"  {lab} = {format_form(g)}")
    for (a, b), coeffs in sorted(h.structure_constants().items()):
        terms = " + ".join(f"{c}*{h.labels[k]}" for k, c in enumerate(coeffs) if c)
        print(f"  [{h.labels[a]}, {h.labels[b]}] = {terms or 0}")
    print(f"invariant spinors: dim {invariant_spinors(h).dim}")
    space, gens = invariant_forms27(h)
    print(f"invariant Lambda^3_27: dim {space.dim}")
    for g in gens:
        print(f"  {format_form(g)}")
    print(f"normalizer in g2: dim {normalizer_in_g2(h).dim}, centralizer: dim {centralizer_in_g2(h).dim}")
    return 0


def _show_torsion(name: str) -> int:
    from ..exact import format_coeff
    from ..exterior import format_form
    from ..g2lie import catalog
    from ..torsion import UNION_COMPONENTS, scalar_action_constraints

    fam = scalar_action_constraints(catalog(name))
    print(f"{name}: T = {format_form(fam.form)}")
    print(f"parameters: {', '.join(fam.params)}")
    if not fam.constraints:
        print("T^2 is scalar on the invariant spinors for every parameter value")
    for c in fam.constraints:
        print(f"  0 = {format_coeff(c)}")
    comps = UNION_COMPONENTS.get(name)
    if comps:
        for comp in comps:
            print("component: " + (", ".join(f"{format_coeff(c)} = 0" for c in comp) or "whole family"))
    return 0


def _show_bianchi(name: str) -> int:
    from ..curvature import computed_branches, solve_bianchi, symmetric_curvature
    from ..exact import format_coeff
    from ..exterior import format_form

    R = symmetric_curvature(name)
    print(f"{name}: curvature parameters {', '.join(R.params)}")
    for a, b, c in R.terms:
        print(f"  ({format_coeff(c)}) {format_form(a)} (x) {format_form(b)}")
    curv, residual = solve_bianchi(name)
    for k, v in curv.items():
        print(f"{k} = {format_coeff(v)}")
    for r in residual:
        print(f"  residual: 0 = {format_coeff(r)}")
    for b in computed_branches(name):
        print("branch: " + ", ".join(f"{k} = {format_coeff(v)}" for k, v in b.items()))
    return 0


def _verify(args: argparse.Namespace) -> int:
    from . import export, run_all, to_csv, to_json, to_text

    summary = run_all(args.filter, jobs=args.jobs)
    if not summary.records:
        print(f"no claims match {args.filter!r}", file=sys.stderr)
        return 2
    if args.out:
        export(summary, args.format, args.out)
        print(to_text(summary).splitlines()[-1])
    else:
        render = {"json": to_json, "csv": to_csv, "text": lambda s: to_text(s, verbose=args.verbose)}[args.format]
        sys.stdout.write(render(summary))
    return summary.exit_code


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="g2torsion", description="Exact checks for G2 structures with parallel torsion.")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the claim registry")
    v.add_argument("--filter", default=None, metavar="PREFIX", help="only claims whose id starts with PREFIX")
    v.add_argument("--jobs", type=int, default=1, metavar="N")
    v.add_argument("--format", choices=("json", "csv", "text"), default="text")
    v.add_argument("--out", default=None, metavar="PATH")
    v.add_argument("-v", "--verbose", action="store_true", help="show values for every claim")

    for cmd, helptext in (
        ("show-subalgebra", "generators, brackets and invariants"),
        ("show-torsion", "the admissible torsion family"),
        ("show-bianchi", "curvature ansatz and Bianchi solutions"),
    ):
        p = sub.add_parser(cmd, help=helptext)
        p.add_argument("name", choices=CATALOG_NAMES)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return _verify(args)
        show = {"show-subalgebra": _show_subalgebra, "show-torsion": _show_torsion, "show-bianchi": _show_bianchi}
        return show[args.command](args.name)
    except Exception as exc:  # exit status 2 marks an internal error
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
