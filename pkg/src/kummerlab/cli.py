"""Command-line driver: presets in, reports out.

Exit codes: 0 success, 1 verification failed, 2 input or parse error,
3 a field extension is required.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import certify, curverec, divlat, groups, invgeo, kummer, tables
from .exprparse import ExprSyntaxError, UnknownSymbolError
from .groups import ExtensionRequired, SignCharacter
from .polygeom import MultiPoly, ProjPoint
from .presets import Preset, PresetError, load_params_file, load_preset, parse_field, preset_names

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_EXTENSION = 0, 1, 2, 3

INPUT_ERRORS = (ExprSyntaxError, UnknownSymbolError, PresetError, groups.WordSyntaxError,
                groups.UnknownGenerator, certify.UnknownCheck, FileNotFoundError, json.JSONDecodeError)
FAILURES = (kummer.TropeError, curverec.CurveError, divlat.SheetError, invgeo.GeometryError,
            groups.NotInvariant, ArithmeticError)


class InputError(ValueError):
    pass


@dataclass
class Report:
    title: str
    data: dict = field(default_factory=dict)
    body: list = field(default_factory=list)  # markdown lines
    ok: bool = True

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps({"title": self.title, "ok": self.ok, **self.data}, indent=2) + "\n"
        head = [f"# {self.title}", ""]
        return "\n".join(head + self.body + ["", f"verdict: {'PASS' if self.ok else 'FAIL'}"]) + "\n"


# input -------------------------------------------------------------------------------


def load_input(args) -> Preset:
    desc = parse_field(args.field) if args.field else None
    if args.preset and args.params:
        raise InputError("give either --preset or --params, not both")
    if args.preset:
        return load_preset(args.preset, desc=desc)
    if args.params:
        return load_params_file(args.params, desc)
    raise InputError(f"this command needs --preset or --params; presets: {', '.join(preset_names())}")


def surface_with_nodes(P: Preset) -> tuple[kummer.KummerSurface, kummer.NodeSearch]:
    S = P.surface()
    gens = P.generators(P.node_symmetries) if P.node_symmetries else {}
    config = kummer.NodeSearchConfig(templates=P.family_nodes() or [], symmetries=list(gens.values()))
    res = kummer.solve_nodes(S, config)
    S.nodes = res.nodes
    return S, res


def labeled_tropes(P: Preset, S: kummer.KummerSurface) -> list:
    """Tropes in the tabulated order for the family, sorted otherwise."""
    S.tropes = kummer.find_tropes(S)
    order = P.family_tropes()
    if order is None:
        return S.tropes
    by_plane = {T.plane: T for T in S.tropes}
    if set(by_plane) != set(order):
        return S.tropes
    return [by_plane[p] for p in order]


def _fmt(x) -> str:
    return x.format() if hasattr(x, "format") and not isinstance(x, str) else str(x)


def _table(header: list, rows: list) -> list[str]:
    out = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    out += ["| " + " | ".join(str(c) for c in r) + " |" for r in rows]
    return out


# surface commands ----------------------------------------------------------------------


def cmd_segre(args) -> Report:
    P = load_input(args)
    r = kummer.segre_residual(P.params())
    rep = Report(f"Segre residual: {P.name}", ok=r.is_zero())
    rep.data = {"preset": P.name, "field": str(P.desc), "params": P.params().as_dict(), "residual": r.format()}
    rep.body = [f"field: {P.desc}", *[f"{k} = {v}" for k, v in rep.data["params"].items()], f"residual: {r.format()}"]
    return rep


def cmd_nodes(args) -> Report:
    P = load_input(args)
    S, res = surface_with_nodes(P)
    verify = kummer.verify_nodes(S, S.nodes) if S.nodes else None
    ok = res.status == "complete" and verify is not None and verify.ok
    rep = Report(f"Nodes: {P.name}", ok=ok)
    rows = [[k + 1, v.point.format(), v.gradient_zero, v.hessian_rank] for k, v in enumerate(verify.verdicts if verify else [])]
    rep.data = {"status": res.status, "count": len(S.nodes), "eliminant_degree": res.eliminant_degree,
                "single_h_orbit": bool(verify and verify.single_h_orbit), "warnings": S.warnings, "notes": res.notes,
                "nodes": [{"point": r[1], "gradient_zero": r[2], "hessian_rank": r[3]} for r in rows]}
    rep.body = [f"status: {res.status} ({len(S.nodes)} nodes)", *[f"warning: {w}" for w in S.warnings],
                *[f"note: {n}" for n in res.notes], ""] + _table(["#", "point", "gradient 0", "Hessian rank"], rows)
    return rep


def cmd_tropes(args) -> Report:
    P = load_input(args)
    S, _ = surface_with_nodes(P)
    tropes = labeled_tropes(P, S)
    rows = []
    for k, T in enumerate(tropes, start=1):
        conic = T.g.format() if T.status == "ok" else f"needs sqrt({T.scalar.format()}); {T.g.format()}"
        rows.append([k, T.h.format(), conic, " ".join(str(n + 1) for n in T.incident_nodes)])
    expected = P.family_tropes()
    matches = None if expected is None else {T.plane for T in tropes} == set(expected)
    per_trope, per_node = kummer.incidence_counts(tropes)
    ok = matches is not False and set(per_trope) == {6} and set(per_node) == {6}
    rep = Report(f"Tropes: {P.name}", ok=ok)
    rep.data = {"tropes": [{"plane": r[1], "conic": r[2], "nodes": [int(x) for x in r[3].split()],
                            "status": T.status} for r, T in zip(rows, tropes)],
                "matches_table": matches, "nodes_per_trope": sorted(set(per_trope)),
                "tropes_per_node": sorted(set(per_node))}
    rep.body = _table(["#", "plane", "conic", "nodes"], rows)
    if matches is not None:
        rep.body += ["", f"planes equal the tabulated planes: {matches}"]
    return rep


def cmd_recover_curve(args) -> Report:
    P = load_input(args)
    S, _ = surface_with_nodes(P)
    tropes = labeled_tropes(P, S)
    if not 1 <= args.trope <= len(tropes):
        raise InputError(f"--trope must lie in 1..{len(tropes)}")
    T = tropes[args.trope - 1]
    on_trope = [S.nodes[k] for k in T.incident_nodes]
    if args.base is not None:
        if not 1 <= args.base <= 6:
            raise InputError("--base must lie in 1..6")
        base = on_trope[args.base - 1]
    elif P.family == "48-50" and args.trope == 1:
        base = ProjPoint.parse(tables.CONIC_1_BASE, S.desc, P.bindings)
    else:
        base = on_trope[0]
    A = curverec.trope_branch_points(S, T, base)
    sextic = curverec.sextic_from_points(A)
    ra = curverec.reduced_aut(A)
    data = {"trope": T.h.format(), "base": base.format(), "branch_points": [p.format() for p in A.points],
            "sextic": sextic.format(), "reduced_aut_order": ra.order, "reduced_aut_group": ra.name,
            "element_orders": {str(k): v for k, v in sorted(ra.profile.histogram.items())}}
    ok = True
    body = [f"trope: {T.h.format()} = 0", f"base node: {base.format()}", f"branch points: {A.format()}",
            f"sextic: {sextic.format()}", f"reduced automorphism group: order {ra.order} ({ra.name})"]
    if P.family == "48-50":
        listed = curverec.SixPointSet.parse(tables.BRANCH_POINTS_48_50, P.desc, P.bindings)
        data["matches_listed_points"] = curverec.mobius_equivalent(A, listed) is not None
        body.append(f"equivalent to the listed branch points: {data['matches_listed_points']}")
        ok = data["matches_listed_points"]
        if P.desc.transcendental is None:
            ref = MultiPoly.parse(tables.SEXTIC_48_50, P.desc, curverec.BINARY, P.bindings)
            R = curverec.SixPointSet.make(curverec.binary_form_roots(ref))
            data["matches_tabulated_sextic"] = curverec.mobius_equivalent(A, R) is not None
            body.append(f"equivalent to the tabulated sextic: {data['matches_tabulated_sextic']}")
            ok = ok and data["matches_tabulated_sextic"]
    claim = P.claims.get("claimed_reduced_aut_order")
    if claim is not None:
        data["claimed_reduced_aut_order"] = claim
        body.append(f"claimed reduced order {claim}: {'agrees' if claim == ra.order else 'differs'}")
        ok = ok and claim == ra.order
    return Report(f"Curve recovery: {P.name}", data, body, ok)


def cmd_aut(args) -> Report:
    P = load_input(args)
    names = args.generators.split(",") if args.generators else P.aut_generators
    if not names:
        raise InputError("the preset names no generators; pass --generators")
    G = groups.close(P.generators(names))
    prof = groups.group_profile(G)
    data = {"generators": names, "order": prof.order, "exponent": prof.exponent, "center_order": prof.center_order,
            "element_orders": {str(k): v for k, v in sorted(prof.histogram.items())}}
    body = [f"generators: {', '.join(names)}", f"order: {prof.order}", f"exponent: {prof.exponent}",
            f"center order: {prof.center_order}",
            "element orders: " + ", ".join(f"{k}: {v}" for k, v in sorted(prof.histogram.items()))]
    ok = True
    claim = P.claims.get("claimed_aut_order")
    if claim is not None and not args.generators:
        data["claimed_order"] = claim
        body.append(f"claimed order {claim}: {'agrees' if claim == prof.order else 'differs'}")
        ok = claim == prof.order
    return Report(f"Automorphism group: {P.name}", data, body, ok)


def _lattice(P: Preset):
    S, _ = surface_with_nodes(P)
    S.tropes = kummer.find_tropes(S)
    try:
        sheets = divlat.split_tropes(S.tropes, P.family_tropes())
    except ExtensionRequired as exc:
        hint = ("use the preset example-48-50-s, where t = 2s/(s^2+1) makes the square roots rational"
                if P.family == "48-50" and P.desc.transcendental else "enlarge the field with --field")
        raise ExtensionRequired(f"{exc}; {hint}", exc.scalar) from None
    return S, divlat.SheetLattice(sheets)


def cmd_sheets(args) -> Report:
    P = load_input(args)
    _, lat = _lattice(P)
    rows = [[s.label, s.h.format(), f"w = {'' if s.sign > 0 else '-'}({s.g.format()})"] for s in lat.sheets]
    data = {"count": len(lat.sheets), "sheets": [{"label": r[0], "plane": r[1], "equation": r[2]} for r in rows]}
    return Report(f"Sheets: {P.name}", data, [f"{len(rows)} sheets", ""] + _table(["sheet", "plane", "sheet"], rows))


def cmd_gram(args) -> Report:
    P = load_input(args)
    _, lat = _lattice(P)
    full = lat.gram()
    M = lat.gram(lat.plus_sheets()) if args.plus else full
    sums = sorted(set(divlat.block_sums(full, lat.sheets)))
    data = {"labels": M.labels, "rows": M.rows, "rank": M.rank(), "full_rank": full.rank(), "block_sums": sums}
    body = [M.to_markdown(), "", f"rank: {M.rank()}", f"rank of all sheets: {full.rank()}",
            f"block sums: {sums}"]
    ok = M.is_symmetric()
    if P.family == "48-50" and len(lat.sheets) == 32:
        al = divlat.align_signs(lat.gram(lat.plus_sheets()).rows, tables.GRAM_48_50_PLUS)
        data["matches_table"] = al.matches
        data["flipped_tropes"] = list(al.flips)
        body.append(f"'+' block equals the tabulated matrix: {al.matches} (flipped tropes {list(al.flips)})")
        ok = ok and al.matches
    return Report(f"Gram matrix: {P.name}", data, body, ok)


def _parse_signs(text: str, names: list) -> dict:
    out = {}
    for part in text.split(","):
        name, _, val = part.partition("=")
        if name.strip() not in names or val.strip() not in ("1", "+1", "-1"):
            raise InputError(f"bad sign assignment {part!r}; expected NAME=+1 or NAME=-1 for {names}")
        out[name.strip()] = int(val)
    return out


def cmd_class_rank(args) -> Report:
    P = load_input(args)
    S, lat = _lattice(P)
    full = lat.gram()
    data = {}
    if args.rho:
        vals = [v.strip() for v in args.rho.split(",")]
        if len(vals) != 4 or any(v not in ("1", "+1", "-1") for v in vals):
            raise InputError("--rho takes four signs for A1..A4, e.g. -1,1,-1,1")
        rho = dict(zip(("A1", "A2", "A3", "A4"), (int(v) for v in vals)))
        G = groups.lift_by_character(kummer.heisenberg_group(S.desc), S.F, SignCharacter(rho))
        data["lift"] = {"character": rho}
    else:
        names = args.generators.split(",") if args.generators else P.aut_generators
        gens = P.generators(names)
        if args.signs:
            G = groups.lift_group(S.F, gens, _parse_signs(args.signs, names), require_exact=False)
            data["lift"] = {"signs": _parse_signs(args.signs, names)}
        else:
            G = groups.lift_group(S.F, gens, {}, require_exact=False, abort_on_deck=True)
            if G is not None:
                data["lift"] = {"signs": {n: 1 for n in names}}
            else:
                found = groups.lifts_avoiding_deck(S.F, gens)
                if not found:
                    return Report(f"Class rank: {P.name}", {"error": "no lift avoids w -> -w"},
                                  ["no lift of the group avoids the deck involution"], False)
                signs, G = found[0]
                data["lift"] = {"signs": signs, "choices": len(found)}
    rep = divlat.criterion_report(lat, G, full)
    data.update({"group_order": G.order, **rep.as_dict()})
    body = [f"lift: {data['lift']}", f"lifted group order: {G.order}", f"sheet orbits: {rep.orbit_sizes}",
            f"orbit ranks: {rep.orbit_ranks}", f"two sheets of a trope exchanged: {rep.swapped}",
            f"invariant rank: {rep.invariant_rank}", f"invariant classes: {rep.verdict} ({rep.reason})"]
    return Report(f"Class rank: {P.name}", data, body)


# incidence geometry --------------------------------------------------------------------


def _word(H, g) -> str:
    return "*".join(H.word_of(g)) or "1"


def cmd_lines(args) -> Report:
    H = invgeo.heisenberg()
    lines = invgeo.fixed_lines(H)
    ok = [L.key for L in lines] == invgeo.table_lines()
    rows = [[f"l{L.id}", L.format(), _word(H, L.fixing)] for L in lines]
    data = {"lines": [{"id": L.id, "equations": [f.format() for f in L.forms], "fixed_by": _word(H, L.fixing)}
                      for L in lines], "matches_table": ok}
    return Report("Fixed lines of H", data, _table(["line", "equations", "fixed by"], rows)
                  + ["", f"equal to the tabulated lines: {ok}"], ok)


def cmd_quadrics(args) -> Report:
    H = invgeo.heisenberg()
    quads = invgeo.invariant_quadrics(H)
    table_q = [MultiPoly.parse(q, H.identity.desc) for q in tables.QUADRICS]
    ok = len(quads) == 10 and all(q.proportionality(Q.form) is not None for q, Q in zip(table_q, quads))
    ok = ok and all(Q.is_smooth() for Q in quads)
    rows = [[f"Q{Q.id}", Q.form.format(), " ".join(f"{k}:{v:+d}" for k, v in Q.character.items()), Q.is_smooth()]
            for Q in quads]
    data = {"quadrics": [{"id": Q.id, "form": Q.form.format(), "character": Q.character, "smooth": Q.is_smooth()}
                         for Q in quads], "matches_table": ok}
    return Report("H-invariant quadrics", data, _table(["quadric", "form", "character", "smooth"], rows), ok)


def cmd_incidence(args) -> Report:
    H = invgeo.heisenberg()
    lines, quads = invgeo.fixed_lines(H), invgeo.invariant_quadrics(H)
    inc = invgeo.incidence_table(lines, quads)
    text = invgeo.table_as_text(inc)
    summ = invgeo.incidence_summary(inc)
    diff = [k + 1 for k in range(30) if text[k] != tables.INCIDENCE[k]]
    consistent = set(summ.row_sums) == {4} and set(summ.column_sums) == {12} and set(summ.pair_meets) == {4}
    rows = [[f"l{k + 1}", *row] for k, row in enumerate(text)]
    body = _table(["", *[f"Q{j + 1}" for j in range(10)]], rows) + [
        "", f"row sums: {sorted(set(summ.row_sums))}", f"column sums: {sorted(set(summ.column_sums))}",
        f"lines shared by two quadrics: {sorted(set(summ.pair_meets))}"]
    body += [f"row l{k} differs from the tabulated row {tables.INCIDENCE[k - 1]}" for k in diff]
    data = {"rows": text, "row_sums": summ.row_sums, "column_sums": summ.column_sums,
            "pair_meets": sorted(set(summ.pair_meets)), "rows_differing_from_table": diff}
    return Report("Lines in quadrics", data, body, consistent and not diff)


def cmd_orbits(args) -> Report:
    H = invgeo.heisenberg()
    sig = invgeo.sigma_orbits(H, invgeo.fixed_lines(H))
    ok = [frozenset(o.points) for o in sig.orbits] == invgeo.table_sigma()
    ok = ok and set(sig.points_per_line) == {6} and set(sig.lines_per_point.values()) == {3}
    rows = [[f"Sigma{o.id}", ", ".join(p.format() for p in o.points)] for o in sig.orbits]
    data = {"orbits": [[p.format() for p in o.points] for o in sig.orbits],
            "points_per_line": sorted(set(sig.points_per_line)),
            "lines_per_point": sorted(set(sig.lines_per_point.values())), "matches_table": ok}
    body = _table(["orbit", "points"], rows) + [
        "", f"points per line: {data['points_per_line']}", f"lines per point: {data['lines_per_point']}"]
    return Report("H-orbits of length 4", data, body, ok)


def cmd_classify_point(args) -> Report:
    text = args.point.strip().strip("[]()")
    parts = text.replace(":", ",").split(",")
    if len(parts) != 4:
        raise InputError("--point takes four coordinates, e.g. 0,0,1,5 or [0:0:1:5]")
    try:
        p = ProjPoint.parse(parts, invgeo.QI)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"--point: {exc}") from None
    H = invgeo.heisenberg()
    lines = invgeo.fixed_lines(H)
    sig = invgeo.sigma_orbits(H, lines)
    c = invgeo.classify_orbit_length(H, p, lines, sig.orbits)
    data = {"point": p.format(), "orbit_length": c.length, "expected": c.expected, "location": c.where}
    body = [f"point: {p.format()}", f"orbit length: {c.length}", f"location: {c.where} (expects {c.expected})"]
    return Report("Orbit length", data, body, c.consistent)


# acceptance suite -----------------------------------------------------------------------


def cmd_verify_paper(args) -> Report:
    only = [k.strip() for k in args.only.split(",")] if args.only else None
    overrides = None
    if args.overrides:
        overrides = json.loads(Path(args.overrides).read_text())
        if not isinstance(overrides, dict):
            raise InputError("--overrides expects a JSON object of preset entries")
    results = certify.run_checks(only, overrides)
    ok = all(r.passed for r in results)
    body = []
    for r in results:
        body.append(f"- {'PASS' if r.passed else 'FAIL'} {r.key}: {r.title} ({r.seconds:.1f}s)")
        if not r.passed:
            body.append(f"    claim: {r.claim}")
            if r.error:
                body.append(f"    error: {r.error}")
            body += [f"    failed: {s.label} [{s.detail}]" for s in r.failures()]
        body += [f"    note: {n}" for n in r.notes]
    failed = [r.key for r in results if not r.passed]
    body += ["", f"{len(results) - len(failed)}/{len(results)} checks passed"]
    data = {"checks": [r.as_dict() for r in results], "failed": failed}
    return Report("Acceptance checks", data, body, ok)


# entry point --------------------------------------------------------------------------------

COMMANDS = {
    "segre": (cmd_segre, "Segre cubic residual of the parameters"),
    "nodes": (cmd_nodes, "find and verify the 16 nodes"),
    "tropes": (cmd_tropes, "the 16 tropes with their conics"),
    "recover-curve": (cmd_recover_curve, "branch points and sextic of the genus-2 curve"),
    "aut": (cmd_aut, "order and profile of the automorphism group"),
    "sheets": (cmd_sheets, "the 32 sheets over the tropes"),
    "gram": (cmd_gram, "intersection matrix of the sheets"),
    "class-rank": (cmd_class_rank, "rank of the invariant class group for a lifted group"),
    "lines": (cmd_lines, "the 30 lines fixed by elements of H"),
    "quadrics": (cmd_quadrics, "the 10 H-invariant quadrics"),
    "incidence": (cmd_incidence, "which fixed lines lie on which quadrics"),
    "orbits": (cmd_orbits, "the 15 H-orbits of length 4"),
    "classify-point": (cmd_classify_point, "H-orbit length of a point with its location"),
    "verify-paper": (cmd_verify_paper, "run every acceptance check"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--preset", help="bundled preset name")
    common.add_argument("--params", help="JSON parameter file with the keys of a preset entry")
    common.add_argument("--field", help="override the field, e.g. Q, Q(i), Q(zeta_20), Q(s)")
    common.add_argument("--format", choices=("markdown", "json"), default="markdown")
    common.add_argument("--out", help="write the report to this file")
    parser = argparse.ArgumentParser(prog="kummerlab", description="Exact computations on Heisenberg-invariant "
                                     "Kummer quartics and their double solids.")
    sub = parser.add_subparsers(dest="command", required=True)
    subs = {name: sub.add_parser(name, parents=[common], help=text) for name, (_, text) in COMMANDS.items()}
    subs["recover-curve"].add_argument("--trope", type=int, default=1, help="1-based trope index")
    subs["recover-curve"].add_argument("--base", type=int, help="1-based index of the base node on the trope")
    subs["aut"].add_argument("--generators", help="comma-separated matrix names")
    subs["gram"].add_argument("--plus", action="store_true", help="only the '+' sheets")
    subs["class-rank"].add_argument("--rho", help="character of H as four signs for A1..A4")
    subs["class-rank"].add_argument("--generators", help="comma-separated matrix names to lift")
    subs["class-rank"].add_argument("--signs", help="lift signs, e.g. A1=-1,A2=1")
    subs["classify-point"].add_argument("--point", required=True, help="coordinates, e.g. 0,0,1,5")
    subs["verify-paper"].add_argument("--only", help="comma-separated check names: " + ", ".join(certify.CHECKS))
    subs["verify-paper"].add_argument("--overrides", help="JSON object of preset entries replacing bundled ones")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    func = COMMANDS[args.command][0]
    try:
        report = func(args)
    except (InputError, *INPUT_ERRORS) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ExtensionRequired as exc:
        print(f"extension required: {exc}", file=sys.stderr)
        return EXIT_EXTENSION
    except FAILURES as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return EXIT_FAILED
    text = report.render(args.format)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if report.ok else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
