"""Command line interface.

Exit codes: 0 on success, 1 when a mathematical check fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .cocycles import (NotACocycle, NotNormalized, IdentityViolation, ThreeCocycle,
                       builtin_cyclic, check_identities, trivial_cocycle, validate)
from .cyclotomic import Cyclo
from .doubledata import TwistedDouble
from .groups import (BUILTIN_GROUP_NAMES, DEFAULT_ORDER_CAP, FiniteGroup,
                     GroupTooLarge, NotAGroup, builtin_group)
from . import oracle
from . import subcats as sc


class UsageError(Exception):
    """Malformed input files or arguments."""


# -- loading -----------------------------------------------------------------------


def _load_group(args: argparse.Namespace) -> FiniteGroup:
    if args.builtin is not None:
        if args.builtin not in BUILTIN_GROUP_NAMES:
            raise UsageError(
                f"unknown builtin group {args.builtin!r}; "
                f"choose from {', '.join(BUILTIN_GROUP_NAMES)}")
        return builtin_group(args.builtin)
    if args.group is None:
        raise UsageError("one of --builtin or --group is required")
    try:
        with open(args.group, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read group file: {exc}") from exc
    if "mult" in data:
        return FiniteGroup.from_mult_table(data["mult"], name=data.get("name", "G"),
                                           cap=args.cap)
    if "perm_gens" in data:
        return FiniteGroup.from_permutation_generators(
            data["perm_gens"], name=data.get("name", "G"), cap=args.cap)
    raise UsageError('group file needs a "mult" table or "perm_gens" list')


def _load_cocycle(args: argparse.Namespace, G: FiniteGroup) -> ThreeCocycle:
    spec = args.cocycle
    if spec == "trivial":
        return trivial_cocycle(G)
    if spec.startswith("cyclic:"):
        try:
            n_s, q_s = spec[len("cyclic:"):].split(",")
            n, q = int(n_s), int(q_s)
        except ValueError as exc:
            raise UsageError("--cocycle cyclic:N,Q needs two integers") from exc
        om = builtin_cyclic(n, q)
        if om.group.mult != G.mult:
            raise UsageError(
                f"cyclic:{n},{q} lives on Z/{n} with the standard table; "
                "the selected group has a different table")
        return ThreeCocycle(G, om.modulus, om.dlog)
    try:
        with open(spec, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read cocycle file: {exc}") from exc
    if "modulus" not in data or "dlog" not in data:
        raise UsageError('cocycle file needs "modulus" and "dlog"')
    m = data["modulus"]
    raw = data["dlog"]
    n = G.order
    if raw and isinstance(raw[0], int):
        if len(raw) != n ** 3:
            raise UsageError(f"flat dlog must have {n}^3 entries")
        dlog = tuple(tuple(tuple(raw[(x * n + y) * n + z] for z in range(n))
                           for y in range(n)) for x in range(n))
    else:
        dlog = tuple(tuple(tuple(v for v in row) for row in plane) for plane in raw)
    omega = ThreeCocycle(G, m, dlog)
    validate(omega)
    return omega


def _double(args: argparse.Namespace) -> TwistedDouble:
    G = _load_group(args)
    return TwistedDouble(G, _load_cocycle(args, G))


def _parse_members(text: str, order: int) -> tuple[int, ...]:
    try:
        vals = tuple(int(p) for p in text.split("-"))
    except ValueError as exc:
        raise UsageError(f"bad element list {text!r}; use dash-joined indices") from exc
    if any(not (0 <= v < order) for v in vals):
        raise UsageError(f"element out of range in {text!r}")
    return vals


def _parse_triple(dd: TwistedDouble, spec: str) -> sc.Triple:
    parts = spec.split(",")
    if len(parts) != 3:
        raise UsageError('--triple takes "K,H,Bfile" (members dash-joined)')
    G = dd.group
    try:
        K = G.subgroup(_parse_members(parts[0], G.order))
        H = G.subgroup(_parse_members(parts[1], G.order))
    except ValueError as exc:
        raise UsageError(f"not a subgroup: {exc}") from exc
    if parts[2] == "trivial":
        B = sc.trivial_pairing(K, H, dd.ctx.N)
    else:
        try:
            with open(parts[2], encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read pairing file: {exc}") from exc
        if "dlog" not in data:
            raise UsageError('pairing file needs a "dlog" table over K x H members')
        try:
            B = sc.Pairing(K, H, dd.ctx.N,
                           tuple(tuple(int(v) % dd.ctx.N for v in row)
                                 for row in data["dlog"]))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    return sc.Triple(K, H, B)


# -- serialization ------------------------------------------------------------------


def _cyclo_json(z: Cyclo) -> dict:
    approx = z.to_complex()
    return {"N": z.ctx.N, "coeffs": list(z.num), "den": z.den,
            "approx": {"re": approx.real, "im": approx.imag}}


def _flags_list(flags: sc.TripleFlags) -> list[str]:
    return [name for name in ("symmetric", "isotropic", "lagrangian", "nondegenerate")
            if getattr(flags, name)]


def _triple_json(dd: TwistedDouble, t: sc.Triple) -> dict:
    return {"K": list(t.K.members), "H": list(t.H.members),
            "B": [list(r) for r in t.B.dlog], "N": t.B.N,
            "dim": t.dim(dd.group.order),
            "flags": _flags_list(sc.classify(dd, t))}


def _label(dd: TwistedDouble, t: sc.Triple) -> str:
    return "K=%s;H=%s;dim=%d;flags=%s" % (
        "-".join(map(str, t.K.members)), "-".join(map(str, t.H.members)),
        t.dim(dd.group.order), sc.classify(dd, t).short())


def _hasse_edges(dd: TwistedDouble, triples: Sequence[sc.Triple]) -> list[tuple[int, int]]:
    below = [[i for i, a in enumerate(triples)
              if a != b and sc.contains(dd, a, b)] for b in triples]
    edges = []
    for j, bs in enumerate(below):
        bset = set(bs)
        for i in bs:
            if not any(i in below[k] for k in bset if k != i):
                edges.append((i, j))
    return edges


# -- subcommands --------------------------------------------------------------------


def _cmd_group(args: argparse.Namespace) -> int:
    dd = _double(args)
    G = dd.group
    print(f"group {G.name}: order {G.order}, "
          f"{'abelian' if G.is_abelian else 'nonabelian'}, exponent {G.exponent}")
    print(f"cocycle modulus {dd.omega.modulus}"
          f"{' (trivial)' if dd.omega.is_trivial else ''}; field Q(zeta_{dd.ctx.N})")
    classes = G.conjugacy_classes
    print(f"conjugacy classes ({len(classes)}): " +
          " ".join("{" + ",".join(map(str, c)) + "}" for c in classes))
    normals = G.normal_subgroups
    print(f"normal subgroups ({len(normals)}): " +
          " ".join("{" + ",".join(map(str, N.members)) + "}" for N in normals))
    print(f"centralizing pairs: {len(G.centralizing_pairs())}")
    gamma = dd.gamma
    print(f"simple objects: {len(gamma)}")
    for s in gamma:
        print(f"  #{s.index}: a={s.a} char={s.char_index} dim={s.dim}")
    return 0


def _cmd_subcats(args: argparse.Namespace) -> int:
    dd = _double(args)
    triples = sc.enumerate_all(dd)
    print(f"{len(triples)} fusion subcategories")
    for i, t in enumerate(triples):
        print(f"#{i} {_label(dd, t)} B={t.B.dlog}")
    return 0


def _cmd_lattice(args: argparse.Namespace) -> int:
    dd = _double(args)
    triples = sc.enumerate_all(dd)
    edges = _hasse_edges(dd, triples)
    if args.format == "dot":
        lines = ["digraph lattice {", "  rankdir=BT;"]
        for i, t in enumerate(triples):
            lines.append(f'  n{i} [label="{_label(dd, t)}"];')
        for i, j in edges:
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        text = "\n".join(lines) + "\n"
    else:
        doc = {"group": dd.group.name, "order": dd.group.order,
               "cocycle_modulus": dd.omega.modulus,
               "triples": [dict(_triple_json(dd, t), index=i)
                           for i, t in enumerate(triples)],
               "edges": [list(e) for e in edges]}
        text = json.dumps(doc, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_invariants(args: argparse.Namespace) -> int:
    dd = _double(args)
    t = _parse_triple(dd, args.triple)
    t = sc.build_subcat(dd, t.K, t.H, t.B)
    members = sorted(sc.subcat_members(dd, t))
    cent = sc.centralizer_triple(dd, t)
    center = sc.muger_center(dd, t)
    tau = sc.gauss_sum(dd, t)
    zeta = sc.central_charge(dd, t)
    doc = dict(_triple_json(dd, t),
               members=members,
               gauss_sum=_cyclo_json(tau),
               central_charge={"re": zeta.real, "im": zeta.imag},
               centralizer=_triple_json(dd, cent),
               muger_center=_triple_json(dd, center))
    print(json.dumps(doc, indent=2))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    dd = _double(args)
    validate(dd.omega)
    counts = check_identities(dd.omega)
    report = oracle.certify(dd)
    print(f"cocycle identities: {sum(counts.values())} instances across "
          f"{len(counts)} families")
    print(f"triples: {report['triples']}")
    if report["bijection"] is not None:
        print(f"closure oracle: {report['closed_sets']} closed sets, bijection ok")
    else:
        print("closure oracle: skipped (nontrivial cocycle); "
              "double-centralizer and dimension laws ok")
    print("verified")
    return 0


# -- entry point --------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--builtin", metavar="NAME",
                   help="builtin group: " + ", ".join(BUILTIN_GROUP_NAMES))
    p.add_argument("--group", metavar="FILE",
                   help='JSON file with "mult" table or "perm_gens"')
    p.add_argument("--cocycle", default="trivial", metavar="SPEC",
                   help='"trivial", "cyclic:N,Q", or a JSON file path')
    p.add_argument("--cap", type=int, default=DEFAULT_ORDER_CAP,
                   help="largest group order accepted")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qdouble",
        description="Fusion subcategory lattices of twisted doubles of finite groups")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="group and simple object summary")
    p.add_argument("action", choices=("info",))
    _add_common(p)
    p.set_defaults(func=_cmd_group)

    p = sub.add_parser("subcats", help="enumerate fusion subcategories")
    p.add_argument("action", choices=("list",))
    _add_common(p)
    p.set_defaults(func=_cmd_subcats)

    p = sub.add_parser("lattice", help="export the subcategory lattice")
    p.add_argument("action", choices=("export",))
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--out", metavar="FILE")
    _add_common(p)
    p.set_defaults(func=_cmd_lattice)

    p = sub.add_parser("invariants", help="invariants of one subcategory")
    p.add_argument("--triple", required=True, metavar="K,H,BFILE",
                   help='e.g. "0-1,0,trivial"; members dash-joined, pairing from file')
    _add_common(p)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("verify", help="run the cross-validation suite")
    p.add_argument("action", choices=("all",))
    _add_common(p)
    p.set_defaults(func=_cmd_verify)

    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NotAGroup, GroupTooLarge, NotACocycle, NotNormalized, IdentityViolation,
            sc.NotASubcategory, sc.DimensionMismatch, sc.UnsupportedTriple,
            AssertionError, ArithmeticError, ValueError) as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
