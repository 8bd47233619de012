"""Command-line surface: one verb per operation pipeline, JSON out.

Verbs: marks, idempotents, weyl, hsets, operad, transfer-systems,
isotropy, compatible, verdict, model, gfp.  Output is a single JSON
report on stdout with deterministic key order; Hasse diagrams go to DOT
files via --dot.  Exit codes: 0 ok, 2 parse error, 3 domain error,
4 resource error.

Caps are configurable through environment variables: NINFTY_ORDER_CAP
(element enumeration), NINFTY_LATTICE_CAP (subgroup enumeration),
NINFTY_NMAX (operad family levels), NINFTY_TS_CAP (transfer-system
subgroup count).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .burnside import idempotents, table_of_marks
from .catalog import parse_group, structure_name
from .compatibility import check_compatibility, lifting_verdict
from .errors import DomainError, NinftyError, ParseError
from .groups import (
    LATTICE_ORDER_CAP,
    ORDER_CAP,
    enumerate_subgroups,
    format_perm,
    fraction_str,
    full_subgroup,
)
from .gsets import hset_structures, orbit_gset
from .model import algebraic_model, fixed_point_module
from .operads import (
    FAMILY_N_MAX,
    TRANSFER_SUBGROUP_CAP,
    OperadModel,
    PermutationUniverse,
    enumerate_transfer_systems,
)
from .spectra import format_spectrum, isotropy, parse_spectrum


def _env_int(name, default):
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"environment variable {name} must be an integer") from None


def _load_lattice(spec):
    order_cap = _env_int("NINFTY_ORDER_CAP", ORDER_CAP)
    lattice_cap = _env_int("NINFTY_LATTICE_CAP", LATTICE_ORDER_CAP)
    G = parse_group(spec, order_cap=order_cap)
    return G, enumerate_subgroups(G, max_order=lattice_cap)


def _group_summary(G, lattice):
    return {
        "name": G.name or "custom",
        "order": G.order,
        "classes": lattice.n_classes,
    }


def _report(command, G, lattice, result):
    return {
        "command": command,
        "group": _group_summary(G, lattice),
        "result": result,
    }


def _emit(report):
    print(json.dumps(report, indent=2))


def _build_operad(lattice, kind, universe_spec):
    if kind == "e1":
        return OperadModel.minimal(lattice)
    if kind == "eG":
        return OperadModel.maximal(lattice)
    if kind == "geometric":
        if not universe_spec:
            raise DomainError("geometric operads need --universe G/K[,G/L...]")
        gens = []
        for part in universe_spec.split(","):
            part = part.strip()
            if "/" in part:
                gname, klabel = part.split("/", 1)
                name = lattice.group.name
                if name and gname.upper() != name.upper():
                    raise ParseError(
                        f"universe orbit {part!r} names group {gname!r}, "
                        f"expected {name!r}"
                    )
            else:
                klabel = part
            c = lattice.class_by_label(klabel)
            gens.append(orbit_gset(lattice.group, lattice.class_reps[c]))
        universe = PermutationUniverse(lattice, gens)
        return OperadModel.geometric(
            lattice, universe, name=f"geometric({universe_spec})"
        )
    raise DomainError(f"unknown operad kind {kind!r}")


def _operad_nmax(O, nmax_opt):
    n = _env_int("NINFTY_NMAX", FAMILY_N_MAX)
    if nmax_opt is not None:
        n = nmax_opt
    O.n_max = max(O.n_max, n)
    return n


# ---------------------------------------------------------------------------
# verbs

def _cmd_marks(args):
    G, lattice = _load_lattice(args.group)
    tom = table_of_marks(lattice)
    result = {
        "class_labels": list(tom.labels()),
        "matrix": [list(row) for row in tom.matrix],
    }
    if args.dot:
        _write_lattice_dot(lattice, args.dot)
        result["dot"] = args.dot
    _emit(_report("marks", G, lattice, result))
    return 0


def _cmd_idempotents(args):
    G, lattice = _load_lattice(args.group)
    tom = table_of_marks(lattice)
    labels = list(tom.labels())
    items = []
    for lbl, e in zip(labels, idempotents(tom)):
        items.append(
            {"class": lbl, "coefficients": [fraction_str(c) for c in e.coeffs]}
        )
    result = {
        "class_labels": labels,
        "basis": [f"[{G.name or 'G'}/{lbl}]" for lbl in labels],
        "idempotents": items,
    }
    _emit(_report("idempotents", G, lattice, result))
    return 0


def _cmd_weyl(args):
    G, lattice = _load_lattice(args.group)
    c = lattice.class_by_label(args.subgroup)
    H = lattice.class_reps[c]
    w = lattice.weyl(H)
    result = {
        "subgroup": lattice.class_labels()[c],
        "normalizer_order": w.normalizer.order,
        "weyl": {
            "name": structure_name(full_subgroup(w.group)),
            "order": w.group.order,
            "degree": w.group.degree,
            "generators": [format_perm(p) for p in w.group.generators],
        },
    }
    _emit(_report("weyl", G, lattice, result))
    return 0


def _cmd_hsets(args):
    G, lattice = _load_lattice(args.group)
    if args.n < 1:
        raise DomainError("H-set size must be a positive integer")
    c = lattice.class_by_label(args.subgroup)
    H = lattice.class_reps[c]
    structures = hset_structures(lattice, H, args.n)
    result = {
        "subgroup": lattice.class_labels()[c],
        "n": args.n,
        "structures": [T.describe() for T in structures],
    }
    _emit(_report("hsets", G, lattice, result))
    return 0


def _cmd_operad(args):
    G, lattice = _load_lattice(args.group)
    O = _build_operad(lattice, args.kind, args.universe)
    _operad_nmax(O, None)
    members = O.family(args.family)
    labels = lattice.class_labels()
    result = {
        "kind": O.name,
        "n": args.family,
        "members": [
            {
                "H": labels[m.h_class],
                "orbit_type": m.describe(),
                "graph_order": m.graph.order,
            }
            for m in members
        ],
    }
    _emit(_report("operad", G, lattice, result))
    return 0


def _cmd_transfer_systems(args):
    G, lattice = _load_lattice(args.group)
    cap = _env_int("NINFTY_TS_CAP", TRANSFER_SUBGROUP_CAP)
    systems = enumerate_transfer_systems(lattice, max_subgroups=cap)
    result = {"count": len(systems)}
    nodes = _node_names(lattice)
    if not args.count_only:
        result["systems"] = [
            [[nodes[i], nodes[j]] for (i, j) in ts.sorted_pairs()] for ts in systems
        ]
    if args.dot:
        _write_transfer_dot(lattice, systems, args.dot)
        result["dot"] = args.dot
    _emit(_report("transfer-systems", G, lattice, result))
    return 0


def _cmd_isotropy(args):
    G, lattice = _load_lattice(args.group)
    X = parse_spectrum(args.expr, G, lattice)
    iso = isotropy(X, lattice)
    result = {
        "expression": format_spectrum(X, lattice),
        "classes": iso.labels(),
        "free": iso.is_free,
    }
    _emit(_report("isotropy", G, lattice, result))
    return 0


def _violation_json(lattice, v):
    names = lattice.class_labels()
    return {
        "H": names[lattice.class_index(v.H)],
        "K": names[lattice.class_index(v.K)],
        "size": v.size,
    }


def _cmd_compatible(args):
    G, lattice = _load_lattice(args.group)
    O = _build_operad(lattice, args.operad, args.universe)
    nmax = _operad_nmax(O, args.nmax)
    X = parse_spectrum(args.spectrum, G, lattice)
    mode = "direct-per-n" if args.mode == "direct" else "orbit-reduction"
    n_max = nmax if (mode == "direct-per-n" or args.nmax is not None) else None
    report = check_compatibility(O, X, mode=mode, n_max=n_max)
    result = {
        "operad": O.name,
        "spectrum": format_spectrum(X, lattice),
        "compatible": report.compatible,
        "method": report.method,
        "n_checked": report.n_checked,
        "violations": [_violation_json(lattice, v) for v in report.violations],
    }
    _emit(_report("compatible", G, lattice, result))
    return 0


def _cmd_verdict(args):
    G, lattice = _load_lattice(args.group)
    O = _build_operad(lattice, args.operad, args.universe)
    _operad_nmax(O, None)
    X = parse_spectrum(args.spectrum, G, lattice)
    v = lifting_verdict(O, X)
    names = lattice.class_labels()
    witness = None
    if v.witness is not None:
        klabel = names[lattice.class_index(v.witness.K)]
        witness = {"K": klabel, "orbit": f"{klabel}/1", "level": v.witness.level}
    result = {
        "operad": O.name,
        "spectrum": format_spectrum(X, lattice),
        "verdict": v.tag,
        "citation": v.citation,
        "witness": witness,
    }
    _emit(_report("verdict", G, lattice, result))
    return 0


def _cmd_model(args):
    G, lattice = _load_lattice(args.group)
    desc = algebraic_model(G, lattice)
    names = lattice.class_labels()
    result = {
        "factors": [
            {
                "class": names[f.class_index],
                "label": f.label,
                "weyl": {
                    "order": f.weyl.order,
                    "generators": [format_perm(p) for p in f.weyl.generators],
                },
            }
            for f in desc.factors
        ]
    }
    _emit(_report("model", G, lattice, result))
    return 0


def _cmd_gfp(args):
    G, lattice = _load_lattice(args.group)
    X = parse_spectrum(args.expr, G, lattice)
    names = lattice.class_labels()
    if args.cls is not None:
        classes = [lattice.class_by_label(args.cls)]
    else:
        classes = list(range(lattice.n_classes))
    modules = []
    for c in classes:
        m = fixed_point_module(X, c, lattice)
        modules.append(
            {
                "class": names[c],
                "dimension": m.dimension,
                "weyl_order": m.wset.group.order,
                "orbit_count": m.orbit_count,
                "orbits": [list(orb) for orb in m.wset.orbits()],
            }
        )
    result = {"expression": format_spectrum(X, lattice), "modules": modules}
    _emit(_report("gfp", G, lattice, result))
    return 0


# ---------------------------------------------------------------------------
# DOT output

def _node_names(lattice):
    names = lattice.class_labels()
    return [
        f"{names[lattice.class_of[i]]}#{i}" for i in range(len(lattice.subgroups))
    ]


def _write_lattice_dot(lattice, path):
    nodes = _node_names(lattice)
    lines = ["digraph lattice {", "  rankdir=BT;"]
    for nm in nodes:
        lines.append(f'  "{nm}";')
    for i, j in lattice.cover_pairs():
        lines.append(f'  "{nodes[i]}" -> "{nodes[j]}";')
    lines.append("}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def _write_transfer_dot(lattice, systems, path):
    nodes = _node_names(lattice)
    chunks = []
    for k, ts in enumerate(systems):
        lines = [f"digraph transfer_{k} {{", "  rankdir=BT;"]
        for nm in nodes:
            lines.append(f'  "{nm}";')
        for i, j in lattice.cover_pairs():
            lines.append(f'  "{nodes[i]}" -> "{nodes[j]}" [style=dotted];')
        for i, j in ts.sorted_pairs():
            lines.append(f'  "{nodes[i]}" -> "{nodes[j]}" [color=blue];')
        lines.append("}")
        chunks.append("\n".join(lines))
    with open(path, "w") as fh:
        fh.write("\n\n".join(chunks) + "\n")


# ---------------------------------------------------------------------------
# entry point

def _build_parser():
    top = argparse.ArgumentParser(
        prog="ninfty",
        description="Exact equivariant-operad combinatorics over finite groups.",
    )
    sub = top.add_subparsers(dest="verb", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("group", help="catalog name (C6, S3, ...) or cycle generators")
        return p

    p = add("marks", _cmd_marks, help="table of marks")
    p.add_argument("--dot", help="write the subgroup-lattice Hasse diagram here")

    add("idempotents", _cmd_idempotents, help="Burnside idempotents, exact fractions")

    p = add("weyl", _cmd_weyl, help="Weyl group of a subgroup class")
    p.add_argument("subgroup", help="subgroup class label, e.g. C2")

    p = add("hsets", _cmd_hsets, help="H-set structures on n letters")
    p.add_argument("subgroup", help="subgroup class label")
    p.add_argument("n", type=int)

    p = add("operad", _cmd_operad, help="materialize an operad family")
    p.add_argument("--kind", choices=["e1", "eG", "geometric"], required=True)
    p.add_argument("--universe", help="comma-separated orbits, e.g. C6/C2")
    p.add_argument("--family", type=int, required=True, metavar="N")

    p = add("transfer-systems", _cmd_transfer_systems, help="enumerate transfer systems")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--dot", help="write one Hasse diagram per system here")

    p = add("isotropy", _cmd_isotropy, help="geometric isotropy of an expression")
    p.add_argument("expr", help="e.g. 'orbit:C6/C2 v idem:(C3)'")

    p = add("compatible", _cmd_compatible, help="operad-spectrum compatibility")
    p.add_argument("--operad", choices=["e1", "eG", "geometric"], required=True)
    p.add_argument("--universe")
    p.add_argument("--spectrum", required=True)
    p.add_argument("--mode", choices=["orbit", "direct"], default="orbit")
    p.add_argument("--nmax", type=int)

    p = add("verdict", _cmd_verdict, help="lifted-model-structure verdict")
    p.add_argument("--operad", choices=["e1", "eG", "geometric"], required=True)
    p.add_argument("--universe")
    p.add_argument("--spectrum", required=True)

    add("model", _cmd_model, help="by-Weyl-group factor list")

    p = add("gfp", _cmd_gfp, help="geometric fixed-point modules of an orbit wedge")
    p.add_argument("expr")
    p.add_argument("--class", dest="cls", help="restrict to one subgroup class")

    return top


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except NinftyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
