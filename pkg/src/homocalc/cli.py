"""Command-line front end.

Exit status: 0 on success, 1 when an input fails validation (``d o d != 0``,
a non-chain map, an invalid simplicial map, the entry budget), 2 when the
input cannot be parsed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import derived, io, simplicial
from .algebra import FgAbGroup, SubquotientError
from .complexes import ChainComplex, ComplexError, GradedGroup, cohomology, hom_complex, shift, tensor
from .maps import (
    ChainMapError,
    ExactnessError,
    cone,
    find_homotopy,
    induced_on_homology,
    is_quasi_iso,
    les_of_triangle,
    triangle_of,
)


class UsageError(Exception):
    pass


def _group_json(k, g: FgAbGroup) -> dict:
    return {"degree": k, **g.to_json()}


def _graded_json(H: GradedGroup, degree=None) -> list:
    keys = sorted(H) if degree is None else [degree]
    return [_group_json(k, H[k]) for k in keys]


def _graded_text(H: GradedGroup, symbol="H_", degree=None, descending=True) -> str:
    if degree is not None:
        return f"{symbol}{degree} = {H[degree]}"
    return H.format(symbol, descending=descending)


def _parse_group(text: str) -> FgAbGroup:
    try:
        return FgAbGroup.parse(text)
    except ValueError as exc:
        raise io.FormatError(str(exc)) from None


class Output:
    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.payload: dict = {}
        self.lines: list[str] = []

    def emit(self):
        if self.as_json:
            print(json.dumps(self.payload))
        else:
            for line in self.lines:
                print(line)


def _complex_result(out: Output, C: ChainComplex, args, symbol="H_"):
    C.validate()
    io.check_budget(C.total_entries(), "result")
    H = C.homology()
    out.payload["complex"] = io.complex_to_json(C)
    out.payload["homology"] = _graded_json(H, args.degree)
    out.lines.append("complex: " + io.dumps_complex(C))
    out.lines.append(_graded_text(H, symbol, args.degree))


def cmd_homology(args, out):
    C = io.load_complex(args.complex)
    H = C.homology()
    out.payload["homology"] = _graded_json(H, args.degree)
    out.lines.append(_graded_text(H, "H_", args.degree))


def cmd_cohomology(args, out):
    C = io.load_complex(args.complex)
    C.validate()
    H = cohomology(C)
    out.payload["cohomology"] = _graded_json(H, args.degree)
    out.lines.append(_graded_text(H, "H^", args.degree))


def cmd_validate(args, out):
    C = io.load_complex(args.complex)
    C.validate()
    out.payload["valid"] = True
    out.lines.append("ok")


def cmd_shift(args, out):
    C = io.load_complex(args.complex)
    C.validate()
    _complex_result(out, shift(C, args.n), args)


def cmd_cone(args, out):
    f = io.load_chain_map(args.map)
    f.validate()
    _complex_result(out, cone(f), args)


def cmd_quasi_iso(args, out):
    f = io.load_chain_map(args.map)
    report = is_quasi_iso(f)
    induced = induced_on_homology(f)
    out.payload["quasi_isomorphism"] = report.is_quasi_iso
    out.payload["per_degree"] = {
        str(k): {"source": str(induced[k].source), "target": str(induced[k].target),
                 "matrix": induced[k].matrix.tolist(), "isomorphism": iso}
        for k, iso in report.per_degree.items()}
    out.payload["cone_homology"] = _graded_json(report.cone_homology)
    out.lines.append(f"quasi-isomorphism: {'yes' if report else 'no'}")
    for k, iso in report.per_degree.items():
        h = induced[k]
        out.lines.append(f"H_{k}: {h.source} -> {h.target} {h.matrix.tolist()}"
                         f"{'  iso' if iso else ''}")
    out.lines.append("cone: " + report.cone_homology.format())


def cmd_homotopy(args, out):
    f = io.load_chain_map(args.map_a)
    g = io.load_chain_map(args.map_b)
    if f.source != g.source or f.target != g.target:
        raise ChainMapError(0, "the two maps must have the same source and target")
    s = find_homotopy(f, g)
    out.payload["homotopic"] = s is not None
    if s is None:
        out.lines.append("no homotopy over Z")
        return
    comps = {str(k): m.tolist() for k, m in s.components.items()}
    out.payload["homotopy"] = comps
    out.lines.append("homotopy found (s_i : A_i -> B_{i+1}): " + json.dumps(comps))


def cmd_les(args, out):
    f = io.load_chain_map(args.map)
    T = triangle_of(f)
    seq = les_of_triangle(T)
    out.payload["cone"] = io.complex_to_json(T.C)
    out.payload["exact"] = True
    nodes = []
    for k, (label, g) in enumerate(zip(seq.labels, seq.groups)):
        node = {"label": label, **g.to_json()}
        if k < len(seq.maps):
            node["map_to_next"] = seq.maps[k].matrix.tolist()
        nodes.append(node)
    out.payload["sequence"] = nodes
    out.lines.append("cone: " + io.dumps_complex(T.C))
    for k, (label, g) in enumerate(zip(seq.labels, seq.groups)):
        name = "0" if label == "0" else f"{label} = {g}"
        if k < len(seq.maps):
            out.lines.append(f"{name}  --{seq.maps[k].matrix.tolist()}-->")
        else:
            out.lines.append(name)
    out.lines.append("exact: yes")


def _estimate_tensor(C, D):
    ranks = {}
    for i, a in C.ranks.items():
        for j, b in D.ranks.items():
            ranks[i + j] = ranks.get(i + j, 0) + a * b
    return io.entries_for_ranks(ranks)


def _estimate_hom(C, D):
    ranks = {}
    for i, a in C.ranks.items():
        for j, b in D.ranks.items():
            ranks[j - i] = ranks.get(j - i, 0) + a * b
    return io.entries_for_ranks(ranks)


def cmd_tensor(args, out):
    C, D = io.load_complex(args.c1), io.load_complex(args.c2)
    C.validate()
    D.validate()
    io.check_budget(_estimate_tensor(C, D), "tensor product")
    _complex_result(out, tensor(C, D), args)


def cmd_hom(args, out):
    C, D = io.load_complex(args.c1), io.load_complex(args.c2)
    C.validate()
    D.validate()
    io.check_budget(_estimate_hom(C, D), "Hom complex")
    _complex_result(out, hom_complex(C, D), args)


def cmd_simplicial_homology(args, out):
    X = io.load_simplicial(args.complex)
    io.check_budget(sum(X.count(k) * X.count(k - 1) for k in range(1, X.dimension + 1)))
    H = simplicial.reduced_homology(X) if args.reduced else simplicial.homology(X)
    out.payload["reduced"] = bool(args.reduced)
    out.payload["homology"] = _graded_json(H, args.degree)
    out.lines.append(_graded_text(H, "H~_" if args.reduced else "H_", args.degree))


def cmd_suspend(args, out):
    X = io.load_simplicial(args.complex)
    S = simplicial.suspension(X)
    H = simplicial.reduced_homology(S) if args.reduced else simplicial.homology(S)
    out.payload["simplicial_complex"] = io.simplicial_to_json(S)
    out.payload["homology"] = _graded_json(H, args.degree)
    out.lines.append("suspension: " + json.dumps(io.simplicial_to_json(S)))
    out.lines.append(_graded_text(H, "H~_" if args.reduced else "H_", args.degree))


def cmd_simplicial_map_cone(args, out):
    f = io.load_simplicial_map(args.map)
    _complex_result(out, simplicial.mapping_cone_complex(f), args)


def _derived_degrees(args):
    if args.degree is not None:
        if args.degree < 0:
            raise UsageError("degree must be nonnegative")
        return [args.degree]
    return [0, 1]


def cmd_tor(args, out):
    A, B = _parse_group(args.a), _parse_group(args.b)
    values = {i: derived.tor(A, B, i) for i in _derived_degrees(args)}
    out.payload["tor"] = [_group_json(i, g) for i, g in values.items()]
    out.lines.append(", ".join(f"Tor_{i} = {g}" for i, g in values.items()))


def cmd_ext(args, out):
    A, B = _parse_group(args.a), _parse_group(args.b)
    values = {i: derived.ext(A, B, i) for i in _derived_degrees(args)}
    out.payload["ext"] = [_group_json(i, g) for i, g in values.items()]
    out.lines.append(", ".join(f"Ext^{i} = {g}" for i, g in values.items()))


def cmd_resolve(args, out):
    A = _parse_group(args.group)
    res = derived.free_resolution(A)
    out.payload["group"] = str(A)
    _complex_result(out, res.complex, args)


def cmd_koszul(args, out):
    if not args.elements:
        raise UsageError("koszul needs at least one integer")
    _complex_result(out, derived.koszul(args.elements), args)


COMMANDS = {
    "homology": (cmd_homology, ["complex"], "homology of a complex"),
    "cohomology": (cmd_cohomology, ["complex"], "cohomology (homology of the dual)"),
    "validate": (cmd_validate, ["complex"], "check shapes and d o d = 0"),
    "shift": (cmd_shift, ["complex", "n:int"], "shift a complex n places"),
    "cone": (cmd_cone, ["map"], "mapping cone of a chain map"),
    "quasi-iso": (cmd_quasi_iso, ["map"], "decide whether a chain map is a quasi-isomorphism"),
    "homotopy": (cmd_homotopy, ["map_a", "map_b"], "search for an integer chain homotopy"),
    "les": (cmd_les, ["map"], "exact triangle and long exact sequence of a chain map"),
    "tensor": (cmd_tensor, ["c1", "c2"], "tensor product of complexes"),
    "hom": (cmd_hom, ["c1", "c2"], "Hom complex"),
    "simplicial-homology": (cmd_simplicial_homology, ["complex"], "homology of a simplicial complex"),
    "suspend": (cmd_suspend, ["complex"], "suspension of a simplicial complex"),
    "simplicial-map-cone": (cmd_simplicial_map_cone, ["map"], "algebraic cone of a simplicial map"),
    "tor": (cmd_tor, ["a", "b"], "Tor of two groups, e.g. tor Z/4 Z/6"),
    "ext": (cmd_ext, ["a", "b"], "Ext of two groups, e.g. ext Z/6 Z"),
    "resolve": (cmd_resolve, ["group"], "free resolution of a group, e.g. resolve Z+Z/6"),
    "koszul": (cmd_koszul, ["elements:int*"], "Koszul complex of a tuple of integers"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--reduced", action="store_true", default=argparse.SUPPRESS,
                        help="reduced homology (simplicial commands)")
    common.add_argument("--degree", type=int, default=argparse.SUPPRESS,
                        help="report a single degree")
    parser = argparse.ArgumentParser(prog="homocalc", parents=[common],
                                     description="Exact homological algebra over the integers.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for name, (func, params, help_) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_, description=help_)
        p.set_defaults(func=func)
        for param in params:
            pname, _, kind = param.partition(":")
            if kind == "int":
                p.add_argument(pname, type=int)
            elif kind == "int*":
                p.add_argument(pname, type=int, nargs="+")
            else:
                p.add_argument(pname)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for flag, default in (("json", False), ("reduced", False), ("degree", None)):
        if not hasattr(args, flag):
            setattr(args, flag, default)
    out = Output(args.json)
    try:
        args.func(args, out)
    except (io.FormatError, UsageError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (ComplexError, ChainMapError) as exc:
        print(f"validation error at {exc}", file=sys.stderr)
        return 1
    except (simplicial.SimplicialError, io.BudgetError, SubquotientError) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 1
    except ExactnessError as exc:
        print(f"internal invariant broken: {exc}", file=sys.stderr)
        return 3
    out.emit()
    return 0


if __name__ == "__main__":
    sys.exit(main())
