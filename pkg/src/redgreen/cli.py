"""Command-line front end.

Subcommands: interpret, normalize, equal, check-rules, ct-normalize,
check-matrix.  Reports are line-oriented; exit codes are the machine
contract (equal: 0 when the diagrams are equal, 1 otherwise; 2 for usage
and input errors).
"""

from __future__ import annotations

import argparse
import sys

from . import diagram as dg
from . import io as rgio
from . import rules
from .diagram import Diagram
from .gslc import (VerdictKind, diagram_to_gslc, equal_stabilizer,
                   gslc_to_diagram, reduce_to_rgslc)
from .matrix import proportional_equal
from .scalars import ring_to_nf, scalar_diagram, zero_nf_diagram
from .semantics import interpret, interpret_j


def _load(path: str) -> Diagram:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return rgio.diagram_from_json(fh.read())
    except OSError as exc:
        raise SystemExit(f"error: cannot read {path}: {exc}")
    except rgio.ParseError as exc:
        raise SystemExit(f"error: {path}: {exc}")


def _cmd_interpret(args) -> int:
    d = _load(args.file)
    if d.toy:
        if args.j != 1:
            print("error: alternative interpretations apply to quantum "
                  "diagrams only", file=sys.stderr)
            return 2
        from .toy import interpret_toy
        print(rgio.relation_dump(interpret_toy(d)))
        return 0
    m = interpret_j(d, args.j) if args.j != 1 else interpret(d)
    print(rgio.matrix_dump(m))
    if not d.inputs and not d.outputs:
        amp = m.entries[0][0]
        prob = amp * amp.conjugate()
        print(f"amplitude={amp} squared-modulus={prob}")
    return 0


def _emit_normal_diagram(state: Diagram, n_in: int) -> None:
    print("state-form:")
    print(rgio.diagram_to_json(state))
    if n_in:
        print("operator-form:")
        print(rgio.diagram_to_json(dg.unbend_outputs(state, n_in)))


def _coerce_toy(d: Diagram) -> Diagram:
    """Node-free documents are valid in either calculus; retag on demand."""
    if not d.toy and not d.nodes:
        out = d.copy()
        out.toy = True
        return out
    return d


def _cmd_normalize(args) -> int:
    d = _load(args.file)
    if args.form in ("gslo", "rgslo"):
        d = _coerce_toy(d)
    n_in = len(d.inputs)
    form = args.form
    if form in ("gslc", "rgslc"):
        g = diagram_to_gslc(d)
        if not g.zero and form == "rgslc":
            g = reduce_to_rgslc(g)
        print(rgio.gslc_dump(g))
        _emit_normal_diagram(gslc_to_diagram(g), n_in)
        return 0
    if form in ("gslo", "rgslo"):
        from .toynf import diagram_to_gslo, gslo_to_diagram, reduce_to_rgslo
        g = diagram_to_gslo(d)
        if not g.zero and form == "rgslo":
            g = reduce_to_rgslo(g)
        print(rgio.gslo_dump(g))
        _emit_normal_diagram(gslo_to_diagram(g), n_in)
        return 0
    if form == "scalar":
        if d.inputs or d.outputs:
            print("error: --form scalar expects a scalar diagram",
                  file=sys.stderr)
            return 2
        value = interpret(d).entries[0][0]
        nf = ring_to_nf(value)
        print(f"scalar-nf: {nf}")
        print(rgio.diagram_to_json(scalar_diagram(value)))
        return 0
    if form == "zero":
        if d.toy:
            from .toynf import diagram_to_gslo
            zero = diagram_to_gslo(d).zero
        else:
            zero = diagram_to_gslc(d).zero
        if not zero:
            print("error: diagram is not zero", file=sys.stderr)
            return 2
        out = zero_nf_diagram(len(d.inputs), len(d.outputs), toy=d.toy)
        print(f"zero-nf: inputs={len(d.inputs)} outputs={len(d.outputs)}")
        print(rgio.diagram_to_json(out))
        return 0
    if form == "ct":
        from . import cliffordt as ct
        try:
            word = ct.diagram_to_word(d)
        except ct.WordError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        nf = ct.normalize_ct(word)
        print(nf)
        print(rgio.diagram_to_json(ct.word_to_diagram(nf.word())))
        return 0
    raise AssertionError(form)


def _cmd_equal(args) -> int:
    d1 = _load(args.file_a)
    d2 = _load(args.file_b)
    if d1.toy != d2.toy:
        d1, d2 = _coerce_toy(d1), _coerce_toy(d2)
    if d1.toy != d2.toy:
        print("verdict: unequal (different calculi)")
        return 1
    if d1.toy:
        from .toynf import equal_toy
        eq = equal_toy(d1, d2)
        print(f"verdict: {'equal' if eq else 'unequal'}")
        return 0 if eq else 1
    v = equal_stabilizer(d1, d2)
    if v.kind is VerdictKind.EQUAL:
        print("verdict: equal")
        return 0
    if v.kind is VerdictKind.PROPORTIONAL:
        print(f"verdict: proportional ratio={v.ratio} "
              f"nf={ring_to_nf(v.ratio)}")
        return 0 if args.up_to_scalar else 1
    print("verdict: unequal")
    return 1


def _cmd_check_rules(args) -> int:
    if args.fragment == "toy":
        from .toy import audit_soundness_toy
        rows = audit_soundness_toy(args.max_arity)
    else:
        fragment = dg.STABILIZER if args.fragment == "stabilizer" \
            else dg.CLIFFORD_T
        rows = rules.audit_soundness(args.max_arity, fragment)
    failures = 0
    for row in rows:
        status = "PASS" if row.ok else "FAIL"
        failures += 0 if row.ok else 1
        print(f"{status} rule={row.variant} direction={row.direction} "
              f"arity={row.arities} checked={row.checked}")
    print(f"total rows={len(rows)} failures={failures}")
    if args.plot:
        _plot_audit(rows, args.plot)
        print(f"plot written to {args.plot}")
    return 0 if failures == 0 else 1


def _plot_audit(rows, path: str) -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    per_rule: dict[str, list[int]] = {}
    for row in rows:
        entry = per_rule.setdefault(row.variant.rule.value, [0, 0])
        entry[0] += row.checked
        entry[1] += len(row.failures)
    names = sorted(per_rule)
    checked = [per_rule[n][0] for n in names]
    failed = [per_rule[n][1] for n in names]
    fig, ax = plt.subplots(figsize=(10, 4.5))
    ax.bar(names, checked, color="#2a9d8f", label="instances checked")
    if any(failed):
        ax.bar(names, failed, color="#e76f51", label="failures")
    ax.set_ylabel("rule instances")
    ax.set_yscale("log")
    ax.legend()
    plt.setp(ax.get_xticklabels(), rotation=40, ha="right")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _cmd_ct_normalize(args) -> int:
    from . import cliffordt as ct
    try:
        word = ct.parse_word(args.word)
    except ct.WordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(ct.normalize_ct(word))
    return 0


def _cmd_check_matrix(args) -> int:
    from . import checkmatrix as cm

    def load_bits(path):
        try:
            with open(path, "r", encoding="utf-8") as fh:
                return rgio.bits_from_text(fh.read())
        except OSError as exc:
            raise SystemExit(f"error: cannot read {path}: {exc}")
        except rgio.ParseError as exc:
            raise SystemExit(f"error: {path}: {exc}")

    if args.op == "validate":
        s = cm.CheckMatrix.from_rows(load_bits(args.files[0]))
        ok = cm.is_valid(s)
        flags = " rank-deficient" if cm.is_rank_deficient(s) else ""
        print(("valid" if ok else "invalid") + flags)
        return 0 if ok else 1
    if args.op == "to-graph":
        s = cm.CheckMatrix.from_rows(load_bits(args.files[0]))
        try:
            theta, q = cm.to_graph_form(s)
        except cm.NotMaximal as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        print("adjacency:")
        print(rgio.bits_to_text(theta))
        print("local-operation:")
        print(rgio.bits_to_text(q))
        return 0
    if args.op == "orbit-equal":
        a1 = load_bits(args.files[0])
        a2 = load_bits(args.files[1])
        eq = cm.lc_orbit_equal(a1, a2)
        print("orbit-equal" if eq else "orbit-distinct")
        return 0 if eq else 1
    raise AssertionError(args.op)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="redgreen",
        description="Exact rewriting and normal forms for red-green "
                    "graphical calculi.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("interpret", help="print the exact matrix or relation")
    p.add_argument("file")
    p.add_argument("--j", type=int, default=1,
                   help="odd phase multiplier for the alternative functor")
    p.set_defaults(fn=_cmd_interpret)

    p = sub.add_parser("normalize", help="bring a diagram into normal form")
    p.add_argument("--form", required=True,
                   choices=["gslc", "rgslc", "scalar", "zero", "ct",
                            "gslo", "rgslo"])
    p.add_argument("file")
    p.set_defaults(fn=_cmd_normalize)

    p = sub.add_parser("equal", help="decide equality of two diagrams")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--up-to-scalar", action="store_true")
    p.set_defaults(fn=_cmd_equal)

    p = sub.add_parser("check-rules", help="audit rule soundness")
    p.add_argument("--max-arity", type=int, default=2)
    p.add_argument("--fragment", default="cliffordt",
                   choices=["stabilizer", "cliffordt", "toy"])
    p.add_argument("--plot", metavar="FILE",
                   help="write a summary figure alongside the report")
    p.set_defaults(fn=_cmd_check_rules)

    p = sub.add_parser("ct-normalize",
                       help="normal form of a Clifford+T word")
    p.add_argument("word", help="tokens like 'Z1 H X2', phases in pi/4 units")
    p.set_defaults(fn=_cmd_ct_normalize)

    p = sub.add_parser("check-matrix", help="GF(2) check-matrix operations")
    p.add_argument("op", choices=["validate", "to-graph", "orbit-equal"])
    p.add_argument("files", nargs="+")
    p.set_defaults(fn=_cmd_check_matrix)
    return ap


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except dg.FragmentViolation as exc:
        print(f"error: fragment violation: {exc}", file=sys.stderr)
        return 2
    except dg.DiagramError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
