"""File formats: diagrams as JSON documents, matrices and relations as
line-oriented dumps.

A diagram document has fields ``nodes`` (list of ``{id, kind, phase}``
records; kind in Z, X, H, STAR, HS; phase an integer 0..7 for quantum
spiders and a two-character bit string for toy spiders, omitted for boxes
and stars), ``edges`` (list of id pairs; duplicates encode parallel
wires), and ordered ``inputs``/``outputs`` lists of boundary ids.
"""

from __future__ import annotations

import json

from . import diagram as dg
from .diagram import Diagram
from .gslc import GsLc
from . import clifford as cl


class ParseError(ValueError):
    pass


def diagram_to_json(d: Diagram) -> str:
    c = d.compact()
    nodes = []
    for v in sorted(c.nodes):
        kind, phase = c.nodes[v]
        rec: dict = {"id": v, "kind": kind}
        if kind in dg.SPIDER_KINDS:
            rec["phase"] = f"{phase[0]}{phase[1]}" if c.toy else phase
        nodes.append(rec)
    doc = {
        "nodes": nodes,
        "edges": [[a, b] for a, b in c.edges],
        "inputs": list(c.inputs),
        "outputs": list(c.outputs),
    }
    return json.dumps(doc, indent=2)


def diagram_from_json(text: str) -> Diagram:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not a JSON document: {exc}") from exc
    for fieldname in ("nodes", "edges", "inputs", "outputs"):
        if fieldname not in doc:
            raise ParseError(f"missing field {fieldname!r}")
    toy = any(rec.get("kind") == dg.HS or isinstance(rec.get("phase"), str)
              for rec in doc["nodes"])
    d = Diagram(toy=toy)
    for i, rec in enumerate(doc["nodes"]):
        if "id" not in rec or "kind" not in rec:
            raise ParseError(f"node {i}: needs id and kind")
        vid, kind = rec["id"], rec["kind"]
        if kind not in (dg.TOY_KINDS if toy else dg.ZX_KINDS):
            raise ParseError(f"node {i}: unknown kind {kind!r}")
        phase = rec.get("phase")
        if kind in dg.SPIDER_KINDS:
            if toy:
                if not (isinstance(phase, str) and len(phase) == 2
                        and set(phase) <= {"0", "1"}):
                    raise ParseError(f"node {i}: toy phase must be two bits")
                phase = (int(phase[0]), int(phase[1]))
            else:
                if not isinstance(phase, int) or not 0 <= phase <= 7:
                    raise ParseError(f"node {i}: phase must be 0..7")
        elif phase is not None:
            raise ParseError(f"node {i}: {kind} nodes carry no phase")
        if vid in d.nodes:
            raise ParseError(f"node {i}: duplicate id {vid}")
        d.nodes[vid] = (kind, phase)
    d.inputs = list(doc["inputs"])
    d.outputs = list(doc["outputs"])
    for i, pair in enumerate(doc["edges"]):
        if len(pair) != 2:
            raise ParseError(f"edge {i}: needs two endpoints")
        d.add_edge(int(pair[0]), int(pair[1]))
    try:
        d.validate()
    except dg.DiagramError as exc:
        raise ParseError(str(exc)) from exc
    return d


def matrix_dump(m) -> str:
    lines = [f"matrix {m.rows}x{m.cols}"]
    for row in m.entries:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines)


def relation_dump(r) -> str:
    lines = [f"relation {r.rows}x{r.cols}"]
    for row in r.grid():
        lines.append("".join(str(x) for x in row))
    return "\n".join(lines)


def gslc_dump(g: GsLc) -> str:
    if g.zero:
        return f"zero qubits={g.zero_arity}"
    pos = {v: i for i, v in enumerate(g.order)}
    lines = [f"gslc qubits={g.n} scalar={g.scalar}"]
    for v in g.order:
        row = ["0"] * g.n
        for u in g.adj[v]:
            row[pos[u]] = "1"
        word = " ".join(f"{k}{p}" for k, p in cl.c1_word(g.vops[v])) or "I"
        lines.append(f"{''.join(row)}  vop={word}")
    return "\n".join(lines)


def gslo_dump(g) -> str:
    from .toynf import OP_WORDS
    if g.zero:
        return f"zero toybits={g.zero_arity}"
    pos = {v: i for i, v in enumerate(g.order)}
    lines = [f"gslo toybits={g.n}"]
    for v in g.order:
        row = ["0"] * g.n
        for u in g.adj[v]:
            row[pos[u]] = "1"
        toks = []
        for kind, ph in OP_WORDS[g.vops[v]]:
            toks.append("HS" if kind == dg.HS else f"{kind}{ph[0]}{ph[1]}")
        lines.append(f"{''.join(row)}  vop={' '.join(toks) or 'I'}")
    return "\n".join(lines)


def bits_from_text(text: str) -> list[list[int]]:
    rows = []
    for ln, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if set(line) - {"0", "1"}:
            raise ParseError(f"line {ln}: expected 0/1 characters")
        rows.append([int(c) for c in line])
    if not rows:
        raise ParseError("no rows found")
    if any(len(r) != len(rows[0]) for r in rows):
        raise ParseError("ragged rows")
    return rows


def bits_to_text(bits: list[list[int]]) -> str:
    return "\n".join("".join(str(x) for x in row) for row in bits)
