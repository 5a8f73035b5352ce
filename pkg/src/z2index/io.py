"""Reading and writing graphs and Z2-complexes.

JSON schemas::

    graph:    {"vertices": [...], "edges": [[u, v], ...]}
    complex:  {"vertices": [...], "maximal_simplices": [[...], ...],
               "involution": {"v": "w", ...}}      # optional, default identity

Labels may be numbers, strings or nested lists (read back as tuples).
Involution keys are the label itself for strings and the JSON text of the
label otherwise (so vertex 3 is keyed "3" and (0, 1) is keyed "[0, 1]").
"""

from __future__ import annotations

import csv
import io as _io
import json
import warnings
from pathlib import Path

from .complexes import SimplicialComplex, Z2Complex
from .config import InputError
from .graphs import Graph
from .posets import Poset


def encode_label(v):
    if isinstance(v, tuple):
        return [encode_label(x) for x in v]
    return v


def decode_label(v):
    if isinstance(v, list):
        return tuple(decode_label(x) for x in v)
    if isinstance(v, dict) or v is None:
        raise InputError(f"unsupported vertex label {v!r}")
    return v


def label_key(v) -> str:
    return v if isinstance(v, str) else json.dumps(encode_label(v))


def _parse(text: str, source: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _vertices(data, source):
    vs = data.get("vertices")
    if not isinstance(vs, list):
        raise InputError(f"{source}: field 'vertices' must be a list")
    out = [decode_label(v) for v in vs]
    if len(set(out)) != len(out):
        raise InputError(f"{source}: field 'vertices' has duplicate labels")
    return out


def graph_from_json(data: dict, source: str = "<graph>") -> Graph:
    vs = _vertices(data, source)
    known = set(vs)
    raw = data.get("edges", [])
    if not isinstance(raw, list):
        raise InputError(f"{source}: field 'edges' must be a list")
    edges = []
    for i, e in enumerate(raw):
        if not isinstance(e, list) or len(e) != 2:
            raise InputError(f"{source}: edges[{i}] must be a pair")
        u, v = decode_label(e[0]), decode_label(e[1])
        for x in (u, v):
            if x not in known:
                raise InputError(f"{source}: edges[{i}] uses unknown vertex {x!r}")
        edges.append((u, v))
    given = set(edges)
    if any((v, u) not in given for u, v in given):
        warnings.warn(f"{source}: edge list is not symmetric; symmetric closure applied",
                      stacklevel=2)
    return Graph(vs, edges)


def graph_to_json(G: Graph) -> dict:
    return {"vertices": [encode_label(v) for v in G.vertices],
            "edges": [[encode_label(u), encode_label(v)] for u, v in G.edge_list()]}


def complex_from_json(data: dict, source: str = "<complex>") -> Z2Complex:
    vs = _vertices(data, source)
    known = set(vs)
    raw = data.get("maximal_simplices")
    if not isinstance(raw, list):
        raise InputError(f"{source}: field 'maximal_simplices' must be a list")
    facets = []
    for i, s in enumerate(raw):
        if not isinstance(s, list):
            raise InputError(f"{source}: maximal_simplices[{i}] must be a list")
        f = [decode_label(v) for v in s]
        bad = [v for v in f if v not in known]
        if bad:
            raise InputError(f"{source}: maximal_simplices[{i}] uses unknown vertex {bad[0]!r}")
        facets.append(f)
    inv_raw = data.get("involution")
    involution = None
    if inv_raw is not None:
        by_key = {label_key(v): v for v in vs}
        if len(by_key) != len(vs):
            raise InputError(f"{source}: vertex labels collide as involution keys")
        involution = {}
        if isinstance(inv_raw, dict):
            items = list(inv_raw.items())
            for k, w in items:
                if k not in by_key:
                    raise InputError(f"{source}: involution[{k!r}] is not a vertex")
                w = decode_label(w)
                if w not in known:
                    raise InputError(f"{source}: involution[{k!r}] = {w!r} is not a vertex")
                involution[by_key[k]] = w
        elif isinstance(inv_raw, list):
            for i, pair in enumerate(inv_raw):
                if not isinstance(pair, list) or len(pair) != 2:
                    raise InputError(f"{source}: involution[{i}] must be a pair")
                involution[decode_label(pair[0])] = decode_label(pair[1])
        else:
            raise InputError(f"{source}: field 'involution' must be an object or pair list")
        for v in vs:
            involution.setdefault(v, v)
        for v, w in involution.items():
            if involution.get(w) != v:
                raise InputError(f"{source}: involution[{label_key(v)!r}]: "
                                 f"alpha(alpha(v)) != v, not an involution")
    try:
        return Z2Complex(SimplicialComplex(vs, facets), involution)
    except InputError as exc:
        raise InputError(f"{source}: {exc}") from None


def complex_to_json(K) -> dict:
    if isinstance(K, SimplicialComplex):
        K = Z2Complex(K)
    out = {"vertices": [encode_label(v) for v in K.vertices],
           "maximal_simplices": [[encode_label(v) for v in s]
                                 for s in K.complex.maximal_simplices()]}
    if any(K.involution[v] != v for v in K.vertices):
        out["involution"] = {label_key(v): encode_label(K.involution[v]) for v in K.vertices}
    return out


def loads(text: str, source: str = "<string>"):
    data = _parse(text, source)
    if not isinstance(data, dict):
        raise InputError(f"{source}: top level must be an object")
    if "maximal_simplices" in data:
        return complex_from_json(data, source)
    if "edges" in data:
        return graph_from_json(data, source)
    raise InputError(f"{source}: neither 'edges' nor 'maximal_simplices' present")


def load(path) -> Graph | Z2Complex:
    path = Path(path)
    if path.suffix in (".col", ".dimacs"):
        return read_dimacs(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    return loads(text, str(path))


def dumps(obj) -> str:
    data = graph_to_json(obj) if isinstance(obj, Graph) else complex_to_json(obj)
    body = ",\n".join(f" {json.dumps(k)}: {json.dumps(v)}" for k, v in data.items())
    return "{\n" + body + "\n}"


def save(obj, path) -> None:
    Path(path).write_text(dumps(obj) + "\n")


def io_roundtrip(path) -> Graph | Z2Complex:
    """load -> save -> load; raises if the reload differs from the first load."""
    first = load(path)
    again = loads(dumps(first), f"{path} (re-read)")
    if first != again:
        raise InputError(f"{path}: round trip changed the object")
    return again


# --- DIMACS ----------------------------------------------------------------

def read_dimacs(path) -> Graph:
    """DIMACS .col: 'c' comments, 'p edge n m', 'e u v' with vertices 1..n."""
    n = None
    edges = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            parts = line.split()
            if not parts or parts[0] == "c":
                continue
            try:
                if parts[0] == "p":
                    n = int(parts[2])
                elif parts[0] == "e":
                    edges.append((int(parts[1]), int(parts[2])))
                else:
                    raise ValueError(parts[0])
            except (ValueError, IndexError):
                raise InputError(f"{path}: line {lineno}: cannot parse {line.strip()!r}") from None
    if n is None:
        raise InputError(f"{path}: missing 'p edge' line")
    return Graph(range(1, n + 1), edges)


def write_dimacs(G: Graph) -> str:
    pos = {v: i + 1 for i, v in enumerate(G.vertices)}
    und = G.undirected_edges()
    lines = [f"p edge {len(G.vertices)} {len(und)}"]
    lines += [f"e {pos[u]} {pos[v]}" for u, v in und]
    return "\n".join(lines) + "\n"


# --- DOT / CSV -------------------------------------------------------------

def _q(v) -> str:
    return json.dumps(label_key(v))


def to_dot(obj) -> str:
    if isinstance(obj, Graph):
        lines = ["graph G {"]
        lines += [f"  {_q(v)};" for v in obj.vertices]
        lines += [f"  {_q(u)} -- {_q(v)};" for u, v in obj.undirected_edges()]
    elif isinstance(obj, Poset):
        lines = ["digraph P {"]
        lines += [f"  {_q(v)};" for v in obj.elements]
        lines += [f"  {_q(a)} -> {_q(b)};" for a, b in sorted(obj.covers, key=repr)]
    else:
        K = obj if isinstance(obj, Z2Complex) else Z2Complex(obj)
        lines = ["graph K {"]
        lines += [f"  {_q(v)};" for v in K.vertices]
        for e in K.complex.by_dim()[1] if K.dim >= 1 else []:
            lines.append(f"  {_q(e[0])} -- {_q(e[1])};")
        for v in K.vertices:
            w = K.involution[v]
            if K.complex.index(v) < K.complex.index(w):
                lines.append(f"  {_q(v)} -- {_q(w)} [style=dashed, color=gray];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_csv(obj) -> str:
    buf = _io.StringIO()
    w = csv.writer(buf)
    if isinstance(obj, Graph):
        w.writerow(["source", "target"])
        for u, v in obj.undirected_edges():
            w.writerow([label_key(u), label_key(v)])
    else:
        K = obj if isinstance(obj, Z2Complex) else Z2Complex(obj)
        w.writerow(["dimension", "vertices"])
        for s in K.complex.maximal_simplices():
            w.writerow([len(s) - 1, " ".join(label_key(v) for v in s)])
    return buf.getvalue()
