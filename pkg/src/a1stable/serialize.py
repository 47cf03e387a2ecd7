"""Text formats for modules: JSON module files, DOT graphs and ASCII diagrams."""

from __future__ import annotations

import json

import numpy as np

from .gf2 import BitMatrix
from .module import GradedModule


def module_to_dict(m: GradedModule, provenance: dict | None = None) -> dict:
    actions = {}
    for g, gd in m.algebra.generators:
        mats = []
        for d in m.degrees:
            if d + gd > m.hi:
                mats.append([])
            else:
                mats.append(m.action(g, d).tolist())
        actions[g] = mats
    out = {
        "algebra": m.algebra.name,
        "name": m.name,
        "window": {"lo": m.lo, "hi": m.hi},
        "trusted": {"lo": m.trusted[0], "hi": m.trusted[1]},
        "bounded": {"below": m.bounded_below, "above": m.bounded_above},
        "dims": list(m.dims),
    }
    if m.labels is not None:
        out["labels"] = [list(x) for x in m.labels]
    out["actions"] = actions
    if provenance:
        out["provenance"] = provenance
    return out


def module_from_dict(data: dict) -> GradedModule:
    lo = int(data["window"]["lo"])
    hi = int(data["window"]["hi"])
    dims = [int(x) for x in data["dims"]]
    if len(dims) != hi - lo + 1:
        raise ValueError(f"dims has {len(dims)} entries for window [{lo}, {hi}]")
    from .algebra import get_algebra
    alg = get_algebra(data["algebra"])
    actions = {}
    for g, gd in alg.generators:
        mats = data.get("actions", {}).get(g)
        if mats is None:
            raise ValueError(f"missing action for generator {g}")
        if len(mats) != len(dims):
            raise ValueError(f"action {g} lists {len(mats)} matrices for {len(dims)} degrees")
        per = {}
        for i, rows in enumerate(mats):
            d = lo + i
            if d + gd > hi:
                continue
            r, c = dims[d + gd - lo], dims[i]
            arr = np.array(rows, dtype=np.uint8).reshape(r, c)
            if arr.size and arr.max() > 1:
                raise ValueError(f"{g} at degree {d}: entries must be 0 or 1")
            per[d] = BitMatrix.from_dense(arr)
        actions[g] = per
    bounded = data.get("bounded", {})
    trusted = data.get("trusted", {"lo": lo, "hi": hi})
    m = GradedModule(alg, lo, dims, actions,
                     trusted=(int(trusted["lo"]), int(trusted["hi"])),
                     labels=data.get("labels"),
                     bounded_below=bool(bounded.get("below", True)),
                     bounded_above=bool(bounded.get("above", False)),
                     name=data.get("name", ""))
    if "provenance" in data:
        m.provenance = data["provenance"]
    return m


def dumps(m: GradedModule, provenance: dict | None = None) -> str:
    if provenance is None:
        provenance = getattr(m, "provenance", None)
    return json.dumps(module_to_dict(m, provenance), separators=(",", ":")) + "\n"


def loads(text: str) -> GradedModule:
    return module_from_dict(json.loads(text))


def load(path) -> GradedModule:
    with open(path) as fh:
        return loads(fh.read())


def save(m: GradedModule, path, provenance: dict | None = None) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(m, provenance))


def _edges(m: GradedModule):
    for g, gd in m.algebra.generators:
        for d in m.degrees:
            if d + gd > m.hi:
                continue
            mat = m.action(g, d).to_dense()
            for i, j in zip(*np.nonzero(mat)):
                yield g, (d, int(j)), (d + gd, int(i))


def to_dot(m: GradedModule) -> str:
    """Graphviz drawing: one rank per degree, Sq1/Q0 straight, the other generator curved."""
    first = m.algebra.generators[0][0]
    lines = [f'digraph "{m.name or "module"}" {{', "  rankdir=BT;", "  node [shape=point];"]
    for d in m.degrees:
        if not m.dim(d):
            continue
        names = " ".join(f'"{d}_{i}"' for i in range(m.dim(d)))
        lines.append(f"  {{ rank=same; {names} }}")
        for i in range(m.dim(d)):
            lines.append(f'  "{d}_{i}" [xlabel="{m.label(d, i)}"];')
    for g, (d, j), (e, i) in _edges(m):
        style = "" if g == first else f' [label="{g}", style=dashed, constraint=false]'
        lines.append(f'  "{d}_{j}" -> "{e}_{i}"{style};')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_ascii(m: GradedModule) -> str:
    """One row per degree (top first): a dot per basis element, then the edges.

    Basis elements hit by no generator are drawn as open dots ``o``; the
    others as solid dots ``*``, in the style of hand-drawn module pictures.
    """
    hit: set[tuple[int, int]] = set()
    out_edges: dict[tuple[int, int], list[str]] = {}
    for g, src, dst in _edges(m):
        hit.add(dst)
        out_edges.setdefault(src, []).append(f"{g}->{dst[0]}.{dst[1]}")
    tlo, thi = m.trusted
    lines = [f"{m.name or 'module'} over {m.algebra.name}  window [{m.lo}, {m.hi}]  trusted [{tlo}, {thi}]"]
    for d in reversed(list(m.degrees)):
        n = m.dim(d)
        dots = " ".join("*" if (d, i) in hit else "o" for i in range(n))
        edges = "  ".join(
            f"{i}: " + ",".join(out_edges[(d, i)]) for i in range(n) if (d, i) in out_edges)
        mark = " " if tlo <= d <= thi else "?"
        lines.append(f"{d:>5}{mark}| {dots:<12} {edges}".rstrip())
    return "\n".join(lines) + "\n"
