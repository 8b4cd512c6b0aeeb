"""Graphviz DOT rendering of substructures.

Without a baseline, cells of the substructure are solid and the rest of the
ground is dotted grey.  With a baseline, cells present in both are solid,
cells of the baseline that disappeared are dashed and new cells are bold.
"""

from __future__ import annotations

from .lattice import SubStructure, iter_bits, natural_key


def _style(i: int, mask: int, base: int | None) -> str:
    inside = mask >> i & 1
    if base is None:
        return 'style=solid' if inside else 'style=dotted, color=grey'
    was = base >> i & 1
    if inside and was:
        return "style=solid"
    if was:
        return "style=dashed"
    if inside:
        return "style=bold"
    return 'style=dotted, color=grey'


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(d: SubStructure, baseline: SubStructure | None = None, name: str = "morpho") -> str:
    g = d.ground
    lay = g.layout
    base = baseline.mask if baseline is not None else None
    directed = getattr(g, "directed", False)
    lines = [f"{'digraph' if directed else 'graph'} {_q(name)} {{"]
    arrow = "->" if directed else "--"
    for kind in ("element", "vertex"):
        for i in iter_bits(lay.kind_mask(kind)):
            lines.append(f"  {_q(lay.cells[i].id)} [{_style(i, d.mask, base)}];")
    if g.type_name == "graph":
        for i in iter_bits(lay.kind_mask("edge")):
            u, v = g.endpoints(lay.cells[i].id)
            lines.append(f"  {_q(u)} {arrow} {_q(v)} [{_style(i, d.mask, base)}];")
    elif g.type_name == "hypergraph":
        emap = g.edge_map
        for i in iter_bits(lay.kind_mask("hyperedge")):
            n = lay.cells[i].id
            lines.append(f"  subgraph {_q('cluster_' + n)} {{")
            lines.append(f"    label={_q(n)}; {_style(i, d.mask, base)};")
            for v in sorted(emap[n], key=natural_key):
                lines.append(f"    {_q(v)};")
            lines.append("  }")
    elif g.type_name == "complex":
        # draw the 1-skeleton; higher faces become labelled clusters
        for i in iter_bits(lay.kind_mask("face")):
            verts = sorted(g.face_of(lay.cells[i].id), key=natural_key)
            if len(verts) == 2:
                lines.append(f"  {_q(verts[0])} -- {_q(verts[1])} [{_style(i, d.mask, base)}];")
            else:
                lines.append(f"  subgraph {_q('cluster_' + lay.cells[i].id)} {{")
                lines.append(f"    label={_q(lay.cells[i].id)}; {_style(i, d.mask, base)};")
                for v in verts:
                    lines.append(f"    {_q(v)};")
                lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
