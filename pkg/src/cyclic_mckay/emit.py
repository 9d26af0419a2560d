"""Rendering: canonical JSON, Graphviz DOT, SVG and plain-text diagrams.

Every renderer is a pure function of the group, so output is byte-stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from . import clusters as cl
from .checks import ValidationReport, check_group
from .group import GroupParams, is_in_sl2
from .monomials import format_monomial, g_basis, invariant_generators, l_space, special_reps
from .quiver import tensor_matrix
from .resolution import build_resolution, dual_graph


def _pair(mono) -> list[int]:
    return [int(mono[0]), int(mono[1])]


def specials_document(G: GroupParams) -> dict:
    rep = special_reps(G)
    return {
        "specials": [
            {"index": i, "pair": [_pair(x), _pair(y)]} for i, (x, y) in rep.generator_pairs.items()
        ],
        "nonspecials": [{"index": i, "witness": _pair(w)} for i, w in rep.witnesses.items()],
        "basis": {
            "invariants": [_pair(u) for u in invariant_generators(G)],
            "g_basis": [_pair(u) for u in g_basis(G)],
            "l_space": [_pair(u) for u in l_space(G)],
        },
    }


def resolution_document(G: GroupParams) -> dict:
    res = build_resolution(G)
    return {
        "hj": list(res.hj),
        "boundary": [_pair(u) for u in res.boundary],
        "curves": [
            {
                "index": c.index,
                "ray": _pair(c.ray),
                "self_int": c.self_intersection,
                "rep": c.special_rep,
                "ratio": [_pair(c.ratio_pair[0]), _pair(c.ratio_pair[1])],
            }
            for c in res.curves
        ],
        "charts": [
            {"index": ch.index, "rays": [_pair(u) for u in ch.rays], "dual": [list(w) for w in ch.dual_pair]}
            for ch in res.charts
        ],
        "intersection_matrix": res.intersection_matrix,
    }


def clusters_document(G: GroupParams) -> dict:
    clusters = cl.enumerate_clusters(G)
    out = []
    for c in clusters:
        ideal = cl.cluster_ideal(G, c)
        deform = cl.chart_deformation(G, ideal)
        out.append({
            "columns": list(c.columns),
            "ideal": [_pair(g) for g in ideal.generators],
            "cotangent": list(cl.cotangent_decomposition(G, ideal)),
            "deformation": {
                "relations": [str(rel) for rel in deform.relations],
                "alpha": list(deform.alpha_exponent),
                "beta": list(deform.beta_exponent),
            },
        })
    chain = cl.reconstruct_chain(G, clusters)
    return {"clusters": out, "chain": {"nodes": list(chain.nodes), "edges": [list(e) for e in chain.edges]}}


def quiver_document(G: GroupParams) -> dict:
    return {"a_matrix": tensor_matrix(G)}


def report_document(G: GroupParams, report: ValidationReport | None = None) -> dict:
    report = report or check_group(G)
    doc = {"group": {"r": G.r, "a": G.a, "sl2": is_in_sl2(G)}}
    doc.update(specials_document(G))
    doc["resolution"] = resolution_document(G)
    doc.update(clusters_document(G))
    doc["quiver"] = quiver_document(G)
    doc["checks"] = [c.to_dict() for c in report.checks]
    doc["counts"] = dict(report.counts)
    doc["status"] = "pass" if report.ok else "fail"
    return doc


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# --- DOT ---------------------------------------------------------------------

def dual_graph_dot(G: GroupParams) -> str:
    graph = dual_graph(build_resolution(G).curves)
    lines = [f'graph "dual_graph_{G.r}_{G.a}" {{', "  rankdir=LR;", "  node [shape=circle];"]
    lines.append('  xaxis [shape=plaintext, label="x-axis"];')
    lines.append('  yaxis [shape=plaintext, label="y-axis"];')
    for k, (self_int, rep) in enumerate(graph.nodes, start=1):
        lines.append(f'  E{k} [label="E{k} ({self_int}) ρ{rep}"];')
    names = ["xaxis"] + [f"E{k}" for k in range(1, len(graph.nodes) + 1)] + ["yaxis"]
    for u, v in zip(names, names[1:]):
        style = " [style=dashed]" if "axis" in u + v else ""
        lines.append(f"  {u} -- {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def quiver_dot(G: GroupParams) -> str:
    A = tensor_matrix(G)
    lines = [f'digraph "mckay_quiver_{G.r}_{G.a}" {{', "  node [shape=circle];"]
    for i in range(G.r):
        lines.append(f'  {i} [label="ρ{i}"];')
    for i, row in enumerate(A):
        for j, mult in enumerate(row):
            if mult:
                label = f' [label="{mult}"]' if mult > 1 else ""
                lines.append(f"  {i} -> {j}{label};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# --- SVG ---------------------------------------------------------------------

def newton_svg(G: GroupParams, extent: int = 400) -> str:
    r = G.r
    res = build_resolution(G)
    cell = max(extent // r, 4)
    size = r * cell
    pad = cell

    def xy(p, q):
        return pad + p * cell, pad + size - q * cell

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {size + 2 * pad:g} {size + 2 * pad:g}">',
        f"<title>Newton polygon of C_{{{r},{G.a}}}</title>",
    ]
    x0, y0 = xy(0, 0)
    out.append(f'<line x1="{x0:g}" y1="{y0:g}" x2="{xy(r, 0)[0]:g}" y2="{y0:g}" stroke="black"/>')
    out.append(f'<line x1="{x0:g}" y1="{y0:g}" x2="{x0:g}" y2="{xy(0, r)[1]:g}" stroke="black"/>')
    for p in range(1, r + 1):
        q = (p * G.a) % r
        cx, cy = xy(p, q)
        out.append(f'<circle cx="{cx:g}" cy="{cy:g}" r="{cell / 8:g}" fill="gray"/>')
    points = " ".join(f"{x:g},{y:g}" for x, y in (xy(*u) for u in res.boundary))
    out.append(f'<polyline points="{points}" fill="none" stroke="blue"/>')
    for u in res.boundary:
        cx, cy = xy(*u)
        out.append(f'<circle cx="{cx:g}" cy="{cy:g}" r="{cell / 5:g}" fill="blue"/>')
    for c in res.curves:
        cx, cy = xy(*c.ray)
        out.append(f'<text x="{cx + cell / 4:g}" y="{cy - cell / 4:g}" font-size="{cell / 2:g}">'
                   f"E{c.index} ρ{c.special_rep}</text>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


# --- text --------------------------------------------------------------------

def _grid(cells: dict[tuple[int, int], str], width: int) -> list[str]:
    """Rows top to bottom, bottom-left origin, fixed-width columns."""
    if not cells:
        return []
    top = max(n for _, n in cells)
    right = max(m for m, _ in cells)
    rows = []
    for n in range(top, -1, -1):
        row = "".join(cells.get((m, n), ".").rjust(width) for m in range(right + 1))
        rows.append(row.rstrip())
    return rows


def basis_text(G: GroupParams) -> str:
    """B(G) with cell characters; L(G) cells plain, B \\ L cells starred."""
    lspace = set(l_space(G))
    width = len(str(G.r)) + 2
    cells = {}
    for u in g_basis(G):
        ch = str((u.m + G.a * u.n) % G.r)
        cells[tuple(u)] = ch if u in lspace else ch + "*"
    lines = [f"B(G) for {G} (character per cell, * marks B(G) \\ L(G)):"]
    lines += ["  " + row for row in _grid(cells, width)]
    return "\n".join(lines) + "\n"


def specials_text(G: GroupParams) -> str:
    rep = special_reps(G)
    lines = [f"{G}: {len(rep.specials)} special of {G.r - 1} nontrivial representations"]
    for i, (x, y) in rep.generator_pairs.items():
        lines.append(f"  rho{i:<3} special      generators {x}, {y}")
    for i, w in rep.witnesses.items():
        lines.append(f"  rho{i:<3} not special  witness {w}")
    return "\n".join(lines) + "\n" + basis_text(G)


def resolution_text(G: GroupParams) -> str:
    res = build_resolution(G)
    lines = [f"{G}: r/a = [{', '.join(map(str, res.hj))}]"]
    lines.append("boundary: " + " ".join(f"({u.p},{u.q})/{G.r}" for u in res.boundary))
    for c in res.curves:
        x, y = c.ratio_pair
        lines.append(f"  {c.label}  ray ({c.ray.p},{c.ray.q})/{G.r}  ratio {x} : {y}")
    for ch in res.charts:
        (a1, a2), (b1, b2) = ch.dual_pair
        lines.append(f"  chart {ch.index}: alpha = {format_monomial(a1, a2)}, beta = {format_monomial(b1, b2)}")
    return "\n".join(lines) + "\n"


def young_text(G: GroupParams, c: cl.GCluster) -> list[str]:
    cells = {(m, n): "#" for m, h in enumerate(c.columns) for n in range(h)}
    return _grid(cells, 1)


def clusters_text(G: GroupParams) -> str:
    clusters = cl.enumerate_clusters(G)
    lines = [f"{G}: {len(clusters)} torus-fixed G-clusters"]
    for k, c in enumerate(clusters):
        ideal = cl.cluster_ideal(G, c)
        cot = cl.cotangent_decomposition(G, ideal)
        deform = cl.chart_deformation(G, ideal)
        lines.append("")
        lines.append(f"({k}) columns {list(c.columns)}  I = {ideal}")
        lines.append("    I/mI = " + " + ".join(f"rho{i}" for i in cot))
        lines.append("    " + ", ".join(str(rel) for rel in deform.relations))
        lines += ["    " + row for row in young_text(G, c)]
        table = ", ".join(f"{cell}:{ch}" for cell, ch in zip(c.cells, c.chars(G)))
        lines.append(f"    characters {table}")
    chain = cl.reconstruct_chain(G, clusters)
    lines.append("")
    lines.append("chain: " + " - ".join(f"rho{i}" for i in chain.nodes))
    return "\n".join(lines) + "\n"


def quiver_text(G: GroupParams) -> str:
    A = tensor_matrix(G)
    width = 2
    lines = [f"{G}: McKay tensor matrix a_ij (rho_i x rho_nat = sum a_ij rho_j)"]
    lines += ["  " + "".join(str(v).rjust(width) for v in row) for row in A]
    return "\n".join(lines) + "\n"


def check_text(report: ValidationReport) -> str:
    lines = [f"{report.group}: {'PASS' if report.ok else 'FAIL'}  {report.counts}"]
    for c in report.checks:
        lines.append(f"  [{'pass' if c.passed else 'FAIL'}] {c.name}: {c.detail}".rstrip(": "))
    return "\n".join(lines) + "\n"


# --- bundles -----------------------------------------------------------------

@dataclass
class ReportBundle:
    json_document: str
    dot_documents: dict[str, str] = field(default_factory=dict)
    svg_documents: dict[str, str] = field(default_factory=dict)
    text_tables: dict[str, str] = field(default_factory=dict)
    ok: bool = True

    def files(self) -> dict[str, str]:
        out = {"report.json": self.json_document}
        for group in (self.dot_documents, self.svg_documents, self.text_tables):
            out.update(group)
        return dict(sorted(out.items()))


def build_bundle(G: GroupParams) -> ReportBundle:
    report = check_group(G)
    return ReportBundle(
        json_document=dumps(report_document(G, report)),
        dot_documents={"dual_graph.dot": dual_graph_dot(G), "quiver.dot": quiver_dot(G)},
        svg_documents={"newton.svg": newton_svg(G)},
        text_tables={
            "specials.txt": specials_text(G),
            "resolution.txt": resolution_text(G),
            "clusters.txt": clusters_text(G),
            "quiver.txt": quiver_text(G),
            "checks.txt": check_text(report),
        },
        ok=report.ok,
    )


def emit(G: GroupParams, out_dir: Path | str) -> ReportBundle:
    """Write the bundle for ``G`` under ``out_dir``; raises OSError if unwritable."""
    bundle = build_bundle(G)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, text in bundle.files().items():
        with open(out / name, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return bundle
