"""Rank-2 alternation diagrams and alternation posets, with CSV/SVG/DOT export."""

from __future__ import annotations

import colorsys
import io
from collections import Counter
from dataclasses import dataclass, field
from itertools import product

from .multiplicity import _fw_ints, alternation_terms, word_of
from .rootsys import Family, RootSystem
from .weyl import format_word

DEFAULT_BOUNDS = {Family.A: 20, Family.B: 20, Family.G2: 30}
CELL = 16


def default_bound(rs: RootSystem) -> int:
    return DEFAULT_BOUNDS[rs.family]


def canonical_words(rs: RootSystem, elements) -> tuple:
    """Reduced words of a set of group elements, shortest first."""
    words = [tuple(word_of(rs, e)) for e in elements]
    return tuple(format_word(w) for w in sorted(words, key=lambda w: (len(w), w)))


def set_label(words) -> str:
    return "{" + ", ".join(words) + "}" if words else "{}"


@dataclass
class AlternationGrid:
    rs: RootSystem
    mu: tuple
    bound: int
    cells: dict = field(default_factory=dict)      # (m, n) -> set id
    palette: list = field(default_factory=list)    # set id -> tuple of words
    elements: list = field(default_factory=list)   # set id -> frozenset of elements

    def coords(self):
        """Row-major order: top row (n = N) first, m increasing within a row."""
        N = self.bound
        for n in range(N, -N - 1, -1):
            for m in range(-N, N + 1):
                yield m, n

    def sets(self) -> list[frozenset]:
        used = set(self.cells.values())
        return [self.elements[i] for i in sorted(used)]


def _element_set(rs: RootSystem, lam, mu) -> frozenset:
    return frozenset(e for e, _ in alternation_terms(rs, lam, mu))


def alternation_grid(rs: RootSystem, mu=None, bound: int | None = None) -> AlternationGrid:
    """Color ``lambda = m w1 + n w2`` for ``-N <= m, n <= N`` by alternation set.

    Set ids are assigned by first occurrence in row-major order; id 0 is
    always the empty set whether or not it occurs.
    """
    if rs.rank != 2:
        raise ValueError("alternation diagrams need a rank-2 system")
    mu = _fw_ints(rs, mu if mu is not None else (0, 0))
    bound = default_bound(rs) if bound is None else bound
    if bound < 1:
        raise ValueError("bound must be at least 1")
    grid = AlternationGrid(rs, mu, bound, palette=[()], elements=[frozenset()])
    ids = {frozenset(): 0}
    for m, n in grid.coords():
        s = _element_set(rs, (m, n), mu)
        sid = ids.get(s)
        if sid is None:
            sid = ids[s] = len(grid.elements)
            grid.elements.append(s)
            grid.palette.append(canonical_words(rs, s))
        grid.cells[(m, n)] = sid
    return grid


def distinct_types(grid: AlternationGrid) -> int:
    return len(set(grid.cells.values()))


@dataclass
class AlternationPoset:
    rs: RootSystem
    nodes: list                    # frozensets of elements, sorted by size then words
    labels: list                   # tuple of words per node
    cover_edges: list              # (lower index, upper index)

    def levels(self) -> dict:
        return dict(sorted(Counter(len(s) for s in self.nodes).items()))

    def level_counts(self) -> list[int]:
        return list(self.levels().values())

    def closure(self) -> set:
        """Strict order relation rebuilt from the cover edges."""
        up = {i: set() for i in range(len(self.nodes))}
        for a, b in self.cover_edges:
            up[a].add(b)
        rel = set()
        for start in up:
            stack = list(up[start])
            seen = set()
            while stack:
                x = stack.pop()
                if x in seen:
                    continue
                seen.add(x)
                rel.add((start, x))
                stack.extend(up[x])
        return rel


def build_poset(rs: RootSystem, sets) -> AlternationPoset:
    """Hasse diagram of set containment on a family of element sets."""
    uniq = {frozenset(s) for s in sets}
    labelled = sorted(((canonical_words(rs, s), s) for s in uniq), key=lambda t: (len(t[1]), t[0]))
    labels = [w for w, _ in labelled]
    nodes = [s for _, s in labelled]
    edges = []
    for a, b in product(range(len(nodes)), repeat=2):
        lo, hi = nodes[a], nodes[b]
        if lo < hi and not any(lo < nodes[c] < hi for c in range(len(nodes))):
            edges.append((a, b))
    return AlternationPoset(rs, nodes, labels, edges)


def grid_poset(grid: AlternationGrid) -> AlternationPoset:
    return build_poset(grid.rs, grid.sets())


# rendering -------------------------------------------------------------

def color_for(sid: int) -> str:
    if sid == 0:
        return "#ffffff"
    h = (sid * 0.618033988749895) % 1.0
    light = 0.45 + 0.15 * (sid % 3) / 2
    r, g, b = colorsys.hls_to_rgb(h, light, 0.7)
    return f"#{round(r * 255):02x}{round(g * 255):02x}{round(b * 255):02x}"


def _grid_csv(grid: AlternationGrid) -> str:
    buf = io.StringIO()
    buf.write("m,n,set_id,set\n")
    for m, n in sorted(grid.cells):
        sid = grid.cells[(m, n)]
        buf.write(f'{m},{n},{sid},"{set_label(grid.palette[sid])}"\n')
    return buf.getvalue()


def _grid_svg(grid: AlternationGrid) -> str:
    N = grid.bound
    side = (2 * N + 1) * CELL
    used = sorted(set(grid.cells.values()))
    legend_h = 20 * len(used) + 10
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{side + 2 * CELL}" '
           f'height="{side + legend_h + 2 * CELL}" font-family="monospace" font-size="11">']
    out.append(f'<title>{grid.rs.name} alternation diagram, mu={list(grid.mu)}</title>')
    for m, n in grid.coords():
        sid = grid.cells[(m, n)]
        x = (m + N) * CELL
        y = (N - n) * CELL
        out.append(f'<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" '
                   f'fill="{color_for(sid)}" stroke="#dddddd" stroke-width="0.5"/>')
    y0 = side + CELL
    out.append(f'<g id="legend" transform="translate(0,{y0})">')
    for k, sid in enumerate(used):
        out.append(f'<rect x="0" y="{20 * k}" width="{CELL}" height="{CELL}" fill="{color_for(sid)}" stroke="#000"/>')
        out.append(f'<text x="{CELL + 6}" y="{20 * k + 12}">{sid}: {set_label(grid.palette[sid])}</text>')
    out.append("</g></svg>")
    return "\n".join(out) + "\n"


def _poset_dot(poset: AlternationPoset) -> str:
    lines = ["digraph alternation_poset {", "  rankdir=BT;", "  node [shape=box];"]
    for i, words in enumerate(poset.labels):
        lines.append(f'  n{i} [label="{set_label(words)}"];')
    for a, b in poset.cover_edges:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _poset_csv(poset: AlternationPoset) -> str:
    buf = io.StringIO()
    buf.write("lower,upper\n")
    for a, b in poset.cover_edges:
        buf.write(f'"{set_label(poset.labels[a])}","{set_label(poset.labels[b])}"\n')
    return buf.getvalue()


def render(artifact, fmt: str) -> bytes:
    """Serialize a grid (csv, svg) or a poset (dot, csv)."""
    if isinstance(artifact, AlternationGrid):
        table = {"csv": _grid_csv, "svg": _grid_svg}
    elif isinstance(artifact, AlternationPoset):
        table = {"dot": _poset_dot, "csv": _poset_csv}
    else:
        raise TypeError(f"cannot render {type(artifact).__name__}")
    if fmt not in table:
        raise ValueError(f"format {fmt!r} not supported for {type(artifact).__name__}")
    return table[fmt](artifact).encode("utf-8")


def mu_points_csv(rs: RootSystem, lam, bound: int) -> bytes:
    """Dominant ``mu`` in the box ``[0, bound]^r`` with their alternation sets,
    as a flat point list (used for rank-3 pictures)."""
    lam = _fw_ints(rs, lam)
    ids: dict = {frozenset(): 0}
    buf = io.StringIO()
    buf.write(",".join(f"m{i + 1}" for i in range(rs.rank)) + ",set_id,set\n")
    for mu in product(range(bound + 1), repeat=rs.rank):
        s = _element_set(rs, lam, mu)
        if not s:
            continue
        sid = ids.setdefault(s, len(ids))
        buf.write(",".join(map(str, mu)) + f',{sid},"{set_label(canonical_words(rs, s))}"\n')
    return buf.getvalue().encode("utf-8")
