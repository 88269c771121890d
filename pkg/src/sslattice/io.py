"""Cover-list files and Graphviz export.

Cover-list format, version 1::

    n <count>
    <i> <j>                 # i is below j (need not be a cover)
    label <i> <text>

``#`` starts a comment, blank lines are ignored, ids are 0-based.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .errors import CoverFormatError
from .lattice import FiniteLattice, build_from_covers, is_graded, rank_function


def _int(tok, lineno):
    try:
        return int(tok, 10)
    except ValueError:
        raise CoverFormatError(lineno, f"expected a decimal integer, got {tok!r}") from None


def parse_cover_file(text: str) -> FiniteLattice:
    n = None
    edges = []
    labels = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None:
                raise CoverFormatError(lineno, "duplicate 'n' line")
            if len(parts) != 2:
                raise CoverFormatError(lineno, "expected 'n <count>'")
            n = _int(parts[1], lineno)
            if n < 1:
                raise CoverFormatError(lineno, "count must be at least 1")
            continue
        if n is None:
            raise CoverFormatError(lineno, "'n <count>' must come first")
        if parts[0] == "label":
            if len(parts) < 2:
                raise CoverFormatError(lineno, "expected 'label <i> <text>'")
            i = _int(parts[1], lineno)
            if not 0 <= i < n:
                raise CoverFormatError(lineno, f"id {i} out of range 0..{n - 1}")
            labels[i] = line.split(None, 2)[2] if len(parts) > 2 else ""
            continue
        if len(parts) != 2:
            raise CoverFormatError(lineno, "expected '<i> <j>'")
        i, j = _int(parts[0], lineno), _int(parts[1], lineno)
        for v in (i, j):
            if not 0 <= v < n:
                raise CoverFormatError(lineno, f"id {v} out of range 0..{n - 1}")
        edges.append((i, j))
    if n is None:
        raise CoverFormatError(1, "missing 'n <count>' line")
    lab = [labels.get(i, "") for i in range(n)] if labels else None
    return build_from_covers(n, edges, lab)


def read_cover_file(path) -> FiniteLattice:
    with open(path, encoding="utf-8") as fh:
        return parse_cover_file(fh.read())


def serialize_cover_file(L: FiniteLattice) -> str:
    out = [f"n {L.n}"]
    out.extend(f"{i} {j}" for i, j in L.covers)
    if L.labels is not None:
        for i, lab in enumerate(L.labels):
            if lab:
                out.append(f"label {i} {_clean_label(lab)}")
    return "\n".join(out) + "\n"


def _clean_label(lab):
    return " ".join(lab.replace("#", "").split())


def _quote(s):
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(L: FiniteLattice, highlight: Optional[Sequence[int]] = None,
               witnesses: Iterable = (), name: str = "lattice") -> str:
    """Graphviz digraph of the Hasse diagram, bottom at the bottom.

    Graded lattices get one ``rank=same`` group per level. Edges of
    ``highlight`` are drawn bold red; elements of pentagon witnesses are
    filled, with the short side in a different color from the long side.
    """
    chain_edges = set()
    if highlight:
        chain_edges = set(zip(highlight, highlight[1:]))
    long_side, short_side, frame = set(), set(), set()
    for w in witnesses:
        long_side.update((w.x, w.y))
        short_side.add(w.z)
        frame.update((w.bot, w.top))
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for x in range(L.n):
        attrs = [f"label={_quote(L.label(x))}"]
        if x in short_side:
            attrs.append('style=filled fillcolor="#f4a582"')
        elif x in long_side:
            attrs.append('style=filled fillcolor="#92c5de"')
        elif x in frame:
            attrs.append('style=filled fillcolor="#e0e0e0"')
        lines.append(f"  {x} [{' '.join(attrs)}];")
    for i, j in L.covers:
        if (i, j) in chain_edges:
            lines.append(f"  {i} -> {j} [color=red penwidth=2.5];")
        elif i in long_side and j in long_side:
            lines.append(f"  {i} -> {j} [color=\"#2166ac\" penwidth=2];")
        else:
            lines.append(f"  {i} -> {j};")
    if is_graded(L):
        rho = rank_function(L)
        levels = {}
        for x, r in enumerate(rho):
            levels.setdefault(r, []).append(x)
        for r in sorted(levels):
            lines.append("  { rank=same; " + " ".join(f"{x};" for x in levels[r]) + " }")
    lines.append("}")
    return "\n".join(lines) + "\n"
