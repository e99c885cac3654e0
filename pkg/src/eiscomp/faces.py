"""
Cohomology of the boundary faces H^q(P, V_lambda), assembled from Kostant
data and the Levi base cases (Leray-Serre taken as degenerate).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .levi import (
    Branch, FactsRegistry, GradedSum, ModuleLabel,
    gl1_cohomology, gl2_cohomology, kunneth, registry_cohomology,
)
from .weyl import (
    Composition, Weight, WeylWord, all_words, compositions, dot_action,
    face_name, is_dominant, kostant_reps, length,
)

__all__ = [
    "FaceClass", "TableRow", "levi_block_cohomology", "face_cohomology",
    "all_faces_table", "faces_of", "render_table", "table_records",
]


@dataclass(frozen=True)
class FaceClass:
    face: Composition
    origin: WeylWord
    levi_degree: int
    total_degree: int
    label: ModuleLabel

    @property
    def face_restriction_zero(self) -> bool:
        return self.label.restriction_zero

    @property
    def torus(self):
        return self.label.torus

    @property
    def dim(self) -> int:
        return self.label.dim

    def __str__(self) -> str:
        return self.label.symbol


def levi_block_cohomology(block: Weight, branch=Branch.UNDETERMINED,
                          registry: FactsRegistry | None = None) -> GradedSum:
    size = len(block)
    if size == 1:
        return gl1_cohomology(block[0])
    if size == 2:
        return gl2_cohomology(*block)
    if size == 3:
        return registry_cohomology("GL3", block, branch, registry)
    raise ValueError(f"no Levi base case for GL_{size}")


def faces_of(n: int) -> list[Composition]:
    """Proper standard parabolics of GL_n, maximal ones first."""
    return [c for c in compositions(n) if c.rank >= 1]


def _check(n: int, weight: Sequence[int]) -> Weight:
    weight = tuple(weight)
    if n not in (3, 4):
        raise ValueError(f"face cohomology is implemented for GL_3 and GL_4, not GL_{n}")
    if len(weight) != n:
        raise ValueError(f"weight {weight} does not fit GL_{n}")
    if not is_dominant(weight):
        raise ValueError(f"weight {weight} is not dominant")
    return weight


def face_cohomology(n: int, weight: Sequence[int], face: Composition, branch=Branch.UNDETERMINED,
                    registry: FactsRegistry | None = None) -> dict[int, list[FaceClass]]:
    """H^q(P, V) keyed by total degree q = length(w) + Levi degree."""
    weight = _check(n, weight)
    if face.n != n:
        raise ValueError(f"face {face} is not a parabolic of GL_{n}")
    out: dict[int, list[FaceClass]] = {}
    for datum in kostant_reps(face, weight):
        # cheap blocks first so a vanishing GL_1 factor short-circuits the registry
        order = sorted(range(len(datum.levi_weight)), key=lambda i: len(datum.levi_weight[i]))
        parts: dict[int, GradedSum] = {}
        for i in order:
            parts[i] = levi_block_cohomology(datum.levi_weight[i], branch, registry)
            if not parts[i]:
                break
        else:
            for j, labels in kunneth([parts[i] for i in range(len(order))]).items():
                for lab in labels:
                    q = datum.length + j
                    out.setdefault(q, []).append(FaceClass(face, datum.w, j, q, lab))
    return dict(sorted(out.items()))


@dataclass(frozen=True)
class TableRow:
    w: WeylWord
    length: int
    weight: Weight
    entries: dict[Composition, list[FaceClass]]


def all_faces_table(n: int, weight: Sequence[int], branch=Branch.UNDETERMINED,
                    registry: FactsRegistry | None = None) -> list[TableRow]:
    weight = _check(n, weight)
    faces = faces_of(n)
    by_word: dict[WeylWord, dict[Composition, list[FaceClass]]] = {w: {} for w in all_words(n)}
    for c in faces:
        for classes in face_cohomology(n, weight, c, branch, registry).values():
            for fc in classes:
                by_word[fc.origin].setdefault(c, []).append(fc)
    return [TableRow(w, length(w), dot_action(w, weight), by_word[w]) for w in all_words(n)]


def _wt(t: Sequence[int]) -> str:
    return "(" + ",".join(map(str, t)) + ")"


def render_table(n: int, rows: list[TableRow]) -> str:
    faces = faces_of(n)
    header = ["w", "l", "w.lambda"] + [face_name(c) for c in faces]
    body = []
    for r in rows:
        cells = [str(r.w), str(r.length), _wt(r.weight)]
        for c in faces:
            cls = r.entries.get(c)
            cells.append(" + ".join(str(x) for x in cls) if cls else "-")
        body.append(cells)
    widths = [max(len(row[i]) for row in [header] + body) for i in range(len(header))]
    lines = ["  ".join(h.ljust(wd) for h, wd in zip(header, widths)).rstrip()]
    lines.append("-" * len(lines[0]))
    for cells in body:
        lines.append("  ".join(x.ljust(wd) for x, wd in zip(cells, widths)).rstrip())
    return "\n".join(lines)


def table_records(n: int, weight: Sequence[int], rows: list[TableRow]) -> list[dict]:
    recs = []
    for r in rows:
        for c, classes in r.entries.items():
            for fc in classes:
                recs.append({
                    "group": f"GL{n}",
                    "weight": list(weight),
                    "w": str(r.w),
                    "length": r.length,
                    "face": face_name(c),
                    "degree": fc.total_degree,
                    "labels": [fc.label.symbol],
                    "torus": None if fc.torus is None else list(fc.torus),
                })
    return recs
