"""
Boundary spectral sequence for GL_3(Z) (two columns, i.e. Mayer-Vietoris) and
GL_4(Z) (three columns).

E_1^{p,q} is the sum of H^q(P, V) over standard parabolics P with p + 1 cuts.
d_1 is assembled isotype by isotype: a class maps with coefficient +-1 to
each class with the same torus character on a one-step refinement of its
face.  d_2 is never built; label matching says whether it can be nonzero and
external dimension constraints fix its rank.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Sequence

from .faces import FaceClass, face_cohomology, faces_of
from .levi import Branch, FactsRegistry, ModuleLabel, load_registry
from .linalg import matmul, is_zero, rank
from .weyl import Weight, face_incidence, refinement_sign

__all__ = [
    "E1Page", "IsotypeComplex", "PageEntry", "Page", "D2Arrow", "Constraint",
    "BoundaryCohomology", "Contradiction", "UndeterminedDifferential",
    "build_e1", "default_coefficient", "d1_isotypes", "e2", "d2_feasible", "boundary_cohomology",
    "standard_constraints", "render_page", "page_records",
]

Position = tuple[int, int]
Coefficient = Callable[[FaceClass, FaceClass], "Fraction | int | None"]


class UndeterminedDifferential(Exception):
    """The constraints leave more than one admissible d_2 rank assignment."""


@dataclass(frozen=True)
class E1Page:
    n: int
    weight: Weight
    branch: Branch
    columns: dict[int, dict[int, list[FaceClass]]]

    @property
    def width(self) -> int:
        return self.n - 1  # number of columns

    def entries(self, p: int, q: int) -> list[FaceClass]:
        return self.columns.get(p, {}).get(q, [])

    def positions(self) -> list[Position]:
        return sorted((p, q) for p, col in self.columns.items() for q in col)


def build_e1(n: int, weight: Sequence[int], branch=Branch.UNDETERMINED,
             registry: FactsRegistry | None = None) -> E1Page:
    weight = tuple(weight)
    branch = Branch.parse(branch)
    cols: dict[int, dict[int, list[FaceClass]]] = {p: {} for p in range(n - 1)}
    for c in faces_of(n):
        p = c.rank - 1
        for q, classes in face_cohomology(n, weight, c, branch, registry).items():
            cols[p].setdefault(q, []).extend(classes)
    for p in cols:
        cols[p] = dict(sorted(cols[p].items()))
    return E1Page(n, weight, branch, cols)


# ---------------------------------------------------------------------------
# d_1


def default_coefficient(x: FaceClass, y: FaceClass) -> int:
    if x.face_restriction_zero or x.torus is None or x.torus != y.torus:
        return 0
    if y.face.rank != x.face.rank + 1 or not face_incidence(x.face, y.face):
        return 0
    return refinement_sign(x.face, y.face)


@dataclass
class IsotypeComplex:
    """Sub-complex of E_1 in a fixed degree q spanned by one torus character."""
    torus: tuple[int, ...] | None
    q: int
    columns: dict[int, list[FaceClass]]
    d: dict[int, list[list[Fraction]]] = field(default_factory=dict)  # p -> (col p+1) x (col p)

    def dims(self) -> dict[int, int]:
        return {p: len(b) for p, b in self.columns.items()}

    def ranks(self) -> dict[int, int]:
        return {p: rank(m) for p, m in self.d.items()}

    def homology_dims(self) -> dict[int, int]:
        rk = self.ranks()
        return {p: len(b) - rk.get(p, 0) - rk.get(p - 1, 0) for p, b in self.columns.items()}

    def squares_to_zero(self) -> bool:
        for p in self.d:
            if p + 1 in self.d and self.d[p] and self.d[p + 1]:
                if not is_zero(matmul(self.d[p + 1], self.d[p])):
                    return False
        return True

    @property
    def label(self) -> ModuleLabel:
        if self.torus is not None:
            return ModuleLabel.from_torus(self.torus)
        (cls,) = [x for b in self.columns.values() for x in b]
        return cls.label


def d1_isotypes(page: E1Page, coefficient: Coefficient | None = None) -> list[IsotypeComplex]:
    """
    Split E_1 into isotype complexes. Classes without a torus character
    (cuspidal ones) become singleton complexes with zero differential.
    """
    coefficient = coefficient or default_coefficient
    groups: dict[tuple, IsotypeComplex] = {}
    cusp = 0
    for (p, q) in page.positions():
        for x in page.entries(p, q):
            if x.torus is None:
                key = (q, "cusp", cusp)
                cusp += 1
            else:
                key = (q, "torus", x.torus)
            cx = groups.setdefault(key, IsotypeComplex(x.torus, q, {r: [] for r in range(page.width)}))
            cx.columns[p].append(x)
    for cx in groups.values():
        for p in range(page.width - 1):
            src, tgt = cx.columns[p], cx.columns[p + 1]
            cx.d[p] = [[Fraction(coefficient(x, y) or 0) for x in src] for y in tgt]
    return [groups[k] for k in sorted(groups, key=lambda k: (k[0], k[1], str(k[2])))]


# ---------------------------------------------------------------------------
# E_2 and beyond


@dataclass(frozen=True)
class PageEntry:
    label: ModuleLabel
    multiplicity: int

    @property
    def torus(self):
        return self.label.torus

    @property
    def dim(self) -> int:
        return self.multiplicity * self.label.dim

    def __str__(self) -> str:
        return "+".join([self.label.symbol] * self.multiplicity)


Page = dict[Position, list[PageEntry]]


def e2(page: E1Page, complexes: list[IsotypeComplex] | None = None) -> Page:
    """Homology of every isotype complex, reassembled per (p, q)."""
    complexes = complexes if complexes is not None else d1_isotypes(page)
    out: Page = {}
    for cx in complexes:
        for p, h in cx.homology_dims().items():
            if h:
                out.setdefault((p, cx.q), []).append(PageEntry(cx.label, h))
    return dict(sorted(out.items()))


@dataclass(frozen=True)
class D2Arrow:
    source: Position
    target: Position
    torus: tuple[int, ...] | None
    source_dim: int
    target_dim: int
    feasible: bool


def d2_feasible(page: Page, width: int) -> list[D2Arrow]:
    """
    Candidate d_2: E_2^{p,q} -> E_2^{p+2,q-1}, one arrow per source isotype.
    An arrow can be nonzero only onto an isomorphic Hecke module.
    """
    arrows = []
    for (p, q), entries in sorted(page.items()):
        tgt_pos = (p + 2, q - 1)
        if p + 2 >= width or tgt_pos not in page:
            continue
        targets = {e.torus: e for e in page[tgt_pos] if e.torus is not None}
        for e in entries:
            t = targets.get(e.torus) if e.torus is not None else None
            arrows.append(D2Arrow((p, q), tgt_pos, e.torus, e.dim,
                                  t.dim if t else 0, t is not None))
    return arrows


@dataclass(frozen=True)
class Constraint:
    """Total-degree boundary dimension assertion, with provenance."""
    degree: int
    dim: int
    citation: str

    def __str__(self) -> str:
        return f"dim H^{self.degree}_boundary = {self.dim}"


@dataclass
class BoundaryCohomology:
    n: int
    weight: Weight
    branch: Branch
    e1: E1Page
    e2: Page
    arrows: list[D2Arrow]
    d2_ranks: dict[tuple, int]
    e3: Page
    constraints: tuple[Constraint, ...]

    def by_degree(self) -> dict[int, list[tuple[int, PageEntry]]]:
        """Total degree -> [(p, entry)], deepest filtration step (largest p) first."""
        out: dict[int, list[tuple[int, PageEntry]]] = {}
        for (p, q), entries in sorted(self.e3.items(), key=lambda kv: (-kv[0][0], kv[0][1])):
            for e in entries:
                out.setdefault(p + q, []).append((p, e))
        return dict(sorted(out.items()))

    def dims(self) -> dict[int, int]:
        return {k: sum(e.dim for _, e in v) for k, v in self.by_degree().items()}

    def labels(self, degree: int) -> list[str]:
        return [e.label.symbol for _, e in self.by_degree().get(degree, []) for _ in range(e.multiplicity)]

    def extensions(self) -> dict[int, list[str]]:
        """Degrees with more than one graded piece: sub first, quotient last."""
        return {k: [str(e) for _, e in v] for k, v in self.by_degree().items() if len(v) > 1}


@dataclass
class Contradiction:
    n: int
    weight: Weight
    branch: Branch
    constraint: Constraint
    survivors: list[tuple[Position, PageEntry]]
    e2: Page
    arrows: list[D2Arrow]

    @property
    def message(self) -> str:
        names = ", ".join(f"{e} at E^{p},{q}" for (p, q), e in self.survivors)
        return (f"contradiction: {names} survives to total degree {self.constraint.degree}, "
                f"but {self.constraint} [{self.constraint.citation}]")


def _apply_ranks(page: Page, arrows: list[D2Arrow], ranks: Sequence[int]) -> Page:
    cut: dict[tuple, int] = {}
    for a, r in zip(arrows, ranks):
        cut[(a.source, a.torus)] = cut.get((a.source, a.torus), 0) + r
        cut[(a.target, a.torus)] = cut.get((a.target, a.torus), 0) + r
    out: Page = {}
    for pos, entries in page.items():
        for e in entries:
            m = e.multiplicity - (cut.get((pos, e.torus), 0) if e.torus is not None else 0)
            if m > 0:
                out.setdefault(pos, []).append(PageEntry(e.label, m))
    return out


def _degree_dims(page: Page) -> dict[int, int]:
    out: dict[int, int] = {}
    for (p, q), entries in page.items():
        out[p + q] = out.get(p + q, 0) + sum(e.dim for e in entries)
    return out


def boundary_cohomology(n: int, weight: Sequence[int], branch=Branch.UNDETERMINED,
                        constraints: Sequence[Constraint] = (),
                        registry: FactsRegistry | None = None):
    """
    H^*_boundary as E_3 = E_infinity, or a Contradiction when no admissible
    d_2 ranks satisfy the constraints.
    """
    weight = tuple(weight)
    branch = Branch.parse(branch)
    page1 = build_e1(n, weight, branch, registry)
    page2 = e2(page1)
    arrows = d2_feasible(page2, page1.width)
    live = [a for a in arrows if a.feasible]
    choices = [range(min(a.source_dim, a.target_dim) + 1) for a in live]
    solutions = []
    for ranks in product(*choices):
        page3 = _apply_ranks(page2, live, ranks)
        dims = _degree_dims(page3)
        if all(dims.get(c.degree, 0) == c.dim for c in constraints):
            solutions.append((ranks, page3))
    if not solutions:
        # report what survives even when every feasible d_2 has maximal rank
        ranks = [min(a.source_dim, a.target_dim) for a in live]
        page3 = _apply_ranks(page2, live, ranks)
        dims = _degree_dims(page3)
        bad = next(c for c in constraints if dims.get(c.degree, 0) != c.dim)
        survivors = [((p, q), e) for (p, q), es in sorted(page3.items()) if p + q == bad.degree for e in es]
        return Contradiction(n, weight, branch, bad, survivors, page2, arrows)
    if len(solutions) > 1:
        raise UndeterminedDifferential(
            f"{len(solutions)} admissible d_2 rank assignments; add a constraint to decide")
    ranks, page3 = solutions[0]
    d2_ranks = {(a.source, a.target, a.torus): r for a, r in zip(live, ranks)}
    return BoundaryCohomology(n, weight, branch, page1, page2, arrows, d2_ranks,
                              dict(sorted(page3.items())), tuple(constraints))


def standard_constraints(n: int, weight: Sequence[int],
                         registry: FactsRegistry | None = None) -> list[Constraint]:
    """
    Middle-degree vanishing for GL_4 with trivial or det coefficients:
    H^4(SL_4(Z), Q) = 0 gives H^4_Eis = 0, duality makes H^4_boundary(SL_4) twice
    that, and Ind(Q) = Q + det splits it between the two GL_4 coefficient systems.
    """
    weight = tuple(weight)
    if n != 4 or weight not in ((0, 0, 0, 0), (1, 1, 1, 1)):
        return []
    reg = registry or load_registry()
    duality = reg.fact("boundary_duality")
    mid = int(duality["middle_degree"])
    if reg.dims("sl4_trivial").get(mid, 0):
        return []
    cite = f"{reg.citation('sl4_trivial')}; {duality['citation']}; Ind(Q) = Q + det"
    return [Constraint(mid, 0, cite)]


# ---------------------------------------------------------------------------
# output


def render_page(name: str, page: Page | E1Page) -> str:
    lines = []
    if isinstance(page, E1Page):
        for (p, q) in page.positions():
            classes = page.entries(p, q)
            lines.append(f"{name}^{p},{q} = " + " + ".join(str(x) for x in classes))
    else:
        for (p, q), entries in sorted(page.items()):
            lines.append(f"{name}^{p},{q} = " + " + ".join(str(e) for e in entries))
    return "\n".join(lines) if lines else f"{name} = 0"


def page_records(name: str, page: Page | E1Page) -> list[dict]:
    recs = []
    if isinstance(page, E1Page):
        for (p, q) in page.positions():
            classes = page.entries(p, q)
            recs.append({"page": name, "p": p, "q": q,
                         "labels": [x.label.symbol for x in classes],
                         "dims": [x.dim for x in classes]})
    else:
        for (p, q), entries in sorted(page.items()):
            recs.append({"page": name, "p": p, "q": q,
                         "labels": [e.label.symbol for e in entries],
                         "dims": [e.dim for e in entries]})
    return recs
