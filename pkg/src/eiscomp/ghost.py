"""
Ghost classes for GL_3(Z) and the deduction of H^3(GL_4(Z), det).

A potentially ghost class in degree q is a boundary class coming from the
Borel face through the Mayer-Vietoris connecting map; it is a ghost class
when it is also Eisenstein.  Which of two labels carries H^2_Eis for the
weights (1,1,0) and (2,1,1) is the branch; prove_ghost rules out the
no-ghost branch using the boundary spectral sequence of GL_4.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Iterable, Sequence

from .euler import euler_characteristic
from .faces import face_cohomology
from .levi import (
    Branch, FactsRegistry, ModuleLabel, hecke_isomorphic,
    load_registry, registry_cohomology,
)
from .linalg import rank
from .spectral import (
    BoundaryCohomology, Contradiction, boundary_cohomology, default_coefficient,
    standard_constraints,
)
from .weyl import Composition, Weight, is_dominant

__all__ = [
    "potentially_ghost", "PghRow", "pgh_scan", "odd_symmetric_family",
    "dual_symmetric_family", "dual_weight", "BranchReport", "branch_analysis",
    "Step", "Transcript", "ProofError", "gl4_trivial_and_det_dims", "prove_ghost",
]

GHOST_WEIGHTS: tuple[Weight, ...] = ((1, 1, 0), (2, 1, 1))


# ---------------------------------------------------------------------------
# potentially ghost classes


def potentially_ghost(weight: Sequence[int]) -> dict[int, list[ModuleLabel]]:
    """
    pGh^q(GL_3(Z), V) for q = 1..4, as the cokernel of
    H^{q-1}(Q_12) + H^{q-1}(Q_23) -> H^{q-1}(Q_0), computed one torus
    character at a time.  Only GL_1 and GL_2 Levi data are involved.
    """
    weight = tuple(weight)
    if len(weight) != 3 or not is_dominant(weight):
        raise ValueError(f"{weight} is not a dominant GL_3 weight")
    borel = Composition((1, 1, 1))
    maximal = [Composition((2, 1)), Composition((1, 2))]
    out: dict[int, list[ModuleLabel]] = {q: [] for q in range(1, borel.nilradical_dim + 2)}
    lower = {}
    for c in maximal:
        for q, classes in face_cohomology(3, weight, c).items():
            lower.setdefault(q, []).extend(classes)
    for q, targets in face_cohomology(3, weight, borel).items():
        sources = lower.get(q, [])
        for torus in dict.fromkeys(t.torus for t in targets):
            tgt = [t for t in targets if t.torus == torus]
            mat = [[default_coefficient(s, t) for s in sources] for t in tgt]
            coker = len(tgt) - (rank(mat) if sources else 0)
            out[q + 1].extend([ModuleLabel.from_torus(torus)] * coker)
    return out


@dataclass(frozen=True)
class PghRow:
    weight: Weight
    family: str
    pgh: dict[int, list[ModuleLabel]]

    @property
    def pgh2(self) -> list[ModuleLabel]:
        return self.pgh.get(2, [])

    @property
    def dim2(self) -> int:
        return sum(l.dim for l in self.pgh2)


def odd_symmetric_family(count: int) -> list[Weight]:
    """Highest weights of S^{2n+1}(std) x det, n = 0..count-1."""
    return [(2 * k + 2, 1, 1) for k in range(count)]


def dual_symmetric_family(count: int) -> list[Weight]:
    """Highest weights of the duals, twisted by det^{2n+1}: (2n+1, 2n+1, 0)."""
    return [(2 * k + 1, 2 * k + 1, 0) for k in range(count)]


def pgh_scan(weights: Iterable[Sequence[int]] | None = None, count: int = 4) -> list[PghRow]:
    """Evaluate pGh across both odd symmetric power families (or the given weights)."""
    if weights is not None:
        return [PghRow(tuple(w), "custom", potentially_ghost(w)) for w in weights]
    rows = []
    for a, b in zip(odd_symmetric_family(count), dual_symmetric_family(count)):
        rows.append(PghRow(a, "S^odd x det", potentially_ghost(a)))
        rows.append(PghRow(b, "dual", potentially_ghost(b)))
    return rows


def dual_weight(weight: Sequence[int]) -> Weight:
    """
    Highest weight of the dual representation, twisted by a power of det so
    that the smallest entry is 0, or 1 if that is needed for -I to act
    trivially.

    >>> dual_weight((1, 1, 0))
    (2, 1, 1)
    >>> dual_weight((2, 1, 1))
    (1, 1, 0)
    """
    w = tuple(weight)
    d = tuple(w[0] - x for x in reversed(w))
    return tuple(x + 1 for x in d) if sum(d) % 2 else d


# ---------------------------------------------------------------------------
# branches


@dataclass(frozen=True)
class BranchReport:
    weight: Weight
    branch: Branch
    h2_eis: ModuleLabel
    pgh: tuple[ModuleLabel, ...]
    ghost_nonzero: bool  # H^2_Eis is the potentially ghost class
    one_dimensional: bool  # agrees with the registry dimension
    in_boundary: bool  # H^2_Eis label occurs in H^2 of the boundary

    @property
    def consistent(self) -> bool:
        return self.one_dimensional and self.in_boundary and (
            self.ghost_nonzero == (self.branch is Branch.GHOST))


def branch_analysis(weight: Sequence[int], registry: FactsRegistry | None = None
                    ) -> tuple[BranchReport, BranchReport]:
    """(no-ghost report, ghost report) for one of the weights (1,1,0), (2,1,1)."""
    weight = tuple(weight)
    if weight not in GHOST_WEIGHTS:
        raise ValueError(f"branch analysis covers {GHOST_WEIGHTS}, not {weight}")
    reg = registry or load_registry()
    expected_dim = int(reg.fact("gl3_eisenstein_dims")["dim"])
    degree = int(reg.fact("gl3_eisenstein_dims")["degree"])
    pgh = tuple(potentially_ghost(weight)[degree])
    boundary = boundary_cohomology(3, weight, registry=reg)
    boundary_tori = {e.torus for _, e in boundary.by_degree().get(degree, [])}
    reports = []
    for branch in (Branch.NO_GHOST, Branch.GHOST):
        coh = registry_cohomology("GL3", weight, branch, reg)
        (label,) = coh[degree]
        reports.append(BranchReport(
            weight, branch, ModuleLabel.from_torus(label.torus),
            pgh,
            any(hecke_isomorphic(ModuleLabel.from_torus(label.torus), g) for g in pgh),
            label.dim == expected_dim and set(coh) == {degree},
            label.torus in boundary_tori,
        ))
    return reports[0], reports[1]


# ---------------------------------------------------------------------------
# the GL_4 deduction


class ProofError(Exception):
    def __init__(self, step: int, message: str):
        super().__init__(f"step {step}: {message}")
        self.step = step


@dataclass(frozen=True)
class Step:
    index: int
    statement: str
    inputs: tuple[str, ...]
    rule: str
    citation: str
    value: Any = field(default=None, compare=False)

    def record(self) -> dict:
        return {"step": self.index, "statement": self.statement, "inputs": list(self.inputs),
                "rule": self.rule, "citation": self.citation}


@dataclass(frozen=True)
class Transcript:
    steps: tuple[Step, ...]

    @property
    def conclusion(self) -> str:
        return self.steps[-1].statement

    def render(self) -> str:
        lines = []
        for s in self.steps:
            lines.append(f"[{s.index}] {s.statement}")
            if s.inputs:
                lines.append(f"    from: {', '.join(s.inputs)}")
            lines.append(f"    rule: {s.rule}")
            lines.append(f"    cite: {s.citation}")
        lines.append(self.conclusion)
        return "\n".join(lines)

    def records(self) -> list[dict]:
        return [s.record() for s in self.steps]


def _chi(dims: dict[int, int]) -> int:
    return sum((-1) ** d * v for d, v in dims.items())


def gl4_trivial_and_det_dims(sl4: dict[int, int], chi_triv: int, chi_det: int
                             ) -> tuple[dict[int, int], dict[int, int]]:
    """
    Split H^*(SL_4(Z), Q) = H^*(GL_4(Z), Q) + H^*(GL_4(Z), det) degreewise,
    with H^0 going to the trivial summand and the Euler characteristics
    prescribed.  Raises if the split is not unique.
    """
    degrees = sorted(sl4)
    fits = []
    for parts in product(*(range(sl4[d] + 1) for d in degrees)):
        triv = dict(zip(degrees, parts))
        det = {d: sl4[d] - triv[d] for d in degrees}
        if triv.get(0, 0) != 1 or det.get(0, 0) != 0:
            continue
        if _chi(triv) == chi_triv and _chi(det) == chi_det:
            fits.append(({d: v for d, v in triv.items() if v}, {d: v for d, v in det.items() if v}))
    if len(fits) != 1:
        raise ValueError(f"{len(fits)} ways to split {sl4} with chi = ({chi_triv}, {chi_det})")
    return fits[0]


def _fmt_dims(d: dict[int, int]) -> str:
    return ", ".join(f"H^{k} = Q^{v}" if v > 1 else f"H^{k} = Q" for k, v in sorted(d.items())) or "0"


def prove_ghost(registry: FactsRegistry | None = None) -> Transcript:
    """Replay the deduction, checking every step; raises ProofError on the first failure."""
    reg = registry or load_registry()
    det, triv = (1, 1, 1, 1), (0, 0, 0, 0)
    steps: list[Step] = []

    def check(cond: bool, msg: str):
        if not cond:
            raise ProofError(len(steps) + 1, msg)

    # 1
    chi_t, chi_d = euler_characteristic(4, triv), euler_characteristic(4, det)
    check(chi_t == 1 and chi_d == -1, f"chi_h(GL_4, Q) = {chi_t}, chi_h(GL_4, det) = {chi_d}")
    steps.append(Step(1, "chi_h(GL_4(Z), Q) = 1 and chi_h(GL_4(Z), det) = -1", (),
                      "sum over torsion classes of Res(f_A) chi(C(A)) Tr(A|V)",
                      "torsion-class formula for the homological Euler characteristic", (chi_t, chi_d)))

    # 2, 3
    sl4 = reg.dims("sl4_trivial")
    try:
        dt, dd = gl4_trivial_and_det_dims(sl4, int(chi_t), int(chi_d))
    except ValueError as exc:
        raise ProofError(2, str(exc)) from None
    check(dt == {0: 1}, f"H^*(GL_4(Z), Q) came out as {dt}")
    steps.append(Step(2, f"H^*(GL_4(Z), Q): {_fmt_dims(dt)}", ("step 1", "sl4_trivial"),
                      "Ind_{SL_4}^{GL_4} Q = Q + det; H^3 cannot sit in the trivial summand without making chi 0",
                      reg.citation("sl4_trivial"), dt))
    if dd != {3: 1}:
        raise ProofError(3, f"H^*(GL_4(Z), det) came out as {dd}")
    steps.append(Step(3, f"H^*(GL_4(Z), det): {_fmt_dims(dd)}", ("step 2", "sl4_trivial"),
                      "complement of the trivial summand in H^*(SL_4(Z), Q)",
                      reg.citation("sl4_trivial"), dd))

    # 4
    constraints = standard_constraints(4, det, reg)
    check(len(constraints) == 1 and constraints[0].dim == 0, "no middle-degree vanishing constraint")
    (c4,) = constraints
    steps.append(Step(4, f"H^{c4.degree}_boundary(GL_4(Z), det) = 0", ("sl4_trivial", "boundary_duality"),
                      "H^4_Eis(SL_4) = 0 and dim H_Eis = 1/2 dim H_boundary in the middle degree",
                      c4.citation, c4))

    # 5
    nogo = boundary_cohomology(4, det, Branch.NO_GHOST, constraints, reg)
    check(isinstance(nogo, Contradiction), "no-ghost branch did not contradict the constraint")
    check(any(str(e) == "(0|2|0|2)" and p + q == 4 for (p, q), e in nogo.survivors),
          f"unexpected survivors {nogo.survivors}")
    names = ", ".join(f"{e} at E_2^{{{p},{q}}}" for (p, q), e in nogo.survivors)
    steps.append(Step(5, f"no-ghost branch: {names} survives to total degree 4, contradicting step 4",
                      ("step 4", "gl3_classes[no-ghost]"),
                      "d_2 onto E_2^{2,2} needs an isomorphic Hecke module in E_2^{0,3}; none exists",
                      "label matching of Hecke modules; boundary spectral sequence", nogo))

    # 6
    reports = [branch_analysis(w, reg) for w in GHOST_WEIGHTS]
    for no, gh in reports:
        check(no.consistent and gh.consistent, f"inconsistent branch data for {gh.weight}")
    labels = {gh.weight: gh.h2_eis for _, gh in reports}
    steps.append(Step(6, "Gh^2(GL_3(Z), V) != 0 for V = V_{1,1,0}, V_{2,1,1}: "
                         f"H^2(GL_3(Z), V_{{1,1,0}}) = {labels[(1, 1, 0)]}, "
                         f"H^2(GL_3(Z), V_{{2,1,1}}) = {labels[(2, 1, 1)]}",
                      ("step 5", "gl3_eisenstein_dims"),
                      "the two weights are dual, so their branches agree; step 5 excludes no-ghost",
                      reg.citation("gl3_eisenstein_dims"), labels))

    # 7
    res = boundary_cohomology(4, det, Branch.GHOST, constraints, reg)
    check(isinstance(res, BoundaryCohomology), "ghost branch is inconsistent with step 4")
    h3 = res.labels(3)
    check(h3 == ["(0|2|0|2)"], f"H^3_boundary = {h3}")
    check(res.labels(8) == ["(-2|0|2|4)"] and set(res.dims()) == {3, 8},
          f"unexpected boundary cohomology {res.dims()}")
    steps.append(Step(7, "ghost branch: H^3_boundary(GL_4(Z), det) = (0|2|0|2), "
                         "H^8_boundary(GL_4(Z), det) = (-2|0|2|4)",
                      ("step 4", "step 6"),
                      "d_2: E_2^{0,3} -> E_2^{2,2} has rank 1, forced by step 4; E_3 = E_infinity",
                      "boundary spectral sequence", res))

    # 8
    interior = [int(d) for d in reg.fact("gl4_interior_degrees")["degrees"]]
    check(3 not in interior, "interior cohomology reaches degree 3")
    check(dd.get(3) == res.dims()[3], "dimension mismatch between H^3 and H^3_boundary")
    steps.append(Step(8, f"H^3(GL_4(Z),det) = {h3[0]}", ("step 3", "step 7", "gl4_interior_degrees"),
                      "no interior classes in degree 3, so H^3 injects into H^3_boundary; both are one-dimensional",
                      reg.citation("gl4_interior_degrees"), h3[0]))
    return Transcript(tuple(steps))
