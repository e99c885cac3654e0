"""
Homological Euler characteristics of GL_n(Z), n <= 4, from torsion classes:

    chi_h(GL_n(Z), V) = sum_A Res(f_A) chi(C(A)) Tr(A | V)

over block-diagonal torsion representatives A built from 1, -1, T_3, T_4,
T_6 (the latter three at most once, +-1 at most twice), plus companion
matrices of Phi_5, Phi_8, Phi_10, Phi_12 in rank four.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Sequence

from .exact_math import (
    FactoredCharPoly, Matrix, bareiss_det, block_diag, cyclotomic,
    res_of_factored, schur_value,
)
from .weyl import is_dominant

__all__ = [
    "BLOCKS", "TorsionBlock", "TorsionClass", "CentralizerDescriptor",
    "enumerate_torsion", "centralizer_chi", "euler_characteristic",
    "Table1Row", "table1", "table1_zero_rows", "format_over_576",
]


@dataclass(frozen=True)
class TorsionBlock:
    name: str
    matrix: Matrix
    cyclotomic_index: int
    order: int

    @property
    def size(self) -> int:
        return len(self.matrix)


def _companion(n: int) -> Matrix:
    coeffs = cyclotomic(n).coeffs
    d = len(coeffs) - 1
    rows = [[0] * d for _ in range(d)]
    for i in range(1, d):
        rows[i][i - 1] = 1
    for i in range(d):
        rows[i][d - 1] = -coeffs[i]
    return tuple(tuple(r) for r in rows)


BLOCKS: dict[str, TorsionBlock] = {
    "1": TorsionBlock("1", ((1,),), 1, 1),
    "-1": TorsionBlock("-1", ((-1,),), 2, 2),
    "T3": TorsionBlock("T3", ((0, 1), (-1, -1)), 3, 3),
    "T4": TorsionBlock("T4", ((0, 1), (-1, 0)), 4, 4),
    "T6": TorsionBlock("T6", ((0, -1), (1, 1)), 6, 6),
}
_MAX_USES = {"1": 2, "-1": 2, "T3": 1, "T4": 1, "T6": 1}
_COMPANIONS = {n: TorsionBlock(f"C{n}", _companion(n), n, n) for n in (5, 8, 10, 12)}


@dataclass(frozen=True)
class TorsionClass:
    blocks: tuple[TorsionBlock, ...]

    @property
    def n(self) -> int:
        return sum(b.size for b in self.blocks)

    @property
    def matrix(self) -> Matrix:
        return block_diag([b.matrix for b in self.blocks])

    @property
    def charpoly(self) -> FactoredCharPoly:
        return FactoredCharPoly.of(*(b.cyclotomic_index for b in self.blocks))

    @property
    def determinant(self) -> int:
        return bareiss_det(self.matrix)

    def __str__(self) -> str:
        return "diag(" + ", ".join(b.name for b in self.blocks) + ")"


@lru_cache(maxsize=None)
def enumerate_torsion(n: int) -> tuple[TorsionClass, ...]:
    """Block multisets of total size n, in canonical block order."""
    if not 1 <= n <= 4:
        raise ValueError(f"torsion enumeration is tabulated for 1 <= n <= 4, not {n}")
    names = list(BLOCKS)
    out = []
    for uses in product(*(range(_MAX_USES[k] + 1) for k in names)):
        if sum(u * BLOCKS[k].size for u, k in zip(uses, names)) != n:
            continue
        blocks = tuple(BLOCKS[k] for u, k in zip(uses, names) for _ in range(u))
        out.append(TorsionClass(blocks))
    if n == 4:
        out.extend(TorsionClass((b,)) for b in _COMPANIONS.values())
    return tuple(sorted(out, key=lambda t: [i for i, k in t.charpoly.factors for _ in range(k)]))


@dataclass(frozen=True)
class CentralizerDescriptor:
    kind: str
    chi: Fraction
    rationale: str


_UNIT_GROUP = {1: ("C_2", Fraction(1, 2)), 2: ("C_2", Fraction(1, 2)),
               3: ("C_6", Fraction(1, 6)), 4: ("C_4", Fraction(1, 4)), 6: ("C_6", Fraction(1, 6))}


def centralizer_chi(t: TorsionClass) -> CentralizerDescriptor:
    """Orbifold Euler characteristic of the centralizer, by rule table."""
    f = t.charpoly
    for idx, k in f.factors:
        if idx in (1, 2) and k >= 3:
            return CentralizerDescriptor(
                f"contains GL_{k}(Z)", Fraction(0), f"Phi_{idx}^{k}: chi(GL_{k}(Z)) = 0 for k >= 3")
        if idx in (5, 8, 10, 12):
            return CentralizerDescriptor(
                f"units of Z[zeta_{idx}]", Fraction(0),
                f"Phi_{idx}: unit group has a free factor Z (Dirichlet), chi = 0")
        if idx in (3, 4, 6) and k >= 2:
            return CentralizerDescriptor(
                f"GL_{k}(Z[zeta_{idx}])", Fraction(0), f"Phi_{idx}^{k}: chi(GL_{k}(Z[zeta_{idx}])) = 0")
    kinds, chi = [], Fraction(1)
    for idx, k in f.factors:
        if k == 2:
            kinds.append("GL_2(Z)")
            chi *= Fraction(-1, 24)
        else:
            name, c = _UNIT_GROUP[idx]
            kinds.append(name)
            chi *= c
    return CentralizerDescriptor(" x ".join(kinds), chi,
                                 "product of GL_2(Z) (chi = -1/24) and finite unit groups (chi = 1/|C|)")


def euler_characteristic(n: int, weight: Sequence[int]) -> Fraction:
    """chi_h(GL_n(Z), V_weight); Tr(A^-1|V) = Tr(A|V) for these representatives."""
    weight = tuple(weight)
    if len(weight) != n:
        raise ValueError(f"weight {weight} does not fit GL_{n}")
    if not is_dominant(weight):
        raise ValueError(f"weight {weight} is not dominant")
    total = Fraction(0)
    for t in enumerate_torsion(n):
        chi = centralizer_chi(t).chi
        if chi:
            total += res_of_factored(t.charpoly) * chi * schur_value(weight, t.matrix)
    return total


# ---------------------------------------------------------------------------
# the GL_4 table


@dataclass(frozen=True)
class Table1Row:
    charpoly: FactoredCharPoly
    centralizer: str
    det: int
    chi: Fraction
    res: int
    product: Fraction


def table1() -> list[Table1Row]:
    """Torsion classes of GL_4(Z) with nonzero chi(C(A)) R(f)."""
    rows = []
    for t in enumerate_torsion(4):
        c = centralizer_chi(t)
        r = res_of_factored(t.charpoly)
        if c.chi:
            rows.append(Table1Row(t.charpoly, c.kind, t.determinant, c.chi, r, c.chi * r))
    return rows


def table1_zero_rows() -> list[tuple[FactoredCharPoly, str]]:
    return [(t.charpoly, centralizer_chi(t).rationale)
            for t in enumerate_torsion(4) if not centralizer_chi(t).chi]


def format_over_576(x: Fraction) -> str:
    """Render over the common denominator 24^2 when that is exact."""
    scaled = x * 576
    if scaled.denominator == 1:
        return f"{scaled.numerator}/24^2"
    return str(x)
