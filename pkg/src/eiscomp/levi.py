"""
Cohomology of the Levi factors GL_1(Z), GL_2(Z), GL_3(Z) as labelled
Hecke-module symbols, plus the registry of imported GL_3 / SL_4 facts.

Labels use the bar notation: (a) for H^0(GL_1(Z), V_a), (a|a) for
H^0(GL_2(Z), det^a), (a,b) for the Eisenstein part of H^1(GL_2(Z), V_{a,b}),
\\overline{a,b} for its interior part, and (a|b,c) etc. for tensor products.

>>> gl2_cohomology(3, 1)
{1: [ModuleLabel('(3,1)')]}
>>> torus_restriction(kunneth([gl2_cohomology(1, -1), gl1_cohomology(2)])[1][0])
(-2, 2, 2)
"""

from __future__ import annotations

import enum
import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from math import prod
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .exact_math import cusp_dim

__all__ = [
    "Segment", "GL1", "GL2H0", "GL2H1", "GL3Fact", "ModuleLabel", "GradedSum",
    "Branch", "FactsRegistry", "RegistryError", "RegistryMiss", "BranchRequired",
    "gl1_cohomology", "gl2_cohomology", "registry_cohomology", "kunneth",
    "torus_restriction", "hecke_isomorphic", "load_registry", "euler_of",
    "REGISTRY_ENV",
]

REGISTRY_ENV = "EISCOMP_REGISTRY"


class RegistryError(Exception):
    """The facts registry cannot answer a query."""


class RegistryMiss(RegistryError):
    pass


class BranchRequired(RegistryError):
    pass


class Branch(str, enum.Enum):
    GHOST = "ghost"
    NO_GHOST = "no-ghost"
    UNDETERMINED = "undetermined"

    @classmethod
    def parse(cls, value) -> "Branch":
        if value is None:
            return cls.UNDETERMINED
        if isinstance(value, cls):
            return value
        return cls(str(value).strip().lower().replace("_", "-"))

    def __str__(self) -> str:
        return self.value


# ---------------------------------------------------------------------------
# segments and labels


class Segment:
    """One tensor factor of a label. Subclasses fill in the three properties."""

    @property
    def symbol(self) -> str:
        raise NotImplementedError

    @property
    def torus(self) -> tuple[int, ...] | None:
        raise NotImplementedError

    @property
    def dim(self) -> int:
        return 1

    @property
    def restriction_zero(self) -> bool:
        return False


@dataclass(frozen=True)
class GL1(Segment):
    a: int

    @property
    def symbol(self) -> str:
        return str(self.a)

    @property
    def torus(self):
        return (self.a,)


@dataclass(frozen=True)
class GL2H0(Segment):
    """H^0(GL_2(Z), det^a)."""
    a: int

    @property
    def symbol(self) -> str:
        return f"{self.a}|{self.a}"

    @property
    def torus(self):
        return (self.a, self.a)


@dataclass(frozen=True)
class GL2H1(Segment):
    a: int
    b: int
    part: str  # "interior" or "eisenstein"

    def __post_init__(self):
        if self.a <= self.b or (self.a + self.b) % 2:
            raise ValueError(f"no H^1 segment for GL_2 weight ({self.a},{self.b})")
        if self.part not in ("interior", "eisenstein"):
            raise ValueError(f"unknown part {self.part!r}")

    @property
    def symbol(self) -> str:
        if self.part == "interior":
            return f"\\overline{{{self.a},{self.b}}}"
        return f"{self.a},{self.b}"

    @property
    def torus(self):
        # cuspidal classes restrict to zero on the torus face
        if self.part == "interior":
            return None
        return (self.b - 1, self.a + 1)

    @property
    def dim(self) -> int:
        return cusp_dim(self.a - self.b + 2) if self.part == "interior" else 1


@dataclass(frozen=True)
class GL3Fact(Segment):
    """A GL_3(Z) class imported from the registry."""
    mu: tuple[int, int, int]
    key: str
    label_symbol: str
    torus_tuple: tuple[int, ...] | None
    zero_on_faces: bool = False

    @property
    def symbol(self) -> str:
        return self.label_symbol

    @property
    def torus(self):
        return self.torus_tuple

    @property
    def restriction_zero(self) -> bool:
        return self.zero_on_faces


@dataclass(frozen=True)
class ModuleLabel:
    segments: tuple[Segment, ...]

    @classmethod
    def from_torus(cls, t: Sequence[int]) -> "ModuleLabel":
        return cls(tuple(GL1(a) for a in t))

    @property
    def dim(self) -> int:
        return prod(s.dim for s in self.segments)

    @property
    def torus(self) -> tuple[int, ...] | None:
        out: list[int] = []
        for s in self.segments:
            t = s.torus
            if t is None:
                return None
            out.extend(t)
        return tuple(out)

    @property
    def restriction_zero(self) -> bool:
        return any(s.restriction_zero for s in self.segments)

    @property
    def symbol(self) -> str:
        return "(" + "|".join(s.symbol for s in self.segments) + ")"

    def __str__(self) -> str:
        return self.symbol

    def __repr__(self) -> str:
        return f"ModuleLabel({self.symbol!r})"

    def __mul__(self, other: "ModuleLabel") -> "ModuleLabel":
        return ModuleLabel(self.segments + other.segments)


# degree -> labels; zero-dimensional labels are never stored
GradedSum = dict[int, list[ModuleLabel]]


def _graded(items: Iterable[tuple[int, ModuleLabel]]) -> GradedSum:
    out: GradedSum = {}
    for deg, lab in items:
        if lab.dim > 0:
            out.setdefault(deg, []).append(lab)
    return dict(sorted(out.items()))


def euler_of(g: Mapping[int, Sequence]) -> int:
    """Alternating dimension sum of a graded sum of labels (or of objects with .label)."""
    total = 0
    for deg, items in g.items():
        for x in items:
            lab = getattr(x, "label", x)
            total += (-1) ** deg * lab.dim
    return total


# ---------------------------------------------------------------------------
# base cases


def gl1_cohomology(a: int) -> GradedSum:
    """GL_1(Z) = {+-1}: V_a has invariants iff a is even."""
    return {0: [ModuleLabel((GL1(a),))]} if a % 2 == 0 else {}


def gl2_cohomology(a: int, b: int) -> GradedSum:
    """
    H^*(GL_2(Z), V_{a,b}) for a >= b.

    Zero when a + b is odd (-I acts by -1). For a = b only H^0 = (a|a),
    present when a is even. For a > b the interior part of H^1 has the
    dimension of weight a - b + 2 cusp forms, and there is a one-dimensional
    Eisenstein class exactly when a and b are both odd.
    """
    if a < b:
        raise ValueError(f"GL_2 weight ({a},{b}) is not dominant")
    if (a + b) % 2:
        return {}
    if a == b:
        return {0: [ModuleLabel((GL2H0(a),))]} if a % 2 == 0 else {}
    items = [(1, ModuleLabel((GL2H1(a, b, "interior"),)))]
    if a % 2:
        items.append((1, ModuleLabel((GL2H1(a, b, "eisenstein"),))))
    return _graded(items)


def kunneth(parts: Sequence[GradedSum]) -> GradedSum:
    """Graded tensor product: degrees add, labels concatenate."""
    acc: GradedSum = {0: [ModuleLabel(())]}
    for part in parts:
        nxt: list[tuple[int, ModuleLabel]] = []
        for d1, labs1 in acc.items():
            for d2, labs2 in part.items():
                for x in labs1:
                    for y in labs2:
                        nxt.append((d1 + d2, x * y))
        acc = _graded(nxt)
        if not acc:
            return {}
    return acc


def torus_restriction(label: ModuleLabel) -> tuple[int, ...] | None:
    return label.torus


def hecke_isomorphic(l1: ModuleLabel, l2: ModuleLabel) -> bool:
    """One-dimensional labels are isomorphic iff their torus characters agree."""
    if l1.dim != 1 or l2.dim != 1:
        raise ValueError("Hecke comparison is only defined for one-dimensional labels")
    t1, t2 = l1.torus, l2.torus
    return t1 is not None and t1 == t2


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class FactsRegistry:
    """Imported results, each with its citation. Immutable once loaded."""
    facts: Mapping[str, Mapping]
    gl3_classes: Mapping[tuple[int, ...], Mapping]
    source: str = field(default="<builtin>", compare=False)

    @classmethod
    def from_dict(cls, data: Mapping, source: str = "<dict>") -> "FactsRegistry":
        facts = data.get("facts", {})
        classes = {}
        for entry in data.get("gl3_classes", []):
            mu = tuple(entry["weight"])
            if mu in classes:
                raise RegistryError(f"duplicate GL_3 entry for {mu}")
            classes[mu] = entry
        for key, fact in facts.items():
            if not fact.get("citation"):
                raise RegistryError(f"fact {key!r} has no citation")
        for mu, entry in classes.items():
            if not entry.get("citation"):
                raise RegistryError(f"GL_3 entry {mu} has no citation")
        return cls(facts, classes, source)

    def fact(self, key: str) -> Mapping:
        try:
            return self.facts[key]
        except KeyError:
            raise RegistryMiss(f"registry {self.source} has no fact {key!r}") from None

    def citation(self, key: str) -> str:
        return self.fact(key)["citation"]

    def dims(self, key: str) -> dict[int, int]:
        return {int(k): int(v) for k, v in self.fact(key)["dims"].items()}


@lru_cache(maxsize=8)
def _load(path: str | None) -> FactsRegistry:
    if path is None:
        text = resources.files("eiscomp").joinpath("data/registry.json").read_text()
        return FactsRegistry.from_dict(json.loads(text), "<builtin>")
    return FactsRegistry.from_dict(json.loads(Path(path).read_text()), path)


def load_registry(path: str | os.PathLike | None = None) -> FactsRegistry:
    """The shipped registry, or the file named by `path` or $EISCOMP_REGISTRY."""
    if path is None:
        path = os.environ.get(REGISTRY_ENV) or None
    return _load(None if path is None else str(path))


def _lookup_gl3(reg: FactsRegistry, mu: Weight) -> tuple[Mapping, int]:
    """
    Registry entry for mu, allowing a twist by det^(2k): det^2 is trivial on
    GL_3(Z), so only the torus characters move (by 2k in every slot).
    """
    if mu in reg.gl3_classes:
        return reg.gl3_classes[mu], 0
    for nu, entry in reg.gl3_classes.items():
        diff = {a - b for a, b in zip(mu, nu)}
        if len(diff) == 1 and (d := diff.pop()) % 2 == 0:
            return entry, d
    raise RegistryMiss(f"no registry entry for H^*(GL_3(Z), V{mu})")


def registry_cohomology(group: str, mu: Sequence[int], branch=Branch.UNDETERMINED,
                        registry: FactsRegistry | None = None) -> GradedSum:
    """H^*(GL_3(Z), V_mu) as recorded in the registry."""
    if group != "GL3":
        raise RegistryMiss(f"no registry data for group {group}")
    mu = tuple(mu)
    if len(mu) != 3:
        raise ValueError(f"GL_3 weight expected, got {mu}")
    if sum(mu) % 2:
        return {}
    reg = registry or load_registry()
    entry, shift = _lookup_gl3(reg, mu)
    if "branches" in entry:
        branch = Branch.parse(branch)
        if branch is Branch.UNDETERMINED:
            raise BranchRequired(f"H^*(GL_3(Z), V{mu}) depends on the ghost/no-ghost branch")
        data = entry["branches"][branch.value]
    else:
        data = entry
    torus = data.get("torus")
    if torus is not None:
        torus = tuple(t + shift for t in torus)
    symbol = entry["symbol"]
    if shift:
        symbol = "|".join(map(str, torus)) if "|" in symbol else ",".join(map(str, mu))
    seg = GL3Fact(mu, entry["citation"], symbol, torus, bool(data.get("restriction_zero", False)))
    return {int(entry["degree"]): [ModuleLabel((seg,))]}
