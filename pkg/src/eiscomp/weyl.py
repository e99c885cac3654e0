"""
Type A Weyl combinatorics for GL_n: permutation words, the rho-shifted dot
action, standard parabolics as compositions, and Kostant representatives.

Words follow the one-line convention where the word lists the values in
position order, so the word 231 sends 1 to position 3, 2 to position 1 and
3 to position 2.  Acting on a vector x, the entry x_i lands in position w(i):

>>> dot_action(WeylWord.parse("213"), (1, 1, 0))
(0, 2, 0)
>>> dot_action(WeylWord.parse("4321"), (1, 1, 1, 1))
(-2, 0, 2, 4)
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import factorial, prod
from typing import Iterator, Sequence

__all__ = [
    "Weight", "WeylWord", "Composition", "KostantDatum",
    "all_words", "dot_action", "length", "is_dominant", "rho",
    "kostant_reps", "face_incidence", "refinement_sign", "compositions",
    "FACE_ALIASES", "parse_face", "face_name",
]

Weight = tuple[int, ...]


def is_dominant(weight: Sequence[int]) -> bool:
    return all(weight[i] >= weight[i + 1] for i in range(len(weight) - 1))


def rho(n: int) -> Weight:
    # any constant shift of the half-sum of positive roots gives the same dot action
    return tuple(range(n - 1, -1, -1))


@dataclass(frozen=True, order=True)
class WeylWord:
    """A permutation of 1..n in one-line notation."""
    word: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.word) != list(range(1, len(self.word) + 1)):
            raise ValueError(f"{self.word} is not a permutation of 1..{len(self.word)}")

    @classmethod
    def parse(cls, s: str) -> "WeylWord":
        s = s.strip()
        if "," in s:
            return cls(tuple(int(x) for x in s.split(",")))
        return cls(tuple(int(ch) for ch in s))

    @classmethod
    def identity(cls, n: int) -> "WeylWord":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.word)

    def position(self, i: int) -> int:
        """w(i): the 1-based position of the value i."""
        return self.word.index(i) + 1

    def act(self, x: Sequence[int]) -> Weight:
        """Permute coordinates: (w.x)_{w(i)} = x_i."""
        if len(x) != self.n:
            raise ValueError(f"vector of length {len(x)} for a word on {self.n} letters")
        return tuple(x[v - 1] for v in self.word)

    def compose(self, other: "WeylWord") -> "WeylWord":
        """self o other as maps i -> position, so (u o v).x = u.(v.x)."""
        if other.n != self.n:
            raise ValueError("size mismatch")
        # (u o v)(i) = u(v(i)); the word lists, per position p, the i with (u o v)(i) = p
        word = [0] * self.n
        for i in range(1, self.n + 1):
            word[self.position(other.position(i)) - 1] = i
        return WeylWord(tuple(word))

    def inverse(self) -> "WeylWord":
        return WeylWord(tuple(self.position(i) for i in range(1, self.n + 1)))

    @property
    def length(self) -> int:
        return length(self)

    def __str__(self) -> str:
        return "".join(map(str, self.word)) if self.n < 10 else ",".join(map(str, self.word))


def all_words(n: int) -> list[WeylWord]:
    """S_n in lexicographic word order."""
    return [WeylWord(p) for p in permutations(range(1, n + 1))]


def length(w: WeylWord) -> int:
    """Inversion count of the word."""
    word = w.word
    return sum(1 for i in range(len(word)) for j in range(i + 1, len(word)) if word[i] > word[j])


def dot_action(w: WeylWord, weight: Sequence[int]) -> Weight:
    """w(lambda + rho) - rho."""
    if len(weight) != w.n:
        raise ValueError(f"weight of length {len(weight)} for a word on {w.n} letters")
    r = rho(w.n)
    shifted = w.act(tuple(a + b for a, b in zip(weight, r)))
    return tuple(a - b for a, b in zip(shifted, r))


# ---------------------------------------------------------------------------
# parabolics


@dataclass(frozen=True, order=True)
class Composition:
    """Ordered block sizes of a standard parabolic subgroup."""
    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts or any(p <= 0 for p in self.parts):
            raise ValueError(f"bad composition {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def rank(self) -> int:
        """Number of cuts; 1 for maximal parabolics, n-1 for the Borel."""
        return len(self.parts) - 1

    @property
    def cuts(self) -> frozenset[int]:
        out, acc = set(), 0
        for p in self.parts[:-1]:
            acc += p
            out.add(acc)
        return frozenset(out)

    @classmethod
    def from_cuts(cls, n: int, cuts) -> "Composition":
        pts = [0] + sorted(cuts) + [n]
        return cls(tuple(b - a for a, b in zip(pts, pts[1:])))

    def blocks(self) -> list[range]:
        """0-based coordinate ranges of the blocks."""
        out, start = [], 0
        for p in self.parts:
            out.append(range(start, start + p))
            start += p
        return out

    def split(self, x: Sequence[int]) -> tuple[Weight, ...]:
        return tuple(tuple(x[i] for i in b) for b in self.blocks())

    @property
    def nilradical_dim(self) -> int:
        n = self.n
        return (n * n - sum(p * p for p in self.parts)) // 2

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


def compositions(n: int) -> list[Composition]:
    """All compositions of n, coarsest first, then by cut set (largest cut first)."""
    out = []
    inner = list(range(1, n))
    for mask in range(1 << len(inner)):
        cuts = [c for k, c in enumerate(inner) if mask >> k & 1]
        out.append(Composition.from_cuts(n, cuts))
    return sorted(out, key=lambda c: (c.rank, [-x for x in sorted(c.cuts, reverse=True)]))


def face_incidence(c1: Composition, c2: Composition) -> bool:
    """True iff c2 refines c1 (c2's cut set contains c1's)."""
    if c1.n != c2.n:
        raise ValueError("compositions of different sizes")
    return c1.cuts <= c2.cuts


def refinement_sign(c1: Composition, c2: Composition) -> int:
    """
    Orientation sign for a codimension-one refinement c1 < c2: (-1)^k where k
    is the (0-based) index of the block of c1 that gets split.
    """
    extra = c2.cuts - c1.cuts
    if len(extra) != 1 or not c1.cuts <= c2.cuts:
        raise ValueError(f"{c2} is not a one-step refinement of {c1}")
    (t,) = extra
    k = sum(1 for s in c1.cuts if s < t)
    return -1 if k % 2 else 1


FACE_ALIASES: dict[str, Composition] = {
    "Q_12": Composition((2, 1)),
    "Q_23": Composition((1, 2)),
    "Q_0": Composition((1, 1, 1)),
    "P_13": Composition((3, 1)),
    "P_12,34": Composition((2, 2)),
    "P_24": Composition((1, 3)),
    "P_12": Composition((2, 1, 1)),
    "P_23": Composition((1, 2, 1)),
    "P_34": Composition((1, 1, 2)),
    "B": Composition((1, 1, 1, 1)),
}


def face_name(c: Composition) -> str:
    for name, comp in FACE_ALIASES.items():
        if comp == c:
            return name
    return f"({c})"


def parse_face(s: str, n: int | None = None) -> Composition:
    """Accept an alias ("P_12,34", "P_12.34", "B", "Q_0") or block sizes ("2,1,1")."""
    key = s.strip().replace(".", ",")
    if key.upper() in ("B", "BOREL", "Q_0") and n:
        c = Composition((1,) * n)
    elif key in FACE_ALIASES:
        c = FACE_ALIASES[key]
    else:
        try:
            c = Composition(tuple(int(x) for x in key.strip("()").split(",")))
        except ValueError:
            raise ValueError(f"unknown face {s!r}") from None
    if n is not None and c.n != n:
        raise ValueError(f"face {s!r} is a parabolic of GL_{c.n}, not GL_{n}")
    return c


# ---------------------------------------------------------------------------
# Kostant representatives


@dataclass(frozen=True)
class KostantDatum:
    w: WeylWord
    length: int
    levi_weight: tuple[Weight, ...]  # dot-action weight split along the blocks

    @property
    def weight(self) -> Weight:
        return tuple(x for block in self.levi_weight for x in block)


def kostant_reps(c: Composition, weight: Sequence[int]) -> list[KostantDatum]:
    """
    Minimal length representatives of W_P \\ W, with their Levi weights.

    A word is kept when w(lambda + rho) strictly decreases inside each block;
    since lambda + rho has distinct entries there is exactly one per coset.
    """
    weight = tuple(weight)
    if len(weight) != c.n:
        raise ValueError(f"weight {weight} does not fit GL_{c.n}")
    if not is_dominant(weight):
        raise ValueError(f"weight {weight} is not dominant")
    shifted = tuple(a + b for a, b in zip(weight, rho(c.n)))
    out = []
    for w in all_words(c.n):
        moved = w.act(shifted)
        if all(moved[i] > moved[i + 1] for b in c.blocks() for i in b[:-1]):
            out.append(KostantDatum(w, length(w), c.split(dot_action(w, weight))))
    return out


def coset_count(c: Composition) -> int:
    return factorial(c.n) // prod(factorial(p) for p in c.parts)


def words_of_levi(c: Composition) -> Iterator[WeylWord]:
    """W_P: permutations of positions preserving every block."""
    for w in all_words(c.n):
        if all(w.word[i] - 1 in b for b in c.blocks() for i in b):
            yield w
