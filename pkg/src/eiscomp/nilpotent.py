"""
Brute-force Lie algebra cohomology H^*(n_P, V) of a nilpotent radical via
the Chevalley-Eilenberg complex, over Q.

Used as an independent check on Kostant's formula. Supported modules are
V = Lambda^k(std) twisted by a power of det, which covers highest weights of
the form (m+1, ..., m+1, m, ..., m); det acts trivially on n_P.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Sequence

from .linalg import rank
from .weyl import Composition, kostant_reps
from .exact_math import weyl_dimension

__all__ = [
    "radical_basis", "exterior_module", "ce_differential", "ce_cohomology_dims",
    "kostant_dims",
]

Elem = tuple[int, int]  # matrix unit E_ij, 0-based


def radical_basis(c: Composition) -> list[Elem]:
    """E_ij with i in an earlier block than j."""
    block_of = {}
    for b, rng in enumerate(c.blocks()):
        for i in rng:
            block_of[i] = b
    n = c.n
    return [(i, j) for i in range(n) for j in range(n) if block_of[i] < block_of[j]]


def _bracket(x: Elem, y: Elem) -> list[tuple[int, Elem]]:
    # [E_ij, E_kl] = d_jk E_il - d_li E_kj
    (i, j), (k, l) = x, y
    out = []
    if j == k:
        out.append((1, (i, l)))
    if l == i:
        out.append((-1, (k, j)))
    return out


def exterior_module(n: int, weight: Sequence[int]):
    """
    Basis (k-subsets of range(n)) and action of E_ij for V_weight when weight
    is a fundamental weight plus a multiple of det.
    """
    weight = tuple(weight)
    m = weight[-1]
    shape = [w - m for w in weight]
    k = sum(shape)
    if shape != [1] * k + [0] * (n - k):
        raise ValueError(f"weight {weight} is not an exterior power twisted by det")
    basis = list(combinations(range(n), k))
    index = {b: t for t, b in enumerate(basis)}

    def act(e: Elem, t: int) -> list[tuple[int, int]]:
        # E_ij e_j = e_i, extended as a derivation on wedges
        i, j = e
        s = basis[t]
        if j not in s or i in s:
            return []
        new = [i if x == j else x for x in s]
        # sign of sorting the replaced wedge
        inv = sum(1 for a in range(len(new)) for b in range(a + 1, len(new)) if new[a] > new[b])
        return [((-1) ** inv, index[tuple(sorted(new))])]

    return basis, act


def _sort_sign(seq: list[int]) -> tuple[int, tuple[int, ...]] | None:
    if len(set(seq)) != len(seq):
        return None
    inv = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
    return (-1) ** inv, tuple(sorted(seq))


def ce_differential(c: Composition, weight: Sequence[int], p: int):
    """Matrix of d: C^p -> C^{p+1} with C^p = Hom(Lambda^p n, V); rows index C^{p+1}."""
    nb = radical_basis(c)
    pos = {e: t for t, e in enumerate(nb)}
    vbasis, act = exterior_module(c.n, weight)
    dv = len(vbasis)
    src = [(s, v) for s in combinations(range(len(nb)), p) for v in range(dv)]
    tgt = [(s, v) for s in combinations(range(len(nb)), p + 1) for v in range(dv)]
    col = {key: t for t, key in enumerate(src)}
    row = {key: t for t, key in enumerate(tgt)}
    mat = [[Fraction(0)] * len(src) for _ in tgt]

    for (S, v) in src:
        cidx = col[(S, v)]
        phi_support = S

        def phi(args: list[int]) -> int:
            r = _sort_sign(args)
            if r is None or r[1] != phi_support:
                return 0
            return r[0]

        for T in combinations(range(len(nb)), p + 1):
            # sum_i (-1)^i x_i . phi(x_0..^i..x_p)
            for a in range(p + 1):
                rest = [T[b] for b in range(p + 1) if b != a]
                sgn = phi(rest)
                if sgn:
                    for coeff, u in act(nb[T[a]], v):
                        mat[row[(T, u)]][cidx] += (-1) ** a * sgn * coeff
            # sum_{i<j} (-1)^{i+j} phi([x_i, x_j], x_0..^i..^j..x_p)
            for a in range(p + 1):
                for b in range(a + 1, p + 1):
                    rest = [T[t] for t in range(p + 1) if t not in (a, b)]
                    for coeff, e in _bracket(nb[T[a]], nb[T[b]]):
                        if e not in pos:
                            continue
                        sgn = phi([pos[e]] + rest)
                        if sgn:
                            mat[row[(T, v)]][cidx] += (-1) ** (a + b) * coeff * sgn
    return mat


def ce_cohomology_dims(c: Composition, weight: Sequence[int]) -> dict[int, int]:
    """dim H^p(n_P, V_weight) for every p."""
    nb = radical_basis(c)
    dv = len(exterior_module(c.n, weight)[0])
    N = len(nb)
    dims_c = [comb(N, p) * dv for p in range(N + 1)]
    ranks = [rank(ce_differential(c, weight, p)) if p < N else 0 for p in range(N + 1)]
    out = {}
    for p in range(N + 1):
        h = dims_c[p] - ranks[p] - (ranks[p - 1] if p else 0)
        if h:
            out[p] = h
    return out


def kostant_dims(c: Composition, weight: Sequence[int]) -> dict[int, int]:
    """Kostant's prediction: sum of Levi Weyl dimensions per length."""
    out: dict[int, int] = {}
    for d in kostant_reps(c, weight):
        dim = 1
        for block in d.levi_weight:
            dim *= weyl_dimension(block)
        out[d.length] = out.get(d.length, 0) + dim
    return out
