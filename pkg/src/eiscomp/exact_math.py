"""
Exact integer/rational arithmetic: integer polynomials, cyclotomic
polynomials, resultants, characters of GL_m at torsion matrices, and
level-one cusp form dimensions.

Nothing here touches floating point.

>>> cyclotomic(12)
IntPolynomial(coeffs=(1, 0, -1, 0, 1))
>>> resultant(cyclotomic(1), cyclotomic(3))
3
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Iterable, Sequence

__all__ = [
    "IntPolynomial", "FactoredCharPoly", "Matrix",
    "cyclotomic", "resultant", "res_of_factored", "schur_value",
    "weyl_dimension", "cusp_dim", "bareiss_det", "mat_mul", "mat_pow",
    "identity", "block_diag", "trace",
]

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients lowest degree first, no trailing zeros."""
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        return cls(tuple(coeffs))

    @classmethod
    def x_pow_minus_one(cls, n: int) -> "IntPolynomial":
        return cls((-1,) + (0,) * (n - 1) + (1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __pow__(self, k: int) -> "IntPolynomial":
        out = IntPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def divmod_monic(self, other: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Division by a monic (leading coefficient +-1) divisor, staying in Z[x]."""
        if other.leading not in (1, -1):
            raise ValueError("divisor must have leading coefficient +-1")
        rem = list(self.coeffs)
        dq = other.degree
        quot = [0] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * other.leading  # leading is its own inverse
            if c:
                quot[k - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * b
        return IntPolynomial(tuple(quot)), IntPolynomial(tuple(rem[:dq]))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial, as (x^n - 1) / prod_{d | n, d < n} Phi_d."""
    if n < 1:
        raise ValueError(f"cyclotomic index must be positive, got {n}")
    p = IntPolynomial.x_pow_minus_one(n)
    for d in range(1, n):
        if n % d == 0:
            p, r = p.divmod_monic(cyclotomic(d))
            assert r.is_zero
    return p


# ---------------------------------------------------------------------------
# matrices over Z


def identity(m: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(m)) for i in range(m))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def mat_pow(a: Matrix, k: int) -> Matrix:
    out = identity(len(a))
    for _ in range(k):
        out = mat_mul(out, a)
    return out


def trace(a: Matrix):
    return sum(a[i][i] for i in range(len(a)))


def block_diag(blocks: Sequence[Matrix]) -> Matrix:
    m = sum(len(b) for b in blocks)
    out = [[0] * m for _ in range(m)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                out[off + i][off + j] = v
        off += len(b)
    return tuple(tuple(r) for r in out)


def bareiss_det(a: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination; exact determinant of an integer matrix."""
    m = [list(r) for r in a]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


# ---------------------------------------------------------------------------
# resultants


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """
    Resultant as the determinant of the Sylvester matrix.

    For monic inputs this is prod (alpha_i - beta_j) over the roots alpha of
    f and beta of g; in general it carries the usual factor
    lc(f)^deg(g) * lc(g)^deg(f).
    """
    if f.is_zero or g.is_zero:
        raise ValueError("resultant of the zero polynomial is undefined")
    m, n = f.degree, g.degree
    if m == 0 and n == 0:
        return 1
    if m == 0:
        return f.leading ** n
    if n == 0:
        return g.leading ** m
    size = m + n
    fc, gc = f.coeffs[::-1], g.coeffs[::-1]  # highest degree first
    rows = []
    for i in range(n):
        rows.append([0] * i + list(fc) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(gc) + [0] * (size - n - 1 - i))
    return bareiss_det(rows)


@dataclass(frozen=True)
class FactoredCharPoly:
    """A product of cyclotomic powers, stored as sorted (index, multiplicity) pairs."""
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        merged: dict[int, int] = {}
        for idx, k in self.factors:
            if k < 0 or idx < 1:
                raise ValueError(f"bad factor Phi_{idx}^{k}")
            if k:
                merged[idx] = merged.get(idx, 0) + k
        object.__setattr__(self, "factors", tuple(sorted(merged.items())))

    @classmethod
    def of(cls, *indices: int) -> "FactoredCharPoly":
        """FactoredCharPoly.of(1, 1, 3) is Phi_1^2 Phi_3."""
        return cls(tuple((i, 1) for i in indices))

    @property
    def degree(self) -> int:
        return sum(k * cyclotomic(i).degree for i, k in self.factors)

    def multiplicity(self, index: int) -> int:
        return dict(self.factors).get(index, 0)

    def polynomial(self) -> IntPolynomial:
        out = IntPolynomial((1,))
        for i, k in self.factors:
            out = out * cyclotomic(i) ** k
        return out

    def __str__(self) -> str:
        return "".join(f"Phi_{i}" + (f"^{k}" if k > 1 else "") for i, k in self.factors)


def res_of_factored(f: FactoredCharPoly) -> int:
    """prod_{i<j} Res(Phi_{n_i}^{k_i}, Phi_{n_j}^{k_j}), factors ordered by index."""
    out = 1
    fs = f.factors
    for a in range(len(fs)):
        for b in range(a + 1, len(fs)):
            (n, k), (m, l) = fs[a], fs[b]
            out *= resultant(cyclotomic(n), cyclotomic(m)) ** (k * l)
    return out


# ---------------------------------------------------------------------------
# characters


def weyl_dimension(weight: Sequence[int]) -> int:
    """Dimension of the irreducible GL_m module of highest weight `weight`."""
    m = len(weight)
    num = prod(weight[i] - weight[j] + j - i for i in range(m) for j in range(i + 1, m))
    den = prod(j - i for i in range(m) for j in range(i + 1, m))
    return num // den


def _complete_homogeneous(power_sums: Sequence[Fraction], top: int) -> list[Fraction]:
    # Newton: k h_k = sum_{i=1}^k p_i h_{k-i}
    h = [Fraction(1)]
    for k in range(1, top + 1):
        h.append(sum((power_sums[i] * h[k - i] for i in range(1, k + 1)), Fraction(0)) / k)
    return h


def _frac_det(rows: list[list[Fraction]]) -> Fraction:
    m = [r[:] for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                for j in range(c, n):
                    m[r][j] -= f * m[c][j]
    return det


def schur_value(weight: Sequence[int], a: Matrix) -> Fraction:
    """
    Character of the irreducible GL_m module of highest weight `weight`
    evaluated at the integer matrix `a`.

    Power sums trace(a^k) feed Newton's identities for the complete
    homogeneous functions h_k, and the Jacobi-Trudi determinant
    det(h_{lambda_i - i + j}) gives the Schur function. Negative weights
    are handled by pulling out a power of det(a).
    """
    m = len(a)
    if any(len(row) != m for row in a):
        raise ValueError("matrix must be square")
    if len(weight) != m:
        raise ValueError(f"weight of length {len(weight)} for a {m}x{m} matrix")
    if any(weight[i] < weight[i + 1] for i in range(m - 1)):
        raise ValueError(f"weight {tuple(weight)} is not dominant")
    if m == 0:
        return Fraction(1)
    shift = weight[-1]
    lam = [w - shift for w in weight]
    top = lam[0] + m  # largest Jacobi-Trudi index is lambda_1 + ell - 1
    power_sums = [Fraction(0)] + [Fraction(trace(mat_pow(a, k))) for k in range(1, top + 1)]
    h = _complete_homogeneous(power_sums, top)

    def hk(k: int) -> Fraction:
        return h[k] if k >= 0 else Fraction(0)

    parts = [x for x in lam if x > 0]
    ell = len(parts)
    s = _frac_det([[hk(parts[i] - i + j) for j in range(ell)] for i in range(ell)]) if ell else Fraction(1)
    if shift:
        d = Fraction(bareiss_det(a))
        s *= d ** shift
    return s


# ---------------------------------------------------------------------------
# modular forms


def cusp_dim(k: int) -> int:
    """
    Dimension of the space of level-one cusp forms of weight k.

    Classical formula: 0 for odd k, k < 12 or k = 14; otherwise
    floor(k/12) - 1 when k = 2 mod 12 and floor(k/12) else.
    """
    if k % 2 or k < 12 or k == 14:
        return 0
    return k // 12 - 1 if k % 12 == 2 else k // 12
