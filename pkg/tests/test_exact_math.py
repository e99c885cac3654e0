import random
from fractions import Fraction
from itertools import product

import pytest
import sympy

from eiscomp.exact_math import (
    FactoredCharPoly, IntPolynomial, bareiss_det, cusp_dim, cyclotomic, identity,
    mat_mul, res_of_factored, resultant, schur_value, trace, weyl_dimension,
)

X = sympy.Symbol("x")


def to_sympy(p: IntPolynomial):
    return sum(c * X**i for i, c in enumerate(p.coeffs))


@pytest.mark.parametrize("n", range(1, 25))
def test_cyclotomic_matches_sympy(n):
    assert sympy.expand(to_sympy(cyclotomic(n)) - sympy.cyclotomic_poly(n, X)) == 0


@pytest.mark.parametrize("n", [1, 6, 12, 30])
def test_cyclotomic_product_over_divisors(n):
    prod = IntPolynomial.from_coeffs([1])
    for d in sympy.divisors(n):
        prod = prod * cyclotomic(d)
    assert prod == IntPolynomial.x_pow_minus_one(n)


def test_polynomial_arithmetic():
    f = IntPolynomial.from_coeffs([1, 2, 3])
    g = IntPolynomial.from_coeffs([-1, 1])
    q, r = f.divmod_monic(g)
    assert q * g + r == f
    assert f(2) == 17
    assert (g ** 3)(5) == 64


@pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 13) for n in range(1, 13) if m != n])
def test_resultant_against_sympy(m, n):
    assert resultant(cyclotomic(m), cyclotomic(n)) == sympy.resultant(
        sympy.cyclotomic_poly(m, X), sympy.cyclotomic_poly(n, X), X)


def test_resultant_small_table():
    # Res(Phi_1, Phi_2) = Phi_2(1) = 2 ; Res(Phi_1, Phi_3) = 3 ; Res(Phi_3, Phi_4) = 1
    assert resultant(cyclotomic(1), cyclotomic(2)) == 2
    assert resultant(cyclotomic(1), cyclotomic(3)) == 3
    assert resultant(cyclotomic(3), cyclotomic(4)) == 1
    with pytest.raises(ValueError):
        resultant(IntPolynomial.from_coeffs([0]), cyclotomic(3))


def test_resultant_antisymmetry():
    rng = random.Random(7)
    for _ in range(40):
        f = IntPolynomial.from_coeffs([rng.randint(-4, 4) for _ in range(rng.randint(2, 5))] + [1])
        g = IntPolynomial.from_coeffs([rng.randint(-4, 4) for _ in range(rng.randint(2, 5))] + [1])
        assert resultant(f, g) == (-1) ** (f.degree * g.degree) * resultant(g, f)


def test_factored_resultant():
    f = FactoredCharPoly.of(1, 1, 2, 2)
    assert str(f) == "Phi_1^2Phi_2^2"
    assert f.degree == 4 and f.multiplicity(1) == 2
    assert res_of_factored(f) == 16
    assert res_of_factored(FactoredCharPoly.of(3, 6)) == 4
    assert res_of_factored(FactoredCharPoly.of(5)) == 1


def test_bareiss_det_against_sympy():
    rng = random.Random(3)
    for size in range(1, 6):
        m = [[rng.randint(-5, 5) for _ in range(size)] for _ in range(size)]
        assert bareiss_det(m) == sympy.Matrix(m).det()


@pytest.mark.parametrize("weight", [(0, 0, 0), (1, 0, 0), (1, 1, 0), (2, 1, 1), (3, 1, 0), (2, 2, 0, 0), (4, 2, 1, 0)])
def test_schur_at_identity_is_weyl_dimension(weight):
    assert schur_value(weight, identity(len(weight))) == weyl_dimension(weight)


def test_weyl_dimension_values():
    assert weyl_dimension((1, 0, 0)) == 3
    assert weyl_dimension((2, 0, 0)) == 6
    assert weyl_dimension((1, 1, 0, 0)) == 6
    assert weyl_dimension((2, 1, 0)) == 8


def _principal_minors(a, k):
    from itertools import combinations
    n = len(a)
    return sum(bareiss_det([[a[i][j] for j in s] for i in s]) for s in combinations(range(n), k))


def random_unimodular(n, rng):
    m = identity(n)
    for _ in range(6):
        i, j = rng.sample(range(n), 2)
        e = [list(r) for r in identity(n)]
        e[i][j] = rng.choice([-2, -1, 1, 2])
        m = mat_mul(m, tuple(map(tuple, e)))
    return m


def inverse_unimodular(m):
    inv = sympy.Matrix(m).inv()
    return tuple(tuple(int(x) for x in row) for row in inv.tolist())


def test_schur_exterior_powers_are_principal_minor_sums():
    rng = random.Random(11)
    for _ in range(20):
        a = tuple(tuple(rng.randint(-3, 3) for _ in range(4)) for _ in range(4))
        assert schur_value((1, 0, 0, 0), a) == trace(a)
        assert schur_value((1, 1, 0, 0), a) == _principal_minors(a, 2)
        assert schur_value((1, 1, 1, 1), a) == bareiss_det(a)


def test_schur_negative_weight_uses_inverse_det():
    t = ((0, 1), (-1, 0))  # det 1
    assert schur_value((0, -1), t) == schur_value((1, 0), t)
    d = ((-1, 0), (0, 1))
    assert schur_value((-1, -1), d) == Fraction(-1)


def test_schur_conjugation_invariance():
    rng = random.Random(2024)
    tors = [tuple(tuple(r) for r in m) for m in (
        ((0, 1, 0, 0), (-1, -1, 0, 0), (0, 0, -1, 0), (0, 0, 0, 1)),
        ((0, 1, 0, 0), (-1, 0, 0, 0), (0, 0, 0, -1), (0, 0, 1, 1)),
    )]
    for _ in range(50):
        a = rng.choice(tors)
        p = random_unimodular(4, rng)
        conj = mat_mul(mat_mul(p, a), inverse_unimodular(p))
        for w in [(1, 1, 1, 1), (2, 1, 0, 0), (1, 1, 0, 0), (3, 1, 1, 0)]:
            assert schur_value(w, conj) == schur_value(w, a)


def test_schur_rejects_bad_input():
    with pytest.raises(ValueError):
        schur_value((0, 1), identity(2))
    with pytest.raises(ValueError):
        schur_value((1, 0, 0), identity(2))


def _cusp_dim_oracle(k):
    # modular forms are C[E4, E6]; subtract the Eisenstein series
    if k < 4 or k % 2:
        return 0
    monomials = sum(1 for a, b in product(range(k // 4 + 1), range(k // 6 + 1)) if 4 * a + 6 * b == k)
    return monomials - 1


@pytest.mark.parametrize("k", range(0, 80))
def test_cusp_dim(k):
    assert cusp_dim(k) == _cusp_dim_oracle(k)
