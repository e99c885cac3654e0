import pytest

from eiscomp.linalg import is_zero, matmul
from eiscomp.nilpotent import (
    ce_cohomology_dims, ce_differential, exterior_module, kostant_dims, radical_basis,
)
from eiscomp.weyl import Composition, compositions

GL3_FACES = [c for c in compositions(3) if c.rank >= 1]


def test_radical_dims():
    for c in compositions(4):
        assert len(radical_basis(c)) == c.nilradical_dim


def test_exterior_module_rejects():
    with pytest.raises(ValueError):
        exterior_module(3, (2, 0, 0))


@pytest.mark.parametrize("comp", GL3_FACES + [Composition((2, 2)), Composition((1, 1, 1, 1))], ids=str)
def test_ce_squares_to_zero(comp):
    weight = (1, 1, 0) if comp.n == 3 else (1, 1, 0, 0)
    n = comp.nilradical_dim
    for p in range(n - 1):
        assert is_zero(matmul(ce_differential(comp, weight, p + 1), ce_differential(comp, weight, p)))


@pytest.mark.parametrize("comp", GL3_FACES, ids=str)
@pytest.mark.parametrize("weight", [(0, 0, 0), (1, 0, 0), (1, 1, 0), (2, 1, 1), (1, 1, 1)])
def test_kostant_matches_brute_force_gl3(comp, weight):
    assert ce_cohomology_dims(comp, weight) == kostant_dims(comp, weight)


def test_trivial_borel_gl3_betti():
    # H^*(n, Q) for the Heisenberg algebra: 1, 2, 2, 1
    assert ce_cohomology_dims(Composition((1, 1, 1)), (0, 0, 0)) == {0: 1, 1: 2, 2: 2, 3: 1}
