from fractions import Fraction

import pytest

from eiscomp.faces import face_cohomology, faces_of
from eiscomp.levi import Branch, euler_of
from eiscomp.linalg import matmul, nullspace
from eiscomp.spectral import (
    BoundaryCohomology, Constraint, Contradiction, UndeterminedDifferential, boundary_cohomology,
    build_e1, d1_isotypes, default_coefficient, d2_feasible, e2, page_records, render_page, standard_constraints,
)

DET = (1, 1, 1, 1)
PAGES = [(3, (1, 1, 0), Branch.UNDETERMINED), (3, (2, 1, 1), Branch.UNDETERMINED),
         (3, (0, 0, 0), Branch.UNDETERMINED), (3, (4, 1, 1), Branch.UNDETERMINED),
         (3, (3, 3, 0), Branch.UNDETERMINED)] + [
    (4, w, b) for w in [DET, (0, 0, 0, 0), (2, 2, 2, 2), (3, 3, 3, 3)] for b in (Branch.GHOST, Branch.NO_GHOST)]


def page_dict(page):
    return {pos: [str(e) for e in v] for pos, v in page.items()}


def chi_e1(page):
    return sum((-1) ** (p + q) * sum(x.dim for x in page.entries(p, q)) for p, q in page.positions())


def chi_page(page):
    return sum((-1) ** (p + q) * e.dim for (p, q), v in page.items() for e in v)


@pytest.mark.parametrize("n,weight,branch", PAGES)
def test_d1_squares_to_zero(n, weight, branch):
    for cx in d1_isotypes(build_e1(n, weight, branch)):
        assert cx.squares_to_zero()


@pytest.mark.parametrize("n,weight,branch", PAGES)
def test_isotype_euler_characteristics(n, weight, branch):
    for cx in d1_isotypes(build_e1(n, weight, branch)):
        alt = lambda d: sum((-1) ** p * v for p, v in d.items())
        assert alt(cx.dims()) == alt(cx.homology_dims())


@pytest.mark.parametrize("n,weight,branch", PAGES)
def test_page_euler_characteristic_matches_faces(n, weight, branch):
    page = build_e1(n, weight, branch)
    faces = sum((-1) ** (c.rank - 1) * euler_of(face_cohomology(n, weight, c, branch)) for c in faces_of(n))
    assert chi_e1(page) == faces == chi_page(e2(page))


@pytest.mark.parametrize("n,weight,branch", PAGES)
def test_kernel_columns_are_cycles(n, weight, branch):
    for cx in d1_isotypes(build_e1(n, weight, branch)):
        for p, mat in cx.d.items():
            if mat and cx.columns[p]:
                for v in nullspace(mat, len(cx.columns[p])):
                    image = matmul(mat, [[x] for x in v])
                    assert all(row[0] == 0 for row in image)


def test_e1_dimensions_do_not_depend_on_branch():
    g, n = build_e1(4, DET, "ghost"), build_e1(4, DET, "no-ghost")
    assert {pos: len(g.entries(*pos)) for pos in g.positions()} == {pos: len(n.entries(*pos)) for pos in n.positions()}


def test_e1_det_ghost():
    page = build_e1(4, DET, Branch.GHOST)
    assert [str(x) for x in page.entries(2, 2)] == ["(0|2|0|2)"]
    assert page.entries(1, 2) == []
    assert sorted(str(x) for x in page.entries(0, 3)) == sorted(
        ["(1,1,0|2)", "(0|0|0|4)", "(1,-1|2|2)", "(0|0|3,1)", "(0|2,1,1)", "(-2|2|2|2)"])
    tori = sorted(x.torus for x in page.entries(0, 3))
    assert tori.count((0, 2, 0, 2)) == 2


def test_e1_gl3():
    page = build_e1(3, (1, 1, 0))
    assert [str(x) for x in page.entries(0, 2)] == ["(1,-1|2)", "(-2|2|2)"]
    assert [str(x) for x in page.entries(1, 2)] == ["(-2|2|2)"]


def test_isotype_complexes_det_ghost():
    cxs = {(cx.torus, cx.q): cx for cx in d1_isotypes(build_e1(4, DET, "ghost"))}
    for torus in [(0, 0, 0, 4), (-2, 2, 2, 2)]:
        cx = cxs[(torus, 3)]
        assert cx.dims() == {0: 2, 1: 3, 2: 1}
        assert cx.ranks() == {0: 2, 1: 1}
        assert set(cx.homology_dims().values()) == {0}
    ghost = cxs[((0, 2, 0, 2), 3)]
    assert ghost.ranks() == {0: 0, 1: 0}


def test_coefficient_hook():
    page = build_e1(4, DET, "ghost")
    zero = d1_isotypes(page, coefficient=lambda x, y: 0)
    assert sum(sum(v for v in cx.homology_dims().values()) for cx in zero) == sum(
        len(page.entries(*pos)) for pos in page.positions())
    doubled = d1_isotypes(page, coefficient=lambda x, y: 2 * default_coefficient(x, y))
    assert page_dict(e2(page, doubled)) == page_dict(e2(page))


def test_e2_det():
    assert page_dict(e2(build_e1(4, DET, "ghost"))) == {
        (0, 3): ["(0|2|0|2)+(0|2|0|2)"], (2, 2): ["(0|2|0|2)"], (2, 6): ["(-2|0|2|4)"]}
    nogo = page_dict(e2(build_e1(4, DET, "no-ghost")))
    assert nogo[(2, 2)] == ["(0|2|0|2)"]
    assert set(nogo[(0, 3)]) <= {"(-2|2|2|2)", "(0|0|0|4)"}


def test_e2_gl3():
    assert page_dict(e2(build_e1(3, (1, 1, 0)))) == {(0, 2): ["(-2|2|2)"], (1, 1): ["(0|2|0)"]}


def test_d2_feasibility():
    g = e2(build_e1(4, DET, "ghost"))
    (arrow,) = d2_feasible(g, 3)
    assert arrow.feasible and arrow.source == (0, 3) and arrow.target == (2, 2)
    assert (arrow.source_dim, arrow.target_dim) == (2, 1)
    n = d2_feasible(e2(build_e1(4, DET, "no-ghost")), 3)
    assert n and not any(a.feasible for a in n)
    assert d2_feasible(e2(build_e1(3, (1, 1, 0))), 2) == []


def test_standard_constraints():
    (c,) = standard_constraints(4, DET)
    assert (c.degree, c.dim) == (4, 0) and "[EVSG]" in c.citation
    assert standard_constraints(3, (1, 1, 0)) == []


def test_boundary_ghost():
    res = boundary_cohomology(4, DET, "ghost", standard_constraints(4, DET))
    assert isinstance(res, BoundaryCohomology)
    assert {k: [str(e) for _, e in v] for k, v in res.by_degree().items()} == {3: ["(0|2|0|2)"], 8: ["(-2|0|2|4)"]}
    assert list(res.d2_ranks.values()) == [1]
    assert chi_page(res.e3) == chi_page(res.e2)  # d_2 removes pairs in adjacent total degrees


def test_boundary_no_ghost_contradiction():
    res = boundary_cohomology(4, DET, "no-ghost", standard_constraints(4, DET))
    assert isinstance(res, Contradiction)
    assert res.constraint.degree == 4
    assert [(pos, str(e)) for pos, e in res.survivors] == [((2, 2), "(0|2|0|2)")]
    assert "(0|2|0|2)" in res.message and "[EVSG]" in res.message


def test_boundary_undetermined_without_constraint():
    with pytest.raises(UndeterminedDifferential):
        boundary_cohomology(4, DET, "ghost")
    res = boundary_cohomology(4, DET, "ghost", [Constraint(4, 0, "test")])
    assert res.dims() == {3: 1, 8: 1}


def test_unsatisfiable_constraint():
    res = boundary_cohomology(3, (1, 1, 0), constraints=[Constraint(2, 5, "test")])
    assert isinstance(res, Contradiction)


def test_boundary_gl3_extension_order():
    res = boundary_cohomology(3, (1, 1, 0))
    assert res.labels(2) == ["(0|2|0)", "(-2|2|2)"]
    assert res.extensions() == {2: ["(0|2|0)", "(-2|2|2)"]}


def test_trivial_coefficients_follow_the_same_pattern():
    cons = standard_constraints(4, (0, 0, 0, 0))
    assert isinstance(boundary_cohomology(4, (0, 0, 0, 0), "no-ghost", cons), Contradiction)
    res = boundary_cohomology(4, (0, 0, 0, 0), "ghost", cons)
    assert res.dims().get(4, 0) == 0


def test_render_and_records_agree():
    page = e2(build_e1(4, DET, "ghost"))
    recs = page_records("E2", page)
    lines = render_page("E2", page).splitlines()
    assert len(recs) == len(lines)
    for rec, line in zip(recs, lines):
        assert line.startswith(f"E2^{rec['p']},{rec['q']} = ")
        assert sum(rec["dims"]) == line.count("(")
    assert recs[0] == {"page": "E2", "p": 0, "q": 3, "labels": ["(0|2|0|2)"], "dims": [2]}
