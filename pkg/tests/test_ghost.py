import pytest

from eiscomp.euler import euler_characteristic
from eiscomp.ghost import (
    ProofError, branch_analysis, dual_symmetric_family, dual_weight, gl4_trivial_and_det_dims,
    odd_symmetric_family, pgh_scan, potentially_ghost, prove_ghost,
)
from eiscomp.levi import Branch, FactsRegistry, euler_of, hecke_isomorphic, load_registry, registry_cohomology
from eiscomp.spectral import build_e1, e2


def nonzero(pgh):
    return {q: [l.symbol for l in v] for q, v in pgh.items() if v}


@pytest.mark.parametrize("weight", [(1, 1, 0), (2, 1, 1), (0, 0, 0), (2, 2, 0), (4, 1, 1), (3, 3, 0), (5, 3, 0)])
def test_pgh_equals_borel_column_of_e2(weight):
    """Two code paths: direct cokernel vs. the Mayer-Vietoris page."""
    page = e2(build_e1(3, weight))
    from_page = {q + 1: sorted(str(e) for e in v) for (p, q), v in page.items() if p == 1}
    direct = {q: sorted(v) for q, v in nonzero(potentially_ghost(weight)).items()}
    assert direct == from_page


def test_pgh_values():
    assert nonzero(potentially_ghost((1, 1, 0))) == {2: ["(0|2|0)"]}
    assert nonzero(potentially_ghost((2, 1, 1))) == {2: ["(2|0|2)"]}
    assert potentially_ghost((0, 0, 0))[2] == []
    with pytest.raises(ValueError):
        potentially_ghost((0, 1, 0))


def test_families():
    assert odd_symmetric_family(3) == [(2, 1, 1), (4, 1, 1), (6, 1, 1)]
    assert dual_symmetric_family(2) == [(1, 1, 0), (3, 3, 0)]
    rows = pgh_scan(count=3)
    assert [r.weight for r in rows][:2] == [(2, 1, 1), (1, 1, 0)]
    custom = pgh_scan([(0, 0, 0), (2, 2, 0)])
    assert [r.dim2 for r in custom] == [0, 0]


def test_dual_weight():
    assert dual_weight((1, 1, 0)) == (2, 1, 1)
    assert dual_weight((2, 1, 1)) == (1, 1, 0)
    for w in odd_symmetric_family(4):
        assert dual_weight(dual_weight(w)) == w


@pytest.mark.parametrize("weight,no,gh", [((1, 1, 0), "(-2|2|2)", "(0|2|0)"), ((2, 1, 1), "(0|0|4)", "(2|0|2)")])
def test_branch_analysis(weight, no, gh):
    r_no, r_gh = branch_analysis(weight)
    assert r_no.branch is Branch.NO_GHOST and r_gh.branch is Branch.GHOST
    assert (str(r_no.h2_eis), str(r_gh.h2_eis)) == (no, gh)
    assert r_no.consistent and r_gh.consistent
    assert not r_no.ghost_nonzero and r_gh.ghost_nonzero
    assert not hecke_isomorphic(r_no.h2_eis, r_gh.h2_eis)


def test_branch_analysis_rejects_other_weights():
    with pytest.raises(ValueError):
        branch_analysis((0, 0, 0))


@pytest.mark.parametrize("weight", [(1, 1, 0), (2, 1, 1)])
@pytest.mark.parametrize("branch", ["ghost", "no-ghost"])
def test_euler_matches_concluded_cohomology(weight, branch):
    assert euler_characteristic(3, weight) == euler_of(registry_cohomology("GL3", weight, branch)) == 1


def test_gl4_split():
    assert gl4_trivial_and_det_dims({0: 1, 3: 1}, 1, -1) == ({0: 1}, {3: 1})
    with pytest.raises(ValueError):
        gl4_trivial_and_det_dims({0: 1, 3: 2}, 1, -1)


def test_transcript():
    t = prove_ghost()
    assert len(t.steps) == 8
    assert t.render().splitlines()[-1] == "H^3(GL_4(Z),det) = (0|2|0|2)"
    assert "(0|2|0|2)" in t.steps[4].statement and "degree 4" in t.steps[4].statement
    assert "H^2(GL_3(Z), V_{1,1,0}) = (0|2|0)" in t.steps[5].statement
    assert all(s.citation for s in t.steps)
    recs = t.records()
    assert [r["step"] for r in recs] == list(range(1, 9))
    # every named input is an earlier step or a registry fact
    reg = load_registry()
    for r in recs:
        for inp in r["inputs"]:
            if inp.startswith("step "):
                assert int(inp.split()[1]) < r["step"]
            else:
                assert inp.split("[")[0] in reg.facts or inp.startswith("gl3_classes")


def test_transcript_is_deterministic():
    assert prove_ghost().render() == prove_ghost().render()
    assert prove_ghost().records() == prove_ghost().records()


def _registry_with(**changes):
    base = load_registry()
    facts = {k: dict(v) for k, v in base.facts.items()}
    for key, value in changes.items():
        facts[key].update(value)
    return FactsRegistry(facts, base.gl3_classes, "patched")


def test_transcript_aborts_on_inconsistent_registry():
    with pytest.raises(ProofError) as info:
        prove_ghost(_registry_with(sl4_trivial={"dims": {"0": 1, "3": 1, "4": 1}}))
    assert info.value.step in (2, 4)
    with pytest.raises(ProofError) as info:
        prove_ghost(_registry_with(gl4_interior_degrees={"degrees": [3, 4, 5]}))
    assert info.value.step == 8
