import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from projconf.classifier import classify, orbit_dimension, orbit_from_tag, orbit_representative, same_orbit
from projconf.closure import (
    Fibre,
    LowRankLocus,
    MinorPolynomial,
    ParamFamily,
    VarpiFibre,
    open_family_boundary_configs,
    face_degeneration,
    fibre_closure,
    fibre_closure_verdict,
    ideal_generators,
    ideal_vanishes,
    linear_collapse_limit,
    low_rank_coordinates,
    orbit_closure_description,
    project_description,
)
from projconf.enumeration import enumerate_image, verify_realizability
from projconf.errors import NotAFaceError, ParameterError, PreconditionError, ShapeError
from projconf.families import PARAM_KIND, FamilyTag, ProjParam, catalogue, default_param, family_of, family_rank_matrix
from projconf.rankmatrix import RankMatrix, all_face_masks, compute_rank_matrix, leq, reduction, rho
from projconf.sampling import random_generic_param, random_invertible
from projconf.subsets import Splitting

from conftest import cfg, configs, invertible

FIVE = frozenset(range(1, 6))
PHI53 = family_rank_matrix(FamilyTag("phi[5^3]"))
PARAM_MEMBERS = [e.tag for e in catalogue() if e.tag.parametrized]
GENERATOR_NAMES = sorted(PARAM_KIND)


def sp(*pairs):
    return Splitting.of(*[(frozenset(b), r) for b, r in pairs], m=5)


def fam(label, param=None):
    return orbit_from_tag(label, param)


# ---------------------------------------------------------------- fibre level


def test_fibre_closure_examples():
    top = max(enumerate_image(), key=lambda phi: sum(phi.values))
    assert len(fibre_closure(top)) == len(enumerate_image()) == 184
    ones = RankMatrix.from_function(5, lambda I: min(len(I), 1))
    assert fibre_closure(ones) == [ones]
    phi = family_rank_matrix(FamilyTag("phi[5^3;J1,J2]", (frozenset({1, 2}), frozenset({3, 4}))))
    assert set(p.values for p in fibre_closure(phi)) == {p.values for p in enumerate_image() if leq(p, phi)}


def test_fibre_closure_rejects_parametrized():
    with pytest.raises(PreconditionError, match="orbit_closure_description"):
        fibre_closure(PHI53)


def test_verdict_examples():
    o = fam("phi[5^3]", "1:2:3")
    for psi in enumerate_image():
        if rho(psi).splitting_type() == ((1, 1), (2, 1), (2, 1)):
            assert fibre_closure_verdict(o, psi) == "disjoint"
    for i in range(1, 6):
        assert fibre_closure_verdict(o, family_rank_matrix(FamilyTag("phi[4^2;i]", (i,)))) == "intersects_only"
    ones = RankMatrix.from_function(5, lambda I: min(len(I), 1))
    assert fibre_closure_verdict(o, ones) == "contains"
    assert fibre_closure_verdict(o, PHI53) == "intersects_only"


def test_verdict_rejects_single_orbit():
    with pytest.raises(PreconditionError):
        fibre_closure_verdict(classify(verify_realizability(enumerate_image()[-1])), PHI53)


# ---------------------------------------------------------------- explicit descriptions


def test_description_of_pair_family():
    o = fam("phi[5^2;{4,5}]", "1:2")
    comps = orbit_closure_description(o).components
    assert isinstance(comps[0], ParamFamily) and comps[0].single_orbit
    assert classify(comps[0].samples()[0]) == o
    assert comps[1:] == (
        VarpiFibre(sp(({4, 5}, 1), ({1, 2, 3}, 1))),
        VarpiFibre(sp(({1}, 1), ({2, 3, 4, 5}, 1))),
        VarpiFibre(sp(({2}, 1), ({1, 3, 4, 5}, 1))),
        VarpiFibre(sp(({3}, 1), ({1, 2, 4, 5}, 1))),
        VarpiFibre(sp((FIVE, 1))),
    )


def test_description_of_isolated_point_family_has_free_q():
    o = fam("phi[4^2;1]", "1:2")
    fams = [c for c in orbit_closure_description(o).components if isinstance(c, ParamFamily) and not c.single_orbit]
    assert len(fams) == 1
    q_family = fams[0]
    assert q_family.family.name == "phi[5^2]"
    firsts = set()
    for v in q_family.samples():
        assert v.point(2) == cfg((1, 0), n=4).point(1) and v.point(5) == cfg((1, 2), n=4).point(1)
        firsts.add(family_of(compute_rank_matrix(v)).label())
    assert firsts == {"phi[5^2]", "phi[5^2;{1,2}]", "phi[5^2;{1,3}]", "phi[5^2;{1,4}]", "phi[5^2;{1,5}]"}


def test_description_of_open_family():
    o = fam("phi[5^3]", "1:2:3")
    comps = orbit_closure_description(o).components
    singles = [c for c in comps if isinstance(c, ParamFamily)]
    assert len(singles) == 6
    assert [family_of(compute_rank_matrix(c.samples()[0])).label() for c in singles[1:]] == [
        f"phi[4^2;{i}]" for i in range(1, 6)
    ]
    assert sum(isinstance(c, VarpiFibre) for c in comps) == 10
    assert comps[-1] == LowRankLocus(2)


def test_description_of_single_orbit_family_is_all_fibres_below():
    phi = family_rank_matrix(FamilyTag("phi[5^3;J]pair", (frozenset({1, 5}),)))
    comps = orbit_closure_description(classify(verify_realizability(phi))).components
    assert all(isinstance(c, Fibre) for c in comps)
    assert {c.rank_matrix.values for c in comps} == {p.values for p in enumerate_image() if leq(p, phi)}


@pytest.mark.parametrize("tag", PARAM_MEMBERS, ids=lambda t: t.label())
def test_descriptions_project_to_order_verdicts(tag):
    rng = random.Random(tag.label())
    for param in (default_param(tag.name), random_generic_param(tag.param_kind, rng)):
        o = orbit_from_tag(tag, param)
        projected = project_description(orbit_closure_description(o))
        for psi in enumerate_image():
            assert fibre_closure_verdict(o, psi) == projected[psi.values], family_of(psi).label()


@pytest.mark.parametrize("tag", PARAM_MEMBERS, ids=lambda t: t.label())
def test_components_lie_in_image_and_have_smaller_orbits(tag):
    o = orbit_from_tag(tag, default_param(tag.name))
    dim = orbit_dimension(orbit_representative(o))
    for comp in orbit_closure_description(o).components:
        for v in comp.samples():
            phi = compute_rank_matrix(v)
            assert phi in enumerate_image()
            assert leq(phi, o.rank_matrix)
            if classify(v) != o:
                assert orbit_dimension(v) < dim


def test_description_json():
    data = orbit_closure_description(fam("phi[5^3]", "1:2:3")).to_json()
    kinds = [c["kind"] for c in data["components"]]
    assert kinds[0] == "param_family" and kinds[-1] == "low_rank_locus"
    assert data["components"][-1] == {"kind": "low_rank_locus", "max_rank": 2}
    assert data["orbit"]["family"]["label"] == "phi[5^3]"


def test_low_rank_locus_bounds():
    with pytest.raises(ShapeError):
        LowRankLocus(0)
    with pytest.raises(ShapeError):
        LowRankLocus(5)


# ---------------------------------------------------------------- ideals


def test_generator_transcriptions():
    gens = ideal_generators(fam("phi[5^2]", ["1:2", "1:3"]))
    assert len(gens) == 5
    assert gens[3].terms == ((Fraction(3), ((1, 3), (5, 2))), (Fraction(1), ((1, 5), (2, 3))))
    first = ideal_generators(fam("phi[5^3;{1,2,3}]", "1:2"))
    assert len(first) == 3 and first[0].terms == ((Fraction(1), ((1, 2, 3),)),)
    assert len(ideal_generators(fam("phi[5^3]", "1:2:3"))) == 5
    assert len(ideal_generators(fam("phi[4^2;1]", "1:2"))) == 1
    assert len(ideal_generators(fam("phi[5^2;{4,5}]", "1:2"))) == 1


def test_generators_need_a_generic_parameter():
    with pytest.raises(ParameterError):
        ideal_generators(fam("phi[5^3]", "1:1:1"))


def test_generators_refused_for_single_orbits():
    with pytest.raises(PreconditionError):
        ideal_generators(classify(verify_realizability(enumerate_image()[-1])))


def test_minor_polynomial_homogeneity_enforced():
    with pytest.raises(ShapeError):
        MinorPolynomial(((Fraction(1), ((1, 2), (3, 4))), (Fraction(1), ((1, 2), (3, 5)))))
    with pytest.raises(ShapeError):
        MinorPolynomial(((Fraction(1), ((1, 2),)), (Fraction(1), ((1, 2, 3),))))


@pytest.mark.parametrize("name", GENERATOR_NAMES)
def test_generators_are_multihomogeneous(name):
    tag = next(t for t in PARAM_MEMBERS if t.name == name)
    for g in ideal_generators(orbit_from_tag(tag, default_param(name))):
        profiles = {MinorPolynomial._profile(f) for _, f in g.terms}
        assert len(profiles) == 1


@pytest.mark.parametrize("tag", PARAM_MEMBERS, ids=lambda t: t.label())
def test_generators_vanish_on_translates(tag):
    rng = random.Random(tag.label())
    for _ in range(20):
        o = orbit_from_tag(tag, random_generic_param(tag.param_kind, rng))
        assert ideal_vanishes(o, orbit_representative(o).act(random_invertible(4, rng)))


@pytest.mark.parametrize("tag", PARAM_MEMBERS, ids=lambda t: t.label())
def test_other_parameters_leave_the_zero_locus(tag):
    rng = random.Random("other" + tag.label())
    for _ in range(20):
        p, q = random_generic_param(tag.param_kind, rng), random_generic_param(tag.param_kind, rng)
        if p == q:
            continue
        o = orbit_from_tag(tag, p)
        assert not ideal_vanishes(o, orbit_representative(orbit_from_tag(tag, q)))


def test_witness_value_for_two_parameter_family():
    rng = random.Random(7)
    for _ in range(30):
        p, q = random_generic_param("P1xP1", rng)
        s = random_generic_param("P1", rng)
        if s == q:
            continue
        o = orbit_from_tag("phi[5^2]", (p, q))
        w = cfg((1, 0), (0, 1), (1, 1), p.coords, s.coords, n=4)
        p4 = ideal_generators(o)[3]
        value = p4.evaluate(low_rank_coordinates(w, p4.support, 2))
        assert value == q.coords[1] * s.coords[0] - q.coords[0] * s.coords[1] != 0
        assert not ideal_vanishes(o, w)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=4, max_size=4).filter(any), st.integers(1, 5), st.lists(st.integers(-4, 4), min_size=4, max_size=4).filter(any), invertible())
def test_four_proportional_columns_lie_in_open_family_closure(u, odd, w, g):
    cols = [tuple(u)] * 5
    cols[odd - 1] = tuple(w)
    v = cfg(*cols).act(g)
    assert ideal_vanishes(fam("phi[5^3]", "1:2:3"), v)


def test_rank_precheck():
    generic = verify_realizability(enumerate_image()[-1])
    assert not ideal_vanishes(fam("phi[5^2]", ["1:2", "1:3"]), generic)
    assert not ideal_vanishes(fam("phi[5^3]", "1:2:3"), generic)


@pytest.mark.parametrize("i", range(1, 6))
def test_boundary_orbits_of_open_family(i):
    p = ProjParam((1, 2, 3))
    v = open_family_boundary_configs(p)[i - 1]
    assert compute_rank_matrix(v) == family_rank_matrix(FamilyTag("phi[4^2;i]", (i,)))
    assert ideal_vanishes(fam("phi[5^3]", "1:2:3"), v)


@settings(max_examples=40, deadline=None)
@given(invertible())
def test_vanishing_verdict_is_basis_independent(g):
    o = fam("phi[5^3]", "1:2:3")
    for v in open_family_boundary_configs(o.parameter):
        assert ideal_vanishes(o, v.act(g))
    moved = orbit_representative(fam("phi[5^3]", "1:2:5")).act(g)
    assert not ideal_vanishes(o, moved)


# ---------------------------------------------------------------- degenerations


def test_face_degeneration_examples():
    generic = verify_realizability(enumerate_image()[-1])
    end = face_degeneration(generic, {1}, 0)
    assert rho(compute_rank_matrix(end)) == sp(({1}, 1), ({2, 3, 4, 5}, 3))
    for c in (0, 3, Fraction(-2, 5)):
        assert face_degeneration(generic, FIVE, c) == generic
    rep = orbit_representative(fam("phi[5^3]", "1:2:3"))
    end = face_degeneration(rep, {5}, 0)
    assert compute_rank_matrix(end) == reduction(PHI53, {5}) == family_rank_matrix(FamilyTag("phi[4^2;i]", (5,)))


def test_face_degeneration_rejects_non_faces():
    rep = cfg((1, 0, 0), (0, 1, 0), (0, 0, 1), (0, 1, 1))
    with pytest.raises(NotAFaceError) as info:
        face_degeneration(rep, {2, 3}, 0)
    assert info.value.code == "not_a_face"


@settings(max_examples=80, deadline=None)
@given(configs(n=4, m=5), st.fractions(min_value=-9, max_value=9, max_denominator=5).filter(lambda c: c != 0))
def test_face_curve_endpoint_and_orbit(v, c):
    phi = compute_rank_matrix(v)
    o = classify(v)
    for J in all_face_masks(phi):
        assert compute_rank_matrix(face_degeneration(v, J, 0)) == reduction(phi, J)
        assert classify(face_degeneration(v, J, c)) == o


@settings(max_examples=80, deadline=None)
@given(configs(n=3, m=4))
def test_face_curve_endpoint_in_other_dimensions(v):
    phi = compute_rank_matrix(v)
    for J in all_face_masks(phi):
        assert compute_rank_matrix(face_degeneration(v, J, 0)) == reduction(phi, J)


def test_linear_collapse_limits_stay_below(rng):
    singles = [e.rank_matrix for e in catalogue() if not e.tag.parametrized]
    for _ in range(100):
        phi = rng.choice(singles)
        v = verify_realizability(phi).act(random_invertible(4, rng))
        a = random_invertible(4, rng)
        for row in rng.sample(range(4), rng.randint(1, 3)):
            a[row] = [0] * 4
        assert leq(compute_rank_matrix(linear_collapse_limit(v, a)), phi)


def test_linear_collapse_limit_keeps_kernel_points():
    v = cfg((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 1, 1, 1))
    a = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]
    end = linear_collapse_limit(v, a)
    assert end == cfg((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 1, 0, 0))
