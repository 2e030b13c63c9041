import random
from itertools import combinations, permutations

import pytest
import sympy
from hypothesis import given, settings

from projconf.classifier import (
    classify,
    orbit_dimension,
    orbit_from_tag,
    orbit_representative,
    same_orbit,
)
from projconf.enumeration import enumerate_image, verify_realizability
from projconf.errors import ParameterError, ShapeError
from projconf.families import (
    CANONICAL_INDEX,
    PARAM_KIND,
    FamilyTag,
    ProjParam,
    catalogue,
    family_of,
    parse_family_label,
    type_label,
)
from projconf.rankmatrix import compute_rank_matrix, rank_type
from projconf.sampling import random_generic_param, random_invertible

from conftest import cfg, configs, invertible

PHI53_REP = cfg((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3), n=4)
PHI52_REP = cfg((1, 0), (0, 1), (1, 1), (1, 2), (1, 3), n=4)

# orbit dimension of the default representative, by rank-type label
DIMENSIONS = {
    "(5,10,10)": 15, "(5,10,7)": 14, "(5,8,5)": 13, "(4,6,4)": 12,
    "(5,10)": 11, "(5,8)": 11, "(5,6)": 11, "(4,6)": 11,
    "(4,4)a": 10, "(4,4)b": 10, "(5,5)": 10, "(3,3)a": 9, "(3,3)b": 9,
    "(5)": 7, "(4)": 7, "(3)a": 7, "(3)b": 7, "(2)a": 6, "(2)b": 6, "(∅)": 3,
}


def wedge_dimension(v):
    """Orbit dimension via x -> x ^ v_i, which is injective on K^4 / <v_i>."""
    rows = []
    for a in range(4):
        for b in range(4):
            col = []
            for vi in v.columns:
                image = [0] * 4
                image[a] = vi[b]
                col.extend(image[i] * vi[j] - image[j] * vi[i] for i, j in combinations(range(4), 2))
            rows.append(col)
    return sympy.Matrix(rows).rank()


def test_classify_examples():
    o = classify(PHI53_REP)
    assert o.family.label() == "phi[5^3]" and o.parameter == ProjParam((1, 2, 3))
    assert o.to_json()["parameter"] == ["1", "2", "3"]
    o = classify(PHI52_REP)
    assert o.family.label() == "phi[5^2]"
    assert o.parameter == (ProjParam((1, 2)), ProjParam((1, 3)))
    o = classify(cfg((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (0, 0, 0, 1)))
    assert o.family.splitting.type_str() == "{1^1,1^1,1^1,2^1}" and o.parameter is None
    assert o.type_label == "(4,6,4)"


def test_classify_json_shape():
    data = classify(PHI53_REP).to_json()
    assert set(data) == {"rank_type", "family", "parameter", "splitting", "frame"}
    assert data["rank_type"] == "(5,10)"


def test_classify_rejects_wrong_shape():
    with pytest.raises(ShapeError):
        classify(cfg((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)))
    with pytest.raises(ShapeError):
        classify(cfg((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3)))


@pytest.mark.parametrize("entry", catalogue(), ids=lambda e: e.tag.label())
def test_every_member_classifies_to_itself(entry, rng):
    tag = entry.tag
    param = random_generic_param(tag.param_kind, rng) if tag.parametrized else None
    o = orbit_from_tag(tag, param)
    v = orbit_representative(o)
    assert compute_rank_matrix(v) == entry.rank_matrix
    assert classify(v.act(random_invertible(4, rng))) == o


@settings(max_examples=300, deadline=None)
@given(configs(n=4, m=5), invertible())
def test_classify_constant_on_orbits(v, g):
    assert classify(v.act(g)) == classify(v)


@settings(max_examples=100, deadline=None)
@given(configs(n=4, m=5))
def test_rank_type_invariant_under_point_permutations(v):
    t = rank_type(compute_rank_matrix(v))
    for order in list(permutations(range(1, 6)))[::17]:
        assert rank_type(compute_rank_matrix(v.permuted(order))) == t


@pytest.mark.parametrize("name", sorted(PARAM_KIND))
def test_distinct_parameters_give_distinct_orbits(name):
    r = random.Random(name)
    tag = FamilyTag(name, CANONICAL_INDEX[name])
    for _ in range(30):
        p, q = random_generic_param(PARAM_KIND[name], r), random_generic_param(PARAM_KIND[name], r)
        if p == q:
            continue
        a = orbit_representative(orbit_from_tag(tag, p))
        b = orbit_representative(orbit_from_tag(tag, q))
        assert not same_orbit(a, b)
        assert same_orbit(a, a.act(random_invertible(4, r)))


def test_same_orbit_separates_second_parameter():
    a = cfg((1, 0), (0, 1), (1, 1), (1, 2), (1, 3), n=4)
    b = cfg((1, 0), (0, 1), (1, 1), (1, 2), (1, 5), n=4)
    assert not same_orbit(a, b)
    assert not same_orbit(a, PHI53_REP)


def test_parameters_outside_generic_locus_rejected():
    with pytest.raises(ParameterError):
        orbit_from_tag("phi[5^3]", "1:1:1")
    with pytest.raises(ParameterError):
        orbit_from_tag("phi[5^2]", ["1:2", "1:2"])
    with pytest.raises(ParameterError):
        orbit_from_tag("phi[4^2;1]", "0:1")
    with pytest.raises(ParameterError):
        orbit_from_tag("phi[5^3;{1,2},{3,4}]", "1:2")


def test_orbit_dimension_examples():
    generic = verify_realizability(max(enumerate_image(), key=lambda phi: sum(phi.values)))
    assert orbit_dimension(generic) == 15
    assert orbit_dimension(cfg(*[(1, 1, 0, 2)] * 5)) == 3
    rep = orbit_representative(orbit_from_tag("phi[4^2;1]", "1:2"))
    assert rep == cfg((0, 0, 1), (1, 0, 0), (0, 1, 0), (1, 1, 0), (1, 2, 0), n=4)
    assert orbit_dimension(rep) == wedge_dimension(rep) == 10


@pytest.mark.parametrize("phi", enumerate_image(), ids=lambda phi: family_of(phi).label())
def test_orbit_dimension_golden_and_oracle(phi):
    v = verify_realizability(phi)
    d = orbit_dimension(v)
    assert d == wedge_dimension(v)
    assert d == DIMENSIONS[type_label(phi)]


@settings(max_examples=40, deadline=None)
@given(configs(n=4, m=5), invertible())
def test_orbit_dimension_constant_on_orbits(v, g):
    assert orbit_dimension(v.act(g)) == orbit_dimension(v)


def test_generic_four_subsets_in_general_position():
    from projconf.linalg import rank_of_vectors

    for k in range(20):
        o = orbit_from_tag("phi[5^3]", random_generic_param("P2", random.Random(k)))
        v = orbit_representative(o)
        for four in combinations(range(1, 6), 4):
            assert all(rank_of_vectors([v.point(i) for i in t]) == 3 for t in combinations(four, 3))


def test_family_labels_round_trip():
    for entry in catalogue():
        assert parse_family_label(entry.tag.label()) == entry.tag
