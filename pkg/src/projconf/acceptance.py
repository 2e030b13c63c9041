"""The nine acceptance checks, each reported as pass or fail with a short detail."""
from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .classifier import classify, orbit_dimension, orbit_from_tag, orbit_representative, same_orbit
from .closure import (
    face_curve,
    face_degeneration,
    fibre_closure_verdict,
    ideal_generators,
    ideal_vanishes,
    linear_collapse_limit,
    low_rank_coordinates,
    orbit_closure_description,
    project_description,
)
from .enumeration import REFERENCE_MULTIPLICITIES, build_poset, enumerate_image, verify_realizability
from .families import (
    CANONICAL_INDEX,
    PARAM_KIND,
    FamilyTag,
    ProjParam,
    catalogue,
    default_param,
    family_of,
    type_label,
)
from .linalg import ProjConfig
from .rankmatrix import all_face_masks, compute_rank_matrix, leq, reduction, rho
from .sampling import random_generic_param, random_invertible, random_structured_config
from .subsets import Splitting

PARAMETRIZED = tuple(PARAM_KIND)


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"criterion {self.number} [{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail}"


# ---------------------------------------------------------------- independent splitting search


def _elim_rank(vectors) -> int:
    """Plain Gauss-Jordan rank over Q, kept separate from the library's elimination."""
    rows = [list(map(Fraction, v)) for v in vectors]
    r = 0
    width = len(rows[0]) if rows else 0
    for c in range(width):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1 :]


def span_decomposition(v: ProjConfig) -> Splitting:
    """Finest partition of the points whose block spans form a direct sum."""
    total = _elim_rank(v.columns)
    best = None
    for part in _set_partitions(list(range(1, v.m + 1))):
        ranks = [_elim_rank([v.point(i) for i in block]) for block in part]
        if sum(ranks) == total and (best is None or len(part) > len(best[0])):
            best = (part, ranks)
    part, ranks = best
    return Splitting.of(*[(frozenset(b), r) for b, r in zip(part, ranks)], m=v.m)


# ---------------------------------------------------------------- checks


def check_multiplicities() -> CriterionResult:
    catalogue.cache_clear()
    start = time.perf_counter()
    image = enumerate_image.__wrapped__()
    counts = Counter(type_label(phi) for phi in image)
    elapsed = time.perf_counter() - start
    mismatches = {k: (counts.get(k, 0), v) for k, v in REFERENCE_MULTIPLICITIES.items() if counts.get(k, 0) != v}
    extra = set(counts) - set(REFERENCE_MULTIPLICITIES)
    expected_total = sum(REFERENCE_MULTIPLICITIES.values())
    ok = not mismatches and not extra and len(image) == expected_total and elapsed < 1.0
    detail = f"{len(counts)} labels, total {len(image)} (reference sums to {expected_total}), {elapsed:.3f}s"
    if mismatches:
        detail += "; found/expected " + ", ".join(f"{k} {a}/{b}" for k, (a, b) in mismatches.items())
    return CriterionResult(1, "rank-type multiplicities", ok, detail)


def check_rho_property(rng: random.Random, trials: int = 1000) -> CriterionResult:
    bad = 0
    for _ in range(trials):
        n, m = rng.choice((2, 3, 4)), rng.choice((3, 4, 5))
        v = random_structured_config(n, m, rng)
        if rho(compute_rank_matrix(v)) != span_decomposition(v):
            bad += 1
    return CriterionResult(2, "rho of the rank matrix equals the splitting", bad == 0, f"{trials - bad}/{trials} agree")


def check_round_trips(rng: random.Random) -> CriterionResult:
    bad = []
    for entry in catalogue():
        phi = entry.rank_matrix
        v = verify_realizability(phi).act(random_invertible(4, rng))
        o = classify(v)
        tag = entry.tag
        want_split = tag.splitting.splitting_type() if tag.splitting else rho(phi).splitting_type()
        if (
            o.rank_matrix != phi
            or rho(o.rank_matrix).splitting_type() != want_split
            or o.type_label != entry.type_label
            or o.family != tag
            or o.parameter != default_param(tag.name)
        ):
            bad.append(tag.label())
    n = len(catalogue())
    detail = f"{n - len(bad)}/{n} catalogue members round-trip"
    if bad:
        detail += "; failing " + ", ".join(bad[:5])
    return CriterionResult(3, "representative round trips", not bad, detail)


def check_faithful_parameters(rng: random.Random, pairs: int = 100) -> CriterionResult:
    bad = 0
    total = 0
    for name in PARAMETRIZED:
        tag = FamilyTag(name, CANONICAL_INDEX[name])
        kind = PARAM_KIND[name]
        for _ in range(pairs):
            p = random_generic_param(kind, rng)
            q = random_generic_param(kind, rng)
            while q == p:
                q = random_generic_param(kind, rng)
            o_p, o_q = orbit_from_tag(tag, p), orbit_from_tag(tag, q)
            a = orbit_representative(o_p).act(random_invertible(4, rng))
            b = orbit_representative(o_p).act(random_invertible(4, rng))
            c = orbit_representative(o_q).act(random_invertible(4, rng))
            total += 2
            bad += (not same_orbit(a, b)) + same_orbit(a, c)
    return CriterionResult(4, "faithful parameters", bad == 0, f"{total - bad}/{total} orbit comparisons correct")


def witness_config(p: ProjParam, s: ProjParam) -> ProjConfig:
    """[e1, e2, e1+e2, p, s] in the plane of the first two coordinates."""
    cols = [(1, 0), (0, 1), (1, 1), p.coords, s.coords]
    return ProjConfig(tuple(tuple(c) + (0, 0) for c in cols))


def check_ideal_certificates(rng: random.Random, translates: int = 200, witnesses: int = 100) -> CriterionResult:
    fails = 0
    for name in PARAMETRIZED:
        tag = FamilyTag(name, CANONICAL_INDEX[name])
        for _ in range(translates):
            o = orbit_from_tag(tag, random_generic_param(PARAM_KIND[name], rng))
            w = orbit_representative(o).act(random_invertible(4, rng))
            fails += not ideal_vanishes(o, w)
    wfail = 0
    for _ in range(witnesses):
        p, q = random_generic_param("P1xP1", rng)
        o = orbit_from_tag("phi[5^2]", (p, q))
        s = random_generic_param("P1", rng)
        while s == q:
            s = random_generic_param("P1", rng)
        w = witness_config(p, s)
        p4 = ideal_generators(o)[3]
        coords = low_rank_coordinates(w, p4.support, 2)
        value = p4.evaluate(coords)
        (q1, q2), (s1, s2) = q.coords, s.coords
        wfail += value != q2 * s1 - q1 * s2 or value == 0 or ideal_vanishes(o, w)
    detail = (
        f"{len(PARAMETRIZED) * translates - fails}/{len(PARAMETRIZED) * translates} translates vanish; "
        f"{witnesses - wfail}/{witnesses} witnesses give P4 = q2 s1 - q1 s2 != 0"
    )
    return CriterionResult(5, "ideal certificates", fails == 0 and wfail == 0, detail)


def check_closure_consistency() -> CriterionResult:
    bad = []
    members = [e.tag for e in catalogue() if e.tag.parametrized]
    for tag in members:
        o = orbit_from_tag(tag, default_param(tag.name))
        projected = project_description(orbit_closure_description(o))
        for psi in enumerate_image():
            if fibre_closure_verdict(o, psi) != projected[psi.values]:
                bad.append((tag.label(), family_of(psi).label()))
    detail = f"{len(members)} parametrized members x {len(enumerate_image())} targets, {len(bad)} disagreements"
    if bad:
        detail += "; e.g. " + ", ".join(f"{a} vs {b}" for a, b in bad[:3])
    return CriterionResult(6, "closure verdicts match the explicit decompositions", not bad, detail)


def check_face_degenerations(rng: random.Random, trials: int = 500, scalars: int = 5) -> CriterionResult:
    bad = 0
    checks = 0
    for _ in range(trials):
        v = random_structured_config(4, 5, rng)
        phi = compute_rank_matrix(v)
        orbit = classify(v)
        for face in all_face_masks(phi):
            curve = face_curve(v, face)
            checks += 1
            if compute_rank_matrix(curve.at(0)) != reduction(phi, face):
                bad += 1
            for _ in range(scalars):
                c = Fraction(rng.choice((-1, 1)) * rng.randint(1, 20), rng.randint(1, 7))
                checks += 1
                bad += classify(curve.at(c)) != orbit
    return CriterionResult(7, "degeneration endpoint law", bad == 0, f"{checks - bad}/{checks} checks hold over {trials} configs")


def check_dimensions() -> CriterionResult:
    problems = []
    dims = {}
    for phi in enumerate_image():
        dims[phi.values] = orbit_dimension(verify_realizability(phi))
    top = max(enumerate_image(), key=lambda phi: sum(phi.values))
    if dims[top.values] != 15:
        problems.append(f"generic orbit has dimension {dims[top.values]}")
    problems += [family_of(phi).label() for phi in enumerate_image() if phi != top and dims[phi.values] >= 15]
    edges = 0
    leq_graph = build_poset("leq")
    nodes = leq_graph.nodes
    for lo, hi in leq_graph.hasse_edges():
        if family_of(nodes[hi]).parametrized:
            continue
        edges += 1
        if dims[nodes[lo].values] >= dims[nodes[hi].values]:
            problems.append(f"{family_of(nodes[lo]).label()} below {family_of(nodes[hi]).label()}")
    for entry in catalogue():
        if not entry.tag.parametrized:
            continue
        o = orbit_from_tag(entry.tag, default_param(entry.tag.name))
        dim = orbit_dimension(orbit_representative(o))
        for comp in orbit_closure_description(o).components:
            for sample in comp.samples():
                if classify(sample) == o:
                    continue
                edges += 1
                if orbit_dimension(sample) >= dim:
                    problems.append(f"{comp.to_json()['kind']} in closure of {entry.tag.label()}")
    detail = f"generic dimension {dims[top.values]}; {edges} closure edges sampled"
    if problems:
        detail += "; violations: " + ", ".join(problems[:5])
    return CriterionResult(8, "orbit dimension drops along closures", not problems, detail)


def check_single_fibre_necessity(rng: random.Random, trials: int = 200) -> CriterionResult:
    singles = [e.rank_matrix for e in catalogue() if not e.tag.parametrized]
    bad = 0
    for k in range(trials):
        phi = rng.choice(singles)
        v = verify_realizability(phi).act(random_invertible(4, rng))
        if k % 2 == 0:
            face = rng.choice(all_face_masks(phi))
            end = face_degeneration(v, face, 0)
        else:
            a = random_invertible(4, rng)
            for row in rng.sample(range(4), rng.randint(1, 3)):
                a[row] = [Fraction(0)] * 4
            end = linear_collapse_limit(v, a)
        bad += not leq(compute_rank_matrix(end), phi)
    return CriterionResult(9, "single-orbit closures stay below", bad == 0, f"{trials - bad}/{trials} degenerations satisfy psi <= phi")


def run_all(seed: int = 20240611) -> list[CriterionResult]:
    rng = random.Random(seed)
    return [
        check_multiplicities(),
        check_rho_property(rng),
        check_round_trips(rng),
        check_faithful_parameters(rng),
        check_ideal_certificates(rng),
        check_closure_consistency(),
        check_face_degenerations(rng),
        check_dimensions(),
        check_single_fibre_necessity(rng),
    ]
