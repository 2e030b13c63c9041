"""Orbit closures: fibre verdicts, explicit closure descriptions, minor ideals, degenerations."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence, Union

from .classifier import OrbitClass, classify, orbit_from_tag, orbit_representative
from .enumeration import enumerate_image, prec, preceq, verify_realizability
from .errors import NotAFaceError, PreconditionError, ShapeError
from .families import (
    M,
    N,
    POINTS,
    FamilyTag,
    ProjParam,
    default_param,
    family_of,
    family_rank_matrix,
    in_image,
)
from .linalg import ProjConfig, determinant, rank_of_vectors, scalar_str, solve_in_basis, unit_vector
from .rankmatrix import RankMatrix, compute_rank_matrix, is_face, leq, rho
from .splitting import representative, rho_inverse
from .subsets import Splitting, fmt_set, labels_of, mask_of

VERDICTS = ("contains", "intersects_only", "disjoint")


# ---------------------------------------------------------------- components


@dataclass(frozen=True)
class Fibre:
    """All configurations with the given rank matrix."""

    rank_matrix: RankMatrix

    def samples(self) -> list[ProjConfig]:
        return [verify_realizability(self.rank_matrix)]

    def to_json(self) -> dict:
        tag = family_of(self.rank_matrix)
        return {"kind": "fibre", "family": tag.label(), "rank_matrix": self.rank_matrix.to_json()}


@dataclass(frozen=True)
class VarpiFibre:
    """All configurations with the given splitting."""

    splitting: Splitting

    def rank_matrices(self) -> list[RankMatrix]:
        return [phi for phi in enumerate_image() if rho(phi) == self.splitting]

    def samples(self) -> list[ProjConfig]:
        return [verify_realizability(phi) for phi in self.rank_matrices()]

    def to_json(self) -> dict:
        return {"kind": "varpi_fibre", "splitting": self.splitting.to_json(), "label": str(self.splitting)}


@dataclass(frozen=True)
class ParamFamily:
    """Orbits of one family singled out by parameter constraints.

    ``samples`` are representatives: the whole component when
    ``single_orbit`` is set, otherwise a spread of parameter values that
    reaches every fibre the component meets.
    """

    family: FamilyTag
    constraints: str
    sample_configs: tuple[ProjConfig, ...]
    single_orbit: bool = True

    def samples(self) -> list[ProjConfig]:
        return list(self.sample_configs)

    def to_json(self) -> dict:
        return {
            "kind": "param_family",
            "family": self.family.label(),
            "constraints": self.constraints,
            "single_orbit": self.single_orbit,
            "samples": [c.to_json()["points"] for c in self.sample_configs],
        }


@dataclass(frozen=True)
class LowRankLocus:
    """Configurations whose points span at most ``r`` dimensions."""

    r: int

    def __post_init__(self):
        if not 1 <= self.r <= N:
            raise ShapeError(f"low-rank locus needs 1 <= r <= {N}, got {self.r}")

    def rank_matrices(self) -> list[RankMatrix]:
        return [phi for phi in enumerate_image() if phi.top <= self.r]

    def samples(self) -> list[ProjConfig]:
        top = [phi for phi in self.rank_matrices() if phi.top == self.r]
        return [verify_realizability(phi) for phi in top]

    def to_json(self) -> dict:
        return {"kind": "low_rank_locus", "max_rank": self.r}


Component = Union[Fibre, VarpiFibre, ParamFamily, LowRankLocus]


@dataclass(frozen=True)
class ClosureDescription:
    orbit: OrbitClass
    components: tuple[Component, ...]

    def to_json(self) -> dict:
        return {"orbit": self.orbit.to_json(), "components": [c.to_json() for c in self.components]}


# ---------------------------------------------------------------- fibre level


def _single_orbit_fibre(phi: RankMatrix) -> bool:
    return not family_of(phi).parametrized


def fibre_closure(phi: RankMatrix) -> list[RankMatrix]:
    """Rank matrices of the fibres making up the closure of a single-orbit fibre."""
    if not in_image(phi):
        from .errors import NotInImageError

        raise NotInImageError("rank matrix is not in the enumerated image", values=list(phi.values))
    if not _single_orbit_fibre(phi):
        raise PreconditionError(
            f"{family_of(phi).label()} is a union of infinitely many orbits; use orbit_closure_description",
            family=family_of(phi).label(),
        )
    return [psi for psi in enumerate_image() if leq(psi, phi)]


def fibre_closure_verdict(o: OrbitClass, psi: RankMatrix) -> str:
    """How the closure of a parametrized orbit meets the fibre over ``psi``."""
    if not o.parametrized:
        raise PreconditionError(
            f"{o.family.label()} is a single orbit; its closure is a union of whole fibres (use fibre_closure)",
            family=o.family.label(),
        )
    phi = o.rank_matrix
    below = preceq(psi, phi)
    if (below and _single_orbit_fibre(psi)) or prec(psi, phi):
        return "contains"
    if below:
        return "intersects_only"
    return "disjoint"


def project_description(desc: ClosureDescription) -> dict[tuple[int, ...], str]:
    """Fibre-level reading of a closure description, keyed by rank-matrix values.

    A component contains a fibre when it covers it entirely, or when it meets
    it and the fibre is a single orbit; otherwise a meeting is intersects_only.
    """
    verdict = {phi.values: "disjoint" for phi in enumerate_image()}

    def mark(phi: RankMatrix, covered: bool):
        if covered or _single_orbit_fibre(phi):
            verdict[phi.values] = "contains"
        elif verdict[phi.values] == "disjoint":
            verdict[phi.values] = "intersects_only"

    for comp in desc.components:
        if isinstance(comp, Fibre):
            mark(comp.rank_matrix, True)
        elif isinstance(comp, (VarpiFibre, LowRankLocus)):
            for phi in comp.rank_matrices():
                mark(phi, True)
        else:
            for cfg in comp.samples():
                mark(compute_rank_matrix(cfg), False)
    return verdict


# ---------------------------------------------------------------- explicit descriptions


def _cfg(cols: Sequence[Sequence]) -> ProjConfig:
    return ProjConfig(tuple(tuple(c) + (0,) * (N - len(c)) for c in cols))


def _place(columns_by_role: Sequence, roles: Sequence[int]) -> ProjConfig:
    """Put the k-th column at point ``roles[k]``."""
    cols = [None] * M
    for col, label in zip(columns_by_role, roles):
        cols[label - 1] = col
    return _cfg(cols)


def _sp(*pairs) -> Splitting:
    return Splitting.of(*[(frozenset(b), r) for b, r in pairs], m=M)


def _orbit_component(o: OrbitClass, note: str) -> ParamFamily:
    return ParamFamily(o.family, note, (orbit_representative(o),), True)


def open_family_boundary_configs(p: ProjParam) -> list[ProjConfig]:
    """The five boundary orbits of the (5,10) orbit with parameter p; the i-th has point i isolated."""
    p1, p2, p3 = p.coords
    return [
        _cfg([(0, 0, 1), (1, 0, 0), (0, 1, 0), (1, 1, 0), (p2, p3, 0)]),
        _cfg([(1, 0, 0), (0, 0, 1), (0, 1, 0), (1, 1, 0), (p1, p3, 0)]),
        _cfg([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (p1, p2, 0)]),
        _cfg([(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1), (p1 - p3, p2 - p3, 0)]),
        _cfg([(1, 0, 0), (0, 1, 0), (1, 1, 0), (p2 * (p1 - p3), p1 * (p2 - p3), 0), (0, 0, 1)]),
    ]


def _roles_533(tag: FamilyTag) -> tuple[int, ...]:
    (J,) = tag.index
    return tuple(sorted(J)) + tuple(sorted(POINTS - J))


def secondary_frame_parameter(o: OrbitClass) -> ProjParam:
    """Parameter p with the orbit through [e1, e2, p, e3, e1+e2+e3] in roles (J ascending, rest ascending)."""
    a, b, c, d, e = _roles_533(o.family)
    v = orbit_representative(o)
    from .linalg import coordinates_in_span

    x = coordinates_in_span(v, (a, b, d), e)
    y = coordinates_in_span(v, (a, b, d), c)
    coords = [yk / xk for yk, xk in zip(y, x)]
    return ProjParam(tuple(coords[:2]))


def _desc_52(o: OrbitClass) -> list[Component]:
    comps: list[Component] = [_orbit_component(o, "the orbit itself")]
    comps += [VarpiFibre(_sp(({i}, 1), (POINTS - {i}, 1))) for i in range(1, 6)]
    comps.append(VarpiFibre(_sp((POINTS, 1))))
    return comps


def _desc_522(o: OrbitClass) -> list[Component]:
    (J,) = o.family.index
    comps: list[Component] = [_orbit_component(o, "the orbit itself")]
    comps.append(VarpiFibre(_sp((J, 1), (POINTS - J, 1))))
    comps += [VarpiFibre(_sp(({i}, 1), (POINTS - {i}, 1))) for i in sorted(POINTS - J)]
    comps.append(VarpiFibre(_sp((POINTS, 1))))
    return comps


def _desc_42(o: OrbitClass) -> list[Component]:
    (j,) = o.family.index
    rest = sorted(POINTS - {j})
    p = o.parameter
    e1, e2, e12 = (1, 0), (0, 1), (1, 1)
    pv = tuple(p.coords)
    roles = rest + [j]
    q_values = [e1, e2, e12, pv, (1, 7)]
    if pv == (1, 7):
        q_values[-1] = (1, 11)
    family = [_place([e1, e2, e12, pv, q], roles) for q in q_values]
    comps: list[Component] = [_orbit_component(o, "the orbit itself")]
    comps.append(
        ParamFamily(
            family_of(compute_rank_matrix(family[-1])),
            f"points {rest} framed as [e1, e2, e1+e2, p] with p = {p}; point {j} = q free in P^1",
            tuple(family),
            False,
        )
    )
    comps += [VarpiFibre(_sp(({i}, 1), ({j}, 1), (POINTS - {i, j}, 1))) for i in rest]
    comps += [Fibre(family_rank_matrix(FamilyTag("phi[5^2;J]triple", (frozenset(set(rest) - {i}),)))) for i in rest]
    comps += [VarpiFibre(_sp(({i, j}, 1), (POINTS - {i, j}, 1))) for i in rest]
    comps += [VarpiFibre(_sp(({i}, 1), (POINTS - {i}, 1))) for i in range(1, 6)]
    comps.append(VarpiFibre(_sp((POINTS, 1))))
    return comps


def _desc_53(o: OrbitClass) -> list[Component]:
    comps: list[Component] = [_orbit_component(o, "the orbit itself")]
    for i, cfg in enumerate(open_family_boundary_configs(o.parameter), start=1):
        comps.append(ParamFamily(family_of(compute_rank_matrix(cfg)), f"boundary orbit with point {i} isolated", (cfg,), True))
    comps += [VarpiFibre(_sp(({i}, 1), ({j}, 1), (POINTS - {i, j}, 1))) for i, j in combinations(range(1, 6), 2)]
    comps.append(LowRankLocus(2))
    return comps


def _desc_533(o: OrbitClass) -> list[Component]:
    a, b, c, d, e = roles = _roles_533(o.family)
    (J,) = o.family.index
    K = POINTS - J
    p = secondary_frame_parameter(o)
    pv = tuple(p.coords) + (0,)
    e1, e2, e3, e12, e123 = (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 1, 1)
    comps: list[Component] = [_orbit_component(o, "the orbit itself")]
    for cols, isolated in (([e1, e2, pv, e3, e12], d), ([e1, e2, pv, e12, e3], e)):
        cfg = _place(cols, roles)
        comps.append(ParamFamily(family_of(compute_rank_matrix(cfg)), f"boundary orbit with point {isolated} isolated", (cfg,), True))
    comps += [Fibre(family_rank_matrix(FamilyTag("phi[4^2;i;J]", (k, J - {k})))) for k in sorted(J)]
    comps.append(VarpiFibre(_sp((J, 2), (K, 1))))
    comps += [
        VarpiFibre(_sp(({i}, 1), ({j}, 1), (POINTS - {i, j}, 1)))
        for i, j in combinations(range(1, 6), 2)
        if not {i, j} <= J
    ]
    comps += [VarpiFibre(_sp(({k}, 1), (J - {k}, 1), (K, 1))) for k in sorted(J)]
    comps.append(LowRankLocus(2))
    return comps


_DESCRIBERS = {
    "phi[5^2]": _desc_52,
    "phi[5^2;J]": _desc_522,
    "phi[4^2;i]": _desc_42,
    "phi[5^3]": _desc_53,
    "phi[5^3;J]": _desc_533,
}


def orbit_closure_description(o: OrbitClass) -> ClosureDescription:
    """Closure of an orbit as a list of pieces, transcribed without merging overlaps."""
    describe = _DESCRIBERS.get(o.family.name)
    if describe is None:
        phi = o.rank_matrix
        comps = tuple(Fibre(psi) for psi in enumerate_image() if leq(psi, phi))
        return ClosureDescription(o, comps)
    return ClosureDescription(o, tuple(describe(o)))


# ---------------------------------------------------------------- minor polynomials


@dataclass(frozen=True)
class MinorPolynomial:
    """Sum of coefficient * product of column minors; minors list column labels in order."""

    terms: tuple[tuple[Fraction, tuple[tuple[int, ...], ...]], ...]
    name: str = ""

    def __post_init__(self):
        profiles = {self._profile(factors) for _, factors in self.terms}
        if len(profiles) > 1:
            raise ShapeError(f"{self.name}: terms have different column degrees", profiles=[dict(p) for p in profiles])
        sizes = {len(m) for _, factors in self.terms for m in factors}
        if len(sizes) > 1:
            raise ShapeError(f"{self.name}: minors of mixed size")

    @staticmethod
    def _profile(factors) -> tuple[tuple[int, int], ...]:
        counts: dict[int, int] = {}
        for minor_cols in factors:
            for c in minor_cols:
                counts[c] = counts.get(c, 0) + 1
        return tuple(sorted(counts.items()))

    @property
    def minor_size(self) -> int:
        return len(self.terms[0][1][0])

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted({c for _, factors in self.terms for m in factors for c in m}))

    def evaluate(self, coords: dict[int, Sequence[Fraction]]) -> Fraction:
        """Value at column coordinate vectors of length ``minor_size``."""
        total = Fraction(0)
        for coef, factors in self.terms:
            if coef == 0:
                continue
            value = coef
            for minor_cols in factors:
                value *= determinant([[coords[c][r] for c in minor_cols] for r in range(len(minor_cols))])
                if value == 0:
                    break
            total += value
        return total

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "terms": [
                {"coefficient": scalar_str(coef), "minors": [list(m) for m in factors]} for coef, factors in self.terms
            ],
        }

    def __str__(self):
        parts = []
        for coef, factors in self.terms:
            mins = "".join("|" + ",".join(map(str, m)) + "|" for m in factors)
            parts.append(f"({scalar_str(coef)}){mins}")
        return f"{self.name}(X) = " + " + ".join(parts)


def _poly(name: str, roles: Sequence[int], *terms) -> MinorPolynomial:
    """Terms use template positions 1..k, mapped to point labels through ``roles``."""
    mapped = []
    for coef, factors in terms:
        mapped.append((Fraction(coef), tuple(tuple(roles[c - 1] for c in m) for m in factors)))
    return MinorPolynomial(tuple(mapped), name)


def _gens_52(p: ProjParam, q: ProjParam, roles) -> list[MinorPolynomial]:
    p1, p2 = p.coords
    q1, q2 = q.coords
    return [
        _poly("P1", roles, (q1 * (p2 - p1), ((2, 4), (5, 3))), (p1 * (q2 - q1), ((2, 5), (3, 4)))),
        _poly("P2", roles, (q2 * (p2 - p1), ((1, 4), (5, 3))), (p2 * (q2 - q1), ((1, 5), (3, 4)))),
        _poly("P3", roles, (p1 * q2, ((1, 4), (5, 2))), (p2 * q1, ((1, 5), (2, 4)))),
        _poly("P4", roles, (q2, ((1, 3), (5, 2))), (q1, ((1, 5), (2, 3)))),
        _poly("P5", roles, (p2, ((1, 3), (4, 2))), (p1, ((1, 4), (2, 3)))),
    ]


def _gen_522(p: ProjParam, roles) -> MinorPolynomial:
    p1, p2 = p.coords
    return _poly("P", roles, (p2, ((1, 3), (4, 2))), (p1, ((1, 4), (2, 3))))


def _gens_53(p: ProjParam, roles) -> list[MinorPolynomial]:
    p1, p2, p3 = p.coords
    return [
        _poly("P1", roles, (p3, ((1, 2, 4), (1, 5, 3))), (p2, ((1, 2, 5), (1, 3, 4)))),
        _poly("P2", roles, (p3, ((2, 1, 4), (2, 5, 3))), (p1, ((2, 1, 5), (2, 3, 4)))),
        _poly("P3", roles, (p2, ((3, 1, 4), (3, 5, 2))), (p1, ((3, 1, 5), (3, 2, 4)))),
        _poly("P4", roles, (p2 - p3, ((4, 1, 3), (4, 5, 2))), (p1 - p3, ((4, 1, 5), (4, 2, 3)))),
        _poly("P5", roles, (p1 * (p2 - p3), ((5, 1, 3), (5, 4, 2))), (p2 * (p1 - p3), ((5, 1, 4), (5, 2, 3)))),
    ]


def _gens_533(p: ProjParam, roles) -> list[MinorPolynomial]:
    p1, p2 = p.coords
    return [
        _poly("P", roles, (1, ((1, 2, 3),))),
        _poly("P4", roles, (p1, ((4, 1, 3), (4, 5, 2))), (p2, ((4, 1, 5), (4, 2, 3)))),
        _poly("P5", roles, (p1, ((5, 1, 3), (5, 4, 2))), (p2, ((5, 1, 4), (5, 2, 3)))),
    ]


def ideal_generators(o: OrbitClass) -> list[MinorPolynomial]:
    """Generators of the ideal cutting out the orbit closure, parameters substituted.

    Column labels are point labels of the input configuration.
    """
    name = o.family.name
    sigma = o.frame
    if name == "phi[5^2]":
        p, q = o.parameter
        return _gens_52(p, q, sigma)
    if name == "phi[5^2;J]":
        return [_gen_522(o.parameter, sigma[:4])]
    if name == "phi[4^2;i]":
        return [_gen_522(o.parameter, sigma[1:])]
    if name == "phi[5^3]":
        return _gens_53(o.parameter, sigma)
    if name == "phi[5^3;J]":
        return _gens_533(secondary_frame_parameter(o), _roles_533(o.family))
    raise PreconditionError(f"no ideal generators are known for family {o.family.label()}", family=o.family.label())


def low_rank_coordinates(w: ProjConfig, labels: Sequence[int], dim: int) -> dict[int, list[Fraction]] | None:
    """Coordinates of the chosen points in a ``dim``-dimensional space containing them.

    The basis is the lexicographically first independent set among the
    points, padded with standard basis vectors. Returns None when the points
    span more than ``dim`` dimensions.
    """
    cols = {i: w.point(i) for i in labels}
    if rank_of_vectors(cols.values()) > dim:
        return None
    basis: list[tuple[Fraction, ...]] = []
    for combo in combinations(sorted(labels), min(dim, len(labels))):
        vecs = [cols[i] for i in combo]
        r = rank_of_vectors(vecs)
        if r == len(vecs):
            basis = vecs
            break
        if r > len(basis):
            basis = [cols[i] for i in _independent_subset(combo, cols)]
    for k in range(1, w.n + 1):
        if len(basis) == dim:
            break
        e = unit_vector(w.n, k)
        if rank_of_vectors(basis + [e]) == len(basis) + 1:
            basis.append(e)
    return {i: solve_in_basis(basis, cols[i]) for i in labels}


def _independent_subset(labels, cols):
    chosen = []
    for i in labels:
        if rank_of_vectors([cols[j] for j in chosen] + [cols[i]]) == len(chosen) + 1:
            chosen.append(i)
    return chosen


def evaluate_generators(o: OrbitClass, w: ProjConfig) -> list[Fraction] | None:
    """Generator values at ``w``; None when the supporting points span too much."""
    if w.n != N or w.m != M:
        raise ShapeError(f"need 5 points in P^3, got n={w.n}, m={w.m}")
    gens = ideal_generators(o)
    support = sorted({c for g in gens for c in g.support})
    dim = gens[0].minor_size
    if o.family.name == "phi[5^3;J]":
        dim = 3
    coords = low_rank_coordinates(w, support, dim)
    if coords is None:
        return None
    return [g.evaluate(coords) for g in gens]


def ideal_vanishes(o: OrbitClass, w: ProjConfig) -> bool:
    """True iff every generator vanishes at ``w`` (after the rank pre-check)."""
    values = evaluate_generators(o, w)
    return values is not None and all(v == 0 for v in values)


# ---------------------------------------------------------------- degenerations


@dataclass(frozen=True)
class FaceCurve:
    """Each point outside J split as u + w, with u in span(J) and w in a fixed complement.

    Points in J are kept whole in ``w_parts``. The curve point at c is (c u_i + w_i)_i.
    """

    face: frozenset[int]
    u_parts: tuple[tuple[Fraction, ...], ...]
    w_parts: tuple[tuple[Fraction, ...], ...]

    def at(self, c) -> ProjConfig:
        from .linalg import to_scalar

        c = to_scalar(c)
        return ProjConfig(tuple(tuple(c * a + b for a, b in zip(u, w)) for u, w in zip(self.u_parts, self.w_parts)))


def face_curve(v: ProjConfig, J: Iterable[int] | int) -> FaceCurve:
    """Split every point along span(J) and a complement spanned by standard basis vectors.

    The complement is chosen greedily. For c != 0 the curve point is the
    translate of ``v`` by the map scaling span(J) by c; at c = 0 its rank
    matrix is the reduction along J.
    """
    phi = compute_rank_matrix(v)
    jmask = mask_of(J)
    if not is_face(phi, jmask):
        vals = phi.values
        bigger = next(jmask | (1 << i) for i in range(v.m) if not jmask >> i & 1 and vals[jmask | (1 << i)] == vals[jmask])
        raise NotAFaceError(
            f"{fmt_set(labels_of(jmask))} is not a face: {fmt_set(labels_of(bigger))} has the same rank",
            subset=sorted(labels_of(jmask)),
            larger=sorted(labels_of(bigger)),
        )
    J = sorted(labels_of(jmask))
    u_basis: list[tuple[Fraction, ...]] = []
    for i in J:
        if rank_of_vectors(u_basis + [v.point(i)]) > len(u_basis):
            u_basis.append(v.point(i))
    w_basis: list[tuple[Fraction, ...]] = []
    for k in range(1, v.n + 1):
        e = unit_vector(v.n, k)
        if rank_of_vectors(u_basis + w_basis + [e]) > len(u_basis) + len(w_basis):
            w_basis.append(e)
    full = u_basis + w_basis
    k = len(u_basis)
    # row r of the inverse basis matrix gives the r-th coordinate of any vector
    inverse_cols = [solve_in_basis(full, unit_vector(v.n, r)) for r in range(1, v.n + 1)]
    zero = (Fraction(0),) * v.n
    u_parts, w_parts = [], []
    for i in range(1, v.m + 1):
        col = v.point(i)
        if i in J:
            u_parts.append(zero)
            w_parts.append(col)
            continue
        x = [sum((inverse_cols[r][t] * col[r] for r in range(v.n)), Fraction(0)) for t in range(v.n)]
        u_parts.append(_combine(x[:k], u_basis, v.n))
        w_parts.append(_combine(x[k:], w_basis, v.n))
    return FaceCurve(frozenset(J), tuple(u_parts), tuple(w_parts))


def _combine(coefs, basis, n) -> tuple[Fraction, ...]:
    out = [Fraction(0)] * n
    for coef, b in zip(coefs, basis):
        if coef:
            for r in range(n):
                out[r] += coef * b[r]
    return tuple(out)


def face_degeneration(v: ProjConfig, J: Iterable[int] | int, c) -> ProjConfig:
    """Point at c on the face curve of ``v`` along J (see :func:`face_curve`).

    Points in J stay fixed; a point outside J keeps its complement part and
    has its span(J) part scaled by c.
    """
    return face_curve(v, J).at(c)


def linear_collapse_limit(v: ProjConfig, a: Sequence[Sequence]) -> ProjConfig:
    """Limit of (a + t I) . v as t -> 0.

    Points outside the kernel of ``a`` go to their image; points in the kernel
    stay put. Each (a + t I) is invertible for small t != 0, so the limit lies
    in the orbit closure of ``v``.
    """
    cols = []
    for col in v.columns:
        image = tuple(sum((Fraction(a[r][k]) * col[k] for k in range(v.n)), Fraction(0)) for r in range(v.n))
        cols.append(image if any(image) else col)
    return ProjConfig(tuple(cols))
