"""Orbit classification of five ordered points in P^3."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ShapeError
from .families import (
    M,
    N,
    FamilyTag,
    ProjParam,
    check_param,
    family_of,
    family_rank_matrix,
    frame_alignment,
    member_representative,
    parse_family_label,
    type_label,
)
from .linalg import ProjConfig, coordinates_in_span, rank
from .rankmatrix import RankMatrix, compute_rank_matrix, rho

# family -> (basis labels, unit label, target labels) on the aligned configuration
FRAMES = {
    "phi[5^3]": ((1, 2, 3), 4, (5,)),
    "phi[5^3;J]": ((1, 2, 3), 4, (5,)),
    "phi[5^2]": ((1, 2), 3, (4, 5)),
    "phi[5^2;J]": ((1, 2), 3, (4,)),
    "phi[4^2;i]": ((2, 3), 4, (5,)),
}


@dataclass(frozen=True)
class OrbitClass:
    """Rank matrix, family and (for the five parametrized families) the orbit parameter.

    ``frame`` records which input points were moved onto the canonical frame;
    it is a function of the rank matrix and takes no part in equality.
    """

    rank_matrix: RankMatrix
    family: FamilyTag
    parameter: ProjParam | tuple[ProjParam, ProjParam] | None = None
    frame: tuple[int, ...] | None = field(default=None, compare=False)

    @property
    def type_label(self) -> str:
        return type_label(self.rank_matrix)

    @property
    def parametrized(self) -> bool:
        return self.family.parametrized

    def parameter_json(self):
        if self.parameter is None:
            return None
        if isinstance(self.parameter, tuple):
            return [p.to_json() for p in self.parameter]
        return self.parameter.to_json()

    def to_json(self) -> dict:
        return {
            "rank_type": self.type_label,
            "family": self.family.to_json(),
            "parameter": self.parameter_json(),
            "splitting": rho(self.rank_matrix).to_json(),
            "frame": list(self.frame) if self.frame else None,
        }


def _check_shape(v: ProjConfig):
    if v.n != N or v.m != M:
        raise ShapeError(f"classification needs 5 points in P^3 (n=4, m=5), got n={v.n}, m={v.m}", n=v.n, m=v.m)


def _frame_parameter(w: ProjConfig, name: str):
    basis, unit, targets = FRAMES[name]
    scale = coordinates_in_span(w, basis, unit)
    points = []
    for t in targets:
        y = coordinates_in_span(w, basis, t)
        points.append([yk / xk for yk, xk in zip(y, scale)])
    if name == "phi[5^3;J]":
        (coords,) = points
        assert coords[2] == 0
        return ProjParam(tuple(coords[:2]))
    if name == "phi[5^2]":
        return (ProjParam(tuple(points[0])), ProjParam(tuple(points[1])))
    return ProjParam(tuple(points[0]))


def classify(v: ProjConfig) -> OrbitClass:
    """Rank matrix, family, and frame-normalized parameter of the orbit through ``v``."""
    _check_shape(v)
    phi = compute_rank_matrix(v)
    tag = family_of(phi)
    if not tag.parametrized:
        return OrbitClass(phi, tag, None, None)
    sigma = frame_alignment(phi.values, tag.name)
    param = _frame_parameter(v.permuted(sigma), tag.name)
    return OrbitClass(phi, tag, param, sigma)


def same_orbit(v: ProjConfig, w: ProjConfig) -> bool:
    return classify(v) == classify(w)


def orbit_representative(o: OrbitClass) -> ProjConfig:
    return member_representative(o.family, o.parameter)


def orbit_from_tag(tag: FamilyTag | str, parameter=None) -> OrbitClass:
    """Orbit named by a family label and, where needed, a parameter.

    ``parameter`` may be a :class:`ProjParam`, a coordinate tuple, a string
    like ``"1:2"``, or a pair of those for the two-point family.
    """
    if isinstance(tag, str):
        tag = parse_family_label(tag)
    if isinstance(parameter, str):
        parameter = ProjParam.parse(parameter)
    elif isinstance(parameter, (list, tuple)) and parameter and isinstance(parameter[0], str):
        parameter = tuple(ProjParam.parse(p) for p in parameter)
        if len(parameter) == 1:
            parameter = parameter[0]
    parameter = check_param(tag.name, parameter)
    phi = family_rank_matrix(tag)
    frame = frame_alignment(phi.values, tag.name) if tag.parametrized else None
    return OrbitClass(phi, tag, parameter, frame)


def _quotient_coords(u: list[Fraction], v: tuple[Fraction, ...]) -> list[Fraction]:
    """Coordinates of ``u`` in K^n / <v>, dropping the pivot of ``v``."""
    p = next(k for k, x in enumerate(v) if x != 0)
    c = u[p] / v[p]
    return [u[k] - c * v[k] for k in range(len(v)) if k != p]


def infinitesimal_action_matrix(v: ProjConfig) -> list[list[Fraction]]:
    """Matrix of A -> (A v_i mod v_i)_i, one column per elementary matrix E_ab."""
    n = v.n
    columns = []
    for a in range(n):
        for b in range(n):
            col = []
            for vi in v.columns:
                image = [Fraction(0)] * n
                image[a] = vi[b]
                col.extend(_quotient_coords(image, vi))
            columns.append(col)
    return [list(r) for r in zip(*columns)]


def orbit_dimension(v: ProjConfig) -> int:
    """Dimension of the orbit through ``v``: rank of the infinitesimal action."""
    return rank(infinitesimal_action_matrix(v))
