"""The catalogue of rank matrices of five points in P^3.

Twenty families: ten single-orbit splittings, where the rank matrix is
determined by the splitting, and ten families over the three splittings
{5^3}, {5^2} and {1^1,4^2} that admit more than one rank matrix.
Every family is described once for a canonical choice of indices; the other
members are relabellings of it.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .errors import NotInImageError, ParameterError
from .linalg import ProjConfig, normalize_vector, scalar_str, to_scalar
from .rankmatrix import RankMatrix, rank_type_label, rho
from .splitting import pprime_membership, representative
from .subsets import Splitting, fmt_set, labels_of

M = 5
N = 4
POINTS = frozenset(range(1, M + 1))


@dataclass(frozen=True)
class ProjParam:
    """A point of P^1 or P^2 in homogeneous coordinates, first nonzero coordinate 1."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", normalize_vector(self.coords))

    @classmethod
    def parse(cls, text: str) -> "ProjParam":
        """Accept ``"1:2:3"`` or ``"1,2,3"``."""
        parts = re.split(r"[:,]", text.strip().strip("[]()"))
        try:
            return cls(tuple(to_scalar(p) for p in parts))
        except ValueError as exc:
            raise ParameterError(f"cannot read projective parameter {text!r}: {exc}") from exc

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    def in_generic_locus(self) -> bool:
        c = self.coords
        if len(c) == 2:
            return c[0] * c[1] * (c[0] - c[1]) != 0
        if len(c) == 3:
            p1, p2, p3 = c
            return p1 * p2 * p3 * (p1 - p2) * (p2 - p3) * (p3 - p1) != 0
        return False

    def to_json(self) -> list[str]:
        return [scalar_str(x) for x in self.coords]

    def __str__(self):
        return "[" + ":".join(scalar_str(x) for x in self.coords) + "]"


def pair_in_generic_locus(p: ProjParam, q: ProjParam) -> bool:
    return p.dim == 1 and q.dim == 1 and p.in_generic_locus() and q.in_generic_locus() and p != q


# family name -> (kind of parameter or None)
PARAM_KIND = {
    "phi[5^3]": "P2",
    "phi[5^3;J]": "P1",
    "phi[5^2]": "P1xP1",
    "phi[5^2;J]": "P1",
    "phi[4^2;i]": "P1",
}

SPLIT_NAME = "split"
NAMED_FAMILIES = (
    "phi[5^3]",
    "phi[5^3;J]",
    "phi[5^3;J1,J2]",
    "phi[5^3;J]pair",
    "phi[5^2]",
    "phi[5^2;J]",
    "phi[5^2;J1,J2]",
    "phi[5^2;J]triple",
    "phi[4^2;i]",
    "phi[4^2;i;J]",
)

DEFAULT_PARAMS = {
    "P2": ProjParam((1, 2, 3)),
    "P1": ProjParam((1, 2)),
    "P1xP1": (ProjParam((1, 2)), ProjParam((1, 3))),
}


@dataclass(frozen=True)
class FamilyTag:
    """Family name plus the index data that picks one member.

    ``index`` holds frozensets of labels and single labels in the order the
    name lists them, e.g. ``("phi[4^2;i;J]", (1, frozenset({2, 5})))``.
    Single-orbit splittings use the name ``"split"`` and carry the splitting.
    """

    name: str
    index: tuple = ()
    splitting: Splitting | None = field(default=None, compare=True)

    @property
    def parametrized(self) -> bool:
        return self.name in PARAM_KIND

    @property
    def param_kind(self) -> str | None:
        return PARAM_KIND.get(self.name)

    def label(self) -> str:
        if self.name == SPLIT_NAME:
            return f"split{self.splitting}"
        head, _, _ = self.name.partition(";")
        head = head.rstrip("]")
        parts = [fmt_set(x) if isinstance(x, frozenset) else str(x) for x in self.index]
        if not parts:
            return head + "]"
        if self.name in ("phi[5^3;J1,J2]", "phi[5^2;J1,J2]"):
            return head + ";" + ",".join(parts) + "]"
        return head + ";" + ";".join(parts) + "]"

    def to_json(self) -> dict:
        out = {"name": self.name, "label": self.label()}
        if self.splitting is not None:
            out["splitting"] = self.splitting.to_json()
            out["splitting_type"] = self.splitting.type_str()
        if self.index:
            out["index"] = [sorted(x) if isinstance(x, frozenset) else x for x in self.index]
        return out

    def __str__(self):
        return self.label()


def _quot(I: frozenset, *Js: frozenset) -> int:
    """Size of I after collapsing each J to a single point."""
    size = len(I)
    for J in Js:
        inter = I & J
        if inter:
            size -= len(inter) - 1
    return size


def _formula(tag: FamilyTag):
    name, idx = tag.name, tag.index
    if name == "phi[5^3]":
        return lambda I: min(len(I), 3)
    if name == "phi[5^3;J]":
        (J,) = idx
        return lambda I: 2 if I == J else min(len(I), 3)
    if name == "phi[5^3;J1,J2]":
        J1, J2 = idx
        low = {POINTS - J1, POINTS - J2}
        return lambda I: 2 if I in low else min(len(I), 3)
    if name == "phi[5^3;J]pair":
        (J,) = idx
        return lambda I: min(_quot(I, J), 3)
    if name == "phi[5^2]":
        return lambda I: min(len(I), 2)
    if name in ("phi[5^2;J]", "phi[5^2;J]triple"):
        (J,) = idx
        return lambda I: min(_quot(I, J), 2)
    if name == "phi[5^2;J1,J2]":
        J1, J2 = idx
        return lambda I: min(_quot(I, J1, J2), 2)
    if name == "phi[4^2;i]":
        (i,) = idx
        return lambda I: len(I & {i}) + min(len(I - {i}), 2)
    if name == "phi[4^2;i;J]":
        i, J = idx
        return lambda I: len(I & {i}) + min(_quot(I - {i}, J), 2)
    raise NotInImageError(f"unknown family {name!r}")


def family_rank_matrix(tag: FamilyTag) -> RankMatrix:
    if tag.name == SPLIT_NAME:
        from .splitting import rho_inverse

        return rho_inverse(tag.splitting, N)
    f = _formula(tag)
    return RankMatrix.from_function(M, lambda I: f(frozenset(I)))


def _pairs(labels: Iterable[int]) -> list[frozenset]:
    return [frozenset(c) for c in combinations(sorted(labels), 2)]


def _set_partitions(items: list[int]):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1:]


def _rank_choices(size: int):
    return [1] + list(range(2, size))


def single_orbit_splittings(n: int = N, m: int = M) -> list[Splitting]:
    """All splittings whose blocks have rank 1 or size - 1 with total rank <= n."""
    out = []
    for parts in _set_partitions(list(range(1, m + 1))):
        def assign(k, acc):
            if k == len(parts):
                s = Splitting(m, tuple(acc))
                if pprime_membership(s, n):
                    out.append(s)
                return
            for r in _rank_choices(len(parts[k])):
                assign(k + 1, acc + [(frozenset(parts[k]), r)])

        assign(0, [])
    return sorted(set(out), key=lambda s: (s.splitting_type(), [sorted(b) for b, _ in s.blocks]))


def named_family_tags() -> list[FamilyTag]:
    tags = [FamilyTag("phi[5^3]")]
    tags += [FamilyTag("phi[5^3;J]", (frozenset(J),)) for J in combinations(range(1, 6), 3)]
    disjoint = sorted(
        {tuple(sorted((a, b), key=sorted)) for a in _pairs(POINTS) for b in _pairs(POINTS - a)},
        key=lambda t: (sorted(t[0]), sorted(t[1])),
    )
    tags += [FamilyTag("phi[5^3;J1,J2]", t) for t in disjoint]
    tags += [FamilyTag("phi[5^3;J]pair", (J,)) for J in _pairs(POINTS)]
    tags.append(FamilyTag("phi[5^2]"))
    tags += [FamilyTag("phi[5^2;J]", (J,)) for J in _pairs(POINTS)]
    tags += [FamilyTag("phi[5^2;J1,J2]", t) for t in disjoint]
    tags += [FamilyTag("phi[5^2;J]triple", (frozenset(J),)) for J in combinations(range(1, 6), 3)]
    tags += [FamilyTag("phi[4^2;i]", (i,)) for i in range(1, 6)]
    tags += [FamilyTag("phi[4^2;i;J]", (i, J)) for i in range(1, 6) for J in _pairs(POINTS - {i})]
    return tags


@dataclass(frozen=True)
class CatalogueEntry:
    tag: FamilyTag
    rank_matrix: RankMatrix

    @property
    def type_label(self) -> str:
        return type_label(self.rank_matrix)


@lru_cache(maxsize=None)
def catalogue() -> tuple[CatalogueEntry, ...]:
    entries = [CatalogueEntry(FamilyTag(SPLIT_NAME, (), s), family_rank_matrix(FamilyTag(SPLIT_NAME, (), s)))
               for s in single_orbit_splittings()]
    entries += [CatalogueEntry(t, family_rank_matrix(t)) for t in named_family_tags()]
    return tuple(entries)


@lru_cache(maxsize=None)
def _by_values() -> dict[tuple[int, ...], CatalogueEntry]:
    return {e.rank_matrix.values: e for e in catalogue()}


def family_of(phi: RankMatrix) -> FamilyTag:
    entry = _by_values().get(phi.values) if phi.m == M else None
    if entry is None:
        raise NotInImageError(
            f"rank matrix {''.join(map(str, phi.values))} is not realizable by five points in P^3",
            values=list(phi.values),
        )
    return entry.tag


def in_image(phi: RankMatrix) -> bool:
    return phi.m == M and phi.values in _by_values()


# a/b markings for rank types shared by two kinds of rank matrix
_SUFFIX_BY_SPLITTING = {
    ("(2)", ((1, 1), (4, 1))): "a",
    ("(2)", ((2, 1), (3, 1))): "b",
    ("(3,3)", ((1, 1), (2, 1), (2, 1))): "a",
    ("(3,3)", ((1, 1), (1, 1), (3, 1))): "b",
    ("(4,4)", ((2, 1), (3, 2))): "a",
    ("(4,4)", ((1, 1), (4, 2))): "b",
}
_SUFFIX_BY_FAMILY = {"phi[5^2;J1,J2]": "a", "phi[5^2;J]triple": "b"}


def type_label(phi: RankMatrix) -> str:
    """Rank-type label with the a/b marking where two kinds share a rank type."""
    tag = family_of(phi)
    base = rank_type_label(phi)
    suffix = _SUFFIX_BY_FAMILY.get(tag.name)
    if suffix is None:
        suffix = _SUFFIX_BY_SPLITTING.get((base, rho(phi).splitting_type()), "")
    return base + suffix


# canonical members and their representatives

CANONICAL_INDEX = {
    "phi[5^3]": (),
    "phi[5^3;J]": (frozenset({1, 2, 5}),),
    "phi[5^3;J1,J2]": (frozenset({1, 2}), frozenset({3, 4})),
    "phi[5^3;J]pair": (frozenset({1, 5}),),
    "phi[5^2]": (),
    "phi[5^2;J]": (frozenset({4, 5}),),
    "phi[5^2;J1,J2]": (frozenset({1, 4}), frozenset({2, 5})),
    "phi[5^2;J]triple": (frozenset({1, 4, 5}),),
    "phi[4^2;i]": (1,),
    "phi[4^2;i;J]": (1, frozenset({2, 5})),
}


def _e(*coeffs) -> tuple[Fraction, ...]:
    out = [Fraction(0)] * N
    for k, c in enumerate(coeffs):
        out[k] = to_scalar(c)
    return tuple(out)


def _embed(p: ProjParam, slots: Sequence[int]) -> tuple[Fraction, ...]:
    out = [Fraction(0)] * N
    for c, s in zip(p.coords, slots):
        out[s] = c
    return tuple(out)


def check_param(name: str, param) -> object:
    """Validate a parameter against the family's generic locus, returning it normalized."""
    kind = PARAM_KIND.get(name)
    if kind is None:
        if param is not None:
            raise ParameterError(f"family {name} is a single orbit and takes no parameter")
        return None
    if param is None:
        raise ParameterError(f"family {name} needs a parameter of kind {kind}")
    if kind == "P1xP1":
        if not isinstance(param, (tuple, list)) or len(param) != 2:
            raise ParameterError(f"family {name} needs a pair of points of P^1")
        p, q = (x if isinstance(x, ProjParam) else ProjParam(tuple(x)) for x in param)
        if not pair_in_generic_locus(p, q):
            raise ParameterError(f"({p},{q}) is outside the generic locus: need p1p2(p1-p2), q1q2(q1-q2) nonzero and p != q")
        return (p, q)
    p = param if isinstance(param, ProjParam) else ProjParam(tuple(param))
    want = 2 if kind == "P2" else 1
    if p.dim != want:
        raise ParameterError(f"family {name} needs a point of P^{want}, got {p}")
    if not p.in_generic_locus():
        raise ParameterError(f"{p} is outside the generic locus of P^{want}")
    return p


def base_representative(name: str, param=None) -> ProjConfig:
    """Representative of the canonical member of a named family."""
    param = check_param(name, param)
    e1, e2, e3 = _e(1), _e(0, 1), _e(0, 0, 1)
    s12, s123 = _e(1, 1), _e(1, 1, 1)
    if name == "phi[5^3]":
        cols = [e1, e2, e3, s123, _embed(param, (0, 1, 2))]
    elif name == "phi[5^3;J]":
        cols = [e1, e2, e3, s123, _embed(param, (0, 1))]
    elif name == "phi[5^3;J1,J2]":
        cols = [e1, e2, e3, s123, s12]
    elif name == "phi[5^3;J]pair":
        cols = [e1, e2, e3, s123, e1]
    elif name == "phi[5^2]":
        p, q = param
        cols = [e1, e2, s12, _embed(p, (0, 1)), _embed(q, (0, 1))]
    elif name == "phi[5^2;J]":
        cols = [e1, e2, s12, _embed(param, (0, 1)), _embed(param, (0, 1))]
    elif name == "phi[5^2;J1,J2]":
        cols = [e1, e2, s12, e1, e2]
    elif name == "phi[5^2;J]triple":
        cols = [e1, e2, s12, e1, e1]
    elif name == "phi[4^2;i]":
        cols = [e3, e1, e2, s12, _embed(param, (0, 1))]
    elif name == "phi[4^2;i;J]":
        cols = [e3, e1, e2, s12, e1]
    else:
        raise NotInImageError(f"unknown family {name!r}")
    return ProjConfig(tuple(cols))


@lru_cache(maxsize=None)
def template(name: str) -> RankMatrix:
    """Rank matrix of the canonical member."""
    return family_rank_matrix(FamilyTag(name, CANONICAL_INDEX[name]))


@lru_cache(maxsize=None)
def frame_alignment(values: tuple[int, ...], name: str) -> tuple[int, ...]:
    """Lexicographically least sigma with phi(sigma(K)) == template(K) for all K.

    The k-th point of the aligned configuration is point ``sigma[k-1]``.
    """
    phi = RankMatrix(M, values)
    t = template(name).values
    for sigma in permutations(range(1, M + 1)):
        # phi(sigma(K)) == t(K) means phi relabelled by sigma^{-1} equals t
        inverse = {s: k + 1 for k, s in enumerate(sigma)}
        if phi.permuted(inverse).values == t:
            return sigma
    raise NotInImageError(f"rank matrix is not a member of family {name}")


def member_representative(tag: FamilyTag, param=None) -> ProjConfig:
    """Representative of any catalogue member, with the given parameter."""
    if tag.name == SPLIT_NAME:
        if param is not None:
            raise ParameterError("single-orbit splittings take no parameter")
        return representative(tag.splitting, None, N)
    base = base_representative(tag.name, param)
    sigma = frame_alignment(family_rank_matrix(tag).values, tag.name)
    cols = [None] * M
    for k, s in enumerate(sigma):
        cols[s - 1] = base.columns[k]
    return ProjConfig(tuple(cols))


def default_param(name: str):
    kind = PARAM_KIND.get(name)
    return None if kind is None else DEFAULT_PARAMS[kind]


_LABEL_RE = re.compile(r"^phi\[(5\^3|5\^2|4\^2)(?:;(.*))?\]$")
_SET_RE = re.compile(r"\{([0-9,\s]*)\}")


def parse_family_label(text: str) -> FamilyTag:
    """Inverse of :meth:`FamilyTag.label`."""
    text = text.strip().replace(" ", "")
    if text.startswith("split"):
        body = text[len("split"):]
        blocks = re.findall(r"\{([0-9,]+)\}\^([0-9]+)", body)
        if not blocks:
            raise ParameterError(f"cannot read splitting in {text!r}")
        s = Splitting.of(*[(frozenset(int(x) for x in b.split(",")), int(r)) for b, r in blocks], m=M)
        tag = FamilyTag(SPLIT_NAME, (), s)
        family_rank_matrix(tag)
        return tag
    match = _LABEL_RE.match(text)
    if not match:
        raise ParameterError(f"unknown family label {text!r}")
    head, rest = match.group(1), match.group(2) or ""
    sets = [frozenset(int(x) for x in g.split(",") if x) for g in _SET_RE.findall(rest)]
    singles = [int(x) for x in re.sub(r"\{[^}]*\}", "", rest).split(";") if x.strip().isdigit()]
    if head == "4^2":
        if not singles:
            raise ParameterError(f"{text!r}: the isolated point is missing")
        name = "phi[4^2;i;J]" if sets else "phi[4^2;i]"
        index = (singles[0], sets[0]) if sets else (singles[0],)
    else:
        if len(sets) == 0:
            name, index = f"phi[{head}]", ()
        elif len(sets) == 2:
            name, index = f"phi[{head};J1,J2]", tuple(sets)
        else:
            J = sets[0]
            if head == "5^3":
                name = "phi[5^3;J]" if len(J) == 3 else "phi[5^3;J]pair"
            else:
                name = "phi[5^2;J]" if len(J) == 2 else "phi[5^2;J]triple"
            index = (J,)
    tag = FamilyTag(name, index)
    if family_rank_matrix(tag).values not in _by_values():
        raise ParameterError(f"{text!r} does not name a catalogued rank matrix")
    return _by_values()[family_rank_matrix(tag).values].tag
