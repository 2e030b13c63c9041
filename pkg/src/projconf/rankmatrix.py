"""Rank matrices: the map sending each subset of points to the dimension of its span."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .errors import InvalidRankMatrixError, NotAFaceError, ShapeError
from .linalg import ProjConfig, primitive_integer_vector
from .subsets import Splitting, fmt_set, full_mask, labels_of, mask_of, popcount, submasks


@dataclass(frozen=True)
class RankMatrix:
    """Dense table of ``2**m`` values indexed by bitmask.

    Construction validates the rank-function axioms: zero on the empty set,
    one on singletons, monotone with unit steps, submodular.
    """

    m: int
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(x) for x in self.values)
        if len(values) != 1 << self.m:
            raise ShapeError(f"expected {1 << self.m} values for m={self.m}, got {len(values)}")
        object.__setattr__(self, "values", values)
        problem = _axiom_violation(self.m, values)
        if problem:
            raise InvalidRankMatrixError(problem)

    @classmethod
    def from_function(cls, m: int, f) -> "RankMatrix":
        """Tabulate ``f(frozenset_of_labels)`` over all subsets."""
        return cls(m, tuple(f(labels_of(mask)) for mask in range(1 << m)))

    def __call__(self, subset: Iterable[int] | int) -> int:
        return self.values[mask_of(subset)]

    @property
    def top(self) -> int:
        return self.values[-1]

    def agrees_on(self, other: "RankMatrix", block: int) -> bool:
        """True if both matrices take the same values on every subset of ``block``."""
        return all(self.values[s] == other.values[s] for s in submasks(block))

    def permuted(self, sigma: dict[int, int] | tuple[int, ...]) -> "RankMatrix":
        """Relabel points: label ``i`` becomes ``sigma[i]`` (1-based maps)."""
        if not isinstance(sigma, dict):
            sigma = {i + 1: s for i, s in enumerate(sigma)}
        out = [0] * (1 << self.m)
        for mask in range(1 << self.m):
            image = 0
            for i in labels_of(mask):
                image |= 1 << (sigma[i] - 1)
            out[image] = self.values[mask]
        return RankMatrix(self.m, tuple(out))

    def to_json(self) -> dict:
        return {"m": self.m, "values": list(self.values)}

    @classmethod
    def from_json(cls, data: dict) -> "RankMatrix":
        return cls(int(data["m"]), tuple(int(x) for x in data["values"]))

    def __repr__(self):
        return f"RankMatrix(m={self.m}, type={rank_type_label(self)}, values={''.join(map(str, self.values))})"


def _axiom_violation(m: int, values: tuple[int, ...]) -> str | None:
    if values[0] != 0:
        return "value on the empty set must be 0"
    for i in range(m):
        if values[1 << i] != 1:
            return f"value on singleton {{{i + 1}}} must be 1"
    for mask in range(1 << m):
        for i in range(m):
            bit = 1 << i
            if mask & bit:
                continue
            step = values[mask | bit] - values[mask]
            if step not in (0, 1):
                return f"adding point {i + 1} to {fmt_set(labels_of(mask))} changes the value by {step}"
            for j in range(i + 1, m):
                bj = 1 << j
                if mask & bj:
                    continue
                if values[mask | bit] + values[mask | bj] < values[mask | bit | bj] + values[mask]:
                    return f"submodularity fails at {fmt_set(labels_of(mask))} with points {i + 1},{j + 1}"
    return None


def _reduce(vec: list[int], basis: list[tuple[int, list[int]]]) -> list[int]:
    """Eliminate the pivots of ``basis`` from an integer vector, keeping it primitive."""
    v = list(vec)
    for piv, b in basis:
        if v[piv]:
            a, c = b[piv], v[piv]
            v = [a * x - c * y for x, y in zip(v, b)]
            g = 0
            for x in v:
                g = gcd(g, x)
            if g > 1:
                v = [x // g for x in v]
    return v


def compute_rank_matrix(v: ProjConfig) -> RankMatrix:
    """Span dimension of every subset of columns.

    Each subset extends the echelon basis of the subset with its lowest point
    removed, so every column is reduced once per subset.
    """
    m = v.m
    cols = [list(primitive_integer_vector(c)) for c in v.columns]
    bases: list[list[tuple[int, list[int]]]] = [[] for _ in range(1 << m)]
    values = [0] * (1 << m)
    for mask in range(1, 1 << m):
        low = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << low)
        residual = _reduce(cols[low], bases[rest])
        piv = next((k for k, x in enumerate(residual) if x), None)
        if piv is None:
            bases[mask] = bases[rest]
            values[mask] = values[rest]
        else:
            bases[mask] = bases[rest] + [(piv, residual)]
            values[mask] = values[rest] + 1
    return RankMatrix(m, tuple(values))


def face_masks(phi: RankMatrix, r: int) -> list[int]:
    """Bitmasks of the r-faces, in increasing numeric order."""
    out = []
    for mask, val in enumerate(phi.values):
        if val != r:
            continue
        if all(phi.values[mask | (1 << i)] > r for i in range(phi.m) if not mask >> i & 1):
            out.append(mask)
    return out


def faces(phi: RankMatrix, r: int) -> set[frozenset[int]]:
    """Inclusion-maximal subsets with value ``r``. Empty when ``r`` is out of range."""
    if r < 0 or r > phi.top:
        return set()
    return {labels_of(mask) for mask in face_masks(phi, r)}


def all_face_masks(phi: RankMatrix) -> list[int]:
    """Every face of every rank, including the empty face when it is maximal."""
    out = []
    for r in range(phi.top + 1):
        out.extend(face_masks(phi, r))
    return out


def is_face(phi: RankMatrix, J: Iterable[int] | int) -> bool:
    mask = mask_of(J)
    val = phi.values[mask]
    return all(phi.values[mask | (1 << i)] > val for i in range(phi.m) if not mask >> i & 1)


def rank_type(phi: RankMatrix) -> tuple[int, ...]:
    """Counts of r-faces for r = 1 .. top. The last entry is always 1."""
    return tuple(len(face_masks(phi, r)) for r in range(1, phi.top + 1))


def rank_type_label(phi: RankMatrix) -> str:
    """The rank type with its final count dropped; ``(∅)`` when nothing remains."""
    counts = rank_type(phi)[:-1]
    if not counts:
        return "(∅)"
    return "(" + ",".join(str(c) for c in counts) + ")"


def _check_same_m(psi: RankMatrix, phi: RankMatrix):
    if psi.m != phi.m:
        raise ShapeError(f"rank matrices on different index sets: m={psi.m} vs m={phi.m}")


def leq(psi: RankMatrix, phi: RankMatrix) -> bool:
    """Pointwise comparison on every subset."""
    _check_same_m(psi, phi)
    return all(a <= b for a, b in zip(psi.values, phi.values))


def _separates(phi: RankMatrix, block: int, part: int) -> bool:
    other = block ^ part
    vals = phi.values
    return all(vals[s] == vals[s & part] + vals[s & other] for s in submasks(block))


def _split_block(phi: RankMatrix, block: int) -> tuple[int, int] | None:
    low = block & -block
    rest = block ^ low
    # every bipartition, with the lowest point kept on the first side
    for extra in submasks(rest):
        part = low | extra
        if part == block:
            continue
        if _separates(phi, block, part):
            return part, block ^ part
    return None


def rho(phi: RankMatrix) -> Splitting:
    """Finest block decomposition of ``phi``, each block carrying its value."""
    pending = [full_mask(phi.m)]
    final = []
    while pending:
        block = pending.pop()
        found = _split_block(phi, block) if popcount(block) > 1 else None
        if found is None:
            final.append(block)
        else:
            pending.extend(found)
    return Splitting(phi.m, tuple((labels_of(b), phi.values[b]) for b in final))


def is_decomposable(phi: RankMatrix) -> bool:
    return len(rho(phi).blocks) > 1


def reduction(phi: RankMatrix, J: Iterable[int] | int) -> RankMatrix:
    """The degeneration of ``phi`` along the face ``J``."""
    j = mask_of(J)
    vals = phi.values
    for i in range(phi.m):
        bit = 1 << i
        if not j & bit and vals[j | bit] == vals[j]:
            raise NotAFaceError(
                f"{fmt_set(labels_of(j))} is not a face: {fmt_set(labels_of(j | bit))} has the same rank {vals[j]}",
                subset=sorted(labels_of(j)),
                larger=sorted(labels_of(j | bit)),
            )
    return RankMatrix(phi.m, tuple(vals[s | j] + vals[s & j] - vals[j] for s in range(1 << phi.m)))


def reductions(phi: RankMatrix) -> dict[int, RankMatrix]:
    """Reduction by every face, keyed by face mask."""
    return {f: reduction(phi, f) for f in all_face_masks(phi)}


def prec_generator(psi: RankMatrix, phi: RankMatrix) -> bool:
    """Same blocks, pointwise smaller, and some block rank strictly drops."""
    _check_same_m(psi, phi)
    if psi == phi or not leq(psi, phi):
        return False
    s_phi, s_psi = rho(phi), rho(psi)
    if [b for b, _ in s_phi.blocks] != [b for b, _ in s_psi.blocks]:
        return False
    return any(s < r for (_, r), (_, s) in zip(s_phi.blocks, s_psi.blocks))


def block_restriction_generator(psi: RankMatrix, phi: RankMatrix) -> bool:
    """Pointwise smaller and equal to ``phi`` on every subset of every block of rho(phi)."""
    _check_same_m(psi, phi)
    if not leq(psi, phi):
        return False
    return all(psi.agrees_on(phi, mask) for mask, _ in rho(phi).masks)


def is_reduction_of(psi: RankMatrix, phi: RankMatrix) -> bool:
    _check_same_m(psi, phi)
    return any(red == psi for red in reductions(phi).values())
