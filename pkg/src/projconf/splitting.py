"""Indecomposable splittings of configurations and their block-diagonal representatives."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import ParameterError, PreconditionError
from .linalg import ProjConfig, normalize_vector
from .rankmatrix import RankMatrix, compute_rank_matrix, rho
from .subsets import Splitting, mask_of, popcount

__all__ = [
    "Splitting",
    "compute_splitting",
    "image_membership",
    "pprime_membership",
    "rho_inverse",
    "representative",
    "param_arity",
    "default_params",
]


def compute_splitting(v: ProjConfig) -> Splitting:
    """Blocks of points spanning independent subspaces, as fine as possible."""
    return rho(compute_rank_matrix(v))


def _block_ok(size: int, r: int) -> bool:
    return r == 1 or 2 <= r <= size - 1


def image_membership(s: Splitting, n: int) -> bool:
    """Whether some configuration in ``(P^{n-1})^m`` has splitting ``s``."""
    return all(_block_ok(len(b), r) for b, r in s.blocks) and s.total_rank <= n


def pprime_membership(s: Splitting, n: int) -> bool:
    """Realizable splittings whose fibre is a single orbit: every block has rank 1 or size - 1."""
    if not image_membership(s, n):
        return False
    return all(r == 1 or r == len(b) - 1 for b, r in s.blocks)


def rho_inverse(s: Splitting, n: int | None = None) -> RankMatrix:
    """The unique rank matrix over a single-orbit splitting."""
    n = s.total_rank if n is None else n
    if not pprime_membership(s, n):
        raise PreconditionError(
            f"splitting {s} (type {s.type_str()}) has a block with 2 <= rank < size - 1 or is not realizable in dimension {n}",
            splitting=s.to_json(),
        )
    blocks = s.masks
    values = tuple(sum(min(popcount(mask & b), r) for b, r in blocks) for mask in range(1 << s.m))
    return RankMatrix(s.m, values)


def param_arity(size: int, r: int) -> int:
    """Number of free points of ``P^{r-1}`` a block of this size and rank takes."""
    if r == 1:
        return 0
    return max(size - 1 - r, 0)


def default_params(s: Splitting) -> list[list[tuple[int, ...]]]:
    """Generic parameters: the t-th point of a rank-r block is ((1^(t+1), 2^(t+1), ..., r^(t+1)).

    Together with the basis and the all-ones vector these are in general
    position, since every maximal minor is a generalized Vandermonde
    determinant on distinct positive nodes.
    """
    out = []
    for b, r in s.blocks:
        out.append([tuple((j + 1) ** (t + 1) for j in range(r)) for t in range(param_arity(len(b), r))])
    return out


def representative(
    s: Splitting,
    params: Sequence[Sequence[Sequence]] | None = None,
    n: int = 4,
) -> ProjConfig:
    """Block-diagonal configuration with splitting ``s``.

    Block k uses coordinates R+1 .. R+r_k, where R is the total rank of the
    earlier blocks. Its columns, in increasing label order, are the standard
    basis vectors, then their sum, then the supplied parameter points.
    ``params`` lists one sequence of points per block, in block order.
    """
    if not image_membership(s, n):
        raise PreconditionError(f"splitting {s} is not realizable in dimension {n}", splitting=s.to_json())
    if params is None:
        params = [[] for _ in s.blocks]
    if len(params) != len(s.blocks):
        raise ParameterError(f"expected parameters for {len(s.blocks)} blocks, got {len(params)}")
    columns: dict[int, tuple[Fraction, ...]] = {}
    offset = 0
    for (labels, r), block_params in zip(s.blocks, params):
        block_params = list(block_params or [])
        need = param_arity(len(labels), r)
        if len(block_params) != need:
            raise ParameterError(
                f"block {sorted(labels)} of rank {r} takes {need} parameter points, got {len(block_params)}",
                block=sorted(labels),
            )
        local: list[tuple[Fraction, ...]] = []
        for j in range(r):
            local.append(tuple(Fraction(int(k == j)) for k in range(r)))
        if len(labels) > r:
            local.append(tuple(Fraction(1) for _ in range(r)))
        for p in block_params:
            if len(p) != r:
                raise ParameterError(f"parameter {list(p)} should have {r} homogeneous coordinates")
            local.append(normalize_vector(p))
        while len(local) < len(labels):
            local.append(local[0])
        for label, vec in zip(sorted(labels), local):
            col = [Fraction(0)] * n
            col[offset:offset + r] = vec
            columns[label] = tuple(col)
        offset += r
    return ProjConfig(tuple(columns[i] for i in range(1, s.m + 1)))


def blocks_independent(v: ProjConfig, s: Splitting) -> bool:
    """Block spans sum directly to the span of all points."""
    phi = compute_rank_matrix(v)
    return sum(phi(mask) for mask, _ in s.masks) == phi(mask_of(range(1, v.m + 1)))
