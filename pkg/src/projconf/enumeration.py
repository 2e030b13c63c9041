"""Enumeration of all rank matrices of five points in P^3, and the three orders on them."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NotInImageError, ParameterError
from .families import catalogue, default_param, family_of, in_image, member_representative, type_label
from .linalg import ProjConfig
from .rankmatrix import (
    RankMatrix,
    all_face_masks,
    block_restriction_generator,
    leq,
    reduction,
    rho,
)

# rank-type labels in reference order, with the reference count of each
TYPE_LABEL_ORDER = (
    "(∅)", "(2)a", "(2)b", "(3)a", "(3)b", "(4)", "(5)",
    "(3,3)a", "(3,3)b", "(4,4)a", "(4,4)b", "(5,5)", "(4,6)", "(5,6)",
    "(5,8)", "(5,10)", "(4,6,4)", "(5,8,5)", "(5,10,7)", "(5,10,10)",
)
REFERENCE_MULTIPLICITIES = {
    "(∅)": 1, "(2)a": 5, "(2)b": 10, "(3)a": 15, "(3)b": 10, "(4)": 5, "(5)": 1,
    "(3,3)a": 15, "(3,3)b": 10, "(4,4)a": 10, "(4,4)b": 30, "(5,5)": 5, "(4,6)": 10,
    "(5,6)": 15, "(5,8)": 10, "(5,10)": 1, "(4,6,4)": 10, "(5,8,5)": 10, "(5,10,7)": 5,
    "(5,10,10)": 1,
}

ORDER_KINDS = ("leq", "preceq", "prec")


@lru_cache(maxsize=None)
def enumerate_image() -> tuple[RankMatrix, ...]:
    """Every realizable rank matrix exactly once, grouped by type label in reference order."""
    rank = {label: k for k, label in enumerate(TYPE_LABEL_ORDER)}
    entries = sorted(catalogue(), key=lambda e: (rank[e.type_label], e.rank_matrix.values))
    return tuple(e.rank_matrix for e in entries)


def verify_realizability(phi: RankMatrix) -> ProjConfig:
    """A rational configuration with rank matrix ``phi``, using the default generic parameter."""
    tag = family_of(phi)
    return member_representative(tag, default_param(tag.name))


def catalogue_json() -> list[dict]:
    out = []
    for phi in enumerate_image():
        tag = family_of(phi)
        out.append(
            {
                "rank_matrix": phi.to_json(),
                "type_label": type_label(phi),
                "splitting": rho(phi).to_json(),
                "family": tag.to_json(),
            }
        )
    return out


@dataclass(frozen=True)
class PosetGraph:
    """An order on the enumerated rank matrices.

    ``below[k]`` is a bitset of the nodes strictly below node ``k``.
    """

    kind: str
    nodes: tuple[RankMatrix, ...]
    below: tuple[int, ...]

    def index(self, phi: RankMatrix) -> int:
        try:
            return _node_index()[phi.values]
        except KeyError:
            raise NotInImageError("rank matrix is not in the enumerated image", values=list(phi.values)) from None

    def holds(self, psi: RankMatrix, phi: RankMatrix) -> bool:
        """``psi`` below or equal to ``phi``."""
        i, j = self.index(psi), self.index(phi)
        return i == j or bool(self.below[j] >> i & 1)

    def strictly(self, psi: RankMatrix, phi: RankMatrix) -> bool:
        i, j = self.index(psi), self.index(phi)
        return bool(self.below[j] >> i & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All pairs (lower, upper) with lower strictly below upper."""
        return [(i, j) for j in range(len(self.nodes)) for i in _bits(self.below[j])]

    def hasse_edges(self) -> list[tuple[int, int]]:
        """Covering pairs: the transitive reduction."""
        out = []
        for j, down in enumerate(self.below):
            covered = 0
            for i in _bits(down):
                covered |= self.below[i]
            for i in _bits(down & ~covered):
                out.append((i, j))
        return out


def _bits(x: int):
    k = 0
    while x:
        if x & 1:
            yield k
        x >>= 1
        k += 1


@lru_cache(maxsize=None)
def _node_index() -> dict[tuple[int, ...], int]:
    return {phi.values: k for k, phi in enumerate(enumerate_image())}


def _close(generators: list[int]) -> tuple[int, ...]:
    """Transitive closure of a 'strictly below' relation given as bitsets."""
    reach = list(generators)
    n = len(reach)
    for k in range(n):
        bit = 1 << k
        rk = reach[k]
        for i in range(n):
            if reach[i] & bit:
                reach[i] |= rk
    for i in range(n):
        reach[i] &= ~(1 << i)
    return tuple(reach)


@lru_cache(maxsize=None)
def _generators() -> dict[str, list[int]]:
    nodes = enumerate_image()
    idx = _node_index()
    n = len(nodes)
    splits = [rho(phi) for phi in nodes]
    blocks = [tuple(b for b, _ in s.blocks) for s in splits]
    le = [[leq(nodes[i], nodes[j]) for j in range(n)] for i in range(n)]
    gen_leq = [0] * n
    gen_prec = [0] * n
    gen_preceq = [0] * n
    for j in range(n):
        for i in range(n):
            if i == j or not le[i][j]:
                continue
            gen_leq[j] |= 1 << i
            if blocks[i] == blocks[j] and any(s < r for (_, r), (_, s) in zip(splits[j].blocks, splits[i].blocks)):
                gen_prec[j] |= 1 << i
            if block_restriction_generator(nodes[i], nodes[j]):
                gen_preceq[j] |= 1 << i
        for face in all_face_masks(nodes[j]):
            red = reduction(nodes[j], face)
            k = idx.get(red.values)
            if k is None:
                raise NotInImageError("a reduction left the enumerated image", values=list(red.values))
            if k != j:
                gen_preceq[j] |= 1 << k
        gen_preceq[j] |= gen_prec[j]
    return {"leq": gen_leq, "prec": gen_prec, "preceq": gen_preceq}


@lru_cache(maxsize=None)
def build_poset(kind: str) -> PosetGraph:
    if kind not in ORDER_KINDS:
        raise ParameterError(f"order kind must be one of {ORDER_KINDS}, got {kind!r}")
    gens = _generators()[kind]
    below = tuple(gens) if kind == "leq" else _close(gens)
    return PosetGraph(kind, enumerate_image(), below)


def _require(phi: RankMatrix):
    if not in_image(phi):
        raise NotInImageError("rank matrix is not in the enumerated image", values=list(phi.values))


def preceq(psi: RankMatrix, phi: RankMatrix) -> bool:
    """Reflexive-transitive closure of reductions, block-preserving degenerations and prec."""
    _require(psi)
    _require(phi)
    return build_poset("preceq").holds(psi, phi)


def prec(psi: RankMatrix, phi: RankMatrix) -> bool:
    """Transitive closure of rank drops on a fixed block partition. Irreflexive."""
    _require(psi)
    _require(phi)
    return build_poset("prec").strictly(psi, phi)


def node_label(phi: RankMatrix) -> str:
    return f"{type_label(phi)} {family_of(phi).label()}"


def export_dot(g: PosetGraph) -> str:
    """Hasse diagram as a DOT digraph, edges pointing from the larger node down."""
    lines = [f"digraph {g.kind} {{", "  rankdir=TB;", "  node [shape=box, fontsize=10];"]
    for k, phi in enumerate(g.nodes):
        lines.append(f'  n{k} [label="{node_label(phi)}"];')
    for lo, hi in sorted(g.hasse_edges(), key=lambda e: (e[1], e[0])):
        lines.append(f"  n{hi} -> n{lo};")
    lines.append("}")
    return "\n".join(lines) + "\n"
