"""Fast checkers for concrete extremal characterizations.

Each checker is a pure function of its input and agrees with the generic
engine in src.model.extremal on the corresponding class specification.
"""

import itertools
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Tuple

import networkx as nx
import numpy as np

from src.config.app_config import AppConfig
from src.config.constant import Builtin, SearchMode
from src.model.class_spec import ClassSpec, member, subset_masks
from src.model.errors import CharacterizationError, PreconditionError
from src.model.extremal import is_minimal
from src.model.gallery import complete, empty_graph, is_tournament
from src.model.structure import (
    Signature,
    Structure,
    complement,
    diagonal_mask,
    encode,
    graph_complement,
    induced_substructure,
    popcount,
)
from src.util.graphs import (
    adjacency,
    from_networkx,
    has_clique,
    require_graph,
    to_networkx,
)


# K_n-free graphs


def is_knfree(g: Structure, n: int) -> bool:
    require_graph(g)
    return not has_clique(to_networkx(g), n)


def _require_knfree(g: Structure, n: int):
    if not isinstance(n, int) or n < 2:
        raise PreconditionError(f"clique size must be >= 2, got {n!r}")
    if not is_knfree(g, n):
        raise PreconditionError(f"graph contains K_{n}")


def _joinable_in_clique(
    nx_graph: nx.Graph, matrix: np.ndarray, x: int, y: int, n: int
) -> bool:
    """Whether x, y and n-2 common neighbours form K_n minus the edge xy"""
    common = np.flatnonzero(matrix[x] & matrix[y])
    return has_clique(nx_graph.subgraph(common.tolist()), n - 2)


def _maximal_knfree(g: Structure, n: int) -> bool:
    nx_graph = to_networkx(g)
    matrix = adjacency(g)
    for x, y in itertools.combinations(range(g.domain), 2):
        if not matrix[x, y] and not _joinable_in_clique(nx_graph, matrix, x, y, n):
            return False
    return True


def is_maximal_knfree(g: Structure, n: int) -> bool:
    """Every non-edge closes a copy of K_n.

    On fewer than n vertices this says g is complete.
    """
    require_graph(g)
    if not isinstance(n, int) or n < 3:
        raise PreconditionError(f"clique size must be >= 3, got {n!r}")
    _require_knfree(g, n)
    return _maximal_knfree(g, n)


def every_vertex_in_kn1(g: Structure, n: int) -> bool:
    """Every vertex lies in a copy of K_{n-1}"""
    if g.domain < n - 1:
        raise PreconditionError(f"need at least {n - 1} vertices, got {g.domain}")
    if not is_maximal_knfree(g, n):
        raise PreconditionError(f"graph is not maximal K_{n}-free")
    nx_graph = to_networkx(g)
    return all(
        has_clique(nx_graph.subgraph(list(nx_graph[x])), n - 2) for x in range(g.domain)
    )


def blowup_certifies(g: Structure, n: int) -> bool:
    """Whether blowups of g are claimed maximal K_n-free.

    Holds for maximal K_n-free g on at least n-1 vertices; smaller inputs are
    refused rather than guessed.
    """
    if g.domain < n - 1 or not is_knfree(g, n):
        return False
    return is_maximal_knfree(g, n)


def knfree_class(n: int) -> ClassSpec:
    """Graphs without K_n"""
    return ClassSpec.create(
        builtins=[Builtin.IRREFLEXIVE, Builtin.SYMMETRIC], forbidden=[complete(n)]
    )


def enfree_class(n: int) -> ClassSpec:
    """Graphs without an independent n-set"""
    return ClassSpec.create(
        builtins=[Builtin.IRREFLEXIVE, Builtin.SYMMETRIC], forbidden=[empty_graph(n)]
    )


def knfree_duality_sides(g: Structure, n: int) -> Tuple[bool, bool]:
    """Maximality of g among K_n-free graphs.

    Paired with minimality of its complement among E_n-free graphs.
    """
    require_graph(g)
    left = is_knfree(g, n) and _maximal_knfree(g, n)
    dual = graph_complement(g)
    spec = enfree_class(n)
    right = member(dual, spec) and is_minimal(dual, spec, SearchMode.EXACT).certified
    return left, right


def knfree_duality(g: Structure, n: int) -> bool:
    """Whether both sides of the K_n / E_n complement duality agree on g"""
    left, right = knfree_duality_sides(g, n)
    return left == right


@dataclass(frozen=True)
class HensonDefect:
    """A finite configuration with no witness vertex outside H"""

    H: Tuple[int, ...]
    K: Tuple[int, ...]

    def __post_init__(self):
        if not set(self.K) <= set(self.H):
            raise ValueError("K must be a subset of H")

    def to_dict(self) -> Dict[str, List[int]]:
        return {"H": list(self.H), "K": list(self.K)}


def henson_defects(
    g: Structure, n: int, cap: Optional[int] = None
) -> List[HensonDefect]:
    """Pairs (H, K), |H| <= cap, with no vertex outside H joined to all of K
    and to none of H - K.

    H runs by size then lexicographically, and K likewise inside H. Only
    K_{n-1}-free sets K count.
    """
    require_graph(g)
    _require_knfree(g, n)
    cap = AppConfig().HENSON_CAP if cap is None else cap
    nx_graph = to_networkx(g)
    matrix = adjacency(g)
    defects = []
    for size in range(min(cap, g.domain) + 1):
        for H in itertools.combinations(range(g.domain), size):
            outside = np.ones(g.domain, dtype=bool)
            outside[list(H)] = False
            for k_size in range(size + 1):
                for K in itertools.combinations(H, k_size):
                    if has_clique(nx_graph.subgraph(K), n - 1):
                        continue
                    witnesses = outside.copy()
                    for v in H:
                        witnesses &= matrix[v] if v in K else ~matrix[v]
                    if not witnesses.any():
                        defects.append(HensonDefect(H, K))
    return defects


# Omitting the empty / full m-point structure


def _require_single_symbol(s: Structure):
    if len(s.signature) != 1:
        raise PreconditionError("omitting checks need a single relation symbol")


def _witnessed(mask: int, s: Structure, m: int) -> int:
    """Tuples x of mask with an m-set K on which mask is exactly {x}"""
    witnessed = 0
    for box in subset_masks(s.domain, m, s.arities[0]):
        inside = mask & box
        if inside == 0:
            raise PreconditionError(
                f"structure does not omit the empty structure on {m} points"
            )
        if popcount(inside) == 1:
            witnessed |= inside
    return witnessed


def min_omit_empty_check(s: Structure, m: int) -> bool:
    """Minimal among structures with no m-set carrying no tuple"""
    _require_single_symbol(s)
    _positive_m(m)
    mask = s.masks[0]
    return _witnessed(mask, s, m) == mask


def max_omit_full_check(s: Structure, m: int) -> bool:
    """Maximal among structures with no m-set carrying every tuple"""
    return min_omit_empty_check(complement(s), m)


def omit_class(signature: Signature, m: int, full: bool = False) -> ClassSpec:
    pattern = Structure.full(signature, m) if full else Structure.empty(signature, m)
    return ClassSpec.create(signature=signature, forbidden=[pattern])


def _positive_m(m: int):
    if not isinstance(m, int) or m < 1:
        raise PreconditionError(f"subset size must be >= 1, got {m!r}")


@dataclass(frozen=True)
class MinBinaryDecomposition:
    """A minimal binary structure omitting the empty m-point structure, taken apart"""

    domain: int
    m: int
    loops: Tuple[int, ...]
    orientation: Structure

    def reconstruct(self) -> Structure:
        mask = self.orientation.masks[0]
        for r in self.loops:
            mask |= 1 << encode((r, r), self.domain)
        return self.orientation.with_masks([mask])

    def to_dict(self) -> Dict[str, Any]:
        return {
            "m": self.m,
            "loops": list(self.loops),
            "orientation": self.orientation.to_dict(),
        }


def decompose_min_binary(s: Structure, m: int) -> MinBinaryDecomposition:
    """Split s into loops on R and an orientation on the rest.

    The orientation must be antisymmetric, live on X minus R, and its
    symmetrization must be the complement of a maximal K_m-free graph.
    """
    if not s.signature.is_binary():
        raise PreconditionError("decomposition needs a single binary relation")
    if not isinstance(m, int) or not 2 <= m <= s.domain:
        raise PreconditionError(f"need 2 <= m <= {s.domain}, got {m!r}")
    if not min_omit_empty_check(s, m):
        raise PreconditionError(
            f"structure is not minimal among those omitting the empty {m}-set"
        )
    n = s.domain
    loops = tuple(x for x in range(n) if s.holds(0, (x, x)))
    rest = [x for x in range(n) if x not in set(loops)]
    orientation = s.with_masks([s.masks[0] & ~diagonal_mask(n, 2)])
    for x, y in orientation.relation(0):
        if x in loops or y in loops:
            raise CharacterizationError(f"pair ({x},{y}) touches a loop vertex")
        if orientation.holds(0, (y, x)):
            raise CharacterizationError(f"pairs ({x},{y}) and ({y},{x}) both present")
    if len(rest) < m - 1:
        raise CharacterizationError(
            f"only {len(rest)} loop-free vertices, need {m - 1}"
        )
    symmetric = orientation.with_masks([_symmetrize(orientation, n)])
    shape = graph_complement(induced_substructure(symmetric, rest))
    if not is_knfree(shape, m) or not _maximal_knfree(shape, m):
        raise CharacterizationError(
            f"complement of the symmetrization is not maximal K_{m}-free"
        )
    decomposition = MinBinaryDecomposition(n, m, loops, orientation)
    if decomposition.reconstruct() != s:
        raise CharacterizationError("reconstruction differs from the input")
    return decomposition


def _symmetrize(s: Structure, n: int) -> int:
    mask = s.masks[0]
    for x, y in s.relation(0):
        mask |= 1 << encode((y, x), n)
    return mask


def is_reflexivized_tournament(s: Structure) -> bool:
    """Loops on some R strictly inside X and a tournament on X minus R"""
    if not s.signature.is_binary():
        return False
    loops = [x for x in range(s.domain) if s.holds(0, (x, x))]
    if len(loops) == s.domain:
        return False
    rest = [x for x in range(s.domain) if x not in set(loops)]
    stripped = s.with_masks([s.masks[0] & ~diagonal_mask(s.domain, 2)])
    return is_tournament(stripped, rest)


# Degree and connectivity


@dataclass(frozen=True)
class Deg2Classification:
    """Maximality of a graph of degree <= 2, with its cycle / tail shape"""

    kind: str
    cycles: Tuple[int, ...] = ()
    tail: Optional[str] = None
    finite_only: bool = True

    MAXIMAL = "maximal"
    NOT_MAXIMAL = "not_maximal"
    TAILS = ("empty", "K1", "K2")

    @property
    def maximal(self) -> bool:
        return self.kind == self.MAXIMAL

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"kind": self.kind}
        if self.maximal:
            data["decomposition"] = {"cycles": list(self.cycles), "tail": self.tail}
            data["finite_only"] = self.finite_only
        return data


def classify_max_deg2(g: Structure) -> Deg2Classification:
    """Maximal iff every two vertices of degree < 2 are adjacent.

    A maximal graph is then a union of cycles plus one tail: nothing, an
    isolated vertex or a single edge.
    """
    require_graph(g)
    nx_graph = to_networkx(g)
    degrees = dict(nx_graph.degree)
    if any(d > 2 for d in degrees.values()):
        raise PreconditionError("graph has a vertex of degree > 2")
    deficient = sorted(v for v, d in degrees.items() if d < 2)
    for x, y in itertools.combinations(deficient, 2):
        if not nx_graph.has_edge(x, y):
            return Deg2Classification(Deg2Classification.NOT_MAXIMAL)
    cycles = []
    for component in nx.connected_components(nx_graph):
        if all(degrees[v] == 2 for v in component):
            cycles.append(len(component))
    tail = Deg2Classification.TAILS[len(deficient)]
    return Deg2Classification(Deg2Classification.MAXIMAL, tuple(sorted(cycles)), tail)


def _require_connected(g: Structure) -> nx.Graph:
    nx_graph = to_networkx(g)
    if not nx.is_connected(nx_graph):
        raise PreconditionError("graph is not connected")
    return nx_graph


def spanning_tree(g: Structure) -> Structure:
    """A spanning tree of a connected graph"""
    return from_networkx(nx.minimum_spanning_tree(_require_connected(g)))


def is_minimal_connected(g: Structure) -> bool:
    """Minimal connected graphs are exactly the trees"""
    return nx.is_tree(_require_connected(g))


def local_bounds_member(
    g: Structure, sizes: Iterable[int], low: int, high: int
) -> bool:
    """Every m-subset, m in sizes, spans between low and high edges"""
    require_graph(g)
    sizes = sorted(set(sizes))
    if low < 0 or low > high or any(m < 1 for m in sizes):
        raise PreconditionError(
            f"malformed bounds [{low}, {high}] for subset sizes {sizes}"
        )
    matrix = adjacency(g).astype(np.int64)
    for m in sizes:
        for subset in itertools.combinations(range(g.domain), m):
            count = int(matrix[np.ix_(subset, subset)].sum()) // 2
            if not low <= count <= high:
                return False
    return True

