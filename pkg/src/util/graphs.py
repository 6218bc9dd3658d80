"""Bridges between graph structures, networkx graphs and numpy matrices"""

from typing import List, Tuple

import networkx as nx
import numpy as np

from src.model.errors import PreconditionError
from src.model.structure import Structure, is_graph


def require_graph(s: Structure, what: str = "input"):
    if not is_graph(s):
        raise PreconditionError(
            f"{what} must be a graph (symmetric, irreflexive, binary)"
        )


def edges(s: Structure) -> List[Tuple[int, int]]:
    """Undirected edges x < y of a graph"""
    return [(x, y) for x, y in s.relation(0) if x < y]


def adjacency(s: Structure) -> np.ndarray:
    """Boolean adjacency matrix of the first (binary) relation"""
    matrix = np.zeros((s.domain, s.domain), dtype=bool)
    for x, y in s.relation(0):
        matrix[x, y] = True
    return matrix


def to_networkx(s: Structure) -> nx.Graph:
    require_graph(s)
    g = nx.Graph()
    g.add_nodes_from(range(s.domain))
    g.add_edges_from(edges(s))
    return g


def from_networkx(g: nx.Graph) -> Structure:
    """Graph structure on 0..n-1, nodes relabelled in sorted order"""
    index = {v: i for i, v in enumerate(sorted(g.nodes))}
    return Structure.graph(len(index), [(index[u], index[v]) for u, v in g.edges])


def has_clique(g: nx.Graph, size: int) -> bool:
    """Whether g contains a complete subgraph on size vertices"""
    if size <= 0:
        return True
    if size == 1:
        return g.number_of_nodes() > 0
    return any(len(c) >= size for c in nx.find_cliques(g))
