"""Named structures: cycles, paths, complete graphs, tournaments and blowups"""

from typing import Iterable, List, Optional, Sequence

import numpy as np

from src.config.app_config import AppConfig
from src.model.errors import PreconditionError
from src.model.structure import Structure
from src.util.graphs import edges, require_graph


def _positive(n: int, what: str, least: int = 1):
    if not isinstance(n, int) or n < least:
        raise PreconditionError(f"{what} must be an integer >= {least}, got {n!r}")


def cycle(n: int) -> Structure:
    """C_n on 0..n-1, edges i -- i+1 mod n"""
    _positive(n, "cycle length", 3)
    return Structure.graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Structure:
    """Path on n vertices"""
    _positive(n, "path order")
    return Structure.graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Structure:
    _positive(n, "complete graph order")
    return Structure.graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n: int) -> Structure:
    """E_n, n isolated vertices"""
    _positive(n, "empty graph order")
    return Structure.graph(n, [])


def star(leaves: int) -> Structure:
    """K_{1,leaves} with centre 0"""
    _positive(leaves, "leaf count", 0)
    return Structure.graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(parts: Sequence[Structure]) -> Structure:
    """Side by side copies, part i shifted past parts 0..i-1"""
    if not parts:
        raise PreconditionError("disjoint union of nothing")
    signature = parts[0].signature
    relations: List[List[tuple]] = [[] for _ in signature.arities]
    offset = 0
    for part in parts:
        if part.signature != signature:
            raise PreconditionError("disjoint union needs a common signature")
        for k, rel in enumerate(part.relations):
            relations[k].extend(tuple(x + offset for x in t) for t in rel)
        offset += part.domain
    return Structure.from_relations(signature, offset, relations)


def blowup(g: Structure, sizes: Sequence[int]) -> Structure:
    """Replace vertex x by an independent cloud of sizes[x] vertices.

    Clouds are numbered consecutively; two vertices are adjacent iff their
    clouds come from adjacent vertices of g.
    """
    require_graph(g)
    if len(sizes) != g.domain:
        raise PreconditionError(f"{len(sizes)} cloud sizes for {g.domain} vertices")
    for size in sizes:
        _positive(size, "cloud size")
    starts = np.concatenate(([0], np.cumsum(sizes)))
    clouds = [range(int(starts[x]), int(starts[x + 1])) for x in range(g.domain)]
    pairs = [(u, v) for x, y in edges(g) for u in clouds[x] for v in clouds[y]]
    return Structure.graph(int(starts[-1]), pairs)


def complete_multipartite(sizes: Sequence[int]) -> Structure:
    """Blowup of K_r with parts of the given sizes"""
    return blowup(complete(len(sizes)), sizes)


def is_tournament(s: Structure, vertices: Optional[Iterable[int]] = None) -> bool:
    """Exactly one of (x,y), (y,x) for each pair, no loops, within vertices"""
    if not s.signature.is_binary():
        return False
    points = sorted(range(s.domain) if vertices is None else vertices)
    inside = set(points)
    for x, y in s.relation(0):
        if x == y or x not in inside or y not in inside:
            return False
    for i, x in enumerate(points):
        for y in points[i + 1:]:
            if s.holds(0, (x, y)) == s.holds(0, (y, x)):
                return False
    return True


def transitive_tournament(n: int) -> Structure:
    """The strict linear order 0 < 1 < ... < n-1"""
    _positive(n, "tournament order")
    return Structure.binary(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def _orient(vertices: Sequence[int], seed: Optional[int]) -> List[tuple]:
    if seed is None:
        return [(x, y) for i, x in enumerate(vertices) for y in vertices[i + 1:]]
    rng = np.random.default_rng(seed)
    pairs = []
    for i, x in enumerate(vertices):
        for y in vertices[i + 1:]:
            pairs.append((x, y) if rng.random() < 0.5 else (y, x))
    return pairs


def random_tournament(n: int, seed: Optional[int] = None) -> Structure:
    """Each pair oriented by a fair coin of a seeded generator"""
    _positive(n, "tournament order")
    seed = AppConfig().DEFAULT_SEED if seed is None else seed
    return Structure.binary(n, _orient(list(range(n)), seed))


def reflexivized_tournament(
    n: int, loops: Iterable[int], seed: Optional[int] = None
) -> Structure:
    """A tournament on X minus R together with the loops on R.

    Transitive on X minus R (increasing order) without a seed, random with one.
    """
    _positive(n, "domain size")
    loops = sorted(set(loops))
    if any(not 0 <= r < n for r in loops):
        raise PreconditionError(f"loop vertices {loops} leave the domain [0, {n})")
    rest = [x for x in range(n) if x not in set(loops)]
    pairs = _orient(rest, seed) + [(r, r) for r in loops]
    return Structure.binary(n, pairs)

