"""The condensation pre-order on all interpretations of a small domain"""

import itertools
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Set, Tuple

import networkx as nx
import numpy as np

from src.config.app_config import AppConfig
from src.model.errors import (
    BudgetExceededError,
    CharacterizationError,
    SampledCensusError,
)
from src.model.morphism import condenses_to, is_antichain, is_reversible, iso_class
from src.model.structure import Signature, Structure, complement, full_mask, iter_bits
from src.util.logger import WorkbenchLogger
from src.util.workers import run_partitioned

Masks = Tuple[int, ...]


@dataclass
class CondOrderCensus:
    """Isomorphism classes of one domain with the condensation matrix between them.

    matrix[i, j] holds iff representatives[i] condenses to representatives[j].
    Orbits are kept as enumerated so the verifiers can work extensionally.
    """

    domain: int
    signature: Signature
    representatives: List[Structure]
    orbits: List[List[Structure]]
    matrix: np.ndarray
    sampled: bool = False
    seed: Optional[int] = None
    classes: List[List[int]] = field(default_factory=list)

    def __post_init__(self):
        if not self.classes:
            self.classes = equivalence_classes(self.matrix)

    @property
    def orbit_sizes(self) -> List[int]:
        return [len(orbit) for orbit in self.orbits]

    def index(self) -> Dict[Masks, int]:
        """Mask tuple of every enumerated structure to its class row"""
        return {s.masks: i for i, orbit in enumerate(self.orbits) for s in orbit}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "domain": self.domain,
            "signature": self.signature.to_list(),
            "sampled": self.sampled,
            "seed": self.seed,
            "representatives": [s.to_dict() for s in self.representatives],
            "orbit_sizes": self.orbit_sizes,
            "matrix": self.matrix.astype(int).tolist(),
            "classes": self.classes,
        }


def equivalence_classes(matrix: np.ndarray) -> List[List[int]]:
    """Rows grouped by mutual condensation, each group sorted, groups by first row"""
    mutual = matrix & matrix.T
    assigned: Set[int] = set()
    classes = []
    for i in range(len(matrix)):
        if i in assigned:
            continue
        group = [j for j in np.flatnonzero(mutual[i]).tolist() if j not in assigned]
        group = sorted(set(group) | {i})
        assigned.update(group)
        classes.append(group)
    return classes


def _class_key(s: Structure) -> Tuple[int, Tuple[Tuple[int, ...], ...]]:
    return s.tuple_count(), s.sort_key()


def _orbits_exhaustive(n: int, signature: Signature) -> List[List[Structure]]:
    seen: Set[Masks] = set()
    orbits = []
    ranges = [range(full_mask(n, a) + 1) for a in signature.arities]
    for masks in itertools.product(*ranges):
        if masks in seen:
            continue
        orbit = iso_class(Structure(signature, n, masks))
        seen.update(s.masks for s in orbit)
        orbits.append(orbit)
    return orbits


def _orbits_sampled(
    n: int, signature: Signature, rng: np.random.Generator, size: int
) -> List[List[Structure]]:
    samples = [Structure.empty(signature, n), Structure.full(signature, n)]
    widths = [n**a for a in signature.arities]
    for _ in range(size):
        bits = [rng.integers(0, 2, size=w) for w in widths]
        masks = tuple(sum(1 << int(i) for i in np.flatnonzero(b)) for b in bits)
        samples.append(Structure(signature, n, masks))
    seen: Set[Masks] = set()
    orbits = []
    for s in samples:
        if s.masks in seen:
            continue
        orbit = iso_class(s)
        seen.update(t.masks for t in orbit)
        orbits.append(orbit)
    return orbits


def _counts(s: Structure) -> Tuple[int, ...]:
    return tuple(bin(mask).count("1") for mask in s.masks)


def _matrix_row(job: Tuple[List[Structure], int]) -> List[bool]:
    representatives, i = job
    source = representatives[i]
    size = _counts(source)
    row = []
    for target in representatives:
        fits = all(a <= b for a, b in zip(size, _counts(target)))
        row.append(fits and condenses_to(source, target))
    return row


def _spot_check(census: CondOrderCensus, rng: np.random.Generator, checks: int):
    """Representative independence on random members of random class pairs"""
    k = len(census.representatives)
    for i in range(k):
        for _ in range(checks):
            j = int(rng.integers(k))
            a = census.orbits[i][int(rng.integers(len(census.orbits[i])))]
            b = census.orbits[j][int(rng.integers(len(census.orbits[j])))]
            if condenses_to(a, b) != bool(census.matrix[i, j]):
                raise CharacterizationError(
                    f"condensation from {a} to {b} depends on representatives"
                )


def cond_census(
    n: int,
    signature: Optional[Signature] = None,
    workers: Optional[int] = 1,
    seed: Optional[int] = None,
    progress: bool = False,
) -> CondOrderCensus:
    """Condensation matrix over the isomorphism classes on n points.

    Exhaustive up to CONDORDER_EXHAUSTIVE_MAX points, sampled with a fixed
    seed up to CONDORDER_SAMPLED_MAX, refused beyond.
    """
    config = AppConfig()
    logger = WorkbenchLogger()
    signature = signature or Signature.binary()
    seed = config.DEFAULT_SEED if seed is None else seed
    rng = np.random.default_rng(seed)
    interpretations = 2 ** sum(n**a for a in signature.arities)
    if n <= config.CONDORDER_EXHAUSTIVE_MAX and interpretations <= config.CENSUS_BUDGET:
        orbits = _orbits_exhaustive(n, signature)
        sampled = False
    elif n <= config.CONDORDER_SAMPLED_MAX:
        logger.info(
            f"Sampling {config.CONDORDER_SAMPLE_SIZE}"
            f" of {interpretations} interpretations"
        )
        orbits = _orbits_sampled(n, signature, rng, config.CONDORDER_SAMPLE_SIZE)
        sampled = True
    else:
        raise BudgetExceededError(
            f"condensation census on {n} points exceeds"
            f" the limit of {config.CONDORDER_SAMPLED_MAX}"
        )
    orbits.sort(key=lambda orbit: _class_key(orbit[0]))
    representatives = [orbit[0] for orbit in orbits]
    jobs = [(representatives, i) for i in range(len(representatives))]
    rows = run_partitioned(
        _matrix_row, jobs, workers, progress, desc=f"condorder n={n}"
    )
    size = len(representatives)
    matrix = np.array(rows, dtype=bool).reshape(size, size)
    census = CondOrderCensus(
        n,
        signature,
        representatives,
        orbits,
        matrix,
        sampled,
        seed if sampled else None,
    )
    if not sampled:
        _spot_check(census, rng, config.CONDORDER_SPOT_CHECKS)
    logger.info(
        f"Condensation census on {n} points: {len(representatives)} classes, "
        f"{len(census.classes)} condensation classes"
    )
    return census


def _require_complete(census: CondOrderCensus):
    if census.sampled:
        raise SampledCensusError("verification needs a complete census")


def _convex_hull(orbit: List[Structure]) -> Set[Masks]:
    """Everything between two comparable members of orbit"""
    hull: Set[Masks] = set()
    for low in orbit:
        for high in orbit:
            if any(a & ~b for a, b in zip(low.masks, high.masks)):
                continue
            gaps = [
                (k, bit)
                for k, (a, b) in enumerate(zip(low.masks, high.masks))
                for bit in iter_bits(a ^ b)
            ]
            for r in range(len(gaps) + 1):
                for chosen in itertools.combinations(gaps, r):
                    masks = list(low.masks)
                    for k, bit in chosen:
                        masks[k] |= 1 << bit
                    hull.add(tuple(masks))
    return hull


def verify_convexity(census: CondOrderCensus) -> bool:
    """Each condensation class equals the convex hull of its isomorphism class.

    Both sides depend only on the isomorphism class, so one check per class
    covers every interpretation in it. On finite domains the condensation
    class is also asserted to be the isomorphism class itself.
    """
    _require_complete(census)
    class_of = {i: group for group in census.classes for i in group}
    for i, orbit in enumerate(census.orbits):
        cond_class = {s.masks for j in class_of[i] for s in census.orbits[j]}
        if cond_class != _convex_hull(orbit):
            return False
        if cond_class != {s.masks for s in orbit}:
            return False
    return True


def verify_antichain(census: CondOrderCensus) -> bool:
    """Each isomorphism class is an inclusion antichain.

    Holds exactly when its members are reversible.
    """
    _require_complete(census)
    for orbit in census.orbits:
        antichain = is_antichain(orbit)
        reversible = all(is_reversible(s) for s in orbit)
        if antichain != reversible:
            return False
    return True


def complement_antitone(census: CondOrderCensus) -> bool:
    """rho condenses to sigma iff the complement of sigma condenses to that of rho"""
    index = census.index()
    dual = [index.get(complement(s).masks) for s in census.representatives]
    for i, j in itertools.product(range(len(dual)), repeat=2):
        if dual[i] is None or dual[j] is None:
            continue
        if census.matrix[i, j] != census.matrix[dual[j], dual[i]]:
            return False
    return True


def respects_inclusion(census: CondOrderCensus) -> bool:
    """Inclusion between enumerated structures implies condensation of their classes"""
    index = census.index()
    members = [s for orbit in census.orbits for s in orbit]
    for a in members:
        for b in members:
            if all(x & ~y == 0 for x, y in zip(a.masks, b.masks)):
                if not census.matrix[index[a.masks], index[b.masks]]:
                    return False
    return True


def is_preorder(census: CondOrderCensus) -> bool:
    """Reflexive and transitive on the matrix"""
    m = census.matrix
    if not m.diagonal().all():
        return False
    composed = (m.astype(np.int64) @ m.astype(np.int64)) > 0
    return not (composed & ~m).any()


def quotient(census: CondOrderCensus) -> nx.DiGraph:
    """Order between condensation classes, one node per class"""
    order = nx.DiGraph()
    order.add_nodes_from(range(len(census.classes)))
    for a, ga in enumerate(census.classes):
        for b, gb in enumerate(census.classes):
            if a != b and census.matrix[ga[0], gb[0]]:
                order.add_edge(a, b)
    return order


def is_partial_order_quotient(census: CondOrderCensus) -> bool:
    """Antisymmetric once mutually condensing classes are merged"""
    return nx.is_directed_acyclic_graph(quotient(census))


def hasse_edges(census: CondOrderCensus) -> List[Tuple[int, int]]:
    """Cover relation between condensation classes"""
    reduction = nx.transitive_reduction(quotient(census))
    return sorted(reduction.edges)


def to_dot(census: CondOrderCensus) -> str:
    lines = ["digraph condorder {", "  rankdir=BT;"]
    for c, group in enumerate(census.classes):
        rep = census.representatives[group[0]]
        size = sum(len(census.orbits[i]) for i in group)
        lines.append(f'  c{c} [label="{rep} ({size})"];')
    for a, b in hasse_edges(census):
        lines.append(f"  c{a} -> c{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
