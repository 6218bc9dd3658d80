"""Enumerate the members of a class on a fixed domain"""

import itertools
import time
from typing import List, Optional, Sequence, Set, Tuple

from src.config.app_config import AppConfig
from src.config.constant import CensusWhat, Guarantee, SearchMode
from src.model.class_spec import ClassSpec, constraints_of, space_for
from src.model.errors import BudgetExceededError
from src.model.extremal import ExtremeReport, is_maximal, is_minimal
from src.model.morphism import iso_class
from src.model.structure import Structure
from src.util.logger import WorkbenchLogger
from src.util.workers import run_partitioned

PREFIX_DEPTH = 4

Masks = Tuple[int, ...]


class CensusSearch:
    """Depth-first walk over the atoms of an interpretation space.

    A node fixes atoms 0..i-1. Its lower bound holds the chosen atoms, its
    upper bound adds every atom not yet decided. A downward-closed constraint
    failing on the lower bound, or an upward-closed one failing on the upper
    bound, kills the whole subtree.
    """

    def __init__(self, spec: ClassSpec, n: int, budget: int):
        self.spec = spec
        self.n = n
        self.space = space_for(spec, n)
        self.constraints = constraints_of(spec)
        self.down = [c for c in self.constraints if c.closure.down]
        self.up = [c for c in self.constraints if c.closure.up]
        self.budget = budget
        self.visited = 0
        self.found: List[Masks] = []

    def _structure(self, masks: Sequence[int]) -> Structure:
        return Structure(self.spec.signature, self.n, tuple(masks))

    def _lower_ok(self, lower: Sequence[int]) -> bool:
        s = self._structure(lower)
        return all(c.holds(s) for c in self.down)

    def _upper_ok(self, upper: Sequence[int]) -> bool:
        s = self._structure(upper)
        return all(c.holds(s) for c in self.up)

    def run(self, prefix: Sequence[bool]) -> Tuple[List[Masks], int]:
        lower = list(self.space.forced)
        upper = list(self.space.forced)
        for k, atom in self.space.atoms:
            upper[k] |= atom
        for i, take in enumerate(prefix):
            k, atom = self.space.atoms[i]
            if take:
                lower[k] |= atom
            else:
                upper[k] &= ~atom
        if self._lower_ok(lower) and self._upper_ok(upper):
            self._descend(len(prefix), lower, upper)
        return self.found, self.visited

    def _descend(self, i: int, lower: List[int], upper: List[int]):
        self.visited += 1
        if self.visited > self.budget:
            raise BudgetExceededError(
                f"census on {self.n} points exceeded {self.budget} nodes"
            )
        if i == len(self.space.atoms):
            s = self._structure(lower)
            if all(c.holds(s) for c in self.constraints):
                self.found.append(s.masks)
            return
        k, atom = self.space.atoms[i]
        without = list(upper)
        without[k] &= ~atom
        if self._upper_ok(without):
            self._descend(i + 1, lower, without)
        with_atom = list(lower)
        with_atom[k] |= atom
        if self._lower_ok(with_atom):
            self._descend(i + 1, with_atom, upper)


Job = Tuple[ClassSpec, int, Tuple[bool, ...], int]


def _census_job(job: Job) -> Tuple[List[Masks], int]:
    spec, n, prefix, budget = job
    return CensusSearch(spec, n, budget).run(prefix)


def representatives(
    structures: Sequence[Structure], cap: Optional[int] = None
) -> List[Structure]:
    """One canonical form per isomorphism class present in structures"""
    seen: Set[Masks] = set()
    out = []
    for s in structures:
        if s.masks in seen:
            continue
        orbit = iso_class(s, cap)
        seen.update(t.masks for t in orbit)
        out.append(orbit[0])
    return out


def _settled(report: ExtremeReport) -> bool:
    if report.guarantee == Guarantee.INCONCLUSIVE:
        raise BudgetExceededError(
            f"extremality of {report.structure} undecided"
            f" after {report.explored} candidates"
        )
    return report.certified


def census(
    n: int,
    spec: ClassSpec,
    what: str = CensusWhat.ALL,
    up_to_iso: bool = False,
    workers: Optional[int] = 1,
    budget: Optional[int] = None,
    progress: bool = False,
) -> List[Structure]:
    """Members of spec on {0..n-1}, optionally only maximal / minimal ones.

    The output is sorted by Structure.sort_key and does not depend on the
    number of workers. With up_to_iso each class is represented by its
    canonical form.

    budget caps the search nodes visited summed over every prefix job. Each
    job also carries the whole budget and stops as soon as it alone passes
    it, so a run fails exactly when the total does, whatever the partition.
    """
    if what not in (CensusWhat.ALL, CensusWhat.MAX, CensusWhat.MIN):
        raise ValueError(f"what must be 'all', 'max' or 'min', got {what!r}")
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"domain size must be >= 1, got {n!r}")
    logger = WorkbenchLogger()
    budget = AppConfig().CENSUS_BUDGET if budget is None else budget
    space = space_for(spec, n)
    depth = min(PREFIX_DEPTH, len(space.atoms))
    jobs = [
        (spec, n, prefix, budget)
        for prefix in itertools.product((False, True), repeat=depth)
    ]
    start = time.perf_counter()
    results = run_partitioned(
        _census_job, jobs, workers, progress, desc=f"census n={n}"
    )
    visited = sum(count for _, count in results)
    logger.log_search(f"census on {n} points", visited, budget)
    if visited > budget:
        logger.log_budget_exceeded(f"census on {n} points", budget)
        raise BudgetExceededError(f"census on {n} points exceeded {budget} nodes")
    members = [
        Structure(spec.signature, n, masks) for found, _ in results for masks in found
    ]
    if up_to_iso:
        members = representatives(members)
    if what == CensusWhat.MAX:
        members = [
            s for s in members if _settled(is_maximal(s, spec, SearchMode.EXACT))
        ]
    elif what == CensusWhat.MIN:
        members = [
            s for s in members if _settled(is_minimal(s, spec, SearchMode.EXACT))
        ]
    members.sort(key=Structure.sort_key)
    logger.log_census(n, len(members), time.perf_counter() - start)
    return members
