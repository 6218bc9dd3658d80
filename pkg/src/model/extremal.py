"""Maximal and minimal members of a class, saturation and complement duality"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Set, Tuple

import numpy as np

from src.config.app_config import AppConfig
from src.config.constant import Builtin, Direction, Guarantee, SearchMode
from src.model.class_spec import ClassSpec, DefBound, constraints_of, member, space_for
from src.model.errors import NotAChainError, NotAMemberError, NotDualizableError
from src.model.formula import Not, Rel, normalize
from src.model.formula_class import transform_c
from src.model.structure import (
    Structure,
    check_same_shape,
    complement,
    intersect,
    union,
)
from src.util.logger import WorkbenchLogger


@dataclass(frozen=True)
class ExtremeReport:
    """Outcome of a maximality or minimality check"""

    structure: Structure
    direction: str
    certified: bool
    witness: Optional[Structure]
    guarantee: str
    explored: int = 0

    def __post_init__(self):
        if self.certified and self.witness is not None:
            raise ValueError("a certified report cannot carry a witness")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "direction": self.direction,
            "certified": self.certified,
            "guarantee": self.guarantee,
            "witness": self.witness.to_dict() if self.witness is not None else None,
            "explored": self.explored,
        }


def _require_member(s: Structure, spec: ClassSpec):
    if not member(s, spec):
        raise NotAMemberError(f"{s} is not a member of the class")


class ExtremeSearch:
    """Single-move and layered searches above (or below) one member.

    A move toggles one atom of the interpretation space. Going up, the
    downward-closed constraints prune: once a set of added atoms breaks one,
    every larger set does too, so layer k only joins sets whose (k-1)-subsets
    all survived.
    """

    def __init__(self, s: Structure, spec: ClassSpec, direction: str):
        _require_member(s, spec)
        self.s = s
        self.spec = spec
        self.direction = direction
        self.up = direction == Direction.MAX
        self.space = space_for(spec, s.domain)
        self.constraints = constraints_of(spec)
        self.moves = self.space.missing(s) if self.up else self.space.present(s)
        self.pruning = [c for c in self.constraints if self._prunes(c)]
        self.rest = [c for c in self.constraints if not self._prunes(c)]
        self.logger = WorkbenchLogger()

    def _prunes(self, constraint) -> bool:
        return constraint.closure.down if self.up else constraint.closure.up

    @property
    def closed(self) -> bool:
        """Every constraint is monotone in the search direction"""
        return not self.rest

    def _apply(self, atoms: Sequence[int]) -> Structure:
        t = self.s
        for i in atoms:
            t = self.space.toggle(t, i)
        return t

    def _report(self, certified, witness, guarantee, explored) -> ExtremeReport:
        return ExtremeReport(
            self.s, self.direction, certified, witness, guarantee, explored
        )

    def local(self) -> ExtremeReport:
        if not self.moves:
            return self._report(True, None, Guarantee.EXACT, 0)
        for count, i in enumerate(self.moves, start=1):
            t = self.space.toggle(self.s, i)
            if all(c.holds(t) for c in self.constraints):
                return self._report(False, t, Guarantee.REFUTED, count)
        if self.closed:
            return self._report(True, None, Guarantee.CLOSURE, len(self.moves))
        return self._report(False, None, Guarantee.LOCAL, len(self.moves))

    def exact(self, budget: Optional[int] = None) -> ExtremeReport:
        report = self.local()
        if report.guarantee != Guarantee.LOCAL:
            return report
        budget = AppConfig().EXACT_BUDGET if budget is None else budget
        explored = len(self.moves)
        layer: List[Tuple[int, ...]] = []
        for i in self.moves:
            if all(c.holds(self._apply([i])) for c in self.pruning):
                layer.append((i,))
        while layer:
            alive: Set[Tuple[int, ...]] = set(layer)
            next_layer: List[Tuple[int, ...]] = []
            for cand in _join(layer, alive):
                explored += 1
                if explored > budget:
                    self.logger.log_budget_exceeded("exact extreme search", budget)
                    return self._report(False, None, Guarantee.INCONCLUSIVE, explored)
                t = self._apply(cand)
                if not all(c.holds(t) for c in self.pruning):
                    continue
                if all(c.holds(t) for c in self.rest):
                    return self._report(False, t, Guarantee.REFUTED, explored)
                next_layer.append(cand)
            layer = next_layer
        self.logger.log_search("exact extreme search", explored, budget)
        return self._report(True, None, Guarantee.EXACT, explored)


def _join(
    layer: List[Tuple[int, ...]], alive: Set[Tuple[int, ...]]
) -> List[Tuple[int, ...]]:
    """Candidates one atom larger whose every facet survived (sorted)"""
    out = []
    for a_index, a in enumerate(layer):
        for b in layer[a_index + 1:]:
            if a[:-1] != b[:-1]:
                break
            cand = a + (b[-1],)
            if all(cand[:j] + cand[j + 1:] in alive for j in range(len(cand))):
                out.append(cand)
    return sorted(out)


def is_maximal(
    s: Structure,
    spec: ClassSpec,
    mode: str = SearchMode.LOCAL,
    budget: Optional[int] = None,
) -> ExtremeReport:
    search = ExtremeSearch(s, spec, Direction.MAX)
    return search.exact(budget) if mode == SearchMode.EXACT else search.local()


def is_minimal(
    s: Structure,
    spec: ClassSpec,
    mode: str = SearchMode.LOCAL,
    budget: Optional[int] = None,
) -> ExtremeReport:
    search = ExtremeSearch(s, spec, Direction.MIN)
    return search.exact(budget) if mode == SearchMode.EXACT else search.local()


def saturate(
    s: Structure,
    spec: ClassSpec,
    direction: str = Direction.UP,
    tie_break: str = "lex",
    seed: Optional[int] = None,
) -> Structure:
    """Add (remove) single atoms while staying in the class.

    With tie_break "lex" the lexicographically smallest admissible atom goes
    first; "random" shuffles the candidates each round with a seeded generator.
    """
    _require_member(s, spec)
    if direction not in (Direction.UP, Direction.DOWN):
        raise ValueError(f"direction must be 'up' or 'down', got {direction!r}")
    if tie_break not in ("lex", "random"):
        raise ValueError(f"tie_break must be 'lex' or 'random', got {tie_break!r}")
    rng = None
    if tie_break == "random":
        rng = np.random.default_rng(AppConfig().DEFAULT_SEED if seed is None else seed)
    space = space_for(spec, s.domain)
    constraints = constraints_of(spec)
    current = s
    while True:
        if direction == Direction.UP:
            moves = space.missing(current)
        else:
            moves = space.present(current)
        if rng is not None:
            moves = [moves[i] for i in rng.permutation(len(moves))]
        for i in moves:
            t = space.toggle(current, i)
            if all(c.holds(t) for c in constraints):
                current = t
                break
        else:
            return current


def complement_dual(spec: ClassSpec) -> ClassSpec:
    """The class of complements: s in spec iff complement(s) in the dual"""
    builtins = []
    for b in spec.builtins:
        if b not in Builtin.DUAL:
            raise NotDualizableError(f"builtin '{b}' has no complement dual")
        builtins.append(Builtin.DUAL[b])
    degree_max = None
    defbounds: List[DefBound] = []
    if spec.degree_max is not None:
        defbounds.append(DefBound(Not(Rel(0, (0, 1))), 1, 1, spec.degree_max))
    for bound in spec.defbounds:
        formula = normalize(transform_c(bound.formula))
        is_degree = (
            formula == Rel(0, (0, 1))
            and (bound.params, bound.block) == (1, 1)
            and spec.signature.is_binary()
            and spec.degree_max is None
            and degree_max is None
        )
        if is_degree:
            degree_max = bound.n
        else:
            defbounds.append(DefBound(formula, bound.params, bound.block, bound.n))
    local_bounds = {
        m: [
            (m**arity - high, m**arity - low)
            for arity, (low, high) in zip(spec.signature.arities, bounds)
        ]
        for m, bounds in spec.local_bounds
    }
    return ClassSpec.create(
        signature=spec.signature,
        builtins=builtins,
        axioms=[normalize(transform_c(phi)) for phi in spec.axioms],
        forbidden=[complement(f) for f in spec.forbidden],
        degree_max=degree_max,
        local_bounds=local_bounds,
        defbounds=defbounds,
    )


def _chain_order(chain: Sequence[Structure]) -> List[Structure]:
    if not chain:
        raise NotAChainError("empty family")
    for s in chain[1:]:
        check_same_shape(chain[0], s)
    ordered = sorted(chain, key=Structure.tuple_count)
    for low, high in zip(ordered, ordered[1:]):
        if any(a & ~b for a, b in zip(low.masks, high.masks)):
            raise NotAChainError(f"{low} and {high} are not comparable")
    return ordered


def chain_union_test(
    chain: Sequence[Structure], spec: ClassSpec, direction: str = Direction.UNION
) -> bool:
    """Whether the union (or intersection) of a chain lies in the class"""
    ordered = _chain_order(chain)
    outside = [s for s in ordered if not member(s, spec)]
    if outside:
        WorkbenchLogger().warning(
            f"{len(outside)} chain element(s) lie outside the class"
        )
    if direction == Direction.UNION:
        limit = union(ordered)
    elif direction == Direction.INTERSECTION:
        limit = intersect(ordered)
    else:
        raise ValueError(
            f"direction must be 'union' or 'intersection', got {direction!r}"
        )
    return member(limit, spec)

