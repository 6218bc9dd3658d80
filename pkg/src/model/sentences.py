"""Named sentences and the sentences attached to finite patterns"""

import itertools
from typing import List, Optional

from src.config.app_config import AppConfig
from src.model.errors import BudgetExceededError
from src.model.formula import (
    Eq,
    ExistsAtMost,
    ForAll,
    Formula,
    Not,
    Rel,
    conj,
    disj,
    exists_block,
    forall_block,
)
from src.model.structure import Structure, tuples_over


def phi_irr() -> Formula:
    return ForAll(0, Not(Rel(0, (0, 0))))


def phi_refl() -> Formula:
    return ForAll(0, Rel(0, (0, 0)))


def phi_sym() -> Formula:
    return forall_block([0, 1], disj([Not(Rel(0, (0, 1))), Rel(0, (1, 0))]))


def phi_tr() -> Formula:
    return forall_block(
        [0, 1, 2], disj([Not(Rel(0, (0, 1))), Not(Rel(0, (1, 2))), Rel(0, (0, 2))])
    )


def phi_conn(n: int) -> Formula:
    """Every two points joined by an R0-path of at most n vertices.

    A v0 . A v1 . (v0 = v1 | OR_k E v2..v(k+1) . (v0 = v2 & v1 = v(k+1) & path))
    """
    if n < 1:
        raise ValueError("connectivity sentence needs n >= 1")
    paths: List[Formula] = [Eq(0, 1)]
    for k in range(2, n + 1):
        walk = list(range(2, k + 2))
        steps = [Rel(0, (walk[i], walk[i + 1])) for i in range(k - 1)]
        paths.append(
            exists_block(walk, conj([Eq(0, walk[0]), Eq(1, walk[-1])] + steps))
        )
    return forall_block([0, 1], disj(paths))


def degree_at_most(n: int) -> Formula:
    """A v0 . E<=n [v1] . R0(v0,v1)"""
    return ForAll(0, ExistsAtMost(n, (1,), Rel(0, (0, 1))))


def _literals(pattern: Structure, flip: bool) -> List[Formula]:
    literals: List[Formula] = []
    m = pattern.domain
    for k, arity in enumerate(pattern.arities):
        mask = pattern.masks[k]
        for code, t in enumerate(tuples_over(m, arity)):
            present = bool(mask >> code & 1)
            atom = Rel(k, t)
            literals.append(atom if present != flip else Not(atom))
    return literals


def _check_cap(pattern: Structure, cap: Optional[int]):
    limit = AppConfig().EMBED_CAP if cap is None else cap
    if pattern.domain > limit:
        raise BudgetExceededError(
            f"pattern on {pattern.domain} points exceeds the sentence cap of {limit}"
        )


def embed_sentence(pattern: Structure, cap: Optional[int] = None) -> Formula:
    """E v0..v(m-1) . (pairwise distinct & the exact diagram of the pattern)"""
    _check_cap(pattern, cap)
    m = pattern.domain
    distinct = [Not(Eq(j, k)) for j, k in itertools.combinations(range(m), 2)]
    return exists_block(list(range(m)), conj(distinct + _literals(pattern, flip=False)))


def forbid_sentence(pattern: Structure, cap: Optional[int] = None) -> Formula:
    """A v0..v(m-1) . (some equality | some literal of the pattern fails)"""
    _check_cap(pattern, cap)
    m = pattern.domain
    equal = [Eq(j, k) for j, k in itertools.combinations(range(m), 2)]
    return forall_block(list(range(m)), disj(equal + _literals(pattern, flip=True)))
