"""Syntactic classes P, N, F, G, ¬F, ¬G and the c / ¬ transforms.

P: atoms and v!=w, closed under A, E, &, |.
N: ~R, v=w, v!=w, closed under A, E, &, |.
F: P and ~R, closed under A, &, |.
G: N and R, closed under A, &, |.
¬F: N and R, closed under E, |, &.
¬G: P and ~R, closed under E, |, &.
Negation is only admitted directly on atoms; double negations are removed
before classifying.
"""

from dataclasses import asdict, dataclass
from typing import Dict

from src.model.formula import (
    And,
    Eq,
    Exists,
    ExistsAtMost,
    ForAll,
    Formula,
    Not,
    Or,
    Rel,
    expand_at_most,
    normalize,
)


@dataclass(frozen=True)
class SyntacticClass:
    """Membership flags of one formula"""

    P: bool = False
    N: bool = False
    F: bool = False
    G: bool = False
    negF: bool = False
    negG: bool = False

    def to_dict(self) -> Dict[str, bool]:
        return asdict(self)


_EVERY = SyntacticClass(True, True, True, True, True, True)
_NONE = SyntacticClass()
_POSITIVE_ATOM = SyntacticClass(P=True, F=True, G=True, negF=True, negG=True)
_NEGATIVE_ATOM = SyntacticClass(N=True, F=True, G=True, negF=True, negG=True)


def _classify(phi: Formula) -> SyntacticClass:
    if isinstance(phi, Eq):
        return _EVERY
    if isinstance(phi, Rel):
        return _POSITIVE_ATOM
    if isinstance(phi, Not):
        if isinstance(phi.body, Eq):
            return _EVERY
        if isinstance(phi.body, Rel):
            return _NEGATIVE_ATOM
        return _NONE
    if isinstance(phi, (And, Or)):
        parts = [_classify(p) for p in phi.parts]
        return SyntacticClass(
            P=all(c.P for c in parts),
            N=all(c.N for c in parts),
            F=all(c.F for c in parts),
            G=all(c.G for c in parts),
            negF=all(c.negF for c in parts),
            negG=all(c.negG for c in parts),
        )
    if isinstance(phi, ForAll):
        body = _classify(phi.body)
        # ¬F and ¬G admit a universal formula only through N and P
        return SyntacticClass(
            P=body.P, N=body.N, F=body.F, G=body.G, negF=body.N, negG=body.P
        )
    if isinstance(phi, Exists):
        body = _classify(phi.body)
        return SyntacticClass(
            P=body.P, N=body.N, F=body.P, G=body.N, negF=body.negF, negG=body.negG
        )
    if isinstance(phi, ExistsAtMost):
        return _classify(expand_at_most(phi, negate=transform_neg))
    raise TypeError(f"not a formula node: {phi!r}")


def classify(phi: Formula) -> SyntacticClass:
    return _classify(normalize(phi))


def transform_c(phi: Formula) -> Formula:
    """Swap every relation atom with its negation, keep equalities"""
    if isinstance(phi, Eq):
        return phi
    if isinstance(phi, Rel):
        return Not(phi)
    if isinstance(phi, Not):
        return Not(transform_c(phi.body))
    if isinstance(phi, (And, Or)):
        return type(phi)(tuple(transform_c(p) for p in phi.parts))
    if isinstance(phi, (ForAll, Exists)):
        return type(phi)(phi.var, transform_c(phi.body))
    if isinstance(phi, ExistsAtMost):
        return ExistsAtMost(phi.bound, phi.block, transform_c(phi.body))
    raise TypeError(f"not a formula node: {phi!r}")


def transform_neg(phi: Formula) -> Formula:
    """Push a negation through phi: dual connectives and quantifiers, negated atoms"""
    if isinstance(phi, (Eq, Rel)):
        return Not(phi)
    if isinstance(phi, Not):
        return phi.body
    if isinstance(phi, And):
        return Or(tuple(transform_neg(p) for p in phi.parts))
    if isinstance(phi, Or):
        return And(tuple(transform_neg(p) for p in phi.parts))
    if isinstance(phi, ForAll):
        return Exists(phi.var, transform_neg(phi.body))
    if isinstance(phi, Exists):
        return ForAll(phi.var, transform_neg(phi.body))
    if isinstance(phi, ExistsAtMost):
        return transform_neg(expand_at_most(phi))
    raise TypeError(f"not a formula node: {phi!r}")
