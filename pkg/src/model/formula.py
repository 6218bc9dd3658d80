"""Abstract syntax of the finitary formula language.

Variables are natural-number indices printed as v0, v1, ... Relation atoms
name a symbol index into the signature they are evaluated against.
"""

from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Iterable, List, Sequence, Tuple

from src.model.errors import InvalidStructureError


def _check_var(v):
    if not isinstance(v, int) or isinstance(v, bool) or v < 0:
        raise InvalidStructureError(
            f"variable index must be a natural number, got {v!r}"
        )


class Formula:
    """Base of all formula nodes"""

    def to_text(self) -> str:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class Eq(Formula):
    left: int
    right: int

    def __post_init__(self):
        _check_var(self.left)
        _check_var(self.right)

    def to_text(self) -> str:
        return f"v{self.left} = v{self.right}"


@dataclass(frozen=True)
class Rel(Formula):
    symbol: int
    args: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        if not isinstance(self.symbol, int) or self.symbol < 0:
            raise InvalidStructureError(
                f"relation symbol must be >= 0, got {self.symbol!r}"
            )
        if not self.args:
            raise InvalidStructureError("relation atom needs at least one argument")
        for v in self.args:
            _check_var(v)

    def to_text(self) -> str:
        return f"R{self.symbol}(" + ",".join(f"v{v}" for v in self.args) + ")"


@dataclass(frozen=True)
class Not(Formula):
    body: Formula

    def to_text(self) -> str:
        return "~" + self.body.to_text()


@dataclass(frozen=True)
class _Junction(Formula):
    parts: Tuple[Formula, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise InvalidStructureError(
                f"{type(self).__name__} needs at least one part"
            )

    def _join(self, op: str) -> str:
        if len(self.parts) == 1:
            return self.parts[0].to_text()
        return "(" + f" {op} ".join(p.to_text() for p in self.parts) + ")"


@dataclass(frozen=True)
class And(_Junction):
    def to_text(self) -> str:
        return self._join("&")


@dataclass(frozen=True)
class Or(_Junction):
    def to_text(self) -> str:
        return self._join("|")


@dataclass(frozen=True)
class ForAll(Formula):
    var: int
    body: Formula

    def __post_init__(self):
        _check_var(self.var)

    def to_text(self) -> str:
        return f"A v{self.var} . {self.body.to_text()}"


@dataclass(frozen=True)
class Exists(Formula):
    var: int
    body: Formula

    def __post_init__(self):
        _check_var(self.var)

    def to_text(self) -> str:
        return f"E v{self.var} . {self.body.to_text()}"


@dataclass(frozen=True)
class ExistsAtMost(Formula):
    """At most `bound` distinct block-tuples satisfy the body"""

    bound: int
    block: Tuple[int, ...]
    body: Formula

    def __post_init__(self):
        object.__setattr__(self, "block", tuple(self.block))
        bound = self.bound
        if not isinstance(bound, int) or isinstance(bound, bool) or bound < 0:
            raise InvalidStructureError(
                f"counting bound must be >= 0, got {self.bound!r}"
            )
        if not self.block:
            raise InvalidStructureError("counting block needs at least one variable")
        for v in self.block:
            _check_var(v)
        if len(set(self.block)) != len(self.block):
            raise InvalidStructureError("counting block repeats a variable")

    def to_text(self) -> str:
        block = ",".join(f"v{v}" for v in self.block)
        return f"E<={self.bound} [{block}] . {self.body.to_text()}"


# Builders


def conj(parts: Iterable[Formula]) -> Formula:
    parts = tuple(parts)
    return parts[0] if len(parts) == 1 else And(parts)


def disj(parts: Iterable[Formula]) -> Formula:
    parts = tuple(parts)
    return parts[0] if len(parts) == 1 else Or(parts)


def forall_block(variables: Sequence[int], body: Formula) -> Formula:
    for v in reversed(variables):
        body = ForAll(v, body)
    return body


def exists_block(variables: Sequence[int], body: Formula) -> Formula:
    for v in reversed(variables):
        body = Exists(v, body)
    return body


# Traversals


def free_vars(phi: Formula) -> FrozenSet[int]:
    if isinstance(phi, Eq):
        return frozenset((phi.left, phi.right))
    if isinstance(phi, Rel):
        return frozenset(phi.args)
    if isinstance(phi, Not):
        return free_vars(phi.body)
    if isinstance(phi, _Junction):
        return frozenset().union(*(free_vars(p) for p in phi.parts))
    if isinstance(phi, (ForAll, Exists)):
        return free_vars(phi.body) - {phi.var}
    if isinstance(phi, ExistsAtMost):
        return free_vars(phi.body) - set(phi.block)
    raise TypeError(f"not a formula node: {phi!r}")


def max_var(phi: Formula) -> int:
    """Largest variable index occurring anywhere in phi"""
    if isinstance(phi, Eq):
        return max(phi.left, phi.right)
    if isinstance(phi, Rel):
        return max(phi.args)
    if isinstance(phi, Not):
        return max_var(phi.body)
    if isinstance(phi, _Junction):
        return max(max_var(p) for p in phi.parts)
    if isinstance(phi, (ForAll, Exists)):
        return max(phi.var, max_var(phi.body))
    if isinstance(phi, ExistsAtMost):
        return max(max(phi.block), max_var(phi.body))
    raise TypeError(f"not a formula node: {phi!r}")


def is_sentence(phi: Formula) -> bool:
    return not free_vars(phi)


def substitute(phi: Formula, mapping: Dict[int, int]) -> Formula:
    """Rename free occurrences; targets must not be bound inside phi"""
    if not mapping:
        return phi
    if isinstance(phi, Eq):
        return Eq(mapping.get(phi.left, phi.left), mapping.get(phi.right, phi.right))
    if isinstance(phi, Rel):
        return Rel(phi.symbol, tuple(mapping.get(v, v) for v in phi.args))
    if isinstance(phi, Not):
        return Not(substitute(phi.body, mapping))
    if isinstance(phi, _Junction):
        return type(phi)(tuple(substitute(p, mapping) for p in phi.parts))
    if isinstance(phi, (ForAll, Exists)):
        inner = {k: v for k, v in mapping.items() if k != phi.var}
        return type(phi)(phi.var, substitute(phi.body, inner))
    if isinstance(phi, ExistsAtMost):
        inner = {k: v for k, v in mapping.items() if k not in phi.block}
        return ExistsAtMost(phi.bound, phi.block, substitute(phi.body, inner))
    raise TypeError(f"not a formula node: {phi!r}")


def normalize(phi: Formula) -> Formula:
    """Eliminate double negations"""
    if isinstance(phi, Not):
        if isinstance(phi.body, Not):
            return normalize(phi.body.body)
        return Not(normalize(phi.body))
    if isinstance(phi, _Junction):
        return type(phi)(tuple(normalize(p) for p in phi.parts))
    if isinstance(phi, (ForAll, Exists)):
        return type(phi)(phi.var, normalize(phi.body))
    if isinstance(phi, ExistsAtMost):
        return ExistsAtMost(phi.bound, phi.block, normalize(phi.body))
    return phi


def expand_at_most(
    node: ExistsAtMost, negate: Callable[[Formula], Formula] = Not
) -> Formula:
    """Universal form of a counting node.

    E<=n [w] . phi becomes
    A w^1 .. w^(n+1) . (neg phi(w^1) | .. | neg phi(w^(n+1)) | OR_{k<l} w^k = w^l)
    with fresh variables above every index used in node.
    """
    q = len(node.block)
    fresh = max_var(node) + 1
    copies: List[Tuple[int, ...]] = []
    negated: List[Formula] = []
    for k in range(node.bound + 1):
        renamed = tuple(fresh + k * q + j for j in range(q))
        copies.append(renamed)
        negated.append(negate(substitute(node.body, dict(zip(node.block, renamed)))))
    equal_copies = [
        conj(Eq(a, b) for a, b in zip(copies[i], copies[j]))
        for i in range(len(copies))
        for j in range(i + 1, len(copies))
    ]
    variables = [v for renamed in copies for v in renamed]
    return forall_block(variables, disj(negated + equal_copies))


def expand_all(phi: Formula, negate: Callable[[Formula], Formula] = Not) -> Formula:
    """Replace every counting node by its universal form"""
    if isinstance(phi, Not):
        return Not(expand_all(phi.body, negate))
    if isinstance(phi, _Junction):
        return type(phi)(tuple(expand_all(p, negate) for p in phi.parts))
    if isinstance(phi, (ForAll, Exists)):
        return type(phi)(phi.var, expand_all(phi.body, negate))
    if isinstance(phi, ExistsAtMost):
        inner = ExistsAtMost(phi.bound, phi.block, expand_all(phi.body, negate))
        return expand_at_most(inner, negate)
    return phi
