"""Seeded random structures, orders, valuations and class-restricted formulas"""

from typing import Callable, Dict, List, Optional

import networkx as nx
import numpy as np

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
)
from src.model.structure import Signature, Structure


def rng_for(seed: Optional[int]) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_structure(
    rng: np.random.Generator, signature: Signature, n: int, density: float = 0.5
) -> Structure:
    """Every tuple present independently with probability density"""
    masks = []
    for arity in signature.arities:
        present = rng.random(n**arity) < density
        masks.append(sum(1 << int(code) for code in np.flatnonzero(present)))
    return Structure(signature, n, tuple(masks))


def random_graph(rng: np.random.Generator, n: int, density: float = 0.5) -> Structure:
    pairs = [
        (x, y)
        for x in range(n)
        for y in range(x + 1, n)
        if rng.random() < density
    ]
    return Structure.graph(n, pairs)


def random_partial_order(
    rng: np.random.Generator, n: int, density: float = 0.3
) -> Structure:
    """Strict partial order: transitive closure of a random DAG on a shuffled order"""
    order = rng.permutation(n).tolist()
    dag = nx.DiGraph()
    dag.add_nodes_from(range(n))
    for i, x in enumerate(order):
        for y in order[i + 1:]:
            if rng.random() < density:
                dag.add_edge(x, y)
    return Structure.binary(n, nx.transitive_closure_dag(dag).edges)


def random_chain(
    rng: np.random.Generator, signature: Signature, n: int, length: int
) -> List[Structure]:
    """Increasing family: each step adds a random batch of tuples"""
    current = random_structure(rng, signature, n, density=0.2)
    chain = [current]
    for _ in range(length - 1):
        extra = random_structure(rng, signature, n, density=0.2)
        current = current.with_masks(
            [a | b for a, b in zip(current.masks, extra.masks)]
        )
        chain.append(current)
    return chain


def random_valuation(
    rng: np.random.Generator, variables: int, n: int
) -> Dict[int, int]:
    return {v: int(rng.integers(n)) for v in range(variables)}


class FormulaGenerator:
    """Random formulas drawn from the grammar of one syntactic class.

    kind None draws from the full language, counting quantifiers included.
    Every variable lies in 0..variables-1, so a valuation of that range
    covers the free ones.
    """

    # quantifiers admitted at the top of each class, and the base class it embeds
    QUANTIFIERS = {
        None: ("A", "E", "E<="),
        "P": ("A", "E"),
        "N": ("A", "E"),
        "F": ("A",),
        "G": ("A",),
        "negF": ("E",),
        "negG": ("E",),
    }
    BASE = {"F": "P", "G": "N", "negF": "N", "negG": "P"}

    def __init__(
        self,
        rng: np.random.Generator,
        signature: Optional[Signature] = None,
        variables: int = 3,
        depth: int = 4,
    ):
        self.rng = rng
        self.signature = signature or Signature.binary()
        self.variables = variables
        self.depth = depth

    def _var(self) -> int:
        return int(self.rng.integers(self.variables))

    def _rel(self) -> Rel:
        k = int(self.rng.integers(len(self.signature)))
        return Rel(k, tuple(self._var() for _ in range(self.signature.arities[k])))

    def _atom(self, kind: Optional[str]) -> Formula:
        eq = Eq(self._var(), self._var())
        choices: List[Callable[[], Formula]] = [lambda: eq, lambda: Not(eq)]
        if kind in (None, "P", "F", "G", "negF", "negG"):
            choices.append(self._rel)
        if kind in (None, "N", "F", "G", "negF", "negG"):
            choices.append(lambda: Not(self._rel()))
        if kind is None:
            choices.append(lambda: Not(Not(self._rel())))
        return choices[int(self.rng.integers(len(choices)))]()

    def formula(
        self, kind: Optional[str] = None, depth: Optional[int] = None
    ) -> Formula:
        depth = self.depth if depth is None else depth
        if depth <= 0 or self.rng.random() < 0.25:
            return self._atom(kind)
        ops = ["&", "|"] + list(self.QUANTIFIERS[kind])
        if kind in self.BASE:
            ops.append("base")
        if kind is None:
            ops.append("~")
        op = ops[int(self.rng.integers(len(ops)))]
        if op == "base":
            return self.formula(self.BASE[kind], depth - 1)
        if op in ("&", "|"):
            parts = tuple(self.formula(kind, depth - 1) for _ in range(2))
            return And(parts) if op == "&" else Or(parts)
        if op == "A":
            return ForAll(self._var(), self.formula(kind, depth - 1))
        if op == "E":
            return Exists(self._var(), self.formula(kind, depth - 1))
        if op == "E<=":
            return ExistsAtMost(
                int(self.rng.integers(2)), (self._var(),), self.formula(kind, depth - 1)
            )
        return Not(self.formula(kind, depth - 1))

    def sentence(self, kind: Optional[str] = None) -> Formula:
        """Close the formula universally (F, G, P, N) or existentially (negF, negG)"""
        phi = self.formula(kind)
        closer = Exists if kind in ("negF", "negG") else ForAll
        for v in reversed(range(self.variables)):
            phi = closer(v, phi)
        return phi


def formulas(
    seed: int,
    count: int,
    kind: Optional[str] = None,
    signature: Optional[Signature] = None,
) -> List[Formula]:
    generator = FormulaGenerator(rng_for(seed), signature)
    return [generator.formula(kind) for _ in range(count)]

