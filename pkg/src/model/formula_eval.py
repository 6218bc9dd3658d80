"""Tarskian evaluation of formulas on finite structures"""

import itertools
from typing import Callable, List, Mapping, Optional

from src.model.errors import ArityError, InvalidStructureError, UnboundVariableError
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
    free_vars,
    max_var,
)
from src.model.structure import Structure

Env = List[int]
Compiled = Callable[[Env], bool]


def check_arities(phi: Formula, s: Structure):
    """Raise ArityError if a relation atom does not fit the signature of s"""
    stack = [phi]
    while stack:
        node = stack.pop()
        if isinstance(node, Rel):
            if node.symbol >= len(s.signature):
                raise ArityError(
                    f"R{node.symbol} is not in a signature"
                    f" of {len(s.signature)} symbols"
                )
            if len(node.args) != s.arities[node.symbol]:
                raise ArityError(
                    f"R{node.symbol} has arity {s.arities[node.symbol]}, "
                    f"used with {len(node.args)} arguments"
                )
        elif isinstance(node, Not):
            stack.append(node.body)
        elif isinstance(node, (And, Or)):
            stack.extend(node.parts)
        elif isinstance(node, (ForAll, Exists, ExistsAtMost)):
            stack.append(node.body)


class FormulaEvaluator:
    """Compiles a formula against one structure into nested closures.

    The environment is a list indexed by variable; quantifiers write their
    variable in place and restore it on exit.
    """

    def __init__(self, phi: Formula, structure: Structure):
        check_arities(phi, structure)
        self.phi = phi
        self.structure = structure
        self.free = free_vars(phi)
        self.width = max_var(phi) + 1
        self._run = self._compile(phi)

    def __call__(self, valuation: Optional[Mapping[int, int]] = None) -> bool:
        valuation = valuation or {}
        missing = sorted(v for v in self.free if v not in valuation)
        if missing:
            names = ", ".join(f"v{v}" for v in missing)
            raise UnboundVariableError(f"no value for free variable(s) {names}")
        env = [0] * self.width
        for v, x in valuation.items():
            if not 0 <= x < self.structure.domain:
                raise InvalidStructureError(f"v{v} = {x} lies outside the domain")
            if v < self.width:
                env[v] = x
        return self._run(env)

    def _compile(self, phi: Formula) -> Compiled:
        n = self.structure.domain
        if isinstance(phi, Eq):
            a, b = phi.left, phi.right
            return lambda env: env[a] == env[b]
        if isinstance(phi, Rel):
            mask = self.structure.masks[phi.symbol]
            args = phi.args
            if len(args) == 2:
                a, b = args
                return lambda env: bool(mask >> (env[a] * n + env[b]) & 1)

            def rel(env: Env) -> bool:
                code = 0
                for v in args:
                    code = code * n + env[v]
                return bool(mask >> code & 1)

            return rel
        if isinstance(phi, Not):
            body = self._compile(phi.body)
            return lambda env: not body(env)
        if isinstance(phi, And):
            parts = [self._compile(p) for p in phi.parts]
            return lambda env: all(p(env) for p in parts)
        if isinstance(phi, Or):
            parts = [self._compile(p) for p in phi.parts]
            return lambda env: any(p(env) for p in parts)
        if isinstance(phi, (ForAll, Exists)):
            return self._quantifier(
                phi.var, self._compile(phi.body), isinstance(phi, ForAll)
            )
        if isinstance(phi, ExistsAtMost):
            return self._at_most(phi.bound, phi.block, self._compile(phi.body))
        raise TypeError(f"not a formula node: {phi!r}")

    def _quantifier(self, var: int, body: Compiled, universal: bool) -> Compiled:
        domain = range(self.structure.domain)

        def run(env: Env) -> bool:
            saved = env[var]
            try:
                for x in domain:
                    env[var] = x
                    if body(env) != universal:
                        return not universal
                return universal
            finally:
                env[var] = saved

        return run

    def _at_most(self, bound: int, block, body: Compiled) -> Compiled:
        n = self.structure.domain

        def run(env: Env) -> bool:
            saved = [env[v] for v in block]
            count = 0
            try:
                for values in itertools.product(range(n), repeat=len(block)):
                    for v, x in zip(block, values):
                        env[v] = x
                    if body(env):
                        count += 1
                        if count > bound:
                            return False
                return True
            finally:
                for v, x in zip(block, saved):
                    env[v] = x

        return run


def evaluate(
    phi: Formula, s: Structure, valuation: Optional[Mapping[int, int]] = None
) -> bool:
    """Truth of phi in s under valuation (a map variable index -> element)"""
    return FormulaEvaluator(phi, s)(valuation)
