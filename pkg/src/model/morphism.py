"""Homomorphisms, condensations, embeddings, isomorphisms and reversibility"""

import itertools
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from src.config.app_config import AppConfig
from src.model.errors import (
    BudgetExceededError,
    DomainMismatchError,
    SignatureMismatchError,
)
from src.model.structure import (
    DomainMap,
    IntTuple,
    Structure,
    direct_image,
    encode,
    image_table,
    is_subinterpretation,
    iter_bits,
    map_mask,
    tuples_over,
)


class MorphismKind(Enum):
    """Kinds of structure-preserving maps"""

    HOMOMORPHISM = "homomorphism"
    CONDENSATION = "condensation"
    STRONG_INJECTIVE = "strong_injective"
    ISOMORPHISM = "isomorphism"

    @property
    def bijective(self) -> bool:
        return self in (MorphismKind.CONDENSATION, MorphismKind.ISOMORPHISM)

    @property
    def injective(self) -> bool:
        return self is not MorphismKind.HOMOMORPHISM

    @property
    def strong(self) -> bool:
        return self in (MorphismKind.STRONG_INJECTIVE, MorphismKind.ISOMORPHISM)


def _check_signatures(a: Structure, b: Structure):
    if a.signature != b.signature:
        raise SignatureMismatchError(
            f"signatures differ: {a.signature.to_list()} vs {b.signature.to_list()}"
        )


def is_morphism(kind: MorphismKind, f: DomainMap, a: Structure, b: Structure) -> bool:
    """Decide whether f : a -> b is a morphism of the given kind"""
    _check_signatures(a, b)
    if f.source_size != a.domain or f.target_size != b.domain:
        raise DomainMismatchError(
            f"map {f.source_size}->{f.target_size} does not fit structures "
            f"on {a.domain} and {b.domain} points"
        )
    if kind.bijective and not f.is_bijective():
        return False
    if kind.injective and not f.is_injective():
        return False
    if not kind.strong:
        return is_subinterpretation(direct_image(f, a), b)
    # strong: t in a  <=>  f(t) in b, for every tuple t over a's domain
    for arity, mask_a, mask_b in zip(a.arities, a.masks, b.masks):
        table = image_table(f.values, f.target_size, arity)
        for code, image in enumerate(table):
            if (mask_a >> code & 1) != (mask_b >> image & 1):
                return False
    return True


def _incidence_profile(s: Structure) -> List[Tuple[int, ...]]:
    """Per vertex: how often it occurs at each position of each relation"""
    counts = [[0] * sum(s.arities) for _ in range(s.domain)]
    offset = 0
    for k, arity in enumerate(s.arities):
        for t in s.relation(k):
            for pos, x in enumerate(t):
                counts[x][offset + pos] += 1
        offset += arity
    return [tuple(c) for c in counts]


def _closing_tuples(
    n: int, arities: Sequence[int]
) -> List[List[Tuple[int, IntTuple, int]]]:
    """For each x, the (symbol, tuple, code) whose largest entry is x"""
    closing: List[List[Tuple[int, IntTuple, int]]] = [[] for _ in range(n)]
    for k, arity in enumerate(arities):
        for code, t in enumerate(tuples_over(n, arity)):
            closing[max(t)].append((k, t, code))
    return closing


class MorphismSearch:
    """Backtracking search for maps a -> b of one kind.

    Vertices of a are assigned in increasing order; candidates in increasing
    order, so results come out in lexicographic order of value vectors. A
    tuple is checked as soon as all of its entries are assigned.
    """

    def __init__(self, kind: MorphismKind, a: Structure, b: Structure):
        _check_signatures(a, b)
        self.kind = kind
        self.a = a
        self.b = b
        self.closing = _closing_tuples(a.domain, a.arities)
        self.candidates = self._candidates()

    def _candidates(self) -> List[List[int]]:
        n, m = self.a.domain, self.b.domain
        if not self.kind.injective:
            return [list(range(m)) for _ in range(n)]
        prof_a = _incidence_profile(self.a)
        prof_b = _incidence_profile(self.b)
        exact = self.kind is MorphismKind.ISOMORPHISM

        def fits(p: Tuple[int, ...], q: Tuple[int, ...]) -> bool:
            # an injective homomorphism cannot lower any incidence count
            if exact:
                return p == q
            return all(x <= y for x, y in zip(p, q))

        return [[y for y in range(m) if fits(prof_a[x], prof_b[y])] for x in range(n)]

    def _consistent(self, x: int, values: List[int]) -> bool:
        m = self.b.domain
        for k, t, code in self.closing[x]:
            in_a = self.a.masks[k] >> code & 1
            if not in_a and not self.kind.strong:
                continue
            in_b = self.b.masks[k] >> encode([values[v] for v in t], m) & 1
            if in_a and not in_b:
                return False
            if self.kind.strong and in_b and not in_a:
                return False
        return True

    def run(self, limit: Optional[int] = None) -> List[DomainMap]:
        n, m = self.a.domain, self.b.domain
        found: List[DomainMap] = []
        if self.kind.bijective and n != m:
            return found
        if self.kind.injective and n > m:
            return found
        values = [0] * n
        used = [False] * m

        def extend(x: int) -> bool:
            if x == n:
                found.append(DomainMap(n, m, tuple(values)))
                return limit is not None and len(found) >= limit
            for y in self.candidates[x]:
                if self.kind.injective and used[y]:
                    continue
                values[x] = y
                if not self._consistent(x, values):
                    continue
                used[y] = True
                stop = extend(x + 1)
                used[y] = False
                if stop:
                    return True
            return False

        extend(0)
        return found


def enumerate_morphisms(
    kind: MorphismKind, a: Structure, b: Structure, limit: Optional[int] = None
) -> List[DomainMap]:
    """All (or the first `limit`) morphisms a -> b, lexicographically ordered"""
    if limit is not None and limit < 1:
        raise ValueError("limit must be >= 1 or None")
    return MorphismSearch(kind, a, b).run(limit)


def find_embedding(pattern: Structure, host: Structure) -> Optional[DomainMap]:
    """First injective strong homomorphism pattern -> host, or None"""
    found = enumerate_morphisms(MorphismKind.STRONG_INJECTIVE, pattern, host, limit=1)
    return found[0] if found else None


def automorphisms(s: Structure) -> List[DomainMap]:
    return enumerate_morphisms(MorphismKind.ISOMORPHISM, s, s)


def condenses_to(a: Structure, b: Structure) -> bool:
    """Whether some condensation maps a into b (a ≼_c b)"""
    return bool(enumerate_morphisms(MorphismKind.CONDENSATION, a, b, limit=1))


def _check_orbit_cap(s: Structure, cap: Optional[int]):
    limit = AppConfig().ORBIT_CAP if cap is None else cap
    if s.domain > limit:
        raise BudgetExceededError(
            f"orbit of a structure on {s.domain} points exceeds the cap of {limit}"
        )


def iso_class(s: Structure, cap: Optional[int] = None) -> List[Structure]:
    """Distinct direct images of s under all permutations, lexicographically sorted"""
    _check_orbit_cap(s, cap)
    n = s.domain
    orbit = set()
    for perm in itertools.permutations(range(n)):
        masks = tuple(
            map_mask(mask, image_table(perm, n, a))
            for a, mask in zip(s.arities, s.masks)
        )
        orbit.add(masks)
    return sorted((s.with_masks(m) for m in orbit), key=Structure.sort_key)


def canonical_form(s: Structure, cap: Optional[int] = None) -> Structure:
    """Lexicographically least member of the orbit of s"""
    return iso_class(s, cap)[0]


def _strictly_below(a: Structure, b: Structure) -> bool:
    return a.masks != b.masks and all(x & ~y == 0 for x, y in zip(a.masks, b.masks))


def is_reversible(s: Structure, cap: Optional[int] = None) -> bool:
    """No isomorphic copy of s strictly contains s"""
    return not any(_strictly_below(s, t) for t in iso_class(s, cap))


def is_strongly_reversible(s: Structure, cap: Optional[int] = None) -> bool:
    """The orbit of s is a singleton"""
    return len(iso_class(s, cap)) == 1


def is_weakly_reversible(s: Structure, cap: Optional[int] = None) -> bool:
    """The orbit of s is convex in the inclusion lattice"""
    orbit = iso_class(s, cap)
    keys = {t.masks for t in orbit}
    for low in orbit:
        for high in orbit:
            if not _strictly_below(low, high):
                continue
            gaps = [h ^ l for l, h in zip(low.masks, high.masks)]
            bits = [(k, b) for k, gap in enumerate(gaps) for b in iter_bits(gap)]
            for r in range(1, len(bits)):
                for chosen in itertools.combinations(bits, r):
                    masks = list(low.masks)
                    for k, b in chosen:
                        masks[k] |= 1 << b
                    if tuple(masks) not in keys:
                        return False
    return True


def is_antichain(family: Sequence[Structure]) -> bool:
    """No member strictly contains another"""
    by_size: Dict[int, List[Structure]] = {}
    for s in family:
        by_size.setdefault(s.tuple_count(), []).append(s)
    sizes = sorted(by_size)
    for i, small in enumerate(sizes):
        for large in sizes[i + 1:]:
            for a in by_size[small]:
                for b in by_size[large]:
                    if _strictly_below(a, b):
                        return False
    return True

