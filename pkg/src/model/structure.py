"""Finite relational structures and the Boolean algebra of interpretations.

Domains are initial segments {0, ..., n-1}. A tuple t of arity a over n points
is coded as the base-n integer t[0] n^(a-1) + ... + t[a-1], so numeric order of
codes is lexicographic order of tuples. Each relation is stored as an int
bitset over those codes.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, Iterable, Iterator, List, Sequence, Tuple

from src.model.errors import (
    DomainMismatchError,
    InvalidStructureError,
    SignatureMismatchError,
)
from src.util.codec import canonical_json, require

IntTuple = Tuple[int, ...]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in increasing order"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@lru_cache(maxsize=None)
def tuples_over(n: int, arity: int) -> Tuple[IntTuple, ...]:
    """All arity-tuples over range(n); index i holds the tuple with code i"""
    return tuple(itertools.product(range(n), repeat=arity))


def encode(t: Sequence[int], n: int) -> int:
    code = 0
    for x in t:
        code = code * n + x
    return code


def decode(code: int, n: int, arity: int) -> IntTuple:
    return tuples_over(n, arity)[code]


@lru_cache(maxsize=None)
def full_mask(n: int, arity: int) -> int:
    return (1 << n**arity) - 1


@lru_cache(maxsize=None)
def diagonal_mask(n: int, arity: int) -> int:
    mask = 0
    for x in range(n):
        mask |= 1 << encode((x,) * arity, n)
    return mask


@lru_cache(maxsize=None)
def transpose_table(n: int) -> Tuple[int, ...]:
    """code of (x, y) -> code of (y, x)"""
    return tuple(y * n + x for x, y in tuples_over(n, 2))


@lru_cache(maxsize=8192)
def image_table(values: IntTuple, target: int, arity: int) -> Tuple[int, ...]:
    """code of t -> code of f(t), for f given by its value vector"""
    return tuple(
        encode([values[x] for x in t], target) for t in tuples_over(len(values), arity)
    )


def map_mask(mask: int, table: Sequence[int]) -> int:
    out = 0
    for code in iter_bits(mask):
        out |= 1 << table[code]
    return out


def _is_nat(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


@dataclass(frozen=True)
class Signature:
    """Arities of the relation symbols R0, R1, ..."""

    arities: Tuple[int, ...]

    def __post_init__(self):
        arities = tuple(self.arities)
        object.__setattr__(self, "arities", arities)
        if not arities:
            raise InvalidStructureError("signature needs at least one symbol")
        for a in arities:
            if not _is_nat(a) or a < 1:
                raise InvalidStructureError(
                    f"arity must be a positive integer, got {a!r}"
                )

    @classmethod
    def binary(cls) -> "Signature":
        return cls((2,))

    def __len__(self) -> int:
        return len(self.arities)

    def is_binary(self) -> bool:
        return self.arities == (2,)

    def binary_symbols(self) -> List[int]:
        return [k for k, a in enumerate(self.arities) if a == 2]

    def to_list(self) -> List[int]:
        return list(self.arities)


@dataclass(frozen=True)
class DomainMap:
    """Total function from {0..source_size-1} to {0..target_size-1}"""

    source_size: int
    target_size: int
    values: IntTuple

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if not _is_nat(self.source_size) or self.source_size < 1:
            raise InvalidStructureError("map source size must be >= 1")
        if not _is_nat(self.target_size) or self.target_size < 1:
            raise InvalidStructureError("map target size must be >= 1")
        if len(values) != self.source_size:
            raise InvalidStructureError(
                f"map has {len(values)} values for a source of size {self.source_size}"
            )
        for v in values:
            if not _is_nat(v) or not 0 <= v < self.target_size:
                raise InvalidStructureError(
                    f"map value {v!r} outside [0, {self.target_size})"
                )

    @classmethod
    def identity(cls, n: int) -> "DomainMap":
        return cls(n, n, tuple(range(n)))

    @classmethod
    def permutation(cls, values: Sequence[int]) -> "DomainMap":
        """Bijection of {0..n-1} given by its value vector"""
        f = cls(len(values), len(values), tuple(values))
        if not f.is_bijective():
            raise InvalidStructureError(f"{list(values)} is not a permutation")
        return f

    def __call__(self, x: int) -> int:
        return self.values[x]

    def is_injective(self) -> bool:
        return len(set(self.values)) == self.source_size

    def is_surjective(self) -> bool:
        return len(set(self.values)) == self.target_size

    def is_bijective(self) -> bool:
        return self.source_size == self.target_size and self.is_injective()

    def compose(self, inner: "DomainMap") -> "DomainMap":
        """self after inner"""
        if inner.target_size != self.source_size:
            raise DomainMismatchError(
                f"cannot compose: inner map lands in {inner.target_size} points, "
                f"outer map starts from {self.source_size}"
            )
        return DomainMap(
            inner.source_size,
            self.target_size,
            tuple(self.values[v] for v in inner.values),
        )

    def inverse(self) -> "DomainMap":
        if not self.is_bijective():
            raise InvalidStructureError("only bijections have an inverse")
        values = [0] * self.source_size
        for x, y in enumerate(self.values):
            values[y] = x
        return DomainMap(self.source_size, self.source_size, tuple(values))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "source_size": self.source_size,
            "target_size": self.target_size,
            "values": list(self.values),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "DomainMap":
        return cls(
            require(data, "source_size", int, "map"),
            require(data, "target_size", int, "map"),
            tuple(require(data, "values", list, "map")),
        )


@dataclass(frozen=True)
class Structure:
    """Interpretation of a signature on the domain {0..domain-1}"""

    signature: Signature
    domain: int
    masks: Tuple[int, ...]

    def __post_init__(self):
        masks = tuple(self.masks)
        object.__setattr__(self, "masks", masks)
        if not _is_nat(self.domain) or self.domain < 1:
            raise InvalidStructureError(
                f"domain size must be >= 1, got {self.domain!r}"
            )
        if len(masks) != len(self.signature):
            raise InvalidStructureError(
                f"{len(masks)} relations for a signature"
                f" of {len(self.signature)} symbols"
            )
        for k, mask in enumerate(masks):
            limit = full_mask(self.domain, self.signature.arities[k])
            if not _is_nat(mask) or mask < 0 or mask > limit:
                raise InvalidStructureError(
                    f"relation {k} holds tuples outside the domain"
                )

    # Construction

    @classmethod
    def from_relations(
        cls,
        signature: Signature,
        domain: int,
        relations: Sequence[Iterable[Sequence[int]]],
    ) -> "Structure":
        """Build from per-symbol tuple collections (duplicates collapse)"""
        if not _is_nat(domain) or domain < 1:
            raise InvalidStructureError(f"domain size must be >= 1, got {domain!r}")
        if len(relations) != len(signature):
            raise InvalidStructureError(
                f"{len(relations)} relations for a signature"
                f" of {len(signature)} symbols"
            )
        masks = []
        for k, tuples in enumerate(relations):
            arity = signature.arities[k]
            mask = 0
            for t in tuples:
                t = tuple(t)
                if len(t) != arity:
                    raise InvalidStructureError(
                        f"relation {k} has arity {arity}, got tuple {list(t)}"
                    )
                for x in t:
                    if not _is_nat(x) or not 0 <= x < domain:
                        raise InvalidStructureError(
                            f"tuple {list(t)} of relation {k}"
                            f" leaves the domain [0, {domain})"
                        )
                mask |= 1 << encode(t, domain)
            masks.append(mask)
        return cls(signature, domain, tuple(masks))

    @classmethod
    def binary(cls, domain: int, pairs: Iterable[Sequence[int]]) -> "Structure":
        """Single binary relation"""
        return cls.from_relations(Signature.binary(), domain, [pairs])

    @classmethod
    def graph(cls, domain: int, edges: Iterable[Sequence[int]]) -> "Structure":
        """Symmetric irreflexive binary relation from undirected edges"""
        pairs = []
        for x, y in edges:
            if x == y:
                raise InvalidStructureError(f"graph edge {x}-{y} is a loop")
            pairs.append((x, y))
            pairs.append((y, x))
        return cls.binary(domain, pairs)

    @classmethod
    def empty(cls, signature: Signature, domain: int) -> "Structure":
        return cls(signature, domain, (0,) * len(signature))

    @classmethod
    def full(cls, signature: Signature, domain: int) -> "Structure":
        return cls(
            signature, domain, tuple(full_mask(domain, a) for a in signature.arities)
        )

    # Access

    @property
    def arities(self) -> Tuple[int, ...]:
        return self.signature.arities

    def relation(self, k: int) -> List[IntTuple]:
        """Tuples of relation k in lexicographic order"""
        table = tuples_over(self.domain, self.arities[k])
        return [table[code] for code in iter_bits(self.masks[k])]

    @property
    def relations(self) -> Tuple[List[IntTuple], ...]:
        return tuple(self.relation(k) for k in range(len(self.masks)))

    def holds(self, k: int, t: Sequence[int]) -> bool:
        return bool(self.masks[k] >> encode(t, self.domain) & 1)

    def tuple_count(self) -> int:
        return sum(popcount(mask) for mask in self.masks)

    def with_masks(self, masks: Sequence[int]) -> "Structure":
        return Structure(self.signature, self.domain, tuple(masks))

    def sort_key(self) -> Tuple[Tuple[int, ...], ...]:
        """Lexicographic key: per symbol, the ordered tuple codes"""
        return tuple(tuple(iter_bits(mask)) for mask in self.masks)

    # Serialization

    def to_dict(self) -> Dict[str, Any]:
        return {
            "signature": self.signature.to_list(),
            "domain": self.domain,
            "relations": [[list(t) for t in rel] for rel in self.relations],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Structure":
        signature = Signature(tuple(require(data, "signature", list, "structure")))
        domain = require(data, "domain", int, "structure")
        relations = require(data, "relations", list, "structure")
        for k, rel in enumerate(relations):
            if not isinstance(rel, list) or not all(isinstance(t, list) for t in rel):
                raise InvalidStructureError(f"relation {k} must be a list of tuples")
            if len({tuple(t) for t in rel}) != len(rel):
                raise InvalidStructureError(f"relation {k} lists a tuple twice")
        return cls.from_relations(signature, domain, relations)

    def to_json(self) -> str:
        return canonical_json(self.to_dict())

    def __str__(self) -> str:
        rels = "; ".join(
            " ".join("(" + ",".join(map(str, t)) + ")" for t in rel) or "-"
            for rel in self.relations
        )
        return f"<n={self.domain} {rels}>"


def check_same_shape(a: Structure, b: Structure):
    """Raise unless a and b share signature and domain size"""
    if a.signature != b.signature:
        raise SignatureMismatchError(
            f"signatures differ: {a.signature.to_list()} vs {b.signature.to_list()}"
        )
    if a.domain != b.domain:
        raise DomainMismatchError(f"domain sizes differ: {a.domain} vs {b.domain}")


def is_graph(s: Structure) -> bool:
    """Binary, irreflexive and symmetric"""
    if not s.signature.is_binary():
        return False
    mask = s.masks[0]
    if mask & diagonal_mask(s.domain, 2):
        return False
    return map_mask(mask, transpose_table(s.domain)) == mask


def diagonal(n: int) -> Structure:
    """The identity relation on n points"""
    return Structure(Signature.binary(), n, (diagonal_mask(n, 2),))


def complement(s: Structure) -> Structure:
    return s.with_masks(
        full_mask(s.domain, a) ^ mask for a, mask in zip(s.arities, s.masks)
    )


def graph_complement(s: Structure) -> Structure:
    """Edges of the result are the non-edges of s"""
    if not is_graph(s):
        raise InvalidStructureError(
            "graph complement needs a symmetric irreflexive binary relation"
        )
    n = s.domain
    return s.with_masks([full_mask(n, 2) ^ diagonal_mask(n, 2) ^ s.masks[0]])


def _check_family(family: Sequence[Structure]) -> Structure:
    if not family:
        raise InvalidStructureError("empty family has no signature")
    first = family[0]
    for s in family[1:]:
        check_same_shape(first, s)
    return first


def union(family: Sequence[Structure]) -> Structure:
    first = _check_family(family)
    masks = list(first.masks)
    for s in family[1:]:
        masks = [m | o for m, o in zip(masks, s.masks)]
    return first.with_masks(masks)


def intersect(family: Sequence[Structure]) -> Structure:
    first = _check_family(family)
    masks = list(first.masks)
    for s in family[1:]:
        masks = [m & o for m, o in zip(masks, s.masks)]
    return first.with_masks(masks)


def is_subinterpretation(a: Structure, b: Structure) -> bool:
    """Componentwise inclusion a ⊆ b"""
    check_same_shape(a, b)
    return all(m & ~o == 0 for m, o in zip(a.masks, b.masks))


def direct_image(f: DomainMap, s: Structure) -> Structure:
    """f[s]: the tuples f(t) for t in s, over f's target domain"""
    if f.source_size != s.domain:
        raise DomainMismatchError(
            f"map starts from {f.source_size} points, structure has {s.domain}"
        )
    masks = [
        map_mask(mask, image_table(f.values, f.target_size, a))
        for a, mask in zip(s.arities, s.masks)
    ]
    return Structure(s.signature, f.target_size, tuple(masks))


def inverse_image(f: DomainMap, s: Structure) -> Structure:
    """f^-1[s]: the tuples t over f's source with f(t) in s"""
    if f.target_size != s.domain:
        raise DomainMismatchError(
            f"map lands in {f.target_size} points, structure has {s.domain}"
        )
    masks = []
    for a, mask in zip(s.arities, s.masks):
        table = image_table(f.values, f.target_size, a)
        out = 0
        for code, image in enumerate(table):
            if mask >> image & 1:
                out |= 1 << code
        masks.append(out)
    return Structure(s.signature, f.source_size, tuple(masks))


def induced_substructure(s: Structure, vertices: Iterable[int]) -> Structure:
    """Restriction of s to vertices, relabelled 0.. in increasing order"""
    chosen = sorted(set(vertices))
    if not chosen:
        raise InvalidStructureError("induced substructure needs at least one vertex")
    for v in chosen:
        if not 0 <= v < s.domain:
            raise DomainMismatchError(f"vertex {v} outside [0, {s.domain})")
    index = {v: i for i, v in enumerate(chosen)}
    m = len(chosen)
    masks = []
    for k, a in enumerate(s.arities):
        mask = 0
        for t in s.relation(k):
            if all(x in index for x in t):
                mask |= 1 << encode([index[x] for x in t], m)
        masks.append(mask)
    return Structure(s.signature, m, tuple(masks))
