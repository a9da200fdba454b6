"""Integer-partition arithmetic over cycle types.

A partition of n stands for the cycle type of a permutation.  The subset-sum
structure of a partition decides which intransitive subgroups its class
meets, so the workhorse here is a bit-mask subset-sum table: bit i of
``partial_sum_mask(p)`` is set exactly when some sub-multiset of the parts
sums to i.  Python integers serve as the fixed-width bit arrays.
"""

from __future__ import annotations

from collections import Counter
from enum import Enum
from functools import lru_cache
from math import gcd
from typing import Iterable, Iterator


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"


class Partition:
    """A weakly decreasing tuple of positive integers.

    Multiplicities are always expanded: ``Partition([2, 2, 1])`` has three
    parts, and equality/hashing see exactly the part tuple.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int]):
        ps = tuple(sorted(parts, reverse=True))
        if not ps:
            raise ValueError("a partition needs at least one part")
        if ps[-1] < 1:
            raise ValueError(f"parts must be positive, got {ps}")
        self.parts: tuple[int, ...] = ps

    @property
    def n(self) -> int:
        return sum(self.parts)

    def multiplicity(self, value: int) -> int:
        return self.parts.count(value)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __lt__(self, other: "Partition") -> bool:
        return self.parts < other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition('{self}')"

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    @classmethod
    def from_string(cls, text: str) -> "Partition":
        """Parse the serialized form, comma-separated decreasing parts."""
        return cls(int(tok) for tok in text.split(","))


def _desc_parts(remaining: int, max_part: int) -> Iterator[tuple[int, ...]]:
    if remaining == 0:
        yield ()
        return
    for first in range(min(max_part, remaining), 0, -1):
        for rest in _desc_parts(remaining - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """All partitions of n, descending lexicographic: (n) first, (1^n) last."""
    if n < 1:
        raise ValueError("need n >= 1")
    for parts in _desc_parts(n, n):
        yield Partition(parts)


@lru_cache(maxsize=None)
def partial_sum_mask(p: Partition) -> int:
    """Bit mask of the subset sums of p (bit 0 and bit n always set)."""
    mask = 1
    for part in p.parts:
        mask |= mask << part
    return mask


def partial_sum_set(p: Partition) -> frozenset[int]:
    mask = partial_sum_mask(p)
    return frozenset(i for i in range(p.n + 1) if mask >> i & 1)


def is_partial_sum(p: Partition, i: int) -> bool:
    return bool(partial_sum_mask(p) >> i & 1)


def parity(p: Partition) -> Parity:
    """Sign of a permutation with this cycle type."""
    return Parity.EVEN if (p.n - len(p)) % 2 == 0 else Parity.ODD


def is_even_type(p: Partition) -> bool:
    return (p.n - len(p)) % 2 == 0


def has_distinct_odd_parts(p: Partition) -> bool:
    """True when the class splits in the alternating group."""
    return all(part % 2 == 1 for part in p.parts) and len(set(p.parts)) == len(p.parts)


def power_type(p: Partition, k: int) -> Partition:
    """Cycle type of the k-th power: a part l becomes gcd(l,k) parts l/gcd(l,k)."""
    if k < 1:
        raise ValueError("need k >= 1")
    out: list[int] = []
    for part in p.parts:
        g = gcd(part, k)
        out.extend([part // g] * g)
    return Partition(out)


def fixed_points(p: Partition) -> int:
    return p.multiplicity(1)


class PartExtensionError(ValueError):
    """The part-extension hypotheses fail."""


def extend_with_part(p: Partition, T: int, S: Iterable[int]) -> Partition:
    """Append one part of length T, preserving density of small partial sums.

    Requires that every i in 1..floor(N/2) outside S is already a partial sum
    of p, and that T <= N - 2*max(S) - 2 (N+T even) or N - 2*max(S) - 1
    (N+T odd), with max(S) = -1 for empty S.  Under those hypotheses every
    i in 1..floor((N+T)/2) outside S is a partial sum of the result.
    """
    N = p.n
    s_set = frozenset(S)
    if any(i < 1 or i > N // 2 for i in s_set):
        raise PartExtensionError(f"S must lie in 1..{N // 2}, got {sorted(s_set)}")
    if T < 1:
        raise PartExtensionError("need T >= 1")
    mask = partial_sum_mask(p)
    missing = [i for i in range(1, N // 2 + 1) if i not in s_set and not mask >> i & 1]
    if missing:
        raise PartExtensionError(f"partial sums {missing} required below {N // 2} are absent")
    max_s = max(s_set, default=-1)
    bound = N - 2 * max_s - (2 if (N + T) % 2 == 0 else 1)
    if T > bound:
        raise PartExtensionError(f"T={T} exceeds the admissible bound {bound}")
    return Partition(p.parts + (T,))


def enumerate_partitions_with_sums_in(n: int, allowed: Iterable[int]) -> list[Partition]:
    """Exactly the partitions of n whose partial sums all lie in ``allowed``.

    ``allowed`` must contain 0 and n and be closed under i -> n - i.
    Backtracks over weakly decreasing parts, pruning on the incremental
    subset-sum mask, so tiny allowed sets are resolved without touching the
    full partition list.
    """
    a_set = frozenset(allowed)
    if 0 not in a_set or n not in a_set:
        raise ValueError("allowed must contain 0 and n")
    if any(not 0 <= i <= n for i in a_set):
        raise ValueError("allowed must lie within 0..n")
    if any(n - i not in a_set for i in a_set):
        raise ValueError("allowed must be closed under complement")
    a_mask = 0
    for i in a_set:
        a_mask |= 1 << i
    out: list[Partition] = []
    acc: list[int] = []

    def rec(remaining: int, max_part: int, mask: int) -> None:
        if remaining == 0:
            out.append(Partition(acc))
            return
        for part in range(min(max_part, remaining), 0, -1):
            if not a_mask >> part & 1:
                continue
            new_mask = mask | mask << part
            if new_mask & ~a_mask:
                continue
            acc.append(part)
            rec(remaining - part, part, new_mask)
            acc.pop()

    rec(n, n, 1)
    return out


def even_class_partitions(n: int) -> list[Partition]:
    """Partitions of n defining even permutations, identity excluded."""
    one_n = (1,) * n
    return [p for p in enumerate_partitions(n) if is_even_type(p) and p.parts != one_n]


def multiplicities(p: Partition) -> dict[int, int]:
    return dict(Counter(p.parts))
