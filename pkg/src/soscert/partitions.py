"""Fixed-length integer partitions, the dominance order, and step chains.

A partition of weight d into at most n parts is stored as a weakly
decreasing length-n tuple of nonnegative ints (zero-padded).  One
partition steps down to another when a single unit moves from an
earlier part to a later one; dominance is the reflexive transitive
closure of that step relation, tested here through the equivalent
prefix-sum criterion.

find_chain materializes an explicit step chain between two comparable
partitions: greedy unit transfers, with a breadth-first fallback that is
always correct.  Any valid chain is acceptable; the greedy rule only
pins down which one we emit.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Optional, Sequence

from .errors import DomainError, InputError

Partition = tuple[int, ...]
StepWitness = tuple[int, int]  # 0-based indices (k, l), k < l


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate and normalize to a tuple; raises InputError when invalid."""
    p = tuple(parts)
    if not p:
        raise InputError("a partition needs at least one part")
    if any((not isinstance(v, int)) or isinstance(v, bool) or v < 0 for v in p):
        raise InputError(f"partition parts must be nonnegative integers, got {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise InputError(f"partition parts must be weakly decreasing, got {p}")
    return p


def weight(p: Sequence[int]) -> int:
    return sum(p)


def _check_pair(a: Iterable[int], b: Iterable[int]) -> tuple[Partition, Partition]:
    pa, pb = as_partition(a), as_partition(b)
    if len(pa) != len(pb):
        raise InputError(f"length mismatch: {len(pa)} vs {len(pb)}")
    if sum(pa) != sum(pb):
        raise InputError(f"weight mismatch: {sum(pa)} vs {sum(pb)}")
    return pa, pb


def dominates(a: Iterable[int], b: Iterable[int]) -> bool:
    """True iff every prefix sum of a is >= the matching prefix sum of b."""
    pa, pb = _check_pair(a, b)
    sa = sb = 0
    for va, vb in zip(pa, pb):
        sa += va
        sb += vb
        if sa < sb:
            return False
    return True


def is_step(a: Iterable[int], b: Iterable[int]) -> Optional[StepWitness]:
    """The witness (k, l) when b is a single unit transfer below a, else None."""
    pa, pb = _check_pair(a, b)
    diffs = [i for i in range(len(pa)) if pa[i] != pb[i]]
    if len(diffs) != 2:
        return None
    k, l = diffs
    if pb[k] == pa[k] - 1 and pb[l] == pa[l] + 1:
        return (k, l)
    return None


def step_children(p: Iterable[int]) -> list[Partition]:
    """All partitions reachable from p by one unit transfer."""
    pp = as_partition(p)
    n = len(pp)
    out = []
    for k in range(n):
        for l in range(k + 1, n):
            c = list(pp)
            c[k] -= 1
            c[l] += 1
            if c[k] >= 0 and all(c[i] >= c[i + 1] for i in range(n - 1)):
                out.append(tuple(c))
    return out


def _greedy_move(c: list[int], target: Partition) -> Optional[StepWitness]:
    """One unit transfer toward `target` that keeps c a partition.

    k is the largest index whose part exceeds both target and its right
    neighbor (so the decrement preserves weak decrease); l is the
    smallest later index short of target whose increment also fits.
    """
    n = len(c)
    for k in range(n - 1, -1, -1):
        if c[k] <= target[k]:
            continue
        if k + 1 < n and c[k] <= c[k + 1]:
            continue
        for l in range(k + 1, n):
            if c[l] >= target[l]:
                continue
            left = c[l - 1] - 1 if l - 1 == k else c[l - 1]
            if c[l] + 1 <= left:
                return (k, l)
        return None
    return None


def _bfs_chain(a: Partition, b: Partition) -> Optional[list[Partition]]:
    """Shortest step chain from a to b, or None when unreachable."""
    if a == b:
        return [a]
    parent: dict[Partition, Partition] = {a: a}
    queue = deque([a])
    while queue:
        cur = queue.popleft()
        for child in step_children(cur):
            if child in parent:
                continue
            parent[child] = cur
            if child == b:
                chain = [child]
                while chain[-1] != a:
                    chain.append(parent[chain[-1]])
                chain.reverse()
                return chain
            queue.append(child)
    return None


def find_chain(a: Iterable[int], b: Iterable[int]) -> list[Partition]:
    """Step chain a = c_0 -> c_1 -> ... -> c_N = b of unit transfers.

    Raises DomainError when a does not dominate b.  The result has N = 0
    exactly when a == b.
    """
    pa, pb = _check_pair(a, b)
    if not dominates(pa, pb):
        raise DomainError(f"{pa} does not dominate {pb}; no chain exists")
    chain = [pa]
    c = list(pa)
    while tuple(c) != pb:
        move = _greedy_move(c, pb)
        if move is None:
            fallback = _bfs_chain(pa, pb)
            if fallback is None:  # unreachable given dominance, kept for safety
                raise DomainError(f"no step chain from {pa} to {pb}")
            return fallback
        k, l = move
        c[k] -= 1
        c[l] += 1
        chain.append(tuple(c))
    return chain
