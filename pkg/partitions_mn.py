"""Partitions, hooks, rim hooks, q-cores and the Murnaghan-Nakayama rule.

Nodes are 1-based (row i, column j).
"""

from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod

from errors import NotAHook, SizeMismatch


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x < 1 for x in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"not a partition: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts):
        return cls(tuple(parts))

    @property
    def n(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def row(self, i):
        """lambda_i (1-based), 0 past the last row."""
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def nodes(self):
        return [(i, j) for i in range(1, len(self.parts) + 1) for j in range(1, self.parts[i - 1] + 1)]

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class HookData:
    corner: tuple
    length: int
    hand: tuple
    foot: tuple


def partitions_of(n):
    """All partitions of n in increasing lexicographic order, (1^n) first."""
    def build(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in build(remaining - first, first):
                yield (first,) + rest
    return sorted(Partition(p) for p in build(n, n))


def conjugate(lam):
    if not lam.parts:
        return lam
    return Partition(tuple(sum(1 for x in lam.parts if x >= j) for j in range(1, lam.parts[0] + 1)))


def hook(lam, i, j):
    if not (1 <= i <= len(lam) and 1 <= j <= lam.row(i)):
        raise NotAHook(f"node ({i},{j}) is not in {lam}")
    foot_row = conjugate(lam).row(j)
    length = (lam.row(i) - j) + (foot_row - i) + 1
    return HookData(corner=(i, j), length=length, hand=(i, lam.row(i)), foot=(foot_row, j))


def hooks_of_length(lam, q):
    return [h for h in (hook(lam, i, j) for i, j in lam.nodes()) if h.length == q]


def remove_rim_hook(lam, corner, q):
    """Delete the rim q-hook of the hook at corner; return (partition, leg length)."""
    i, j = corner
    h = hook(lam, i, j)
    if h.length != q:
        raise NotAHook(f"hook at {corner} of {lam} has length {h.length}, not {q}")
    foot_row = h.foot[0]
    parts = list(lam.parts)
    # rows i..foot-1 slide up to the shortened row below; the foot row ends before column j
    new = parts[:i - 1] + [parts[r] - 1 for r in range(i, foot_row)] + [j - 1] + parts[foot_row:]
    return Partition(tuple(x for x in new if x > 0)), foot_row - i


def q_core(lam, q):
    while True:
        found = hooks_of_length(lam, q)
        if not found:
            return lam
        lam, _ = remove_rim_hook(lam, found[0].corner, q)


def q_core_by_all_orders(lam, q):
    """Every partition reachable as a terminal point of rim q-hook removal."""
    found = hooks_of_length(lam, q)
    if not found:
        return {lam}
    results = set()
    for h in found:
        smaller, _ = remove_rim_hook(lam, h.corner, q)
        results |= q_core_by_all_orders(smaller, q)
    return results


def sign(mu):
    return -1 if (mu.n - len(mu)) % 2 else 1


@lru_cache(maxsize=None)
def _mn(lam_parts, mu_parts):
    if not mu_parts:
        return 1
    lam = Partition(lam_parts)
    q, rest = mu_parts[0], mu_parts[1:]
    total = 0
    for h in hooks_of_length(lam, q):
        smaller, leg = remove_rim_hook(lam, h.corner, q)
        total += (-1) ** leg * _mn(smaller.parts, rest)
    return total


def mn_character(lam, mu):
    """chi^lambda at the class of cycle type mu."""
    if lam.n != mu.n:
        raise SizeMismatch(f"|{lam}| = {lam.n} but |{mu}| = {mu.n}")
    return _mn(lam.parts, mu.parts)


def degree_hook_length(lam):
    return factorial(lam.n) // prod(hook(lam, i, j).length for i, j in lam.nodes())


def mn_table(n):
    """(partitions, values) with values[r][c] = chi^{partitions[r]}(partitions[c])."""
    parts = partitions_of(n)
    return parts, [[mn_character(lam, mu) for mu in parts] for lam in parts]


def cycle_type(perm):
    lengths = [len(c) for c in perm.cycles()]
    lengths += [1] * (perm.degree - sum(lengths))
    return Partition(tuple(sorted(lengths, reverse=True)))


@dataclass(frozen=True)
class CoreWitness:
    partition: Partition
    core: Partition
    trivial_core: Partition

    @property
    def separated(self):
        return self.core != self.trivial_core


def alternating_block_witness(n, q=3):
    """A partition of n whose q-core differs from that of (n).

    (n-1,1) when q does not divide n, otherwise (n-2,2); the characters of
    these partitions restrict irreducibly to A_n and land outside its
    principal q-block whenever the cores differ.
    """
    if n < 4:
        raise SizeMismatch(f"need n >= 4, got {n}")
    lam = Partition.of(n - 1, 1) if n % q else Partition.of(n - 2, 2)
    return CoreWitness(lam, q_core(lam, q), q_core(Partition.of(n), q))
