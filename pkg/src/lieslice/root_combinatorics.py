"""Type-A root-system and partition combinatorics.

Partitions parameterize nilpotent orbits of gl_m; compositions parameterize
(ordered) Levi subalgebras; dominance is the closure order; induction of
nilpotent orbits is componentwise partition addition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache


class CombinatoricsError(ValueError):
    pass


@dataclass(frozen=True)
class Partition:
    parts: tuple

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise CombinatoricsError("partition parts must be positive")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise CombinatoricsError("partition parts must be weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self):
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __repr__(self):
        return f"Partition{self.parts}"

    def transpose(self):
        if not self.parts:
            return Partition(())
        out = [0] * self.parts[0]
        for p in self.parts:
            for i in range(p):
                out[i] += 1
        return Partition(tuple(out))

    def padded(self, length):
        return self.parts + (0,) * (length - len(self.parts))


def partition(*parts):
    return Partition(tuple(parts))


@lru_cache(maxsize=None)
def partitions_of(n):
    """All partitions of n, lexicographically decreasing, as a tuple."""
    if n == 0:
        return (Partition(()),)
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(Partition(tuple(prefix)))
            return
        for p in range(min(maxpart, remaining), 0, -1):
            rec(remaining - p, p, prefix + [p])

    rec(n, n, [])
    return tuple(out)


def compositions_of(n):
    """All ordered compositions of n."""
    if n == 0:
        return [()]
    out = []
    for first in range(1, n + 1):
        for rest in compositions_of(n - first):
            out.append((first,) + rest)
    return out


def dominance_leq(a: Partition, b: Partition) -> bool:
    """True iff a <= b in dominance order (partial sums, zero padded)."""
    if a.size != b.size:
        raise CombinatoricsError("dominance compares partitions of the same integer")
    length = max(len(a), len(b))
    pa = a.padded(length)
    pb = b.padded(length)
    sa = sb = 0
    for x, y in zip(pa, pb):
        sa += x
        sb += y
        if sa > sb:
            return False
    return True


def centralizer_dimension(lam: Partition) -> int:
    """dim of the gl_m-centralizer of a nilpotent of type lam.

    Equals sum_i (2i-1) lam_i = sum_j (lam^t_j)^2; cross-validated against
    exact kernel ranks in the test-suite.
    """
    return sum((2 * i + 1) * p for i, p in enumerate(lam.parts))


def orbit_dimension(lam: Partition, m: int) -> int:
    """Dimension of the GL_m-orbit of a nilpotent of type lam."""
    if lam.size != m:
        raise CombinatoricsError("partition does not partition m")
    return m * m - centralizer_dimension(lam)


@dataclass(frozen=True)
class RootSystemA:
    """Roots of gl_n: alpha_ij = e_i - e_j for i != j."""

    n: int

    def positive_roots(self):
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n)]

    def roots(self):
        return [(i, j) for i in range(self.n) for j in range(self.n) if i != j]

    def simple_roots(self):
        return [(i, i + 1) for i in range(self.n - 1)]

    @staticmethod
    def evaluate(root, diag):
        i, j = root
        return diag[i] - diag[j]


@dataclass(frozen=True)
class LeviSubset:
    """Levi of gl_n given by an ordered composition of block sizes."""

    n: int
    blocks: tuple

    def __post_init__(self):
        blocks = tuple(int(b) for b in self.blocks)
        if any(b <= 0 for b in blocks):
            raise CombinatoricsError("block sizes must be positive")
        if sum(blocks) != self.n:
            raise CombinatoricsError("blocks must sum to n")
        object.__setattr__(self, "blocks", blocks)

    def block_ranges(self):
        out = []
        start = 0
        for b in self.blocks:
            out.append(range(start, start + b))
            start += b
        return out

    def as_multiset(self):
        return tuple(sorted(self.blocks, reverse=True))

    def nilradical_dimension(self):
        """dim of the nilradical of any parabolic with this Levi."""
        n = self.n
        return (n * n - sum(b * b for b in self.blocks)) // 2


@dataclass(frozen=True)
class LeviOrbitPair:
    blocks: tuple
    orbit_parts: tuple

    def __post_init__(self):
        blocks = tuple(int(b) for b in self.blocks)
        orbits = tuple(
            p if isinstance(p, Partition) else Partition(tuple(p))
            for p in self.orbit_parts
        )
        if len(blocks) != len(orbits):
            raise CombinatoricsError("one orbit partition per block required")
        for b, p in zip(blocks, orbits):
            if p.size != b:
                raise CombinatoricsError(f"partition {p} does not partition block {b}")
        object.__setattr__(self, "blocks", blocks)
        object.__setattr__(self, "orbit_parts", orbits)

    @property
    def n(self):
        return sum(self.blocks)


def ls_induce(pair: LeviOrbitPair) -> Partition:
    """Lusztig-Spaltenstein induction in type A.

    Pad the block partitions with zeros to a common length, add them
    componentwise, and sort decreasingly.  Validated against the dimension
    identity dim Ind = dim O + 2 dim u(p) and a small-n saturation oracle.
    """
    length = max(len(p) for p in pair.orbit_parts) if pair.orbit_parts else 0
    length = max(length, 1)
    total = [0] * length
    for p in pair.orbit_parts:
        for i, x in enumerate(p.padded(length)):
            total[i] += x
    total = [x for x in sorted(total, reverse=True) if x > 0]
    return Partition(tuple(total))


def richardson(blocks) -> Partition:
    """Richardson orbit of the parabolic with the given Levi blocks."""
    blocks = tuple(int(b) for b in blocks)
    pair = LeviOrbitPair(blocks, tuple(Partition((1,) * b) for b in blocks))
    return ls_induce(pair)


def induced_orbit_dimension(pair: LeviOrbitPair) -> int:
    """dim O + 2 dim u(p); must equal orbit_dimension(ls_induce(pair), n)."""
    levi = LeviSubset(pair.n, pair.blocks)
    base = sum(orbit_dimension(p, b) for p, b in zip(pair.orbit_parts, pair.blocks))
    return base + 2 * levi.nilradical_dimension()


def weyl_orbit(diag, levi: LeviSubset):
    """Orbit of a diagonal vector under the block permutation group W_I."""
    diag = tuple(diag)
    if len(diag) != levi.n:
        raise CombinatoricsError("vector length does not match n")
    per_block = []
    for rng in levi.block_ranges():
        seg = tuple(diag[i] for i in rng)
        per_block.append(sorted(set(itertools.permutations(seg))))
    out = set()
    for combo in itertools.product(*per_block):
        flat = tuple(x for seg in combo for x in seg)
        out.add(flat)
    return out
