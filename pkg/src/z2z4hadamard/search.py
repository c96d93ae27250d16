"""Backtracking search for coordinate permutations mapping one code onto another.

Source coordinates are assigned in a fixed order.  After each assignment the
multiset of partial codeword patterns on the assigned source coordinates must
equal the multiset of patterns on their images; at full depth this is exactly
sigma(C1) = C2.  Optional invariants prune further:

* ``labels``: per-coordinate invariant values that must agree;
* ``blocks``: a partition on each side whose "same class" relation must be
  preserved (e.g. equal kernel columns, which every equivalence preserves);
* ``allowed``: explicit candidate sets per source coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .codes import BinaryCode


@dataclass
class SearchStats:
    nodes: int = 0
    solutions: int = 0


@dataclass
class PermSearch:
    code1: BinaryCode
    code2: BinaryCode
    labels1: Sequence | None = None
    labels2: Sequence | None = None
    blocks1: Sequence[int] | None = None
    blocks2: Sequence[int] | None = None
    allowed: Sequence[Sequence[int]] | None = None
    stats: SearchStats = field(default_factory=SearchStats)

    def __post_init__(self) -> None:
        if self.code1.n != self.code2.n:
            raise ValueError("codes have different lengths")
        self.n = self.code1.n
        self._w1 = sorted(self.code1.words)
        self._w2 = sorted(self.code2.words)

    def solutions(self, fixed: dict[int, int] | None = None, order: Sequence[int] | None = None) -> Iterator[list[int]]:
        """Yield image lists (source i -> images[i]) in lexicographic DFS order.

        With the natural ``order`` the first solution is the lexicographically
        least image list.
        """
        n = self.n
        if len(self._w1) != len(self._w2):
            return
        fixed = dict(fixed or {})
        order = list(range(n)) if order is None else list(order)
        if sorted(order) != list(range(n)):
            raise ValueError("order must be a permutation of the coordinates")
        # source-side sorted pattern multisets depend only on the depth
        keys1 = [0] * len(self._w1)
        sorted1 = []
        for depth, s in enumerate(order):
            keys1 = [k | (((w >> s) & 1) << depth) for k, w in zip(keys1, self._w1)]
            sorted1.append(sorted(keys1))

        images = [-1] * n
        used = [False] * n
        w2 = self._w2
        lab1, lab2 = self.labels1, self.labels2
        b1, b2 = self.blocks1, self.blocks2
        stats = self.stats

        def candidates(s: int) -> Sequence[int]:
            if s in fixed:
                return (fixed[s],)
            if self.allowed is not None:
                return self.allowed[s]
            return range(n)

        def rec(depth: int, keys2: list[int]) -> Iterator[list[int]]:
            if depth == n:
                stats.solutions += 1
                yield list(images)
                return
            s = order[depth]
            target = sorted1[depth]
            for t in candidates(s):
                if used[t]:
                    continue
                if lab1 is not None and lab1[s] != lab2[t]:
                    continue
                if b1 is not None:
                    ok = True
                    for j in range(depth):
                        sj = order[j]
                        if (b1[s] == b1[sj]) != (b2[t] == b2[images[sj]]):
                            ok = False
                            break
                    if not ok:
                        continue
                stats.nodes += 1
                new = [k | (((w >> t) & 1) << depth) for k, w in zip(keys2, w2)]
                if sorted(new) != target:
                    continue
                images[s] = t
                used[t] = True
                yield from rec(depth + 1, new)
                used[t] = False
                images[s] = -1

        yield from rec(0, [0] * len(w2))

    def first(self, fixed: dict[int, int] | None = None, order: Sequence[int] | None = None) -> list[int] | None:
        return next(self.solutions(fixed, order), None)
