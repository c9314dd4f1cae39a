from __future__ import annotations

import heapq
import random

from tkcore.models.graph import pair_key
from tkcore.models.tel import TEL


class DegreeState:
    """Distinct-neighbor degrees and pair multiplicities of a TEL.

    `degree[v]` counts neighbors, not edges: a pair only contributes once
    however many parallel edges link it. The heap is lazy; an entry is
    current only while its key still equals `degree[v]`.
    """

    __slots__ = ("pair_count", "degree", "_heap", "_rng")

    def __init__(self, tie_seed: int | None = None):
        self.pair_count: dict[tuple[int, int], int] = {}
        self.degree: dict[int, int] = {}
        self._heap: list[tuple[int, float, int]] = []
        self._rng = random.Random(tie_seed) if tie_seed is not None else None

    @classmethod
    def from_tel(cls, tel: TEL, tie_seed: int | None = None) -> DegreeState:
        state = cls(tie_seed)
        pair_count = state.pair_count
        degree = state.degree
        for node in tel.edges():
            key = pair_key(node.u, node.v)
            count = pair_count.get(key, 0)
            pair_count[key] = count + 1
            if count == 0:
                degree[node.u] = degree.get(node.u, 0) + 1
                degree[node.v] = degree.get(node.v, 0) + 1
        state._rebuild_heap()
        return state

    def copy(self) -> DegreeState:
        other = DegreeState.__new__(DegreeState)
        other.pair_count = dict(self.pair_count)
        other.degree = dict(self.degree)
        other._rng = self._rng
        other._rebuild_heap()
        return other

    def _tie(self, v: int) -> float:
        return self._rng.random() if self._rng is not None else v

    def _rebuild_heap(self) -> None:
        self._heap = [(d, self._tie(v), v) for v, d in self.degree.items()]
        heapq.heapify(self._heap)

    def remove_edge(self, u: int, v: int) -> int:
        """Account for one deleted (u, v) edge; return the pair's new count."""
        key = pair_key(u, v)
        count = self.pair_count[key] - 1
        if count:
            self.pair_count[key] = count
            return count
        del self.pair_count[key]
        degree = self.degree
        for w in (u, v):
            d = degree.get(w)
            if d is None:
                continue
            if d == 1:
                # orphans leave the state silently
                del degree[w]
            else:
                degree[w] = d - 1
                heapq.heappush(self._heap, (d - 1, self._tie(w), w))
        return 0

    def pop_below(self, k: int) -> int | None:
        """Pop and forget a live vertex with degree < k, if any."""
        heap = self._heap
        degree = self.degree
        while heap:
            d, _, v = heap[0]
            if degree.get(v) != d:
                heapq.heappop(heap)
                continue
            if d >= k:
                return None
            heapq.heappop(heap)
            del degree[v]
            return v
        return None

    def min_degree(self) -> int | None:
        heap = self._heap
        while heap:
            d, _, v = heap[0]
            if self.degree.get(v) == d:
                return d
            heapq.heappop(heap)
        return None

    def count(self, u: int, v: int) -> int:
        return self.pair_count.get(pair_key(u, v), 0)

    def weak_pairs(self, sigma: int) -> list[tuple[int, int]]:
        return [key for key, count in self.pair_count.items()
                if count < sigma]

    def __len__(self) -> int:
        return len(self.degree)


def init_state(tel: TEL, tie_seed: int | None = None) -> DegreeState:
    return DegreeState.from_tel(tel, tie_seed)
