"""Enumeration schedule and TTI-based pruning.

The schedule is the upper triangle of (row, column) cells over the
timeline domain, row = start time and column = end time. Once the core of
a cell is known, its TTI predicts whole groups of cells whose cores are
identical to a core that is (or will be) induced elsewhere:

  PoR  same row, columns [tti.te, cell.te - 1]
  PoU  rows (cell.ts, tti.ts], columns [row, cell.te]
  PoL  rows (tti.ts, tti.te], columns [tti.te + 1, cell.te]

PoR needs tti.te < cell.te, PoU needs tti.ts > cell.ts and PoL needs both.

Covered columns are kept per row as disjoint, merged intervals of
timestamp values snapped to the domain.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from typing import Sequence

from tkcore.schemas.interval import TimeInterval
from tkcore.schemas.stats import PRUNING_RULES


class PruneSchedule:

    def __init__(self, domain: Sequence[int]):
        self.domain: list[int] = list(domain)
        self._pos = {t: i for i, t in enumerate(self.domain)}
        self.pruned: dict[int, list[tuple[int, int]]] = {}
        self.covered = {rule: 0 for rule in PRUNING_RULES}
        self.triggers = {rule: 0 for rule in PRUNING_RULES}

    @property
    def total_cells(self) -> int:
        n = len(self.domain)
        return n * (n + 1) // 2

    def rows_between(self, lo: int, hi: int) -> list[int]:
        """Domain rows r with lo < r <= hi."""
        return self.domain[bisect_right(self.domain, lo):
                           bisect_right(self.domain, hi)]

    def cover(self, row: int, lo: int, hi: int) -> int:
        """Mark columns [lo, hi] of `row`; return how many cells were new."""
        domain, pos = self.domain, self._pos
        a = bisect_left(domain, max(lo, row))
        b = bisect_right(domain, hi) - 1
        if a > b:
            return 0
        new = b - a + 1
        first, last = a, b
        kept: list[tuple[int, int]] = []
        for s, e in self.pruned.get(row, ()):
            i, j = pos[s], pos[e]
            if j < a - 1 or i > b + 1:
                kept.append((s, e))
                continue
            new -= max(0, min(j, b) - max(i, a) + 1)
            first, last = min(first, i), max(last, j)
        kept.append((domain[first], domain[last]))
        kept.sort()
        self.pruned[row] = kept
        return new

    def is_pruned(self, row: int, col: int) -> bool:
        for s, e in self.pruned.get(row, ()):
            if s <= col <= e:
                return True
        return False

    def next_unpruned_column(self, row: int, start: int) -> int | None:
        """Largest domain column c <= start, c >= row, not covered."""
        i = bisect_right(self.domain, start) - 1
        lowest = bisect_left(self.domain, row)
        pos = self._pos
        for s, e in reversed(self.pruned.get(row, ())):
            if i < lowest:
                break
            if pos[s] <= i <= pos[e]:
                i = pos[s] - 1
        if i < lowest:
            return None
        return self.domain[i]

    def intervals(self, row: int) -> list[TimeInterval]:
        return [TimeInterval(ts=s, te=e) for s, e in self.pruned.get(row, ())]

    def covered_cells(self) -> set[tuple[int, int]]:
        cells = set()
        for row, spans in self.pruned.items():
            for s, e in spans:
                for c in self.domain[self._pos[s]:self._pos[e] + 1]:
                    cells.add((row, c))
        return cells


def apply_pruning(schedule: PruneSchedule, cell: TimeInterval,
                  tti: TimeInterval, range_end: int) -> None:
    """Record the cells that `cell`'s TTI proves redundant."""
    end = min(cell.te, range_end)
    if tti.te < cell.te:
        schedule.triggers["PoR"] += 1
        schedule.covered["PoR"] += schedule.cover(
            cell.ts, tti.te, cell.te - 1)
    if tti.ts > cell.ts:
        schedule.triggers["PoU"] += 1
        for r in schedule.rows_between(cell.ts, tti.ts):
            schedule.covered["PoU"] += schedule.cover(r, r, end)
    if tti.ts > cell.ts and tti.te < cell.te:
        rows = schedule.rows_between(tti.ts, tti.te)
        if rows:
            schedule.triggers["PoL"] += 1
        for r in rows:
            schedule.covered["PoL"] += schedule.cover(r, tti.te + 1, end)
