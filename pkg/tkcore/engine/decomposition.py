"""Temporal core decomposition on a TEL.

A TCD call truncates the TEL to the target interval and then peels every
vertex with fewer than k distinct neighbors. Because it is valid on any
temporal k-core whose interval encloses the target, callers chain it:
each result is the input of the next, narrower call.
"""
from __future__ import annotations

import heapq
from typing import Mapping

from tkcore.models.degree import DegreeState
from tkcore.models.tel import TEL, EdgeNode
from tkcore.schemas.interval import TimeInterval


class _Trimmer:
    """Deletes edges from a (TEL, DegreeState) pair and keeps both in step."""

    __slots__ = ("tel", "state", "sigma", "weak")

    def __init__(self, tel: TEL, state: DegreeState, sigma: int):
        self.tel = tel
        self.state = state
        self.sigma = sigma
        self.weak: list[tuple[int, int]] = []

    def delete(self, node: EdgeNode) -> None:
        tel = self.tel
        tel.del_edge(node)
        tl = node.tl
        if not tl.edges and tl.linked:
            tel.del_tl(tl)
        remaining = self.state.remove_edge(node.u, node.v)
        if 0 < remaining < self.sigma:
            self.weak.append((node.u, node.v))

    def delete_vertex(self, v: int) -> None:
        tel = self.tel
        incident = list(tel.get_sl(v)) + list(tel.get_dl(v))
        for node in incident:
            if node.alive:
                self.delete(node)

    def delete_pair(self, u: int, v: int) -> None:
        """Remove every remaining parallel edge between u and v."""
        tel = self.tel
        linked = [node for node in tel.get_sl(u) if node.v == v]
        linked += [node for node in tel.get_dl(u) if node.u == v]
        for node in linked:
            if node.alive:
                self.delete(node)

    def drain_weak(self) -> None:
        while self.weak:
            u, v = self.weak.pop()
            if self.state.count(u, v):
                self.delete_pair(u, v)


def tcd(tel: TEL, state: DegreeState, k: int, target: TimeInterval,
        sigma: int = 1) -> TimeInterval | None:
    """Trim `tel` in place to the temporal k-core of `target`.

    With sigma > 1 a pair whose parallel-edge count drops below sigma loses
    all its remaining edges; pairs that are already weak after truncation
    are swept before peeling starts. Returns the TTI of the result, or None
    when nothing survives.
    """
    trimmer = _Trimmer(tel, state, sigma)

    # truncation: whole TLs outside the target, edges first then the TL
    while tel.head is not None and tel.head.t < target.ts:
        _drop_tl(trimmer, tel.head)
    while tel.tail is not None and tel.tail.t > target.te:
        _drop_tl(trimmer, tel.tail)

    if sigma > 1:
        trimmer.weak.extend(state.weak_pairs(sigma))
        trimmer.drain_weak()

    # decomposition
    while True:
        v = state.pop_below(k)
        if v is None:
            break
        trimmer.delete_vertex(v)
        trimmer.drain_weak()

    return tel.get_tti()


def _drop_tl(trimmer: _Trimmer, tl) -> None:
    for node in tl.edges:
        trimmer.delete(node)
    if tl.linked:
        trimmer.tel.del_tl(tl)


def simple_core_decompose(adjacency: Mapping[int, set[int]], k: int
                          ) -> set[int]:
    """k-core vertex set of a simple undirected graph."""
    degree = {v: len(nbrs) for v, nbrs in adjacency.items()}
    heap = [(d, v) for v, d in degree.items()]
    heapq.heapify(heap)
    removed: set[int] = set()
    while heap:
        d, v = heapq.heappop(heap)
        if v in removed or d != degree[v]:
            continue
        if d >= k:
            break
        removed.add(v)
        for w in adjacency[v]:
            if w not in removed:
                degree[w] -= 1
                heapq.heappush(heap, (degree[w], w))
    return {v for v in adjacency if v not in removed}
