"""Temporal Edge List.

Every edge is stored once and threaded onto three doubly linked lists:
the Time List of its timestamp, the Source List of `u` and the
Destination List of `v`. Time Lists are themselves linked into an
ascending timeline, so the head and tail give the tightest time interval
of whatever the structure currently holds.
"""
from __future__ import annotations

from collections import Counter
from typing import Iterator

from tkcore.core.errors import OutOfOrderAppendError
from tkcore.models.graph import TemporalEdge, TemporalGraph
from tkcore.schemas.interval import TimeInterval

# Offsets of the (prev, next) pair of each axis inside EdgeNode.links.
TL_AXIS = 0
SL_AXIS = 2
DL_AXIS = 4


class EdgeNode:
    __slots__ = ("u", "v", "t", "tl", "links", "alive")

    def __init__(self, u: int, v: int, t: int, tl: TLNode):
        self.u = u
        self.v = v
        self.t = t
        self.tl = tl
        self.links: list[EdgeNode | None] = [None] * 6
        self.alive = True

    def as_edge(self) -> TemporalEdge:
        return TemporalEdge(self.u, self.v, self.t)

    def __repr__(self) -> str:
        state = "" if self.alive else " dead"
        return f"<EdgeNode ({self.u},{self.v},{self.t}){state}>"


class EdgeChain:
    """Intrusive list of EdgeNodes along one axis."""

    __slots__ = ("axis", "head", "tail", "size")

    def __init__(self, axis: int):
        self.axis = axis
        self.head: EdgeNode | None = None
        self.tail: EdgeNode | None = None
        self.size = 0

    def append(self, node: EdgeNode) -> None:
        p = self.axis
        node.links[p] = self.tail
        node.links[p + 1] = None
        if self.tail is not None:
            self.tail.links[p + 1] = node
        else:
            self.head = node
        self.tail = node
        self.size += 1

    def unlink(self, node: EdgeNode) -> None:
        p = self.axis
        prev, nxt = node.links[p], node.links[p + 1]
        if prev is not None:
            prev.links[p + 1] = nxt
        else:
            self.head = nxt
        if nxt is not None:
            nxt.links[p] = prev
        else:
            self.tail = prev
        node.links[p] = node.links[p + 1] = None
        self.size -= 1

    def __iter__(self) -> Iterator[EdgeNode]:
        # the successor is read before yielding, so the caller may unlink
        # the node it was handed
        p = self.axis + 1
        node = self.head
        while node is not None:
            nxt = node.links[p]
            yield node
            node = nxt

    def __len__(self) -> int:
        return self.size

    def __bool__(self) -> bool:
        return self.size > 0


class TLNode:
    """One timestamp on the timeline, holding TL(t)."""

    __slots__ = ("t", "edges", "prev", "next", "linked")

    def __init__(self, t: int):
        self.t = t
        self.edges = EdgeChain(TL_AXIS)
        self.prev: TLNode | None = None
        self.next: TLNode | None = None
        self.linked = True

    def __repr__(self) -> str:
        return f"<TL {self.t}: {self.edges.size} edge(s)>"


class VertexLists:
    __slots__ = ("sl", "dl")

    def __init__(self):
        self.sl = EdgeChain(SL_AXIS)
        self.dl = EdgeChain(DL_AXIS)


class TEL:
    """Mutable temporal edge list trimmed in place by core decomposition.

    `counters` records how many times each manipulation ran and how many
    link words it rewrote (key "links"), so constant-cost claims can be
    checked without timing.
    """

    def __init__(self):
        self.head: TLNode | None = None
        self.tail: TLNode | None = None
        self.tl_index: dict[int, TLNode] = {}
        self.vertices: dict[int, VertexLists] = {}
        self.edge_count = 0
        self.counters: Counter[str] = Counter()

    # --- construction ---

    @classmethod
    def build(cls, graph: TemporalGraph) -> TEL:
        tel = cls()
        for u, v, t in graph.edges:
            tel._append(u, v, t)
        tel.counters["build"] += 1
        return tel

    def clone(self) -> TEL:
        """Deep copy with fresh handles; list orders are preserved."""
        copy = TEL()
        for node in self.edges():
            copy._append(node.u, node.v, node.t)
        copy.counters["clone"] += 1
        return copy

    def add_tl(self, t: int) -> TLNode:
        """Append an empty TL(t) at the end of the timeline."""
        if self.tail is not None:
            if t == self.tail.t:
                return self.tail
            if t < self.tail.t:
                raise OutOfOrderAppendError(t, self.tail.t)
        node = TLNode(t)
        node.prev = self.tail
        if self.tail is not None:
            self.tail.next = node
        else:
            self.head = node
        self.tail = node
        self.tl_index[t] = node
        self.counters["add_tl"] += 1
        self.counters["links"] += 2
        return node

    def add_edge(self, u: int, v: int, t: int) -> EdgeNode:
        """Append a new edge; timestamps must not go backwards."""
        if self.tail is not None and t < self.tail.t:
            raise OutOfOrderAppendError(t, self.tail.t)
        self.counters["add_edge"] += 1
        return self._append(u, v, t)

    def _append(self, u: int, v: int, t: int) -> EdgeNode:
        tl = self.tail
        if tl is None or tl.t != t:
            tl = self.add_tl(t)
        node = EdgeNode(u, v, t, tl)
        tl.edges.append(node)
        self._lists(u).sl.append(node)
        self._lists(v).dl.append(node)
        self.edge_count += 1
        self.counters["links"] += 6
        return node

    def _lists(self, v: int) -> VertexLists:
        lists = self.vertices.get(v)
        if lists is None:
            lists = self.vertices[v] = VertexLists()
        return lists

    # --- Table of constant-time manipulations ---

    def del_edge(self, node: EdgeNode) -> None:
        assert node.alive, f"{node!r} was already deleted"
        node.tl.edges.unlink(node)
        src = self.vertices[node.u]
        src.sl.unlink(node)
        dst = self.vertices[node.v]
        dst.dl.unlink(node)
        if not src.sl and not src.dl:
            self.vertices.pop(node.u, None)
        if not dst.sl and not dst.dl:
            self.vertices.pop(node.v, None)
        node.alive = False
        self.edge_count -= 1
        self.counters["del_edge"] += 1
        self.counters["links"] += 6

    def del_tl(self, node: TLNode) -> None:
        """Unlink TL(t) from the timeline; its edges count as gone."""
        assert node.linked, f"{node!r} is not on the timeline"
        if node.prev is not None:
            node.prev.next = node.next
        else:
            self.head = node.next
        if node.next is not None:
            node.next.prev = node.prev
        else:
            self.tail = node.prev
        node.prev = node.next = None
        node.linked = False
        del self.tl_index[node.t]
        self.counters["del_tl"] += 1
        self.counters["links"] += 2

    @staticmethod
    def next_tl(node: TLNode) -> TLNode | None:
        return node.next

    @staticmethod
    def prev_tl(node: TLNode) -> TLNode | None:
        return node.prev

    def get_sl(self, v: int) -> EdgeChain:
        lists = self.vertices.get(v)
        return lists.sl if lists is not None else EdgeChain(SL_AXIS)

    def get_dl(self, v: int) -> EdgeChain:
        lists = self.vertices.get(v)
        return lists.dl if lists is not None else EdgeChain(DL_AXIS)

    def get_tti(self) -> TimeInterval | None:
        if self.head is None:
            return None
        return TimeInterval(ts=self.head.t, te=self.tail.t)

    def get_tl(self, t: int) -> TLNode | None:
        return self.tl_index.get(t)

    # --- inspection ---

    def timeline(self) -> Iterator[TLNode]:
        node = self.head
        while node is not None:
            yield node
            node = node.next

    def edges(self) -> Iterator[EdgeNode]:
        for tl in self.timeline():
            yield from tl.edges

    def to_edges(self) -> list[TemporalEdge]:
        return [node.as_edge() for node in self.edges()]

    def timestamps_within(self, interval: TimeInterval) -> list[int]:
        return [tl.t for tl in self.timeline()
                if interval.ts <= tl.t <= interval.te]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def timeline_length(self) -> int:
        return len(self.tl_index)

    def node_count(self) -> int:
        """Edge nodes + timeline nodes + per-vertex list headers."""
        return self.edge_count + self.timeline_length + len(self.vertices)

    def __len__(self) -> int:
        return self.edge_count

    def __bool__(self) -> bool:
        return self.head is not None
