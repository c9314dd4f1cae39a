"""Decremental enumeration of the subinterval schedule.

Rows are anchored start times in ascending order; inside a row the end
time descends. Two TELs are alive at any moment: the row head, holding
the core of [row, Te], and a working copy that is narrowed column by
column. Both only ever shrink, so every TCD call is valid.
"""
from __future__ import annotations

from tkcore.core.logging import get_logger
from tkcore.engine.decomposition import tcd
from tkcore.engine.results import ResultSet, register_result
from tkcore.engine.schedule import PruneSchedule, apply_pruning
from tkcore.models.degree import init_state
from tkcore.models.graph import TemporalGraph
from tkcore.models.tel import TEL
from tkcore.schemas.interval import TimeInterval
from tkcore.schemas.query import QuerySpec

logger = get_logger(__name__)


def tcd_enumerate(graph: TemporalGraph, spec: QuerySpec) -> ResultSet:
    base = TEL.build(graph.project(spec.range))
    return enumerate_cores(base, spec, pruning=False)


def otcd_enumerate(graph: TemporalGraph, spec: QuerySpec) -> ResultSet:
    base = TEL.build(graph.project(spec.range))
    return enumerate_cores(base, spec, pruning=True)


def enumerate_cores(base: TEL, spec: QuerySpec, pruning: bool) -> ResultSet:
    """Run the schedule over `base`, which is consumed as the first row head.

    Without pruning every cell is visited until the row's working core or
    the row head runs empty. With pruning, each nonempty core records the
    cells its TTI makes redundant, rows with no cell left are skipped
    without advancing the head, and the in-row walk jumps past the TTI.
    """
    results = ResultSet(spec)
    stats = results.stats
    domain = base.timestamps_within(spec.range)
    if not domain:
        return results

    n = len(domain)
    stats.cells_total = n * (n + 1) // 2
    pos = {t: i for i, t in enumerate(domain)}
    last = domain[-1]
    k, sigma = spec.k, spec.sigma
    schedule = PruneSchedule(domain) if pruning else None

    def previous(row: int, col: int) -> int | None:
        i = pos[col] - 1
        if i < pos[row]:
            return None
        if schedule is None:
            return domain[i]
        return schedule.next_unpruned_column(row, domain[i])

    head, head_state = base, init_state(base)
    for row in domain:
        first = last
        if schedule is not None:
            first = schedule.next_unpruned_column(row, last)
            if first is None:
                logger.debug("row %d fully pruned", row)
                continue

        tti = tcd(head, head_state, k, TimeInterval(ts=row, te=last), sigma)
        stats.tcd_ops += 1
        if tti is None:
            # every later cell lies inside [row, last]
            if first == last:
                stats.cells_visited += 1
                stats.empties += 1
            logger.debug("row head %d empty; stopping", row)
            break

        work, work_state = head.clone(), head_state.copy()
        stats.peak_tel_edges = max(stats.peak_tel_edges,
                                   head.edge_count + work.edge_count)
        col = first
        if col != last:
            tti = tcd(work, work_state, k, TimeInterval(ts=row, te=col),
                      sigma)
            stats.tcd_ops += 1

        while True:
            stats.cells_visited += 1
            if tti is None:
                stats.empties += 1
                break
            stats.nonempty_inductions += 1
            if not register_result(results, work, spec):
                stats.duplicate_inductions += 1
                if pruning:
                    logger.warning(
                        "cell [%d,%d] induced core %s a second time",
                        row, col, tti)
            if schedule is not None:
                apply_pruning(schedule, TimeInterval(ts=row, te=col), tti,
                              last)
            col = previous(row, col)
            if col is None:
                break
            tti = tcd(work, work_state, k, TimeInterval(ts=row, te=col),
                      sigma)
            stats.tcd_ops += 1

    if schedule is not None:
        stats.pruned_cells = dict(schedule.covered)
        stats.prune_triggers = dict(schedule.triggers)
    return results
