from pydantic import BaseModel, Field
from tkcore.schemas.core import CoreSummary
from tkcore.schemas.stats import QueryStats


class ReportRecord(BaseModel):
    tti_ts: int
    tti_te: int
    vertex_count: int
    edge_count: int
    component_count: int | None = Field(
        None, description="Connected components; needs --materialize.")

    model_config = {
        'json_schema_extra': {
            "example": {
                "tti_ts": 554410,
                "tti_te": 560020,
                "vertex_count": 12,
                "edge_count": 31,
                "component_count": 2
            }
        }
    }

    @classmethod
    def from_core(cls, core: CoreSummary,
                  component_count: int | None = None) -> "ReportRecord":
        return cls(
            tti_ts=core.tti.ts,
            tti_te=core.tti.te,
            vertex_count=core.vertex_count,
            edge_count=core.edge_count,
            component_count=component_count
        )


class StatsRecord(BaseModel):
    """Flat view of QueryStats, one column per counter."""
    cores: int
    cells_total: int
    cells_visited: int
    tcd_ops: int
    nonempty_inductions: int
    duplicate_inductions: int
    empties: int
    pruned_por: int
    pruned_pou: int
    pruned_pol: int
    triggers_por: int
    triggers_pou: int
    triggers_pol: int
    pruned_percent: float
    peak_tel_edges: int
    wall_time: float
    peak_rss_kb: int | None = None

    @classmethod
    def from_stats(cls, stats: QueryStats, cores: int) -> "StatsRecord":
        return cls(
            cores=cores,
            cells_total=stats.cells_total,
            cells_visited=stats.cells_visited,
            tcd_ops=stats.tcd_ops,
            nonempty_inductions=stats.nonempty_inductions,
            duplicate_inductions=stats.duplicate_inductions,
            empties=stats.empties,
            pruned_por=stats.pruned_cells["PoR"],
            pruned_pou=stats.pruned_cells["PoU"],
            pruned_pol=stats.pruned_cells["PoL"],
            triggers_por=stats.prune_triggers["PoR"],
            triggers_pou=stats.prune_triggers["PoU"],
            triggers_pol=stats.prune_triggers["PoL"],
            pruned_percent=round(stats.pruned_percent, 4),
            peak_tel_edges=stats.peak_tel_edges,
            wall_time=round(stats.wall_time, 6),
            peak_rss_kb=stats.peak_rss_kb
        )
