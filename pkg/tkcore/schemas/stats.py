from pydantic import BaseModel, Field, computed_field

PRUNING_RULES = ("PoR", "PoU", "PoL")


def _per_rule() -> dict[str, int]:
    return {rule: 0 for rule in PRUNING_RULES}


class QueryStats(BaseModel):
    cells_total: int = 0
    cells_visited: int = 0
    tcd_ops: int = 0
    nonempty_inductions: int = 0
    duplicate_inductions: int = 0
    empties: int = 0
    pruned_cells: dict[str, int] = Field(default_factory=_per_rule)
    prune_triggers: dict[str, int] = Field(default_factory=_per_rule)
    peak_tel_edges: int = 0
    wall_time: float = 0.0
    peak_rss_kb: int | None = None

    @computed_field
    @property
    def pruned_percent(self) -> float:
        if not self.cells_total:
            return 0.0
        return 100.0 * sum(self.pruned_cells.values()) / self.cells_total

    def rule_percent(self, rule: str) -> float:
        if not self.cells_total:
            return 0.0
        return 100.0 * self.pruned_cells[rule] / self.cells_total


class GraphStats(BaseModel):
    vertex_count: int = 0
    edge_count: int = 0
    span_days: float = 0.0
    distinct_timestamps: int = 0
    self_loops_dropped: int = 0
    malformed_lines: int = 0
