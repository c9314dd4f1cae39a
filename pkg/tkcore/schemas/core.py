from pydantic import BaseModel, Field
from tkcore.schemas.interval import TimeInterval


class CoreSummary(BaseModel):
    """One distinct temporal k-core, identified by its TTI."""
    tti: TimeInterval
    vertex_count: int
    edge_count: int
    vertices: list[int] | None = Field(
        None, description="Sorted vertex ids; present when materialized.")
    edges: list[tuple[int, int, int]] | None = Field(
        None, description="(u, v, t) edges; present when materialized.")
    fingerprint: str | None = Field(
        None, description="Edge multiset digest; present when materialized.")

    @property
    def materialized(self) -> bool:
        return self.edges is not None
