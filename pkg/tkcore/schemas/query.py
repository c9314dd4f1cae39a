from enum import Enum
from pydantic import BaseModel, Field
from tkcore.schemas.interval import TimeInterval


class Algorithm(str, Enum):
    OTCD = "otcd"
    TCD = "tcd"
    BRUTE = "brute"


class ColumnOrder(str, Enum):
    SRC_DST_T = "src_dst_t"
    SRC_DST_W_T = "src_dst_w_t"


class QuerySpec(BaseModel):
    k: int = Field(..., ge=1, description="Minimum distinct-neighbor degree.")
    range: TimeInterval = Field(
        ...,
        description="Query interval [Ts, Te]; every subinterval is examined."
    )
    sigma: int = Field(
        1, ge=1,
        description="Minimum number of parallel edges per linked pair."
    )
    max_span: int | None = Field(
        None, ge=0,
        description="Upper bound on te - ts of a reported core's TTI."
    )
    top_n_shortest: int | None = Field(
        None, ge=1,
        description="Keep only the n cores with the shortest TTI."
    )
    algorithm: Algorithm = Algorithm.OTCD
    materialize: bool = Field(
        False,
        description="Store vertex and edge lists of every reported core."
    )

    model_config = {
        'frozen': True,
        'json_schema_extra': {
            "example": {
                "k": 2,
                "range": {"ts": 554400, "te": 565200},
                "sigma": 1,
                "algorithm": "otcd"
            }
        }
    }


class ParseConfig(BaseModel):
    column_order: ColumnOrder = ColumnOrder.SRC_DST_T
    comment_prefixes: frozenset[str] = frozenset({"#", "%"})
    normalize: bool = Field(
        True,
        description="Rewrite timestamps as 1-based offsets t - t_min + 1."
    )
    lenient: bool = Field(
        False,
        description="Skip malformed lines instead of failing."
    )

    model_config = {'frozen': True}
