from pydantic import BaseModel, Field, model_validator


class TimeInterval(BaseModel):
    """A closed interval [ts, te] of timestamps."""
    ts: int = Field(..., ge=0, description="Start timestamp (inclusive).")
    te: int = Field(..., ge=0, description="End timestamp (inclusive).")

    model_config = {
        'frozen': True,
        'json_schema_extra': {
            "example": {"ts": 554400, "te": 565200}
        }
    }

    @model_validator(mode="after")
    def _check_order(self) -> "TimeInterval":
        if self.ts > self.te:
            raise ValueError(
                f"interval start {self.ts} is after its end {self.te}")
        return self

    @property
    def span(self) -> int:
        return self.te - self.ts

    def contains(self, other: "TimeInterval") -> bool:
        return interval_contains(self, other)

    def as_tuple(self) -> tuple[int, int]:
        return (self.ts, self.te)

    def __str__(self) -> str:
        return f"[{self.ts},{self.te}]"


def interval_contains(outer: TimeInterval, inner: TimeInterval) -> bool:
    return outer.ts <= inner.ts and inner.te <= outer.te
