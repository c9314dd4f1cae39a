"""Published benchmark queries over the SNAP temporal graphs.

Timestamps are normalized offsets (seconds since the first edge, plus one).
"""
from typing import NamedTuple

from tkcore.core.errors import UsageError
from tkcore.schemas.interval import TimeInterval

DATASET_FILES = {
    "CollegeMsg": "CollegeMsg.txt",
    "email-Eu-core-temporal": "email-Eu-core-temporal.txt",
    "sx-mathoverflow": "sx-mathoverflow.txt",
    "sx-stackoverflow": "sx-stackoverflow.txt",
}


class ReferenceQuery(NamedTuple):
    id: int
    dataset: str
    ts: int
    te: int
    k: int
    expected_cores: int

    @property
    def range(self) -> TimeInterval:
        return TimeInterval(ts=self.ts, te=self.te)

    @property
    def filename(self) -> str:
        return DATASET_FILES[self.dataset]


REFERENCE_QUERIES: dict[int, ReferenceQuery] = {q.id: q for q in (
    ReferenceQuery(1, "CollegeMsg", 554400, 565200, 2, 61),
    ReferenceQuery(2, "CollegeMsg", 558000, 568800, 2, 21),
    ReferenceQuery(3, "CollegeMsg", 561600, 572400, 2, 27),
    ReferenceQuery(4, "CollegeMsg", 565200, 576000, 2, 26),
    ReferenceQuery(5, "CollegeMsg", 568800, 579600, 2, 10),
    ReferenceQuery(6, "email-Eu-core-temporal", 36000, 46800, 3, 2),
    ReferenceQuery(7, "email-Eu-core-temporal", 39600, 50400, 3, 3),
    ReferenceQuery(8, "email-Eu-core-temporal", 284400, 295200, 3, 7),
    ReferenceQuery(9, "email-Eu-core-temporal", 288000, 298800, 3, 25),
    ReferenceQuery(10, "email-Eu-core-temporal", 291600, 302400, 3, 16),
    ReferenceQuery(11, "sx-mathoverflow", 864000, 867600, 2, 8),
    ReferenceQuery(12, "sx-mathoverflow", 1116000, 1119600, 2, 4),
    ReferenceQuery(13, "sx-mathoverflow", 1389600, 1393200, 2, 5),
    ReferenceQuery(14, "sx-mathoverflow", 1483200, 1486300, 2, 2),
    ReferenceQuery(15, "sx-mathoverflow", 1738800, 1742400, 2, 8),
    ReferenceQuery(16, "sx-stackoverflow", 378000, 381600, 2, 6),
    ReferenceQuery(17, "sx-stackoverflow", 417600, 421200, 2, 37),
    ReferenceQuery(18, "sx-stackoverflow", 421200, 424800, 2, 5),
    ReferenceQuery(19, "sx-stackoverflow", 424800, 428400, 2, 5),
    ReferenceQuery(20, "sx-stackoverflow", 486000, 489600, 2, 10),
)}

# published total pruned-cell percentage per query
PRUNED_PERCENT = {1: 95.62, 6: 83.91, 11: 81.64, 16: 90.44}


def get_reference_query(query_id: int) -> ReferenceQuery:
    query = REFERENCE_QUERIES.get(query_id)
    if query is None:
        raise UsageError(
            f"unknown preset {query_id}; choose 1..{len(REFERENCE_QUERIES)}")
    return query
