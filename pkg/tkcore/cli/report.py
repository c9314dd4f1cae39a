from __future__ import annotations

from typing import Callable, TextIO

from pydantic import BaseModel

from tkcore.engine.query import connected_components
from tkcore.engine.results import ResultSet
from tkcore.schemas.report import ReportRecord, StatsRecord


def build_records(results: ResultSet) -> list[ReportRecord]:
    records = []
    for core in results.ordered():
        components = None
        if core.materialized:
            components = len(connected_components(core))
        records.append(ReportRecord.from_core(core, components))
    return records


def _tsv_cell(value) -> str:
    return "" if value is None else str(value)


def _tsv_rows(models: list[BaseModel], model_cls: type[BaseModel]
              ) -> list[str]:
    fields = list(model_cls.model_fields)
    lines = ["\t".join(fields)]
    for model in models:
        data = model.model_dump()
        lines.append("\t".join(_tsv_cell(data[f]) for f in fields))
    return lines


def write_json(results: ResultSet, stream: TextIO) -> None:
    """JSON lines: one object per core, then {"stats": {...}}."""
    for record in build_records(results):
        stream.write(record.model_dump_json() + "\n")
    stats = StatsRecord.from_stats(results.stats, len(results))
    stream.write('{"stats": ' + stats.model_dump_json() + "}\n")


def write_tsv(results: ResultSet, stream: TextIO) -> None:
    lines = _tsv_rows(build_records(results), ReportRecord)
    lines.append("")
    lines += _tsv_rows([StatsRecord.from_stats(results.stats, len(results))],
                       StatsRecord)
    stream.write("\n".join(lines) + "\n")


WRITERS: dict[str, Callable[[ResultSet, TextIO], None]] = {
    "json": write_json,
    "tsv": write_tsv,
}
