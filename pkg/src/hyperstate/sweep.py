"""Exhaustive metric sweeps over hypergraph families, with persistence.

A sweep evaluates every configuration of a family (optionally filtered to
connected hypergraphs), producing one record per configuration in the
generator's deterministic order plus a per-metric extremal summary.
Records serialize to CSV/JSON with shortest round-trip float formatting,
so repeated runs are byte-identical regardless of the worker count.

Extremal semantics: for the squeezing-degree metrics (s_p, s_n) the
summary ranges over the configurations that actually exhibit squeezing
(negative degree) whenever any exist, since extremal squeezing is a
statement about the squeezed subpopulation; all other metrics (and the
fallback when nothing is squeezed) use plain extrema over defined values.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from . import __version__
from .coherence import l1_coherence, rel_entropy_coherence, to_phase_basis
from .errors import SchemaError
from .hypergraph import (
    Hypergraph,
    complete_k_graph,
    edges_text,
    is_connected,
    k_uniform_family,
    single_full_edge,
)
from .squeezing import squeeze_report
from .state import hypergraph_state

METRIC_NAMES = ("s_p", "s_n", "var_p", "var_n", "half_comm", "c_l1_phase", "c_rel_phase")
SQUEEZE_METRICS = frozenset({"s_p", "s_n"})

CSV_HEADER = ("d", "edges") + METRIC_NAMES

FAMILY_KINDS = ("dminus1", "complete-k", "single-full")

CACHE_ENV_VAR = "HYPERSTATE_CACHE"


@dataclass(frozen=True)
class Family:
    """A named hypergraph family: generator plus stable descriptor."""

    kind: str
    d: int
    k: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"kind must be one of {FAMILY_KINDS}, got {self.kind!r}")
        if self.kind == "complete-k" and self.k is None:
            raise ValueError("complete-k family needs k")

    @property
    def descriptor(self) -> str:
        if self.kind == "complete-k":
            return f"complete-k(d={self.d},k={self.k})"
        return f"{self.kind}(d={self.d})"

    @property
    def default_connectivity_filter(self) -> bool:
        # (d-1)-graph searches follow the connected-family convention;
        # the single-configuration families are connected by construction.
        return self.kind == "dminus1"

    def configurations(self) -> Iterator[Hypergraph]:
        if self.kind == "dminus1":
            yield from k_uniform_family(self.d, self.d - 1)
        elif self.kind == "complete-k":
            yield complete_k_graph(self.d, self.k)  # type: ignore[arg-type]
        else:
            yield single_full_edge(self.d)


def dminus1_family(d: int) -> Family:
    return Family("dminus1", d)


def complete_k_family(d: int, k: int) -> Family:
    return Family("complete-k", d, k)


def single_full_family(d: int) -> Family:
    return Family("single-full", d)


@dataclass(frozen=True)
class SweepRecord:
    """One configuration with all computed metrics (None = undefined)."""

    d: int
    edges: str
    metrics: dict[str, float | None]

    def row(self) -> list:
        return [self.d, self.edges] + [self.metrics[name] for name in METRIC_NAMES]


@dataclass(frozen=True)
class MetricSummary:
    metric: str
    min_value: float | None
    max_value: float | None
    argmin: tuple[str, ...] = ()
    argmax: tuple[str, ...] = ()


@dataclass(frozen=True)
class SweepSummary:
    family: str
    count: int
    metrics: dict[str, MetricSummary] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "count": self.count,
            "metrics": {
                name: {
                    "min": s.min_value,
                    "max": s.max_value,
                    "argmin": list(s.argmin),
                    "argmax": list(s.argmax),
                }
                for name, s in self.metrics.items()
            },
        }


def evaluate_record(g: Hypergraph) -> SweepRecord:
    """Compute all sweep metrics for one hypergraph."""
    report = squeeze_report(g)
    phase_coeffs = to_phase_basis(hypergraph_state(g))
    metrics: dict[str, float | None] = {
        "s_p": report.s_p,
        "s_n": report.s_n,
        "var_p": report.var_p,
        "var_n": report.var_n,
        "half_comm": report.half_comm,
        "c_l1_phase": l1_coherence(phase_coeffs),
        "c_rel_phase": rel_entropy_coherence(phase_coeffs),
    }
    return SweepRecord(d=g.d, edges=edges_text(g), metrics=metrics)


def _summarize(records: Sequence[SweepRecord], metric: str) -> MetricSummary:
    defined = [(r.metrics[metric], r.edges) for r in records if r.metrics[metric] is not None]
    if metric in SQUEEZE_METRICS:
        squeezed = [(v, e) for v, e in defined if v < 0.0]
        if squeezed:
            defined = squeezed
    if not defined:
        return MetricSummary(metric=metric, min_value=None, max_value=None)
    lo = min(v for v, _ in defined)
    hi = max(v for v, _ in defined)
    return MetricSummary(
        metric=metric,
        min_value=lo,
        max_value=hi,
        argmin=tuple(sorted(e for v, e in defined if v == lo)),
        argmax=tuple(sorted(e for v, e in defined if v == hi)),
    )


def sweep_family(
    family: Family,
    metrics: Sequence[str] | None = None,
    connectivity_filter: bool | None = None,
    threads: int = 1,
) -> tuple[list[SweepRecord], SweepSummary]:
    """Evaluate every configuration of ``family`` and summarize extrema.

    Evaluation order (hence record order) is the generator order; the
    worker pool preserves it, so output is independent of ``threads``.
    """
    chosen = tuple(metrics) if metrics is not None else METRIC_NAMES
    for name in chosen:
        if name not in METRIC_NAMES:
            raise ValueError(f"unknown metric {name!r}")
    if connectivity_filter is None:
        connectivity_filter = family.default_connectivity_filter
    configs = list(family.configurations())
    if connectivity_filter:
        configs = [g for g in configs if is_connected(g)]
    if not configs:
        raise ValueError(f"family {family.descriptor} is empty after filtering")
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            records = list(pool.map(evaluate_record, configs))
    else:
        records = [evaluate_record(g) for g in configs]
    summary = SweepSummary(
        family=family.descriptor,
        count=len(records),
        metrics={name: _summarize(records, name) for name in chosen},
    )
    return records, summary


def summarize_records(
    records: Sequence[SweepRecord], family_descriptor: str, metrics: Sequence[str] | None = None
) -> SweepSummary:
    """Rebuild a summary from records (used when serving from cache)."""
    chosen = tuple(metrics) if metrics is not None else METRIC_NAMES
    return SweepSummary(
        family=family_descriptor,
        count=len(records),
        metrics={name: _summarize(records, name) for name in chosen},
    )


def _format_value(value: float | int | None) -> str:
    # shortest round-trip decimal; coerce so numpy scalars print bare
    if value is None:
        return ""
    if isinstance(value, int):
        return repr(value)
    return repr(float(value))


def _records_to_csv(records: Iterable[SweepRecord]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for record in records:
        writer.writerow([_format_value(v) if not isinstance(v, str) else v for v in record.row()])
    return buffer.getvalue()


def _records_to_json(records: Iterable[SweepRecord]) -> str:
    payload = [
        {"d": r.d, "edges": r.edges, **{name: r.metrics[name] for name in METRIC_NAMES}}
        for r in records
    ]
    return json.dumps(payload, indent=2) + "\n"


def render_results(records: Iterable[SweepRecord], fmt: str) -> str:
    """Serialize records to the requested format (csv or json)."""
    if fmt == "csv":
        return _records_to_csv(records)
    if fmt == "json":
        return _records_to_json(records)
    raise ValueError(f"format must be 'csv' or 'json', got {fmt!r}")


def write_results(records: Iterable[SweepRecord], path: str | os.PathLike, fmt: str | None = None) -> None:
    """Write records to ``path``; format from arg or file extension."""
    path = Path(path)
    if fmt is None:
        fmt = path.suffix.lstrip(".").lower()
    Path(path).write_text(render_results(records, fmt), encoding="utf-8")


def _record_from_fields(d: str, edges: str, values: dict[str, float | None]) -> SweepRecord:
    return SweepRecord(d=int(d), edges=edges, metrics={name: values[name] for name in METRIC_NAMES})


def read_results(path: str | os.PathLike) -> list[SweepRecord]:
    """Read records back from a CSV or JSON results file."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if path.suffix.lower() == ".json":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{path}: not valid JSON: {exc}") from None
        records = []
        expected = {"d", "edges", *METRIC_NAMES}
        for entry in payload:
            if set(entry) != expected:
                raise SchemaError(f"{path}: record keys {sorted(entry)} do not match schema")
            records.append(
                _record_from_fields(entry["d"], entry["edges"], {k: entry[k] for k in METRIC_NAMES})
            )
        return records
    if path.suffix.lower() == ".csv":
        rows = list(csv.reader(io.StringIO(text)))
        if not rows or tuple(rows[0]) != CSV_HEADER:
            raise SchemaError(f"{path}: header {rows[0] if rows else []} does not match schema")
        records = []
        for row in rows[1:]:
            if len(row) != len(CSV_HEADER):
                raise SchemaError(f"{path}: row has {len(row)} fields, expected {len(CSV_HEADER)}")
            values = {
                name: (None if cell == "" else float(cell))
                for name, cell in zip(METRIC_NAMES, row[2:])
            }
            records.append(_record_from_fields(row[0], row[1], values))
        return records
    raise SchemaError(f"{path}: unknown results format (expected .csv or .json)")


def cache_key(
    family: Family,
    metrics: Sequence[str] | None = None,
    connectivity_filter: bool | None = None,
) -> str:
    """Stable content hash of family + metrics + filter + artifact version."""
    if connectivity_filter is None:
        connectivity_filter = family.default_connectivity_filter
    chosen = tuple(metrics) if metrics is not None else METRIC_NAMES
    blob = f"{family.descriptor}|filter={connectivity_filter}|metrics={','.join(chosen)}|v{__version__}"
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def resolve_cache_dir(cli_value: str | None = None) -> Path | None:
    """Cache directory from the CLI flag, else HYPERSTATE_CACHE, else None."""
    if cli_value:
        return Path(cli_value)
    env = os.environ.get(CACHE_ENV_VAR)
    return Path(env) if env else None


def cached_sweep(
    family: Family,
    metrics: Sequence[str] | None = None,
    connectivity_filter: bool | None = None,
    threads: int = 1,
    cache_dir: str | os.PathLike | None = None,
) -> tuple[list[SweepRecord], SweepSummary]:
    """Sweep with a content-addressed cache of the record list."""
    if cache_dir is None:
        return sweep_family(family, metrics, connectivity_filter, threads)
    cache_dir = Path(cache_dir)
    cache_file = cache_dir / f"{cache_key(family, metrics, connectivity_filter)}.json"
    if cache_file.exists():
        records = read_results(cache_file)
        return records, summarize_records(records, family.descriptor, metrics)
    records, summary = sweep_family(family, metrics, connectivity_filter, threads)
    cache_dir.mkdir(parents=True, exist_ok=True)
    write_results(records, cache_file, "json")
    return records, summary
