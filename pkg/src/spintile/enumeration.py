"""Systematic enumeration of spinor-pair quadruple families.

Walks integer spinor pairs a = (m1, n1), b = (m2, n2) over the box
[-bound, bound]^4 in lexicographic order, skipping pairs where either
spinor is zero (they generate nothing but zeros), and emits one record
per pair carrying both curvature roots plus the canonical (sorted,
gcd-reduced) form of the quadruple.

Output is deterministic: the same job always produces byte-identical
files.  Sharded runs partition the emitted stream round-robin by record
index, so a merge of all shards reproduces the unsharded file exactly.
"""

from __future__ import annotations

import json
import math
import os
import tempfile
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator

CSV_HEADER = "m1,n1,m2,n2,A,B,C,D1,D2,canonical,primitive"

_JSON_FIELDS = ("m1", "n1", "m2", "n2", "A", "B", "C", "D1", "D2")


@dataclass(frozen=True)
class Shard:
    """One slice of a round-robin partition: records with
    index % count == index_of_this_shard."""

    index: int = 0
    count: int = 1

    def __post_init__(self) -> None:
        if self.count < 1 or not 0 <= self.index < self.count:
            raise ValueError(f"invalid shard {self.index}/{self.count}")


@dataclass(frozen=True)
class EnumerationJob:
    bound: int
    primitive_only: bool = False
    output_format: str = "csv"
    shard: Shard = field(default_factory=Shard)
    include_zero: bool = False

    def __post_init__(self) -> None:
        if self.bound < 1:
            raise ValueError(f"bound must be at least 1, got {self.bound}")
        if self.output_format not in ("csv", "jsonl"):
            raise ValueError(f"unknown output format {self.output_format!r}")


@dataclass(frozen=True)
class QuadrupleRecord:
    m1: int
    n1: int
    m2: int
    n2: int
    a: int
    b: int
    c: int
    d1: int
    d2: int
    canonical: tuple[int, int, int, int]
    primitive: bool

    def generator_key(self) -> tuple[int, int, int, int]:
        return (self.m1, self.n1, self.m2, self.n2)


def _record_for_pair(m1: int, n1: int, m2: int, n2: int) -> QuadrupleRecord:
    # curvatures of the pair, in plain ints for speed
    dot = m1 * m2 + n1 * n2
    cross = m1 * n2 - m2 * n1
    norm_a = m1 * m1 + n1 * n1
    norm_b = m2 * m2 + n2 * n2
    big_a = norm_b + dot
    big_b = norm_a + dot
    big_c = -dot
    base = norm_a + norm_b + dot
    d1, d2 = base + 2 * cross, base - 2 * cross
    if d1 < d2:
        d1, d2 = d2, d1
    entries = sorted((big_a, big_b, big_c, d1))
    common = math.gcd(*(abs(v) for v in entries))
    if common > 1:
        canonical = tuple(v // common for v in entries)
    else:
        canonical = tuple(entries)
    return QuadrupleRecord(
        m1=m1,
        n1=n1,
        m2=m2,
        n2=n2,
        a=big_a,
        b=big_b,
        c=big_c,
        d1=d1,
        d2=d2,
        canonical=canonical,
        primitive=common == 1,
    )


def enumerate_records(job: EnumerationJob) -> Iterator[QuadrupleRecord]:
    """Stream records for the job, honoring its shard and filters."""
    span = range(-job.bound, job.bound + 1)
    emitted = 0
    for m1 in span:
        for n1 in span:
            if not job.include_zero and m1 == 0 and n1 == 0:
                continue
            for m2 in span:
                for n2 in span:
                    if not job.include_zero and m2 == 0 and n2 == 0:
                        continue
                    record = _record_for_pair(m1, n1, m2, n2)
                    if job.primitive_only and not record.primitive:
                        continue
                    if emitted % job.shard.count == job.shard.index:
                        yield record
                    emitted += 1


def expected_record_count(bound: int, include_zero: bool = False) -> int:
    """Size of the unfiltered, unsharded stream."""
    lattice = (2 * bound + 1) ** 2
    if include_zero:
        return lattice * lattice
    return (lattice - 1) ** 2


def dedup_canonical(records: Iterable[QuadrupleRecord]) -> list[tuple[int, int, int, int]]:
    """Distinct canonical quadruples, ascending by (sum, entries)."""
    unique = {record.canonical for record in records}
    return sorted(unique, key=lambda c: (sum(c), c))


def _csv_line(record: QuadrupleRecord) -> str:
    canonical = ":".join(str(v) for v in record.canonical)
    primitive = "true" if record.primitive else "false"
    return (
        f"{record.m1},{record.n1},{record.m2},{record.n2},"
        f"{record.a},{record.b},{record.c},{record.d1},{record.d2},"
        f"{canonical},{primitive}"
    )


def _json_line(record: QuadrupleRecord) -> str:
    values = (
        record.m1,
        record.n1,
        record.m2,
        record.n2,
        record.a,
        record.b,
        record.c,
        record.d1,
        record.d2,
    )
    payload = dict(zip(_JSON_FIELDS, values))
    payload["canonical"] = list(record.canonical)
    payload["primitive"] = record.primitive
    return json.dumps(payload, separators=(",", ":"))


def write_stream(records: Iterable[QuadrupleRecord], handle: IO[str], fmt: str) -> int:
    """Write records to an open text handle; returns the record count."""
    count = 0
    if fmt == "csv":
        handle.write(CSV_HEADER + "\n")
        for record in records:
            handle.write(_csv_line(record) + "\n")
            count += 1
    elif fmt == "jsonl":
        for record in records:
            handle.write(_json_line(record) + "\n")
            count += 1
    else:
        raise ValueError(f"unknown output format {fmt!r}")
    return count


def write_records(records: Iterable[QuadrupleRecord], path: str, fmt: str) -> int:
    """Atomic file write: land fully or not at all (temp file + rename)."""
    directory = os.path.dirname(os.path.abspath(path))
    descriptor, temp_path = tempfile.mkstemp(dir=directory, suffix=".part")
    try:
        with os.fdopen(descriptor, "w", newline="") as handle:
            count = write_stream(records, handle, fmt)
        os.replace(temp_path, path)
    except BaseException:
        if os.path.exists(temp_path):
            os.unlink(temp_path)
        raise
    return count


def _parse_csv_line(line: str) -> QuadrupleRecord:
    parts = line.split(",")
    if len(parts) != 11:
        raise ValueError(f"bad csv record: {line!r}")
    numbers = [int(p) for p in parts[:9]]
    canonical = tuple(int(p) for p in parts[9].split(":"))
    primitive = parts[10] == "true"
    return QuadrupleRecord(*numbers, canonical=canonical, primitive=primitive)


def _parse_json_line(line: str) -> QuadrupleRecord:
    payload = json.loads(line)
    return QuadrupleRecord(
        *(int(payload[name]) for name in _JSON_FIELDS),
        canonical=tuple(payload["canonical"]),
        primitive=bool(payload["primitive"]),
    )


def read_records(path: str, fmt: str) -> list[QuadrupleRecord]:
    records = []
    with open(path, "r", newline="") as handle:
        lines = [line.rstrip("\n") for line in handle if line.strip()]
    if fmt == "csv":
        if not lines or lines[0] != CSV_HEADER:
            raise ValueError(f"{path} does not start with the expected csv header")
        records = [_parse_csv_line(line) for line in lines[1:]]
    elif fmt == "jsonl":
        records = [_parse_json_line(line) for line in lines]
    else:
        raise ValueError(f"unknown output format {fmt!r}")
    return records


def merge_shards(paths: Iterable[str], out_path: str, fmt: str) -> int:
    """Merge shard files back into the unsharded stream order.

    Records are sorted by their generator tuple, which is the stream's
    lexicographic order, so the merged file is byte-identical to a
    single-shard run of the same job.
    """
    merged: list[QuadrupleRecord] = []
    for path in paths:
        merged.extend(read_records(path, fmt))
    merged.sort(key=QuadrupleRecord.generator_key)
    return write_records(merged, out_path, fmt)
