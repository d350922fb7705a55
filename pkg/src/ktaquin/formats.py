"""Text and JSON forms for tableaux, trace dumps, and the coefficient cache."""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass
from .shapes import Box, partition, row_length
from .tableaux import AugmentedTableau, IncreasingTableau, SetValuedTableau
from .jdt import SwitchState, SwitchTrace
from .coefficients import CoefficientRecord

TOOL_VERSION = "0.1.0"

Tableau = IncreasingTableau | AugmentedTableau | SetValuedTableau


class ParseError(ValueError):
    """Malformed tableau text; carries the 1-based (row, column) token position."""

    def __init__(self, row: int, col: int, message: str):
        super().__init__(f"row {row}, column {col}: {message}")
        self.row = row
        self.col = col


def format_tableau(t: Tableau) -> str:
    """Grid form: one line per row, '.' for inner holes, 'X' marks, '{a,b}' sets."""
    if isinstance(t, SetValuedTableau):
        sets = {(r, c): vals for r, c, vals in t.cells}
        lines = []
        for r, width in enumerate(t.shape, start=1):
            lines.append(" ".join("{" + ",".join(map(str, sets[(r, c)])) + "}" for c in range(1, width + 1)))
        return "\n".join(lines)
    marks = set(t.x_marks) if isinstance(t, AugmentedTableau) else set()
    entries = {(r, c): v for r, c, v in t.cells}
    lines = []
    for r, width in enumerate(t.outer, start=1):
        cells = []
        for c in range(1, width + 1):
            if c <= row_length(t.inner, r):
                cells.append(".")
            elif (r, c) in marks:
                cells.append("X")
            else:
                cells.append(str(entries[(r, c)]))
        lines.append(" ".join(cells))
    return "\n".join(lines)


def _parse_set_token(token: str, row: int, col: int) -> tuple[int, ...]:
    body = token[1:-1]
    try:
        vals = tuple(int(x) for x in body.split(",") if x.strip() != "")
    except ValueError as exc:
        raise ParseError(row, col, f"bad set {token!r}") from exc
    if not vals:
        raise ParseError(row, col, "empty set")
    return vals


def parse_tableau(text: str) -> Tableau:
    """Parse the grid or JSON form into a validated tableau of the right type.

    Syntax problems raise ParseError with a position; a well-formed grid whose
    filling breaks the type's rules raises the type's own invariant error.
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError:
            doc = None
        if isinstance(doc, dict):
            return tableau_from_json_dict(doc)
    return _parse_grid(stripped)


def _parse_grid(text: str) -> Tableau:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows:
        return IncreasingTableau((), (), ())
    outer: list[int] = []
    inner: list[int] = []
    num_cells: list[tuple[int, int, int]] = []
    set_cells: list[tuple[int, int, tuple[int, ...]]] = []
    marks: list[Box] = []
    has_set = False
    for r, tokens in enumerate(rows, start=1):
        holes = 0
        seen_entry = False
        width = len(tokens)
        for c, token in enumerate(tokens, start=1):
            if token == ".":
                if not seen_entry:
                    holes += 1
                elif any(tok != "." for tok in tokens[c - 1:]):
                    raise ParseError(r, c, "hole after an entry")
                else:
                    width = c - 1  # trailing dots are padding
                    break
            elif token == "X":
                seen_entry = True
                marks.append((r, c))
            elif token.startswith("{") and token.endswith("}"):
                seen_entry = True
                has_set = True
                set_cells.append((r, c, _parse_set_token(token, r, c)))
            else:
                seen_entry = True
                try:
                    num_cells.append((r, c, int(token)))
                except ValueError as exc:
                    raise ParseError(r, c, f"unrecognized token {token!r}") from exc
        outer.append(width)
        inner.append(holes)
    outer_p, inner_p = partition(outer), partition(inner)
    if has_set:
        if marks or inner_p != ():
            raise ParseError(1, 1, "set-valued tableaux are straight and unmarked")
        cells = set_cells + [(r, c, (v,)) for r, c, v in num_cells]
        return SetValuedTableau(outer_p, tuple(cells))
    if marks:
        return AugmentedTableau(outer_p, inner_p, tuple(num_cells), tuple(marks))
    return IncreasingTableau(outer_p, inner_p, tuple(num_cells))


def tableau_to_json_dict(t: Tableau) -> dict:
    if isinstance(t, SetValuedTableau):
        return {
            "outer": list(t.shape),
            "inner": [],
            "cells": [[r, c, list(vals)] for r, c, vals in t.cells],
        }
    doc = {
        "outer": list(t.outer),
        "inner": list(t.inner),
        "cells": [[r, c, v] for r, c, v in t.cells],
    }
    if isinstance(t, AugmentedTableau):
        doc["cells"] += [[r, c, "X"] for r, c in t.x_marks]
    return doc


def tableau_from_json_dict(doc: dict) -> Tableau:
    try:
        outer = partition(doc["outer"])
        inner = partition(doc.get("inner", []))
        raw_cells = doc["cells"]
    except (KeyError, TypeError) as exc:
        raise ParseError(1, 1, f"bad tableau document: {exc}") from exc
    nums, sets, marks = [], [], []
    for entry in raw_cells:
        r, c, v = entry
        if v == "X":
            marks.append((r, c))
        elif isinstance(v, list):
            sets.append((r, c, tuple(v)))
        else:
            nums.append((r, c, int(v)))
    if sets:
        if marks or inner != ():
            raise ParseError(1, 1, "set-valued tableaux are straight and unmarked")
        return SetValuedTableau(outer, tuple(sets) + tuple((r, c, (v,)) for r, c, v in nums))
    if marks:
        return AugmentedTableau(outer, inner, tuple(nums), tuple(marks))
    return IncreasingTableau(outer, inner, tuple(nums))


def format_switch_state(state: SwitchState) -> str:
    """Grid with '*' for bullets, annotated with the stage label."""
    entries = {(r, c): str(v) for r, c, v in state.cells}
    entries.update({b: "*" for b in state.bullets})
    lines = []
    for r, width in enumerate(state.outer, start=1):
        cells = []
        for c in range(1, width + 1):
            if (r, c) in entries:
                cells.append(entries[(r, c)])
            elif c <= row_length(state.inner, r):
                cells.append(".")
            else:
                cells.append(" ")
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines)


def format_trace(trace: SwitchTrace) -> str:
    blocks = []
    for i, state in enumerate(trace.states):
        stage = "place bullets" if state.stage is None else f"switch past {state.stage}"
        header = f"[{i}] {state.direction} {stage}, uniform={trace.uniform_flags[i]}"
        blocks.append(header + "\n" + format_switch_state(state))
    return "\n\n".join(blocks)


@dataclass(frozen=True)
class CacheRecord:
    """A coefficient record plus provenance metadata, one JSON line each."""

    record: CoefficientRecord
    timestamp: float
    version: str = TOOL_VERSION

    def key(self) -> tuple:
        r = self.record
        return (r.kind, r.lam, r.mu, r.nu)

    def to_json(self) -> str:
        r = self.record
        return json.dumps(
            {
                "kind": r.kind,
                "lambda": list(r.lam),
                "mu": list(r.mu),
                "nu": list(r.nu),
                "value": r.value,
                "method": r.method,
                "checks": [[name, ok] for name, ok in r.checks],
                "timestamp": self.timestamp,
                "version": self.version,
            },
            sort_keys=True,
        )

    @classmethod
    def from_json(cls, line: str) -> "CacheRecord":
        doc = json.loads(line)
        record = CoefficientRecord(
            doc["kind"],
            partition(doc["lambda"]),
            partition(doc["mu"]),
            partition(doc["nu"]),
            int(doc["value"]),
            doc.get("method", "jdt"),
            tuple((name, bool(ok)) for name, ok in doc.get("checks", [])),
        )
        return cls(record, float(doc.get("timestamp", 0.0)), doc.get("version", "unknown"))

    @classmethod
    def now(cls, record: CoefficientRecord) -> "CacheRecord":
        return cls(record, time.time())


class CacheConflictError(RuntimeError):
    """Two cached records disagree on the value of one coefficient key."""


def cache_append(path: str, record: CacheRecord) -> None:
    """Append one record as a single atomic write."""
    line = record.to_json() + "\n"
    fd = os.open(path, os.O_WRONLY | os.O_CREAT | os.O_APPEND, 0o644)
    try:
        os.write(fd, line.encode())
    finally:
        os.close(fd)


def cache_load(path: str) -> dict[tuple, CacheRecord]:
    """Merge records by key; conflicting values are a hard error naming the key."""
    table: dict[tuple, CacheRecord] = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if not line.strip():
                continue
            rec = CacheRecord.from_json(line)
            key = rec.key()
            if key in table and table[key].record.value != rec.record.value:
                raise CacheConflictError(
                    f"conflicting cached values for {key}: "
                    f"{table[key].record.value} vs {rec.record.value}"
                )
            table[key] = rec
    return table
