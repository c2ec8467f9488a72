"""Operation traces with per-step cost and potential bookkeeping."""

from __future__ import annotations

import csv
import json
from dataclasses import astuple, dataclass, fields
from typing import IO, Iterable, List, Optional, Sequence

from .batched import batched_queue
from .cost import Cost
from .equivalence import DEQUEUE, Label, enqueue_label
from .programs import Dequeue, Enqueue, Program, Return
from .protocol import Element, QueueObj, observe_dequeue, observe_enqueue, observe_quit
from .spec_queue import spec_queue

IMPLS = {"spec": spec_queue, "batched": batched_queue}


class OpsParseError(ValueError):
    def __init__(self, line: int, msg: str):
        super().__init__(f"line {line}: {msg}")
        self.line = line


@dataclass(frozen=True)
class TraceRow:
    index: int
    op: str
    elem: Optional[Element]
    cost_emitted: Cost
    pending_after: Cost
    potential_after: Cost
    amortized_cost: Optional[int]  # batched only
    cumulative_cost: Cost


CSV_HEADER = [f.name for f in fields(TraceRow)]


def _line_of(text: str, pos: int) -> int:
    return text.count("\n", 0, pos) + 1


def _skip_ws(text: str, i: int) -> int:
    while i < len(text) and text[i] in " \t\r\n":
        i += 1
    return i


def parse_ops(text: str) -> List[Label]:
    """Parse an ops file: a JSON array of ``{"op": "enqueue", "elem": n}`` / ``{"op": "dequeue"}``.

    Errors carry the 1-based line number of the offending entry.
    """
    dec = json.JSONDecoder()
    i = _skip_ws(text, 0)
    if i >= len(text) or text[i] != "[":
        raise OpsParseError(_line_of(text, i), "expected a JSON array")
    i = _skip_ws(text, i + 1)
    ops: List[Label] = []
    if i < len(text) and text[i] == "]":
        i += 1
    else:
        while True:
            start = i
            try:
                entry, i = dec.raw_decode(text, i)
            except json.JSONDecodeError as exc:
                raise OpsParseError(exc.lineno, exc.msg) from None
            ops.append(_op_from_entry(entry, _line_of(text, start)))
            i = _skip_ws(text, i)
            if i < len(text) and text[i] == ",":
                i = _skip_ws(text, i + 1)
            elif i < len(text) and text[i] == "]":
                i += 1
                break
            else:
                raise OpsParseError(_line_of(text, i), "expected ',' or ']'")
    if _skip_ws(text, i) != len(text):
        raise OpsParseError(_line_of(text, i), "trailing data after array")
    return ops


def _op_from_entry(entry: object, line: int) -> Label:
    if not isinstance(entry, dict):
        raise OpsParseError(line, f"expected an object, got {type(entry).__name__}")
    op = entry.get("op")
    if op == "dequeue":
        return DEQUEUE
    if op == "enqueue":
        e = entry.get("elem")
        if isinstance(e, bool) or not isinstance(e, int) or e < 0:
            raise OpsParseError(line, f"enqueue needs a non-negative integer elem, got {e!r}")
        return enqueue_label(e)
    raise OpsParseError(line, f"unknown op {op!r}")


def ops_to_program(ops: Sequence[Label], alphabet: Optional[int] = None) -> Program:
    """The straight-line program that performs ``ops`` whatever the dequeues return."""
    if alphabet is None:
        alphabet = 1 + max((lab.elem for lab in ops if lab.op == "enqueue"), default=0)
    p: Program = Return()
    for lab in reversed(ops):
        if lab.op == "enqueue":
            p = Enqueue(lab.elem, p)
        else:
            p = Dequeue(0, p, (p,) * alphabet)
    return p


def run_trace(ops: Iterable[Label], impl: str = "batched", q: Optional[QueueObj] = None) -> List[TraceRow]:
    """Apply ``ops`` to a fresh queue and finish with ``quit``; one row per step."""
    if q is None:
        q = IMPLS[impl]()
    amortize = impl == "batched"
    rows: List[TraceRow] = []
    total: Cost = 0
    phi = q.impl.potential()
    for i, lab in enumerate(ops):
        if lab.op == "enqueue":
            q = observe_enqueue(q, lab.elem)
            emitted, elem = 0, lab.elem
        elif lab.op == "dequeue":
            emitted, elem, q = observe_dequeue(q)
        else:
            raise ValueError(f"cannot trace {lab}")
        total += emitted
        phi_after = q.impl.potential()
        rows.append(
            TraceRow(
                i, lab.op, elem, emitted, q.pending, phi_after,
                emitted + phi_after - phi if amortize else None, total,
            )
        )
        phi = phi_after
    # quit spends whatever potential is left
    emitted = observe_quit(q)
    total += emitted
    rows.append(
        TraceRow(len(rows), "quit", None, emitted, 0, 0, emitted - phi if amortize else None, total)
    )
    return rows


def write_csv(rows: Iterable[TraceRow], fh: IO[str]) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for row in rows:
        w.writerow(["" if v is None else v for v in astuple(row)])
