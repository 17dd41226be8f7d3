"""Bounded-depth canonical composition (NFC) as a byte-level transducer.

A *segment* is a starter followed by a run of combining marks.  The machine
buffers the marks of a segment, sorts them by combining class (stable) and
applies canonical composition when the segment ends.  Output is emitted as
soon as no continuation of the segment could change it, which keeps the
number of buffered configurations small.

Two simplifications keep the transducer finite:

* Only :data:`REORDERING_MARKS` take part in reordering and composition.
  Other combining marks end the current segment and pass through unchanged.
* A segment holds at most ``depth`` marks.  The next mark starts a fresh
  segment without a starter.  Marks recovered by decomposing a precomposed
  letter count towards the limit, so the chunking is stable under repeated
  application and the transducer stays idempotent.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from . import fst as F
from . import unicode_data as U

# Harakat, the hamza/madda marks and superscript alef.
REORDERING_MARKS = tuple(range(0x064B, 0x0656)) + (0x0670,)
DEFAULT_DEPTH = 4


def _utf8(cps) -> list[int]:
    return list("".join(map(chr, cps)).encode("utf-8"))


class _SegmentModel:
    """Code-point level behaviour of one bounded segment."""

    def __init__(self, marks: tuple[int, ...], depth: int):
        self.marks = marks
        self.mark_set = frozenset(marks)
        self.depth = depth
        self.pairs = {k: v for k, v in U.composition_pairs().items() if k[1] in self.mark_set}
        self.starters = frozenset(s for s, _ in self.pairs)
        # Precomposed letters that split into a composing starter plus marks.
        self.composites = {}
        for cp in self.pairs.values():
            parts = U.full_decomposition(cp)
            if parts[0] in self.starters and all(m in self.mark_set for m in parts[1:]):
                self.composites[cp] = parts
        self.normalize = lru_cache(maxsize=None)(self._normalize)
        self.settled = lru_cache(maxsize=None)(self._settled)

    def _normalize(self, starter, marks) -> tuple[int, ...]:
        ordered = sorted(marks, key=U.ccc)
        if starter is None:
            return tuple(ordered)
        head, rest, last = starter, [], None
        for m in ordered:
            c = U.ccc(m)
            if last is None or last < c:
                comp = self.pairs.get((head, m))
                if comp is not None:
                    head = comp
                    continue
            rest.append(m)
            last = c
        return (head, *rest)

    def _settled(self, starter, marks, count) -> tuple[int, ...]:
        """Longest output prefix shared by every admissible continuation."""
        prefix = self.normalize(starter, marks)
        room = self.depth - count
        for n in range(1, room + 1):
            for more in itertools.product(self.marks, repeat=n):
                out = self.normalize(starter, marks + more)
                i = 0
                while i < len(prefix) and i < len(out) and prefix[i] == out[i]:
                    i += 1
                prefix = prefix[:i]
                if not prefix:
                    return prefix
        return prefix

    def advance(self, starter, marks, count):
        """Return (emitted code points, next state) after appending marks."""
        out = self.normalize(starter, marks)
        done = self.settled(starter, marks, count)
        if not done:
            return (), (starter, marks, count)
        if starter is None:
            return done, (None, marks[len(done):], count)
        # The starter is fixed, so composed marks are gone for good.
        return done, (None, out[len(done):], count)

    def pending(self, state) -> tuple[int, ...]:
        starter, marks, _ = state
        return self.normalize(starter, marks)

    def on_mark(self, state, mark):
        starter, marks, count = state
        if count < self.depth:
            return self.advance(starter, tuple(sorted(marks + (mark,), key=U.ccc)), count + 1)
        emitted, nxt = self.advance(None, (mark,), 1)
        return self.pending(state) + emitted, nxt

    def on_starter(self, cp):
        """Next state after a non-mark code point at a segment boundary."""
        if cp in self.starters:
            return (), (cp, (), 0)
        parts = self.composites.get(cp)
        if parts is not None:
            state: tuple = (parts[0], (), 0)
            emitted: tuple[int, ...] = ()
            for m in parts[1:]:
                more, state = self.on_mark(state, m)
                emitted += more
            return emitted, state
        return (cp,), (None, (), 0)


def build_nfc_fst(depth: int = DEFAULT_DEPTH, marks: tuple[int, ...] = REORDERING_MARKS) -> F.Fst:
    model = _SegmentModel(tuple(marks), depth)
    b = F._Builder()

    def arc(src, ilabel, olabel, dst):
        b.add_arc(src, ilabel, olabel, 0.0, dst)

    hub = b.add_state()
    b.finals[hub] = 0.0

    def emit_chain(src, ilabel, out_bytes, dst):
        # One arc consumes the input byte; the rest only write output.
        if not out_bytes:
            arc(src, ilabel, F.EPSILON, dst)
            return
        cur = src
        labels = [F.byte_label(x) for x in out_bytes]
        for k, olabel in enumerate(labels):
            nxt = dst if k == len(labels) - 1 else b.add_state()
            arc(cur, ilabel if k == 0 else F.EPSILON, olabel, nxt)
            cur = nxt

    # Flush paths into the hub share their common suffixes.
    flush_nodes: dict[tuple[int, ...], int] = {(): hub}

    def flush_node(out_bytes: tuple[int, ...]) -> int:
        node = flush_nodes.get(out_bytes)
        if node is None:
            node = b.add_state()
            arc(node, F.EPSILON, F.byte_label(out_bytes[0]), flush_node(out_bytes[1:]))
            flush_nodes[out_bytes] = node
        return node

    ids: dict[tuple, int] = {}
    todo: list[tuple] = []

    def state_id(state) -> int:
        sid = ids.get(state)
        if sid is None:
            sid = ids[state] = b.add_state()
            todo.append(state)
        return sid

    mark_bytes = {m: _utf8([m]) for m in model.mark_set}
    lead_of: dict[int, list[int]] = {}
    for m, bs in sorted(mark_bytes.items()):
        lead_of.setdefault(bs[0], []).append(m)

    empty = state_id((None, (), 0))
    b.start = empty

    # Hub: one complete non-mark character, then back to a segment state.
    special: dict[int, dict[int, int]] = {}
    for cp in sorted(model.starters | set(model.composites) | model.mark_set):
        bs = _utf8([cp])
        special.setdefault(bs[0], {})[bs[1]] = cp
    cont = {1: b.add_state(), 2: b.add_state(), 3: b.add_state()}
    for k in (1, 2, 3):
        target = empty if k == 1 else cont[k - 1]
        for x in range(0x80, 0xC0):
            arc(cont[k], F.byte_label(x), F.byte_label(x), target)
    for x in range(0x00, 0x80):
        arc(hub, F.byte_label(x), F.byte_label(x), empty)
    tails: dict[int, int] = {}
    for lead in range(0xC2, 0xF5):
        width = 1 if lead < 0xE0 else 2 if lead < 0xF0 else 3
        if lead not in special:
            arc(hub, F.byte_label(lead), F.byte_label(lead), cont[width])
            continue
        mid = b.add_state()
        arc(hub, F.byte_label(lead), F.EPSILON, mid)
        for x in range(0x80, 0xC0):
            cp = special[lead].get(x)
            if cp is None:
                tail = tails.get(x)
                if tail is None:
                    tail = tails[x] = b.add_state()
                    arc(tail, F.EPSILON, F.byte_label(x), empty)
                arc(mid, F.byte_label(x), F.byte_label(lead), tail)
            elif cp not in model.mark_set:
                emitted, nxt = model.on_starter(cp)
                emit_chain(mid, F.byte_label(x), _utf8(emitted), state_id(nxt))

    while todo:
        state = todo.pop()
        src = ids[state]
        pending = _utf8(model.pending(state))
        if pending:
            first = flush_node(tuple(pending[1:]))
            arc(src, F.EPSILON, F.byte_label(pending[0]), first)
        else:
            arc(src, F.EPSILON, F.EPSILON, hub)
        for lead, group in sorted(lead_of.items()):
            mid = b.add_state()
            arc(src, F.byte_label(lead), F.EPSILON, mid)
            for m in group:
                emitted, nxt = model.on_mark(state, m)
                emit_chain(mid, F.byte_label(mark_bytes[m][1]), _utf8(emitted), state_id(nxt))
    return F.optimize(b.build())
