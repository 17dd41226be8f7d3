"""Small FST engine over byte labels (tropical weights).

Labels are integers: 0 is epsilon, 1..256 encode the bytes 0x00..0xFF
shifted by one.  Labels above 256 are only used as scratch markers while
compiling rewrite rules and never survive into a finished grammar.

An :class:`Fst` is immutable once built.  Every operation returns a fresh
value, so grammars can be shared freely between threads.
"""

from __future__ import annotations

import heapq
from collections import deque
from typing import Iterable, Iterator, NamedTuple, Sequence

EPSILON = 0
NO_STATE = -1
MAX_BYTE_LABEL = 256

_TOL = 1e-9


class FstError(Exception):
    """Base class for errors raised by the FST engine."""


class NotAnAcceptor(FstError):
    pass


class NoPath(FstError):
    pass


class NotLinear(FstError):
    pass


class InvalidUtf8(FstError, ValueError):
    pass


class RewriteFailed(FstError, ValueError):
    """Raised by :func:`apply` when a string is rejected by a grammar."""


class Arc(NamedTuple):
    ilabel: int
    olabel: int
    weight: float
    nextstate: int


def byte_label(b: int) -> int:
    return b + 1


def label_byte(label: int) -> int:
    if not 1 <= label <= MAX_BYTE_LABEL:
        raise FstError(f"label {label} does not encode a byte")
    return label - 1


class Fst:
    """An immutable weighted transducer.

    ``arcs[s]`` holds the outgoing arcs of state ``s`` as
    ``(ilabel, olabel, weight, nextstate)`` tuples; ``finals`` maps final
    states to their final weight.  ``start`` is ``NO_STATE`` for the empty
    machine.
    """

    __slots__ = ("_arcs", "_start", "_finals", "_index")

    def __init__(self, arcs: Sequence[Sequence[tuple]], start: int, finals: dict[int, float]):
        self._arcs = tuple(tuple(a) for a in arcs)
        self._start = start if self._arcs else NO_STATE
        self._finals = dict(finals)
        self._index = None

    @classmethod
    def _raw(cls, arcs: list, start: int, finals: dict) -> "Fst":
        # Trusted constructor for internal use; ``arcs`` must already be tuples.
        f = object.__new__(cls)
        f._arcs = tuple(arcs)
        f._start = start if f._arcs else NO_STATE
        f._finals = finals
        f._index = None
        return f

    @property
    def start(self) -> int:
        return self._start

    @property
    def num_states(self) -> int:
        return len(self._arcs)

    @property
    def num_arcs(self) -> int:
        return sum(len(a) for a in self._arcs)

    def states(self) -> range:
        return range(len(self._arcs))

    def arcs(self, state: int) -> tuple:
        return self._arcs[state]

    def final(self, state: int) -> float | None:
        """Final weight of ``state`` or None when it is not final."""
        return self._finals.get(state)

    def finals(self) -> dict[int, float]:
        return dict(self._finals)

    def is_empty(self) -> bool:
        return self._start == NO_STATE

    def is_acceptor(self) -> bool:
        return all(i == o for arcs in self._arcs for i, o, _, _ in arcs)

    def max_label(self) -> int:
        return max((max(i, o) for arcs in self._arcs for i, o, _, _ in arcs), default=0)

    def validate(self, max_label: int = MAX_BYTE_LABEL) -> None:
        """Check the structural invariants, raising FstError on violation."""
        n = len(self._arcs)
        if self._start != NO_STATE and not 0 <= self._start < n:
            raise FstError(f"start state {self._start} out of range")
        for s, w in self._finals.items():
            if not 0 <= s < n:
                raise FstError(f"final state {s} out of range")
            if not w >= 0:
                raise FstError(f"negative final weight on state {s}")
        for s, arcs in enumerate(self._arcs):
            for i, o, w, nxt in arcs:
                if not (0 <= i <= max_label and 0 <= o <= max_label):
                    raise FstError(f"label out of range on state {s}")
                if not w >= 0:
                    raise FstError(f"negative arc weight on state {s}")
                if not 0 <= nxt < n:
                    raise FstError(f"arc from {s} points to missing state {nxt}")

    def _input_index(self):
        # Per state: (label -> tuple of (olabel, weight, next), input-epsilon arcs).
        idx = self._index
        if idx is None:
            idx = []
            for arcs in self._arcs:
                by_label: dict[int, list] = {}
                eps = []
                for i, o, w, n in arcs:
                    if i == 0:
                        eps.append((o, w, n))
                    else:
                        by_label.setdefault(i, []).append((o, w, n))
                idx.append((by_label, tuple(eps)))
            self._index = idx
        return idx

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Fst):
            return NotImplemented
        return (self._start == other._start and self._finals == other._finals
                and self._arcs == other._arcs)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"<Fst states={self.num_states} arcs={self.num_arcs} start={self._start}>"


class _Builder:
    """Mutable scratch space used while constructing an Fst."""

    __slots__ = ("arcs", "finals", "start")

    def __init__(self):
        self.arcs: list[list] = []
        self.finals: dict[int, float] = {}
        self.start = NO_STATE

    def add_state(self) -> int:
        self.arcs.append([])
        return len(self.arcs) - 1

    def add_arc(self, s: int, i: int, o: int, w: float, n: int) -> None:
        self.arcs[s].append((i, o, w, n))

    def copy_from(self, fst: Fst) -> int:
        """Append ``fst``'s states; returns the offset of its state ids."""
        off = len(self.arcs)
        for arcs in fst._arcs:
            self.arcs.append([(i, o, w, n + off) for i, o, w, n in arcs])
        return off

    def build(self) -> Fst:
        return Fst._raw([tuple(a) for a in self.arcs], self.start, self.finals)


def empty() -> Fst:
    """The machine that accepts nothing."""
    return Fst._raw([], NO_STATE, {})


def epsilon_machine() -> Fst:
    """Accepts only the empty string."""
    return Fst._raw([()], 0, {0: 0.0})


# -- construction -----------------------------------------------------------

def compile_string(data: bytes | str) -> Fst:
    """Linear acceptor for a byte string (``str`` is encoded as UTF-8)."""
    if isinstance(data, str):
        data = data.encode("utf-8")
    arcs = [((b + 1, b + 1, 0.0, k + 1),) for k, b in enumerate(data)]
    arcs.append(())
    return Fst._raw(arcs, 0, {len(data): 0.0})


def accept_labels(labels: Sequence[int]) -> Fst:
    """Linear acceptor over raw labels."""
    arcs = [((lab, lab, 0.0, k + 1),) for k, lab in enumerate(labels)]
    arcs.append(())
    return Fst._raw(arcs, 0, {len(labels): 0.0})


def cross(upper: Sequence[int], lower: Sequence[int], weight: float = 0.0) -> Fst:
    """Linear transducer mapping the label string ``upper`` to ``lower``.

    Input and output are aligned from the left; the longer side is padded
    with epsilons at the end.
    """
    n = max(len(upper), len(lower))
    if n == 0:
        return Fst._raw([()], 0, {0: weight})
    arcs = []
    for k in range(n):
        i = upper[k] if k < len(upper) else 0
        o = lower[k] if k < len(lower) else 0
        arcs.append(((i, o, 0.0, k + 1),))
    arcs.append(())
    return Fst._raw(arcs, 0, {n: weight})


def label_class(labels: Iterable[int]) -> Fst:
    """Two-state acceptor of single labels."""
    arcs0 = tuple((lab, lab, 0.0, 1) for lab in sorted(set(labels)))
    return Fst._raw([arcs0, ()], 0, {1: 0.0})


def byte_sigma() -> Fst:
    """Acceptor of any single byte."""
    return label_class(range(1, MAX_BYTE_LABEL + 1))


def identity_star(labels: Iterable[int]) -> Fst:
    """One-state acceptor of any string over ``labels``."""
    arcs0 = tuple((lab, lab, 0.0, 0) for lab in sorted(set(labels)))
    return Fst._raw([arcs0], 0, {0: 0.0})


# -- rational operations ----------------------------------------------------

def union(a: Fst, b: Fst, *more: Fst) -> Fst:
    """Union of two or more machines."""
    parts = [f for f in (a, b) + more if not f.is_empty()]
    if not parts:
        return empty()
    bld = _Builder()
    s = bld.add_state()
    bld.start = s
    for f in parts:
        off = bld.copy_from(f)
        bld.add_arc(s, 0, 0, 0.0, f._start + off)
        for q, w in f._finals.items():
            bld.finals[q + off] = w
    return bld.build()


def concat(a: Fst, b: Fst) -> Fst:
    if a.is_empty() or b.is_empty():
        return empty()
    bld = _Builder()
    off_a = bld.copy_from(a)
    off_b = bld.copy_from(b)
    bld.start = a._start + off_a
    for q, w in a._finals.items():
        bld.add_arc(q + off_a, 0, 0, w, b._start + off_b)
    for q, w in b._finals.items():
        bld.finals[q + off_b] = w
    return bld.build()


def closure(a: Fst, plus: bool = False) -> Fst:
    """Kleene star (or plus) of ``a``."""
    if a.is_empty():
        return empty() if plus else epsilon_machine()
    bld = _Builder()
    off = bld.copy_from(a)
    for q, w in a._finals.items():
        bld.finals[q + off] = w
        bld.add_arc(q + off, 0, 0, w, a._start + off)
    if plus:
        bld.start = a._start + off
    else:
        s = bld.add_state()
        bld.start = s
        bld.finals[s] = 0.0
        bld.add_arc(s, 0, 0, 0.0, a._start + off)
    return bld.build()


def invert(a: Fst) -> Fst:
    arcs = [tuple((o, i, w, n) for i, o, w, n in st) for st in a._arcs]
    return Fst._raw(arcs, a._start, dict(a._finals))


def project(a: Fst, side: str = "input") -> Fst:
    if side == "input":
        arcs = [tuple((i, i, w, n) for i, o, w, n in st) for st in a._arcs]
    elif side == "output":
        arcs = [tuple((o, o, w, n) for i, o, w, n in st) for st in a._arcs]
    else:
        raise ValueError(f"unknown side {side!r}")
    return Fst._raw(arcs, a._start, dict(a._finals))


def reverse(a: Fst) -> Fst:
    """Machine for the reversed relation; state 0 is a fresh start state."""
    if a.is_empty():
        return empty()
    n = a.num_states
    arcs: list[list] = [[] for _ in range(n + 1)]
    for s, st in enumerate(a._arcs):
        for i, o, w, nxt in st:
            arcs[nxt + 1].append((i, o, w, s + 1))
    for q, w in a._finals.items():
        arcs[0].append((0, 0, w, q + 1))
    return Fst._raw([tuple(x) for x in arcs], 0, {a._start + 1: 0.0})


def add_self_loops(a: Fst, pairs: Iterable[tuple[int, int]],
                   states: Iterable[int] | None = None) -> Fst:
    """Add ``(ilabel, olabel)`` self-loops on the given states (default all)."""
    pairs = list(pairs)
    targets = set(a.states() if states is None else states)
    arcs = []
    for s, st in enumerate(a._arcs):
        if s in targets:
            st = st + tuple((i, o, 0.0, s) for i, o in pairs)
        arcs.append(st)
    return Fst._raw(arcs, a._start, dict(a._finals))


# -- composition ------------------------------------------------------------

def compose(a: Fst, b: Fst) -> Fst:
    """Relational composition with an epsilon-sequencing filter.

    Output-epsilon moves of ``a`` are taken before input-epsilon moves of
    ``b``; once ``b`` has moved alone, ``a`` must wait for a matched move.
    This keeps exactly one path per pairing of the two machines' paths.
    """
    if a.is_empty() or b.is_empty():
        return empty()
    bidx = b._input_index()
    aarcs = a._arcs
    afin = a._finals
    bfin = b._finals
    start = (a._start, b._start, 0)
    ids = {start: 0}
    queue = [start]
    out: list = []
    finals: dict[int, float] = {}
    pos = 0
    while pos < len(queue):
        s1, s2, filt = queue[pos]
        sid = pos
        pos += 1
        res = []
        if s1 in afin and s2 in bfin:
            finals[sid] = afin[s1] + bfin[s2]
        bmatch, beps = bidx[s2]
        for i, o, w, n1 in aarcs[s1]:
            if o == 0:
                if filt == 0:
                    key = (n1, s2, 0)
                    t = ids.get(key)
                    if t is None:
                        t = ids[key] = len(queue)
                        queue.append(key)
                    res.append((i, 0, w, t))
            else:
                m = bmatch.get(o)
                if m:
                    for o2, w2, n2 in m:
                        key = (n1, n2, 0)
                        t = ids.get(key)
                        if t is None:
                            t = ids[key] = len(queue)
                            queue.append(key)
                        res.append((i, o2, w + w2, t))
        for o2, w2, n2 in beps:
            key = (s1, n2, 1)
            t = ids.get(key)
            if t is None:
                t = ids[key] = len(queue)
                queue.append(key)
            res.append((0, o2, w2, t))
        out.append(tuple(res))
    return connect(Fst._raw(out, 0, finals))


def intersect(a: Fst, b: Fst) -> Fst:
    """Intersection of two acceptors."""
    _require_acceptor(a)
    _require_acceptor(b)
    return compose(a, b)


# -- structural clean-up ----------------------------------------------------

def connect(a: Fst) -> Fst:
    """Drop states that are not both accessible and co-accessible."""
    if a.is_empty():
        return a
    arcs = a._arcs
    n = len(arcs)
    acc = bytearray(n)
    acc[a._start] = 1
    stack = [a._start]
    rev: list[list[int]] = [[] for _ in range(n)]
    while stack:
        s = stack.pop()
        for _, _, _, t in arcs[s]:
            rev[t].append(s)
            if not acc[t]:
                acc[t] = 1
                stack.append(t)
    coacc = bytearray(n)
    stack = [q for q in a._finals if acc[q]]
    for q in stack:
        coacc[q] = 1
    while stack:
        s = stack.pop()
        for p in rev[s]:
            if not coacc[p]:
                coacc[p] = 1
                stack.append(p)
    if not coacc[a._start]:
        return empty()
    if all(coacc):
        return a
    remap = [-1] * n
    k = 0
    for s in range(n):
        if coacc[s]:
            remap[s] = k
            k += 1
    new = []
    for s in range(n):
        if coacc[s]:
            new.append(tuple((i, o, w, remap[t]) for i, o, w, t in arcs[s] if coacc[t]))
    finals = {remap[q]: w for q, w in a._finals.items() if coacc[q]}
    return Fst._raw(new, remap[a._start], finals)


def rmepsilon(a: Fst) -> Fst:
    """Remove arcs labelled epsilon on both sides."""
    if a.is_empty():
        return a
    arcs = a._arcs
    if not any(i == 0 and o == 0 for st in arcs for i, o, _, _ in st):
        return connect(a)
    new = []
    finals: dict[int, float] = {}
    for s in range(len(arcs)):
        if not any(i == 0 and o == 0 for i, o, _, _ in arcs[s]):
            new.append(arcs[s])
            if s in a._finals:
                finals[s] = a._finals[s]
            continue
        # Dijkstra over the epsilon subgraph reachable from s.
        dist = {s: 0.0}
        heap = [(0.0, s)]
        done = set()
        while heap:
            d, q = heapq.heappop(heap)
            if q in done:
                continue
            done.add(q)
            for i, o, w, t in arcs[q]:
                if i == 0 and o == 0:
                    nd = d + w
                    if nd < dist.get(t, float("inf")) - _TOL:
                        dist[t] = nd
                        heapq.heappush(heap, (nd, t))
        best: dict[tuple, float] = {}
        fw = None
        for q, d in dist.items():
            qf = a._finals.get(q)
            if qf is not None and (fw is None or d + qf < fw):
                fw = d + qf
            for i, o, w, t in arcs[q]:
                if i == 0 and o == 0:
                    continue
                key = (i, o, t)
                nw = d + w
                if key not in best or nw < best[key]:
                    best[key] = nw
        new.append(tuple((i, o, w, t) for (i, o, t), w in best.items()))
        if fw is not None:
            finals[s] = fw
    return connect(Fst._raw(new, a._start, finals))


def _is_unweighted(a: Fst) -> bool:
    if any(w != 0 for w in a._finals.values()):
        return False
    return all(w == 0 for st in a._arcs for _, _, w, _ in st)


def _determinize_encoded(a: Fst) -> Fst:
    """Subset construction treating each (ilabel, olabel) pair as one symbol.

    ``a`` must be epsilon-free.  Weights are handled with residuals in the
    tropical semiring; for unweighted input this is plain subset
    construction and always terminates.
    """
    if a.is_empty():
        return a
    arcs = a._arcs
    afin = a._finals
    unweighted = _is_unweighted(a)
    if unweighted:
        start = frozenset((a._start,))
    else:
        start = frozenset(((a._start, 0.0),))
    ids = {start: 0}
    queue = [start]
    out = []
    finals: dict[int, float] = {}
    pos = 0
    while pos < len(queue):
        subset = queue[pos]
        sid = pos
        pos += 1
        if unweighted:
            groups: dict[tuple, set] = {}
            is_final = False
            for q in subset:
                if q in afin:
                    is_final = True
                for i, o, _, t in arcs[q]:
                    g = groups.get((i, o))
                    if g is None:
                        groups[(i, o)] = {t}
                    else:
                        g.add(t)
            if is_final:
                finals[sid] = 0.0
            res = []
            for lab in sorted(groups):
                nxt = frozenset(groups[lab])
                t = ids.get(nxt)
                if t is None:
                    t = ids[nxt] = len(queue)
                    queue.append(nxt)
                res.append((lab[0], lab[1], 0.0, t))
            out.append(tuple(res))
        else:
            wgroups: dict[tuple, dict] = {}
            fw = None
            for q, r in subset:
                if q in afin and (fw is None or r + afin[q] < fw):
                    fw = r + afin[q]
                for i, o, w, t in arcs[q]:
                    g = wgroups.setdefault((i, o), {})
                    c = r + w
                    if t not in g or c < g[t]:
                        g[t] = c
            if fw is not None:
                finals[sid] = fw
            res = []
            for lab in sorted(wgroups):
                g = wgroups[lab]
                wmin = min(g.values())
                nxt = frozenset((t, round(c - wmin, 9)) for t, c in g.items())
                t = ids.get(nxt)
                if t is None:
                    t = ids[nxt] = len(queue)
                    queue.append(nxt)
                res.append((lab[0], lab[1], wmin, t))
            out.append(tuple(res))
    return Fst._raw(out, 0, finals)


def _minimize_deterministic(a: Fst) -> Fst:
    """Moore partition refinement of an encoded-deterministic machine."""
    if a.is_empty():
        return a
    arcs = a._arcs
    n = len(arcs)
    fin = a._finals
    keys: dict = {}
    block = []
    for s in range(n):
        k = fin.get(s)
        block.append(keys.setdefault(k, len(keys)))
    nblocks = len(keys)
    while True:
        sigs: dict = {}
        new_block = []
        for s in range(n):
            sig = (block[s], tuple((i, o, w, block[t]) for i, o, w, t in arcs[s]))
            new_block.append(sigs.setdefault(sig, len(sigs)))
        block = new_block
        if len(sigs) == nblocks:
            break
        nblocks = len(sigs)
    if nblocks == n:
        return a
    rep: dict[int, int] = {}
    for s in range(n):
        rep.setdefault(block[s], s)
    new = [()] * nblocks
    for b, s in rep.items():
        new[b] = tuple((i, o, w, block[t]) for i, o, w, t in arcs[s])
    finals = {block[s]: w for s, w in fin.items()}
    return Fst._raw(new, block[a._start], finals)


def _canonical(a: Fst) -> Fst:
    """Renumber states breadth-first with arcs sorted by (ilabel, olabel, next)."""
    if a.is_empty():
        return a
    arcs = a._arcs
    order = {a._start: 0}
    queue = [a._start]
    pos = 0
    while pos < len(queue):
        s = queue[pos]
        pos += 1
        for _, _, _, t in sorted(arcs[s]):
            if t not in order:
                order[t] = len(queue)
                queue.append(t)
    new = []
    for s in queue:
        new.append(tuple(sorted(((i, o, w, order[t]) for i, o, w, t in arcs[s]),
                                key=lambda x: (x[0], x[1], x[3], x[2]))))
    finals = {order[q]: w for q, w in a._finals.items() if q in order}
    return Fst._raw(new, 0, finals)


def arcsort(a: Fst) -> Fst:
    arcs = [tuple(sorted(st, key=lambda x: (x[0], x[1], x[3], x[2]))) for st in a._arcs]
    return Fst._raw(arcs, a._start, dict(a._finals))


def optimize(a: Fst) -> Fst:
    """Relation-preserving clean-up.

    Removes epsilon arcs and dead states.  Unweighted machines are further
    determinized and minimized as acceptors over (ilabel, olabel) pairs,
    which never changes the relation.  States are renumbered canonically, so
    the result is identical for structurally different but equivalent
    unweighted inputs, and ``optimize`` is idempotent.
    """
    b = rmepsilon(a)
    if b.is_empty():
        return b
    if _is_unweighted(b):
        b = _minimize_deterministic(_canonical(_determinize_encoded(b)))
    return _canonical(b)


# -- acceptor algebra -------------------------------------------------------

def _require_acceptor(a: Fst) -> None:
    for st in a._arcs:
        for i, o, _, _ in st:
            if i != o:
                raise NotAnAcceptor("machine has an arc with ilabel != olabel")


def determinize_acceptor(a: Fst) -> Fst:
    """Equivalent deterministic acceptor (tropical weights are pushed forward)."""
    _require_acceptor(a)
    b = rmepsilon(a)
    if b.is_empty():
        return b
    return _canonical(_determinize_encoded(b))


def alphabet(*fsts: Fst) -> set[int]:
    labs: set[int] = set()
    for f in fsts:
        for st in f._arcs:
            for i, o, _, _ in st:
                if i:
                    labs.add(i)
                if o:
                    labs.add(o)
    return labs


def complement(a: Fst, labels: Iterable[int]) -> Fst:
    """Complement of an unweighted acceptor relative to ``labels``*."""
    labels = sorted(set(labels))
    d = determinize_acceptor(a)
    if d.is_empty():
        return identity_star(labels)
    n = d.num_states
    sink = n
    arcs = []
    finals = {}
    for s in range(n):
        have = {i for i, _, _, _ in d._arcs[s]}
        st = [(i, i, 0.0, t) for i, _, _, t in d._arcs[s]]
        st.extend((lab, lab, 0.0, sink) for lab in labels if lab not in have)
        arcs.append(tuple(st))
        if s not in d._finals:
            finals[s] = 0.0
    arcs.append(tuple((lab, lab, 0.0, sink) for lab in labels))
    finals[sink] = 0.0
    return connect(Fst._raw(arcs, d._start, finals))


def difference(a: Fst, b: Fst) -> Fst:
    """Acceptor of L(a) minus L(b); weights of ``a`` are kept."""
    _require_acceptor(a)
    _require_acceptor(b)
    if b.is_empty():
        return a
    labels = alphabet(a, b)
    return compose(a, complement(b, labels))


# -- paths ------------------------------------------------------------------

def _distance_to_final(a: Fst) -> list:
    """Best (cost, arc count) from every state to acceptance."""
    n = a.num_states
    rev: list[list] = [[] for _ in range(n)]
    for s, st in enumerate(a._arcs):
        for _, _, w, t in st:
            rev[t].append((s, w))
    inf = (float("inf"), 0)
    dist = [inf] * n
    heap = []
    for q, w in a._finals.items():
        if (w, 0) < dist[q]:
            dist[q] = (w, 0)
            heapq.heappush(heap, (w, 0, q))
    while heap:
        c, h, q = heapq.heappop(heap)
        if (c, h) > dist[q]:
            continue
        for p, w in rev[q]:
            cand = (c + w, h + 1)
            if cand < dist[p]:
                dist[p] = cand
                heapq.heappush(heap, (cand[0], cand[1], p))
    return dist


def shortest_path(a: Fst) -> Fst:
    """Single-path machine for a minimum-cost accepting path.

    Among equal-cost paths the one with fewest arcs wins, and remaining
    ties go to the lexicographically smallest (ilabel, olabel) sequence.
    """
    if a.is_empty():
        raise NoPath("machine accepts nothing")
    dist = _distance_to_final(a)
    best_cost, hops = dist[a._start]
    if best_cost == float("inf"):
        raise NoPath("machine accepts nothing")
    frontier = {a._start: 0.0}
    arcs = []
    spent = 0.0
    for k in range(hops):
        left = hops - k - 1
        cands = []
        for s, g in frontier.items():
            for i, o, w, t in a._arcs[s]:
                dc, dh = dist[t]
                if dh == left and abs(g + w + dc - best_cost) <= _TOL:
                    cands.append((i, o, t, g + w))
        i0, o0 = min((c[0], c[1]) for c in cands)
        nxt: dict[int, float] = {}
        for i, o, t, g in cands:
            if i == i0 and o == o0 and (t not in nxt or g < nxt[t]):
                nxt[t] = g
        cost = min(nxt.values())
        arcs.append(((i0, o0, max(cost - spent, 0.0), k + 1),))
        spent = cost
        frontier = nxt
    arcs.append(())
    return Fst._raw(arcs, 0, {hops: max(best_cost - spent, 0.0)})


def fst_to_string(a: Fst) -> bytes:
    """Output bytes of a single-path machine, epsilons skipped."""
    if a.is_empty():
        raise NoPath("machine accepts nothing")
    out = bytearray()
    s = a._start
    seen = set()
    while True:
        if s in seen:
            raise NotLinear("machine has a cycle")
        seen.add(s)
        arcs = a._arcs[s]
        if not arcs:
            if s not in a._finals:
                raise NotLinear("path ends in a non-final state")
            break
        if len(arcs) > 1 or s in a._finals:
            raise NotLinear("machine branches")
        _, o, _, t = arcs[0]
        if o:
            out.append(label_byte(o))
        s = t
    data = bytes(out)
    try:
        data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise InvalidUtf8(str(e)) from None
    return data


def output_strings(a: Fst, limit: int = 10_000) -> set[bytes]:
    """All output byte strings of an acyclic machine (raises on cycles)."""
    a = connect(a)
    if a.is_empty():
        return set()
    results: set[bytes] = set()
    stack = [(a._start, b"", frozenset())]
    while stack:
        s, acc, onpath = stack.pop()
        if s in onpath:
            raise NotLinear("machine is cyclic")
        if s in a._finals:
            results.add(acc)
            if len(results) > limit:
                raise FstError("too many outputs")
        here = onpath | {s}
        for _, o, _, t in a._arcs[s]:
            stack.append((t, acc + bytes([o - 1]) if o else acc, here))
    return results


def _to_bytes(text: str | bytes) -> bytes:
    if isinstance(text, bytes):
        try:
            text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise InvalidUtf8(str(e)) from None
        return text
    try:
        return text.encode("utf-8")
    except UnicodeEncodeError as e:
        raise InvalidUtf8(str(e)) from None


def apply(text: str | bytes, fsts: Iterable[Fst]) -> str:
    """Run ``text`` through a cascade of grammars and return the best output."""
    data = _to_bytes(text)
    composed = compile_string(data)
    for f in fsts:
        # compose() trims dead states, which is all shortest_path needs.
        composed = compose(composed, f)
        if composed.is_empty():
            raise RewriteFailed(f"Error for string `{data.decode('utf-8')}`")
    return fst_to_string(shortest_path(composed)).decode("utf-8")


def transduce(fst: Fst, text: str | bytes) -> set[str]:
    """Every output string ``fst`` assigns to ``text``."""
    lattice = compose(compile_string(_to_bytes(text)), fst)
    return {s.decode("utf-8", errors="replace") for s in output_strings(lattice)}


def string_pairs(a: Fst, max_len: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...], float]]:
    """Enumerate (input labels, output labels, best weight) for inputs up to ``max_len``.

    Paths are explored breadth-first over states; output length is capped
    at ``2 * max_len + 4`` labels so that cyclic epsilon-input loops
    terminate.
    """
    a = connect(a)
    if a.is_empty():
        return iter(())
    best: dict[tuple, float] = {}
    cap = 2 * max_len + 4
    queue = deque([(a._start, (), (), 0.0)])
    seen: dict[tuple, float] = {}
    while queue:
        s, ins, outs, c = queue.popleft()
        key = (s, ins, outs)
        if key in seen and seen[key] <= c:
            continue
        seen[key] = c
        fw = a._finals.get(s)
        if fw is not None:
            k = (ins, outs)
            if k not in best or c + fw < best[k]:
                best[k] = c + fw
        for i, o, w, t in a._arcs[s]:
            ni = ins + (i,) if i else ins
            no = outs + (o,) if o else outs
            if len(ni) > max_len or len(no) > cap:
                continue
            queue.append((t, ni, no, c + w))
    return iter(sorted((i, o, w) for (i, o), w in best.items()))
