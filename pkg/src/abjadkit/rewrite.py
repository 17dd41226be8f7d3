"""Context-dependent rewrite rules compiled into transducers.

A rule ``tau -> psi / lambda _ rho`` is compiled with the classic
five-transducer construction (marker insertion for the right context,
marker insertion for the rule input, replacement, and two left-context
filters).  The result rewrites obligatorily from left to right: the right
context is matched on the input, the left context on the output produced
so far, and text inside a rewritten span is not considered again.

Everything operates on byte labels.  Code-point rules are expanded to UTF-8;
since UTF-8 lead bytes never occur as continuation bytes, a source sequence
can only match at character boundaries.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from . import fst as F
from . import unicode_data as ucd

# Scratch labels; all of them are gone once a rule is compiled.
RBRACE = F.MAX_BYTE_LABEL + 1
LBRACE1 = F.MAX_BYTE_LABEL + 2
LBRACE2 = F.MAX_BYTE_LABEL + 3
BOUNDARY = F.MAX_BYTE_LABEL + 4  # string edge (BOS/EOS) inside contexts
MARKERS = (RBRACE, LBRACE1, LBRACE2)


class RewriteError(F.FstError):
    pass


class EmptySource(RewriteError):
    """The rule input accepts the empty string."""


class DuplicateKey(RewriteError, ValueError):
    pass


class Position(enum.Enum):
    ANY = "ANY"
    ISOLATED = "ISOLATED"
    FINAL = "FINAL"
    NONFINAL = "NONFINAL"


# Sub-transducers are composed in this order.
POSITION_ORDER = (Position.ISOLATED, Position.FINAL, Position.NONFINAL, Position.ANY)

BOW = "BOW"
EOW = "EOW"


@dataclass(frozen=True)
class RewriteRule:
    source: tuple[int, ...]
    target: tuple[int, ...]
    position: Position = Position.ANY
    left_context: tuple[int, ...] | str = ()
    right_context: tuple[int, ...] | str = ()
    comment: str = field(default="", compare=False)
    unconditional: bool = field(default=False, compare=False)

    def __post_init__(self):
        if not self.source:
            raise EmptySource("rule source must be non-empty")
        if self.position is not Position.ANY and (self.left_context or self.right_context):
            raise ValueError("explicit contexts are only supported for ANY rules")


# -- byte-level building blocks ---------------------------------------------

def utf8_labels(cps: Sequence[int]) -> list[int]:
    return [b + 1 for b in "".join(map(chr, cps)).encode("utf-8")]


def codepoint_acceptor(cps: Sequence[int]) -> F.Fst:
    return F.accept_labels(utf8_labels(cps))


def char_set_acceptor(cps: Iterable[int]) -> F.Fst:
    """Deterministic acceptor of the UTF-8 encodings of single code points."""
    return _trie([utf8_labels([cp]) for cp in cps])


def _trie(strings: Iterable[Sequence[int]]) -> F.Fst:
    arcs: list[dict] = [{}]
    finals = set()
    for s in strings:
        q = 0
        for lab in s:
            nxt = arcs[q].get(lab)
            if nxt is None:
                nxt = len(arcs)
                arcs.append({})
                arcs[q][lab] = nxt
            q = nxt
        finals.add(q)
    fst = F.Fst([[(lab, lab, 0.0, t) for lab, t in sorted(d.items())] for d in arcs],
                0, {q: 0.0 for q in finals})
    return F.optimize(fst)


@lru_cache(maxsize=None)
def any_char() -> F.Fst:
    """Acceptor of exactly one well-formed UTF-8 encoded character."""
    def rng(lo, hi):
        return range(lo + 1, hi + 2)

    # states: 0 start, 1 final, 2 need1, 3 need2, 4 need3, 5..8 restricted seconds
    arcs = [[] for _ in range(9)]
    for b in rng(0x00, 0x7F):
        arcs[0].append((b, b, 0.0, 1))
    for b in rng(0xC2, 0xDF):
        arcs[0].append((b, b, 0.0, 2))
    arcs[0].append((0xE0 + 1, 0xE0 + 1, 0.0, 5))
    for b in list(rng(0xE1, 0xEC)) + list(rng(0xEE, 0xEF)):
        arcs[0].append((b, b, 0.0, 3))
    arcs[0].append((0xED + 1, 0xED + 1, 0.0, 6))
    arcs[0].append((0xF0 + 1, 0xF0 + 1, 0.0, 7))
    for b in rng(0xF1, 0xF3):
        arcs[0].append((b, b, 0.0, 4))
    arcs[0].append((0xF4 + 1, 0xF4 + 1, 0.0, 8))
    cont = rng(0x80, 0xBF)
    for b in cont:
        arcs[2].append((b, b, 0.0, 1))
        arcs[3].append((b, b, 0.0, 2))
        arcs[4].append((b, b, 0.0, 3))
    for b in rng(0xA0, 0xBF):
        arcs[5].append((b, b, 0.0, 2))
    for b in rng(0x80, 0x9F):
        arcs[6].append((b, b, 0.0, 2))
    for b in rng(0x90, 0xBF):
        arcs[7].append((b, b, 0.0, 3))
    for b in rng(0x80, 0x8F):
        arcs[8].append((b, b, 0.0, 3))
    return F.optimize(F.Fst(arcs, 0, {1: 0.0}))


class WordBoundary:
    """Decides which code points end a word.

    A code point is a boundary unless it is an Arabic-block letter or mark,
    or one of ``extra_nonboundary``.  The string edge is always a boundary.
    """

    def __init__(self, extra_nonboundary: Iterable[int] = ()):
        self.extra = frozenset(extra_nonboundary)
        self._nb = None
        self._b = None

    def is_boundary(self, cp: int) -> bool:
        if cp in self.extra:
            return False
        return not (ucd.is_arabic_letter(cp) or ucd.is_arabic_mark(cp))

    def nonboundary_codepoints(self) -> list[int]:
        cps = set(self.extra)
        for lo, hi in ucd.ARABIC_BLOCKS:
            cps.update(cp for cp in range(lo, hi + 1)
                       if ucd.is_arabic_letter(cp) or ucd.is_arabic_mark(cp))
        return sorted(cps)

    def nonboundary_char(self) -> F.Fst:
        """Acceptor of one non-boundary character."""
        if self._nb is None:
            self._nb = char_set_acceptor(self.nonboundary_codepoints())
        return self._nb

    def boundary_char(self) -> F.Fst:
        """Acceptor of one boundary character or the string edge."""
        if self._b is None:
            chars = F.difference(any_char(), self.nonboundary_char())
            self._b = F.optimize(F.union(chars, F.accept_labels([BOUNDARY])))
        return self._b

    def __eq__(self, other):
        return isinstance(other, WordBoundary) and self.extra == other.extra

    def __hash__(self):
        return hash(self.extra)


DEFAULT_BOUNDARY = WordBoundary()


# -- the rule compiler ------------------------------------------------------

def _sigma_labels(sigma: F.Fst) -> list[int]:
    labs = sorted(F.alphabet(sigma))
    if not labs:
        raise RewriteError("sigma is empty")
    return labs


def _marker_insert(alpha: F.Fst, markers: Sequence[int]) -> F.Fst:
    """Insert one of ``markers`` after every prefix that reaches a final state.

    ``alpha`` must be a deterministic acceptor.
    """
    n = alpha.num_states
    arcs: list[list] = [[] for _ in range(n)]
    finals = {}
    for s in range(n):
        if alpha.final(s) is not None:
            split = len(arcs)
            arcs.append(list(alpha.arcs(s)))
            finals[split] = 0.0
            for m in markers:
                arcs[s].append((0, m, 0.0, split))
        else:
            arcs[s].extend(alpha.arcs(s))
            finals[s] = 0.0
    return F.Fst(arcs, alpha.start, finals)


def _marker_check(alpha: F.Fst, marker: int, *, complement: bool, passthrough=()) -> F.Fst:
    """Delete ``marker`` where ``alpha`` is (or, with ``complement``, is not) final."""
    n = alpha.num_states
    arcs = []
    for s in range(n):
        st = list(alpha.arcs(s))
        is_final = alpha.final(s) is not None
        if is_final != complement:
            st.append((marker, 0, 0.0, s))
        for m in passthrough:
            st.append((m, m, 0.0, s))
        arcs.append(st)
    return F.Fst(arcs, alpha.start, {s: 0.0 for s in range(n)})


def _sigma_star_then(labels: Sequence[int], beta: F.Fst) -> F.Fst:
    return F.determinize_acceptor(F.concat(F.identity_star(labels), beta))


def _with_fresh_start(a: F.Fst) -> F.Fst:
    """Equivalent machine whose start state has no incoming arcs."""
    if not any(t == a.start for s in a.states() for *_, t in a.arcs(s)):
        return a
    return F.concat(F.epsilon_machine(), a)


def _loops_off_start(a: F.Fst, pairs: Sequence[tuple[int, int]]) -> F.Fst:
    a = F.rmepsilon(_with_fresh_start(a))
    if a.is_empty():
        return a
    return F.add_self_loops(a, pairs, [s for s in a.states() if s != a.start])


def cdrewrite(tau: F.Fst, lam: F.Fst | None, rho: F.Fst | None, sigma: F.Fst) -> F.Fst:
    """Obligatory left-to-right rewrite ``tau / lam _ rho`` over ``sigma``*.

    ``lam`` and ``rho`` are acceptors over the sigma labels plus
    :data:`BOUNDARY`, which matches the string edge.  ``None`` means no
    context.  The result is total: every string over sigma gets exactly
    one output, provided the input side of ``tau`` is prefix-free.
    """
    base = _sigma_labels(sigma)
    if F.rmepsilon(F.project(tau, "input")).final(0) is not None:
        raise EmptySource("rule input accepts the empty string")
    sig = base + [BOUNDARY]
    lam = F.epsilon_machine() if lam is None else lam
    rho = F.epsilon_machine() if rho is None else rho

    # r: '>' before every occurrence of rho.
    r = F.reverse(_marker_insert(_sigma_star_then(sig, F.reverse(rho)), [RBRACE]))

    # f: '<1' or '<2' before every tau followed by '>'.
    phi = _loops_off_start(F.project(tau, "input"), [(RBRACE, RBRACE)])
    phi_rb = F.concat(phi, F.accept_labels([RBRACE]))
    f = F.reverse(_marker_insert(_sigma_star_then(sig + [RBRACE], F.reverse(phi_rb)),
                                 [LBRACE1, LBRACE2]))

    # replace: '<1' tau '>' becomes '<1' psi; '>' is dropped everywhere.
    tau_m = _loops_off_start(tau, [(m, 0) for m in MARKERS])
    seg = F.concat(F.concat(F.accept_labels([LBRACE1]), tau_m), F.cross([RBRACE], []))
    other = F.Fst([[(x, x, 0.0, 1) for x in sig + [LBRACE2]] + [(RBRACE, 0, 0.0, 1)], []],
                  0, {1: 0.0})
    replace = F.closure(F.union(other, seg))

    # l1 / l2: '<1' must follow lam, '<2' must not.
    alpha_l = _sigma_star_then(sig, lam)
    l1 = _marker_check(alpha_l, LBRACE1, complement=False, passthrough=[LBRACE2])
    l2 = _marker_check(alpha_l, LBRACE2, complement=True)

    rule = r
    for step in (f, replace, l1, l2):
        rule = F.optimize(F.compose(rule, step))

    mid = F.identity_star(base)
    insert = F.concat(F.concat(F.invert(F.cross([BOUNDARY], [])), mid),
                      F.invert(F.cross([BOUNDARY], [])))
    delete = F.concat(F.concat(F.cross([BOUNDARY], []), mid), F.cross([BOUNDARY], []))
    return F.optimize(F.compose(F.compose(insert, rule), delete))


# -- code-point rules -------------------------------------------------------

def _context(ctx) -> F.Fst | None:
    if ctx in (BOW, EOW):
        return F.accept_labels([BOUNDARY])
    if not ctx:
        return None
    return codepoint_acceptor(ctx)


def rule_to_fst(rule: RewriteRule, boundary: WordBoundary = DEFAULT_BOUNDARY) -> F.Fst:
    """Compile one code-point rule into a byte-level transducer."""
    tau = F.cross(utf8_labels(rule.source), utf8_labels(rule.target))
    lam = _context(rule.left_context)
    rho = _context(rule.right_context)
    pos = rule.position
    if pos is Position.ISOLATED:
        lam = boundary.boundary_char()
        rho = boundary.boundary_char()
    elif pos is Position.FINAL:
        rho = boundary.boundary_char()
    elif pos is Position.NONFINAL:
        rho = boundary.nonboundary_char()
    return cdrewrite(tau, lam, rho, F.byte_sigma())


def table_to_fst(rules: Sequence[RewriteRule], boundary: WordBoundary = DEFAULT_BOUNDARY) -> F.Fst:
    """Cascade a rule table: isolated, final, non-final, then position-free rules."""
    if not rules:
        raise ValueError("rule table is empty")
    result = None
    for pos in POSITION_ORDER:
        for rule in rules:
            if rule.position is not pos:
                continue
            f = rule_to_fst(rule, boundary)
            result = f if result is None else F.optimize(F.compose(result, f))
    return result


def identity_fst() -> F.Fst:
    """Identity over every byte string."""
    return F.identity_star(range(1, F.MAX_BYTE_LABEL + 1))


def mapping_to_fst(pairs: Sequence[tuple[Sequence[int], Sequence[int]]]) -> F.Fst:
    """Closure of a one-to-one code-point mapping plus identity elsewhere.

    Code points that occur in any left or right side are excluded from
    the identity part, so the inverse of the result is functional too.
    """
    lefts: set = set()
    rights: set = set()
    for left, right in pairs:
        left, right = tuple(left), tuple(right)
        if not left or not right:
            raise ValueError("mapping sides must be non-empty")
        if left in lefts:
            raise DuplicateKey(f"duplicate left side {left}")
        if right in rights:
            raise DuplicateKey(f"duplicate right side {right}")
        lefts.add(left)
        rights.add(right)
    if not pairs:
        return identity_fst()
    used = {cp for side in lefts | rights for cp in side}
    passthrough = F.difference(any_char(), char_set_acceptor(sorted(used)))
    parts = [F.cross(utf8_labels(l), utf8_labels(r)) for l, r in pairs]
    parts.append(passthrough)
    return F.optimize(F.closure(F.union(*parts)))
