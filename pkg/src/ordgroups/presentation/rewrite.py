"""Bounded word-problem machinery: relator rules, rewrite balls and replayable chains.

A rule ``u -> v`` exists whenever ``u v^-1`` is a cyclic rotation of a
relator or of its inverse.  Applying it to a word replaces an occurrence of
``u`` by ``v`` and freely reduces.  With ``u`` empty this inserts a relator;
with ``v`` empty it deletes one.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .words import Presentation, Word, cyclic_reduce, free_reduce, inverse, rotations


class RuleSet:
    def __init__(self, p: Presentation):
        rots = set()
        for r in p.relators:
            r = cyclic_reduce(r)
            for s in (r, inverse(r)):
                rots.update(rotations(s))
        rots.discard(())
        self.rotations = frozenset(rots)
        rules: dict = {}
        for rho in sorted(rots):
            for s in range(len(rho) + 1):
                rules.setdefault(rho[:s], []).append(inverse(rho[s:]))
        self.rules = {u: sorted(set(vs), key=lambda v: (len(v), v)) for u, vs in rules.items()}
        self.max_lhs = max((len(u) for u in self.rules), default=0)

    def is_rule(self, u, v) -> bool:
        return tuple(u) + inverse(v) in self.rotations

    def neighbours(self, w: Word, max_len: int):
        """Yield (pos, u, v, result) for every single rule application within max_len."""
        n = len(w)
        for pos in range(n + 1):
            for k in range(min(self.max_lhs, n - pos) + 1):
                u = w[pos:pos + k]
                for v in self.rules.get(u, ()):
                    out = _splice(w[:pos], v, w[pos + k:], max_len)
                    if out is not None:
                        yield pos, u, v, out


def _splice(left: Word, mid: Word, right: Word, max_len: int) -> Word | None:
    """Reduced form of left+mid+right for reduced pieces, or None if longer than max_len."""
    nl, nm, nr = len(left), len(mid), len(right)
    i = 0
    while i < nl and i < nm and left[nl - 1 - i] == -mid[i]:
        i += 1
    j = 0
    while j < nr and i + j < nm and mid[nm - 1 - j] == -right[j]:
        j += 1
    if i + j == nm:
        # mid cancelled completely, so left and right now meet
        a, b = nl - i, j
        while a and b < nr and left[a - 1] == -right[b]:
            a -= 1
            b += 1
        return left[:a] + right[b:] if a + nr - b <= max_len else None
    if nl + nm + nr - 2 * (i + j) > max_len:
        return None
    return left[:nl - i] + mid[i:nm - j] + right[j:]


@dataclass(frozen=True)
class Step:
    pos: int
    u: Word
    v: Word

    def to_json(self):
        return {"pos": self.pos, "u": list(self.u), "v": list(self.v)}

    @classmethod
    def from_json(cls, obj) -> "Step":
        return cls(int(obj["pos"]), tuple(int(x) for x in obj["u"]), tuple(int(x) for x in obj["v"]))


@dataclass(frozen=True)
class Chain:
    """words[0] -> words[1] -> ... with steps[i] turning words[i] into words[i+1]."""

    words: tuple
    steps: tuple

    @property
    def start(self) -> Word:
        return self.words[0]

    @property
    def end(self) -> Word:
        return self.words[-1]

    def __len__(self):
        return len(self.steps)

    def to_json(self):
        return {"words": [list(w) for w in self.words], "steps": [s.to_json() for s in self.steps]}

    @classmethod
    def from_json(cls, obj) -> "Chain":
        return cls(tuple(tuple(int(x) for x in w) for w in obj["words"]), tuple(Step.from_json(s) for s in obj["steps"]))


def apply_step(w: Word, step: Step) -> Word | None:
    if w[step.pos:step.pos + len(step.u)] != step.u:
        return None
    return free_reduce(w[:step.pos] + step.v + w[step.pos + len(step.u):])


def verify_chain(chain: Chain, p: Presentation, start=None, end=None) -> bool:
    """Replay every step against the relators of ``p``; no search."""
    rules = RuleSet(p)
    if len(chain.words) != len(chain.steps) + 1:
        return False
    if chain.words[0] != free_reduce(chain.words[0]):
        return False
    if start is not None and chain.start != free_reduce(start):
        return False
    if end is not None and chain.end != free_reduce(end):
        return False
    for w, step, nxt in zip(chain.words, chain.steps, chain.words[1:]):
        if not rules.is_rule(step.u, step.v) or apply_step(w, step) != nxt:
            return False
    return True


@dataclass(frozen=True)
class RewriteBounds:
    max_len: int = 16
    max_steps: int = 12
    max_nodes: int = 2000


@dataclass
class BallResult:
    words: set
    truncated: bool
    parents: dict = field(default_factory=dict, repr=False)

    def __contains__(self, w):
        return tuple(w) in self.words

    def chain_to(self, w) -> Chain:
        w = tuple(w)
        words, steps = [w], []
        while self.parents.get(w) is not None:
            prev, step = self.parents[w]
            words.append(prev)
            steps.append(step)
            w = prev
        return Chain(tuple(reversed(words)), tuple(reversed(steps)))


def rewrite_ball(w, p: Presentation, max_len: int, max_steps: int, max_nodes: int | None = None) -> BallResult:
    """Breadth-first closure of ``w`` under rule applications.

    ``truncated`` is set when some rewrite was cut by ``max_len``, when the
    last layer still produced new words, or when ``max_nodes`` was reached.
    """
    if max_len < 1 or max_steps < 1:
        raise ValueError("bounds must be positive")
    rules = RuleSet(p)
    start = free_reduce(w)
    parents = {start: None}
    layer, truncated = [start], len(start) > max_len
    for _ in range(max_steps):
        nxt = []
        for x in layer:
            for pos, u, v, y in rules.neighbours(x, 10 ** 9):
                if len(y) > max_len:
                    truncated = True
                    continue
                if y not in parents:
                    parents[y] = (x, Step(pos, u, v))
                    nxt.append(y)
                    if max_nodes is not None and len(parents) >= max_nodes:
                        return BallResult(set(parents), True, parents)
        layer = nxt
        if not layer:
            break
    else:
        truncated = truncated or bool(layer)
    return BallResult(set(parents), truncated, parents)


def prove_trivial(w, p: Presentation, bounds: RewriteBounds = RewriteBounds(), rules: RuleSet | None = None) -> Chain | None:
    """Best-first search (shortest word first) for a chain from ``w`` to the empty word.

    Returns None when the node budget runs out.
    """
    rules = rules or RuleSet(p)
    start = free_reduce(w)
    if not start:
        return Chain((start,), ())
    parents = {start: None}
    heap = [(len(start), 0, start)]
    expanded = 0
    while heap and expanded < bounds.max_nodes:
        _, d, x = heapq.heappop(heap)
        expanded += 1
        if d >= bounds.max_steps:
            continue
        for pos, u, v, y in rules.neighbours(x, bounds.max_len):
            if y in parents:
                continue
            parents[y] = (x, Step(pos, u, v))
            if not y:
                return BallResult(set(), False, parents).chain_to(y)
            heapq.heappush(heap, (len(y), d + 1, y))
    return None
