"""Bounded bidirectional search for relation derivations between two words.

A positive verdict carries a replayable trace of relation applications; an
``unknown`` verdict only means the budget ran out.  Inequality can only be
certified by :func:`vsbraid.representation.rep_equal`.

Search states are free-reduced words.  Every free reduction is itself an
application of one of the catalog's identity relations (``s S = 1``,
``v v = 1``, ``u U = 1``, ...), and the trace records those steps
explicitly, so it replays with :func:`apply_relation_at` alone.  Inserting
an identity pair is never a useful move on a free-reduced state, so the
search does not generate such insertions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .presentations import PresentationCatalog, Relation
from .words import BraidWord, Letter, WordError, free_reduce_letters, free_reduction_steps

FORWARD = "forward"
BACKWARD = "backward"


class NoMatch(WordError):
    """The relation side does not occur at the requested position."""


@dataclass(frozen=True)
class RewriteStep:
    relation: Relation
    position: int
    direction: str

    @property
    def source(self) -> tuple[Letter, ...]:
        side = self.relation.lhs if self.direction == FORWARD else self.relation.rhs
        return side.letters

    @property
    def target(self) -> tuple[Letter, ...]:
        side = self.relation.rhs if self.direction == FORWARD else self.relation.lhs
        return side.letters

    def inverted(self) -> RewriteStep:
        """The step undoing this one (applied to this step's result)."""
        return RewriteStep(self.relation, self.position, BACKWARD if self.direction == FORWARD else FORWARD)

    def to_json(self) -> dict:
        return {
            "family": self.relation.family,
            "params": dict(self.relation.params),
            "relation": str(self.relation),
            "position": self.position,
            "direction": self.direction,
        }


def apply_relation_at(w: BraidWord, rel: Relation, pos: int, direction: str = FORWARD) -> BraidWord:
    """Replace the occurrence of one side of ``rel`` at ``pos`` by the other side."""
    if direction not in (FORWARD, BACKWARD):
        raise ValueError(f"direction must be {FORWARD!r} or {BACKWARD!r}")
    if rel.lhs.n != w.n:
        raise WordError("relation and word have different strand counts")
    step = RewriteStep(rel, pos, direction)
    src, dst = step.source, step.target
    if not 0 <= pos <= len(w) or w.letters[pos : pos + len(src)] != src:
        raise NoMatch(f"{' '.join(map(str, src)) or '1'} does not occur at position {pos} of {w}")
    return BraidWord(w.n, w.letters[:pos] + dst + w.letters[pos + len(src) :])


def replay(w: BraidWord, trace: Sequence[RewriteStep]) -> BraidWord:
    for step in trace:
        w = apply_relation_at(w, step.relation, step.position, step.direction)
    return w


@dataclass(frozen=True)
class Budget:
    max_depth: int = 8
    max_states: int = 200_000
    max_length: int | None = None  # default: max(|w1|, |w2|) + 8


@dataclass
class SearchStats:
    states: int = 0
    rounds: int = 0
    depth: int | None = None
    reason: str = ""

    def to_json(self) -> dict:
        return {"states": self.states, "rounds": self.rounds, "depth": self.depth, "reason": self.reason}


@dataclass
class Verdict:
    status: str  # "equivalent" or "unknown"
    trace: list[RewriteStep] = field(default_factory=list)
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def equivalent(self) -> bool:
        return self.status == "equivalent"

    def to_json(self, start: BraidWord | None = None) -> dict:
        out = {"verdict": self.status, "stats": self.stats.to_json()}
        if self.equivalent:
            steps = []
            w = start
            for step in self.trace:
                entry = step.to_json()
                if w is not None:
                    w = apply_relation_at(w, step.relation, step.position, step.direction)
                    entry["result"] = str(w)
                steps.append(entry)
            out["trace"] = steps
        return out


Node = tuple[Letter, ...]
Move = tuple[Relation, str, Node, Node]


class _Rewriter:
    """Relation moves and identity-relation lookups for one catalog and n."""

    def __init__(self, relations: Sequence[Relation]):
        self.moves: dict[Letter, list[Move]] = {}
        self.identity: dict[Node, Relation] = {}
        for rel in relations:
            for direction, src, dst in (
                (FORWARD, rel.lhs.letters, rel.rhs.letters),
                (BACKWARD, rel.rhs.letters, rel.lhs.letters),
            ):
                if not src or src == dst:
                    continue
                self.moves.setdefault(src[0], []).append((rel, direction, src, dst))
            if not rel.rhs.letters and len(rel.lhs) == 2:
                self.identity.setdefault(rel.lhs.letters, rel)

    def reduction_trace(self, letters: Node) -> list[RewriteStep]:
        steps = []
        current = list(letters)
        for pos in free_reduction_steps(letters):
            pair = tuple(current[pos : pos + 2])
            rel = self.identity.get(pair)
            if rel is None:
                raise WordError(f"catalog has no identity relation for {' '.join(map(str, pair))}")
            steps.append(RewriteStep(rel, pos, FORWARD))
            del current[pos : pos + 2]
        return steps

    def neighbours(self, node: Node, max_length: int):
        """(successor, edge steps) pairs, ordered by (length, tokens) of the successor."""
        found = []
        for pos, letter in enumerate(node):
            for rel, direction, src, dst in self.moves.get(letter, ()):
                end = pos + len(src)
                if node[pos:end] != src:
                    continue
                raw = node[:pos] + dst + node[end:]
                nxt = free_reduce_letters(raw)
                if len(nxt) > max_length:
                    continue
                found.append((nxt, RewriteStep(rel, pos, direction), raw))
        found.sort(key=lambda item: _node_key(item[0]))
        for nxt, step, raw in found:
            yield nxt, (step, raw)


def _node_key(node: Node) -> tuple:
    return (len(node), tuple(x.sort_key() for x in node))


class _Tree:
    """Breadth-first tree grown from one endpoint."""

    def __init__(self, root: Node):
        self.depth = {root: 0}
        self.parent: dict[Node, tuple[Node, tuple[RewriteStep, Node]] | None] = {root: None}
        self.frontier = [root]

    def grow(self, rewriter: _Rewriter, max_length: int, budget_left) -> bool:
        """Expand one level; False if the state budget ran out."""
        nxt_frontier = []
        level = self.depth[self.frontier[0]] + 1 if self.frontier else 0
        for node in self.frontier:
            for nxt, edge in rewriter.neighbours(node, max_length):
                if nxt in self.depth:
                    continue
                self.depth[nxt] = level
                self.parent[nxt] = (node, edge)
                nxt_frontier.append(nxt)
                if not budget_left(1):
                    self.frontier = nxt_frontier
                    return False
        self.frontier = nxt_frontier
        return True

    def path_from_root(self, node: Node, rewriter: _Rewriter) -> list[RewriteStep]:
        """Steps transforming the root into ``node``."""
        chunks = []
        while self.parent[node] is not None:
            prev, (step, raw) = self.parent[node]
            chunks.append([step] + rewriter.reduction_trace(raw))
            node = prev
        return [s for chunk in reversed(chunks) for s in chunk]


def search_equivalent(
    w1: BraidWord,
    w2: BraidWord,
    catalog: PresentationCatalog,
    budget: Budget | None = None,
) -> Verdict:
    """Look for a chain of relation applications from ``w1`` to ``w2``.

    Both endpoints are grown one breadth-first level per round; after each
    round the meeting state minimising (total depth, length, tokens) is used.
    The procedure treats both words identically, so swapping them yields the
    reversed trace.
    """
    if w1.n != w2.n:
        raise WordError(f"strand count mismatch: {w1.n} vs {w2.n}")
    for w in (w1, w2):
        if not catalog.accepts_word(w):
            raise WordError(f"word {w} is not in the {catalog.name} alphabet")
    budget = budget or Budget()
    max_length = budget.max_length
    if max_length is None:
        max_length = max(len(w1), len(w2)) + 8

    rewriter = _Rewriter(catalog.instantiate(w1.n))
    head = rewriter.reduction_trace(w1.letters)
    tail = rewriter.reduction_trace(w2.letters)
    tree1 = _Tree(free_reduce_letters(w1.letters))
    tree2 = _Tree(free_reduce_letters(w2.letters))
    stats = SearchStats(states=2 if tree1.frontier != tree2.frontier else 1)

    def budget_left(k: int) -> bool:
        stats.states += k
        return stats.states <= budget.max_states

    def finish(meet: Node) -> Verdict:
        forward = tree1.path_from_root(meet, rewriter)
        backward = tree2.path_from_root(meet, rewriter)
        trace = head + forward + [s.inverted() for s in reversed(backward)] + [s.inverted() for s in reversed(tail)]
        stats.depth = tree1.depth[meet] + tree2.depth[meet]
        stats.reason = "met"
        return Verdict("equivalent", trace, stats)

    for rnd in range(0, (budget.max_depth + 1) // 2 + 1):
        if rnd > 0:
            stats.rounds = rnd
            if not (tree1.frontier or tree2.frontier):
                stats.reason = "search space exhausted"
                return Verdict("unknown", stats=stats)
            if not tree1.grow(rewriter, max_length, budget_left) or not tree2.grow(rewriter, max_length, budget_left):
                stats.reason = "state budget exhausted"
                return Verdict("unknown", stats=stats)
        meets = [
            node
            for node in tree1.depth.keys() & tree2.depth.keys()
            if tree1.depth[node] + tree2.depth[node] <= budget.max_depth
        ]
        if meets:
            best = min(meets, key=lambda node: (tree1.depth[node] + tree2.depth[node],) + _node_key(node))
            return finish(best)
    stats.reason = "depth budget exhausted"
    return Verdict("unknown", stats=stats)
