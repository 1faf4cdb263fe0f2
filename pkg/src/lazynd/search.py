"""Tree traversal: consistent-choice enumeration, encapsulation, folding."""

from __future__ import annotations

import enum
import gc
from collections import deque
from dataclasses import dataclass, field
from functools import reduce

from .core import (
    Bind,
    ChoiceLabel,
    Delay,
    DepthCapError,
    Impure,
    Pure,
    get_depth_cap,
    resolve,
)


class Strategy(enum.Enum):
    DFS = "dfs"
    BFS = "bfs"


DFS = Strategy.DFS
BFS = Strategy.BFS


@dataclass
class SearchStats:
    """Counts collected during one traversal.

    ``choice_expansions`` counts choice nodes whose label had no recorded
    decision (both branches taken); ``consistent_follows`` counts choice
    nodes followed through an existing decision.
    """

    choice_expansions: int = 0
    consistent_follows: int = 0
    failures: int = 0
    leaves: int = 0

    def as_dict(self):
        return {
            "choice_expansions": self.choice_expansions,
            "consistent_follows": self.consistent_follows,
            "failures": self.failures,
            "leaves": self.leaves,
        }


@dataclass
class SearchResult:
    values: list
    stats: SearchStats
    decisions: list | None = field(default=None)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)


def enumerate_values(e, strategy=DFS, record_decisions=False):
    """Enumerate every reachable value of ``e`` under consistent decisions.

    Yields leaves in strategy order; failure leaves are skipped. Child
    paths extend a copy of the parent's decision map, never mutate it
    (realized with an undo log in the depth-first case).
    """
    if strategy is BFS or strategy == Strategy.BFS:
        return _enumerate_bfs(e, record_decisions)
    return _enumerate_dfs(e, record_decisions)


def _enumerate_dfs(root, record_decisions):
    # The resolve state machine is inlined here: this loop dominates the
    # cost of every count in the lab, and the cyclic collector is paused
    # because the tree allocation rate is huge and trees are acyclic.
    stats = SearchStats()
    values = []
    append_value = values.append
    recorded = [] if record_decisions else None
    cap = get_depth_cap()
    decisions = {}
    decision_for = decisions.get
    log = []
    log_pop = log.pop
    log_push = log.append
    # entry: (tree, label-id to record or None, direction, undo mark)
    stack = [(root, None, 0, 0)]
    del root
    pop_entry = stack.pop
    push_entry = stack.append
    _Bind, _Delay, _Pure, _Impure, _Label = Bind, Delay, Pure, Impure, ChoiceLabel
    expansions = follows = failures = leaves = 0
    gc_was_enabled = gc.isenabled()
    if gc_was_enabled:
        gc.disable()
    try:
        while stack:
            e, lbl, direction, mark = pop_entry()
            while len(log) > mark:
                del decisions[log_pop()]
            if lbl is not None:
                decisions[lbl] = direction
                log_push(lbl)
            steps = 0
            frames = []
            push_frame = frames.append
            pop_frame = frames.pop
            depth = 0
            while True:
                cls = e.__class__
                if cls is _Bind:
                    r = e._resolved
                    if r is not None:
                        e = r
                        continue
                    src = e.source
                    if src.__class__ is _Pure:
                        # bind over a value: apply without a detour frame
                        depth += 1
                        if depth > cap:
                            raise DepthCapError(f"resolution chain exceeded depth cap {cap}")
                        push_frame((True, e))
                        e = e.fn(src.value)
                        continue
                    depth += 1
                    if depth > cap:
                        raise DepthCapError(f"resolution chain exceeded depth cap {cap}")
                    push_frame((False, e))
                    e = src
                    continue
                if cls is _Delay:
                    r = e._resolved
                    if r is not None:
                        e = r
                        continue
                    depth += 1
                    if depth > cap:
                        raise DepthCapError(f"resolution chain exceeded depth cap {cap}")
                    push_frame((True, e))
                    e = e.producer()
                    continue
                if frames:
                    memo_only, node = pop_frame()
                    depth -= 1
                    if memo_only:
                        node._resolved = e
                        if node.__class__ is _Delay:
                            node.producer = None
                        else:
                            node.source = None
                            node.fn = None
                        continue
                    if cls is _Pure:
                        depth += 1
                        push_frame((True, node))
                        e = node.fn(e.value)
                        continue
                    children = e.children
                    if children:
                        fn = node.fn
                        if len(children) == 2:
                            res = _Impure(e.shape, (_Bind(children[0], fn), _Bind(children[1], fn)))
                        else:
                            res = _Impure(e.shape, tuple(_Bind(c, fn) for c in children))
                    else:
                        res = e
                    node._resolved = res
                    node.source = None
                    node.fn = None
                    e = res
                    continue
                # settled at the top of this path segment
                steps += 1
                if steps > cap:
                    raise DepthCapError(f"search path exceeded depth cap {cap}")
                if cls is _Pure:
                    leaves += 1
                    append_value(e.value)
                    if recorded is not None:
                        recorded.append(dict(decisions))
                    break
                shape = e.shape
                if shape.__class__ is _Label:
                    lid = shape.id
                    got = decision_for(lid)
                    if got is None:
                        expansions += 1
                        m = len(log)
                        children = e.children
                        push_entry((children[1], lid, 1, m))
                        push_entry((children[0], lid, 0, m))
                        break
                    follows += 1
                    e = e.children[got]
                    continue
                failures += 1
                break
    except DepthCapError as err:
        stats.choice_expansions = expansions
        stats.consistent_follows = follows
        stats.failures = failures
        stats.leaves = leaves
        err.stats = stats
        raise
    finally:
        if gc_was_enabled:
            gc.enable()
    stats.choice_expansions = expansions
    stats.consistent_follows = follows
    stats.failures = failures
    stats.leaves = leaves
    return SearchResult(values, stats, recorded)


def _enumerate_bfs(root, record_decisions):
    stats = SearchStats()
    values = []
    recorded = [] if record_decisions else None
    cap = get_depth_cap()
    queue = deque([(root, {})])
    try:
        while queue:
            node, decisions = queue.popleft()
            steps = 0
            cur = resolve(node)
            while True:
                steps += 1
                if steps > cap:
                    raise DepthCapError(f"search path exceeded depth cap {cap}")
                if cur.__class__ is Pure:
                    stats.leaves += 1
                    values.append(cur.value)
                    if recorded is not None:
                        recorded.append(dict(decisions))
                    break
                shape = cur.shape
                if shape.__class__ is ChoiceLabel:
                    lid = shape.id
                    got = decisions.get(lid)
                    if got is None:
                        stats.choice_expansions += 1
                        left = dict(decisions)
                        left[lid] = 0
                        right = dict(decisions)
                        right[lid] = 1
                        queue.append((cur.children[0], left))
                        queue.append((cur.children[1], right))
                        break
                    stats.consistent_follows += 1
                    cur = resolve(cur.children[got])
                    continue
                stats.failures += 1
                break
    except DepthCapError as err:
        err.stats = stats
        raise
    return SearchResult(values, stats, recorded)


def all_values(e, strategy=DFS):
    """Encapsulate: the multiset of values, as a list in strategy order."""
    return enumerate_values(e, strategy).values


def count_values(e, strategy=DFS):
    return len(enumerate_values(e, strategy).values)


def fold_values(op, init, values):
    """Fold a multiset; ``op`` should be associative-commutative when the
    caller relies on order independence."""
    return reduce(op, values, init)


def map_values(g, values):
    return [g(v) for v in values]
