"""Exact discrete probability over non-deterministic event/probability pairs.

A distribution is a computation whose leaves are pairs of a suspended
event and a suspended probability. Combinators keep both components
unforced, so a query that rejects an event early never elaborates the
rest of that branch; demanding the probability forces the whole product
chain, which is why probability mass is never lost even when a lazy
predicate skips events.

User obligations (documented, not enforced): events passed to the
combinators must be deterministic values, and continuations handed to
the bind operators must be total and probability-preserving. Violations
degrade query totals below 1.
"""

from __future__ import annotations

import operator

from .core import Bind, Eff, Pure, as_eff, choose, fail, lift2
from .lifted import NIL, Cons, cons, nil, nf_list
from .search import DFS, enumerate_values, fold_values

PROB_SUM_EPSILON = 1e-6


class DistributionError(ValueError):
    """Invalid distribution construction (bad probabilities, empty support)."""


class DistPair:
    """One elementary outcome: suspended event, suspended probability."""

    __slots__ = ("event", "prob")

    def __init__(self, event, prob):
        self.event = event
        self.prob = prob

    def __repr__(self):
        return "DistPair(...)"


def certainly(x):
    """The one-point distribution."""
    return Pure(DistPair(as_eff(x), Pure(1.0)))


def enum_dist(values, probs):
    """Pair values with probabilities (up to the shorter list) and chain
    them as right-nested choices ending in failure."""
    pairs = list(zip(values, probs))
    if not pairs:
        raise DistributionError("a distribution needs at least one outcome")
    total = 0.0
    for _, p in pairs:
        if p < 0.0 or p > 1.0:
            raise DistributionError(f"probability {p!r} outside [0, 1]")
        total += p
    if abs(total - 1.0) > PROB_SUM_EPSILON:
        raise DistributionError(f"probabilities sum to {total!r}, not 1")
    out = fail()
    for v, p in reversed(pairs):
        out = choose(Pure(DistPair(as_eff(v), Pure(p))), out)
    return out


def uniform(values):
    values = list(values)
    if not values:
        raise DistributionError("uniform needs a nonempty list")
    share = 1.0 / len(values)
    return enum_dist(values, [share] * len(values))


def flip_p(p):
    """True with probability ``p``, False otherwise."""
    if p < 0.0 or p > 1.0:
        raise DistributionError(f"probability {p!r} outside [0, 1]")
    return enum_dist([True, False], [p, 1.0 - p])


def dist_bind(d, f):
    """Dependent combination, non-strict on both sides.

    The continuation is applied right away to the *unforced* event
    projection, and the single resulting pair is shared by the event and
    probability components, so both observe the same choices. Nothing is
    elaborated until a component is demanded.
    """
    applied = f(Bind(d, lambda dp: dp.event))
    return Pure(
        DistPair(
            Bind(applied, lambda dp: dp.event),
            lift2(operator.mul, Bind(d, lambda dp: dp.prob), Bind(applied, lambda dp: dp.prob)),
        )
    )


def dist_bind_strict(d, f):
    """Sequencing that forces the source pair and the continuation's pair
    before yielding a result; events are fully fanned out."""
    return Bind(
        d,
        lambda dp: Bind(
            f(dp.event),
            lambda dp2: Pure(DistPair(dp2.event, lift2(operator.mul, dp.prob, dp2.prob))),
        ),
    )


def join_with(g, d1, d2):
    """Combine two independent distributions with a binary constructor."""
    return dist_bind(d1, lambda fx: dist_bind(d2, lambda fy: certainly(g(fx, fy))))


def replicate_dist(n, gen):
    """n independent draws from a generator (fresh choices per draw),
    collected into a lifted list."""
    if n < 0:
        raise ValueError("replicate count must be >= 0")
    out = certainly(nil())
    for _ in range(n):
        out = join_with(cons, gen(), out)
    return out


def replicate_shared(n, d):
    """n copies of a single already-built distribution: every copy
    repeats the same decisions, so only the diagonal outcomes remain."""
    if n < 0:
        raise ValueError("replicate count must be >= 0")
    out = certainly(nil())
    for _ in range(n):
        out = join_with(cons, d, out)
    return out


def filter_dist(pred, d):
    """Partial identity: keep pairs whose event satisfies the predicate.

    Forces the pair and then exactly as much of the event as the
    predicate demands; the probability is never touched here.
    """
    return Bind(d, lambda dp: Bind(pred(dp.event), lambda b: Pure(dp) if b else fail()))


def query(pred, d, strategy=DFS):
    """Total probability of the events satisfying ``pred``."""
    return query_stats(pred, d, strategy)[0]


def query_stats(pred, d, strategy=DFS):
    """Like :func:`query` but also returns the search statistics."""
    result = enumerate_values(Bind(filter_dist(pred, d), lambda dp: dp.prob), strategy)
    return fold_values(operator.add, 0.0, result.values), result.stats


def always(_):
    return Pure(True)


def all_prob(preds, d):
    """Probability that every predicate in the list holds."""

    def conj(fe):
        out = Pure(True)
        for p in reversed(list(preds)):
            out = Bind(p(fe), (lambda rest: lambda b: rest if b else Pure(False))(out))
        return out

    return query(conj, d)


def cond_prob(preds, given, d):
    """Conditional probability of ``preds`` given ``given``."""
    denominator = all_prob(given, d)
    if denominator == 0.0:
        raise ZeroDivisionError("conditioning on an event of probability zero")
    return all_prob(list(preds) + list(given), d) / denominator


def support(d, event_nf=nf_list, strategy=DFS):
    """Materialize the distribution as (normal-form event, probability)
    pairs in search order. Forces everything; meant for small examples."""
    pairs = Bind(
        d,
        lambda dp: Bind(event_nf(dp.event), lambda v: Bind(dp.prob, lambda p: Pure((v, p)))),
    )
    return enumerate_values(pairs, strategy).values


def event_values(d, event_nf=None, strategy=DFS):
    """All event leaves (events may be lost under lazy combinators; the
    probabilities are not)."""
    if event_nf is None:
        proj = Bind(d, lambda dp: dp.event)
    else:
        proj = event_nf(Bind(d, lambda dp: dp.event))
    return enumerate_values(proj, strategy).values
