"""Comparison-parameterized sorting over lifted lists.

Two evaluation styles are first class. Lazy variants keep recursive
calls suspended inside list cells, so demanding only part of a result
triggers only part of the non-determinism. Strict variants force the
recursive result before the predicate looks at it; they run over plain
linked cells ``(head, rest)`` because every path materializes its whole
output anyway.
"""

from __future__ import annotations

import enum
import operator

from .core import Bind, Eff, Pure, choose, pure
from .lifted import NIL, Cons, Pair2, append, cons, filter_nd, head, lnot, nil
from .search import DFS, SearchResult, enumerate_values


class Mode(enum.Enum):
    LAZY = "lazy"
    STRICT = "strict"


LAZY = Mode.LAZY
STRICT = Mode.STRICT


class QuickVariant(enum.Enum):
    TWO_FILTERS = "two-filters"
    SPLIT = "split"


# --- comparators -----------------------------------------------------------


_TRUE = Pure(True)
_FALSE = Pure(False)


def coin_cmp():
    """A comparator that ignores both operands and answers both ways.

    Every call mints a fresh choice, annotated with the (unforced)
    operands for rendering. Operands may be trees or plain values.
    """

    def cmp(fx, fy):
        return choose(_TRUE, _FALSE, note=(fx, fy))

    return cmp


def lifted_cmp(op=operator.le):
    """Lift a host order; forces both operands (left first)."""

    def cmp(fx, fy):
        if not isinstance(fx, Eff):
            fx = Pure(fx)
        if not isinstance(fy, Eff):
            fy = Pure(fy)
        return Bind(fx, lambda x: Bind(fy, lambda y: Pure(op(x, y))))

    return cmp


# --- insertion sort --------------------------------------------------------


def insert_sorted(c, fx, fxs):
    return Bind(fxs, lambda xs: _insert_sorted(c, fx, xs))


def _insert_sorted(c, fx, xs):
    if xs is NIL:
        return cons(fx, nil())
    return Bind(
        c(fx, xs.head),
        lambda b: Pure(Cons(fx, Pure(xs)))
        if b
        else Pure(Cons(xs.head, Bind(xs.tail, lambda ys: _insert_sorted(c, fx, ys)))),
    )


def insertion_sort(c, fxs, mode=LAZY):
    if mode is STRICT:
        return Bind(_plain_spine(fxs), lambda xs: _insertion_sort_m(c, xs))
    return Bind(
        fxs,
        lambda xs: nil() if xs is NIL else insert_sorted(c, xs.head, insertion_sort(c, xs.tail)),
    )


# --- selection sort --------------------------------------------------------


def pick_min(c, fxs):
    """Non-deterministic minimum plus rest, as a pair of suspensions.

    The recursive pick is one shared computation projected twice, so a
    path that later demands the rest sees the decisions already made for
    the minimum.
    """
    return Bind(fxs, lambda xs: _pick_min(c, xs))


def _pick_min(c, xs):
    return Bind(
        xs.tail,
        lambda t: Pure(Pair2(xs.head, nil())) if t is NIL else _pick_min_step(c, xs.head, t),
    )


def _pick_min_step(c, fx, txs):
    rec = _pick_min(c, txs)
    fm = Bind(rec, lambda p: p.fst)
    fl = Bind(rec, lambda p: p.snd)
    return Bind(
        c(fx, fm),
        lambda b: Pure(Pair2(fx, Pure(txs)))
        if b
        else Pure(Pair2(fm, Pure(Cons(fx, fl)))),
    )


def selection_sort(c, fxs, mode=LAZY):
    if mode is STRICT:
        return Bind(_plain_spine(fxs), lambda xs: _selection_sort_m(c, xs))
    return Bind(fxs, lambda xs: _selection_sort(c, xs))


def _selection_sort(c, xs):
    if xs is NIL:
        return nil()
    pm = _pick_min(c, xs)
    rest = selection_sort(c, Bind(pm, lambda p: p.snd))
    return Pure(Cons(Bind(pm, lambda p: p.fst), rest))


# --- bubble sort -----------------------------------------------------------


def bubble(c, fxs):
    """One bubbling pass moving a local minimum to the front."""
    return Bind(fxs, lambda xs: _bubble(c, xs))


def _bubble(c, xs):
    return Bind(xs.tail, lambda t: Pure(xs) if t is NIL else _bubble_step(c, xs.head, t))


def _bubble_step(c, fx, txs):
    rec = _bubble(c, txs)
    fy = Bind(rec, lambda ys: ys.head)
    fys = Bind(rec, lambda ys: ys.tail)
    return Bind(
        c(fx, fy),
        lambda b: Pure(Cons(fx, Pure(Cons(fy, fys))))
        if b
        else Pure(Cons(fy, Pure(Cons(fx, fys)))),
    )


def bubble_sort(c, fxs):
    return Bind(fxs, lambda xs: _bubble_sort(c, xs))


def _bubble_sort(c, xs):
    if xs is NIL:
        return nil()
    rec = _bubble(c, xs)
    fy = Bind(rec, lambda ys: ys.head)
    fys = Bind(rec, lambda ys: ys.tail)
    return Pure(Cons(fy, bubble_sort(c, fys)))


# --- quicksort -------------------------------------------------------------


def quick_sort(c, fxs, variant=QuickVariant.SPLIT):
    if variant is QuickVariant.TWO_FILTERS:
        return _quick_filter(c, fxs)
    return _quick_split(c, fxs)


def _quick_filter(c, fxs):
    # two independent filter passes: each element is compared twice
    return Bind(
        fxs,
        lambda xs: nil()
        if xs is NIL
        else append(
            _quick_filter(c, filter_nd(lambda fy: c(fy, xs.head), xs.tail)),
            Pure(Cons(xs.head, _quick_filter(c, filter_nd(lambda fy: lnot(c(fy, xs.head)), xs.tail)))),
        ),
    )


def _quick_split(c, fxs):
    # one traversal: each element is compared to the pivot exactly once
    return Bind(
        fxs,
        lambda xs: nil()
        if xs is NIL
        else Bind(
            _split(c, xs.head, xs.tail, nil(), nil()),
            lambda p: append(_quick_split(c, p.fst), Pure(Cons(xs.head, _quick_split(c, p.snd)))),
        ),
    )


def _split(c, fpivot, fxs, acc_le, acc_gt):
    return Bind(
        fxs,
        lambda xs: Pure(Pair2(acc_le, acc_gt))
        if xs is NIL
        else Bind(
            c(xs.head, fpivot),
            lambda b: _split(c, fpivot, xs.tail, Pure(Cons(xs.head, acc_le)), acc_gt)
            if b
            else _split(c, fpivot, xs.tail, acc_le, Pure(Cons(xs.head, acc_gt))),
        ),
    )


# --- merge sort ------------------------------------------------------------


def merge_sort(c, fxs):
    return Bind(_spine(fxs), lambda elems: _merge_sort(c, elems))


def _spine(fxs):
    # collects the element slots; elements themselves stay suspended
    return Bind(
        fxs,
        lambda xs: Pure(())
        if xs is NIL
        else Bind(_spine(xs.tail), lambda rest: Pure((xs.head,) + rest)),
    )


def _merge_sort(c, elems):
    n = len(elems)
    if n == 0:
        return nil()
    if n == 1:
        return cons(elems[0], nil())
    mid = n // 2
    return _merge(c, _merge_sort(c, elems[:mid]), _merge_sort(c, elems[mid:]))


def _merge(c, fxs, fys):
    return Bind(
        fxs,
        lambda xs: fys
        if xs is NIL
        else Bind(
            fys,
            lambda ys: Pure(xs)
            if ys is NIL
            else Bind(
                c(xs.head, ys.head),
                lambda b: Pure(Cons(xs.head, _merge(c, xs.tail, Pure(ys))))
                if b
                else Pure(Cons(ys.head, _merge(c, Pure(xs), ys.tail))),
            ),
        ),
    )


# --- strict (flat) variants ------------------------------------------------
#
# Plain lists are immutable linked cells (head, rest) with None as nil,
# so that prepending stays O(1) on the hot enumeration paths.


def _plain_spine(fxs):
    return Bind(fxs, lambda xs: _plain_step(xs))


def _plain_step(xs):
    if xs is NIL:
        return Pure(None)
    return Bind(
        xs.head,
        lambda h: Bind(_plain_spine(xs.tail), lambda rest: Pure((h, rest))),
    )


def cells_to_tuple(cell):
    out = []
    while cell is not None:
        out.append(cell[0])
        cell = cell[1]
    return tuple(out)


def _insert_m(c, x, ys):
    if ys is None:
        return Pure((x, None))
    return Bind(
        c(x, ys[0]),
        lambda b: Pure((x, ys)) if b else Bind(_insert_m(c, x, ys[1]), lambda zs: Pure((ys[0], zs))),
    )


def _insertion_sort_m(c, xs):
    if xs is None:
        return Pure(None)
    return Bind(_insertion_sort_m(c, xs[1]), lambda ys: _insert_m(c, xs[0], ys))


def pick_min_strict(c, fxs):
    """Flat minimum-and-rest: the recursive pick is forced before the
    comparison, so a list of length n fans out into 2^(n-1) results."""
    return Bind(_plain_spine(fxs), lambda xs: _pick_min_m(c, xs))


def _pick_min_m(c, xs):
    if xs[1] is None:
        return Pure((xs[0], None))
    return Bind(
        _pick_min_m(c, xs[1]),
        lambda ml: Bind(
            c(xs[0], ml[0]),
            lambda b: Pure((xs[0], xs[1])) if b else Pure((ml[0], (xs[0], ml[1]))),
        ),
    )


def _selection_sort_m(c, xs):
    if xs is None:
        return Pure(None)
    return Bind(
        _pick_min_m(c, xs),
        lambda ml: Bind(_selection_sort_m(c, ml[1]), lambda ys: Pure((ml[0], ys))),
    )


# --- instrumentation -------------------------------------------------------

_LAZY_ALGOS = {
    "insertion": lambda c, fxs: insertion_sort(c, fxs),
    "selection": lambda c, fxs: selection_sort(c, fxs),
    "bubble": bubble_sort,
    "quick-filter": lambda c, fxs: quick_sort(c, fxs, QuickVariant.TWO_FILTERS),
    "quick-split": lambda c, fxs: quick_sort(c, fxs, QuickVariant.SPLIT),
    "merge": merge_sort,
}

_STRICT_ALGOS = {
    "insertion": lambda c, fxs: insertion_sort(c, fxs, STRICT),
    "selection": lambda c, fxs: selection_sort(c, fxs, STRICT),
    "pickmin": pick_min_strict,
}

ALGORITHMS = tuple(_LAZY_ALGOS)


def sort_by_name(algo, c, fxs, mode=LAZY):
    if mode is STRICT:
        try:
            return _STRICT_ALGOS[algo](c, fxs)
        except KeyError:
            raise ValueError(f"no strict variant for algorithm {algo!r}") from None
    try:
        return _LAZY_ALGOS[algo](c, fxs)
    except KeyError:
        raise ValueError(f"unknown algorithm {algo!r}") from None


def head_demand_stats(algo, n, mode=LAZY):
    """Enumerate just the head of every result of sorting [1..n].

    Returns the search result; ``stats.choice_expansions`` measures how
    much non-determinism the head demand triggered.
    """
    from .lifted import from_host

    # no local may keep the sort tree alive: the walker frees behind itself
    if mode is STRICT:
        # flat results are complete plain cells, so projecting the head
        # after enumeration is observationally identical to binding a
        # projection over the tree, and avoids copying the whole tree
        result = enumerate_values(
            sort_by_name(algo, coin_cmp(), from_host(range(1, n + 1)), mode), DFS
        )
        return SearchResult([cell[0] for cell in result.values], result.stats)
    return enumerate_values(
        head(sort_by_name(algo, coin_cmp(), from_host(range(1, n + 1)), mode)), DFS
    )
