"""Effect-lifted lists, pairs and booleans with non-strict constructors.

Component slots hold whole computations, so non-determinism can sit
arbitrarily deep inside a structure; ``nf_*`` flattens a structure by
pulling every nested choice to the top, leaving plain host values
(tuples) at the leaves.
"""

from __future__ import annotations

from .core import Bind, Eff, Impure, ND, Pure, as_eff, bind, choose, pure


class _Nil:
    __slots__ = ()

    def __repr__(self):
        return "Nil"


NIL = _Nil()


class Cons:
    __slots__ = ("head", "tail")

    def __init__(self, head, tail):
        self.head = head
        self.tail = tail

    def __repr__(self):
        return "Cons(...)"


class Pair2:
    __slots__ = ("fst", "snd")

    def __init__(self, fst, snd):
        self.fst = fst
        self.snd = snd

    def __repr__(self):
        return "Pair2(...)"


def nil():
    return Pure(NIL)


def cons(head, tail):
    """Wrap a list cell; neither component is forced."""
    return Pure(Cons(as_eff(head), as_eff(tail)))


def from_host(xs):
    """Lift a finite host sequence, every element wrapped with pure."""
    acc = nil()
    for x in reversed(list(xs)):
        acc = Pure(Cons(as_eff(x), acc))
    return acc


def head(fxs, sig=ND):
    """Project the head, forcing only the outer list constructor."""
    return Bind(fxs, lambda xs: xs.head if xs.__class__ is Cons else sig.failure())


def tail(fxs, sig=ND):
    return Bind(fxs, lambda xs: xs.tail if xs.__class__ is Cons else sig.failure())


def null(fxs):
    return Bind(fxs, lambda xs: Pure(xs is NIL))


def append(fxs, fys):
    """Right-nested concatenation, lazy in the recursive tail."""
    return Bind(
        fxs,
        lambda xs: fys if xs is NIL else Pure(Cons(xs.head, append(xs.tail, fys))),
    )


def length(fxs):
    """Spine length; elements stay suspended."""
    return Bind(
        fxs,
        lambda xs: Pure(0) if xs is NIL else Bind(length(xs.tail), lambda n: Pure(n + 1)),
    )


def insert_nd(fx, fxs):
    """Insert non-deterministically at every position: n+1 results."""
    return Bind(fxs, lambda xs: _insert_nd(fx, xs))


def _insert_nd(fx, xs):
    if xs is NIL:
        return cons(fx, nil())
    return choose(
        cons(fx, Pure(xs)),
        cons(xs.head, Bind(xs.tail, lambda ys: _insert_nd(fx, ys))),
    )


def filter_nd(pred, fxs):
    """Keep elements whose predicate branch answers true."""
    return Bind(
        fxs,
        lambda xs: nil()
        if xs is NIL
        else Bind(
            pred(xs.head),
            lambda b: Pure(Cons(xs.head, filter_nd(pred, xs.tail)))
            if b
            else filter_nd(pred, xs.tail),
        ),
    )


def reverse(fxs):
    return _rev(fxs, nil())


def _rev(fxs, acc):
    return Bind(fxs, lambda xs: acc if xs is NIL else _rev(xs.tail, Pure(Cons(xs.head, acc))))


# --- lifted booleans -------------------------------------------------------

TRUE = Pure(True)
FALSE = Pure(False)


def land(fa, fb):
    # short-circuits: fb is untouched when fa is false
    return Bind(fa, lambda a: fb if a else FALSE)


def lnot(fa):
    return Bind(fa, lambda a: Pure(not a))


def list_all(pred, fxs):
    """Lazy conjunction over a lifted list; prunes on the first false."""
    return Bind(
        fxs,
        lambda xs: TRUE if xs is NIL else land(pred(xs.head), list_all(pred, xs.tail)),
    )


def list_eq(fxs, fys):
    """Element-wise equality, forcing pairs left to right."""
    return Bind(fxs, lambda xs: Bind(fys, lambda ys: _eq_step(xs, ys)))


def _eq_step(xs, ys):
    if xs is NIL or ys is NIL:
        return Pure(xs is NIL and ys is NIL)
    return land(
        Bind(xs.head, lambda a: Bind(ys.head, lambda b: Pure(a == b))),
        list_eq(xs.tail, ys.tail),
    )


# --- normal forms ----------------------------------------------------------


def nf_atom(fe):
    """Primitives are their own normal form."""
    return Bind(fe, Pure)


def nf_list(fxs, elem_nf=nf_atom):
    """Force the whole list, pulling nested choices to the top.

    Leaves are plain tuples; a tuple passed back in is already normal,
    which makes the operation idempotent.
    """
    return Bind(fxs, lambda xs: _nf_list_step(xs, elem_nf))


def _nf_list_step(xs, elem_nf):
    if xs is NIL:
        return Pure(())
    if isinstance(xs, tuple):
        return Pure(xs)
    return Bind(
        elem_nf(xs.head),
        lambda v: Bind(nf_list(xs.tail, elem_nf), lambda rest: Pure((v,) + rest)),
    )


def nf_pair(fp, fst_nf=nf_atom, snd_nf=nf_atom):
    return Bind(fp, lambda p: _nf_pair_step(p, fst_nf, snd_nf))


def _nf_pair_step(p, fst_nf, snd_nf):
    if isinstance(p, tuple):
        return Pure(p)
    return Bind(fst_nf(p.fst), lambda a: Bind(snd_nf(p.snd), lambda b: Pure((a, b))))
