"""Effect trees with memoized suspensions and labeled binary choices.

A computation is a tree: ``Pure`` carries a finished value, ``Impure``
carries an operation shape with suspended children, and ``Delay``/``Bind``
are suspended nodes that :func:`resolve` rewrites into one of the former.
Resolution is memoized per node, so a subtree that is referenced from two
places is elaborated once and every consumer sees the same choice labels.
That single property is what makes reuse of a bound value behave as one
decision (call-time choice) while re-running a constructor function makes
fresh labels (run-time choice).
"""

from __future__ import annotations

import itertools


class SignatureError(ValueError):
    """Raised when an operation needs a failure shape the signature lacks."""


class DepthCapError(RuntimeError):
    """A resolution chain or search path exceeded the configured depth cap.

    ``stats`` carries the partial search statistics when the error is
    raised during an enumeration.
    """

    def __init__(self, message, stats=None):
        super().__init__(message)
        self.stats = stats


DEFAULT_DEPTH_CAP = 1_000_000

_depth_cap = DEFAULT_DEPTH_CAP


def set_depth_cap(n):
    """Set the global depth cap (suspension-chain length / path steps)."""
    global _depth_cap
    if n < 1:
        raise ValueError("depth cap must be at least 1")
    _depth_cap = int(n)


def get_depth_cap():
    return _depth_cap


# ---------------------------------------------------------------------------
# Choice labels and operation shapes
# ---------------------------------------------------------------------------

_label_counter = itertools.count(1)


class ChoiceLabel:
    """Identity of a choice node, used directly as the node's shape.

    Equal ids mean "the same decision". ``note`` optionally carries the
    two operands whose comparison spawned the choice, kept unforced; a
    renderer may only peek at resolution state that already exists.
    """

    arity = 2
    __slots__ = ("id", "note")

    def __init__(self, note=None):
        self.id = next(_label_counter)
        self.note = note

    def __repr__(self):
        return f"ChoiceLabel({self.id})"


class _FailShape:
    arity = 0
    __slots__ = ()

    def __repr__(self):
        return "Fail"


class _NoValueShape:
    arity = 0
    __slots__ = ()

    def __repr__(self):
        return "NoValue"


class ConstShape:
    arity = 0
    __slots__ = ("error",)

    def __init__(self, error):
        self.error = error

    def __repr__(self):
        return f"Const({self.error!r})"


FAIL_SHAPE = _FailShape()
NO_VALUE_SHAPE = _NoValueShape()


class Signature:
    """A closed operation alphabet: zero, one, const or nd.

    The signature only matters where an operation must produce the
    canonical failure: ``nd`` fails with a Fail leaf, ``one`` with its
    single nullary shape, ``const`` with an error payload, and ``zero``
    has no failure at all.
    """

    __slots__ = ("name",)

    def __init__(self, name):
        self.name = name

    def failure(self, error=None):
        if self.name == "nd":
            return fail()
        if self.name == "one":
            return no_value()
        if self.name == "const":
            return const_failure(error)
        raise SignatureError("the total signature has no failure shape")

    def __repr__(self):
        return f"Signature({self.name})"


ZERO = Signature("zero")
ONE = Signature("one")
CONST = Signature("const")
ND = Signature("nd")


# ---------------------------------------------------------------------------
# Tree nodes
# ---------------------------------------------------------------------------


class Eff:
    __slots__ = ()


class Pure(Eff):
    __slots__ = ("value",)

    def __init__(self, value):
        self.value = value

    def __repr__(self):
        return f"Pure({self.value!r})"


class Impure(Eff):
    __slots__ = ("shape", "children")

    def __init__(self, shape, children):
        self.shape = shape
        self.children = children

    def __repr__(self):
        return f"Impure({self.shape!r}, {len(self.children)} children)"


class Delay(Eff):
    """Explicit suspension: the producer runs at most once."""

    __slots__ = ("producer", "_resolved")

    def __init__(self, producer):
        self.producer = producer
        self._resolved = None

    def __repr__(self):
        return "Delay(<resolved>)" if self._resolved is not None else "Delay(<pending>)"


class Bind(Eff):
    """Suspended monadic bind; resolution pushes ``fn`` into children."""

    __slots__ = ("source", "fn", "_resolved")

    def __init__(self, source, fn):
        self.source = source
        self.fn = fn
        self._resolved = None

    def __repr__(self):
        return "Bind(<resolved>)" if self._resolved is not None else "Bind(<pending>)"


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def pure(value):
    return Pure(value)


def as_eff(value):
    """Wrap a host value unless it already is a tree."""
    return value if isinstance(value, Eff) else Pure(value)


def fail():
    return Impure(FAIL_SHAPE, ())


def no_value():
    return Impure(NO_VALUE_SHAPE, ())


def const_failure(error):
    return Impure(ConstShape(error), ())


def choose(left, right, note=None):
    """A binary choice with a fresh label; children stay suspended.

    ``note`` is an optional (left operand, right operand) pair recorded
    for decision-tree rendering.
    """
    return Impure(ChoiceLabel(note), (left, right))


def bind(source, fn):
    """Suspended bind: nothing is forced until the result is demanded."""
    return Bind(source, fn)


def delay(producer):
    return Delay(producer)


def share(e):
    """Make reuse explicit.

    Labels are minted when a choice node is created and resolution is
    memoized per node, so handing the same tree to several consumers
    already yields consistent decisions; fresh decisions require calling
    a constructor function again.
    """
    return e


def lift1(g, e):
    return Bind(e, lambda x: Pure(g(x)))


def lift2(g, e1, e2):
    # e1 is forced before e2
    return Bind(e1, lambda x: Bind(e2, lambda y: Pure(g(x, y))))


# ---------------------------------------------------------------------------
# Resolution
# ---------------------------------------------------------------------------


def resolve(e):
    """Rewrite ``e`` to its head form: a ``Pure`` or ``Impure`` node.

    Iterative so that deep spines do not consume host stack. Every
    suspended node on the way is memoized; a chain longer than the depth
    cap reports a :class:`DepthCapError` instead of spinning.
    """
    frames = []
    cap = _depth_cap
    while True:
        cls = e.__class__
        if cls is Bind:
            r = e._resolved
            if r is not None:
                e = r
                continue
            if len(frames) >= cap:
                raise DepthCapError(f"resolution chain exceeded depth cap {cap}")
            frames.append((False, e))
            e = e.source
            continue
        if cls is Delay:
            r = e._resolved
            if r is not None:
                e = r
                continue
            if len(frames) >= cap:
                raise DepthCapError(f"resolution chain exceeded depth cap {cap}")
            frames.append((True, e))
            e = e.producer()
            continue
        # Pure or Impure: unwind pending frames
        if not frames:
            return e
        memo_only, node = frames.pop()
        if memo_only:
            node._resolved = e
            if node.__class__ is Delay:
                node.producer = None
            else:
                node.source = None
                node.fn = None
            continue
        if cls is Pure:
            # bind reached a value: apply and keep resolving the result
            frames.append((True, node))
            e = node.fn(e.value)
            continue
        # bind reached an operation: push the continuation into children
        children = e.children
        if children:
            fn = node.fn
            if len(children) == 2:
                res = Impure(e.shape, (Bind(children[0], fn), Bind(children[1], fn)))
            else:
                res = Impure(e.shape, tuple(Bind(c, fn) for c in children))
        else:
            # nullary operation: the continuation has nothing to reach
            res = e
        node._resolved = res
        node.source = None
        node.fn = None
        e = res
