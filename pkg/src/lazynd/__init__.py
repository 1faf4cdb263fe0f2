"""lazynd: exact enumeration for lazy non-determinism with call-time choice."""

from .core import (
    CONST,
    DEFAULT_DEPTH_CAP,
    Bind,
    ChoiceLabel,
    ConstShape,
    Delay,
    DepthCapError,
    Eff,
    FAIL_SHAPE,
    Impure,
    ND,
    NO_VALUE_SHAPE,
    ONE,
    Pure,
    Signature,
    SignatureError,
    ZERO,
    as_eff,
    bind,
    choose,
    const_failure,
    delay,
    fail,
    get_depth_cap,
    lift1,
    lift2,
    no_value,
    pure,
    resolve,
    set_depth_cap,
    share,
)
from .search import (
    BFS,
    DFS,
    SearchResult,
    SearchStats,
    Strategy,
    all_values,
    count_values,
    enumerate_values,
    fold_values,
    map_values,
)

__all__ = [name for name in dir() if not name.startswith("_")]
