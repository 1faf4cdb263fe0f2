"""Worked probabilistic models: dice, a sprinkler network, random strings,
and the secret-santa drawing game."""

from __future__ import annotations

import enum

from .core import Bind, Pure
from .lifted import NIL, land, list_all, list_eq, reverse
from .pflp import (
    always,
    all_prob,
    cond_prob,
    certainly,
    dist_bind,
    dist_bind_strict,
    flip_p,
    query,
    query_stats,
    replicate_dist,
    uniform,
)

# --- dice -------------------------------------------------------------------

DIE_SIDES = (1, 2, 3, 4, 5, 6)


def die():
    return uniform(DIE_SIDES)


def is_six(fe):
    return Bind(fe, lambda v: Pure(v == 6))


def is_five_or_six(fe):
    return Bind(fe, lambda v: Pure(v >= 5))


def all_six(n):
    return query_stats(lambda fl: list_all(is_six, fl), replicate_dist(n, die))


def all_five_or_six(n):
    return query_stats(lambda fl: list_all(is_five_or_six, fl), replicate_dist(n, die))


def _replicate_strict(n, gen):
    out = certainly(None)
    for _ in range(n):
        out = dist_bind_strict(
            gen(),
            lambda fx: (
                lambda rest: dist_bind_strict(
                    rest, lambda fxs: certainly(Bind(fx, lambda h: Bind(fxs, lambda t: Pure((h, t)))))
                )
            )(out),
        )
    return out


def all_six_strict(n):
    """Same query through the strict combinator: every die is expanded."""

    def all_six_cells(fe):
        def go(cell):
            if cell is None:
                return Pure(True)
            return Pure(False) if cell[0] != 6 else go(cell[1])

        return Bind(fe, go)

    return query_stats(all_six_cells, _replicate_strict(n, die))


# --- sprinkler network ------------------------------------------------------


class GrassModel:
    __slots__ = ("raining", "sprinkler_on", "grass_wet")

    def __init__(self, raining, sprinkler_on, grass_wet):
        self.raining = raining
        self.sprinkler_on = sprinkler_on
        self.grass_wet = grass_wet


def _sprinkler_on(fr):
    return Bind(fr, lambda r: flip_p(0.01 if r else 0.4))


_GRASS_TABLE = {
    (False, False): 0.0,
    (False, True): 0.8,
    (True, False): 0.9,
    (True, True): 0.99,
}


def _grass_wet(fs, fr):
    return Bind(fs, lambda s: Bind(fr, lambda r: flip_p(_GRASS_TABLE[(s, r)])))


def grass_model():
    return dist_bind(
        flip_p(0.2),
        lambda fr: dist_bind(
            _sprinkler_on(fr),
            lambda fs: dist_bind(
                _grass_wet(fs, fr),
                lambda fg: certainly(GrassModel(fr, fs, fg)),
            ),
        ),
    )


def is_raining(fm):
    return Bind(fm, lambda m: m.raining)


def is_sprinkler_on(fm):
    return Bind(fm, lambda m: m.sprinkler_on)


def is_grass_wet(fm):
    return Bind(fm, lambda m: m.grass_wet)


def grass_wet_and_rain():
    return all_prob([is_raining, is_grass_wet], grass_model())


def rain_given_wet():
    return cond_prob([is_raining], [is_grass_wet], grass_model())


# --- random strings ---------------------------------------------------------


def pick_char():
    return uniform(["a", "b"])


def random_string(n):
    return replicate_dist(n, pick_char)


def palindrome(fs):
    """Naive check: the string equals its reverse. Comparison proceeds
    from both ends inward, so mismatching branches die after two picks."""
    return list_eq(fs, reverse(fs))


def consecutive_bs(fs):
    return Bind(fs, _bs_step)


def _bs_step(xs):
    if xs is NIL:
        return Pure(False)
    return Bind(
        xs.head,
        lambda c: Bind(
            xs.tail,
            lambda t: Pure(False)
            if t is NIL
            else Bind(t.head, lambda c2: Pure(True) if c2 == "b" else _bs_step(t)),
        )
        if c == "b"
        else Bind(xs.tail, _bs_step),
    )


def palindrome_prob(n):
    return query_stats(palindrome, random_string(n))


def consecutive_bs_prob(n):
    return query_stats(consecutive_bs, random_string(n))


# --- secret santa -----------------------------------------------------------


class SantaVariant(enum.Enum):
    NAIVE = "naive"
    NO_SELF_PICK = "noselfpick"
    PICK_AND_CHECK = "pickandcheck"
    REPEAT = "repeat"


FAILED_GAME = ("failed",)


def _success(assignments):
    return ("success", assignments)


def _hat(n):
    if n <= 1:
        raise ValueError("a drawing game needs at least two players")
    return tuple(range(1, n + 1))


def _remove(hat, person):
    i = hat.index(person)
    return hat[:i] + hat[i + 1 :]


def _p_picks(person, hat):
    """Draw for one person: the assignment plus the remaining hat, or
    None when the hat is empty."""
    if not hat:
        return certainly(None)
    return dist_bind(
        uniform(hat),
        lambda fp: Bind(fp, lambda picked: certainly(((person, picked), _remove(hat, picked)))),
    )


def _pick_round_naive(hat):
    def go(people, current, acc):
        if not people:
            return certainly(_success(acc))
        p = people[0]
        return dist_bind(
            _p_picks(p, current),
            lambda fm: Bind(fm, lambda m: go(people[1:], m[1], (m[0],) + acc)),
        )

    return go(hat, hat, ())


def _is_failed_assignment(assignment):
    return assignment[0] == assignment[1]


def _normalize(game):
    if game is FAILED_GAME or game[0] == "failed":
        return FAILED_GAME
    if any(_is_failed_assignment(a) for a in game[1]):
        return FAILED_GAME
    return game


def santa_naive_dist(n):
    return dist_bind(
        _pick_round_naive(_hat(n)),
        lambda fg: Bind(fg, lambda g: certainly(_normalize(g))),
    )


def _pick_round_no_self(hat):
    def go(people, current, acc):
        if not people:
            return certainly(_success(acc))
        p = people[0]
        return dist_bind(
            _p_picks(p, _remove(current, p) if p in current else current),
            lambda fm: Bind(
                fm,
                lambda m: certainly(FAILED_GAME)
                if m is None
                else go(people[1:], _remove(current, m[0][1]), (m[0],) + acc),
            ),
        )

    return go(hat, hat, ())


def _pick_round_and_check(hat):
    def go(people, current, acc):
        if not people:
            return certainly(_success(acc))
        p = people[0]

        def after_first(m):
            if m is None:
                return certainly(FAILED_GAME)
            assignment, new_hat = m
            if assignment[1] != p:
                return go(people[1:], new_hat, (assignment,) + acc)
            # self-pick: draw again while holding the own name out
            return dist_bind(
                _p_picks(p, new_hat),
                lambda fm2: Bind(
                    fm2,
                    lambda m2: certainly(FAILED_GAME)
                    if m2 is None
                    else go(people[1:], (p,) + m2[1], (m2[0],) + acc),
                ),
            )

        return dist_bind(_p_picks(p, current), lambda fm: Bind(fm, after_first))

    return go(hat, hat, ())


def _pick_round_repeat(limit, hat):
    def go(budget, people, current, acc):
        if not people:
            return certainly(_success(acc))
        if budget == 0:
            return certainly(FAILED_GAME)
        p = people[0]

        def after(m):
            if m is None:
                return certainly(FAILED_GAME)
            assignment, new_hat = m
            if assignment[1] == p:
                # invalid draw: put everything back and retry
                return go(budget - 1, people, current, acc)
            return go(budget, people[1:], new_hat, (assignment,) + acc)

        return dist_bind(_p_picks(p, current), lambda fm: Bind(fm, after))

    return go(limit, hat, hat, ())


def is_failed_game(fg):
    return Bind(fg, lambda g: Pure(g[0] == "failed"))


def santa(n, variant=SantaVariant.NAIVE, limit=20):
    """Probability that a drawing round ends in an invalid game."""
    if variant is SantaVariant.NAIVE:
        d = santa_naive_dist(n)
    elif variant is SantaVariant.NO_SELF_PICK:
        d = _pick_round_no_self(_hat(n))
    elif variant is SantaVariant.PICK_AND_CHECK:
        d = _pick_round_and_check(_hat(n))
    else:
        d = _pick_round_repeat(limit, _hat(n))
    return query(is_failed_game, d)
