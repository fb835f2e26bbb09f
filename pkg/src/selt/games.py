"""Nondeterministic sequential games and backward induction.

Players move in order, each seeing all earlier moves; a complete play is
mapped to a nonempty *set* of possible outcomes.  Move policies are
selection functions over :class:`~selt.effects.NonDet` and outcome
policies are quantifiers over it.  Backward induction is the iterated
selection product (:func:`~selt.selection.sel_sequence`) of the players'
move policies.

Players are 0-based here.  Outcomes are integers.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Dict, Hashable, Iterable, Iterator, Mapping, Sequence, Tuple

from .effects import NonDet, distinct, sequence_all
from .selection import Quantifier, SelectionFn, sel_sequence, to_quantifier

Move = Hashable
Play = Tuple[Move, ...]
Outcomes = NonDet
Context = Callable[[Move], NonDet]
Choice = Callable[[Sequence[Tuple[Move, NonDet]]], Tuple[Move, NonDet]]

CHOICE_KINDS = ("riskymax", "riskymin", "cautiousmax", "cautiousmin")

# Contexts grow as (2**|U| - 1) ** |X|; beyond this the checkers refuse.
MAX_ENUM_MOVES = 4
MAX_ENUM_UNIVERSE = 4


class NoAdmissibleMove(ValueError):
    """A cautious choice function filtered out every candidate."""


class EnumerationTooLarge(ValueError):
    """Refusal to enumerate contexts past the configured caps."""


@dataclass(frozen=True)
class Game:
    move_sets: Tuple[Tuple[Move, ...], ...]
    table: Mapping[Play, Tuple[int, ...]]

    def __post_init__(self):
        object.__setattr__(self, "move_sets", tuple(tuple(ms) for ms in self.move_sets))
        if not self.move_sets:
            raise ValueError("a game needs at least one player")
        for i, ms in enumerate(self.move_sets):
            if not ms:
                raise ValueError(f"player {i} has no moves")
            if len(set(ms)) != len(ms):
                raise ValueError(f"player {i} has repeated moves")
        table = {tuple(k): tuple(v) for k, v in self.table.items()}
        for play in self.plays():
            if play not in table:
                raise ValueError(f"outcome missing for play {play}")
            if not table[play]:
                raise ValueError(f"empty outcome set for play {play}")
        if len(table) != len(list(self.plays())):
            raise ValueError("outcome table has plays outside the move sets")
        object.__setattr__(self, "table", table)

    @classmethod
    def from_function(cls, move_sets: Sequence[Sequence[Move]], q: Callable[[Play], Iterable[int]]) -> "Game":
        move_sets = tuple(tuple(ms) for ms in move_sets)
        return cls(move_sets, {play: tuple(q(play)) for play in itertools.product(*move_sets)})

    @property
    def players(self) -> int:
        return len(self.move_sets)

    def plays(self) -> Iterator[Play]:
        return itertools.product(*self.move_sets)

    def partial_plays(self, length: int) -> Iterator[Play]:
        return itertools.product(*self.move_sets[:length])

    def outcome(self, play: Sequence[Move]) -> NonDet:
        return NonDet(self.table[tuple(play)])

    __call__ = outcome

    def __eq__(self, other):
        if not isinstance(other, Game):
            return NotImplemented
        return self.move_sets == other.move_sets and all(
            set(self.table[p]) == set(other.table[p]) for p in self.plays()
        )

    __hash__ = None  # type: ignore[assignment]


def example_game() -> Game:
    """Two players, each Cautious or Risky; Risky widens the outcome range."""
    moves = ("Cautious", "Risky")
    return Game(
        (moves, moves),
        {
            ("Cautious", "Cautious"): (0,),
            ("Cautious", "Risky"): (-1, 0, 1),
            ("Risky", "Cautious"): (-1, 0, 1),
            ("Risky", "Risky"): (-2, -1, 0, 1, 2),
        },
    )


@dataclass(frozen=True)
class MovePolicy:
    moves: Tuple[Move, ...]
    selection: SelectionFn

    def run(self, p: Context) -> NonDet:
        return self.selection.run(p)

    __call__ = run


@dataclass(frozen=True)
class OutcomePolicy:
    moves: Tuple[Move, ...]
    quantifier: Quantifier

    def run(self, p: Context) -> NonDet:
        return self.quantifier.run(p)

    __call__ = run


# --- choice functions --------------------------------------------------------


def _risky_max(pairs):
    # ties go to the later pair, as a left fold keeping the newest maximum
    best = None
    for pair in pairs:
        if best is None or max(pair[1]) >= max(best[1]):
            best = pair
    return best


def _risky_min(pairs):
    # ties keep the earlier pair
    best = None
    for pair in pairs:
        if best is None or min(pair[1]) < min(best[1]):
            best = pair
    return best


def _describe(pairs) -> str:
    return ", ".join(f"{m}: {sorted(set(rs))}" for m, rs in pairs)


def choice_fn(kind: str, bounds: Tuple[int, int] | None = None) -> Choice:
    """Named choice function.

    ``riskymax`` picks the pair with the greatest possible outcome and
    ``riskymin`` the least.  The cautious versions first drop pairs that
    can reach below ``low`` (for max) or above ``high`` (for min);
    ``bounds`` is ``(low, high)`` and defaults to ``(-1, 1)``.
    """
    kind = kind.replace("_", "").lower()
    low, high = bounds if bounds is not None else (-1, 1)
    if kind == "riskymax":
        return lambda pairs: _risky_max(list(pairs))
    if kind == "riskymin":
        return lambda pairs: _risky_min(list(pairs))
    if kind == "cautiousmax":
        def cautious_max(pairs):
            pairs = list(pairs)
            ok = [pr for pr in pairs if all(r >= low for r in pr[1])]
            if not ok:
                raise NoAdmissibleMove(f"no admissible move for cautiousmax (low={low}) among {_describe(pairs)}")
            return _risky_max(ok)

        return cautious_max
    if kind == "cautiousmin":
        def cautious_min(pairs):
            pairs = list(pairs)
            ok = [pr for pr in pairs if all(r <= high for r in pr[1])]
            if not ok:
                raise NoAdmissibleMove(f"no admissible move for cautiousmin (high={high}) among {_describe(pairs)}")
            return _risky_min(ok)

        return cautious_min
    raise ValueError(f"unknown choice function kind {kind!r}; expected one of {', '.join(CHOICE_KINDS)}")


def choice_by_rank(rank: Callable[[frozenset], float]) -> Choice:
    """Pick the pair whose outcome set ranks highest; earliest wins ties."""

    def choose(pairs):
        pairs = list(pairs)
        return max(pairs, key=lambda pr: rank(frozenset(pr[1])))

    return choose


def argopt(f: Choice, moves: Sequence[Move]) -> MovePolicy:
    """Turn a choice function into a (deterministic) move policy over ``moves``."""
    moves = tuple(moves)
    if not moves:
        raise ValueError("argopt needs a nonempty move set")
    return MovePolicy(moves, SelectionFn(lambda p: NonDet.unit(f([(m, p(m)) for m in moves])[0])))


def induced_outcome_policy(e: MovePolicy) -> OutcomePolicy:
    return OutcomePolicy(e.moves, to_quantifier(e.selection))


def constant_outcome_policy(moves: Sequence[Move], outcomes: Iterable[int]) -> OutcomePolicy:
    good = NonDet(outcomes)
    return OutcomePolicy(tuple(moves), Quantifier(lambda _p: good))


# --- rationality -------------------------------------------------------------


def all_contexts(moves: Sequence[Move], universe: Iterable[int]) -> Iterator[Context]:
    """Every map from ``moves`` to a nonempty subset of ``universe``."""
    moves, universe = tuple(moves), tuple(sorted(set(universe)))
    if len(moves) > MAX_ENUM_MOVES or len(universe) > MAX_ENUM_UNIVERSE:
        raise EnumerationTooLarge(
            f"refusing to enumerate contexts for {len(moves)} moves and {len(universe)} outcomes "
            f"(caps: {MAX_ENUM_MOVES} moves, {MAX_ENUM_UNIVERSE} outcomes)"
        )
    subsets = [
        NonDet(c)
        for k in range(1, len(universe) + 1)
        for c in itertools.combinations(universe, k)
    ]
    for choice in itertools.product(subsets, repeat=len(moves)):
        table = dict(zip(moves, choice))
        yield table.__getitem__


def is_rational(e: MovePolicy, f: OutcomePolicy, outcome_universe: Iterable[int]) -> bool:
    """Outcomes reachable through ``e``'s moves are always good for ``f``."""
    induced = to_quantifier(e.selection)
    return all(induced.run(p).issubset(f.run(p)) for p in all_contexts(e.moves, outcome_universe))


def is_realistic(f: OutcomePolicy, outcome_universe: Iterable[int]) -> bool:
    """Every context has some move whose outcomes are all good."""
    return all(
        any(p(x).issubset(good) for x in f.moves)
        for p in all_contexts(f.moves, outcome_universe)
        for good in [f.run(p)]
    )


# --- strategy profiles -------------------------------------------------------

Strategy = Callable[[Play], NonDet]


@dataclass(frozen=True)
class StrategyProfile:
    strategies: Tuple[Strategy, ...]

    def __getitem__(self, i: int) -> Strategy:
        return self.strategies[i]

    def __len__(self) -> int:
        return len(self.strategies)


def behaviour_sets(g: Game, s: StrategyProfile, prefix: Sequence[Move]) -> list[NonDet]:
    """Moves players ``len(prefix)..n-1`` might make after ``prefix`` under ``s``."""
    prefix = tuple(prefix)
    out: list[NonDet] = []
    for j in range(len(prefix), g.players):
        moves = []
        for mid in itertools.product(*out):
            moves.extend(s[j](prefix + mid))
        out.append(NonDet(distinct(moves)))
    return out


def behaviour_sets_monadic(g: Game, s: StrategyProfile, prefix: Sequence[Move]) -> list[NonDet]:
    """Same sets via the NonDet product and bind."""
    prefix = tuple(prefix)
    out: list[NonDet] = []
    for j in range(len(prefix), g.players):
        b = sequence_all(out, NonDet.unit).bind(lambda mid, j=j: s[j](prefix + mid))
        out.append(b.distinct())
    return out


def profile_outcomes(g: Game, s: StrategyProfile, prefix: Sequence[Move]) -> NonDet:
    prefix = tuple(prefix)
    rs = []
    for rest in itertools.product(*behaviour_sets(g, s, prefix)):
        rs.extend(g.outcome(prefix + rest))
    return NonDet(distinct(rs))


def optimality_violations(g: Game, s: StrategyProfile, fs: Sequence[OutcomePolicy]) -> list[Play]:
    """Partial plays at which the profile's outcomes are not all good."""
    bad = []
    for i in range(g.players):
        for prefix in g.partial_plays(i):
            def p(x, prefix=prefix):
                return profile_outcomes(g, s, prefix + (x,))

            if not profile_outcomes(g, s, prefix).issubset(fs[i].run(p)):
                bad.append(prefix)
    return bad


def is_optimal(g: Game, s: StrategyProfile, fs: Sequence[OutcomePolicy]) -> bool:
    """Check the optimality condition at every partial play, reachable or not."""
    if len(fs) != g.players or len(s) != g.players:
        raise ValueError("need one strategy and one outcome policy per player")
    return not optimality_violations(g, s, fs)


# --- backward induction ------------------------------------------------------


def backward_induction_strategy(es: Sequence[MovePolicy], g: Game, prefix: Sequence[Move]) -> NonDet:
    prefix = tuple(prefix)
    if len(prefix) >= g.players:
        raise ValueError("prefix must leave at least one player to move")
    rest = sel_sequence([e.selection for e in es[len(prefix):]], NonDet)
    plays = rest.run(lambda tail: g.outcome(prefix + tail))
    return NonDet(distinct(play[0] for play in plays))


def backward_induction_profile(es: Sequence[MovePolicy], g: Game) -> StrategyProfile:
    if len(es) != g.players:
        raise ValueError("need one move policy per player")
    return StrategyProfile(
        tuple(
            (lambda prefix, es=tuple(es): backward_induction_strategy(es, g, prefix))
            for _ in range(g.players)
        )
    )


def optimal_plays(es: Sequence[MovePolicy], g: Game) -> NonDet:
    """All plays that may occur when everyone follows the backward-induction profile."""
    if len(es) != g.players:
        raise ValueError("need one move policy per player")
    return sel_sequence([e.selection for e in es], NonDet).run(g.outcome).distinct()


def plays_by_stages(es: Sequence[MovePolicy], g: Game) -> NonDet:
    """Unfold the strategy profile move by move over all nondeterministic branches."""
    frontier: list[Play] = [()]
    for _ in range(g.players):
        frontier = [pre + (x,) for pre in frontier for x in backward_induction_strategy(es, g, pre)]
    return NonDet(distinct(frontier))


# --- random instances --------------------------------------------------------


def random_game(
    rng: random.Random,
    players: Tuple[int, int] = (2, 3),
    moves: Tuple[int, int] = (2, 3),
    outcomes: Sequence[int] = (-2, -1, 0, 1, 2),
) -> Game:
    n = rng.randint(*players)
    move_sets = [tuple(f"m{k}" for k in range(rng.randint(*moves))) for _ in range(n)]
    outcomes = tuple(outcomes)

    def q(_play):
        return sorted(rng.sample(outcomes, rng.randint(1, len(outcomes))))

    return Game.from_function(move_sets, q)


def random_rank_choice(rng: random.Random, outcomes: Sequence[int] = (-2, -1, 0, 1, 2)) -> Choice:
    """A choice function from a random total order on nonempty outcome sets."""
    subsets = [
        frozenset(c)
        for k in range(1, len(outcomes) + 1)
        for c in itertools.combinations(sorted(outcomes), k)
    ]
    rng.shuffle(subsets)
    order: Dict[frozenset, int] = {sub: r for r, sub in enumerate(subsets)}
    return choice_by_rank(order.__getitem__)
