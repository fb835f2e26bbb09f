"""Line-based text format for nondeterministic games.

::

    # comment
    players 2
    moves 1 Cautious Risky
    moves 2 Cautious Risky
    outcome Cautious Cautious : 0
    outcome Cautious Risky : -1 0 1
    ...
    policy 1 cautiousmax
    policy 2 cautiousmin 0 1

Players are numbered from 1 in the file.  Every play needs exactly one
``outcome`` row with at least one integer.
"""

from __future__ import annotations

import itertools
from typing import Dict, Tuple

from .games import CHOICE_KINDS, Game, MovePolicy, argopt, choice_fn

__all__ = ["GameFormatError", "parse_game", "read_game", "format_game"]


class GameFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


Policies = Dict[int, Dict[str, MovePolicy]]


def _player(tok: str, n: int, lineno: int) -> int:
    try:
        i = int(tok)
    except ValueError:
        raise GameFormatError(f"bad player number {tok!r}", lineno) from None
    if not 1 <= i <= n:
        raise GameFormatError(f"player {i} out of range 1..{n}", lineno)
    return i - 1


def parse_game(text: str) -> Tuple[Game, Policies]:
    """Parse a game description.

    Returns the game and, per 0-based player, the declared policies keyed by
    kind name.
    """
    n = None
    move_sets: Dict[int, Tuple[str, ...]] = {}
    table: Dict[tuple, Tuple[int, ...]] = {}
    pending_policies = []
    last = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        last = lineno
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, *args = line.split()
        if keyword == "players":
            if n is not None:
                raise GameFormatError("duplicate players line", lineno)
            if len(args) != 1 or not args[0].isdigit() or int(args[0]) < 1:
                raise GameFormatError("expected 'players N' with N >= 1", lineno)
            n = int(args[0])
            continue
        if n is None:
            raise GameFormatError(f"{keyword!r} before 'players' line", lineno)
        if keyword == "moves":
            if len(args) < 2:
                raise GameFormatError("expected 'moves i m1 m2 ...'", lineno)
            i = _player(args[0], n, lineno)
            if i in move_sets:
                raise GameFormatError(f"duplicate moves line for player {i + 1}", lineno)
            if len(set(args[1:])) != len(args[1:]):
                raise GameFormatError("repeated move name", lineno)
            move_sets[i] = tuple(args[1:])
        elif keyword == "outcome":
            if ":" not in args:
                raise GameFormatError("expected 'outcome m1 ... mN : r1 r2 ...'", lineno)
            k = args.index(":")
            play, rs = tuple(args[:k]), args[k + 1:]
            if len(move_sets) != n:
                raise GameFormatError("outcome row before all moves lines", lineno)
            if len(play) != n:
                raise GameFormatError(f"play has {len(play)} moves, expected {n}", lineno)
            for i, m in enumerate(play):
                if m not in move_sets[i]:
                    raise GameFormatError(f"unknown move {m!r} for player {i + 1}", lineno)
            if play in table:
                raise GameFormatError(f"duplicate outcome row for {' '.join(play)}", lineno)
            if not rs:
                raise GameFormatError("nonempty outcome set required", lineno)
            try:
                table[play] = tuple(int(r) for r in rs)
            except ValueError:
                raise GameFormatError("outcomes must be integers", lineno) from None
        elif keyword == "policy":
            if len(args) not in (2, 4):
                raise GameFormatError("expected 'policy i kind [low high]'", lineno)
            i = _player(args[0], n, lineno)
            kind = args[1].lower()
            if kind not in CHOICE_KINDS:
                raise GameFormatError(f"unknown policy kind {args[1]!r}", lineno)
            bounds = None
            if len(args) == 4:
                try:
                    bounds = (int(args[2]), int(args[3]))
                except ValueError:
                    raise GameFormatError("policy bounds must be integers", lineno) from None
            pending_policies.append((i, kind, bounds, lineno))
        else:
            raise GameFormatError(f"unknown keyword {keyword!r}", lineno)

    if n is None:
        raise GameFormatError("missing 'players' line")
    for i in range(n):
        if i not in move_sets:
            raise GameFormatError(f"missing moves line for player {i + 1}", last)
    ordered = tuple(move_sets[i] for i in range(n))
    missing = [p for p in itertools.product(*ordered) if p not in table]
    if missing:
        raise GameFormatError(
            f"incomplete outcome table: no row for {' '.join(missing[0])}"
            + (f" (and {len(missing) - 1} more)" if len(missing) > 1 else ""),
            last,
        )
    game = Game(ordered, table)

    policies: Policies = {i: {} for i in range(n)}
    for i, kind, bounds, lineno in pending_policies:
        if kind in policies[i]:
            raise GameFormatError(f"duplicate {kind} policy for player {i + 1}", lineno)
        policies[i][kind] = argopt(choice_fn(kind, bounds), ordered[i])
    return game, policies


def read_game(path: str) -> Tuple[Game, Policies]:
    with open(path, encoding="utf-8") as fh:
        return parse_game(fh.read())


def format_game(game: Game) -> str:
    lines = [f"players {game.players}"]
    lines += [f"moves {i + 1} {' '.join(map(str, ms))}" for i, ms in enumerate(game.move_sets)]
    for play in game.plays():
        rs = " ".join(str(r) for r in game.table[play])
        lines.append(f"outcome {' '.join(map(str, play))} : {rs}")
    return "\n".join(lines) + "\n"
