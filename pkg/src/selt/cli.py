"""Command-line entry point.

    selt sat-decide FILE.cnf [--method naive|dpll] [--trace]
    selt sat-find   FILE.cnf [--method naive|dpll] [--trace]
    selt game-solve FILE.game --policy KIND --policy KIND ... [--check]

SAT commands exit with 10 (SAT) / 20 (UNSAT); errors exit with 1.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import Sequence, TextIO

from .dimacs import DimacsError, read_dimacs
from .gameformat import GameFormatError, read_game
from .games import (
    CHOICE_KINDS,
    NoAdmissibleMove,
    argopt,
    backward_induction_profile,
    choice_fn,
    induced_outcome_policy,
    is_optimal,
    optimal_plays,
)
from .sat import dpll, dpll_traced, eval_clauses, sat_decide, verbose_decide, verbose_sat, sat_find

EXIT_SAT = 10
EXIT_UNSAT = 20
EXIT_ERROR = 1


@dataclass(frozen=True)
class CliConfig:
    subcommand: str
    input_path: str
    method: str = "naive"
    trace: bool = False
    policy_names: tuple = ()
    check: bool = False
    seed: int = 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="selt", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name, helptext in [
        ("sat-decide", "decide satisfiability of a DIMACS CNF file"),
        ("sat-find", "find a satisfying assignment of a DIMACS CNF file"),
    ]:
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("input_path")
        sp.add_argument("--method", choices=("naive", "dpll"), default="naive")
        sp.add_argument("--trace", action="store_true", help="print every query and the query count")
        sp.add_argument("--seed", type=int, default=0, help=argparse.SUPPRESS)
    gp = sub.add_parser("game-solve", help="backward induction on a game description")
    gp.add_argument("input_path")
    gp.add_argument(
        "--policy",
        dest="policy_names",
        action="append",
        default=[],
        metavar="KIND",
        help=f"move policy for the next player ({', '.join(CHOICE_KINDS)} or a name declared in the file)",
    )
    gp.add_argument("--check", action="store_true", help="verify optimality against the induced outcome policies")
    gp.add_argument("--seed", type=int, default=0, help=argparse.SUPPRESS)
    return parser


def config_from_args(argv: Sequence[str] | None = None) -> CliConfig:
    ns = build_parser().parse_args(argv)
    return CliConfig(
        subcommand=ns.subcommand,
        input_path=ns.input_path,
        method=getattr(ns, "method", "naive"),
        trace=getattr(ns, "trace", False),
        policy_names=tuple(getattr(ns, "policy_names", ())),
        check=getattr(ns, "check", False),
        seed=ns.seed,
    )


def _bits_to_dimacs(bits) -> str:
    return " ".join(str(i + 1 if b else -(i + 1)) for i, b in enumerate(bits))


def run_sat(config: CliConfig, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        cs = read_dimacs(config.input_path)
    except OSError as exc:
        print(f"error: cannot read {config.input_path}: {exc.strerror or exc}", file=err)
        return EXIT_ERROR
    except DimacsError as exc:
        print(f"error: {config.input_path}: {exc}", file=err)
        return EXIT_ERROR

    n = cs.var_count

    def q(bits):
        return eval_clauses(cs, bits)

    log = ()
    witness = None
    if config.method == "dpll":
        sat, log = dpll_traced(n, cs) if config.trace else (dpll(n, cs), ())
        if sat and config.subcommand == "sat-find":
            witness = sat_find(n, q)
    elif config.subcommand == "sat-find":
        witness, log = verbose_sat(n, q) if config.trace else (sat_find(n, q), ())
        sat = q(witness)
    else:
        sat, log = verbose_decide(n, q) if config.trace else (sat_decide(n, q), ())

    for event in log:
        print(event, file=out)
    if config.trace:
        print(f"queries: {len(log)}", file=out)
    print("SAT" if sat else "UNSAT", file=out)
    if sat and witness is not None:
        print(_bits_to_dimacs(witness), file=out)
    return EXIT_SAT if sat else EXIT_UNSAT


def run_game(config: CliConfig, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        game, declared = read_game(config.input_path)
    except OSError as exc:
        print(f"error: cannot read {config.input_path}: {exc.strerror or exc}", file=err)
        return EXIT_ERROR
    except GameFormatError as exc:
        print(f"error: {config.input_path}: {exc}", file=err)
        return EXIT_ERROR

    if len(config.policy_names) != game.players:
        print(f"error: game has {game.players} players but {len(config.policy_names)} policies were given", file=err)
        return EXIT_ERROR
    es = []
    for i, name in enumerate(config.policy_names):
        if name in declared[i]:
            es.append(declared[i][name])
            continue
        try:
            es.append(argopt(choice_fn(name), game.move_sets[i]))
        except ValueError as exc:
            print(f"error: player {i + 1}: {exc}", file=err)
            return EXIT_ERROR

    try:
        plays = optimal_plays(es, game)
        for play in sorted(plays.candidates, key=lambda p: [game.move_sets[i].index(m) for i, m in enumerate(p)]):
            print(" ".join(map(str, play)), file=out)
        if config.check:
            profile = backward_induction_profile(es, game)
            ok = is_optimal(game, profile, [induced_outcome_policy(e) for e in es])
            print(f"optimal: {'yes' if ok else 'no'}", file=out)
    except NoAdmissibleMove as exc:
        print(f"error: {exc}", file=err)
        return EXIT_ERROR
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    config = config_from_args(argv)
    if config.subcommand == "game-solve":
        return run_game(config)
    return run_sat(config)


if __name__ == "__main__":
    sys.exit(main())
