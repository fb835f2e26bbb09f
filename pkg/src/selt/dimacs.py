"""DIMACS CNF reading and writing."""

from __future__ import annotations

from typing import Iterable, TextIO, Union

from .sat import ClauseSet, Literal

__all__ = ["DimacsError", "parse_dimacs", "read_dimacs", "format_dimacs"]


class DimacsError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_dimacs(text: Union[str, Iterable[str]]) -> ClauseSet:
    """Parse DIMACS CNF text into a :class:`ClauseSet`.

    Clauses may span lines; each ends at a ``0`` token.  A ``%`` line (as
    found in SATLIB files) ends the clause section.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    var_count = clause_count = None
    clauses: list[tuple[Literal, ...]] = []
    current: list[Literal] = []
    last_line = 0

    for lineno, raw in enumerate(lines, start=1):
        last_line = lineno
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            if var_count is not None:
                raise DimacsError("duplicate problem line", lineno)
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsError(f"malformed header {line!r}", lineno)
            try:
                var_count, clause_count = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(f"malformed header {line!r}", lineno) from None
            if var_count < 0 or clause_count < 0:
                raise DimacsError(f"malformed header {line!r}", lineno)
            continue
        if var_count is None:
            raise DimacsError("clause before problem line", lineno)
        for tok in line.split():
            try:
                k = int(tok)
            except ValueError:
                raise DimacsError(f"not an integer literal: {tok!r}", lineno) from None
            if k == 0:
                clauses.append(tuple(current))
                current = []
                continue
            if abs(k) > var_count:
                raise DimacsError(f"variable out of range: {k} (header declares {var_count})", lineno)
            current.append(Literal(abs(k) - 1, k > 0))

    if var_count is None:
        raise DimacsError("missing problem line")
    if current:
        raise DimacsError("last clause is not terminated by 0", last_line)
    if len(clauses) != clause_count:
        raise DimacsError(
            f"clause count mismatch: header declares {clause_count}, found {len(clauses)}",
            last_line,
        )
    return ClauseSet(tuple(clauses), var_count)


def read_dimacs(source: Union[str, TextIO]) -> ClauseSet:
    if hasattr(source, "read"):
        return parse_dimacs(source.read())
    with open(source, encoding="utf-8") as fh:
        return parse_dimacs(fh.read())


def format_dimacs(cs: ClauseSet) -> str:
    lines = [f"p cnf {cs.var_count} {len(cs.clauses)}"]
    lines += [" ".join([str(l.to_dimacs()) for l in c] + ["0"]) for c in cs.clauses]
    return "\n".join(lines) + "\n"
