"""SAT solving with quantifier and selection products.

Three solvers live here:

* :func:`sat_decide` -- product of existential quantifiers (decision only)
* :func:`sat_find` / :func:`verbose_sat` -- product of selection functions,
  returning an assignment that satisfies the predicate when one exists
* :func:`dpll` -- the continuation product run over a state holding an
  explicit recursion tree, with unit propagation at every leaf

Variables are 0-based internally; :mod:`selt.dimacs` does the 1-based mapping.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence, Tuple, Union

from .effects import Identity, Stateful, TraceEvent, Traced
from .selection import Quantifier, bounded_binary_search, quant_sequence

Assignment = Tuple[bool, ...]
Predicate = Callable[[Assignment], bool]


class SearchDepthError(RuntimeError):
    """The query path ran out before reaching a decided leaf."""


@dataclass(frozen=True, order=True)
class Literal:
    variable: int
    positive: bool = True

    def __neg__(self) -> "Literal":
        return negate_literal(self)

    def satisfied_by(self, assignment: Sequence[bool]) -> bool:
        return bool(assignment[self.variable]) == self.positive

    def to_dimacs(self) -> int:
        return (self.variable + 1) * (1 if self.positive else -1)

    def __repr__(self) -> str:
        return f"{'+' if self.positive else '-'}{self.variable}"


def pos(variable: int) -> Literal:
    return Literal(variable, True)


def neg(variable: int) -> Literal:
    return Literal(variable, False)


def negate_literal(lit: Literal) -> Literal:
    return Literal(lit.variable, not lit.positive)


Clause = Tuple[Literal, ...]


@dataclass(frozen=True)
class ClauseSet:
    clauses: Tuple[Clause, ...]
    var_count: int

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        if self.var_count < 0:
            raise ValueError("var_count must be non-negative")
        for clause in self.clauses:
            for lit in clause:
                if not 0 <= lit.variable < self.var_count:
                    raise ValueError(f"literal {lit!r} out of range for {self.var_count} variables")

    @classmethod
    def of(cls, clauses: Iterable[Iterable[Literal]], var_count: int | None = None) -> "ClauseSet":
        cs = tuple(tuple(c) for c in clauses)
        if var_count is None:
            var_count = 1 + max((l.variable for c in cs for l in c), default=-1)
        return cls(cs, var_count)

    @classmethod
    def from_dimacs_ints(cls, clauses: Iterable[Iterable[int]], var_count: int) -> "ClauseSet":
        """Build from signed 1-based integers, e.g. ``[[1, -2]]``."""
        return cls(
            tuple(tuple(Literal(abs(k) - 1, k > 0) for k in c) for c in clauses),
            var_count,
        )

    def with_clauses(self, clauses: Iterable[Clause]) -> "ClauseSet":
        return ClauseSet(tuple(clauses), self.var_count)

    def __len__(self) -> int:
        return len(self.clauses)

    def __iter__(self) -> Iterator[Clause]:
        return iter(self.clauses)

    def __repr__(self) -> str:
        return f"ClauseSet({[list(c) for c in self.clauses]!r}, var_count={self.var_count})"


def is_unit_clause(clause: Sequence[Literal]) -> bool:
    return len(clause) == 1


def propagate_unit(lit: Literal, cs: ClauseSet) -> ClauseSet:
    """Assert ``lit``: drop clauses containing it, strip its negation elsewhere."""
    neg_lit = negate_literal(lit)
    return cs.with_clauses(
        tuple(l for l in clause if l != neg_lit)
        for clause in cs.clauses
        if lit not in clause
    )


def simplify(cs: ClauseSet) -> ClauseSet:
    """Unit propagation to a fixpoint.

    Each round collects the current unit clauses and propagates them in
    order over the whole clause set (the units included), so two
    contradictory units leave an empty clause behind.
    """
    while True:
        units = [c[0] for c in cs.clauses if is_unit_clause(c)]
        if not units:
            return cs
        for lit in units:
            cs = propagate_unit(lit, cs)


def eval_clauses(cs: ClauseSet, assignment: Sequence[bool]) -> bool:
    return all(any(l.satisfied_by(assignment) for l in clause) for clause in cs.clauses)


def assignments(n: int) -> Iterator[Assignment]:
    """All length-``n`` assignments, lexicographic with False < True."""
    return itertools.product((False, True), repeat=n)


def brute_force_sat(n: int, q: Predicate) -> bool:
    return any(q(a) for a in assignments(n))


def brute_force_witness(n: int, q: Predicate) -> Assignment | None:
    return next((a for a in assignments(n) if q(a)), None)


def exists_quantifier() -> Quantifier:
    """``p(p(True))``, written with bind so it works over any effect."""
    return Quantifier(lambda p: p(True).bind(p))


def sat_decide(n: int, q: Predicate) -> bool:
    if n < 0:
        raise ValueError("n must be non-negative")
    phi = quant_sequence([exists_quantifier()] * n)
    return phi.run(lambda xs: Identity(bool(q(xs)))).value


def sat_find(n: int, q: Predicate) -> Assignment:
    """Assignment satisfying ``q`` if there is one; otherwise some assignment."""
    e = bounded_binary_search(n, Identity)
    return e.run(lambda xs: Identity(bool(q(xs)))).value


def traced_query(q: Predicate) -> Callable[[Assignment], Traced]:
    def query(xs):
        r = bool(q(xs))
        return Traced(r, (TraceEvent(tuple(xs), r),))

    return query


def verbose_sat(n: int, q: Predicate) -> Tuple[Assignment, Tuple[TraceEvent, ...]]:
    """:func:`sat_find` over the trace effect; returns the assignment and query log."""
    out = bounded_binary_search(n, Traced).run(traced_query(q))
    return out.value, out.log


def verbose_decide(n: int, q: Predicate) -> Tuple[bool, Tuple[TraceEvent, ...]]:
    out = quant_sequence([exists_quantifier()] * n).run(traced_query(q))
    return out.value, out.log


# --- DPLL over an explicit recursion tree -----------------------------------


@dataclass(frozen=True)
class Leaf:
    simplified: bool
    clauses: ClauseSet


@dataclass(frozen=True)
class Node:
    true_branch: "DPLLState"
    false_branch: "DPLLState"


DPLLState = Union[Leaf, Node]


def initial_state(cs: ClauseSet) -> DPLLState:
    return Leaf(False, cs)


def query_state(s: DPLLState, path: Sequence[bool], depth: int = 0) -> Tuple[DPLLState, bool]:
    """Walk (and grow) the tree along ``path``; True goes left.

    An undecided simplified leaf at depth ``n`` is split on variable ``n``:
    the left child gets the negative unit, the right child the positive one.
    """
    if isinstance(s, Leaf):
        if not s.simplified:
            return query_state(Leaf(True, simplify(s.clauses)), path, depth)
        cs = s.clauses
        if not cs.clauses:
            return s, True
        if any(len(c) == 0 for c in cs.clauses):
            return s, False
        if depth >= cs.var_count:
            raise SearchDepthError(f"no variable left to branch on at depth {depth}")
        left = Leaf(False, cs.with_clauses(((neg(depth),),) + cs.clauses))
        right = Leaf(False, cs.with_clauses(((pos(depth),),) + cs.clauses))
        return query_state(Node(left, right), path, depth)
    if not path:
        raise SearchDepthError(f"query path exhausted at depth {depth}")
    if path[0]:
        sub, b = query_state(s.true_branch, path[1:], depth + 1)
        return Node(sub, s.false_branch), b
    sub, b = query_state(s.false_branch, path[1:], depth + 1)
    return Node(s.true_branch, sub), b


def _tree_query(bits: Assignment) -> Stateful:
    def run(tree):
        tree, b = query_state(tree, bits, 0)
        return b, tree

    return Stateful(run)


def dpll(n: int, cs: ClauseSet) -> bool:
    """Satisfiability of ``cs`` via ``n`` stacked branch quantifiers over tree state."""
    s = quant_sequence([exists_quantifier()] * n).run(_tree_query)
    return s.eval(initial_state(cs))


def dpll_traced(n: int, cs: ClauseSet) -> Tuple[bool, Tuple[TraceEvent, ...]]:
    """Like :func:`dpll` but also records every tree query in order."""

    def query(bits):
        def run(state):
            tree, log = state
            tree, b = query_state(tree, bits, 0)
            return b, (tree, log + (TraceEvent(tuple(bits), b),))

        return Stateful(run)

    s = quant_sequence([exists_quantifier()] * n).run(query)
    b, (_tree, log) = s.run((initial_state(cs), ()))
    return b, log
