"""Base effects: Identity, NonDet, Stateful and Traced.

Each effect is a small immutable class with a ``unit`` classmethod and a
``bind`` method.  No generic monad abstraction is used; the selection and
continuation transformers only rely on that shared naming.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Generic, Iterable, Sequence, Tuple, TypeVar

T = TypeVar("T")
U = TypeVar("U")
S = TypeVar("S")

__all__ = [
    "Identity",
    "NonDet",
    "Stateful",
    "Traced",
    "TraceEvent",
    "pair",
    "sequence_all",
    "distinct",
]


def distinct(items: Iterable[T]) -> list[T]:
    """Deduplicate preserving first-occurrence order.

    Works for unhashable items too (falls back to equality scans).
    """
    out: list[T] = []
    seen: set = set()
    for item in items:
        try:
            if item in seen:
                continue
            seen.add(item)
        except TypeError:
            if item in out:
                continue
        out.append(item)
    return out


@dataclass(frozen=True)
class Identity(Generic[T]):
    value: T

    @classmethod
    def unit(cls, x: T) -> "Identity[T]":
        return cls(x)

    def bind(self, f: Callable[[T], "Identity[U]"]) -> "Identity[U]":
        return f(self.value)


class NonDet(Generic[T]):
    """Finite nonempty nondeterministic choice, kept as an ordered list.

    Duplicates are allowed internally; ``==`` uses set semantics.  Use
    :attr:`candidates` for the exact sequence.
    """

    __slots__ = ("candidates",)

    def __init__(self, candidates: Iterable[T]):
        cands = tuple(candidates)
        if not cands:
            raise ValueError("NonDet requires at least one candidate")
        object.__setattr__(self, "candidates", cands)

    def __setattr__(self, name, value):
        raise AttributeError("NonDet is immutable")

    @classmethod
    def unit(cls, x: T) -> "NonDet[T]":
        return cls((x,))

    def bind(self, f: Callable[[T], "NonDet[U]"]) -> "NonDet[U]":
        return NonDet(y for x in self.candidates for y in f(x).candidates)

    def distinct(self) -> "NonDet[T]":
        return NonDet(distinct(self.candidates))

    def issubset(self, other: "NonDet[T] | Iterable[T]") -> bool:
        pool = other.candidates if isinstance(other, NonDet) else tuple(other)
        return all(x in pool for x in self.candidates)

    def __iter__(self):
        return iter(self.candidates)

    def __len__(self) -> int:
        return len(self.candidates)

    def __contains__(self, x) -> bool:
        return x in self.candidates

    def __eq__(self, other) -> bool:
        if not isinstance(other, NonDet):
            return NotImplemented
        return self.issubset(other) and other.issubset(self)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"NonDet({list(self.candidates)!r})"


@dataclass(frozen=True)
class Stateful(Generic[S, T]):
    """State-threading computation; ``run(s)`` returns ``(value, new_state)``."""

    run: Callable[[S], Tuple[T, S]]

    @classmethod
    def unit(cls, x: T) -> "Stateful[S, T]":
        return cls(lambda s: (x, s))

    def bind(self, f: Callable[[T], "Stateful[S, U]"]) -> "Stateful[S, U]":
        def run(s):
            x, s1 = self.run(s)
            return f(x).run(s1)

        return Stateful(run)

    def eval(self, s: S) -> T:
        return self.run(s)[0]

    @staticmethod
    def get() -> "Stateful[S, S]":
        return Stateful(lambda s: (s, s))

    @staticmethod
    def put(new: S) -> "Stateful[S, None]":
        return Stateful(lambda _s: (None, new))

    @staticmethod
    def modify(f: Callable[[S], S]) -> "Stateful[S, None]":
        return Stateful(lambda s: (None, f(s)))


@dataclass(frozen=True)
class TraceEvent:
    query_input: Tuple[bool, ...]
    query_result: bool

    def __str__(self) -> str:
        bits = "".join("1" if b else "0" for b in self.query_input)
        return f"query {bits or '-'} -> {'true' if self.query_result else 'false'}"


@dataclass(frozen=True)
class Traced(Generic[T]):
    """A value paired with the ordered log of events emitted while computing it."""

    value: T
    log: Tuple[TraceEvent, ...] = field(default=())

    @classmethod
    def unit(cls, x: T) -> "Traced[T]":
        return cls(x, ())

    def bind(self, f: Callable[[T], "Traced[U]"]) -> "Traced[U]":
        nxt = f(self.value)
        return Traced(nxt.value, self.log + nxt.log)

    @classmethod
    def tell(cls, event: TraceEvent, value: Any = None) -> "Traced":
        return cls(value, (event,))


def pair(m, n):
    """Left-then-right monoidal product of two effectful values."""
    unit = type(m).unit
    return m.bind(lambda x: n.bind(lambda y: unit((x, y))))


def sequence_all(ms: Sequence, unit: Callable | None = None):
    """Iterated :func:`pair`, right-nested, returning a tuple of results.

    ``unit`` is needed only when ``ms`` is empty.
    """
    ms = list(ms)
    if not ms:
        if unit is None:
            raise ValueError("sequence_all of an empty collection needs a unit")
        return unit(())
    head, rest = ms[0], ms[1:]
    unit = type(head).unit
    tail = sequence_all(rest, unit)
    return head.bind(lambda x: tail.bind(lambda xs: unit((x,) + xs)))
