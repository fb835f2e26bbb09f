"""Selection functions and quantifiers over a base effect.

A :class:`SelectionFn` maps a context ``X -> M R`` to ``M X``; a
:class:`Quantifier` maps the same kind of context to ``M R``.  With the
:class:`~selt.effects.Identity` effect these are the ordinary selection and
continuation monads.

Contexts are plain callables and nothing is memoised, so repeated queries
made by the products are observable through :class:`~selt.effects.Traced`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Sequence

__all__ = [
    "SelectionFn",
    "Quantifier",
    "sel_unit",
    "sel_bind",
    "sel_map",
    "to_quantifier",
    "sel_pair",
    "sel_sequence",
    "quant_unit",
    "quant_bind",
    "quant_pair",
    "quant_sequence",
    "bounded_binary_search",
]

Context = Callable[[Any], Any]


@dataclass(frozen=True)
class SelectionFn:
    run: Callable[[Context], Any]

    def __call__(self, p: Context):
        return self.run(p)

    def bind(self, f: Callable[[Any], "SelectionFn"]) -> "SelectionFn":
        return sel_bind(self, f)


@dataclass(frozen=True)
class Quantifier:
    run: Callable[[Context], Any]

    def __call__(self, p: Context):
        return self.run(p)

    def bind(self, f: Callable[[Any], "Quantifier"]) -> "Quantifier":
        return quant_bind(self, f)


def sel_unit(x, effect) -> SelectionFn:
    """Selection ignoring its context; ``effect`` supplies the unit."""
    return SelectionFn(lambda _p: effect.unit(x))


def sel_bind(e: SelectionFn, f: Callable[[Any], SelectionFn]) -> SelectionFn:
    def run(p):
        def g(x):
            return f(x).run(p)

        def h(x):
            return g(x).bind(p)

        return e.run(h).bind(g)

    return SelectionFn(run)


def sel_map(e: SelectionFn, f: Callable[[Any], Any]) -> SelectionFn:
    """Functor action: select in ``X`` through ``f`` and report ``f(x)``."""
    def run(p):
        a = e.run(lambda x: p(f(x)))
        unit = type(a).unit
        return a.bind(lambda x: unit(f(x)))

    return SelectionFn(run)


def to_quantifier(e: SelectionFn) -> Quantifier:
    """The induced quantifier: run ``e`` and feed the selection back to ``p``."""
    return Quantifier(lambda p: e.run(p).bind(p))


def _product(e: SelectionFn, d: SelectionFn, join: Callable[[Any, Any], Any]) -> SelectionFn:
    # a   = e(x -> b_x >>= y -> q(join(x, y)))
    # b_x = d(y -> q(join(x, y)))
    # result = a >>= x -> b_x >>= y -> unit(join(x, y))
    def run(q):
        def b(x):
            return d.run(lambda y: q(join(x, y)))

        def cont(x):
            return b(x).bind(lambda y: q(join(x, y)))

        a = e.run(cont)
        unit = type(a).unit
        return a.bind(lambda x: b(x).bind(lambda y: unit(join(x, y))))

    return SelectionFn(run)


def sel_pair(e: SelectionFn, d: SelectionFn) -> SelectionFn:
    """Binary product of selection functions, selecting pairs ``(x, y)``.

    Each first-stage candidate ``x`` is paired with the second-stage
    candidates ``b_x`` chosen in the context fixed by ``x``.
    """
    return _product(e, d, lambda x, y: (x, y))


def sel_sequence(es: Sequence[SelectionFn], effect=None) -> SelectionFn:
    """Iterated product with the head selection outermost; selects tuples.

    ``effect`` supplies the unit and is required only for the empty product.
    """
    es = list(es)
    if not es:
        if effect is None:
            raise ValueError("the empty product needs an explicit effect")
        return sel_unit((), effect)
    if len(es) == 1:
        return sel_map(es[0], lambda x: (x,))
    return _product(es[0], sel_sequence(es[1:], effect), lambda x, xs: (x,) + xs)


def quant_unit(x) -> Quantifier:
    return Quantifier(lambda p: p(x))


def quant_bind(phi: Quantifier, f: Callable[[Any], Quantifier]) -> Quantifier:
    return Quantifier(lambda p: phi.run(lambda x: f(x).run(p)))


def quant_pair(phi: Quantifier, psi: Quantifier) -> Quantifier:
    return Quantifier(lambda q: phi.run(lambda x: psi.run(lambda y: q((x, y)))))


def quant_sequence(phis: Sequence[Quantifier]) -> Quantifier:
    """Iterated quantifier product over tuples, head outermost."""
    phis = list(phis)
    if not phis:
        return Quantifier(lambda q: q(()))
    head, rest = phis[0], quant_sequence(phis[1:])
    return Quantifier(lambda q: head.run(lambda x: rest.run(lambda xs: q((x,) + xs))))


def bounded_binary_search(n: int, effect=None) -> SelectionFn:
    """Product of ``n`` copies of the selection that picks whatever ``p(True)`` says.

    Given a predicate on bit tuples of length ``n`` this finds a satisfying
    tuple whenever one exists.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return sel_sequence([SelectionFn(lambda p: p(True))] * n, effect)
