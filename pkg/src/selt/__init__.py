"""Selection functions, the selection monad transformer, and two uses of it:
SAT solving and backward induction for nondeterministic sequential games."""

from .effects import Identity, NonDet, Stateful, TraceEvent, Traced, pair, sequence_all
from .selection import (
    Quantifier,
    SelectionFn,
    bounded_binary_search,
    quant_bind,
    quant_pair,
    quant_sequence,
    quant_unit,
    sel_bind,
    sel_map,
    sel_pair,
    sel_sequence,
    sel_unit,
    to_quantifier,
)

__version__ = "0.1.0"
