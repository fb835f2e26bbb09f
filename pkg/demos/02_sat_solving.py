"""
SAT solving with products
=========================

Three solvers, one structure: an n-fold product of the same one-bit
search, differing only in the effect it runs over.
"""

from pathlib import Path

from selt.dimacs import read_dimacs
from selt.sat import dpll, eval_clauses, sat_decide, sat_find, verbose_sat

data = Path(__file__).parent / "data"

# %%
# Decision with quantifiers, witnesses with selections
# ----------------------------------------------------
cs = read_dimacs(str(data / "small_sat.cnf"))
q = lambda bits: eval_clauses(cs, bits)
print(f"{cs.var_count} variables, {len(cs)} clauses")
print("decide (quantifier product):", sat_decide(cs.var_count, q))
witness = sat_find(cs.var_count, q)
print("witness (selection product):", witness, "satisfies:", q(witness))

# %%
# DPLL
# ----
# The same continuation product, now over a state holding an explicit
# binary recursion tree whose leaves carry unit-propagated clause sets.
hole = read_dimacs(str(data / "pigeonhole_3_2.cnf"))
print("pigeonhole 3->2 by DPLL:", "SAT" if dpll(hole.var_count, hole) else "UNSAT")

# %%
# Watching the search
# -------------------
# Running the selection product over the trace effect records every query.
# With a predicate that only looks at the first bit the product asks the
# same question over and over: lots of duplicated work, tiny search space.
bits, log = verbose_sat(10, lambda xs: xs[0])
print(f"{len(log)} queries, {len({e.query_input for e in log})} distinct")

bits, log = verbose_sat(3, lambda xs: xs == (False, True, False))
for event in log:
    print("  ", event)
print("found", bits)
