"""
Selection functions and quantifiers
===================================

A selection function takes a *context* (a function from candidates to
results) and picks a candidate.  A quantifier takes the same context and
returns a result.  Every selection function induces a quantifier: select,
then feed the choice back into the context.
"""

from selt import Identity, NonDet, Quantifier, SelectionFn, quant_pair, sel_pair, to_quantifier

# The simplest interesting selection over booleans: ask the context about
# True and select whatever it answers.  It finds x with p(x) true whenever
# such an x exists.
take_true = SelectionFn(lambda p: p(True))

for name, p in [("identity", lambda x: x), ("negation", lambda x: not x), ("false", lambda x: False)]:
    ctx = lambda x, p=p: Identity(p(x))
    chosen = take_true.run(ctx).value
    print(f"context {name:<9} selects {chosen!s:<5} -> p(choice) = {p(chosen)}")

# %%
# The induced quantifier is an existential quantifier: it reports whether
# the context can be made true.
exists = to_quantifier(take_true)
print("exists x. not x      =", exists.run(lambda x: Identity(not x)).value)

# %%
# Products
# --------
# The product of two selections searches pairs.  The first component is
# chosen knowing how the second will respond to it.
q = lambda xy: Identity((not xy[0]) and xy[1])
print("pair solving (not x) and y:", sel_pair(take_true, take_true).run(q).value)

# The same product on quantifiers nests them; the induced quantifier of
# the product agrees with the product of induced quantifiers.
print("quantifier product:", quant_pair(exists, exists).run(q).value)
print("induced from pair:  ", to_quantifier(sel_pair(take_true, take_true)).run(q).value)

# %%
# Changing the effect
# -------------------
# Over NonDet a selection may return several candidates, and a context may
# map a candidate to several results.
both = SelectionFn(lambda _p: NonDet(["left", "right"]))
ctx = {"left": NonDet([1, 2]), "right": NonDet([3])}.__getitem__
print("all outcomes reachable through both moves:", list(to_quantifier(both).run(ctx)))
