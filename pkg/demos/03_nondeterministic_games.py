"""
Backward induction for nondeterministic games
=============================================

Two players each pick Cautious or Risky.  The outcome is a *set* of
possible payoffs to player 1 (player 2 wants it small).  Each player's
move policy is built from a choice function; backward induction is the
product of the policies.
"""

import random

from selt.games import (
    argopt,
    backward_induction_profile,
    behaviour_sets,
    choice_fn,
    example_game,
    induced_outcome_policy,
    is_optimal,
    optimal_plays,
    random_game,
    random_rank_choice,
)

g = example_game()
for play in g.plays():
    print(f"{' / '.join(play):<20} {sorted(g.outcome(play))}")

# %%
# Four personalities
# ------------------
# Risky players chase the best possible outcome; cautious ones avoid any
# move that might produce the extreme outcome.
for kinds in [("cautiousmax", "cautiousmin"), ("cautiousmax", "riskymin"),
              ("riskymax", "cautiousmin"), ("riskymax", "riskymin")]:
    es = [argopt(choice_fn(k), ms) for k, ms in zip(kinds, g.move_sets)]
    plays = optimal_plays(es, g)
    print(f"{kinds[0]:>11} vs {kinds[1]:<11}: {[list(p) for p in plays]}")

# %%
# When both are cautious, player 1 can afford Risky: player 2 will not
# answer Risky with Risky.  The strategy profile says so at every history.
es = [argopt(choice_fn("cautiousmax"), g.move_sets[0]), argopt(choice_fn("cautiousmin"), g.move_sets[1])]
profile = backward_induction_profile(es, g)
print("player 2 after Cautious:", list(profile[1](("Cautious",))))
print("player 2 after Risky:   ", list(profile[1](("Risky",))))
print("behaviour sets:", [list(b) for b in behaviour_sets(g, profile, ())])
print("optimal:", is_optimal(g, profile, [induced_outcome_policy(e) for e in es]))

# %%
# Random games
# ------------
# The profile built by backward induction passes the optimality check on
# random games too.
rng = random.Random(0)
ok = 0
for _ in range(20):
    game = random_game(rng)
    pols = [argopt(random_rank_choice(rng), ms) for ms in game.move_sets]
    ok += is_optimal(game, backward_induction_profile(pols, game), [induced_outcome_policy(e) for e in pols])
print(f"{ok}/20 random games: backward-induction profile optimal")
