# %% [markdown]
# Assignment as hide-and-seek
#
# A hider picks an edge (worker i, job j); a seeker picks a vertex and
# wins 1/mu_ij when it touches the hider's edge. The value of this game
# is the reciprocal of the heaviest matching.

# %%
from minimax_lp.assignment import (
    AssignmentInstance,
    check_hide_and_seek_value,
    hide_and_seek,
    matching_to_column_strategy,
    max_weight_matchings,
    verify_matching_strategies,
)
from minimax_lp.games import solve_game_fictitious

a = AssignmentInstance([[3, 1, 2], [1, 4, 1], [2, 2, 5]])
value, weight, holds = check_hide_and_seek_value(a)
print(f"game value {value}, best matching {weight}, reciprocal? {holds}")

# %%
_, best = max_weight_matchings(a)
for sigma in best:
    q = matching_to_column_strategy(a, sigma)
    print("hide on", {a.edge(l): str(p) for l, p in enumerate(q.probs) if p})
print("strategies verified:", bool(verify_matching_strategies(a)))

# %% [markdown]
# Fictitious play only brackets the value, but the bracket tightens.

# %%
g = hide_and_seek(a).game
for rounds in (10, 100, 1000, 10000):
    r = solve_game_fictitious(g, rounds)
    print(f"{rounds:6d} rounds: [{float(r.lower):.5f}, {float(r.upper):.5f}]  exact {float(value):.5f}")
