# %% [markdown]
# Solving an LP by playing a game
#
# With b > 0 and c > 0, rescale row i by 1/b_i and column j by 1/c_j.
# The zero-sum game on the rescaled matrix has value 1/V when the LP
# optimum is V, and a nonpositive value when the LP is unbounded.

# %%
from minimax_lp import LPInstance, scale_lp, solve_game, solve_positive_lp
from minimax_lp.reduction import interpret_degree

lp = LPInstance([[1, 2], [3, 1]], [1, 2], [1, 1])
s = scale_lp(lp)
print("game matrix:", [[str(a) for a in row] for row in s.M])

# %%
sol = solve_game(s.game)
out = solve_positive_lp(lp)
print("game value :", sol.value)
print("LP value   :", out.value, " reciprocal:", 1 / out.value)
print("x =", [str(v) for v in out.x], " y =", [str(v) for v in out.y])

# %% [markdown]
# When a column is free to grow, the game value drops to zero or below
# and its optimal column strategy, rescaled, is the unbounded direction.

# %%
runaway = LPInstance([[1, -1], [2, 0]], [1, 1], [1, 1])
v = solve_game(scale_lp(runaway).game).value
print(interpret_degree(v))
print(solve_positive_lp(runaway))
