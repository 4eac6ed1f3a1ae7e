# %% [markdown]
# The skew-symmetric game and its hole
#
# The classic symmetric game built from (A, b, c) has value 0. Reading
# an LP answer off a minimax strategy (p, q, t) works when t > 0 or when
# b.p - c.q < 0. The remaining case, t = 0 with b.p = c.q, says nothing.

# %%
from fractions import Fraction as F

from minimax_lp import LPInstance
from minimax_lp.dantzig import DantzigStrategy, dantzig_matrix, extract_classic, extract_positive
from minimax_lp.nonneg import solve_nonneg_lp

lp = LPInstance([[-1, F(1, 2)], [1, F(-1, 2)]], [1, 1], [1, 1])
for row in dantzig_matrix(lp).K:
    print(" ".join(f"{str(a):>5s}" for a in row))

# %%
s = DantzigStrategy.split(lp, (F(1, 4), F(1, 4), F(1, 6), F(1, 3), F(0)))
print("t =", s.t, " gap =", s.gap(lp))
print("classic  :", extract_classic(lp, s))
print("positive :", extract_positive(lp, s))

# %% [markdown]
# With b = c = 0 even positivity cannot help: the first unit vector is
# a minimax strategy and tells us nothing. Pre-processing for A >= 0
# answers the LP without ever consulting the game.

# %%
zero = LPInstance([[1, 2], [3, 0]], [0, 0], [0, 0])
print(extract_classic(zero, DantzigStrategy((F(1), F(0)), (F(0), F(0)), F(0))))
print(solve_nonneg_lp(zero, engine="dantzig"))
