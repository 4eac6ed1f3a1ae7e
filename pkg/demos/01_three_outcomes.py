# %% [markdown]
# Three ways a linear program can end
#
# Every LP `max c.x  s.t.  Ax <= b, x >= 0` ends in exactly one of three
# states, and each comes with a certificate anyone can check by hand.

# %%
from fractions import Fraction

from minimax_lp import LPInstance, brute_force_lp, solve_lp, verify_outcome

cases = {
    "bounded": LPInstance([[1, 0], [0, 2]], [1, 2], [1, 1]),
    "empty": LPInstance([[1, -1], [-1, 1]], [-1, -1], [1, 1]),
    "runaway": LPInstance([[-1, Fraction(1, 2)], [1, Fraction(-1, 2)]], [1, 1], [1, 1]),
}

# %%
for name, lp in cases.items():
    out = solve_lp(lp)
    print(f"{name:8s} -> {out.kind}")
    for check in verify_outcome(lp, out).checks:
        print(f"    {'ok' if check.passed else 'FAIL'}  {check.label}")

# %% [markdown]
# The "empty" instance is special: its dual has no feasible point either,
# so the infeasibility certificate also carries a ray for the dual side.

# %%
print(solve_lp(cases["empty"]))

# %% [markdown]
# A slow but independent cross-check: enumerate every vertex.

# %%
for name, lp in cases.items():
    print(name, brute_force_lp(lp).kind == solve_lp(lp).kind)
