#!/usr/bin/env python3
"""Fixing variables without losing rank.

When rank_x1(f) = r is below its ceiling k - 1, all but r of the other
variables are redundant: fixing them at generic values leaves an
(r+1)-variate polynomial with the same rank.  The bad assignments form a
lower-dimensional set, so certified rejection sampling finds a good one
almost immediately, and when values must come from given finite sets the
restricted image is guaranteed to sit inside the full image.
"""

from polyrank import VarSet, grid_reduce, image_values, parse, rank_in, reduce

vars4 = VarSet.of("x1", "x2", "x3", "x4")
f = parse("x1*x2 + x3 + x4", vars4)
print(f"f = {f},  rank_x1 = {rank_in(f, 'x1', method='exact')}")

result = reduce(f, "x1", seed=0)
print(f"kept {result.kept_vars}, fixed {dict(result.fixed_assignment)}")
print(f"restricted to {result.restricted.vars.names}: {result.restricted}")
print(f"certified rank after restriction: {result.certified_rank} (attempt {result.attempts})")
print()

# Drawing the fixed values from finite grids keeps the restricted image
# inside the original one, at the price of a small certified search.
sets = [list(range(1, 5))] * 4
grid_result = grid_reduce(f, "x1", sets, seed=1)
print(f"grid-reduce fixed {dict(grid_result.fixed_assignment)} from {{1..4}}")

pools = dict(zip(vars4.names, sets))
restricted_sets = [pools[name] for name in grid_result.restricted.vars.names]
small = image_values(grid_result.restricted, restricted_sets)
big = image_values(f, sets)
print(f"|restricted image| = {len(small)} <= |full image| = {len(big)}; contained: {small <= big}")
print()

# A 5-variate example of rank 3: two of x1..x4 carry the structure and the
# rest can be pinned.
vars5 = VarSet.of("x1", "x2", "x3", "x4", "x5")
g = parse("x1*x5 + x2*x5^2 + (x3+x4)*x5^3", vars5)
result = reduce(g, "x5", seed=2)
print(f"g = {g}")
print(f"rank_x5 = 3: kept {result.kept_vars}, fixed {sorted(result.fixed_assignment)}")
print(f"restricted: {result.restricted}")
