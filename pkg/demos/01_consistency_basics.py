"""Scoring how consistently each node keeps its community.

Two partitions of the same nine nodes: one splits them into a 5-group and
a 4-group, the other merges everyone. Each scoring scheme answers "did this
node stay with its community?" differently:

* binary exclusivity credits a node only when its community is the single
  best match for a reference community;
* binary inclusivity credits every node whose communities overlap at all;
* scaled inclusivity gives fractional credit equal to the product of the
  two intersection fractions, so partial matches earn partial scores.
"""

import numpy as np

from netconsist import (
    Partition,
    binary_exclusivity,
    binary_inclusivity,
    overlap_matrix,
    scaled_inclusivity,
)

split = Partition((0, 0, 0, 0, 0, 1, 1, 1, 1))
merged = Partition((0,) * 9)

print("Overlap of each split community with the single merged community:")
x = overlap_matrix(split, merged)
for p, row in enumerate(x.values):
    members = sorted(x.row_sets[p])
    print(f"  community {members}: X = {row[0]:.4f}")

print("\nPer-node scores with the merged partition as reference:")
print(f"  {'node':>4}  {'exclusive':>9}  {'inclusive':>9}  {'scaled':>7}")
excl = binary_exclusivity([split], merged).scores
incl = binary_inclusivity([split], merged).scores
scal = scaled_inclusivity([split], merged).scores
for node in range(9):
    print(f"  {node:>4}  {excl[node]:>9.0f}  {incl[node]:>9.0f}  {scal[node]:>7.4f}")

# The larger community wins the exclusive credit outright; scaled
# inclusivity splits the difference (5/9 vs 4/9).
assert np.allclose(scal, [5 / 9] * 5 + [4 / 9] * 4)

print("\nAgainst an ensemble of n partitions a node can score at most n - 1:")
n = 30
ceiling = scaled_inclusivity([split] * (n - 1), split).scores
print(f"  {n} identical partitions -> every node scores {ceiling[0]:.0f}")
