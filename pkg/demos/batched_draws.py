"""Amortize the toll by drawing many values per master draw.

One uniform draw on n**j splits into j independent draws on n.  The toll
(at most 2 flips) is paid once per master draw, so per value it shrinks
like 2/j and the cost approaches the entropy floor log2(n).
"""

import math

from fastdice import (BufferedWordSource, auto_batch_size, batch_cost,
                      batch_uniform, plan_batch)

n = 3
print(f"per-value cost of drawing from [0, {n}), floor log2(3) = "
      f"{math.log2(n):.6f}\n")
print("  j   theory      measured")
for j in (1, 2, 6, 12, 39):
    plan = plan_batch(n, j)
    src = BufferedWordSource(j)
    variates = 120_000 - 120_000 % j
    for _ in range(variates // j):
        batch_uniform(src, plan)
    measured = src.bits_consumed() / variates
    print(f" {j:3d}  {batch_cost(n, j):.6f}   {measured:.6f}")

print(f"\nlargest usable batch for n={n}: j = {auto_batch_size(n)} "
      f"(3**39 still fits below 2**62)")

plan = plan_batch(3, 6)
src = BufferedWordSource(0)
print(f"one batch of six: {batch_uniform(src, plan)} "
      f"({src.bits_consumed()} flips)")
