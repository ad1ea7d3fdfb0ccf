"""Uniform permutations three ways, and the Lehmer code glue.

Fisher-Yates spends u(2) + ... + u(n) flips on n-1 exact uniform draws.
Unranking instead draws one uniform rank below n! and converts it to a
permutation through its factorial-base digits, paying the toll once.
"""

import math

from fastdice import (BufferedWordSource, LehmerCode, Rank, exact_cost,
                      factorial_decompose, fisher_yates, inversion_count,
                      lehmer_to_permutation_selection,
                      random_permutation_unranked)

src = BufferedWordSource(41)
print("three shuffles of 1..8:")
for _ in range(3):
    print(" ", fisher_yates(src, 8))

# rank 5 of S_3 in factorial base: 5 = 2*2! + 1*1! + 0*0!
code = factorial_decompose(Rank(5, 3))
print(f"\nrank 5 among 3! -> digits {code.digits}")
perm = lehmer_to_permutation_selection(code)
print(f"selection construction -> {perm}, "
      f"inversions {inversion_count(perm)} = digit sum {sum(code.digits)}")

# digit sum = inversion count, for every code
assert all(
    inversion_count(lehmer_to_permutation_selection(LehmerCode((a, b, c, 0))))
    == a + b + c
    for a in range(4) for b in range(3) for c in range(2))

# cost comparison at n = 4: both routes average 17/3 flips (a lucky tie,
# since u(24) = 3 + u(3) happens to equal u(2) + u(3) + u(4))
runs = 100_000
for name, fn in (("fisher_yates ", fisher_yates),
                 ("unranked     ", random_permutation_unranked)):
    src = BufferedWordSource(4)
    for _ in range(runs):
        fn(src, 4)
    print(f"{name} n=4: {src.bits_consumed() / runs:.5f} flips/perm "
          f"(u(24) = {exact_cost(24):.5f})")

print(f"\nunranking caps at n=20: 20! = {math.factorial(20)} < 2**62, "
      f"21! does not fit")
