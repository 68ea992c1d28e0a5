"""Catalan numbers in type A.

For a uniformly oriented path the ideal monoid is the Catalan monoid, and
for any orientation the number of special functions on an interval
between sinks/sources is given by a closed formula.
"""

from qim import Quiver, count_typeA, ideal_monoid
from qim.specialfunc import catalan, catalan_check

for n in range(2, 7):
    q = Quiver(n, tuple((i, i + 1) for i in range(1, n)))
    print(f"n={n}: |I| = {len(ideal_monoid(q))}, cat(n+1) = {catalan(n + 1)}")

# A zig-zag orientation: 1 -> 2 <- 3 <- 4 -> 5 <- 6
zigzag = Quiver(6, ((1, 2), (3, 2), (4, 3), (4, 5), (6, 5)))
print("\n i  j  case  formula  census")
for row in catalan_check(zigzag):
    print(f"{row['i']:>2} {row['j']:>2}  {row['case']:>4}  {row['formula']:>7}  {row['brute_force']:>6}")
print("interval 2..5 has", count_typeA(zigzag, 2, 4), "special functions")
