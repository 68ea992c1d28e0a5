"""Special functions and indecomposable ideals of a D4 quiver.

Run with ``python3 demos/01_d4_census.py``.
"""

from qim import Quiver, bimodule_of_function, decompose, enumerate_subbimodules, function_of_bimodule
from qim.specialfunc import special_by_support

# Three arrows pointing into the centre: 1 -> 2 <- 3, 4 -> 2.
q = Quiver(4, ((1, 2), (3, 2), (4, 2)))
print(q, "sinks/sources:", sorted(q.K), "split vertices:", sorted(q.Kprime))

# Special functions, grouped by the vertex set of their support.
groups = special_by_support(q)
for supp, funcs in groups.items():
    print(f"support {list(supp) or '{}'}: {funcs}")
print("total:", sum(map(len, groups.values())))

# Every ideal, split into its indecomposable summands.
ideals = enumerate_subbimodules(q)
indecomposable = [b for b in ideals if len(decompose(b)) == 1]
print(f"{len(ideals)} ideals, {len(indecomposable)} of them indecomposable")

# Each indecomposable ideal is labelled by a special function and back.
for b in indecomposable[:5]:
    alpha = function_of_bimodule(b)
    assert bimodule_of_function(q, alpha) == b
    print(alpha, "<->", b)
