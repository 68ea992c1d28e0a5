"""Presented monoids versus the ideals they should describe.

The Hecke-Kiselman relations present the full ideal monoid exactly.  For
the indecomposable monoid, the relations with an explicit absorbing zero
give a slightly larger monoid: a few words that evaluate to the zero
ideal are never identified with the zero symbol.
"""

from qim import Quiver
from qim.presentation import hk_chain, ind_chain

for name, q in [
    ("A2", Quiver(2, ((1, 2),))),
    ("A3", Quiver(3, ((1, 2), (2, 3)))),
    ("D4", Quiver(4, ((1, 2), (3, 2), (4, 2)))),
]:
    hk = hk_chain(q)
    ind = ind_chain(q)
    print(f"{name}: HK orders {hk['orders']}, isomorphic: {hk['isomorphic']}")
    print(f"    indecomposable orders {ind['orders']}, isomorphic: {ind['isomorphic']}")
    print(f"    injective away from zero: {ind['injective_off_zero']}")
    print(f"    words equal to the zero ideal: {ind['zero_words']}")
