"""Ideal monoids of path algebras of oriented trees."""

from .bimodule import (
    Subbimodule,
    closure,
    decompose,
    enumerate_subbimodules,
    generator_J,
    generator_J_split,
    identity_bimodule,
    is_subbimodule,
    path_basis,
    product,
    support,
    zero_bimodule,
)
from .errors import *  # noqa: F401,F403
from .monoid import (
    FiniteMonoid,
    b_omega,
    check_relations,
    generate_closure,
    ideal_monoid,
    indecomposable_monoid,
    maximal_elements,
    minimal_generating_check,
    star,
)
from .quiver import Quiver, Subgraph, load_quiver, parse_quiver, validate
from .specialfunc import (
    bimodule_of_function,
    catalan_numbers,
    classify,
    count_typeA,
    enumerate_special,
    function_of_bimodule,
)

__version__ = "0.1.0"
