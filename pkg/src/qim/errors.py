"""Exception hierarchy shared by all qim modules."""


class QimError(Exception):
    pass


# quiver input
class QuiverSyntaxError(QimError, ValueError):
    pass


class NotATree(QimError, ValueError):
    pass


class BadVertexIndex(QimError, IndexError):
    pass


class NotAdmissible(QimError, ValueError):
    pass


class NotTypeA(QimError, ValueError):
    pass


# bimodules
class InvalidPathPair(QimError, ValueError):
    pass


class QuiverMismatch(QimError, ValueError):
    pass


class NotSplitVertex(QimError, ValueError):
    pass


class BadComponentIndex(QimError, IndexError):
    pass


class NotIndecomposable(QimError, ValueError):
    pass


# special functions
class BadValue(QimError, ValueError):
    pass


class NotSpecial(QimError, ValueError):
    pass


class NoUniqueGenerator(QimError, RuntimeError):
    """A column of an indecomposable ideal is not generated by one vertex.

    Never raised for admissible trees; seeing it means an input
    hypothesis was violated upstream.
    """


class DomainError(QimError, ValueError):
    pass


class CaseNotCovered(QimError, RuntimeError):
    pass


class NotSpecialSubtree(QimError, ValueError):
    pass


# budgets and monoids
class BudgetExceeded(QimError, RuntimeError):
    """A closure or enumeration hit its size/step budget.

    For presented monoids this is inconclusive: it says nothing about
    whether the monoid is infinite.
    """


class EnumerationBudgetExceeded(BudgetExceeded):
    pass


class GeneratorMismatch(QimError, ValueError):
    pass
