"""Exception hierarchy shared by the whole package."""


class RibbonError(ValueError):
    """Base class for every error raised by ribbontutte."""


class MalformedMapError(RibbonError):
    """The half-edge data does not describe a valid orientable map."""


class UnknownEdgeError(RibbonError, KeyError):
    pass


class PartitionError(RibbonError):
    """A partition does not cover its universe or carries a bad weight."""


class UnknownBoundaryError(PartitionError):
    pass


class NotASubgraphError(RibbonError):
    pass


class UnmappedVariableError(RibbonError, KeyError):
    pass


class GroupError(RibbonError):
    """Invalid finite-group description (table or representation data)."""


class BudgetExceededError(RibbonError):
    """A brute-force enumeration would exceed its assignment budget."""


class GraphFileError(RibbonError):
    pass
