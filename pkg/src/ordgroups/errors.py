"""Exception hierarchy.

Input problems derive from :class:`InputError`; exhausted search or
iteration budgets derive from :class:`ResourceBoundExceeded`.  The CLI maps
the two families onto exit statuses 2 and 3.
"""


class OrderError(Exception):
    pass


class InputError(OrderError, ValueError):
    pass


class ResourceBoundExceeded(OrderError, RuntimeError):
    pass


# braids
class MalformedWord(InputError):
    pass


class IndexOutOfBand(InputError):
    pass


class StrandMismatch(InputError):
    pass


class BadStrandCount(InputError):
    pass


class StepCapExceeded(ResourceBoundExceeded):
    pass


# free groups
class CapTooSmall(InputError):
    pass


class IdentityWord(InputError):
    pass


class DegreeCeilingExceeded(ResourceBoundExceeded):
    pass


# Z^n, Klein, germs
class DimensionMismatch(InputError):
    pass


class InfeasibleConstraints(InputError):
    pass


class ZeroConstraint(InputError):
    pass


class IsolatedOrder(InputError):
    """Raised when asked to perturb an order of Z (rank one has exactly two orders)."""


# PL maps
class NotMonotone(InputError):
    pass


class BadEndpoints(InputError):
    pass


class OutOfDomain(InputError):
    pass


class ProbeCapExceeded(ResourceBoundExceeded):
    pass


# presentations
class MalformedPresentation(InputError):
    pass


class InconsistentSeed(InputError):
    pass


class MalformedCertificate(InputError):
    pass
