"""Exception types shared across the library."""


class KmbrylError(Exception):
    pass


class NotGCM(KmbrylError, ValueError):
    """Matrix fails the generalized Cartan matrix axioms."""


class NotSymmetrizable(KmbrylError, ValueError):
    """No positive diagonal D with D*A symmetric exists."""


class NotInRootLattice(KmbrylError, ValueError):
    """Weight is not an integer combination of simple roots."""


class NotDominant(KmbrylError, ValueError):
    """lambda + rho is not strictly dominant."""


class BoxTooSmall(KmbrylError, ValueError):
    """Root table box does not dominate the requested vector."""


class SingularWeight(KmbrylError, ValueError):
    """Freudenthal denominator vanishes away from the highest weight."""


class DegreeMismatch(KmbrylError, ValueError):
    """Cocycle arguments are not of opposite principal degrees."""


class InternalInconsistency(KmbrylError, RuntimeError):
    """A recurrence or invariant was violated; indicates a bug."""
