"""Exception types shared across the package."""


class ConfigError(ValueError):
    """Malformed field/manifold/estimator configuration."""


class DomainError(ValueError):
    """Chart point outside the manifold's chart domain."""


class DegenerateFieldError(RuntimeError):
    """Field failed the nondegeneracy scan (eta too small somewhere)."""

    def __init__(self, message, min_eta, threshold):
        super().__init__(message)
        self.min_eta = min_eta
        self.threshold = threshold


class TransversalityError(DegenerateFieldError):
    """Zero set fails the transversality checks at a box face or corner."""

    def __init__(self, message, face, min_eta, threshold):
        super().__init__(message, min_eta, threshold)
        self.face = face


class NumericalError(RuntimeError):
    """Non-finite integrand value at a quadrature node."""

    def __init__(self, message, node_index=None, node=None):
        super().__init__(message)
        self.node_index = node_index
        self.node = node


class ResolutionError(RuntimeError):
    """An oracle failed to stabilize within its refinement budget."""
