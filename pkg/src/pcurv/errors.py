"""Exception types shared across the package."""


class PcurvError(Exception):
    """Base class for all pcurv-specific failures."""


class DegenerateJet(PcurvError):
    """det g fell at or below the immersion threshold at some sample point."""

    def __init__(self, message: str, node=None):
        super().__init__(message)
        self.node = node


class StencilOutOfDomain(PcurvError):
    """A finite-difference stencil reached past the available nodes."""


class MatchingFailed(PcurvError):
    """The neck-family tangency equation could not be bracketed."""


class PerturbationDegenerate(PcurvError):
    """Perturbation left no valid immersion after the retry budget."""


class NotClosed(PcurvError):
    """Operation requires a closed surface."""


class ShapeMismatch(PcurvError):
    """A nodal field does not match the surface's grid layout."""


class DegenerateStep(PcurvError):
    """Line search hit the minimum step without finding a valid iterate."""
