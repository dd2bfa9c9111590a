"""Exception types shared across the package."""


class GraphError(ValueError):
    """Invalid Coxeter graph data (bad labels, duplicate edges, missing c-parameters)."""


class NotLorentzianError(RuntimeError):
    """An operation requiring signature (n-1, 1, 0) was called on another system."""


class BorderlineSpectrumError(RuntimeError):
    """Spectral data too close to a type boundary to classify reliably."""


class ClassificationError(RuntimeError):
    """Element could not be resolved into elliptic/parabolic/hyperbolic."""


class ExtractionError(RuntimeError):
    """Eigendirection or subspace extraction failed at tolerance."""


class EnumerationError(RuntimeError):
    """Group enumeration aborted (fingerprint collision or entry overflow)."""
