"""Exception types shared across the library."""


class TomolightError(Exception):
    """Base class for library errors."""


class CutoffOverflow(TomolightError):
    """Requested truncation exceeds the configured hard maximum."""


class DegenerateCat(TomolightError):
    """Cat normalization sum vanishes (components cancel)."""


class CutoffMismatch(TomolightError):
    """Two Fock vectors with different cutoffs where equal ones are required."""


class NegativeTomogram(TomolightError):
    """Tomogram value below tolerance; the input density matrix is invalid."""


class ZeroProbabilitySlice(TomolightError):
    """Conditional projection onto a quadrature slice of negligible probability."""


class NonNormalizedDensity(TomolightError):
    """Probability density does not integrate to 1 within tolerance."""


class NonPositiveDensity(TomolightError):
    """Density matrix has an eigenvalue below the negativity tolerance."""
