"""Exception types shared across the package."""


class ResourceLimitError(RuntimeError):
    """A computation would exceed a configured size or cost cap."""


class NonRealProbabilityError(ArithmeticError):
    """A probability came out complex, or outside its admissible range,
    beyond the numerical tolerance.  Indicates a kernel bug or invalid
    input, never silently clamped."""


class ZeroSignalError(ValueError):
    """The quantum-classical gap is zero at the requested interference
    order, so no finite sample budget can resolve it."""
