class InputError(ValueError):
    """Raised for malformed input: unknown vertices, bad parameters, parse errors."""
