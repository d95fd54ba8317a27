"""Exception types shared across the package."""


class ResourceCapExceeded(ValueError):
    """A sweep, enumeration or exhaustive search was asked to exceed its cap."""


class PartsError(ValueError):
    """A diagram component cannot be turned into a part (non-Young or mixed rank)."""
