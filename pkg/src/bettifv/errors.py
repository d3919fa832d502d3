"""Exception types shared across the package."""


class ConstructionError(RuntimeError):
    """A constructive procedure reached a state its invariants forbid.

    Raised instead of silently patching the output; the message records
    which invariant failed.
    """
