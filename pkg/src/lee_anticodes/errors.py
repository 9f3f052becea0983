"""Exception types shared across the package."""


class CapExceeded(RuntimeError):
    """An enumeration would exceed its configured cap."""


class InternalCheckError(RuntimeError):
    """A cross-check that must hold by theorem failed; signals a library bug."""


def guard_cap(size: int, cap: int, what: str) -> None:
    """Raise CapExceeded when `size` items of `what` would exceed `cap`."""
    if size > cap:
        raise CapExceeded(f"{what}: {size} exceeds cap {cap}")
