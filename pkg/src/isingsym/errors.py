class InvalidArgumentError(ValueError):
    """Malformed input: wrong length, out-of-range site, bad model, etc."""


class ResourceCapError(RuntimeError):
    """Requested computation exceeds the dense-materialization size cap."""


class DegenerateDirectionError(RuntimeError):
    """Mean spin vanishes, so no perpendicular squeezing plane exists."""
