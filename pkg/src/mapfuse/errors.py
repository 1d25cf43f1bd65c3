"""Exception types shared across the package."""


class MapfuseError(Exception):
    """Base class for all package-level errors."""


class DegenerateInputError(MapfuseError, ValueError):
    """Input is geometrically degenerate (collinear points, zero area, ...)."""


class InputError(MapfuseError, ValueError):
    """A user-supplied file or parameter is missing or invalid."""


class MapFormatError(MapfuseError, ValueError):
    """A persisted map document failed to parse; message names tier and index."""


class NoRouteError(MapfuseError):
    """No walkable path exists between the requested nodes."""

    def __init__(self, src: int, dst: int):
        super().__init__(f"no walkable route from node {src} to node {dst}")
        self.src = src
        self.dst = dst
