"""Exception types shared across the package."""


class CurlicueError(Exception):
    """Base class for every error raised by this package."""


class PrecisionExceeded(CurlicueError):
    """Ratio too large for float64 to carry a meaningful fractional residual."""


class UnderSampled(CurlicueError):
    """Pixel grid too coarse to resolve the main interference lobes."""

    def __init__(self, required: int, given: int):
        super().__init__(
            f"pixel_count={given} undersamples the interferogram; need at "
            f"least {required} pixels (or pass allow_undersampled=True)"
        )
        self.required = required
        self.given = given


class IndexOutOfRange(CurlicueError):
    """Arm index outside 1..M."""


class EmptyWindow(CurlicueError):
    """No integer ratio q = x/lambda is reachable inside the spectral window."""


class DegenerateBandwidth(CurlicueError):
    """Spectral window too narrow to build a multi-run schedule."""


class InsufficientBandwidth(CurlicueError):
    """Bandwidth ratio cannot cover the requested range of targets."""

    def __init__(self, gamma: float, min_beta: float):
        super().__init__(
            f"per-run shrink ratio gamma={gamma:.6g} <= 1; covering the range "
            f"needs a bandwidth ratio beta > {min_beta:.6g}"
        )
        self.gamma = gamma
        self.min_beta = min_beta


class OutOfRange(CurlicueError):
    """Integer argument outside the supported range."""


class FileFormatError(CurlicueError):
    """Interferogram file does not conform to the v1 format."""
