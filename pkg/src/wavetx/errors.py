"""Exception hierarchy.

Everything raised for a bad wavelet name or a bad tensor shape derives from
:class:`WaveletError`, which the CLI maps to exit code 1.
"""


class WaveletError(ValueError):
    pass


class UnknownWavelet(WaveletError):
    def __init__(self, name, supported):
        self.name = name
        self.supported = tuple(supported)
        super().__init__(f"unknown wavelet {name!r}; supported: {', '.join(self.supported)}")


class OddFilterLength(WaveletError):
    pass


class OddLength(WaveletError):
    def __init__(self, n, axis=None):
        self.n = n
        where = "" if axis is None else f" on axis {axis}"
        super().__init__(f"length must be even, got {n}{where}")


# Grouping works on spatial axes; same failure as OddLength.
OddSpatialLength = OddLength


class LengthTooSmall(WaveletError):
    def __init__(self, n, filter_length):
        self.n = n
        self.filter_length = filter_length
        super().__init__(f"length {n} is shorter than filter length {filter_length}")


class DimensionMismatch(WaveletError):
    def __init__(self, expected, got):
        self.expected = expected
        self.got = got
        super().__init__(f"dimension mismatch: expected {expected}, got {got}")


class InvalidPermutation(WaveletError):
    pass


class WrongRank(WaveletError):
    pass


class BadChannelMultiple(WaveletError):
    pass


class TooManyLevels(WaveletError):
    def __init__(self, levels, max_valid):
        self.levels = levels
        self.max_valid = max_valid
        super().__init__(f"{levels} levels requested, at most {max_valid} valid for this shape")


class InconsistentPyramid(WaveletError):
    pass
