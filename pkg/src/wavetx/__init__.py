"""Fast discrete wavelet transforms as decimated circulant matrix operators."""
from .errors import (
    BadChannelMultiple,
    DimensionMismatch,
    InconsistentPyramid,
    InvalidPermutation,
    LengthTooSmall,
    OddFilterLength,
    OddLength,
    TooManyLevels,
    UnknownWavelet,
    WaveletError,
    WrongRank,
)
from .filterbank import FilterBankPair, bank_cache, build_analysis, build_synthesis, oracle_dwt1d
from .multilevel import Pyramid, iwpt, load_pyramid, multilevel_dwt, multilevel_idwt, save_pyramid, wpt
from .transform import (
    GroupedSubbands,
    dwt,
    dwt1d,
    dwt2d,
    dwt3d,
    idwt,
    idwt1d,
    idwt2d,
    idwt3d,
)
from .wavelet_db import WaveletSpec, derive_qmf_highpass, lookup, names, validate

__version__ = "0.1.0"
