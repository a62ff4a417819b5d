"""Uniquely decodable k-ary multi-user codes for the multiple-access adder channel."""
from .analysis import (ExactRate, RateSummary, UdReport, check_ud, check_ud_differences,
                       min_delta, predicted_arbitrary, predicted_pow2, rate_table, total_rate)
from .channel import TransitionMatrix, apply_dmc, transmit
from .codebook import (Alphabet, ConstituentCode, KVector, MultiUserCode, distance,
                       sum_tuple, weight)
from .construction import (BinaryProfile, DifferencePair, InitialTrace, OmegaTrace,
                           binary_profile, build_arbitrary, build_pow2, initial_code,
                           omega_combine, shift_to_signed, split_signed)
from .decoder import LookupTable, build_lookup, decode_lookup, decode_recursive
from .errors import (CapacityError, DecodingError, MembershipError,
                     NotUniquelyDecodableError, UnsupportedArityError)
from .kernels import IMPLEMENTATION as KERNEL_IMPLEMENTATION

__version__ = "0.1.0"
