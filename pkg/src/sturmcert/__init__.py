"""Exact Sturm root counting and positivity certificates for algebraic and cosine polynomials."""

from .exact import Enclosure, cos_enclosure, pi_enclosure, rational_from_decimal
from .poly import UniPoly, content_primitive, derivative, divrem, evaluate, normalize_leading
from .sturm import (
    EndpointRootError,
    Interval,
    RootCount,
    SturmChain,
    Verdict,
    build_chain,
    certify_positive,
    count_roots,
    isolate_roots,
    sign_variations,
)
from .trig import TrigPoly, chebyshev_T, chebyshev_U, cos_to_alg, scale_argument, sin_to_alg

__version__ = "0.1.0"
