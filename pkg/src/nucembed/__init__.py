"""nucembed: decide and numerically verify compactness/nuclearity of
embeddings between weighted smoothness spaces.

The exact layer (exponents, classifier) answers yes/no questions over Q;
the numeric layer (weights, seqmodel, nucdiag, bounds) independently checks
the quantities those answers rest on.
"""

from nucembed.exponents import ExtRat, SpaceParams, delta, p_star, sigma, tong_exponent

__version__ = "0.1.0"

__all__ = [
    "ExtRat",
    "SpaceParams",
    "delta",
    "p_star",
    "sigma",
    "tong_exponent",
    "__version__",
]
