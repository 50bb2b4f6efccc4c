"""Exact majorization, catalysis and conversion-probability routines.

Vectors may be given as a comma-separated string ("0.4,0.4,0.1,0.1",
"1/3,2/3") or as a sequence whose items format as exact numbers (ints,
Fractions, decimal strings). Exact results are returned as Fractions.
"""

from ._entcat import (
    EntcatError,
    collective_useless,
    combined_pmax,
    incomparable,
    is_catalyst,
    is_lambda_catalyst,
    l_set,
    lemma3_filter,
    majorizes,
    min_catalyst_copies,
    mlocc_attains,
    mlocc_threshold,
    multicopy_filter,
    normalize,
    search_catalysts,
    tensor,
    tensor_power,
    theorem2_bounds,
    trade_off,
    vidal_pmax,
)

__all__ = [
    "EntcatError",
    "collective_useless",
    "combined_pmax",
    "incomparable",
    "is_catalyst",
    "is_lambda_catalyst",
    "l_set",
    "lemma3_filter",
    "majorizes",
    "min_catalyst_copies",
    "mlocc_attains",
    "mlocc_threshold",
    "multicopy_filter",
    "normalize",
    "search_catalysts",
    "tensor",
    "tensor_power",
    "theorem2_bounds",
    "trade_off",
    "vidal_pmax",
]
