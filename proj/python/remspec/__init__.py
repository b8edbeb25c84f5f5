"""Exact spectrum, reducibility order and Newton-polygon bounds of rational
first integrals of planar polynomial derivations.

Thin facade over the C++ extension module ``_remspec``.  Polynomials are
passed as strings (integers, rationals ``p/q``, ``X``, ``Y``, ``+ - * ^``,
parentheses, no implicit multiplication); every result is a plain dict or
string whose fields match the ``remspec --json`` command-line documents, and
every value is exact (rationals are rendered as ``p/q`` strings).
"""

try:
    from ._remspec import (
        darboux,
        indecomposable,
        jacobian,
        newton,
        spectrum,
        verify,
    )
except ImportError:  # extension built next to the package (test/dev builds)
    from _remspec import (
        darboux,
        indecomposable,
        jacobian,
        newton,
        spectrum,
        verify,
    )

__all__ = [
    "darboux",
    "indecomposable",
    "jacobian",
    "newton",
    "spectrum",
    "verify",
]

__version__ = "1.0.0"
