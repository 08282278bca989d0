"""Exact conjugacy growth of the soluble Baumslag-Solitar groups BS(1,k)."""

try:
    # installed wheel: the extension lives inside the package
    from ._bsgrowth import (
        BS,
        CacheError,
        Element,
        ResourceError,
        abelian_series_coefficients,
        abelian_series_string,
        dsv_series_coefficients,
        full_conjugacy_series,
        grammar_check,
        grammar_text,
        growth_rates,
    )
except ImportError:  # in-tree build: the extension sits on sys.path
    from _bsgrowth import (
        BS,
        CacheError,
        Element,
        ResourceError,
        abelian_series_coefficients,
        abelian_series_string,
        dsv_series_coefficients,
        full_conjugacy_series,
        grammar_check,
        grammar_text,
        growth_rates,
    )

__all__ = [
    "BS",
    "CacheError",
    "Element",
    "ResourceError",
    "abelian_series_coefficients",
    "abelian_series_string",
    "dsv_series_coefficients",
    "full_conjugacy_series",
    "grammar_check",
    "grammar_text",
    "growth_rates",
]
