"""Episturmian words and their Ziv-Lempel / Crochemore factorizations.

The package builds standard episturmian words from directive words by
iterated palindromic closure, factorizes arbitrary words with two scan
engines (a galloping naive reference and a longest-previous-factor engine),
and evaluates per-index closed formulas for both factorizations that are
cross-validated against the scan engines over an exhaustive spec corpus.

Submodules:
    words        basic operations on words (closure, occurrences, primitivity)
    episturmian  directive specs, the prefix/block recursion, standard prefixes
    factorize    scan-based z- and c-factorizations of arbitrary words
    lpf          suffix-array based longest-previous-factor engine
    closed_form  per-index factor formulas and the binary standard-word reading
    corpus       spec corpora and named verification properties
    cli          the command-line interface

Importing this package stays light: the compiled kernels in lpf load only
when first used.
"""

from . import closed_form, episturmian, factorize, words
from .episturmian import (
    DirectiveError,
    DirectiveSpec,
    HorizonError,
    MorphismTable,
    format_directive,
    parse_directive,
    standard_prefix,
)
from .factorize import Factorization, c_factorize, factor_counts, z_factorize

__version__ = "0.1.0"

__all__ = [
    "DirectiveError",
    "DirectiveSpec",
    "Factorization",
    "HorizonError",
    "MorphismTable",
    "__version__",
    "c_factorize",
    "closed_form",
    "episturmian",
    "factor_counts",
    "factorize",
    "format_directive",
    "parse_directive",
    "standard_prefix",
    "words",
    "z_factorize",
]
