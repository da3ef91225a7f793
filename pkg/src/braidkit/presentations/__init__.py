"""Presentations of braid-like groups and monoids, graph machinery and verification."""

from .core import (
    Assignment,
    Generator,
    Model,
    Presentation,
    Relation,
    VerificationReport,
    format_word,
    parse_word,
    verify_homomorphism,
    word,
)
from .families import FAMILIES, builtin_presentation
from .models import quotient_assignments, standard_assignment

__all__ = [
    "Assignment",
    "FAMILIES",
    "Generator",
    "Model",
    "Presentation",
    "Relation",
    "VerificationReport",
    "builtin_presentation",
    "format_word",
    "parse_word",
    "quotient_assignments",
    "standard_assignment",
    "verify_homomorphism",
    "word",
]
