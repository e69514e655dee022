"""Generalized (n, k) Catalan numbers and their four equinumerous families.

Star diagrams, subset codes, full k-ary trees and polygon dissections, with
the bijections between them, exhaustive enumerators and a uniform sampler.
"""
from .codec import decode, encode
from .counting import binomial, catalan_nk, check_convolution, classic_catalan, gould_a
from .diagrams import (
    Diagram,
    canonical_code,
    enumerate_diagrams,
    psi,
    theta,
    theta_fibers,
    validate_diagram,
)
from .dissections import (
    Dissection,
    dissection_to_tree,
    enumerate_dissections,
    tree_to_dissection,
    validate_dissection,
)
from .errors import (
    CapExceeded,
    DomainError,
    FusscatError,
    IncompatibleGeometry,
    InternalInvariantBroken,
    MalformedDissection,
    NotPeelable,
    ParseError,
    ValidationError,
)
from .render import RenderOptions, render_svg
from .sampling import SamplerConfig, sample_diagram, uniformity_report
from .trees import FullKAryTree, diagram_to_tree, enumerate_trees, tree_to_diagram, validate_tree, word_table

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "Diagram",
    "Dissection",
    "DomainError",
    "FullKAryTree",
    "FusscatError",
    "IncompatibleGeometry",
    "InternalInvariantBroken",
    "MalformedDissection",
    "NotPeelable",
    "ParseError",
    "RenderOptions",
    "SamplerConfig",
    "ValidationError",
    "binomial",
    "canonical_code",
    "catalan_nk",
    "check_convolution",
    "classic_catalan",
    "decode",
    "diagram_to_tree",
    "dissection_to_tree",
    "encode",
    "enumerate_diagrams",
    "enumerate_dissections",
    "enumerate_trees",
    "gould_a",
    "psi",
    "render_svg",
    "sample_diagram",
    "theta",
    "theta_fibers",
    "tree_to_diagram",
    "tree_to_dissection",
    "uniformity_report",
    "validate_diagram",
    "validate_dissection",
    "validate_tree",
    "word_table",
]
