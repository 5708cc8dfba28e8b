"""Equidistant linear codes, product-action groups and 2-arc-transitive
coset graphs, with machine-checkable certificates."""

from .construct import (
    bipartite_construction,
    product_action_construction,
    valency64_construction,
)
from .eqcode import equidistant_code_pipeline, find_faithful_irreducible_code
from .graphcert import (
    certify,
    certificate_payload,
    enumerate_small_graph,
    standard_double_cover,
    verify_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "bipartite_construction",
    "certify",
    "certificate_payload",
    "enumerate_small_graph",
    "equidistant_code_pipeline",
    "find_faithful_irreducible_code",
    "product_action_construction",
    "standard_double_cover",
    "valency64_construction",
    "verify_certificate",
]
