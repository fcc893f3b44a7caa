"""Exact superbridge numbers of polygonal knots, with certificates.

The superbridge number of a closed space polygon is the maximum, over
generic directions, of the number of local maxima of its projection to a
line. This package computes it exactly by enumerating the cells of the
great-circle arrangement cut by the edge normals, decides the alternating
feasibility systems whose infeasibility certifies values below the edge
count bound, and reproduces the shipped tables of superbridge intervals
for knot types. All certificate arithmetic is exact rational.
"""

from .bounds import (
    BoundInterval,
    KnotRecord,
    THREE_SUPERBRIDGE_CANDIDATES,
    interval,
    load_metadata_csv,
    lower_bound,
    render_table,
    upper_bound,
)
from .certificates import (
    CertificateBundle,
    EvenSystem,
    FindResult,
    InvalidCertificate,
    OddSystem,
    VerifiedBound,
    build_even_system,
    build_odd_systems,
    find_certificate,
    verify_bundle,
    verify_even_certificate,
    verify_odd_bundle,
)
from .corpus import (
    CorpusEntry,
    corpus_entries,
    corpus_entry,
    load_certificate,
    load_certificate_document,
    load_realization,
    save_realization,
    verify_entry,
)
from .enumeration import (
    DegenerateEdgeSet,
    RealizablePattern,
    SuperbridgeResult,
    jin_upper_bound,
    realizable_patterns,
    sampled_lower_bound,
    superbridge_number,
)
from .geometry import (
    CollinearPrefix,
    DegeneratePolygon,
    Direction,
    EdgeVectors,
    NonGenericDirection,
    PolygonalKnot,
    SignPattern,
    descent_count,
    edge_vectors,
    normalize_pose,
    quantize,
    sign_pattern,
)
from .gordan import (
    GordanMatrix,
    NullCombination,
    SeparatingDirection,
    gordan_decide,
    verify_null_combination,
    verify_separating,
)
from .linalg import SuperbridgeError
from .search import Candidate, SearchConfig, random_equilateral_polygon, search

__version__ = "0.1.0"

__all__ = [
    "BoundInterval",
    "Candidate",
    "CertificateBundle",
    "CollinearPrefix",
    "CorpusEntry",
    "DegenerateEdgeSet",
    "DegeneratePolygon",
    "Direction",
    "EdgeVectors",
    "EvenSystem",
    "FindResult",
    "GordanMatrix",
    "InvalidCertificate",
    "KnotRecord",
    "NonGenericDirection",
    "NullCombination",
    "OddSystem",
    "PolygonalKnot",
    "RealizablePattern",
    "SearchConfig",
    "SeparatingDirection",
    "SignPattern",
    "SuperbridgeError",
    "SuperbridgeResult",
    "THREE_SUPERBRIDGE_CANDIDATES",
    "VerifiedBound",
    "build_even_system",
    "build_odd_systems",
    "corpus_entries",
    "corpus_entry",
    "descent_count",
    "edge_vectors",
    "find_certificate",
    "gordan_decide",
    "interval",
    "jin_upper_bound",
    "load_certificate",
    "load_certificate_document",
    "load_metadata_csv",
    "load_realization",
    "lower_bound",
    "normalize_pose",
    "quantize",
    "random_equilateral_polygon",
    "realizable_patterns",
    "render_table",
    "sampled_lower_bound",
    "save_realization",
    "search",
    "sign_pattern",
    "superbridge_number",
    "upper_bound",
    "verify_bundle",
    "verify_entry",
    "verify_even_certificate",
    "verify_null_combination",
    "verify_odd_bundle",
    "verify_separating",
]
