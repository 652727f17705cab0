"""Exact engine for great-circle / projective line arrangements: zone
complexities, discharging, and the tight 10-line example."""

from .arrangement import (
    ProjectiveArrangement,
    SphereArrangement,
    build_sphere,
    face_sizes,
    locate_face,
    quotient_projective,
)
from .discharge import (
    ChargeState,
    classify_negative,
    discharge_faces,
    discharge_vertices,
    enumerate_lemma_multisets,
    initial_charges,
    run_discharging,
    v_minus,
)
from .documents import (
    ArrangementDocument,
    document_from_line_set,
    parse_document,
    serialize_document,
)
from .errors import (
    DegenerateInputError,
    DocumentError,
    GenerationError,
    HeadlineFindingError,
    IdenticalLinesError,
    InternalConsistencyError,
    OnBoundaryError,
)
from .generate import icosahedral_example, random_arrangement
from .geometry import (
    GreatCircleLine,
    HomogeneousPoint,
    LineSet,
    check_general_position,
    intersect,
    orient,
)
from .scalars import ExactScalar, scalar_sign
from .search import question1_stats, search_max_CL
from .zones import (
    ZoneReport,
    line_zone_complexity,
    min_on_line,
    min_vertex_complexity,
    verify_identities,
    vertex_zone,
    vertex_zone_complexity,
    zone_report,
)

__version__ = "0.1.0"

__all__ = [
    "ArrangementDocument",
    "ChargeState",
    "DegenerateInputError",
    "DocumentError",
    "ExactScalar",
    "GenerationError",
    "GreatCircleLine",
    "HeadlineFindingError",
    "HomogeneousPoint",
    "IdenticalLinesError",
    "InternalConsistencyError",
    "LineSet",
    "OnBoundaryError",
    "ProjectiveArrangement",
    "SphereArrangement",
    "ZoneReport",
    "build_sphere",
    "check_general_position",
    "classify_negative",
    "discharge_faces",
    "discharge_vertices",
    "document_from_line_set",
    "enumerate_lemma_multisets",
    "face_sizes",
    "icosahedral_example",
    "initial_charges",
    "intersect",
    "line_zone_complexity",
    "locate_face",
    "min_on_line",
    "min_vertex_complexity",
    "orient",
    "parse_document",
    "question1_stats",
    "quotient_projective",
    "random_arrangement",
    "run_discharging",
    "scalar_sign",
    "search_max_CL",
    "serialize_document",
    "v_minus",
    "verify_identities",
    "vertex_zone",
    "vertex_zone_complexity",
    "zone_report",
]
