"""Ribbon graphs: twisted duality, medial graphs and checkerboard colourings."""

from .core import (
    Arrow,
    ArrowPresentation,
    BoundaryComponent,
    BoundaryDecomposition,
    Circle,
    Edge,
    EdgeEnd,
    HalfEdgeSegment,
    InvalidGraphError,
    MalformedPresentationError,
    NotOrientableError,
    RibbonGraph,
    RibbonGraphError,
    TextFormatError,
    UnknownEdgeError,
    UnknownVertexError,
    Vertex,
    Violation,
    connected_components,
    euler_characteristic,
    euler_characteristic_by_component,
    flip_vertex,
    from_arrow_presentation,
    graph_to_text,
    is_orientable,
    load_graph,
    orientation_flips,
    oriented_form,
    parse_graph,
    ribbon_graph,
    save_graph,
    to_arrow_presentation,
    trace_boundary,
    validate,
)
from .isomorphism import are_isomorphic, canonical_graph, canonical_key, canonical_text
from .predicates import (
    BLUE,
    RED,
    FaceColouring,
    checkerboard_colouring,
    face_degrees,
    is_bipartite,
    is_checkerboard_colourable,
    is_eulerian,
    is_even_face,
)
from .operators import (
    TWIST_ELEMENTS,
    TwistWord,
    apply_twist_word,
    contract,
    delete,
    geometric_dual,
    minor,
    partial_dual,
    partial_petrial,
    petrial,
    twist_compose,
)
from .medial import (
    AllCrossingDirection,
    CornerEdge,
    CurveSegment,
    InternalInvariantError,
    InvalidDirectionError,
    MedialGraph,
    MedialVertex,
    SmoothedCurve,
    UnsupportedHostError,
    build_medial,
    classify_cd,
    d_edges,
    is_all_crossing,
    medial_to_dot,
    smooth,
    straight_ahead_direction,
    to_ribbon_graph,
)
from .algorithms import (
    NotEulerianError,
    PartialPetrialCertificate,
    TwistedDualCertificate,
    VertexColouring,
    checkerboard_partial_petrial,
    checkerboard_twisted_dual,
    has_alternating_boundary_orientation,
    inconsistent_edges,
    orienting_petrial_set,
    vertex_checkerboard_colouring,
)
from .workbench import (
    ConverseWitness,
    EnumerationLimitError,
    GraphUniverse,
    PROPERTIES,
    PropertyFailure,
    PropertyReport,
    UnknownPropertyError,
    enumerate_graphs,
    predicate_implication_table,
    run_all_properties,
    run_property_suite,
    sample_graphs,
    search_converse_counterexample,
)

__version__ = "0.1.0"
