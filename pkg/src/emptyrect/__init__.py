"""Empty-rectangle graphs, graph-dimension realizers and Scarf complexes."""

from .boxgraph import box_graph, box_stats, BoxGraphStats, eight_partite_pointset
from .geom import (
    Box,
    DuplicateCoordinate,
    empty_quadrant_count,
    interior_empty,
    NonGenericInput,
    normalize_ranks,
    normalize_ranks3,
    PointSet2,
    PointSet3,
    Quadrant,
    random_pointset,
    random_pointset3,
    Rect,
    spanned_rect,
)
from .graph import Graph
from .realizer import (
    clique_obstruction_17,
    eight_partite_realizer,
    graph_from_realizer,
    k16_pointset,
    monotone_subsequence,
    pointset_to_box_realizer,
    pointset_to_double_arrow,
    Realizer,
    single_arrow_graph,
    verify_realizer,
)
from .rectgraph import (
    decompose_conjugate,
    expected_edges_exact,
    exposed_count,
    extremal_pointset,
    max_edges_bound,
    monte_carlo_edges,
    rectangle_graph,
    span_count,
    SpanReport,
    streifen_violations,
    verify_w_span,
)
from .scarf import (
    euler_poincare_check,
    GeneratorSet,
    join,
    lift_to_4d,
    on_surface,
    scarf_complex,
    scarf_complex_3d,
    ScarfComplex,
    verify_face_numbers,
)

__version__ = "0.1.0"
