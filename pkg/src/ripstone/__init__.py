"""ripstone: Vietoris-Rips complexes of regular polytope skeleta, verified.

Builds the distance-threshold clique complexes of the five platonic solid
edge graphs, computes their integer homology through sparse Smith normal
form, certifies discrete Morse matchings, and traces the dodecahedron's
ten distance-3 tetrahedra down to explicit homology classes.
"""

from .cubeseries import (
    IntSeries,
    expand,
    face_count,
    series_coefficient,
    skeleton_betti_top,
    verify_cube_vr2,
)
from .errors import (
    FormatError,
    ParameterError,
    PreconditionError,
    RipstoneError,
    SearchFailure,
    StructuralError,
    VerificationError,
)
from .formats import (
    parse_chain,
    parse_complex,
    parse_matching,
    parse_pattern,
    parse_simplex_list,
    serialize_chain,
    serialize_complex,
    serialize_matching,
    serialize_pattern,
    serialize_simplex_list,
)
from .homology import (
    Chain,
    HomologyResult,
    IntMatrix,
    SNFResult,
    boundary_matrix,
    cycle_class,
    euler_characteristic,
    homology,
    make_chain,
    simplex_boundary,
    smith_normal_form,
)
from .morse import (
    FlowChain,
    Matching,
    MatchingReport,
    check_matching,
    critical_complex_homology,
    fan_matching,
    fan_triangulation,
    find_matching,
    flip_matching_update,
    matching_from_pairs,
    morse_flow,
)
from .patterns import (
    EdgeOrientation,
    Embedding,
    PatternGraph,
    diameter3_tetrahedra,
    embeddings,
    fixed_orientation,
    is_induced_embedding,
    pattern_graph,
    pattern_matching,
    simplices_of_type,
)
from .pipelines import symmetry_report, trace_dodecahedron, verify_main_theorem
from .polytopes import (
    SOLIDS,
    DistanceMatrix,
    DistanceTable,
    PolytopeGraph,
    build_solid,
    combinatorial_metric,
    cube_graph,
    distance_table,
    solid_info,
)
from .reports import Report, ReportRow, row
from .simplicial import (
    Complex,
    antipodal_free_complex,
    boundary_complex,
    delete_open_cells,
    face_diameter,
    from_faces,
    full_simplex_complex,
    maximal_simplices,
    same_faces,
    simplex,
    skeleton,
    vr_complex,
)
from .symmetry import (
    CharacterData,
    PermGroup,
    automorphisms,
    conjugacy_classes,
    group_elements,
    rotation_subgroup,
    tetrahedra_orbits,
    verify_remark,
)

__version__ = "0.1.0"

__all__ = [
    "Chain",
    "CharacterData",
    "Complex",
    "DistanceMatrix",
    "DistanceTable",
    "EdgeOrientation",
    "Embedding",
    "FlowChain",
    "FormatError",
    "HomologyResult",
    "IntMatrix",
    "IntSeries",
    "Matching",
    "MatchingReport",
    "ParameterError",
    "PatternGraph",
    "PermGroup",
    "PolytopeGraph",
    "PreconditionError",
    "Report",
    "ReportRow",
    "RipstoneError",
    "SNFResult",
    "SOLIDS",
    "SearchFailure",
    "StructuralError",
    "VerificationError",
    "antipodal_free_complex",
    "automorphisms",
    "boundary_complex",
    "boundary_matrix",
    "build_solid",
    "check_matching",
    "combinatorial_metric",
    "conjugacy_classes",
    "critical_complex_homology",
    "cube_graph",
    "cycle_class",
    "delete_open_cells",
    "diameter3_tetrahedra",
    "distance_table",
    "embeddings",
    "euler_characteristic",
    "expand",
    "face_count",
    "face_diameter",
    "fan_matching",
    "fan_triangulation",
    "find_matching",
    "fixed_orientation",
    "flip_matching_update",
    "from_faces",
    "full_simplex_complex",
    "group_elements",
    "homology",
    "is_induced_embedding",
    "make_chain",
    "matching_from_pairs",
    "maximal_simplices",
    "morse_flow",
    "parse_chain",
    "parse_complex",
    "parse_matching",
    "parse_pattern",
    "parse_simplex_list",
    "pattern_graph",
    "pattern_matching",
    "row",
    "rotation_subgroup",
    "same_faces",
    "serialize_chain",
    "serialize_complex",
    "serialize_matching",
    "serialize_pattern",
    "serialize_simplex_list",
    "series_coefficient",
    "simplex",
    "simplex_boundary",
    "simplices_of_type",
    "skeleton",
    "skeleton_betti_top",
    "smith_normal_form",
    "solid_info",
    "symmetry_report",
    "tetrahedra_orbits",
    "trace_dodecahedron",
    "verify_cube_vr2",
    "verify_main_theorem",
    "verify_remark",
    "vr_complex",
]
